#include "qsb/holo_series.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace qsb {

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.w << ',' << q.x << ',' << q.y << ',' << q.z << ')';
}

double HoloSeries::coeff_scale() const {
    double s = 0.0;
    for (const auto& c : coeffs) s = std::max(s, c.norm());
    return s;
}

namespace {

// c = a + b i + rest, rest orthogonal to span{1, i}.
struct SliceCoeff {
    double a;
    double b;
    double rest;
};

SliceCoeff resolve(const Quaternion& c, const Frame& fr) {
    const auto comp = fr.components(c);
    return {comp[0], comp[1], std::sqrt(comp[2] * comp[2] + comp[3] * comp[3])};
}

void require_slice_valued(const HoloSeries& f, const char* op) {
    if (!f.is_slice_valued())
        throw NotSliceValuedError(std::string(op) + ": series has components outside span{1, i}");
}

}  // namespace

bool HoloSeries::is_slice_valued(double rel_tol) const {
    const double tol = rel_tol * std::max(coeff_scale(), 1e-300);
    for (const auto& c : coeffs)
        if (resolve(c, frame).rest > tol) return false;
    return true;
}

Quaternion HoloSeries::eval(double px, double py) const {
    if (px * px + py * py >= radius * radius)
        throw OutOfDomainError("holomorphic series evaluated outside its disk");
    if (coeffs.empty()) return Quaternion{};
    const Quaternion zq = Quaternion(px) + py * frame.i.value();
    Quaternion acc = coeffs.back();
    for (int n = static_cast<int>(coeffs.size()) - 2; n >= 0; --n) acc = zq * acc + coeffs[n];
    return acc;
}

Quaternion HoloSeries::eval(const SlicePoint& z) const {
    const double align = dot4(z.axis.value(), frame.i.value());
    if (std::abs(std::abs(align) - 1.0) > 1e-10)
        throw OutOfDomainError("slice point does not lie on the series' slice plane");
    return eval(z.x, align >= 0.0 ? z.y : -z.y);
}

HoloSeries conj_reflect(const HoloSeries& f) {
    require_slice_valued(f, "conj_reflect");
    HoloSeries out = f;
    for (auto& c : out.coeffs) c = quat_conj(c);
    return out;
}

std::pair<HoloSeries, HoloSeries> c_pair_decompose(const HoloSeries& f) {
    require_slice_valued(f, "c_pair_decompose");
    HoloSeries f1 = f, f2 = f;
    for (std::size_t n = 0; n < f.coeffs.size(); ++n) {
        const auto sc = resolve(f.coeffs[n], f.frame);
        f1.coeffs[n] = Quaternion(sc.a);
        f2.coeffs[n] = Quaternion(sc.b);
    }
    return {std::move(f1), std::move(f2)};
}

std::pair<HoloSeries, HoloSeries> c_anti_decompose(const HoloSeries& f) {
    require_slice_valued(f, "c_anti_decompose");
    HoloSeries fc = f, fa = f;
    for (std::size_t n = 0; n < f.coeffs.size(); ++n) {
        const auto sc = resolve(f.coeffs[n], f.frame);
        fc.coeffs[n] = Quaternion(sc.a);
        fa.coeffs[n] = sc.b * f.frame.i.value();
    }
    return {std::move(fc), std::move(fa)};
}

Classification classify(const HoloSeries& f, double rel_tol) {
    require_slice_valued(f, "classify");
    const double tol = rel_tol * std::max(f.coeff_scale(), 1e-300);
    bool all_real = true, all_imag = true;
    for (const auto& c : f.coeffs) {
        const auto sc = resolve(c, f.frame);
        if (std::abs(sc.b) > tol) all_real = false;
        if (std::abs(sc.a) > tol) all_imag = false;
    }
    if (all_real) return Classification::C;
    if (all_imag) return Classification::AntiC;
    return Classification::Neither;
}

HoloSeries i_times(const HoloSeries& f) {
    HoloSeries out = f;
    for (auto& c : out.coeffs) c = f.frame.i.value() * c;
    return out;
}

}  // namespace qsb
