#include "qsb/slice_series.hpp"

#include <algorithm>
#include <cmath>

namespace qsb {

double SliceSeries::coeff_scale() const {
    double s = 0.0;
    for (const auto& c : coeffs) s = std::max(s, c.norm());
    return s;
}

Quaternion SliceSeries::eval(const Quaternion& q) const {
    if (q.norm() >= radius) throw OutOfDomainError("slice series evaluated outside its ball");
    if (coeffs.empty()) return Quaternion{};
    Quaternion acc = coeffs.back();
    for (int n = static_cast<int>(coeffs.size()) - 2; n >= 0; --n) acc = q * acc + coeffs[n];
    return acc;
}

SliceSeries operator+(const SliceSeries& a, const SliceSeries& b) {
    SliceSeries out;
    out.radius = std::min(a.radius, b.radius);
    out.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t n = 0; n < out.coeffs.size(); ++n) {
        if (n < a.coeffs.size()) out.coeffs[n] += a.coeffs[n];
        if (n < b.coeffs.size()) out.coeffs[n] += b.coeffs[n];
    }
    return out;
}

Quaternion extend_P(const HoloSeries& f, const Quaternion& at) {
    if (at.norm() >= f.radius) throw OutOfDomainError("extension evaluated outside the ball");
    if (at.vec_norm() == 0.0) return f.eval(at.w, 0.0);
    const SlicePoint sp = slice_coords(at);
    const Quaternion i = f.frame.i.value();
    const Quaternion I = sp.axis.value();
    const Quaternion lower = f.eval(sp.x, -sp.y);
    const Quaternion upper = f.eval(sp.x, sp.y);
    return 0.5 * ((kOne + I * i) * lower + (kOne - I * i) * upper);
}

HoloSeries restrict_Q(const SliceSeries& F, const Frame& frame) {
    return HoloSeries{frame, F.coeffs, F.radius};
}

SliceSeries slice_from_holo(const HoloSeries& f) { return SliceSeries{f.coeffs, f.radius}; }

std::pair<HoloSeries, HoloSeries> split_basis(const SliceSeries& F, const Frame& frame) {
    HoloSeries f1{frame, {}, F.radius}, f2{frame, {}, F.radius};
    f1.coeffs.reserve(F.coeffs.size());
    f2.coeffs.reserve(F.coeffs.size());
    for (const auto& a : F.coeffs) {
        const auto c = frame.components(a);
        f1.coeffs.push_back(Quaternion(c[0]) + c[1] * frame.i.value());
        f2.coeffs.push_back(Quaternion(c[2]) + c[3] * frame.i.value());
    }
    return {std::move(f1), std::move(f2)};
}

std::array<HoloSeries, 4> refined_split(const SliceSeries& F, const Frame& frame) {
    std::array<HoloSeries, 4> h{HoloSeries{frame, {}, F.radius}, HoloSeries{frame, {}, F.radius},
                                HoloSeries{frame, {}, F.radius}, HoloSeries{frame, {}, F.radius}};
    for (const auto& a : F.coeffs) {
        const auto c = frame.components(a);
        for (int l = 0; l < 4; ++l) h[l].coeffs.push_back(Quaternion(c[l]));
    }
    return h;
}

std::array<SliceSeries, 4> fourfold_decompose(const SliceSeries& F, const Frame& frame) {
    std::array<SliceSeries, 4> out{SliceSeries{{}, F.radius}, SliceSeries{{}, F.radius},
                                   SliceSeries{{}, F.radius}, SliceSeries{{}, F.radius}};
    for (const auto& a : F.coeffs) {
        const auto c = frame.components(a);
        for (int l = 0; l < 4; ++l) out[l].coeffs.push_back(Quaternion(c[l]));
    }
    return out;
}

AlphaBeta alpha_beta_of(const SliceSeries& F) {
    const double radius = F.radius;
    auto on_slice = [F](double x, double y) {
        if (x * x + y * y >= F.radius * F.radius)
            throw OutOfDomainError("alpha/beta evaluated outside the disk");
        if (F.coeffs.empty()) return Quaternion{};
        const Quaternion zq{x, y, 0.0, 0.0};
        Quaternion acc = F.coeffs.back();
        for (int n = static_cast<int>(F.coeffs.size()) - 2; n >= 0; --n) acc = zq * acc + F.coeffs[n];
        return acc;
    };
    auto alpha = [on_slice](double x, double y) {
        return 0.5 * (on_slice(x, y) + on_slice(x, -y));
    };
    auto beta = [on_slice](double x, double y) {
        if (y == 0.0) return Quaternion{};  // forced by odd parity
        return -0.5 * (kE1 * (on_slice(x, y) - on_slice(x, -y)));
    };
    return AlphaBeta{std::move(alpha), std::move(beta), radius};
}

std::pair<Quaternion, Quaternion> cr_residual(const AlphaBeta& ab, double x, double y, double h) {
    if (h <= 0.0) throw std::invalid_argument("cr_residual: step must be positive");
    const double r2 = ab.radius * ab.radius;
    const double reach = (std::abs(x) + h) * (std::abs(x) + h) + (std::abs(y) + h) * (std::abs(y) + h);
    if (reach >= r2) throw OutOfDomainError("cr_residual: finite-difference stencil leaves the disk");
    const Quaternion dax = (ab.alpha(x + h, y) - ab.alpha(x - h, y)) / (2.0 * h);
    const Quaternion day = (ab.alpha(x, y + h) - ab.alpha(x, y - h)) / (2.0 * h);
    const Quaternion dbx = (ab.beta(x + h, y) - ab.beta(x - h, y)) / (2.0 * h);
    const Quaternion dby = (ab.beta(x, y + h) - ab.beta(x, y - h)) / (2.0 * h);
    return {dax - dby, day + dbx};
}

IntrinsicClass is_intrinsic(const SliceSeries& F, double rel_tol) {
    const double tol = rel_tol * std::max(F.coeff_scale(), 1e-300);
    bool all_real = true, all_imag = true;
    for (const auto& a : F.coeffs) {
        if (a.vec_norm() > tol) all_real = false;
        if (std::abs(a.w) > tol) all_imag = false;
    }
    if (all_real) return IntrinsicClass::Intrinsic;
    if (all_imag) return IntrinsicClass::AntiIntrinsic;
    return IntrinsicClass::Neither;
}

}  // namespace qsb
