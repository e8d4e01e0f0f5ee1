#include "qsb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <limits>
#include <numbers>

#include "qsb/complex_bergman.hpp"
#include "qsb/det_random.hpp"
#include "qsb/slice_bergman.hpp"

namespace qsb {

namespace {

constexpr double kPi = std::numbers::pi;
const double kPi2 = kPi * kPi;

constexpr double kTolExact = 1e-11;  // coefficient-level identities
constexpr double kTolQuad = 1e-9;    // quadrature-backed identities
constexpr double kTolFd = 1e-6;      // finite-difference checks
constexpr double kTolBool = 0.5;     // residual is 0 (holds) or 1 (violated)

struct Collector {
    std::vector<VerifyRecord>& records;
    double tol_override = 0.0;

    void add(const std::string& id, const std::string& statement, const std::string& params,
             double residual, double tolerance) {
        const double tol = tol_override > 0.0 ? tol_override : tolerance;
        records.push_back({id, statement, params, residual, tol, false, residual <= tol});
    }

    void info(const std::string& id, const std::string& statement, const std::string& params,
              double residual) {
        records.push_back({id, statement, params, residual,
                           std::numeric_limits<double>::quiet_NaN(), true, true});
    }
};

double coeff_distance(const std::vector<Quaternion>& a, const std::vector<Quaternion>& b) {
    double r = 0.0;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        const Quaternion va = k < a.size() ? a[k] : Quaternion{};
        const Quaternion vb = k < b.size() ? b[k] : Quaternion{};
        r = std::max(r, (va - vb).norm());
    }
    return r;
}

Complex cpow(Complex z, int n) {
    Complex p = 1.0;
    for (int k = 0; k < n; ++k) p *= z;
    return p;
}

std::string params_str(const char* fmt, ...) {
    char buf[160];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, args);
    va_end(args);
    return buf;
}

// ---------------------------------------------------------------------------
// complex suite: slice-plane decompositions, disk quadrature, disk kernel
// ---------------------------------------------------------------------------

void complex_suite(Collector& C, int degree) {
    DetRng rng(0x51bb0c01ull);
    const Frame fr = standard_frame();
    const PlanarRule rule = build_disk_rule(32, 64, fr);
    const int d = std::max(degree, 1);
    const Quaternion iq = fr.i.value();

    {
        double r = 0.0;
        for (int t = 0; t < 50; ++t) {
            const HoloSeries f = rng.holo_slice_valued(d, fr);
            r = std::max(r, coeff_distance(conj_reflect(conj_reflect(f)).coeffs, f.coeffs));
        }
        C.add("holo/conj-reflect-involution", "conj_reflect(conj_reflect(f)) = f",
              params_str("50 series, degree %d", d), r, kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 50; ++t) {
            const HoloSeries f = rng.holo_slice_valued(d, fr);
            const auto [f1, f2] = c_pair_decompose(f);
            HoloSeries recon = f1;
            for (std::size_t n = 0; n < recon.coeffs.size(); ++n)
                recon.coeffs[n] = f1.coeffs[n] + iq * f2.coeffs[n];
            r = std::max(r, coeff_distance(recon.coeffs, f.coeffs));
            if (classify(f1) != Classification::C || classify(f2) != Classification::C) r = 1.0;
        }
        C.add("holo/c-pair-decomposition", "f = f1 + i f2 with f1, f2 real-coefficient",
              params_str("50 series, degree %d", d), r, kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 50; ++t) {
            const HoloSeries f = rng.holo_slice_valued(d, fr);
            const auto [fc, fa] = c_anti_decompose(f);
            HoloSeries recon = fc;
            for (std::size_t n = 0; n < recon.coeffs.size(); ++n)
                recon.coeffs[n] = fc.coeffs[n] + fa.coeffs[n];
            r = std::max(r, coeff_distance(recon.coeffs, f.coeffs));
            if (classify(fc) != Classification::C) r = 1.0;
            if (fa.coeff_scale() > 1e-14 && classify(fa) != Classification::AntiC) r = 1.0;
        }
        C.add("holo/c-anti-decomposition",
              "f = fc + fa with fc conjugation-even and fa conjugation-odd",
              params_str("50 series, degree %d", d), r, kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 10; ++t) {
            const HoloSeries f = rng.holo_real_coeff(d, fr);
            const HoloSeries g = conj_reflect(f);
            for (int s = 0; s < 10; ++s) {
                const double px = rng.uniform(-0.65, 0.65), py = rng.uniform(-0.65, 0.65);
                r = std::max(r, (g.eval(px, py) - f.eval(px, py)).norm());
            }
        }
        C.add("holo/c-property-pointwise", "real coefficients iff f(conj z) = conj(f(z))",
              "10 series x 100 points", r, kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 20; ++t) {
            const HoloSeries f = rng.holo_real_coeff(d, fr);
            if (classify(i_times(f)) != Classification::AntiC) r = 1.0;
            if (classify(i_times(i_times(f))) != Classification::C) r = 1.0;
        }
        C.add("holo/imap-isomorphism", "f -> i f swaps the C and anti-C classes",
              "20 series", r, kTolBool);
    }
    {
        double r = 0.0;
        for (int a = 0; a <= 12; ++a) {
            for (int b = 0; b <= 12; ++b) {
                const Quaternion val = integrate_slice(
                    [&](double px, double py) {
                        const Complex zeta{px, py};
                        const Complex m = cpow(std::conj(zeta), a) * cpow(zeta, b);
                        return Quaternion(m.real()) + m.imag() * iq;
                    },
                    rule);
                const double expected = (a == b) ? kPi / (a + 1) : 0.0;
                r = std::max(r, std::abs(val.w - expected) / std::max(std::abs(expected), 1.0));
                r = std::max(r, val.vec_norm());
            }
        }
        for (int a = 13; a <= 31; ++a) {
            const Quaternion val = integrate_slice(
                [&](double px, double py) {
                    const Complex zeta{px, py};
                    const Complex m = cpow(std::conj(zeta), a) * cpow(zeta, a);
                    return Quaternion(m.real()) + m.imag() * iq;
                },
                rule);
            r = std::max(r, std::abs(val.w - kPi / (a + 1)));
        }
        C.add("quad/disk-moments", "disk moments of conj(z)^a z^b equal pi/(a+1) delta_ab",
              params_str("rule (32,64), degrees to %d", rule.exact_degree), r, kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 20; ++t) {
            const HoloSeries f = rng.holo_real_coeff(std::min(d, 12), fr);
            const Quaternion v = integrate_slice([&](double px, double py) { return f.eval(px, py); }, rule);
            r = std::max(r, v.vec_norm());
        }
        C.add("quad/intrinsic-integral-real", "the integral of a C-property series is real",
              "20 series", r, kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 15; ++t) {
            const HoloSeries f = rng.holo_real_coeff(d, fr);
            const HoloSeries g = rng.holo_real_coeff(d, fr);
            const HoloSeries h = rng.holo_anti_coeff(d, fr);
            const Quaternion ip_cc = integrate_slice(
                [&](double px, double py) { return quat_conj(g.eval(px, py)) * f.eval(px, py); }, rule);
            r = std::max(r, ip_cc.vec_norm());
            const Quaternion ip_ac = integrate_slice(
                [&](double px, double py) { return quat_conj(h.eval(px, py)) * f.eval(px, py); }, rule);
            r = std::max(r, std::abs(ip_ac.w));
            r = std::max(r, std::sqrt(ip_ac.y * ip_ac.y + ip_ac.z * ip_ac.z));
        }
        C.add("quad/inner-product-classes",
              "C x C inner products are real; anti-C x C are purely imaginary", "15 pairs", r,
              kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 15; ++t) {
            const HoloSeries f = rng.holo_slice_valued(d, fr);
            const auto [f1, f2] = c_pair_decompose(f);
            auto norm_of = [&](const HoloSeries& s) {
                const Quaternion v = integrate_slice(
                    [&](double px, double py) { return Quaternion(s.eval(px, py).norm_sq()); }, rule);
                return std::sqrt(v.w);
            };
            const double nf = norm_of(f), n1 = norm_of(f1), n2 = norm_of(f2);
            r = std::max({r, n1 - nf, n2 - nf, nf - n1 - n2});
        }
        C.add("quad/norm-inequalities", "max(|f1|, |f2|) <= |f| <= |f1| + |f2|", "15 series", r,
              kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 15; ++t) {
            const HoloSeries f = rng.holo_slice_valued(d, fr);
            const HoloSeries g = conj_reflect(f);
            auto sq = [&](const HoloSeries& s) {
                return integrate_slice(
                           [&](double px, double py) { return Quaternion(s.eval(px, py).norm_sq()); }, rule)
                    .w;
            };
            r = std::max(r, std::abs(sq(f) - sq(g)));
        }
        C.add("quad/conj-reflect-isometry", "conjugation reflection preserves the squared norm",
              "15 series", r, kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 15; ++t) {
            const HoloSeries f = rng.holo_slice_valued(d, fr);
            const auto [f1, f2] = c_pair_decompose(f);
            const Quaternion i1 =
                integrate_slice([&](double px, double py) { return f1.eval(px, py); }, rule);
            const Quaternion i2 =
                integrate_slice([&](double px, double py) { return f2.eval(px, py); }, rule);
            const Quaternion ire = integrate_slice(
                [&](double px, double py) { return Quaternion(fr.components(f.eval(px, py))[0]); }, rule);
            const Quaternion iim = integrate_slice(
                [&](double px, double py) { return Quaternion(fr.components(f.eval(px, py))[1]); }, rule);
            r = std::max(r, (i1 - ire).norm());
            r = std::max(r, (i2 - iim).norm());
        }
        C.add("quad/component-integrals",
              "integral of f1 equals integral of Re f; same for f2 and Im f", "15 series", r,
              kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 100; ++t) {
            const Complex z{rng.uniform(-0.65, 0.65), rng.uniform(-0.65, 0.65)};
            const Complex w{rng.uniform(-0.65, 0.65), rng.uniform(-0.65, 0.65)};
            r = std::max(r, std::abs(disk_kernel_closed(z, w) - std::conj(disk_kernel_closed(w, z))));
        }
        C.add("cbergman/kernel-hermitian", "K(z, w) = conj(K(w, z))", "100 pairs", r, kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 40; ++t) {
            const Complex z{rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6)};
            const Complex w{rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6)};
            const auto [R1, I1] = kernel_ri_split(z, w);
            const auto [R2, I2] = kernel_ri_split(z, std::conj(w));
            r = std::max(r, std::abs(R1 - std::conj(R2)));
            r = std::max(r, std::abs(I1 - std::conj(I2)));
        }
        C.add("cbergman/ri-conj-second-argument",
              "R(z, w) = conj(R(z, conj w)) and I(z, w) = conj(I(z, conj w))", "40 pairs", r,
              kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 40; ++t) {
            const Complex z{rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6)};
            const auto [Rzc, Izc] = kernel_ri_split(z, std::conj(z));
            const auto [Rzz, Izz] = kernel_ri_split(z, z);
            const Complex i{0.0, 1.0};
            r = std::max(r, std::abs((Rzc - i * Izz) - (Rzz + i * Izc)));
        }
        C.add("cbergman/ri-point-identity", "R(z, conj z) - i I(z, z) = R(z, z) + i I(z, conj z)",
              "40 points", r, kTolExact);
    }
    {
        const int nt = rule.exact_degree / 2;
        double r = 0.0;
        for (int t = 0; t < 8; ++t) {
            const Complex z{rng.uniform(-0.55, 0.55), rng.uniform(-0.55, 0.55)};
            const Complex Rzc = kernel_ri_split(z, std::conj(z), nt).first;
            const Complex Izz = kernel_ri_split(z, z, nt).second;
            const Complex i{0.0, 1.0};
            const Complex lhs = Rzc - i * Izz;
            const Quaternion rhs = integrate_slice(
                [&](double px, double py) {
                    const auto [R, I] = kernel_ri_split(z, Complex{px, py}, nt);
                    return Quaternion(std::norm(R) - std::norm(I));
                },
                rule);
            r = std::max(r, std::abs(lhs - Complex{rhs.w, dot4(rhs, iq)}));
        }
        C.add("cbergman/ri-integral-identity",
              "R(z, conj z) - i I(z, z) equals the integral of |R(z, .)|^2 - |I(z, .)|^2",
              params_str("8 points, matched truncation %d", nt), r, kTolQuad);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 40; ++t) {
            const Complex z{rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6)};
            const Complex w{rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6)};
            const auto [R1, I1] = kernel_ri_split(z, w);
            const auto [R2, I2] = kernel_ri_split(std::conj(z), w);
            r = std::max(r, std::abs(I2 + I1));
            r = std::max(r, std::abs(R2 - R1));
        }
        C.add("cbergman/ri-first-argument-parity", "I(conj z, w) = -I(z, w) and R(conj z, w) = R(z, w)",
              "40 pairs", r, kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 40; ++t) {
            const Complex z{rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6)};
            const Complex w{rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6)};
            const auto [R1, I1] = kernel_ri_split(z, w);
            const auto [R2, I2] = kernel_ri_split(std::conj(z), std::conj(w));
            r = std::max(r, std::abs(I2 + std::conj(I1)));
            r = std::max(r, std::abs(R2 - std::conj(R1)));
        }
        C.add("cbergman/ri-conj-both-arguments",
              "I(conj z, conj w) = -conj(I(z, w)) and R(conj z, conj w) = conj(R(z, w))", "40 pairs",
              r, kTolExact);
    }
    {
        double r_c = 0.0, r_a = 0.0, r_m = 0.0;
        for (int t = 0; t < 10; ++t) {
            const double zx = rng.uniform(-0.6, 0.6), zy = rng.uniform(-0.6, 0.6);
            const SlicePoint z = zy >= 0.0 ? SlicePoint{zx, zy, fr.i}
                                           : SlicePoint{zx, -zy, ImaginaryUnit(-fr.i.value())};
            const int deg = std::min(d, 10);

            const HoloSeries fc = rng.holo_real_coeff(deg, fr);
            const auto [rc, ic] = re_im_apply(fc, z, rule);
            const auto vc = fr.components(fc.eval(zx, zy));
            r_c = std::max(r_c, (rc - Quaternion(vc[0])).norm());
            r_c = std::max(r_c, (ic - Quaternion(vc[1])).norm());

            const HoloSeries fa = rng.holo_anti_coeff(deg, fr);
            const auto [ra, ia] = re_im_apply(fa, z, rule);
            const auto va = fr.components(fa.eval(zx, zy));
            r_a = std::max(r_a, (ra - va[1] * iq).norm());
            r_a = std::max(r_a, (ia + va[0] * iq).norm());

            const HoloSeries fm = rng.holo_slice_valued(deg, fr);
            const auto [rm, im] = re_im_apply(fm, z, rule);
            const auto [f1, f2] = c_anti_decompose(fm);
            const auto v1 = fr.components(f1.eval(zx, zy));
            const auto v2 = fr.components(f2.eval(zx, zy));
            r_m = std::max(r_m, (rm - (Quaternion(v1[0]) + v2[1] * iq)).norm());
            r_m = std::max(r_m, (im - (Quaternion(v1[1]) - v2[0] * iq)).norm());
        }
        C.add("cbergman/re-apply-c-property", "for C-property f the R and I integrals give Re f and Im f",
              "10 cases", r_c, kTolQuad);
        C.add("cbergman/re-apply-anti-property",
              "for anti-C f the R and I integrals give i Im f and -i Re f", "10 cases", r_a, kTolQuad);
        C.add("cbergman/re-apply-mixed",
              "for f = f1 + f2 the R integral gives Re f1 + i Im f2 and the I integral Im f1 - i Re f2",
              "10 cases", r_m, kTolQuad);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 10; ++t) {
            const double zx = rng.uniform(-0.6, 0.6), zy = rng.uniform(-0.6, 0.6);
            const SlicePoint z = zy >= 0.0 ? SlicePoint{zx, zy, fr.i}
                                           : SlicePoint{zx, -zy, ImaginaryUnit(-fr.i.value())};
            const HoloSeries f = rng.holo_slice_valued(std::min(d, 10), fr);
            const auto [ro, io] = re_im_apply(f, z, rule);
            r = std::max(r, (ro + iq * io - f.eval(zx, zy)).norm());
        }
        C.add("cbergman/projection-split", "the Bergman projection is the R integral plus i times the I integral",
              "10 cases", r, kTolQuad);
    }
    {
        const ComplexKernel model = disk_kernel_model(6, fr);
        double r = 0.0;
        const auto pconj = bergman_project(
            [&](double px, double py) { return Quaternion(px) - py * iq; }, rule, model);
        for (double c : pconj.re_coeffs) r = std::max(r, std::abs(c));
        for (double c : pconj.im_coeffs) r = std::max(r, std::abs(c));
        const auto pid = bergman_project(
            [&](double px, double py) { return Quaternion(px) + py * iq; }, rule, model);
        for (int n = 0; n <= 6; ++n) {
            r = std::max(r, std::abs(pid.re_coeffs[static_cast<std::size_t>(n)] - (n == 1 ? 1.0 : 0.0)));
            r = std::max(r, std::abs(pid.im_coeffs[static_cast<std::size_t>(n)]));
        }
        const auto pabs = bergman_project(
            [&](double px, double py) { return Quaternion(px * px + py * py); }, rule, model);
        for (int n = 0; n <= 6; ++n) {
            r = std::max(r, std::abs(pabs.re_coeffs[static_cast<std::size_t>(n)] - (n == 0 ? 0.5 : 0.0)));
            r = std::max(r, std::abs(pabs.im_coeffs[static_cast<std::size_t>(n)]));
        }
        C.add("cbergman/projection-examples",
              "projections: conj(z) -> 0, z -> z, |z|^2 -> 1/2", "disk model N=6", r, kTolExact);
    }
    {
        const ComplexKernel model = disk_kernel_model(10, fr);
        double r = 0.0;
        for (int t = 0; t < 10; ++t) {
            const HoloSeries f = rng.holo_slice_valued(10, fr);
            const Complex z{rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6)};
            const Quaternion repr = integrate_slice(
                [&](double px, double py) {
                    const Complex k = model.eval(z, Complex{px, py});
                    return (Quaternion(k.real()) + k.imag() * iq) * f.eval(px, py);
                },
                rule);
            r = std::max(r, (repr - f.eval(z.real(), z.imag())).norm());
        }
        C.add("cbergman/kernel-reproduction", "the kernel integral reproduces polynomials on the disk",
              "10 series of degree 10", r, kTolExact);
    }
    {
        const ComplexKernel numeric = numeric_kernel_build(rule, 10);
        const ComplexKernel model = disk_kernel_model(10, fr);
        double r = 0.0;
        for (int t = 0; t < 100; ++t) {
            const Complex z{rng.uniform(-0.49, 0.49), rng.uniform(-0.49, 0.49)};
            const Complex w{rng.uniform(-0.49, 0.49), rng.uniform(-0.49, 0.49)};
            r = std::max(r, std::abs(numeric.eval(z, w) - model.eval(z, w)));
        }
        C.add("cbergman/numeric-kernel-disk",
              "the Gram-built disk kernel matches the analytic model at matched truncation",
              "N=10, 100 pairs, |z|,|w| <= 0.7", r, 1e-8);
    }
    {
        const PlanarRule rect = build_rect_rule(24, 16, fr);
        const ComplexKernel rk = numeric_kernel_build(rect, 6);
        double r = 0.0;
        for (int t = 0; t < 100; ++t) {
            const Complex z{rng.uniform(-0.9, 0.9), rng.uniform(-0.45, 0.45)};
            const Complex w{rng.uniform(-0.9, 0.9), rng.uniform(-0.45, 0.45)};
            r = std::max(r, std::abs(rk.eval(z, w) - std::conj(rk.eval(w, z))));
        }
        C.add("cbergman/rect-kernel-hermitian", "the rectangle kernel is hermitian",
              params_str("N=6, cond(G)=%.3g", rk.gram_condition), r, kTolExact);

        double rr = 0.0;
        for (int t = 0; t < 6; ++t) {
            std::vector<Complex> poly(static_cast<std::size_t>(7));
            for (auto& c : poly) c = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
            if (t == 0) {
                poly.assign(7, Complex{0.0, 0.0});
                poly[3] = 1.0;  // z^3 probe
            }
            auto peval = [&](Complex zz) {
                Complex acc = 0.0;
                for (int n = 6; n >= 0; --n) acc = acc * zz + poly[static_cast<std::size_t>(n)];
                return acc;
            };
            const Complex z = (t == 0) ? Complex{0.2, 0.1}
                                       : Complex{rng.uniform(-0.8, 0.8), rng.uniform(-0.4, 0.4)};
            const Quaternion repr = integrate_slice(
                [&](double px, double py) {
                    const Complex val = rk.eval(z, Complex{px, py}) * peval(Complex{px, py});
                    return Quaternion(val.real()) + val.imag() * iq;
                },
                rect);
            const Complex expect = peval(z);
            rr = std::max(rr, std::abs(Complex{repr.w, dot4(repr, iq)} - expect));
        }
        C.add("cbergman/rect-kernel-reproduction",
              "the rectangle kernel reproduces polynomials of degree <= N", "N=6, 6 polynomials",
              rr, 1e-8);
    }
}

// ---------------------------------------------------------------------------
// slice suite: extension/restriction, splittings, intrinsic structure
// ---------------------------------------------------------------------------

void slice_suite(Collector& C, int degree) {
    DetRng rng(0x51bb0c02ull);
    const int d = std::max(degree, 1);

    {
        double r = 0.0;
        for (int t = 0; t < 20; ++t) {
            const Frame fr = rng.frame();
            const SliceSeries F = rng.slice_series(d);
            r = std::max(r, coeff_distance(slice_from_holo(restrict_Q(F, fr)).coeffs, F.coeffs));
            const HoloSeries f = rng.holo_slice_valued(d, fr);
            r = std::max(r, coeff_distance(restrict_Q(slice_from_holo(f), fr).coeffs, f.coeffs));
        }
        C.add("slicefn/extension-restriction-series", "P and Q invert each other on series coefficients",
              params_str("20 frames, degree %d", d), r, kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 20; ++t) {
            const Frame fr = rng.frame();
            const SliceSeries F = rng.slice_series(d);
            for (int s = 0; s < 5; ++s) {
                const Quaternion q = rng.quaternion_in_ball(0.9);
                r = std::max(r, (extend_P(restrict_Q(F, fr), q) - F.eval(q)).norm());
            }
        }
        C.add("slicefn/extension-pointwise",
              "the Representation Formula extension agrees with the series evaluation",
              "20 frames x 5 points", r, kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 20; ++t) {
            const Frame fr = rng.frame();
            const SliceSeries F = rng.slice_series(d);
            const auto [f1, f2] = split_basis(F, fr);
            double rs = 0.0;
            for (std::size_t n = 0; n < F.coeffs.size(); ++n)
                rs = std::max(rs, (f1.coeffs[n] + f2.coeffs[n] * fr.j.value() - F.coeffs[n]).norm());
            r = std::max(r, rs);
            if (!f1.is_slice_valued() || !f2.is_slice_valued()) r = 1.0;
        }
        C.add("slicefn/splitting", "Q[F] = f1 + f2 j with f1, f2 slice-valued",
              params_str("20 frames, degree %d", d), r, kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 20; ++t) {
            const Frame fr = rng.frame();
            const SliceSeries F = rng.slice_series(d);
            const auto h = refined_split(F, fr);
            for (std::size_t n = 0; n < F.coeffs.size(); ++n) {
                const Quaternion recon = fr.assemble(h[0].coeffs[n].w, h[1].coeffs[n].w,
                                                     h[2].coeffs[n].w, h[3].coeffs[n].w);
                r = std::max(r, (recon - F.coeffs[n]).norm());
            }
            for (const auto& part : h)
                if (classify(part) != Classification::C) r = 1.0;
        }
        C.add("slicefn/refined-splitting",
              "Q[F] = h0 + h1 i + h2 j + h3 ij with four real-coefficient parts",
              params_str("20 frames, degree %d", d), r, kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 20; ++t) {
            const Frame fr = rng.frame();
            const SliceSeries F = rng.slice_series(d);
            const auto parts = fourfold_decompose(F, fr);
            for (std::size_t n = 0; n < F.coeffs.size(); ++n) {
                const Quaternion recon = fr.assemble(parts[0].coeffs[n].w, parts[1].coeffs[n].w,
                                                     parts[2].coeffs[n].w, parts[3].coeffs[n].w);
                r = std::max(r, (recon - F.coeffs[n]).norm());
            }
            for (int l = 0; l < 4; ++l) {
                if (is_intrinsic(parts[static_cast<std::size_t>(l)]) != IntrinsicClass::Intrinsic) r = 1.0;
                const auto again = fourfold_decompose(parts[static_cast<std::size_t>(l)], fr);
                for (int m = 0; m < 4; ++m) {
                    const auto& expect = (m == 0) ? parts[static_cast<std::size_t>(l)].coeffs
                                                  : std::vector<Quaternion>{};
                    r = std::max(r, coeff_distance(again[static_cast<std::size_t>(m)].coeffs, expect));
                }
            }
        }
        C.add("slicefn/fourfold-decomposition",
              "F = F0 + F1 i + F2 j + F3 ij with intrinsic parts; re-decomposing a part is the identity",
              params_str("20 frames, degree %d", d), r, kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 10; ++t) {
            const Frame fr = rng.frame();
            const HoloSeries f = rng.holo_real_coeff(d, fr);
            for (int s = 0; s < 10; ++s) {
                const Quaternion q = rng.nonreal_in_ball(0.9);
                const SlicePoint sp = slice_coords(q);
                const auto v = fr.components(f.eval(sp.x, sp.y));
                const Quaternion expect = Quaternion(v[0]) + v[1] * sp.axis.value();
                r = std::max(r, (extend_P(f, q) - expect).norm());
            }
        }
        C.add("slicefn/extension-c-form", "for C-property f, P[f](q) = Re f(x + y i) + I_q Im f(x + y i)",
              "10 series x 10 points", r, 1e-12);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 10; ++t) {
            const Frame fr = rng.frame();
            const HoloSeries f = rng.holo_anti_coeff(d, fr);
            for (int s = 0; s < 10; ++s) {
                const Quaternion q = rng.nonreal_in_ball(0.9);
                const SlicePoint sp = slice_coords(q);
                const auto v = fr.components(f.eval(sp.x, sp.y));
                const Quaternion expect = (Quaternion(v[1]) - v[0] * sp.axis.value()) * fr.i.value();
                r = std::max(r, (extend_P(f, q) - expect).norm());
            }
        }
        C.add("slicefn/extension-anti-form",
              "for anti-C f, P[f](q) = (Im f(x + y i) - I_q Re f(x + y i)) i", "10 series x 10 points",
              r, 1e-12);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 10; ++t) {
            const Frame fr = rng.frame();
            const HoloSeries f = rng.holo_slice_valued(d, fr);
            const auto [fc, fa] = c_anti_decompose(f);
            for (int s = 0; s < 10; ++s) {
                const Quaternion q = rng.nonreal_in_ball(0.9);
                const SlicePoint sp = slice_coords(q);
                const Quaternion I = sp.axis.value();
                const auto v = fr.components(f.eval(sp.x, sp.y));
                const Quaternion expect = Quaternion(v[0]) + v[1] * I +
                                          (kOne + I * fr.i.value()) * fa.eval(sp.x, -sp.y);
                r = std::max(r, (extend_P(f, q) - expect).norm());
            }
        }
        C.add("slicefn/extension-general-form",
              "P[f](q) = Re f + I_q Im f + (1 + I_q i) f2(x - y i) with f2 the anti-C part",
              "10 series x 10 points", r, 1e-12);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 10; ++t) {
            const Frame fr = rng.frame();
            const Quaternion iq = fr.i.value();
            const HoloSeries fc = rng.holo_real_coeff(d, fr);
            if (is_intrinsic(slice_from_holo(fc)) != IntrinsicClass::Intrinsic) r = 1.0;
            const HoloSeries fa = rng.holo_anti_coeff(d, fr);
            if (is_intrinsic(slice_from_holo(fa)) != IntrinsicClass::AntiIntrinsic) r = 1.0;
            for (int s = 0; s < 10; ++s) {
                const Quaternion q = rng.quaternion_in_ball(0.9);
                r = std::max(r, (extend_P(fc, quat_conj(q)) - quat_conj(extend_P(fc, q))).norm());
                // the anti class obeys the twisted law P[f](conj q) = i conj(P[f](q)) i
                r = std::max(r,
                             (extend_P(fa, quat_conj(q)) - iq * quat_conj(extend_P(fa, q)) * iq).norm());
            }
        }
        C.add("slicefn/extension-class-preservation",
              "extensions of C / anti-C series are intrinsic / anti-intrinsic", "10 series x 10 points",
              r, 1e-12);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 20; ++t) {
            const Frame fr = rng.frame();
            const SliceSeries F = rng.intrinsic_series(d);
            const auto [fc, fa] = c_anti_decompose(restrict_Q(F, fr));
            r = std::max(r, coeff_distance(slice_from_holo(fc).coeffs, F.coeffs));
            r = std::max(r, fa.coeff_scale());
        }
        C.add("slicefn/intrinsic-image", "every intrinsic series is the extension of the C-part of its restriction",
              params_str("20 frames, degree %d", d), r, kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 10; ++t) {
            const SliceSeries F = rng.intrinsic_series(d);
            const SliceSeries G = rng.intrinsic_series(d);
            for (int s = 0; s < 10; ++s) {
                const Quaternion q = rng.quaternion_in_ball(0.95);
                r = std::max(r, (F.eval(q) * G.eval(q) - G.eval(q) * F.eval(q)).norm());
            }
        }
        C.add("slicefn/intrinsic-commutation", "values of intrinsic functions commute pointwise",
              "10 pairs x 10 points", r, 1e-12);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 10; ++t) {
            const SliceSeries F = rng.slice_series(d);
            const AlphaBeta ab = alpha_beta_of(F);
            for (int s = 0; s < 10; ++s) {
                const double x = rng.uniform(-0.6, 0.6), y = rng.uniform(-0.6, 0.6);
                r = std::max(r, (ab.alpha(x, -y) - ab.alpha(x, y)).norm());
                r = std::max(r, (ab.beta(x, -y) + ab.beta(x, y)).norm());
            }
        }
        C.add("slicefn/alpha-beta-parity", "alpha is even and beta is odd in y", "10 series x 10 points",
              r, kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 10; ++t) {
            const SliceSeries F = rng.slice_series(d);
            const AlphaBeta ab = alpha_beta_of(F);
            for (int s = 0; s < 10; ++s) {
                const Quaternion q = rng.nonreal_in_ball(0.9);
                const SlicePoint sp = slice_coords(q);
                const Quaternion expect = ab.alpha(sp.x, sp.y) + sp.axis.value() * ab.beta(sp.x, sp.y);
                r = std::max(r, (F.eval(q) - expect).norm());
            }
        }
        C.add("slicefn/alpha-beta-form", "F(x + I y) = alpha(x, y) + I beta(x, y)",
              "10 series x 10 points", r, 1e-12);
    }
    {
        SliceSeries sq{{Quaternion{}, Quaternion{}, Quaternion(1.0)}, 1.0};
        const AlphaBeta ab = alpha_beta_of(sq);
        double r = 0.0;
        for (int s = 0; s < 50; ++s) {
            const double x = rng.uniform(-0.6, 0.6), y = rng.uniform(-0.6, 0.6);
            r = std::max(r, (ab.alpha(x, y) - Quaternion(x * x - y * y)).norm());
            r = std::max(r, (ab.beta(x, y) - Quaternion(2.0 * x * y)).norm());
        }
        C.add("slicefn/alpha-beta-square", "for F = q^2, alpha = x^2 - y^2 and beta = 2 x y",
              "50 points", r, kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 10; ++t) {
            const SliceSeries F = rng.slice_series(std::min(d, 8));
            const AlphaBeta ab = alpha_beta_of(F);
            for (int s = 0; s < 5; ++s) {
                const double x = rng.uniform(-0.5, 0.5), y = rng.uniform(-0.5, 0.5);
                const auto [r1, r2] = cr_residual(ab, x, y);
                r = std::max(r, std::max(r1.norm(), r2.norm()));
            }
        }
        C.add("slicefn/cauchy-riemann", "alpha and beta satisfy the Cauchy-Riemann system",
              "10 series x 5 points, step 1e-5", r, 1e-7);
    }
    {
        const SliceSeries F{{Quaternion{}, Quaternion{}, Quaternion{}, Quaternion(1.0)}, 1.0};
        const AlphaBeta good = alpha_beta_of(F);
        const AlphaBeta bad{good.alpha, [b = good.beta](double x, double y) { return -1.0 * b(x, y); },
                            good.radius};
        const auto [r1, r2] = cr_residual(bad, 0.2, 0.3);
        const double observed = std::max(r1.norm(), r2.norm());
        C.add("slicefn/cauchy-riemann-negative-control",
              "negating beta breaks the Cauchy-Riemann system",
              params_str("F = q^3 at (0.2, 0.3), observed %.3g", observed),
              observed >= 1e-3 ? 0.0 : 1.0, kTolBool);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 10; ++t) {
            const SliceSeries F = rng.intrinsic_series(d);
            SliceSeries A = F;
            for (auto& c : A.coeffs) c = c * kE2;  // purely imaginary coefficients
            if (is_intrinsic(F) != IntrinsicClass::Intrinsic) r = 1.0;
            if (is_intrinsic(A) != IntrinsicClass::AntiIntrinsic) r = 1.0;
            for (int s = 0; s < 10; ++s) {
                const Quaternion q = rng.quaternion_in_ball(0.95);
                r = std::max(r, (F.eval(quat_conj(q)) - quat_conj(F.eval(q))).norm());
                // A = F e2 pointwise, so A(conj q) = conj(F(q)) e2
                r = std::max(r, (A.eval(quat_conj(q)) - quat_conj(F.eval(q)) * kE2).norm());
            }
        }
        const SliceSeries neither{{kE1, Quaternion(1.0)}, 1.0};
        double dev = 0.0;
        for (int s = 0; s < 20; ++s) {
            const Quaternion q = rng.quaternion_in_ball(0.95);
            dev = std::max(dev, (neither.eval(quat_conj(q)) - quat_conj(neither.eval(q))).norm());
        }
        if (is_intrinsic(neither) != IntrinsicClass::Neither || dev < 1e-3) r = 1.0;
        C.add("slicefn/intrinsic-pointwise",
              "coefficient classification matches F(conj q) = +/- conj(F(q)) pointwise",
              "10 cases x 10 points plus a negative control", r, 1e-12);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 10; ++t) {
            const SliceSeries F = rng.intrinsic_series(d);
            const AlphaBeta ab = alpha_beta_of(F);
            for (int s = 0; s < 10; ++s) {
                const double x = rng.uniform(-0.6, 0.6), y = rng.uniform(-0.6, 0.6);
                r = std::max(r, ab.alpha(x, y).vec_norm());
                r = std::max(r, ab.beta(x, y).vec_norm());
            }
        }
        SliceSeries offaxis{{Quaternion{}, kE2}, 1.0};
        const AlphaBeta ab = alpha_beta_of(offaxis);
        double dev = 0.0;
        for (int s = 0; s < 20; ++s)
            dev = std::max(dev, ab.alpha(rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6)).vec_norm());
        if (dev < 1e-3) r = 1.0;
        C.add("slicefn/intrinsic-alpha-beta-real",
              "F is intrinsic iff alpha and beta are real-valued", "10 series x 10 points", r, 1e-12);
    }
}

// ---------------------------------------------------------------------------
// bergman suite: the two ball kernels, their components, and the M operator
// ---------------------------------------------------------------------------

void bergman_suite(Collector& C, int degree, bool mismatched) {
    DetRng rng(0x51bb0c03ull);
    const Frame fr = standard_frame();
    const PlanarRule prule = build_disk_rule(32, 64, fr);
    const BallRule brule = build_ball_rule(11, 20, 18);
    const int d = std::max(1, std::min(degree, 8));

    {
        double r = 0.0;
        for (int t = 0; t < 20; ++t) {
            const ImaginaryUnit axis = rng.unit_imaginary();
            const double zx = rng.uniform(-0.55, 0.55), zy = rng.uniform(-0.55, 0.55);
            const double wx = rng.uniform(-0.55, 0.55), wy = rng.uniform(-0.55, 0.55);
            const Quaternion q = Quaternion(zx) + zy * axis.value();
            const Quaternion w = Quaternion(wx) + wy * axis.value();
            const int nt = kernel_truncation_for(q.norm() * w.norm(), 1e-13);
            const Complex closed = disk_kernel_closed(Complex{zx, zy}, Complex{wx, wy});
            const Quaternion expect = Quaternion(closed.real()) + closed.imag() * axis.value();
            r = std::max(r, (SecondKindKernel{nt}.eval(q, w) - expect).norm());
        }
        C.add("sbergman/second-kind-slice-restriction",
              "on a slice the second-kind kernel is the complex disk kernel", "20 pairs", r, 1e-12);
    }
    {
        double r = 0.0;
        const SecondKindKernel kernel{48};
        for (int t = 0; t < 100; ++t) {
            const Quaternion q = rng.quaternion_in_ball(0.7);
            const Quaternion w = rng.quaternion_in_ball(0.7);
            r = std::max(r, (kernel.eval(q, w) - quat_conj(kernel.eval(w, q))).norm());
        }
        C.add("sbergman/second-kind-hermitian", "K(q, r) = conj(K(r, q))", "100 pairs, N=48", r,
              kTolExact);
    }
    {
        double r = 0.0;
        const SecondKindKernel kernel{48};
        for (int t = 0; t < 30; ++t) {
            const Quaternion q = rng.quaternion_in_ball(0.7);
            const Quaternion w = rng.quaternion_in_ball(0.7);
            const auto k4 = kernel.components(q, w, fr);
            const Quaternion recon = k4[0] + k4[1] * fr.i.value() + k4[2] * fr.j.value() + k4[3] * fr.k.value();
            r = std::max(r, (recon - kernel.eval(q, w)).norm());
            // intrinsic in q: each component at conj(q) equals its conjugate
            const auto at_conj = kernel.components(quat_conj(q), w, fr);
            for (int l = 0; l < 4; ++l)
                r = std::max(r, (at_conj[static_cast<std::size_t>(l)] -
                                 quat_conj(k4[static_cast<std::size_t>(l)]))
                                    .norm());
        }
        C.add("sbergman/second-kind-components",
              "K = K0 + K1 i + K2 j + K3 ij with intrinsic q-series components", "30 pairs, N=48", r,
              kTolExact);
    }
    {
        double r = 0.0;
        const SecondKindKernel kernel{48};
        for (int t = 0; t < 20; ++t) {
            const Quaternion q = rng.quaternion_in_ball(0.8);
            const Quaternion w = Quaternion(rng.uniform(-0.8, 0.8));
            const auto k4 = kernel.components(q, w, fr);
            r = std::max(r, std::max({k4[1].norm(), k4[2].norm(), k4[3].norm()}));
        }
        C.add("sbergman/second-kind-components-real-argument",
              "a real second argument kills the i, j, ij components", "20 pairs", r, 1e-13);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 20; ++t) {
            const SliceSeries f = rng.slice_series(d);
            const Quaternion q_on = [&] {
                const double x = rng.uniform(-0.6, 0.6), y = rng.uniform(-0.6, 0.6);
                return Quaternion(x) + y * fr.i.value();
            }();
            const Quaternion q_off = rng.nonreal_in_ball(0.9);
            r = std::max(r, (slice_reproduce(f, q_on, fr, prule, 32) - f.eval(q_on)).norm());
            r = std::max(r, (slice_reproduce(f, q_off, fr, prule, 32) - f.eval(q_off)).norm());
        }
        C.add("sbergman/slice-reproduction",
              "a single-slice integral of the second-kind kernel reproduces f on and off the slice",
              params_str("20 series of degree %d, N=32, rule (32,64)", d), r, kTolQuad);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 5; ++t) {
            const SliceSeries f = rng.slice_series(d);
            const Quaternion q = rng.nonreal_in_ball(0.8);
            const auto ints = component_integrals(f, q, fr, prule, 32);
            const auto parts = fr.components(f.eval(q));
            for (int l = 0; l < 4; ++l)
                r = std::max(r, (ints[static_cast<std::size_t>(l)] -
                                 Quaternion(parts[static_cast<std::size_t>(l)]))
                                    .norm());
        }
        C.info("sbergman/component-reproduction-measured",
               "measured residual of the component-kernel integrals against the value components",
               params_str("5 series of degree %d", d), r);
    }

    const FirstKindKernel kernel8 = gram_build(8, brule);
    const FirstKindKernel kernel2 = gram_build(2, brule);

    {
        double r = 0.0;
        for (int n = 0; n <= 8; ++n)
            for (int m = 0; m <= 8; ++m) {
                double expect = 0.0;
                if (n == m) expect = kPi2 / (n + 2);
                if (std::abs(n - m) == 2) expect = -kPi2 / (std::min(n, m) * 2 + 6);
                r = std::max(r, std::abs(kernel8.gram.at(n, m) - expect));
            }
        C.add("sbergman/gram-moments",
              "ball Gram entries match pi^2/(n+2) on the diagonal and -pi^2/(2n+6) two off it",
              "N=8, rule (11,20,18)", r, kTolQuad);
    }
    {
        double r = 0.0;
        for (int n = 0; n <= 8; ++n)
            for (int m = 0; m <= 8; ++m)
                if (n != m && std::abs(n - m) != 2) r = std::max(r, std::abs(kernel8.gram.at(n, m)));
        C.add("sbergman/gram-banded", "Gram entries vanish unless |n - m| is 0 or 2", "N=8", r, 1e-10);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 100; ++t) {
            const Quaternion q = rng.quaternion_in_ball(0.9);
            const Quaternion w = rng.quaternion_in_ball(0.9);
            r = std::max(r, (kernel8.eval(q, w) - quat_conj(kernel8.eval(w, q))).norm());
        }
        C.add("sbergman/first-kind-hermitian", "B(q, r) = conj(B(r, q))", "100 pairs, N=8", r,
              kTolExact);
    }
    {
        const double expect = 18.0 / (7.0 * kPi2);
        const double got = kernel2.eval(Quaternion{}, Quaternion{}).w;
        C.add("sbergman/first-kind-value-at-zero", "B(0, 0) = 18 / (7 pi^2) at N = 2",
              params_str("got %.17g", got), std::abs(got - expect), kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 8; ++t) {
            const SliceSeries f = rng.slice_series(d);
            const Quaternion q = rng.quaternion_in_ball(0.8);
            const Quaternion repr = integrate_ball(
                [&](const Quaternion& rr) { return kernel8.eval(q, rr) * f.eval(rr); }, brule);
            r = std::max(r, (repr - f.eval(q)).norm());
        }
        C.add("sbergman/first-kind-reproduction",
              "the volume integral of B against f reproduces f on the ball",
              params_str("8 series of degree %d, N=8", d), r, kTolQuad);
    }
    {
        double r = 0.0;
        const double h = 1e-5;
        for (int t = 0; t < 10; ++t) {
            const Quaternion q = rng.quaternion_in_ball(0.7);
            const ImaginaryUnit axis = rng.unit_imaginary();
            const double x = rng.uniform(-0.5, 0.5), y = rng.uniform(-0.5, 0.5);
            auto B = [&](double px, double py) {
                return kernel8.eval(q, Quaternion(px) + py * axis.value());
            };
            const Quaternion dx = (B(x + h, y) - B(x - h, y)) / (2.0 * h);
            const Quaternion dy = (B(x, y + h) - B(x, y - h)) / (2.0 * h);
            r = std::max(r, (dx - dy * axis.value()).norm());
        }
        C.add("sbergman/first-kind-anti-slice-regular",
              "B is right anti-slice regular in its second argument (finite differences)",
              "10 cases, step 1e-5", r, kTolFd);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 20; ++t) {
            const Quaternion zeta = rng.quaternion_in_ball(0.5);
            const Quaternion q = rng.quaternion_in_ball(0.5);
            r = std::max(r, kernel_consistency(kernel8, 8, brule, zeta, q));
        }
        C.add("sbergman/kernel-consistency",
              "K(zeta, q) equals the volume integral of B(zeta, r) K(r, q) at matched truncation",
              "20 pairs, N=8", r, kTolQuad);
    }
    if (mismatched) {
        double r = std::numeric_limits<double>::infinity();
        for (int t = 0; t < 5; ++t) {
            const Quaternion zeta = rng.quaternion_in_ball(0.5);
            const Quaternion q = rng.quaternion_in_ball(0.5);
            r = std::min(r, kernel_consistency(kernel2, 8, brule, zeta, q));
        }
        C.add("sbergman/kernel-consistency-mismatched",
              "deliberate truncation mismatch: B at N=2 against K at N=8 (expected to fail)",
              "5 pairs", r, kTolQuad);
    }
    {
        const SliceSeries one{{Quaternion(1.0)}, 1.0};
        const SliceSeries ident{{Quaternion{}, Quaternion(1.0)}, 1.0};
        const SliceSeries m1 = m_i_apply(kernel2, one, fr, prule);
        const SliceSeries mq = m_i_apply(kernel2, ident, fr, prule);
        double r = 0.0;
        r = std::max(r, std::abs(m1.coeffs[0].w - 18.0 / (7.0 * kPi)));
        r = std::max(r, m1.coeffs[0].vec_norm());
        r = std::max(r, m1.coeffs[1].norm());
        r = std::max(r, std::abs(m1.coeffs[2].w - 12.0 / (7.0 * kPi)));
        r = std::max(r, m1.coeffs[2].vec_norm());
        r = std::max(r, mq.coeffs[0].norm());
        r = std::max(r, std::abs(mq.coeffs[1].w - 3.0 / (2.0 * kPi)));
        r = std::max(r, mq.coeffs[1].vec_norm());
        r = std::max(r, mq.coeffs[2].norm());
        C.add("sbergman/m-operator-values", "M[1] = (18 + 12 q^2) / (7 pi) and M[q] = 3 q / (2 pi) at N = 2",
              "closed-form coefficients", r, 1e-12);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 5; ++t) {
            const SliceSeries f = rng.slice_series(d);
            const SliceSeries g = rng.slice_series(d);
            const SliceSeries sum = f + g;
            const SliceSeries lhs = m_i_apply(kernel8, sum, fr, prule);
            const SliceSeries rhs = m_i_apply(kernel8, f, fr, prule) + m_i_apply(kernel8, g, fr, prule);
            r = std::max(r, coeff_distance(lhs.coeffs, rhs.coeffs));
        }
        C.add("sbergman/m-operator-linearity", "M[f + g] = M[f] + M[g]", "5 pairs", r, kTolExact);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 5; ++t) {
            const SliceSeries f = rng.slice_series(d);
            const SliceSeries m = m_i_apply(kernel8, f, fr, prule);
            const Quaternion q = rng.quaternion_in_ball(0.8);
            r = std::max(r, (m_i_apply_at(kernel8, f, fr, prule, q) - m.eval(q)).norm());
        }
        C.add("sbergman/m-operator-quadrature-path",
              "the slice-integral evaluation of M[f] matches the coefficient algebra", "5 series",
              r, 1e-10);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 15; ++t) {
            const SliceSeries f = rng.slice_series(d);
            const Quaternion q = rng.quaternion_in_ball(0.85);
            r = std::max(r, (two_stage_reproduce(f, q, kernel8, fr, prule, brule) - f.eval(q)).norm());
        }
        C.add("sbergman/two-stage-reproduction",
              "f(q) equals the volume integral of K(q, r) M[f](r) at matched truncation",
              params_str("15 series of degree %d, N=8", d), r, 1e-8);
    }
    {
        double r = 0.0;
        const int dmax = std::min(6, kernel8.truncation);
        for (int a = 0; a <= dmax; ++a)
            for (int b = 0; b <= dmax; ++b) {
                SliceSeries f{{}, 1.0}, g{{}, 1.0};
                f.coeffs.assign(static_cast<std::size_t>(a) + 1, Quaternion{});
                g.coeffs.assign(static_cast<std::size_t>(b) + 1, Quaternion{});
                f.coeffs.back() = Quaternion(1.0);
                g.coeffs.back() = (b % 2 == 0) ? Quaternion(1.0) : kE2;
                const auto pair = mi_adjoint_identity(f, g, kernel8, fr, prule, brule);
                r = std::max(r, (pair.lhs - pair.rhs).norm());
            }
        C.add("sbergman/m-operator-adjoint",
              "volume inner product against M[f] equals the slice inner product",
              params_str("monomial pairs to degree %d", dmax), r, kTolQuad);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 5; ++t) {
            const SliceSeries g = rng.slice_series(d);
            const auto pair = mi_adjoint_identity(g, g, kernel8, fr, prule, brule);
            r = std::max(r, pair.lhs.vec_norm());
            r = std::max(r, std::max(0.0, -pair.lhs.w));
            r = std::max(r, (pair.lhs - pair.rhs).norm());
        }
        C.add("sbergman/m-operator-self-pairing",
              "the self pairing against M[g] is the nonnegative slice norm of g", "5 series", r,
              kTolQuad);
    }
    {
        double r = 0.0;
        for (int t = 0; t < 10; ++t) {
            const SliceSeries f = rng.intrinsic_series(d);
            const SliceSeries g = rng.intrinsic_series(d);
            const HoloSeries fh = restrict_Q(f, fr), gh = restrict_Q(g, fr);
            const Quaternion ip = integrate_slice(
                [&](double px, double py) { return quat_conj(fh.eval(px, py)) * gh.eval(px, py); },
                prule);
            r = std::max(r, ip.vec_norm());
        }
        C.add("sbergman/intrinsic-slice-inner-product-real",
              "slice inner products of intrinsic functions are real", "10 pairs", r, kTolExact);
    }
}

}  // namespace

VerifyReport run_suite(const std::string& suite, const VerifyOptions& options) {
    VerifyReport report;
    report.suite = suite;
    report.degree = options.degree;
    Collector C{report.records, options.tol_override};

    const auto start = std::chrono::steady_clock::now();
    if (suite == "complex" || suite == "all") complex_suite(C, options.degree);
    if (suite == "slice" || suite == "all") slice_suite(C, options.degree);
    if (suite == "bergman" || suite == "all") bergman_suite(C, options.degree, options.mismatched_truncation);
    if (report.records.empty()) throw std::invalid_argument("unknown suite: " + suite);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    report.overall_pass = true;
    for (const auto& rec : report.records) report.overall_pass = report.overall_pass && rec.pass;
    return report;
}

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 8);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string serialize_report(const VerifyReport& report) {
    std::string out = "{\"suite\":\"" + json_escape(report.suite) + "\",\"degree\":" +
                      std::to_string(report.degree) + ",\"records\":[";
    for (std::size_t k = 0; k < report.records.size(); ++k) {
        const auto& r = report.records[k];
        if (k) out += ',';
        out += "{\"id\":\"" + json_escape(r.id) + "\",\"statement\":\"" + json_escape(r.statement) +
               "\",\"params\":\"" + json_escape(r.params) + "\",\"max_residual\":" + fmt17(r.max_residual) +
               ",\"tolerance\":" + (r.informational ? "null" : fmt17(r.tolerance)) +
               ",\"pass\":" + (r.pass ? "true" : "false") + "}";
    }
    out += "],\"overall_pass\":";
    out += report.overall_pass ? "true" : "false";
    out += "}\n";
    return out;
}

}  // namespace qsb
