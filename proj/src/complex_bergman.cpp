#include "qsb/complex_bergman.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace qsb {

namespace {

constexpr double kPi = std::numbers::pi;

Quaternion assemble(const Frame& frame, Complex v) {
    return Quaternion(v.real()) + v.imag() * frame.i.value();
}

Complex project_to_plane(const Frame& frame, const Quaternion& q) {
    const auto c = frame.components(q);
    return {c[0], c[1]};
}

}  // namespace

Complex to_complex(const SlicePoint& p, const ImaginaryUnit& axis) {
    const double align = dot4(p.axis.value(), axis.value());
    if (std::abs(std::abs(align) - 1.0) > 1e-10)
        throw OutOfDomainError("slice point does not lie on the requested slice plane");
    return {p.x, align >= 0.0 ? p.y : -p.y};
}

Complex disk_kernel_closed(Complex z, Complex zeta) {
    if (std::abs(z) >= 1.0 || std::abs(zeta) >= 1.0)
        throw OutOfDomainError("disk kernel arguments must lie in the open unit disk");
    const Complex d = 1.0 - z * std::conj(zeta);
    return 1.0 / (kPi * d * d);
}

Quaternion disk_kernel_eval(const SlicePoint& z, const SlicePoint& zeta) {
    const Complex zc = to_complex(z, z.axis);
    const Complex wc = to_complex(zeta, z.axis);
    const Complex k = disk_kernel_closed(zc, wc);
    return Quaternion(k.real()) + k.imag() * z.axis.value();
}

int kernel_truncation_for(double t, double eps) {
    if (t < 0.0 || t > 0.9) throw NearBoundaryError("kernel truncation control requires |z||zeta| <= 0.9");
    int n = 64;
    auto tail = [t](int N) {
        return std::pow(t, N + 1) * ((N + 2) - (N + 1) * t) / ((1.0 - t) * (1.0 - t)) / kPi;
    };
    while (tail(n) > eps && n < 4096) n *= 2;
    return n;
}

std::pair<Complex, Complex> kernel_ri_split(Complex z, Complex zeta, int truncation) {
    const double t = std::abs(z) * std::abs(zeta);
    if (t > 0.9) throw NearBoundaryError("kernel R/I series refused for |z||zeta| > 0.9");
    const int N = truncation > 0 ? truncation : kernel_truncation_for(t);
    Complex zp = 1.0, cp = 1.0;
    Complex r = 0.0, im = 0.0;
    for (int n = 0; n <= N; ++n) {
        const double scale = (n + 1) / kPi;
        r += scale * zp.real() * cp;
        im += scale * zp.imag() * cp;
        zp *= z;
        cp *= std::conj(zeta);
    }
    return {r, im};
}

std::pair<Quaternion, Quaternion> kernel_ri_split(const SlicePoint& z, const SlicePoint& zeta,
                                                  int truncation) {
    const auto [r, im] = kernel_ri_split(to_complex(z, z.axis), to_complex(zeta, z.axis), truncation);
    const Frame fr = complete_frame(z.axis);
    return {assemble(fr, r), assemble(fr, im)};
}

std::pair<Quaternion, Quaternion> re_im_apply(const HoloSeries& f, const SlicePoint& z,
                                              const PlanarRule& rule) {
    if (!f.is_slice_valued()) throw NotSliceValuedError("re_im_apply needs a slice-valued series");
    const Complex zc = to_complex(z, rule.frame.i);
    if (std::abs(zc) >= 1.0) throw OutOfDomainError("re_im_apply evaluated outside the disk");
    if (rule.exact_degree < 2 * std::max(f.degree(), 0))
        throw BadOrderError("re_im_apply needs a rule exact to twice the series degree");

    const int N = std::min(64, rule.exact_degree);
    std::vector<double> u(static_cast<std::size_t>(N) + 1), v(static_cast<std::size_t>(N) + 1);
    Complex zp = 1.0;
    for (int n = 0; n <= N; ++n) {
        const double scale = (n + 1) / kPi;
        u[static_cast<std::size_t>(n)] = scale * zp.real();
        v[static_cast<std::size_t>(n)] = scale * zp.imag();
        zp *= zc;
    }

    auto horner = [N](const std::vector<double>& c, Complex w) {
        Complex acc = c[static_cast<std::size_t>(N)];
        for (int n = N - 1; n >= 0; --n) acc = w * acc + c[static_cast<std::size_t>(n)];
        return acc;
    };
    auto r_term = [&](double px, double py) {
        const Complex cz = std::conj(Complex{px, py});
        return assemble(rule.frame, horner(u, cz)) * f.eval(px, py);
    };
    auto i_term = [&](double px, double py) {
        const Complex cz = std::conj(Complex{px, py});
        return assemble(rule.frame, horner(v, cz)) * f.eval(px, py);
    };
    return {integrate_slice(r_term, rule), integrate_slice(i_term, rule)};
}

Complex ComplexKernel::eval(Complex z, Complex zeta) const {
    const int n1 = truncation + 1;
    std::vector<Complex> cp(static_cast<std::size_t>(n1));
    cp[0] = 1.0;
    for (int m = 1; m < n1; ++m) cp[static_cast<std::size_t>(m)] = cp[static_cast<std::size_t>(m - 1)] * std::conj(zeta);
    Complex acc = 0.0, zp = 1.0;
    for (int n = 0; n < n1; ++n) {
        Complex row = 0.0;
        for (int m = 0; m < n1; ++m) row += coeff.at(n, m) * cp[static_cast<std::size_t>(m)];
        acc += zp * row;
        zp *= z;
    }
    return acc;
}

Quaternion ComplexKernel::eval(const SlicePoint& z, const SlicePoint& zeta) const {
    return assemble(frame, eval(to_complex(z, frame.i), to_complex(zeta, frame.i)));
}

ComplexKernel disk_kernel_model(int N, const Frame& frame) {
    ComplexKernel k{ComplexKernelKind::DiskClosedForm, frame, N, SymMatrix(N + 1), SymMatrix(N + 1), 1.0};
    for (int n = 0; n <= N; ++n) {
        k.gram.at(n, n) = kPi / (n + 1);
        k.coeff.at(n, n) = (n + 1) / kPi;
    }
    k.gram_condition = (N + 1);
    return k;
}

ComplexKernel numeric_kernel_build(const PlanarRule& rule, int N) {
    if (rule.exact_degree < 2 * N)
        throw BadOrderError("numeric kernel needs a rule exact to degree 2N");
    const int n1 = N + 1;
    ComplexKernel k{ComplexKernelKind::NumericGram, rule.frame, N, SymMatrix(n1), SymMatrix(n1), 0.0};

    // Moments of every conj(zeta)^n zeta^m pair in one pass over the nodes.
    std::vector<Complex> acc(static_cast<std::size_t>(n1) * static_cast<std::size_t>(n1), 0.0);
    std::vector<Complex> pw(static_cast<std::size_t>(n1));
    for (std::size_t knode = 0; knode < rule.size(); ++knode) {
        const Complex zeta{rule.xs[knode], rule.ys[knode]};
        pw[0] = 1.0;
        for (int m = 1; m < n1; ++m) pw[static_cast<std::size_t>(m)] = pw[static_cast<std::size_t>(m - 1)] * zeta;
        for (int n = 0; n < n1; ++n)
            for (int m = 0; m < n1; ++m)
                acc[static_cast<std::size_t>(n) * n1 + m] +=
                    rule.weights[knode] * std::conj(pw[static_cast<std::size_t>(n)]) * pw[static_cast<std::size_t>(m)];
    }
    double max_imag = 0.0;
    for (int n = 0; n < n1; ++n)
        for (int m = 0; m < n1; ++m)
            max_imag = std::max(max_imag, std::abs(acc[static_cast<std::size_t>(n) * n1 + m].imag()));
    if (max_imag > 1e-10)
        throw std::runtime_error("numeric_kernel_build: Gram entries are not real; rule is not Z-symmetric");
    for (int n = 0; n < n1; ++n)
        for (int m = 0; m <= n; ++m) {
            const double v = 0.5 * (acc[static_cast<std::size_t>(n) * n1 + m].real() +
                                    acc[static_cast<std::size_t>(m) * n1 + n].real());
            k.gram.at(n, m) = k.gram.at(m, n) = v;
        }
    k.gram_condition = condition_number(k.gram);
    if (k.gram_condition > 1e12)
        throw IllConditionedError("numeric_kernel_build: Gram condition number exceeds 1e12");
    k.coeff = spd_inverse(k.gram);
    return k;
}

BergmanProjection bergman_project(const std::function<Quaternion(double, double)>& g,
                                  const PlanarRule& rule, const ComplexKernel& kernel) {
    const int n1 = kernel.truncation + 1;
    const std::size_t nn = rule.size();

    // One pass over the nodes fills the term buffers of every moment
    // integral; each buffer is then reduced in the fixed pairwise order.
    std::vector<Quaternion> terms(static_cast<std::size_t>(n1) * nn);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(nn); ++k) {
        const std::size_t ks = static_cast<std::size_t>(k);
        const Complex czeta = std::conj(Complex{rule.xs[ks], rule.ys[ks]});
        const Quaternion gk = g(rule.xs[ks], rule.ys[ks]);
        Complex cp = 1.0;
        for (int n = 0; n < n1; ++n) {
            terms[static_cast<std::size_t>(n) * nn + ks] = rule.weights[ks] * (assemble(rule.frame, cp) * gk);
            cp *= czeta;
        }
    }
    std::vector<Complex> moments(static_cast<std::size_t>(n1));
    for (int n = 0; n < n1; ++n)
        moments[static_cast<std::size_t>(n)] = project_to_plane(
            rule.frame, detail::pairwise_sum(&terms[static_cast<std::size_t>(n) * nn], nn));
    BergmanProjection out{HoloSeries{rule.frame, std::vector<Quaternion>(static_cast<std::size_t>(n1)), 1.0},
                          std::vector<double>(static_cast<std::size_t>(n1)),
                          std::vector<double>(static_cast<std::size_t>(n1))};
    for (int n = 0; n < n1; ++n) {
        Complex p = 0.0;
        for (int m = 0; m < n1; ++m) p += kernel.coeff.at(n, m) * moments[static_cast<std::size_t>(m)];
        out.projection.coeffs[static_cast<std::size_t>(n)] = assemble(rule.frame, p);
        out.re_coeffs[static_cast<std::size_t>(n)] = p.real();
        out.im_coeffs[static_cast<std::size_t>(n)] = p.imag();
    }
    return out;
}

void export_csv(const SymMatrix& m, std::ostream& os) {
    char buf[32];
    for (int r = 0; r < m.n; ++r) {
        for (int c = 0; c < m.n; ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", m.at(r, c));
            os << buf << (c + 1 == m.n ? '\n' : ',');
        }
    }
}

}  // namespace qsb
