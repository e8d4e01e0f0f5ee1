#include "qsb/slice_bergman.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace qsb {

namespace {

constexpr double kPi = std::numbers::pi;

void check_boundary(const Quaternion& q, const Quaternion& r) {
    if (q.norm() * r.norm() > 0.9)
        throw NearBoundaryError("truncated kernel refused for |q||r| > 0.9");
}

// Compensated accumulation keeps block sums accurate to a few ulps no matter
// the block length; used where Gram entries must hit 1e-12 absolute.
struct KahanQuat {
    Quaternion sum{};
    Quaternion carry{};

    void add(const Quaternion& v) {
        add_component(sum.w, carry.w, v.w);
        add_component(sum.x, carry.x, v.x);
        add_component(sum.y, carry.y, v.y);
        add_component(sum.z, carry.z, v.z);
    }
    Quaternion value() const { return sum + carry; }

  private:
    static void add_component(double& s, double& c, double v) {
        const double t = s + v;
        c += (std::abs(s) >= std::abs(v)) ? (s - t) + v : (v - t) + s;
        s = t;
    }
};

}  // namespace

Quaternion SecondKindKernel::eval(const Quaternion& q, const Quaternion& r) const {
    const Quaternion rc = quat_conj(r);
    Quaternion qp(1.0), rp(1.0), acc{};
    for (int n = 0; n <= truncation; ++n) {
        acc += ((n + 1) / kPi) * (qp * rp);
        qp = qp * q;
        rp = rp * rc;
    }
    return acc;
}

std::array<Quaternion, 4> SecondKindKernel::components(const Quaternion& q, const Quaternion& r,
                                                       const Frame& frame) const {
    const Quaternion rc = quat_conj(r);
    Quaternion qp(1.0), rp(1.0);
    std::array<Quaternion, 4> acc{};
    for (int n = 0; n <= truncation; ++n) {
        const auto comp = frame.components(rp);
        const Quaternion term = ((n + 1) / kPi) * qp;
        for (int l = 0; l < 4; ++l) acc[static_cast<std::size_t>(l)] += term * comp[static_cast<std::size_t>(l)];
        qp = qp * q;
        rp = rp * rc;
    }
    return acc;
}

Quaternion second_kind_eval(const Quaternion& q, const Quaternion& r, int N) {
    if (N < 32) throw BadOrderError("second kind kernel evaluation needs truncation N >= 32");
    check_boundary(q, r);
    return SecondKindKernel{N}.eval(q, r);
}

std::array<Quaternion, 4> second_kind_components(const Quaternion& q, const Quaternion& r,
                                                 const Frame& frame, int N) {
    if (N < 32) throw BadOrderError("second kind kernel components need truncation N >= 32");
    check_boundary(q, r);
    return SecondKindKernel{N}.components(q, r, frame);
}

FirstKindKernel gram_build(int N, const BallRule& rule) {
    if (N < 0) throw BadOrderError("gram_build needs N >= 0");
    if (rule.exact_degree < 2 * N)
        throw BadOrderError("gram_build needs a rule exact to degree 2N");

    const int n1 = N + 1;
    const std::size_t entries = static_cast<std::size_t>(n1) * static_cast<std::size_t>(n1);
    const std::size_t nn = rule.size();
    constexpr std::size_t kBlock = 8192;
    const std::size_t nblocks = (nn + kBlock - 1) / kBlock;

    // Fixed block boundaries and a fixed cross-block order keep the result
    // identical for any thread count.
    std::vector<std::vector<Quaternion>> partial(nblocks);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(nblocks); ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kBlock;
        const std::size_t hi = std::min(lo + kBlock, nn);
        std::vector<KahanQuat> acc(entries);
        std::vector<Quaternion> qp(static_cast<std::size_t>(n1)), cp(static_cast<std::size_t>(n1));
        for (std::size_t k = lo; k < hi; ++k) {
            const Quaternion& q = rule.nodes[k];
            const Quaternion qc = quat_conj(q);
            qp[0] = cp[0] = Quaternion(1.0);
            for (int n = 1; n < n1; ++n) {
                qp[static_cast<std::size_t>(n)] = qp[static_cast<std::size_t>(n - 1)] * q;
                cp[static_cast<std::size_t>(n)] = cp[static_cast<std::size_t>(n - 1)] * qc;
            }
            for (int n = 0; n < n1; ++n)
                for (int m = 0; m < n1; ++m)
                    acc[static_cast<std::size_t>(n) * n1 + m].add(
                        rule.weights[k] * (cp[static_cast<std::size_t>(n)] * qp[static_cast<std::size_t>(m)]));
        }
        auto& out = partial[static_cast<std::size_t>(b)];
        out.resize(entries);
        for (std::size_t e = 0; e < entries; ++e) out[e] = acc[e].value();
    }
    std::vector<Quaternion> total(entries);
    for (std::size_t b = 0; b < nblocks; ++b)
        for (std::size_t e = 0; e < entries; ++e) total[e] += partial[b][e];

    double max_imag = 0.0;
    for (const auto& v : total) max_imag = std::max(max_imag, v.vec_norm());
    if (max_imag > 1e-10)
        throw std::runtime_error(
            "gram_build: Gram entries have imaginary parts above 1e-10; the rule is not axially symmetric");

    FirstKindKernel kernel{N, SymMatrix(n1), SymMatrix(n1), rule, 0.0};
    for (int n = 0; n < n1; ++n)
        for (int m = 0; m <= n; ++m) {
            const double v = 0.5 * (total[static_cast<std::size_t>(n) * n1 + m].w +
                                    total[static_cast<std::size_t>(m) * n1 + n].w);
            kernel.gram.at(n, m) = kernel.gram.at(m, n) = v;
        }
    kernel.gram_condition = condition_number(kernel.gram);
    if (kernel.gram_condition > 1e12)
        throw IllConditionedError("gram_build: Gram condition number exceeds 1e12");
    kernel.coeff = spd_inverse(kernel.gram);
    return kernel;
}

Quaternion FirstKindKernel::eval(const Quaternion& q, const Quaternion& r) const {
    if (q.norm() >= 1.0 || r.norm() >= 1.0)
        throw OutOfDomainError("first kind kernel arguments must lie in the open unit ball");
    const int n1 = truncation + 1;
    std::vector<Quaternion> cp(static_cast<std::size_t>(n1));
    cp[0] = Quaternion(1.0);
    const Quaternion rc = quat_conj(r);
    for (int m = 1; m < n1; ++m) cp[static_cast<std::size_t>(m)] = cp[static_cast<std::size_t>(m - 1)] * rc;
    Quaternion acc{}, qp(1.0);
    for (int n = 0; n < n1; ++n) {
        Quaternion row{};
        for (int m = 0; m < n1; ++m) row += coeff.at(n, m) * cp[static_cast<std::size_t>(m)];
        acc += qp * row;
        qp = qp * q;
    }
    return acc;
}

Quaternion first_kind_eval(const FirstKindKernel& kernel, const Quaternion& q, const Quaternion& r) {
    return kernel.eval(q, r);
}

Quaternion slice_reproduce(const SliceSeries& f, const Quaternion& q, const Frame& frame,
                           const PlanarRule& rule, int N) {
    if (f.degree() > N) throw DegreeTooHighError("slice_reproduce needs deg(f) <= N");
    if (rule.exact_degree < std::max(f.degree(), 0) + N)
        throw BadOrderError("slice_reproduce needs rule exactness >= deg(f) + N");
    if (q.norm() >= 1.0) throw OutOfDomainError("slice_reproduce evaluated outside the ball");
    const SecondKindKernel kernel{N};
    const HoloSeries restriction = restrict_Q(f, frame);
    return integrate_slice(
        [&](double px, double py) {
            const Quaternion zeta = Quaternion(px) + py * frame.i.value();
            return kernel.eval(q, zeta) * restriction.eval(px, py);
        },
        rule);
}

std::array<Quaternion, 4> component_integrals(const SliceSeries& f, const Quaternion& q,
                                              const Frame& frame, const PlanarRule& rule, int N) {
    if (f.degree() > N) throw DegreeTooHighError("component_integrals needs deg(f) <= N");
    if (rule.exact_degree < std::max(f.degree(), 0) + N)
        throw BadOrderError("component_integrals needs rule exactness >= deg(f) + N");
    const SecondKindKernel kernel{N};
    const HoloSeries restriction = restrict_Q(f, frame);
    const std::size_t nn = rule.size();
    std::vector<Quaternion> terms(4 * nn);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(nn); ++k) {
        const std::size_t ks = static_cast<std::size_t>(k);
        const Quaternion zeta = rule.point(ks);
        const auto comps = kernel.components(q, zeta, frame);
        const Quaternion fk = restriction.eval(rule.xs[ks], rule.ys[ks]);
        for (int l = 0; l < 4; ++l)
            terms[static_cast<std::size_t>(l) * nn + ks] = rule.weights[ks] * (comps[static_cast<std::size_t>(l)] * fk);
    }
    std::array<Quaternion, 4> out{};
    for (int l = 0; l < 4; ++l)
        out[static_cast<std::size_t>(l)] = detail::pairwise_sum(&terms[static_cast<std::size_t>(l) * nn], nn);
    return out;
}

double kernel_consistency(const FirstKindKernel& kernel, int N, const BallRule& rule,
                          const Quaternion& zeta, const Quaternion& q) {
    if (zeta.norm() > 0.7 || q.norm() > 0.7)
        throw NearBoundaryError("kernel_consistency requires |zeta|, |q| <= 0.7");
    const SecondKindKernel second{N};
    const Quaternion lhs = second.eval(zeta, q);
    const Quaternion rhs = integrate_ball(
        [&](const Quaternion& r) { return kernel.eval(zeta, r) * second.eval(r, q); }, rule);
    return (lhs - rhs).norm();
}

SliceSeries m_i_apply(const FirstKindKernel& kernel, const SliceSeries& f, const Frame& frame,
                      const PlanarRule& rule) {
    (void)frame;
    if (f.degree() > kernel.truncation)
        throw DegreeTooHighError("m_i_apply needs deg(f) <= kernel truncation");
    if (rule.exact_degree < std::max(f.degree(), 0) + kernel.truncation)
        throw BadOrderError("m_i_apply needs rule exactness >= deg(f) + kernel truncation");
    const int n1 = kernel.truncation + 1;
    SliceSeries out{std::vector<Quaternion>(static_cast<std::size_t>(n1)), f.radius};
    for (int n = 0; n < n1; ++n) {
        Quaternion acc{};
        for (int m = 0; m < n1 && m < static_cast<int>(f.coeffs.size()); ++m)
            acc += (kernel.coeff.at(n, m) * kPi / (m + 1)) * f.coeffs[static_cast<std::size_t>(m)];
        out.coeffs[static_cast<std::size_t>(n)] = acc;
    }
    return out;
}

Quaternion m_i_apply_at(const FirstKindKernel& kernel, const SliceSeries& f, const Frame& frame,
                        const PlanarRule& rule, const Quaternion& q) {
    if (f.degree() > kernel.truncation)
        throw DegreeTooHighError("m_i_apply_at needs deg(f) <= kernel truncation");
    if (rule.exact_degree < std::max(f.degree(), 0) + kernel.truncation)
        throw BadOrderError("m_i_apply_at needs rule exactness >= deg(f) + kernel truncation");
    const HoloSeries restriction = restrict_Q(f, frame);
    return integrate_slice(
        [&](double px, double py) {
            const Quaternion zeta = Quaternion(px) + py * frame.i.value();
            return kernel.eval(q, zeta) * restriction.eval(px, py);
        },
        rule);
}

Quaternion two_stage_reproduce(const SliceSeries& f, const Quaternion& q,
                               const FirstKindKernel& kernel, const Frame& frame,
                               const PlanarRule& prule, const BallRule& brule) {
    if (f.degree() > kernel.truncation)
        throw DegreeTooHighError("two_stage_reproduce needs deg(f) <= kernel truncation");
    if (brule.exact_degree < 2 * kernel.truncation)
        throw BadOrderError("two_stage_reproduce needs ball rule exactness >= 2N");
    if (q.norm() >= 1.0) throw OutOfDomainError("two_stage_reproduce evaluated outside the ball");
    const SliceSeries m = m_i_apply(kernel, f, frame, prule);
    const SecondKindKernel second{kernel.truncation};
    return integrate_ball([&](const Quaternion& r) { return second.eval(q, r) * m.eval(r); }, brule);
}

InnerPair mi_adjoint_identity(const SliceSeries& f, const SliceSeries& g,
                              const FirstKindKernel& kernel, const Frame& frame,
                              const PlanarRule& prule, const BallRule& brule) {
    if (f.degree() > kernel.truncation || g.degree() > kernel.truncation)
        throw DegreeTooHighError("mi_adjoint_identity needs degrees <= kernel truncation");
    if (prule.exact_degree < std::max(f.degree(), 0) + std::max(g.degree(), 0))
        throw BadOrderError("mi_adjoint_identity needs slice rule exactness >= deg(f) + deg(g)");
    if (brule.exact_degree < 2 * kernel.truncation)
        throw BadOrderError("mi_adjoint_identity needs ball rule exactness >= 2N");
    const SliceSeries m = m_i_apply(kernel, f, frame, prule);
    const HoloSeries fr = restrict_Q(f, frame), gr = restrict_Q(g, frame);
    InnerPair out;
    out.lhs = integrate_ball(
        [&](const Quaternion& r) { return quat_conj(m.eval(r)) * g.eval(r); }, brule);
    out.rhs = integrate_slice(
        [&](double px, double py) { return quat_conj(fr.eval(px, py)) * gr.eval(px, py); }, prule);
    return out;
}

}  // namespace qsb
