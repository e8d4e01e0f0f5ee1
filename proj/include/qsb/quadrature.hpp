#pragma once

#include <cstddef>
#include <iosfwd>
#include <vector>

#include "qsb/quaternion.hpp"

namespace qsb {

/// Gauss-Legendre nodes and weights on [-1, 1]; exact for degree 2n - 1.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// Planar quadrature for the area measure on a Z-invariant domain of the
/// slice plane C(frame.i). Nodes are stored so that conjugate pairs are
/// adjacent and mirror each other bitwise: sums of conjugation-symmetric
/// integrands are exactly real at quadrature level, not just up to error.
struct PlanarRule {
    Frame frame;
    std::vector<double> xs;
    std::vector<double> ys;
    std::vector<double> weights;
    int exact_degree = 0;

    std::size_t size() const { return weights.size(); }
    Quaternion point(std::size_t k) const { return Quaternion(xs[k]) + ys[k] * frame.i.value(); }
    double weight_sum() const;
};

/// Volume quadrature on the unit 4-ball, closed under q -> conj(q) with
/// adjacent conjugate pairs.
struct BallRule {
    std::vector<Quaternion> nodes;
    std::vector<double> weights;
    int exact_degree = 0;

    std::size_t size() const { return weights.size(); }
    double weight_sum() const;
};

/// Gauss-Legendre in r^2 times a uniform angular grid on the unit disk.
/// Weights sum to pi; moments of conj(z)^a z^b are exact for
/// a + b <= min(4 n_radial - 2, n_angular - 1). n_angular must be even.
PlanarRule build_disk_rule(int n_radial, int n_angular, const Frame& frame);

/// Tensor Gauss rule on the axis-symmetric rectangle
/// [-half_width, half_width] x [-half_height, half_height].
PlanarRule build_rect_rule(int nx, int ny, const Frame& frame, double half_width = 1.0,
                           double half_height = 0.5);

/// Product rule for d(mu) = y^2 d(sigma_S2) dx dy: Gauss-Legendre radius times
/// a uniform planar angle times a theta-phi sphere grid closed under I -> -I.
/// Exact for polynomial degree min(2 n_radial - 4, n_angular - 3, n_sphere - 1).
BallRule build_ball_rule(int n_radial, int n_angular, int n_sphere);

namespace detail {

/// Fixed-shape pairwise reduction; depends only on the length, so totals are
/// bit-identical no matter how the terms were produced. Terms at (2k, 2k+1)
/// are added first and splits land on even offsets: conjugate node pairs
/// cancel their imaginary parts exactly, which keeps integrals of
/// conjugation-symmetric integrands real to the last bit.
inline Quaternion pairwise_sum(const Quaternion* p, std::size_t n) {
    if (n <= 8) {
        Quaternion s{};
        std::size_t k = 0;
        for (; k + 1 < n; k += 2) s += p[k] + p[k + 1];
        if (k < n) s += p[k];
        return s;
    }
    const std::size_t half = (n / 2 + 1) & ~std::size_t(1);
    return pairwise_sum(p, half) + pairwise_sum(p + half, n - half);
}

}  // namespace detail

/// Quadrature sum of w_k f(x_k, y_k). Node evaluations run in parallel; the
/// reduction tree is fixed, so results match the serial path bit for bit.
template <typename F>
Quaternion integrate_slice(F&& f, const PlanarRule& rule) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(rule.size());
    std::vector<Quaternion> terms(rule.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < n; ++k)
        terms[k] = rule.weights[k] * f(rule.xs[k], rule.ys[k]);
    return detail::pairwise_sum(terms.data(), terms.size());
}

/// Serial reference for integrate_slice; kept for testing the parallel path.
template <typename F>
Quaternion integrate_slice_serial(F&& f, const PlanarRule& rule) {
    std::vector<Quaternion> terms(rule.size());
    for (std::size_t k = 0; k < rule.size(); ++k)
        terms[k] = rule.weights[k] * f(rule.xs[k], rule.ys[k]);
    return detail::pairwise_sum(terms.data(), terms.size());
}

template <typename F>
Quaternion integrate_ball(F&& f, const BallRule& rule) {
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(rule.size());
    std::vector<Quaternion> terms(rule.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t k = 0; k < n; ++k)
        terms[k] = rule.weights[k] * f(rule.nodes[k]);
    return detail::pairwise_sum(terms.data(), terms.size());
}

/// Serial reference for integrate_ball.
template <typename F>
Quaternion integrate_ball_serial(F&& f, const BallRule& rule) {
    std::vector<Quaternion> terms(rule.size());
    for (std::size_t k = 0; k < rule.size(); ++k)
        terms[k] = rule.weights[k] * f(rule.nodes[k]);
    return detail::pairwise_sum(terms.data(), terms.size());
}

/// One row per node: x, y, I components, weight.
void export_csv(const PlanarRule& rule, std::ostream& os);
void export_csv(const BallRule& rule, std::ostream& os);

}  // namespace qsb
