#pragma once

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "qsb/holo_series.hpp"
#include "qsb/quaternion.hpp"

namespace qsb {

enum class IntrinsicClass { Intrinsic, AntiIntrinsic, Neither };

/// Truncated power series F(q) = sum_n q^n a_n on the ball of the given
/// radius; the representation of slice regular functions at desk scale.
struct SliceSeries {
    std::vector<Quaternion> coeffs;
    double radius = 1.0;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double coeff_scale() const;

    Quaternion eval(const Quaternion& q) const;
};

SliceSeries operator+(const SliceSeries& a, const SliceSeries& b);

/// Slice extension by the Representation Formula,
///   P[f](x + I y) = ((1 + I i) f(x - y i) + (1 - I i) f(x + y i)) / 2,
/// evaluated pointwise. Real points take the continuous limit f(x).
Quaternion extend_P(const HoloSeries& f, const Quaternion& at);

/// Restriction to the slice plane C(frame.i): same coefficients reinterpreted.
HoloSeries restrict_Q(const SliceSeries& F, const Frame& frame);

/// Coefficient-level slice extension; exact inverse of restrict_Q.
SliceSeries slice_from_holo(const HoloSeries& f);

/// Splitting into f1 + f2 j with f1, f2 slice-valued on C(frame.i).
std::pair<HoloSeries, HoloSeries> split_basis(const SliceSeries& F, const Frame& frame);

/// Refined splitting into h0 + h1 i + h2 j + h3 ij with real coefficients.
std::array<HoloSeries, 4> refined_split(const SliceSeries& F, const Frame& frame);

/// Intrinsic decomposition F = F0 + F1 i + F2 j + F3 ij, each F_l with real
/// coefficients.
std::array<SliceSeries, 4> fourfold_decompose(const SliceSeries& F, const Frame& frame);

/// The even/odd pair of F(x + I y) = alpha(x, y) + I beta(x, y); evaluators
/// are defined for x^2 + y^2 < radius^2 and beta vanishes at y = 0 exactly.
struct AlphaBeta {
    std::function<Quaternion(double, double)> alpha;
    std::function<Quaternion(double, double)> beta;
    double radius = 1.0;
};

AlphaBeta alpha_beta_of(const SliceSeries& F);

/// Central finite-difference residuals of the Cauchy-Riemann system
/// (dx alpha - dy beta, dy alpha + dx beta) at (x, y) with step h.
std::pair<Quaternion, Quaternion> cr_residual(const AlphaBeta& ab, double x, double y, double h = 1e-5);

/// Coefficient test: Intrinsic iff all real, AntiIntrinsic iff all purely
/// imaginary (pointwise this is F(conj q) = conj(F(q)) and its negation).
IntrinsicClass is_intrinsic(const SliceSeries& F, double rel_tol = 1e-12);

}  // namespace qsb
