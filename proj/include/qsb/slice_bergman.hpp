#pragma once

#include <array>
#include <utility>

#include "qsb/linalg.hpp"
#include "qsb/quadrature.hpp"
#include "qsb/slice_series.hpp"

namespace qsb {

/// Degree-truncated Bergman kernel of the second kind on the unit ball,
///   K(q, r) = (1/pi) sum_{n<=N} (n+1) q^n conj(r)^n.
/// Restricted to a slice this is the complex disk kernel.
struct SecondKindKernel {
    int truncation = 32;

    Quaternion eval(const Quaternion& q, const Quaternion& r) const;

    /// Intrinsic components of the q-series of K(., r): component l has
    /// coefficients (n+1)/pi times the frame component l of conj(r)^n, so
    /// K = K0 + K1 i + K2 j + K3 ij.
    std::array<Quaternion, 4> components(const Quaternion& q, const Quaternion& r,
                                         const Frame& frame) const;
};

/// Pointwise kernel value with truncation control: requires N >= 32 and
/// refuses |q||r| > 0.9 (NearBoundary), where the series tail is not small.
Quaternion second_kind_eval(const Quaternion& q, const Quaternion& r, int N);

std::array<Quaternion, 4> second_kind_components(const Quaternion& q, const Quaternion& r,
                                                 const Frame& frame, int N);

/// Bergman kernel of the first kind as a Gram-inverse model:
///   B(q, r) = sum q^n C_nm conj(r)^m with C = G^{-1},
///   G_nm = integral over the ball of conj(q)^n q^m.
/// G is real symmetric and banded (|n-m| in {0,2}); B is hermitian, slice
/// regular in q and right anti-slice regular in r.
struct FirstKindKernel {
    int truncation = 0;
    SymMatrix gram;
    SymMatrix coeff;
    BallRule rule;
    double gram_condition = 0.0;

    Quaternion eval(const Quaternion& q, const Quaternion& r) const;
};

/// Builds the Gram model by quadrature. Requires rule exactness >= 2N; Gram
/// entries are asserted real (axial symmetry makes realness a theorem, so a
/// violation aborts) and the inverse is refused above condition 1e12.
FirstKindKernel gram_build(int N, const BallRule& rule);

Quaternion first_kind_eval(const FirstKindKernel& kernel, const Quaternion& q, const Quaternion& r);

/// f(q) from a single-slice integral of the second-kind kernel:
///   f(q) = integral over the slice disk of K_N(q, zeta) f(zeta) d sigma.
/// Exact for deg(f) <= N with rule exactness >= deg(f) + N, including q off
/// the slice plane.
Quaternion slice_reproduce(const SliceSeries& f, const Quaternion& q, const Frame& frame,
                           const PlanarRule& rule, int N);

/// The component-kernel integrals, integral of K^l(q, zeta) f(zeta) d sigma
/// for l = 0..3; reported for comparison against the frame components of the
/// value f(q). See the verification suite for the measured residual.
std::array<Quaternion, 4> component_integrals(const SliceSeries& f, const Quaternion& q,
                                              const Frame& frame, const PlanarRule& rule, int N);

/// Residual |K_N(zeta, q) - integral of B(zeta, r) K_N(r, q) d mu|; zero at
/// matched truncation, order-one when the truncations disagree.
double kernel_consistency(const FirstKindKernel& kernel, int N, const BallRule& rule,
                          const Quaternion& zeta, const Quaternion& q);

/// M[f](q) = integral over the slice disk of B(q, zeta) f(zeta) d sigma,
/// computed by exact coefficient algebra: output coefficients C D a with
/// D = diag(pi/(m+1)) the disk moments. Slice regular in q.
SliceSeries m_i_apply(const FirstKindKernel& kernel, const SliceSeries& f, const Frame& frame,
                      const PlanarRule& rule);

/// Quadrature cross-check of m_i_apply at one point.
Quaternion m_i_apply_at(const FirstKindKernel& kernel, const SliceSeries& f, const Frame& frame,
                        const PlanarRule& rule, const Quaternion& q);

/// f(q) = integral over the ball of K_N(q, r) M[f](r) d mu at matched
/// truncation N = kernel.truncation.
Quaternion two_stage_reproduce(const SliceSeries& f, const Quaternion& q,
                               const FirstKindKernel& kernel, const Frame& frame,
                               const PlanarRule& prule, const BallRule& brule);

/// Both sides of the volume/slice inner-product identity
///   integral conj(M[f]) g d mu = integral conj(Q f) Q g d sigma.
struct InnerPair {
    Quaternion lhs;
    Quaternion rhs;
};

InnerPair mi_adjoint_identity(const SliceSeries& f, const SliceSeries& g,
                              const FirstKindKernel& kernel, const Frame& frame,
                              const PlanarRule& prule, const BallRule& brule);

}  // namespace qsb
