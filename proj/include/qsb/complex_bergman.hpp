#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "qsb/holo_series.hpp"
#include "qsb/linalg.hpp"
#include "qsb/quadrature.hpp"
#include "qsb/quaternion.hpp"

namespace qsb {

using Complex = std::complex<double>;

/// Coordinates of a slice point in the plane spanned by {1, axis}; points on
/// the opposite axis fold to the conjugate coordinate.
Complex to_complex(const SlicePoint& p, const ImaginaryUnit& axis);

/// Bergman kernel of the unit disk, 1 / (pi (1 - z conj(zeta))^2).
Complex disk_kernel_closed(Complex z, Complex zeta);

/// Same, for slice points on a common slice plane; the value lies in the
/// plane of z's axis.
Quaternion disk_kernel_eval(const SlicePoint& z, const SlicePoint& zeta);

/// Smallest truncation degree (at least 64) whose series tail
/// sum_{n>N} (n+1)/pi t^n stays below eps for t = |z||zeta|.
int kernel_truncation_for(double t, double eps = 1e-12);

/// Conjugation-even and -odd components of the kernel in its second variable:
///   R(z, zeta) = sum (n+1)/pi Re(z^n) conj(zeta)^n,
///   I(z, zeta) = sum (n+1)/pi Im(z^n) conj(zeta)^n,
/// so that K = R + i I and R(z, .), I(z, .) have the C-property.
/// truncation <= 0 picks kernel_truncation_for(|z||zeta|). Evaluation is
/// refused for |z||zeta| > 0.9.
std::pair<Complex, Complex> kernel_ri_split(Complex z, Complex zeta, int truncation = 0);
std::pair<Quaternion, Quaternion> kernel_ri_split(const SlicePoint& z, const SlicePoint& zeta,
                                                  int truncation = 0);

/// r_out = integral of R(z, zeta) f(zeta), i_out = integral of I(z, zeta)
/// f(zeta) over the rule. For a C-property f this gives (Re f(z), Im f(z));
/// for the anti-C class (i Im f(z), -i Re f(z)); mixtures combine linearly.
/// The kernel series is truncated at min(64, rule.exact_degree) so the rule
/// integrates every retained term exactly.
std::pair<Quaternion, Quaternion> re_im_apply(const HoloSeries& f, const SlicePoint& z,
                                              const PlanarRule& rule);

enum class ComplexKernelKind { DiskClosedForm, NumericGram };

/// Degree-truncated kernel model K(z, zeta) = sum z^n C_nm conj(zeta)^m over
/// the monomial basis; C is diagonal (n+1)/pi for the disk and a Gram inverse
/// for a numerically constructed domain. Hermitian by construction.
struct ComplexKernel {
    ComplexKernelKind kind;
    Frame frame;
    int truncation = 0;
    SymMatrix gram;
    SymMatrix coeff;
    double gram_condition = 1.0;

    Complex eval(Complex z, Complex zeta) const;
    Quaternion eval(const SlicePoint& z, const SlicePoint& zeta) const;
};

/// The disk model at truncation N: analytic Gram pi/(n+1).
ComplexKernel disk_kernel_model(int N, const Frame& frame);

/// Gram-inverse kernel over the rule's domain: G_nm = integral of
/// conj(zeta)^n zeta^m. Requires rule exactness >= 2N; throws IllConditioned
/// when cond(G) > 1e12. For a disk rule this reproduces the disk model.
ComplexKernel numeric_kernel_build(const PlanarRule& rule, int N);

/// Bergman projection of g against the kernel model, with the coefficients of
/// its conjugation-even and -odd parts reported separately.
struct BergmanProjection {
    HoloSeries projection;
    std::vector<double> re_coeffs;
    std::vector<double> im_coeffs;
};

BergmanProjection bergman_project(const std::function<Quaternion(double, double)>& g,
                                  const PlanarRule& rule, const ComplexKernel& kernel);

/// Kernel matrices as CSV (row-major real entries).
void export_csv(const SymMatrix& m, std::ostream& os);

}  // namespace qsb
