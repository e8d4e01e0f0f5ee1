#pragma once

#include <utility>
#include <vector>

#include "qsb/quaternion.hpp"

namespace qsb {

enum class Classification { C, AntiC, Neither };

/// Truncated power series f(z) = sum_n z^n c_n on the slice plane C(frame.i),
/// defined on the open disk of the given radius.
///
/// Coefficients are quaternions: a series is slice-valued when every c_n lies
/// in span{1, i}, and H-valued otherwise (the restriction of a slice regular
/// function splits as Hol + Hol j). Powers multiply from the left so that the
/// coefficients of a restriction match the coefficients of the slice series.
struct HoloSeries {
    Frame frame;
    std::vector<Quaternion> coeffs;
    double radius = 1.0;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    /// Largest coefficient magnitude; the scale for coefficient tolerances.
    double coeff_scale() const;

    /// Splits c_n = (a + b i) + (c + d i) j in the series frame and reports
    /// the residual outside span{1, i}.
    bool is_slice_valued(double rel_tol = 1e-12) const;

    /// Evaluates at z = x + y i on the slice plane, y of either sign.
    Quaternion eval(double px, double py) const;

    /// Evaluates at a slice point; the point's axis must be +/- frame.i.
    Quaternion eval(const SlicePoint& z) const;
};

/// z -> conj(f(conj z)), computed coefficientwise. Involution.
HoloSeries conj_reflect(const HoloSeries& f);

/// Unique split f = f1 + i f2 with f1, f2 real-coefficient.
std::pair<HoloSeries, HoloSeries> c_pair_decompose(const HoloSeries& f);

/// Unique split f = fc + fa with fc real-coefficient and fa purely imaginary.
std::pair<HoloSeries, HoloSeries> c_anti_decompose(const HoloSeries& f);

/// C iff all coefficients real, AntiC iff all purely imaginary, relative to
/// the series scale.
Classification classify(const HoloSeries& f, double rel_tol = 1e-12);

/// f -> i f (left multiplication by frame.i), the isomorphism between the
/// C and anti-C classes.
HoloSeries i_times(const HoloSeries& f);

}  // namespace qsb
