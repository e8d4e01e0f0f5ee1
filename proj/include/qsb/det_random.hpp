#pragma once

#include <cstdint>

#include "qsb/holo_series.hpp"
#include "qsb/slice_series.hpp"

namespace qsb {

/// Seeded splitmix64 stream with the sampling helpers the verification
/// suites need. Self-contained so reports are byte-stable across standard
/// library implementations.
class DetRng {
  public:
    explicit DetRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Uniform in the closed ball of the given radius (rejection from the cube).
    Quaternion quaternion_in_ball(double radius) {
        for (;;) {
            Quaternion q{uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
            if (q.norm_sq() <= 1.0) return radius * q;
        }
    }

    ImaginaryUnit unit_imaginary() {
        for (;;) {
            Quaternion v{0.0, uniform(-1.0, 1.0), uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
            const double n = v.vec_norm();
            if (n > 0.1 && n <= 1.0) return ImaginaryUnit::from_vector(v);
        }
    }

    Frame frame() { return complete_frame(unit_imaginary()); }

    /// Nonreal point in the open ball.
    Quaternion nonreal_in_ball(double radius) {
        for (;;) {
            Quaternion q = quaternion_in_ball(radius);
            if (q.vec_norm() > 1e-3 && q.norm() < radius) return q;
        }
    }

    SliceSeries slice_series(int degree, double coeff_scale = 1.0) {
        SliceSeries f;
        f.coeffs.resize(static_cast<std::size_t>(degree) + 1);
        for (auto& c : f.coeffs) c = coeff_scale * quaternion_in_ball(1.0);
        return f;
    }

    SliceSeries intrinsic_series(int degree) {
        SliceSeries f;
        f.coeffs.resize(static_cast<std::size_t>(degree) + 1);
        for (auto& c : f.coeffs) c = Quaternion(uniform(-1.0, 1.0));
        return f;
    }

    HoloSeries holo_slice_valued(int degree, const Frame& fr) {
        HoloSeries f{fr, {}, 1.0};
        f.coeffs.resize(static_cast<std::size_t>(degree) + 1);
        for (auto& c : f.coeffs)
            c = Quaternion(uniform(-1.0, 1.0)) + uniform(-1.0, 1.0) * fr.i.value();
        return f;
    }

    HoloSeries holo_real_coeff(int degree, const Frame& fr) {
        HoloSeries f{fr, {}, 1.0};
        f.coeffs.resize(static_cast<std::size_t>(degree) + 1);
        for (auto& c : f.coeffs) c = Quaternion(uniform(-1.0, 1.0));
        return f;
    }

    HoloSeries holo_anti_coeff(int degree, const Frame& fr) {
        HoloSeries f{fr, {}, 1.0};
        f.coeffs.resize(static_cast<std::size_t>(degree) + 1);
        for (auto& c : f.coeffs) c = uniform(-1.0, 1.0) * fr.i.value();
        return f;
    }

  private:
    std::uint64_t state_;
};

}  // namespace qsb
