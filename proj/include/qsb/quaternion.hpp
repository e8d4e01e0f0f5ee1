#pragma once

#include <array>
#include <cmath>
#include <iosfwd>

#include "qsb/errors.hpp"

namespace qsb {

/// Quaternion w + x e1 + y e2 + z e3 over doubles.
///
/// Multiplication follows the Hamilton table (e1 e2 = e3). Values are plain
/// aggregates; all operations are pure.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
    constexpr explicit Quaternion(double real) : w(real) {}

    constexpr double real() const { return w; }
    constexpr Quaternion vec() const { return {0.0, x, y, z}; }

    double vec_norm() const { return std::sqrt(x * x + y * y + z * z); }
    double norm_sq() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }

    bool is_finite() const {
        return std::isfinite(w) && std::isfinite(x) && std::isfinite(y) && std::isfinite(z);
    }

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

    constexpr Quaternion& operator+=(const Quaternion& r) {
        w += r.w; x += r.x; y += r.y; z += r.z;
        return *this;
    }
    constexpr Quaternion& operator-=(const Quaternion& r) {
        w -= r.w; x -= r.x; y -= r.y; z -= r.z;
        return *this;
    }
    constexpr Quaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }
    constexpr Quaternion& operator/=(double s) {
        w /= s; x /= s; y /= s; z /= s;
        return *this;
    }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {
        a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
        a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
        a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
        a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
    };
}

constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
}

inline Quaternion quat_conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }

inline Quaternion quat_mul(const Quaternion& a, const Quaternion& b) { return a * b; }

/// Euclidean inner product of R^4.
constexpr double dot4(const Quaternion& a, const Quaternion& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline Quaternion quat_pow(Quaternion q, int n) {
    Quaternion result(1.0);
    while (n > 0) {
        if (n & 1) result = result * q;
        q = q * q;
        n >>= 1;
    }
    return result;
}

constexpr Quaternion kOne{1.0, 0.0, 0.0, 0.0};
constexpr Quaternion kE1{0.0, 1.0, 0.0, 0.0};
constexpr Quaternion kE2{0.0, 0.0, 1.0, 0.0};
constexpr Quaternion kE3{0.0, 0.0, 0.0, 1.0};

/// A point of S^2: purely imaginary, unit norm, value squared = -1.
class ImaginaryUnit {
  public:
    /// Validates the invariants; throws std::invalid_argument on violation.
    explicit ImaginaryUnit(const Quaternion& q) : value_(q) {
        if (std::abs(q.w) > 1e-12 || std::abs(q.norm_sq() - 1.0) > 1e-12)
            throw std::invalid_argument("ImaginaryUnit: value must be purely imaginary with unit norm");
        value_.w = 0.0;
    }

    /// Normalizes a nonzero vector part into a unit; RealInput on zero vector.
    static ImaginaryUnit from_vector(const Quaternion& q) {
        const double n = q.vec_norm();
        if (n == 0.0) throw RealInputError("imaginary unit of a real quaternion is undefined");
        return ImaginaryUnit(Quaternion{0.0, q.x / n, q.y / n, q.z / n});
    }

    const Quaternion& value() const { return value_; }

  private:
    Quaternion value_;
};

inline ImaginaryUnit imaginary_unit_of(const Quaternion& q) { return ImaginaryUnit::from_vector(q); }

/// Orthonormal basis {1, i, j, ij} of H with k = i*j.
struct Frame {
    ImaginaryUnit i;
    ImaginaryUnit j;
    ImaginaryUnit k;

    Frame(const ImaginaryUnit& i_, const ImaginaryUnit& j_) : i(i_), j(j_), k(ImaginaryUnit(i_.value() * j_.value())) {
        if (std::abs(dot4(i.value(), j.value())) > 1e-10)
            throw std::invalid_argument("Frame: i and j must be orthogonal");
    }

    /// Components of a in the basis {1, i, j, ij}.
    std::array<double, 4> components(const Quaternion& a) const {
        return {dot4(a, kOne), dot4(a, i.value()), dot4(a, j.value()), dot4(a, k.value())};
    }

    Quaternion assemble(double c0, double c1, double c2, double c3) const {
        return Quaternion(c0) + c1 * i.value() + c2 * j.value() + c3 * k.value();
    }
};

/// Deterministic completion: Gram-Schmidt of e1 against i, falling back to e2
/// when i is (nearly) aligned with e1; k = i*j.
inline Frame complete_frame(const ImaginaryUnit& i) {
    const double a = dot4(i.value(), kE1);
    if (std::abs(a) <= 1.0 - 1e-6) {
        Quaternion j = kE1 - a * i.value();
        return Frame(i, ImaginaryUnit::from_vector(j));
    }
    return Frame(i, ImaginaryUnit(kE2));
}

inline Frame standard_frame() { return Frame(ImaginaryUnit(kE1), ImaginaryUnit(kE2)); }

/// Slice coordinates q = x + I y with y = |vec q| > 0.
struct SlicePoint {
    double x;
    double y;
    ImaginaryUnit axis;

    Quaternion to_quaternion() const { return Quaternion(x) + y * axis.value(); }
};

/// RealInput for real q: every slice contains the real axis, so the axis is
/// ambiguous there. Callers handle real points via the y -> 0 limit.
inline SlicePoint slice_coords(const Quaternion& q) {
    const double y = q.vec_norm();
    if (y == 0.0) throw RealInputError("slice coordinates of a real quaternion are ambiguous");
    return SlicePoint{q.w, y, ImaginaryUnit::from_vector(q)};
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qsb
