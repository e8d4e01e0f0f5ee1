#include <doctest.h>

#include <cmath>

#include "qsb/det_random.hpp"
#include "qsb/quaternion.hpp"

using namespace qsb;

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

TEST_SUITE("qalg") {
    TEST_CASE("multiplication basis table") {
        CHECK((kE1 * kE2 - kE3).norm() == 0.0);
        CHECK((kE2 * kE3 - kE1).norm() == 0.0);
        CHECK((kE3 * kE1 - kE2).norm() == 0.0);
        CHECK((kE2 * kE1 + kE3).norm() == 0.0);  // anticommutation
        CHECK((kE1 * kE1 + kOne).norm() == 0.0);

        // (1 + e1)(1 - e1) = 1 - e1^2 = 2
        const Quaternion p = (kOne + kE1) * (kOne - kE1);
        CHECK((p - Quaternion(2.0)).norm() == 0.0);
    }

    TEST_CASE("conjugation") {
        CHECK((quat_conj(kE1) + kE1).norm() == 0.0);
        CHECK((quat_conj(Quaternion(2.0)) - Quaternion(2.0)).norm() == 0.0);

        const Quaternion q{1.0, 1.0, 1.0, 1.0};
        CHECK((quat_conj(q) * q - Quaternion(4.0)).norm() == doctest::Approx(0.0).epsilon(1e-15));

        DetRng rng(11);
        for (int t = 0; t < 50; ++t) {
            const Quaternion a = rng.quaternion_in_ball(2.0);
            const Quaternion b = rng.quaternion_in_ball(2.0);
            CHECK((quat_conj(a * b) - quat_conj(b) * quat_conj(a)).norm() < 1e-14);
            CHECK((quat_conj(quat_conj(a)) - a).norm() == 0.0);
        }
    }

    TEST_CASE("conj(q) q is the squared norm") {
        DetRng rng(12);
        for (int t = 0; t < 100; ++t) {
            const Quaternion q = rng.quaternion_in_ball(3.0);
            const Quaternion n = quat_conj(q) * q;
            CHECK(n.vec_norm() < 1e-12);
            CHECK(n.w == doctest::Approx(q.norm_sq()).epsilon(1e-12));
        }
    }

    TEST_CASE("imaginary unit of a quaternion") {
        const ImaginaryUnit u = imaginary_unit_of(Quaternion{1.0, 2.0, 0.0, 0.0});
        CHECK((u.value() - kE1).norm() < 1e-15);

        const ImaginaryUnit v = imaginary_unit_of(kE2 + kE3);
        CHECK((v.value() - (kE2 + kE3) / kSqrt2).norm() < 1e-15);

        CHECK_THROWS_AS(imaginary_unit_of(Quaternion(5.0)), RealInputError);
    }

    TEST_CASE("imaginary unit invariants") {
        DetRng rng(13);
        for (int t = 0; t < 100; ++t) {
            const ImaginaryUnit u = rng.unit_imaginary();
            CHECK(u.value().w == 0.0);
            CHECK(u.value().norm() == doctest::Approx(1.0).epsilon(1e-14));
            CHECK((u.value() * u.value() + kOne).norm() < 1e-14);
        }
    }

    TEST_CASE("frame completion is deterministic Gram-Schmidt with fallback") {
        const Frame f1 = complete_frame(ImaginaryUnit(kE1));
        CHECK((f1.j.value() - kE2).norm() == 0.0);
        CHECK((f1.k.value() - kE3).norm() == 0.0);

        // i = (e1 + e2)/sqrt(2) orthogonalizes e1 to (e1 - e2)/sqrt(2)
        const Frame f2 = complete_frame(ImaginaryUnit((kE1 + kE2) / kSqrt2));
        CHECK((f2.j.value() - (kE1 - kE2) / kSqrt2).norm() < 1e-15);

        const Frame f3 = complete_frame(ImaginaryUnit(kE3));
        CHECK((f3.j.value() - kE1).norm() < 1e-15);
        CHECK((f3.k.value() - kE2).norm() < 1e-15);
    }

    TEST_CASE("frame invariants hold for random axes") {
        DetRng rng(14);
        for (int t = 0; t < 100; ++t) {
            const Frame fr = rng.frame();
            CHECK((fr.k.value() - fr.i.value() * fr.j.value()).norm() < 1e-14);
            CHECK((fr.j.value() * fr.i.value() + fr.k.value()).norm() < 1e-14);
            CHECK(std::abs(dot4(fr.i.value(), fr.j.value())) < 1e-13);
            CHECK(std::abs(dot4(fr.i.value(), fr.k.value())) < 1e-13);
            CHECK(std::abs(dot4(fr.j.value(), fr.k.value())) < 1e-13);
            const Quaternion probe = rng.quaternion_in_ball(1.0);
            const auto c = fr.components(probe);
            CHECK((fr.assemble(c[0], c[1], c[2], c[3]) - probe).norm() < 1e-14);
        }
    }

    TEST_CASE("slice coordinates") {
        const SlicePoint a = slice_coords(Quaternion{1.0, 2.0, 0.0, 0.0});
        CHECK(a.x == 1.0);
        CHECK(a.y == 2.0);
        CHECK((a.axis.value() - kE1).norm() < 1e-15);

        const SlicePoint b = slice_coords(kE2);
        CHECK(b.x == 0.0);
        CHECK(b.y == 1.0);
        CHECK((b.axis.value() - kE2).norm() < 1e-15);

        CHECK_THROWS_AS(slice_coords(Quaternion(3.0)), RealInputError);
    }

    TEST_CASE("slice coordinates reassemble") {
        DetRng rng(15);
        for (int t = 0; t < 100; ++t) {
            const Quaternion q = rng.nonreal_in_ball(1.0);
            const SlicePoint sp = slice_coords(q);
            CHECK(sp.y > 0.0);
            CHECK((sp.to_quaternion() - q).norm() < 1e-14);
        }
    }

    TEST_CASE("power helper agrees with repeated products") {
        DetRng rng(16);
        for (int t = 0; t < 20; ++t) {
            const Quaternion q = rng.quaternion_in_ball(1.2);
            Quaternion p(1.0);
            for (int n = 0; n <= 9; ++n) {
                CHECK((quat_pow(q, n) - p).norm() < 1e-13);
                p = p * q;
            }
        }
    }
}
