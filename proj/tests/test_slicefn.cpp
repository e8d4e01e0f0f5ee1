#include <doctest.h>

#include <cmath>

#include "qsb/det_random.hpp"
#include "qsb/slice_series.hpp"

using namespace qsb;

namespace {

const Frame kStd = standard_frame();

HoloSeries holo(std::initializer_list<Quaternion> coeffs, double radius = 1.0, Frame fr = kStd) {
    return HoloSeries{fr, coeffs, radius};
}

SliceSeries slice(std::initializer_list<Quaternion> coeffs) { return SliceSeries{coeffs, 1.0}; }

}  // namespace

TEST_SUITE("slicefn") {
    TEST_CASE("extend_P on the identity and square") {
        // polynomials are entire, so a radius-2 disk lets the boundary
        // examples evaluate at |q| = 1
        const HoloSeries ident = holo({Quaternion{}, Quaternion(1.0)}, 2.0);
        CHECK((extend_P(ident, kE2) - kE2).norm() < 1e-15);

        const HoloSeries square = holo({Quaternion{}, Quaternion{}, Quaternion(1.0)}, 2.0);
        CHECK((extend_P(square, kE2) + kOne).norm() < 1e-15);

        const HoloSeries const_i = holo({kE1});
        DetRng rng(31);
        for (int t = 0; t < 10; ++t)
            CHECK((extend_P(const_i, rng.quaternion_in_ball(0.9)) - kE1).norm() < 1e-15);

        CHECK_THROWS_AS(extend_P(ident, Quaternion{2.0, 1.0, 0.0, 0.0}), OutOfDomainError);
    }

    TEST_CASE("extend_P at real points takes the continuous limit") {
        const HoloSeries f = holo({kE1, Quaternion(2.0), kE1});
        const Quaternion at(0.5);
        CHECK((extend_P(f, at) - f.eval(0.5, 0.0)).norm() == 0.0);
    }

    TEST_CASE("restriction keeps coefficients") {
        const SliceSeries sq = slice({Quaternion{}, Quaternion{}, Quaternion(1.0)});
        const HoloSeries r = restrict_Q(sq, kStd);
        CHECK((r.coeffs[2] - Quaternion(1.0)).norm() == 0.0);

        const SliceSeries qe2 = slice({Quaternion{}, kE2});
        const HoloSeries r2 = restrict_Q(qe2, kStd);
        CHECK((r2.coeffs[1] - kE2).norm() == 0.0);
        // the restriction of q e2 at z is z e2
        const Quaternion z{0.2, 0.3, 0.0, 0.0};
        CHECK((r2.eval(0.2, 0.3) - z * kE2).norm() < 1e-15);
    }

    TEST_CASE("extension and restriction invert each other") {
        DetRng rng(32);
        for (int t = 0; t < 40; ++t) {
            const Frame fr = rng.frame();
            const SliceSeries F = rng.slice_series(8);
            const SliceSeries back = slice_from_holo(restrict_Q(F, fr));
            for (std::size_t n = 0; n < F.coeffs.size(); ++n)
                CHECK((back.coeffs[n] - F.coeffs[n]).norm() == 0.0);

            // pointwise: the Representation Formula recovers the series values
            for (int s = 0; s < 5; ++s) {
                const Quaternion q = rng.quaternion_in_ball(0.9);
                CHECK((extend_P(restrict_Q(F, fr), q) - F.eval(q)).norm() < 1e-13);
            }
        }
    }

    TEST_CASE("split_basis") {
        const SliceSeries qe2 = slice({Quaternion{}, kE2});
        const auto [f1, f2] = split_basis(qe2, kStd);
        CHECK(f1.coeff_scale() == 0.0);
        CHECK((f2.coeffs[1] - Quaternion(1.0)).norm() == 0.0);

        const SliceSeries ident = slice({Quaternion{}, Quaternion(1.0)});
        const auto [g1, g2] = split_basis(ident, kStd);
        CHECK((g1.coeffs[1] - Quaternion(1.0)).norm() == 0.0);
        CHECK(g2.coeff_scale() == 0.0);

        const SliceSeries qe1 = slice({Quaternion{}, kE1});
        const auto [h1, h2] = split_basis(qe1, kStd);
        CHECK((h1.coeffs[1] - kE1).norm() == 0.0);
        CHECK(h2.coeff_scale() == 0.0);
    }

    TEST_CASE("refined_split") {
        const SliceSeries qe1 = slice({Quaternion{}, kE1});
        const auto h = refined_split(qe1, kStd);
        CHECK(h[0].coeff_scale() == 0.0);
        CHECK((h[1].coeffs[1] - Quaternion(1.0)).norm() == 0.0);
        CHECK(h[2].coeff_scale() == 0.0);
        CHECK(h[3].coeff_scale() == 0.0);

        const SliceSeries ident = slice({Quaternion{}, Quaternion(1.0)});
        CHECK((refined_split(ident, kStd)[0].coeffs[1] - Quaternion(1.0)).norm() == 0.0);

        const SliceSeries qe3 = slice({Quaternion{}, kE3});
        const auto h3 = refined_split(qe3, kStd);
        CHECK((h3[3].coeffs[1] - Quaternion(1.0)).norm() == 0.0);
    }

    TEST_CASE("fourfold_decompose") {
        const SliceSeries f = slice({Quaternion{}, kOne + kE1});  // q (1 + e1)
        const auto parts = fourfold_decompose(f, kStd);
        CHECK((parts[0].coeffs[1] - Quaternion(1.0)).norm() == 0.0);
        CHECK((parts[1].coeffs[1] - Quaternion(1.0)).norm() == 0.0);
        CHECK(parts[2].coeff_scale() == 0.0);
        CHECK(parts[3].coeff_scale() == 0.0);

        const SliceSeries intr = slice({Quaternion(2.0), Quaternion(-1.0)});
        const auto ip = fourfold_decompose(intr, kStd);
        CHECK((ip[0].coeffs[0] - Quaternion(2.0)).norm() == 0.0);
        CHECK(ip[1].coeff_scale() == 0.0);

        const SliceSeries q2e2 = slice({Quaternion{}, Quaternion{}, kE2});
        const auto p2 = fourfold_decompose(q2e2, kStd);
        CHECK((p2[2].coeffs[2] - Quaternion(1.0)).norm() == 0.0);
        CHECK(p2[0].coeff_scale() == 0.0);
    }

    TEST_CASE("splittings reconstruct in random frames") {
        DetRng rng(33);
        for (int t = 0; t < 40; ++t) {
            const Frame fr = rng.frame();
            const SliceSeries F = rng.slice_series(10);

            const auto [f1, f2] = split_basis(F, fr);
            CHECK(f1.is_slice_valued());
            CHECK(f2.is_slice_valued());
            for (std::size_t n = 0; n < F.coeffs.size(); ++n)
                CHECK((f1.coeffs[n] + f2.coeffs[n] * fr.j.value() - F.coeffs[n]).norm() < 1e-14);

            const auto h = refined_split(F, fr);
            for (const auto& part : h) CHECK(classify(part) == Classification::C);
            for (std::size_t n = 0; n < F.coeffs.size(); ++n) {
                const Quaternion recon = fr.assemble(h[0].coeffs[n].w, h[1].coeffs[n].w,
                                                     h[2].coeffs[n].w, h[3].coeffs[n].w);
                CHECK((recon - F.coeffs[n]).norm() < 1e-14);
            }

            const auto parts = fourfold_decompose(F, fr);
            for (const auto& part : parts) CHECK(is_intrinsic(part) == IntrinsicClass::Intrinsic);
            for (int s = 0; s < 3; ++s) {
                const Quaternion q = rng.quaternion_in_ball(0.9);
                const Quaternion recon = parts[0].eval(q) + parts[1].eval(q) * fr.i.value() +
                                         parts[2].eval(q) * fr.j.value() + parts[3].eval(q) * fr.k.value();
                CHECK((recon - F.eval(q)).norm() < 1e-13);
            }
        }
    }

    TEST_CASE("fourfold components re-decompose into their own slot") {
        DetRng rng(34);
        const Frame fr = rng.frame();
        const SliceSeries F = rng.slice_series(6);
        const auto parts = fourfold_decompose(F, fr);
        for (int l = 0; l < 4; ++l) {
            const auto again = fourfold_decompose(parts[static_cast<std::size_t>(l)], fr);
            for (int m = 0; m < 4; ++m) {
                if (m == 0) {
                    for (std::size_t n = 0; n < F.coeffs.size(); ++n)
                        CHECK((again[0].coeffs[n] - parts[static_cast<std::size_t>(l)].coeffs[n]).norm() <
                              1e-14);
                } else {
                    CHECK(again[static_cast<std::size_t>(m)].coeff_scale() < 1e-14);
                }
            }
        }
    }

    TEST_CASE("representation formula forms for the three coefficient classes") {
        DetRng rng(35);
        for (int t = 0; t < 15; ++t) {
            const Frame fr = rng.frame();
            const Quaternion i = fr.i.value();

            const HoloSeries fc = rng.holo_real_coeff(6, fr);
            const HoloSeries fa = rng.holo_anti_coeff(6, fr);
            const HoloSeries fm = rng.holo_slice_valued(6, fr);
            const auto [fm_c, fm_a] = c_anti_decompose(fm);

            for (int s = 0; s < 8; ++s) {
                const Quaternion q = rng.nonreal_in_ball(0.9);
                const SlicePoint sp = slice_coords(q);
                const Quaternion I = sp.axis.value();

                const auto vc = fr.components(fc.eval(sp.x, sp.y));
                CHECK((extend_P(fc, q) - (Quaternion(vc[0]) + vc[1] * I)).norm() < 1e-13);

                const auto va = fr.components(fa.eval(sp.x, sp.y));
                CHECK((extend_P(fa, q) - (Quaternion(va[1]) - va[0] * I) * i).norm() < 1e-13);

                const auto vm = fr.components(fm.eval(sp.x, sp.y));
                const Quaternion general = Quaternion(vm[0]) + vm[1] * I +
                                           (kOne + I * i) * fm_a.eval(sp.x, -sp.y);
                CHECK((extend_P(fm, q) - general).norm() < 1e-13);
            }
        }
    }

    TEST_CASE("intrinsic extensions and the image characterization") {
        DetRng rng(36);
        for (int t = 0; t < 20; ++t) {
            const Frame fr = rng.frame();
            const HoloSeries fc = rng.holo_real_coeff(6, fr);
            CHECK(is_intrinsic(slice_from_holo(fc)) == IntrinsicClass::Intrinsic);
            for (int s = 0; s < 5; ++s) {
                const Quaternion q = rng.quaternion_in_ball(0.9);
                CHECK((extend_P(fc, quat_conj(q)) - quat_conj(extend_P(fc, q))).norm() < 1e-13);
            }

            // every intrinsic series is the extension of the C-part of its restriction
            const SliceSeries F = rng.intrinsic_series(8);
            const auto [part_c, part_a] = c_anti_decompose(restrict_Q(F, fr));
            CHECK(part_a.coeff_scale() == 0.0);
            const SliceSeries back = slice_from_holo(part_c);
            for (std::size_t n = 0; n < F.coeffs.size(); ++n)
                CHECK((back.coeffs[n] - F.coeffs[n]).norm() == 0.0);
        }
    }

    TEST_CASE("intrinsic values commute") {
        DetRng rng(37);
        for (int t = 0; t < 10; ++t) {
            const SliceSeries F = rng.intrinsic_series(7);
            const SliceSeries G = rng.intrinsic_series(7);
            for (int s = 0; s < 10; ++s) {
                const Quaternion q = rng.quaternion_in_ball(0.95);
                CHECK((F.eval(q) * G.eval(q) - G.eval(q) * F.eval(q)).norm() < 1e-13);
            }
        }
    }

    TEST_CASE("alpha and beta of q^2 and a constant") {
        const SliceSeries sq = slice({Quaternion{}, Quaternion{}, Quaternion(1.0)});
        const AlphaBeta ab = alpha_beta_of(sq);
        DetRng rng(38);
        for (int s = 0; s < 50; ++s) {
            const double x = rng.uniform(-0.7, 0.7), y = rng.uniform(-0.7, 0.7);
            if (x * x + y * y >= 1.0) continue;
            CHECK((ab.alpha(x, y) - Quaternion(x * x - y * y)).norm() < 1e-15);
            CHECK((ab.beta(x, y) - Quaternion(2.0 * x * y)).norm() < 1e-15);
        }

        const Quaternion c{0.3, -0.2, 0.7, 0.1};
        const AlphaBeta cab = alpha_beta_of(slice({c}));
        CHECK((cab.alpha(0.2, 0.4) - c).norm() == 0.0);
        CHECK(cab.beta(0.2, 0.4).norm() == 0.0);

        // q e2: alpha = x e2, beta = y e2, and the slice form holds off-axis
        const SliceSeries qe2 = slice({Quaternion{}, kE2});
        const AlphaBeta ab2 = alpha_beta_of(qe2);
        CHECK((ab2.alpha(0.3, 0.5) - 0.3 * kE2).norm() < 1e-15);
        CHECK((ab2.beta(0.3, 0.5) - 0.5 * kE2).norm() < 1e-15);
        const Quaternion q = 0.3 * kOne + 0.5 * kE3;
        const SlicePoint sp = slice_coords(q);
        CHECK((qe2.eval(q) - (ab2.alpha(sp.x, sp.y) + sp.axis.value() * ab2.beta(sp.x, sp.y))).norm() <
              1e-15);
    }

    TEST_CASE("alpha/beta parity and the slice form at random points") {
        DetRng rng(39);
        for (int t = 0; t < 20; ++t) {
            const SliceSeries F = rng.slice_series(8);
            const AlphaBeta ab = alpha_beta_of(F);
            for (int s = 0; s < 10; ++s) {
                const double x = rng.uniform(-0.6, 0.6), y = rng.uniform(-0.6, 0.6);
                CHECK((ab.alpha(x, -y) - ab.alpha(x, y)).norm() == 0.0);
                CHECK((ab.beta(x, -y) + ab.beta(x, y)).norm() == 0.0);
            }
            CHECK(ab.beta(0.3, 0.0).norm() == 0.0);

            for (int s = 0; s < 5; ++s) {
                const Quaternion q = rng.nonreal_in_ball(0.9);
                const SlicePoint sp = slice_coords(q);
                CHECK((F.eval(q) - ab.alpha(sp.x, sp.y) - sp.axis.value() * ab.beta(sp.x, sp.y)).norm() <
                      1e-13);
            }
        }
    }

    TEST_CASE("cr_residual vanishes for slice series and flags broken pairs") {
        const SliceSeries sq = slice({Quaternion{}, Quaternion{}, Quaternion(1.0)});
        const auto [r1, r2] = cr_residual(alpha_beta_of(sq), 0.4, 0.2);
        CHECK(r1.norm() < 1e-8);
        CHECK(r2.norm() < 1e-8);

        const SliceSeries cub = slice({Quaternion{}, Quaternion{}, Quaternion{}, Quaternion(1.0)});
        const auto [c1, c2] = cr_residual(alpha_beta_of(cub), 0.2, 0.3);
        CHECK(c1.norm() < 1e-7);
        CHECK(c2.norm() < 1e-7);

        // negative control: negating beta leaves r1 = 2 dx alpha, far from zero
        const AlphaBeta good = alpha_beta_of(cub);
        const AlphaBeta bad{good.alpha,
                            [b = good.beta](double x, double y) { return -1.0 * b(x, y); },
                            good.radius};
        const auto [b1, b2] = cr_residual(bad, 0.2, 0.3);
        CHECK(b1.norm() > 1e-3);
        (void)b2;

        CHECK_THROWS_AS(cr_residual(good, 1.0, 0.0), OutOfDomainError);
        CHECK_THROWS_AS(cr_residual(good, 0.2, 0.3, -1.0), std::invalid_argument);
    }

    TEST_CASE("is_intrinsic classification") {
        CHECK(is_intrinsic(slice({Quaternion{}, Quaternion{}, Quaternion(1.0)})) ==
              IntrinsicClass::Intrinsic);
        CHECK(is_intrinsic(slice({Quaternion(3.0)})) == IntrinsicClass::Intrinsic);
        CHECK(is_intrinsic(slice({Quaternion{}, kE1})) == IntrinsicClass::AntiIntrinsic);
        CHECK(is_intrinsic(slice({kE1, Quaternion(1.0)})) == IntrinsicClass::Neither);
    }

    TEST_CASE("intrinsic iff pointwise conjugation equivariance iff real alpha/beta") {
        DetRng rng(40);
        for (int t = 0; t < 10; ++t) {
            const SliceSeries F = rng.intrinsic_series(8);
            const AlphaBeta ab = alpha_beta_of(F);
            for (int s = 0; s < 10; ++s) {
                const Quaternion q = rng.quaternion_in_ball(0.95);
                CHECK((F.eval(quat_conj(q)) - quat_conj(F.eval(q))).norm() < 1e-13);
                const double x = rng.uniform(-0.6, 0.6), y = rng.uniform(-0.6, 0.6);
                CHECK(ab.alpha(x, y).vec_norm() < 1e-14);
                CHECK(ab.beta(x, y).vec_norm() < 1e-14);
            }
        }
        // a non-intrinsic series fails both characterizations somewhere
        const SliceSeries bad = slice({Quaternion{}, kE2});
        double dev_point = 0.0, dev_ab = 0.0;
        const AlphaBeta ab = alpha_beta_of(bad);
        for (int s = 0; s < 20; ++s) {
            const Quaternion q = rng.quaternion_in_ball(0.9);
            dev_point = std::max(dev_point, (bad.eval(quat_conj(q)) - quat_conj(bad.eval(q))).norm());
            dev_ab = std::max(dev_ab, ab.alpha(rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)).vec_norm());
        }
        CHECK(dev_point > 1e-3);
        CHECK(dev_ab > 1e-3);
    }

    TEST_CASE("degree guard on evaluation") {
        const SliceSeries f = slice({Quaternion(1.0)});
        CHECK_THROWS_AS(f.eval(Quaternion{1.0, 0.5, 0.0, 0.0}), OutOfDomainError);
    }
}
