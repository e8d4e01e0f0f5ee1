#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "qsb/det_random.hpp"
#include "qsb/json_io.hpp"
#include "qsb/verify.hpp"

using namespace qsb;

TEST_SUITE("io") {
    TEST_CASE("quaternion and series round trips") {
        DetRng rng(81);
        for (int t = 0; t < 30; ++t) {
            const Quaternion q = rng.quaternion_in_ball(2.0);
            CHECK((quaternion_from_json(to_json(q)) - q).norm() == 0.0);

            const Frame fr = rng.frame();
            const Frame fr2 = frame_from_json(to_json(fr));
            CHECK((fr2.i.value() - fr.i.value()).norm() == 0.0);
            CHECK((fr2.j.value() - fr.j.value()).norm() == 0.0);

            const HoloSeries h = rng.holo_slice_valued(6, fr);
            const HoloSeries h2 = holo_from_json(to_json(h));
            REQUIRE(h2.coeffs.size() == h.coeffs.size());
            for (std::size_t n = 0; n < h.coeffs.size(); ++n)
                CHECK((h2.coeffs[n] - h.coeffs[n]).norm() == 0.0);

            const SliceSeries s = rng.slice_series(6);
            const SliceSeries s2 = slice_from_json(to_json(s));
            for (std::size_t n = 0; n < s.coeffs.size(); ++n)
                CHECK((s2.coeffs[n] - s.coeffs[n]).norm() == 0.0);
        }
    }

    TEST_CASE("malformed input raises ParseError") {
        CHECK_THROWS_AS(quaternion_from_json(nlohmann::json::array({1.0, 2.0})), ParseError);
        CHECK_THROWS_AS(quaternion_from_json(nlohmann::json::array({1.0, 2.0, "x", 0.0})), ParseError);
        CHECK_THROWS_AS(holo_from_json(nlohmann::json{{"coeffs", nlohmann::json::array()}}), ParseError);
        CHECK_THROWS_AS(frame_from_json(nlohmann::json::array(
                            {to_json(kE1), to_json(kE1), to_json(kE2)})),
                        ParseError);
        CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), ParseError);
    }

    TEST_CASE("first kind kernel export carries N, gram, and coeff") {
        SymMatrix g(2), c(2);
        g.at(0, 0) = 2.0;
        g.at(1, 1) = 4.0;
        c.at(0, 0) = 0.5;
        c.at(1, 1) = 0.25;
        const FirstKindKernel k{1, g, c, BallRule{}, 1.0};
        const auto j = to_json(k);
        CHECK(j.at("N").get<int>() == 1);
        const FirstKindKernel k2 = first_kind_from_json(j);
        CHECK(k2.truncation == 1);
        CHECK(k2.gram.at(1, 1) == 4.0);
        CHECK(k2.coeff.at(0, 0) == 0.5);
        // a reloaded kernel still evaluates
        CHECK((k2.eval(Quaternion(0.1), Quaternion(0.2)) -
               Quaternion(0.5 + 0.25 * 0.1 * 0.2)).norm() < 1e-15);
    }
}

TEST_SUITE("verify") {
    TEST_CASE("report serialization is byte-stable and order-fixed") {
        VerifyReport r;
        r.suite = "demo";
        r.degree = 3;
        r.records.push_back({"a/x", "statement \"quoted\"", "p", 1.25e-13, 1e-11, false, true});
        r.records.push_back({"b/y", "info", "", 0.5, std::numeric_limits<double>::quiet_NaN(), true, true});
        r.overall_pass = true;
        const std::string s1 = serialize_report(r);
        const std::string s2 = serialize_report(r);
        CHECK(s1 == s2);
        CHECK(s1.find("\"tolerance\":null") != std::string::npos);
        CHECK(s1.find("\\\"quoted\\\"") != std::string::npos);
        // %.17g: round-trip exact, trailing zeros trimmed
        CHECK(s1.find("\"max_residual\":1.25e-13") != std::string::npos);
    }

    TEST_CASE("overall pass is the conjunction of record passes") {
        VerifyOptions opt;
        opt.degree = 2;
        const VerifyReport rep = run_suite("slice", opt);
        bool all = true;
        for (const auto& rec : rep.records) all = all && rec.pass;
        CHECK(rep.overall_pass == all);
        CHECK(rep.overall_pass);
        CHECK(rep.records.size() > 10);
    }

    TEST_CASE("unknown suite is rejected") {
        CHECK_THROWS_AS(run_suite("nonsense", VerifyOptions{}), std::invalid_argument);
    }

    TEST_CASE("tolerance override applies to every gated record") {
        VerifyOptions opt;
        opt.degree = 2;
        opt.tol_override = 0.25;
        const VerifyReport rep = run_suite("slice", opt);
        for (const auto& rec : rep.records)
            if (!rec.informational) CHECK(rec.tolerance == 0.25);
    }
}
