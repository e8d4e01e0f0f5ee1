// Compares the OpenMP-parallel integration kernels against the serial
// reference on the heaviest integrands and checks they agree bit for bit.

#include <chrono>
#include <cstdio>

#include "qsb/quadrature.hpp"
#include "qsb/slice_bergman.hpp"

using namespace qsb;

namespace {

template <typename F>
double time_of(F&& f, int reps, Quaternion& out) {
    const auto start = std::chrono::steady_clock::now();
    for (int k = 0; k < reps; ++k) out = f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() / reps;
}

}  // namespace

int main() {
    const Frame fr = standard_frame();
    const PlanarRule prule = build_disk_rule(64, 128, fr);
    const BallRule brule = build_ball_rule(12, 24, 18);
    const SecondKindKernel kernel{32};
    const Quaternion q{0.2, 0.3, 0.1, -0.2};

    std::printf("%-28s %12s %12s %9s %10s\n", "integrand", "serial [ms]", "parallel [ms]", "speedup",
                "bitwise");

    {
        auto slice_term = [&](double x, double y) {
            const Quaternion zeta = Quaternion(x) + y * fr.i.value();
            return kernel.eval(q, zeta);
        };
        Quaternion a, b;
        const double ts = time_of([&] { return integrate_slice_serial(slice_term, prule); }, 5, a);
        const double tp = time_of([&] { return integrate_slice(slice_term, prule); }, 5, b);
        std::printf("%-28s %12.3f %12.3f %9.2fx %10s\n", "disk x second-kind kernel", 1e3 * ts, 1e3 * tp,
                    ts / tp, a == b ? "match" : "MISMATCH");
        if (!(a == b)) return 1;
    }
    {
        auto ball_term = [&](const Quaternion& r) { return kernel.eval(q, r) * kernel.eval(r, q); };
        Quaternion a, b;
        const double ts = time_of([&] { return integrate_ball_serial(ball_term, brule); }, 3, a);
        const double tp = time_of([&] { return integrate_ball(ball_term, brule); }, 3, b);
        std::printf("%-28s %12.3f %12.3f %9.2fx %10s\n", "ball x kernel product", 1e3 * ts, 1e3 * tp,
                    ts / tp, a == b ? "match" : "MISMATCH");
        if (!(a == b)) return 1;
    }
    return 0;
}
