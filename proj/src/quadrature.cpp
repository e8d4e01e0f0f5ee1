#include "qsb/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace qsb {

namespace {

constexpr double kPi = std::numbers::pi;

struct Angle {
    double c;
    double s;
};

// Uniform grid theta_l = 2 pi l / n with the second half generated by exact
// negation of the first, so l -> l + n/2 and l -> n - l act bitwise on nodes.
std::vector<Angle> uniform_angles(int n) {
    std::vector<Angle> ang(static_cast<std::size_t>(n));
    const int half = n / 2;
    ang[0] = {1.0, 0.0};
    ang[static_cast<std::size_t>(half)] = {-1.0, 0.0};
    for (int l = 1; l < half; ++l) {
        const double t = 2.0 * kPi * l / n;
        ang[static_cast<std::size_t>(l)] = {std::cos(t), std::sin(t)};
        ang[static_cast<std::size_t>(l + half)] = {-ang[l].c, -ang[l].s};
    }
    return ang;
}

}  // namespace

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(static_cast<std::size_t>(n), 0.0);
    weights.assign(static_cast<std::size_t>(n), 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        if (2 * i + 1 == n) x = 0.0;  // center node of odd rules
        nodes[static_cast<std::size_t>(i)] = -x;
        nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[static_cast<std::size_t>(i)] = w;
        weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
}

double PlanarRule::weight_sum() const {
    std::vector<Quaternion> terms(weights.size());
    for (std::size_t k = 0; k < weights.size(); ++k) terms[k] = Quaternion(weights[k]);
    return detail::pairwise_sum(terms.data(), terms.size()).w;
}

double BallRule::weight_sum() const {
    std::vector<Quaternion> terms(weights.size());
    for (std::size_t k = 0; k < weights.size(); ++k) terms[k] = Quaternion(weights[k]);
    return detail::pairwise_sum(terms.data(), terms.size()).w;
}

PlanarRule build_disk_rule(int n_radial, int n_angular, const Frame& frame) {
    if (n_radial < 1) throw BadOrderError("disk rule needs n_radial >= 1");
    if (n_angular < 2 || n_angular % 2 != 0)
        throw BadOrderError("disk rule needs even n_angular >= 2 for conjugation closure");

    std::vector<double> t, u;
    gauss_legendre(n_radial, t, u);

    PlanarRule rule{frame, {}, {}, {}, std::min(4 * n_radial - 2, n_angular - 1)};
    const std::size_t count = static_cast<std::size_t>(n_radial) * static_cast<std::size_t>(n_angular);
    rule.xs.reserve(count);
    rule.ys.reserve(count);
    rule.weights.reserve(count);

    const int half = n_angular / 2;
    for (int m = 0; m < n_radial; ++m) {
        const double r = std::sqrt(0.5 * (t[static_cast<std::size_t>(m)] + 1.0));
        const double w = kPi * 0.5 * u[static_cast<std::size_t>(m)] / n_angular;
        auto push = [&](double x, double y) {
            rule.xs.push_back(x);
            rule.ys.push_back(y);
            rule.weights.push_back(w);
        };
        push(r, 0.0);
        push(-r, 0.0);
        for (int l = 1; l < half; ++l) {
            const double theta = 2.0 * kPi * l / n_angular;
            const double x = r * std::cos(theta);
            const double y = r * std::sin(theta);
            push(x, y);
            push(x, -y);  // conjugate partner: an exact mirror, adjacent
        }
    }
    return rule;
}

PlanarRule build_rect_rule(int nx, int ny, const Frame& frame, double half_width, double half_height) {
    if (nx < 1 || ny < 1) throw BadOrderError("rectangle rule needs positive orders");
    if (half_width <= 0.0 || half_height <= 0.0)
        throw BadOrderError("rectangle rule needs positive half sizes");

    std::vector<double> gx, wx, gy, wy;
    gauss_legendre(nx, gx, wx);
    gauss_legendre(ny, gy, wy);

    PlanarRule rule{frame, {}, {}, {}, std::min(2 * nx - 1, 2 * ny - 1)};
    rule.xs.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
    rule.ys.reserve(rule.xs.capacity());
    rule.weights.reserve(rule.xs.capacity());

    // Gauss-Legendre nodes come in exact +/- pairs; keep each pair adjacent
    // and push the y = 0 center row (odd ny) as a tail so pair slots stay
    // aligned to even offsets for the reduction.
    for (int a = 0; a < nx; ++a) {
        const double x = half_width * gx[static_cast<std::size_t>(a)];
        const double wxa = half_width * wx[static_cast<std::size_t>(a)];
        for (int b = 0; b < ny / 2; ++b) {
            const int b2 = ny - 1 - b;
            const double y = half_height * gy[static_cast<std::size_t>(b2)];
            const double w = wxa * half_height * wy[static_cast<std::size_t>(b2)];
            rule.xs.push_back(x);
            rule.ys.push_back(y);
            rule.weights.push_back(w);
            rule.xs.push_back(x);
            rule.ys.push_back(-y);
            rule.weights.push_back(w);
        }
    }
    if (ny % 2 != 0) {
        const int center = (ny - 1) / 2;
        for (int a = 0; a < nx; ++a) {
            rule.xs.push_back(half_width * gx[static_cast<std::size_t>(a)]);
            rule.ys.push_back(0.0);
            rule.weights.push_back(half_width * wx[static_cast<std::size_t>(a)] * half_height *
                                   wy[static_cast<std::size_t>(center)]);
        }
    }
    return rule;
}

BallRule build_ball_rule(int n_radial, int n_angular, int n_sphere) {
    if (n_radial < 2) throw BadOrderError("ball rule needs n_radial >= 2");
    if (n_angular < 4 || n_angular % 2 != 0)
        throw BadOrderError("ball rule needs even n_angular >= 4");
    if (n_sphere < 6 || n_sphere % 2 != 0)
        throw BadOrderError("ball rule needs even n_sphere >= 6 for antipodal closure");

    std::vector<double> gr, wr, gu, wu;
    gauss_legendre(n_radial, gr, wr);
    gauss_legendre(n_sphere, gu, wu);
    const auto phi = uniform_angles(n_angular);
    const auto theta = uniform_angles(n_sphere);

    BallRule rule;
    rule.exact_degree = std::min(std::min(2 * n_radial - 4, n_angular - 3), n_sphere - 1);
    const std::size_t count = static_cast<std::size_t>(n_radial) * static_cast<std::size_t>(n_angular - 2) *
                              static_cast<std::size_t>(n_sphere) * static_cast<std::size_t>(n_sphere);
    rule.nodes.reserve(count);
    rule.weights.reserve(count);

    // q = x + y I over the signed-angle disk; the y^2 factor of the measure is
    // folded into the weight, so the two phi-points with sin phi = 0 drop out.
    const int half = n_angular / 2;
    for (int m = 0; m < n_radial; ++m) {
        const double r = 0.5 * (gr[static_cast<std::size_t>(m)] + 1.0);
        const double wrad = 0.5 * wr[static_cast<std::size_t>(m)] * r;
        for (int a = 0; a < n_sphere; ++a) {
            const double su = std::sqrt(std::max(0.0, 1.0 - gu[static_cast<std::size_t>(a)] * gu[static_cast<std::size_t>(a)]));
            for (int l = 0; l < n_sphere; ++l) {
                const Quaternion axis{0.0, su * theta[static_cast<std::size_t>(l)].c,
                                      su * theta[static_cast<std::size_t>(l)].s,
                                      gu[static_cast<std::size_t>(a)]};
                const double wsph = (2.0 * kPi / n_sphere) * wu[static_cast<std::size_t>(a)];
                for (int k = 1; k < half; ++k) {
                    const double x = r * phi[static_cast<std::size_t>(k)].c;
                    const double y = r * phi[static_cast<std::size_t>(k)].s;
                    const double w = 0.5 * wrad * (2.0 * kPi / n_angular) * y * y * wsph;
                    rule.nodes.push_back(Quaternion(x) + y * axis);
                    rule.weights.push_back(w);
                    rule.nodes.push_back(Quaternion(x) - y * axis);  // conjugate partner
                    rule.weights.push_back(w);
                }
            }
        }
    }
    return rule;
}

void export_csv(const PlanarRule& rule, std::ostream& os) {
    os << "x,y,i_x,i_y,i_z,weight\n";
    const Quaternion i = rule.frame.i.value();
    char line[192];
    for (std::size_t k = 0; k < rule.size(); ++k) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", rule.xs[k],
                      rule.ys[k], i.x, i.y, i.z, rule.weights[k]);
        os << line;
    }
}

void export_csv(const BallRule& rule, std::ostream& os) {
    os << "x,y,i_x,i_y,i_z,weight\n";
    char line[192];
    for (std::size_t k = 0; k < rule.size(); ++k) {
        const Quaternion& q = rule.nodes[k];
        const double y = q.vec_norm();
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", q.w, y, q.x / y,
                      q.y / y, q.z / y, rule.weights[k]);
        os << line;
    }
}

}  // namespace qsb
