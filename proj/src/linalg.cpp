#include "qsb/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qsb {

std::vector<double> jacobi_eigenvalues(SymMatrix m, int max_sweeps) {
    const int n = m.n;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += m.at(p, q) * m.at(p, q);
        if (off < 1e-28) break;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = m.at(p, q);
                if (apq == 0.0) continue;
                const double tau = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {
                    const double mkp = m.at(k, p), mkq = m.at(k, q);
                    m.at(k, p) = c * mkp - s * mkq;
                    m.at(k, q) = s * mkp + c * mkq;
                }
                for (int k = 0; k < n; ++k) {
                    const double mpk = m.at(p, k), mqk = m.at(q, k);
                    m.at(p, k) = c * mpk - s * mqk;
                    m.at(q, k) = s * mpk + c * mqk;
                }
            }
        }
    }
    std::vector<double> ev(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) ev[static_cast<std::size_t>(k)] = m.at(k, k);
    std::sort(ev.begin(), ev.end());
    return ev;
}

double condition_number(const SymMatrix& m) {
    const auto ev = jacobi_eigenvalues(m);
    double lo = std::abs(ev.front()), hi = std::abs(ev.front());
    for (double v : ev) {
        lo = std::min(lo, std::abs(v));
        hi = std::max(hi, std::abs(v));
    }
    if (lo == 0.0) return std::numeric_limits<double>::infinity();
    return hi / lo;
}

SymMatrix spd_inverse(const SymMatrix& m) {
    const int n = m.n;
    SymMatrix L(n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c <= r; ++c) {
            double s = m.at(r, c);
            for (int k = 0; k < c; ++k) s -= L.at(r, k) * L.at(c, k);
            if (r == c) {
                if (s <= 0.0) throw std::runtime_error("spd_inverse: matrix is not positive definite");
                L.at(r, r) = std::sqrt(s);
            } else {
                L.at(r, c) = s / L.at(c, c);
            }
        }
    }
    // Solve L L^T X = I column by column.
    SymMatrix inv(n);
    std::vector<double> col(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        for (int r = 0; r < n; ++r) {
            double s = (r == j) ? 1.0 : 0.0;
            for (int k = 0; k < r; ++k) s -= L.at(r, k) * col[static_cast<std::size_t>(k)];
            col[static_cast<std::size_t>(r)] = s / L.at(r, r);
        }
        for (int r = n - 1; r >= 0; --r) {
            double s = col[static_cast<std::size_t>(r)];
            for (int k = r + 1; k < n; ++k) s -= L.at(k, r) * inv.at(k, j);
            inv.at(r, j) = s / L.at(r, r);
        }
    }
    // Symmetrize away the last rounding.
    for (int r = 0; r < n; ++r)
        for (int c = r + 1; c < n; ++c) {
            const double v = 0.5 * (inv.at(r, c) + inv.at(c, r));
            inv.at(r, c) = inv.at(c, r) = v;
        }
    return inv;
}

}  // namespace qsb
