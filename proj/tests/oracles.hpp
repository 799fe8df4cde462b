#pragma once

// Test-only oracles. Everything here recomputes quantities along routes the
// library does not use (dense Jacobi instead of Sturm bisection, long double
// direct sums instead of compensated doubles, grid search instead of fixed
// points) so agreement actually means something.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "hardycert/weights.hpp"

namespace oracle {

using Dense = std::vector<std::vector<double>>;

// lower-triangular weighted mean matrix, entries lambda_k / Lambda_n
inline Dense mean_matrix(const hardy::WeightSequence& w, std::size_t n) {
    Dense m(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t k = 1; k <= i; ++k) m[i - 1][k - 1] = w.lambda(k) / w.Lambda(i);
    return m;
}

inline std::vector<double> matvec(const Dense& m, const std::vector<double>& x) {
    std::vector<double> y(m.size(), 0.0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        long double s = 0.0L;
        for (std::size_t j = 0; j < x.size() && j < m[i].size(); ++j)
            s += static_cast<long double>(m[i][j]) * x[j];
        y[i] = static_cast<double>(s);
    }
    return y;
}

inline std::vector<double> matvec_t(const Dense& m, const std::vector<double>& y) {
    std::vector<double> x(m.size(), 0.0);
    for (std::size_t j = 0; j < m.size(); ++j) {
        long double s = 0.0L;
        for (std::size_t i = 0; i < m.size(); ++i)
            s += static_cast<long double>(m[i][j]) * y[i];
        x[j] = static_cast<double>(s);
    }
    return x;
}

inline Dense gram(const Dense& a) {  // A^t A
    const std::size_t n = a.size();
    Dense g(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long double s = 0.0L;
            for (std::size_t k = 0; k < n; ++k)
                s += static_cast<long double>(a[k][i]) * a[k][j];
            g[i][j] = static_cast<double>(s);
        }
    return g;
}

// cyclic Jacobi on a dense symmetric matrix, ascending eigenvalues; slow
// and simple on purpose, fine for the n <= 64 cases tested here
inline std::vector<double> jacobi_eigenvalues(Dense m) {
    const std::size_t n = m.size();
    for (int sweep = 0; sweep < 200; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += m[i][j] * m[i][j];
        if (off < 1e-28) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                if (m[p][q] == 0.0) continue;
                double theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    double akp = m[k][p], akq = m[k][q];
                    m[k][p] = c * akp - s * akq;
                    m[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = m[p][k], aqk = m[q][k];
                    m[p][k] = c * apk - s * aqk;
                    m[q][k] = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = m[i][i];
    std::sort(ev.begin(), ev.end());
    return ev;
}

inline std::vector<double> random_weights(std::mt19937_64& rng, std::size_t n,
                                          double lo = 0.2, double hi = 2.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> w(n);
    for (auto& v : w) v = u(rng);
    return w;
}

inline double lp(const std::vector<double>& x, double p) {
    long double s = 0.0L;
    for (double v : x) s += std::pow(std::abs(static_cast<long double>(v)), p);
    return static_cast<double>(std::pow(s, 1.0L / p));
}

// best ratio ||Ax||_p / ||x||_p over x = (1-t, t), t in [0,1), by fine grid;
// exact enough for 1e-9 checks on length-2 sections since the max is smooth
inline double brute_norm_2x2(const hardy::WeightSequence& w, double p) {
    Dense a = mean_matrix(w, 2);
    double best = 0.0;
    const std::size_t grid = 2000000;
    for (std::size_t i = 0; i < grid; ++i) {
        double t = static_cast<double>(i) / grid;
        std::vector<double> x = {1.0 - t, t};
        best = std::max(best, lp(matvec(a, x), p) / lp(x, p));
    }
    return best;
}

}  // namespace oracle
