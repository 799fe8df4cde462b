#include "hardycert/tridiag.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hardy {

namespace {

// Gershgorin interval containing the whole spectrum
std::pair<double, double> spectrum_bounds(const SymTridiag& t) {
    std::size_t n = t.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(t.off[i - 1]);
        if (i + 1 < n) r += std::abs(t.off[i]);
        lo = std::min(lo, t.diag[i] - r);
        hi = std::max(hi, t.diag[i] + r);
    }
    return {lo, hi};
}

double bisect_for_count(const SymTridiag& t, std::size_t want) {
    auto [lo, hi] = spectrum_bounds(t);
    // widen so the predicate flips strictly inside the bracket
    double pad = std::max(1.0, std::abs(lo) + std::abs(hi)) *
                 std::numeric_limits<double>::epsilon() * 4.0;
    lo -= pad;
    hi += pad;
    // count(lo) = 0 <= want-1 < count(hi) = n; find sup{x : count(x) < want}
    for (int iter = 0; iter < 200 && lo < hi; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at ulp resolution
        if (eigen_count_below(t, mid) < want)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::size_t eigen_count_below(const SymTridiag& t, double x) {
    std::size_t n = t.size();
    if (n == 0) return 0;
    if (t.off.size() + 1 != n) throw std::invalid_argument("tridiagonal shape mismatch");
    // LDL^t pivots; count of negative pivots equals eigenvalues below x
    std::size_t count = 0;
    double d = t.diag[0] - x;
    if (d < 0.0) ++count;
    for (std::size_t i = 1; i < n; ++i) {
        if (d == 0.0) d = std::numeric_limits<double>::min();
        d = t.diag[i] - x - t.off[i - 1] * t.off[i - 1] / d;
        if (d < 0.0) ++count;
    }
    return count;
}

double kth_eigenvalue(const SymTridiag& t, std::size_t k) {
    if (k >= t.size()) throw std::out_of_range("eigenvalue index past matrix size");
    return bisect_for_count(t, k + 1);
}

double smallest_eigenvalue(const SymTridiag& t) { return kth_eigenvalue(t, 0); }

std::vector<double> all_eigenvalues(const SymTridiag& t, Exec exec) {
    std::vector<double> vals(t.size());
    for_each_index(t.size(), exec, [&](std::size_t k) { vals[k] = bisect_for_count(t, k + 1); });
    return vals;
}

}  // namespace hardy
