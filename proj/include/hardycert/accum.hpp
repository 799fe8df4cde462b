#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#if defined(__FAST_MATH__)
#error "compensated summation is broken under -ffast-math"
#endif

namespace hardy {

// Neumaier variant of Kahan summation. The correction term is folded in
// only when the value is read, so intermediate sums stay branch-cheap.
struct Accum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

// out[i] = x[0] + ... + x[i], each entry compensated
inline std::vector<double> prefix_sums(std::span<const double> x) {
    std::vector<double> out(x.size());
    Accum acc;
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc.add(x[i]);
        out[i] = acc.value();
    }
    return out;
}

// out[i] = x[i] + ... + x[n-1]
inline std::vector<double> suffix_sums(std::span<const double> x) {
    std::vector<double> out(x.size());
    Accum acc;
    for (std::size_t i = x.size(); i-- > 0;) {
        acc.add(x[i]);
        out[i] = acc.value();
    }
    return out;
}

inline double total(std::span<const double> x) {
    Accum acc;
    for (double v : x) acc.add(v);
    return acc.value();
}

}  // namespace hardy
