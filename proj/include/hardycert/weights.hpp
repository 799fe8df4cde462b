#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hardy {

enum class WeightKind { constant, power, geometric, explicit_list };

struct WeightSpec {
    WeightKind kind = WeightKind::constant;
    double alpha = 0.0;            // power: lambda_n = n^alpha, alpha > -1
    double ratio = 2.0;            // geometric: lambda_n = r^n, r > 0
    std::vector<double> entries;   // explicit list

    static WeightSpec constant();
    static WeightSpec power(double alpha);
    static WeightSpec geometric(double r);
    static WeightSpec explicit_list(std::vector<double> entries);

    // "constant" | "power:A" | "geometric:R" | "list:v1,v2,..."
    // (the CLI additionally resolves "file:PATH" into a list before this)
    static WeightSpec parse(const std::string& text);
    std::string to_string() const;
};

// lambda_1..lambda_N with compensated prefix sums Lambda_n. lambda_1 > 0,
// lambda_n >= 0. Accessors take the 1-based index used throughout the math.
class WeightSequence {
  public:
    WeightSequence(WeightSpec spec, std::size_t n);

    std::size_t size() const { return lambda_.size(); }
    double lambda(std::size_t n) const { return lambda_[n - 1]; }
    double Lambda(std::size_t n) const { return prefix_[n - 1]; }
    // Lambda_n / lambda_n; rejects lambda_n = 0
    double ratio(std::size_t n) const;
    bool all_positive() const { return all_positive_; }

    std::span<const double> lambdas() const { return lambda_; }
    std::span<const double> prefix() const { return prefix_; }
    const WeightSpec& spec() const { return spec_; }

  private:
    WeightSpec spec_;
    std::vector<double> lambda_;
    std::vector<double> prefix_;
    bool all_positive_ = true;
};

WeightSequence make_weights(const WeightSpec& spec, std::size_t n);

// Closed-form bracket for sum_{i<=n} i^r from the integral comparison:
//   n (n+1)^r / (r+1)  <=  sum  <=  (r/(r+1)) n^r (n+1)^r / ((n+1)^r - n^r)
// valid for 0 <= r <= 1 (r = 0 returns the exact value n on both sides,
// r = 1 collapses both sides to n(n+1)/2). For -1 < r < 0 only the upper
// bound remains valid; `extended` flags that regime.
struct PowerSumBounds {
    double lower;
    double upper;
    bool extended;
};
PowerSumBounds power_sum_bounds(std::size_t n, double r);

}  // namespace hardy
