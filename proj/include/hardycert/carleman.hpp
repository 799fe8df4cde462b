#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hardycert/parallel.hpp"
#include "hardycert/weights.hpp"

namespace hardy {

// sum_{n<=N} prod_{k<=n} a_k^{lambda_k/Lambda_n} for a >= 0, via one
// compensated prefix sum of lambda_k log a_k. A zero a_k with lambda_k > 0
// kills every term from n = k on (the limit convention); a factor with
// lambda_k = 0 contributes 1.
double geomean_sum(const WeightSequence& w, std::span<const double> a);

// Best found value of geomean_sum(a)/sum(a) over the simplex, a lower
// bound for the weighted Carleman constant. Multiplicative fixed-point
// ascent (the update a_j <- lambda_j sum_{n>=j} g_n/Lambda_n / G lands back
// on the simplex by homogeneity) with damping whenever a full step does
// not improve; restarts run independently with per-restart seeded RNGs and
// merge deterministically, so fixed seed means fixed result.
struct CarlemanEstimate {
    std::size_t n = 0;
    double lower_bound_E = 0.0;
    std::vector<double> maximizer;  // on the simplex
    std::map<std::string, double> upper_bounds;
    std::size_t iterations = 0;  // total across restarts
    std::size_t restarts = 0;
    std::uint64_t seed = 0;
};
CarlemanEstimate optimize_ratio(const WeightSequence& w, std::size_t n,
                                std::size_t restarts = 8, std::uint64_t seed = 12345,
                                std::size_t max_iter = 2000, Exec exec = Exec::parallel);

// optimize_ratio plus the upper bounds from the conditions module
// (bennett_E sup, e^M, and the limit constant e^{1/(1+alpha)} for power
// weights). Throws std::logic_error if the ordering
//   lower_bound_E <= bennett_E <= e^M
// breaks beyond tolerance: that means an implementation bug, not a finding.
CarlemanEstimate bound_comparison(const WeightSequence& w, std::size_t n,
                                  std::size_t restarts = 8, std::uint64_t seed = 12345,
                                  Exec exec = Exec::parallel);

}  // namespace hardy
