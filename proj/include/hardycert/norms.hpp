#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "hardycert/weights.hpp"

namespace hardy {

enum class NormMethod { eigen, power_iteration, eta_bisection };

const char* norm_method_name(NormMethod m);

struct NormEstimate {
    double p = 2.0;
    std::size_t n = 0;
    double norm = 0.0;
    std::vector<double> maximizer;  // unit l^p, entrywise >= 0
    double residual = 0.0;          // stationarity residual at the maximizer
    std::size_t iterations = 0;
    bool converged = false;
    NormMethod method = NormMethod::power_iteration;
};

// y_n = (1/Lambda_n) sum_{k<=n} lambda_k x_k, one compensated running sum
std::vector<double> apply_forward(const WeightSequence& w, std::span<const double> x);

// (A^t y)_n = lambda_n sum_{k>=n} y_k / Lambda_k via compensated suffix sums
std::vector<double> apply_adjoint(const WeightSequence& w, std::span<const double> y);

double lp_norm(std::span<const double> x, double p);

// max_k |mu x_k^{p-1}/lambda_k - S_k| / S_k with S_k = sum_{n>=k} (Ax)_n^{p-1}/Lambda_n
// and mu = ||Ax||_p^p / ||x||_p^p; zero at an exact maximizer. Needs x > 0
// entrywise and strictly positive weights.
double stationarity_residual(const WeightSequence& w, double p, std::span<const double> x);

// Fixed-point iteration x <- normalize((A^t (Ax)^{p-1})^{1/(p-1)}) from a
// uniform positive start. The reported ratio ||Ax||_p is non-decreasing.
// converged requires both the relative norm change <= tol and the
// stationarity residual < residual_tol (residual is NaN and skipped when
// some lambda_k = 0).
NormEstimate estimate_pnorm(const WeightSequence& w, double p, std::size_t n,
                            double tol = 1e-12, std::size_t max_iter = 1000,
                            double residual_tol = 1e-8);

// Same iteration applied to A^t as an operator on l^q; by duality its norm
// equals ||A||_{p,p} for q = p/(p-1).
NormEstimate estimate_adjoint_qnorm(const WeightSequence& w, double q, std::size_t n,
                                    double tol = 1e-12, std::size_t max_iter = 1000);

// p = 2 only: ||A||^2 = 1/lambda_min(T) where T = (B^{-1})(B^{-1})^t is the
// explicit symmetric tridiagonal
//   T_ii = (Lambda_i/lambda_i)^2 + (Lambda_{i-1}/lambda_i)^2   (Lambda_0 = 0)
//   T_{i,i+1} = -Lambda_i^2 / (lambda_i lambda_{i+1})
// with lambda_min found by Sturm bisection.
NormEstimate exact_l2_norm(const WeightSequence& w, std::size_t n);

// Bisect on mu: the stationarity recurrence escapes iff mu is at or below
// the section's critical value mu*, so bracket [1, 2^k] and bisect; the
// norm is mu*^{1/p}.
NormEstimate norm_via_eta_bisection(const WeightSequence& w, double p, std::size_t n,
                                    double tol = 1e-12);

}  // namespace hardy
