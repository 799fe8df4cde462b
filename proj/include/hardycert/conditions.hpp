#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hardycert/parallel.hpp"
#include "hardycert/weights.hpp"

namespace hardy {

enum class Verdict { holds, violated, inconclusive };

const char* verdict_name(Verdict v);

// Per-index margins of one inequality over a prefix. margin >= 0 means the
// inequality holds at that index. The difference-based checks need the
// ratio at n+1, so the weight sequence must extend one past n_checked.
struct ConditionReport {
    std::string condition;
    double p = std::numeric_limits<double>::quiet_NaN();
    double L = std::numeric_limits<double>::quiet_NaN();
    double alpha = std::numeric_limits<double>::quiet_NaN();
    std::size_t n_checked = 0;
    std::vector<double> margins;
    std::map<std::string, std::vector<double>> extra_margins;
    double sup_value = std::numeric_limits<double>::quiet_NaN();
    Verdict verdict = Verdict::holds;
    std::optional<std::size_t> first_violation;  // 1-based
    std::string tail_note;
    std::map<std::string, double> extras;
};

// L = sup_n (Lambda_{n+1}/lambda_{n+1} - Lambda_n/lambda_n) over n <= N.
// With p supplied, margins are p minus the differences (the operator norm
// is at most p/(p-L) when L < p); without p the raw differences are
// reported and there is nothing to violate.
ConditionReport cartlidge_L(const WeightSequence& w, std::size_t n,
                            std::optional<double> p = std::nullopt,
                            Exec exec = Exec::parallel);

// Margins of
//   Lambda_{n+1}/lambda_{n+1} <= (Lambda_n/lambda_n)(1 - L lambda_n/(p Lambda_n))^{1-p} + L/p
// evaluated as r expm1((1-p) log1p(-L/(p r))) + L/p - (r_{n+1} - r_n) to
// keep the O(1/n)-sized margins clear of the O(n) cancellation in the
// literal form. Rejects L/(p r_n) >= 1.
ConditionReport thm13_condition_check(const WeightSequence& w, double p, double L,
                                      std::size_t n, Exec exec = Exec::parallel);

// Margins of the second-order sufficient condition
//   Lambda_{n+1}/lambda_{n+1} - Lambda_n/lambda_n <= L + (lambda_n/(2 Lambda_n))(1-1/p) L^2.
ConditionReport cor14_condition_check(const WeightSequence& w, double p, double L,
                                      std::size_t n, Exec exec = Exec::parallel);

// M = sup_n (Lambda_n/lambda_n) log(ratio_{n+1}/ratio_n); the norm bound is
// e^M (reported in extras). Pointwise M-terms never exceed the Cartlidge
// differences since x log(y/x) <= y - x.
ConditionReport carleman_M(const WeightSequence& w, std::size_t n, Exec exec = Exec::parallel);

// E = sup_n (Lambda_{n+1}/lambda_{n+1}) prod_{k<=n} (lambda_k/Lambda_k)^{lambda_k/Lambda_n},
// the Carleman-type constant; inner products evaluated in log space off one
// compensated prefix sum of lambda_k log(lambda_k/Lambda_k).
ConditionReport bennett_E(const WeightSequence& w, std::size_t n, Exec exec = Exec::parallel);

// The power-weight (lambda_k = k^alpha, L = 1/(alpha+1)) verification used
// for the 0 <= alpha <= 1 sweep. margins holds f_n(1/Lambda_n) with
//   f_n(x) = 1 + n^a x (1/(a+1) + (n^a/2)(1-1/p) x/(a+1)^2)
//            - (n/(n+1))^a (1 + (n+1)^a x),
// extra_margins["ratio_lower"] holds (1+1/n)^a - 1 - a/(2n), and
// extras["h_alpha"] holds h(a) = 2^a (5+4a) - 4 (1+a)^2.
ConditionReport thm61_checks(double alpha, double p, std::size_t n,
                             Exec exec = Exec::parallel);

// Discrete lower-bound inequality in the 0 < p < 1 regime:
//   sum_n ((1/n) sum_{k>=n} a_k)^p >= (p/(1-p))^p sum_n a_n^p,
// claimed for 0 < p <= 1/3. Tested on a = e_1 (fails iff p > 1/2: lhs = 1,
// rhs = (p/(1-p))^p) and on a two-term grid (a_1, a_2) = (1-t, t), which
// finds violating pairs already at p = 1/2. See the README note on the
// claimed failure threshold.
struct LsCounterexample {
    double p;
    double lhs;          // for a = (1, 0, 0, ...)
    double rhs;
    bool fails;          // lhs < rhs
    bool pair_found;     // two-term search found a violation
    double a1 = 0.0, a2 = 0.0;
    double pair_gap = 0.0;  // lhs - rhs at the worst pair (negative = violation)
};
LsCounterexample ls_counterexample(double p, std::size_t grid = 1000);

// Margins of the reversed-regime telescoping verification for the weight
// sequence built by reversed_w (0 < p <= 1/3, L > p); the growth condition
// ratio_{n+1} - ratio_n <= L is reported in extra_margins["growth"] and
// only downgrades the verdict to inconclusive when it fails. For power
// weights k^alpha the closed-form decay exponent of u_n and the theorem
// constant U^{1/p} = (1+alpha)p/(1-(1+alpha)p) land in extras.
ConditionReport reversed_condition_check(const WeightSequence& w, double p, double L,
                                         std::size_t n, Exec exec = Exec::parallel);

}  // namespace hardy
