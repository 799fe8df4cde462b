#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "hardycert/weights.hpp"

namespace hardy {

enum class RecurrenceKind { eta, mu_q, ks_weights, gao_sequence, reversed_w };

const char* recurrence_kind_name(RecurrenceKind k);

// One stationarity/comparison sequence together with whatever per-index
// checks apply to it. values carries the sequence in its natural scale
// (eta_k, mu_n, w_n, a_n); log_values always carries log(values) so the
// eta scale surviving values = inf stays usable. barrier and margins are
// filled only by the kinds that define them.
struct RecurrenceTrace {
    RecurrenceKind kind;
    double p = std::numeric_limits<double>::quiet_NaN();
    double L = std::numeric_limits<double>::quiet_NaN();
    double mu = std::numeric_limits<double>::quiet_NaN();
    double beta = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> ratios;  // Lambda_k/lambda_k alongside eta/mu traces
    std::vector<double> values;
    std::vector<double> log_values;
    std::vector<double> barrier;
    std::vector<double> margins;
    std::optional<std::size_t> first_violation;  // 1-based, barrier or margin check
    std::optional<std::size_t> escaped_at;       // 1-based
};

// Backward recurrence for the Lagrange multiplier sequence of
// sup ||Ax||_p^p subject to ||x||_p^p = 1 on a length-N section:
//   eta_1 = 1/mu
//   eta_{k+1}^{1/(p-1)} = (Lambda_k/lambda_{k+1})
//       * (Lambda_k eta_k / lambda_{k+1} / ((Lambda_k/lambda_k)^p - eta_k))^{1/(p-1)}
//       + (1/mu)^{1/(p-1)}
// Escape (eta_k >= (Lambda_k/lambda_k)^p, which subsumes a nonpositive
// denominator) means mu is at or below the section's critical value; the
// trace stops at the escaping index and records it.
RecurrenceTrace eta_trace(const WeightSequence& w, double p, double mu, std::size_t n);

// Same recurrence kept in the root scale m_k = eta_k^{1/(p-1)}, evaluated in
// log-domain. This is what the bisection and the maximizer reconstruction
// consume; eta_trace wraps it.
struct EtaScan {
    bool escaped = false;
    std::size_t escape_index = 0;  // 1-based, meaningful when escaped
    std::vector<double> log_m;     // filled through the last computed index
};
EtaScan eta_scan(const WeightSequence& w, double p, double mu, std::size_t n);

// Unit-l^p maximizer recovered from the scan at a non-escaping mu via
//   a_{k+1}/a_k = [(lambda_{k+1}/Lambda_k)(Lambda_k/lambda_k - Omega_k)]^{1/(p-1)},
//   Omega_k = eta_k (lambda_k/Lambda_k)^{p-1}.
// Throws if the scan escapes (mu too small).
std::vector<double> maximizer_from_mu(const WeightSequence& w, double p, double mu,
                                      std::size_t n);

// Annotates an eta or mu_q trace with the induction barrier
//   eta_k^{1/(p-1)} < (b+c) Lambda_k/lambda_k - c,
//   b = (1-L/p)^{p/(p-1)},  c = (L/p)(1-L/p)^{1/(p-1)},
// valid for mu > (1-L/p)^{-p}. barrier is stored in the trace's own value
// scale. first_violation flags values[k] >= barrier[k]; at the critical mu
// the base index sits exactly on the barrier, so a flagged index 1 with
// matching values there is the expected boundary case, not a failure.
RecurrenceTrace& barrier_check(RecurrenceTrace& trace, double p, double L);

// Forward sequence from the dual (q = p/(p-1)) route:
//   mu_1 = ((p-L)/p)^q
//   mu_{n+1} = ((p-L)/p)^q
//       + (Lambda_n/lambda_{n+1})^q / ((Lambda_n/lambda_n)^p mu_n^{-(p-1)} - 1)^{q-1}
// Kept in plain arithmetic on purpose: it must stay an independent route
// from eta_scan so the identification mu_n = eta_n^{1/(p-1)} at
// mu = (p/(p-L))^p cross-checks two different evaluations.
// escaped_at records the first n with mu_n >= (Lambda_n/lambda_n)^q; the
// barrier annotation is applied on construction.
RecurrenceTrace mu_trace_q(const WeightSequence& w, double p, double L, std::size_t n);

// Kaluza-Szego weight sequence for the classical Hardy bound on the Cesaro
// matrix: w_1 = 1, w_{n+1} = (1 - 1/(pn)) w_n, so that
// sum_{i<=n} w_i = ((n - 1/p)/(1 - 1/p)) w_n exactly. margins[n-1] holds
//   q^p n^p (w_n^{p-1} - w_{n+1}^{p-1}) - (sum_{i<=n} w_i)^{p-1}
// using the genuine w_{n+1} (the sequence is generated one step past n).
RecurrenceTrace ks_classical_weights(double p, std::size_t n);

// Comparison sequence used to prove the p/(p-L) bound from the ratio
// condition: beta = L/(p-L), a_1 = 1,
//   a_{n+1} = (1+beta-beta lambda_n/Lambda_n) a_n / (1+beta).
// margins hold, with U = (p/(p-L))^p and A_n = (1+beta-beta lambda_n/Lambda_n) a_n,
//   U (a_n^{p-1}/lambda_n - a_{n+1}^{p-1}/lambda_{n+1}) - A_n^{p-1}/Lambda_n
// for n < N and the truncated terminal form U a_N^{p-1}/lambda_N - A_N^{p-1}/Lambda_N.
RecurrenceTrace gao_sequence(const WeightSequence& w, double p, double L, std::size_t n);

// Weight sequence for the reversed (0 < p <= 1/3) inequality:
// beta = (2p-L)/(L-p), w_1 = 1,
//   w_{n+1} = ((1+beta) Lambda_n/lambda_n - beta) lambda_{n+1} / ((1+beta) Lambda_n) w_n.
// margins hold, with W_n = ((1+beta) Lambda_n/lambda_n - beta) w_n and
// C = ((L-p)/p)^{p/(1-p)},
//   C (u_n - u_{n+1}) - W_n^{-1/(1-p)} lambda_n^{-p/(1-p)},
//   u_n = w_n^{-1/(1-p)} Lambda_n^{-p/(1-p)}.
// Requires L > p; rejects any n with (1+beta) Lambda_n/lambda_n - beta <= 0.
RecurrenceTrace reversed_w(const WeightSequence& w, double p, double L, std::size_t n);

}  // namespace hardy
