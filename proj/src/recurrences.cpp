#include "hardycert/recurrences.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hardy {

namespace {

void require_positive_prefix(const WeightSequence& w, std::size_t n, const char* who) {
    if (n < 1 || n > w.size())
        throw std::invalid_argument(std::string(who) + ": n out of range");
    for (std::size_t k = 1; k <= n; ++k)
        if (w.lambda(k) == 0.0)
            throw std::domain_error(std::string(who) + ": lambda_" + std::to_string(k) +
                                    " = 0, ratio Lambda/lambda undefined");
}

void require_p_gt_1(double p, const char* who) {
    if (!(p > 1.0))
        throw std::invalid_argument(std::string(who) + ": needs p > 1, got p = " +
                                    std::to_string(p));
}

void require_L_in_0_p(double p, double L, const char* who) {
    if (!(L > 0.0) || !(L < p))
        throw std::invalid_argument(std::string(who) + ": needs 0 < L < p, got L = " +
                                    std::to_string(L) + ", p = " + std::to_string(p));
}

double log_sum_exp(double a, double b) {
    double hi = std::max(a, b), lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

// log(e^t - 1) for t > 0
double log_expm1(double t) {
    if (t > 36.0) return t + std::log1p(-std::exp(-t));
    return std::log(std::expm1(t));
}

std::vector<double> ratio_array(const WeightSequence& w, std::size_t n) {
    std::vector<double> r(n);
    for (std::size_t k = 1; k <= n; ++k) r[k - 1] = w.ratio(k);
    return r;
}

}  // namespace

const char* recurrence_kind_name(RecurrenceKind k) {
    switch (k) {
        case RecurrenceKind::eta: return "eta";
        case RecurrenceKind::mu_q: return "mu_q";
        case RecurrenceKind::ks_weights: return "ks_weights";
        case RecurrenceKind::gao_sequence: return "gao_sequence";
        case RecurrenceKind::reversed_w: return "reversed_w";
    }
    return "?";
}

EtaScan eta_scan(const WeightSequence& w, double p, double mu, std::size_t n) {
    require_p_gt_1(p, "eta_scan");
    if (!(mu > 0.0)) throw std::invalid_argument("eta_scan: needs mu > 0");
    require_positive_prefix(w, n, "eta_scan");

    double q = p / (p - 1.0);
    double log_root = -std::log(mu) / (p - 1.0);  // log of (1/mu)^{1/(p-1)}, the m_1 seed

    EtaScan scan;
    scan.log_m.reserve(n);
    scan.log_m.push_back(log_root);
    for (std::size_t k = 1; k <= n; ++k) {
        double log_r = std::log(w.ratio(k));
        // t <= 0 is exactly eta_k >= (Lambda_k/lambda_k)^p, and makes the
        // step's denominator nonpositive, so one sign test covers both.
        double t = p * log_r - (p - 1.0) * scan.log_m[k - 1];
        if (t <= 0.0) {
            scan.escaped = true;
            scan.escape_index = k;
            return scan;
        }
        if (k == n) break;
        double log_den = log_expm1(t) / (p - 1.0);
        double log_term = q * std::log(w.Lambda(k) / w.lambda(k + 1)) - log_den;
        scan.log_m.push_back(log_sum_exp(log_root, log_term));
    }
    return scan;
}

RecurrenceTrace eta_trace(const WeightSequence& w, double p, double mu, std::size_t n) {
    EtaScan scan = eta_scan(w, p, mu, n);
    RecurrenceTrace tr;
    tr.kind = RecurrenceKind::eta;
    tr.p = p;
    tr.mu = mu;
    std::size_t len = scan.log_m.size();
    tr.ratios = ratio_array(w, len);
    tr.values.resize(len);
    tr.log_values.resize(len);
    for (std::size_t i = 0; i < len; ++i) {
        tr.log_values[i] = (p - 1.0) * scan.log_m[i];
        tr.values[i] = std::exp(tr.log_values[i]);
    }
    if (scan.escaped) tr.escaped_at = scan.escape_index;
    return tr;
}

std::vector<double> maximizer_from_mu(const WeightSequence& w, double p, double mu,
                                      std::size_t n) {
    EtaScan scan = eta_scan(w, p, mu, n);
    if (scan.escaped)
        throw std::invalid_argument("maximizer_from_mu: recurrence escapes at index " +
                                    std::to_string(scan.escape_index) + ", mu too small");
    std::vector<double> log_a(n, 0.0);
    for (std::size_t k = 1; k < n; ++k) {
        double log_r = std::log(w.ratio(k));
        double t = p * log_r - (p - 1.0) * scan.log_m[k - 1];
        // Lambda_k/lambda_k - Omega_k = R_k (1 - e^{-t})
        double log_gap = log_r + std::log(-std::expm1(-t));
        log_a[k] = log_a[k - 1] +
                   (std::log(w.lambda(k + 1)) - std::log(w.Lambda(k)) + log_gap) / (p - 1.0);
    }
    double shift = *std::max_element(log_a.begin(), log_a.end());
    std::vector<double> a(n);
    for (std::size_t i = 0; i < n; ++i) a[i] = std::exp(log_a[i] - shift);
    double pw = 0.0;
    for (double v : a) pw += std::pow(v, p);
    double scale = std::pow(pw, -1.0 / p);
    for (double& v : a) v *= scale;
    return a;
}

RecurrenceTrace& barrier_check(RecurrenceTrace& trace, double p, double L) {
    if (trace.kind != RecurrenceKind::eta && trace.kind != RecurrenceKind::mu_q)
        throw std::invalid_argument("barrier_check: trace kind has no barrier");
    require_p_gt_1(p, "barrier_check");
    require_L_in_0_p(p, L, "barrier_check");
    double b = std::pow(1.0 - L / p, p / (p - 1.0));
    double c = (L / p) * std::pow(1.0 - L / p, 1.0 / (p - 1.0));
    trace.L = L;
    std::size_t len = trace.values.size();
    if (trace.ratios.size() < len) throw std::logic_error("barrier_check: trace lacks ratios");
    trace.barrier.resize(len);
    trace.first_violation.reset();
    for (std::size_t i = 0; i < len; ++i) {
        double root_barrier = (b + c) * trace.ratios[i] - c;
        bool viol;
        if (trace.kind == RecurrenceKind::eta) {
            // compare in logs so values = inf past double range still order
            trace.barrier[i] = std::pow(root_barrier, p - 1.0);
            viol = trace.log_values[i] >= (p - 1.0) * std::log(root_barrier);
        } else {
            trace.barrier[i] = root_barrier;
            viol = trace.values[i] >= root_barrier;
        }
        if (viol && !trace.first_violation) trace.first_violation = i + 1;
    }
    return trace;
}

RecurrenceTrace mu_trace_q(const WeightSequence& w, double p, double L, std::size_t n) {
    require_p_gt_1(p, "mu_trace_q");
    require_L_in_0_p(p, L, "mu_trace_q");
    require_positive_prefix(w, n, "mu_trace_q");

    double q = p / (p - 1.0);
    double base = std::pow((p - L) / p, q);

    RecurrenceTrace tr;
    tr.kind = RecurrenceKind::mu_q;
    tr.p = p;
    tr.L = L;
    tr.values.reserve(n);
    tr.values.push_back(base);
    for (std::size_t k = 1; k <= n; ++k) {
        double r = w.ratio(k);
        double mu_k = tr.values[k - 1];
        if (mu_k >= std::pow(r, q)) {
            tr.escaped_at = k;
            break;
        }
        if (k == n) break;
        double den = std::pow(r, p) * std::pow(mu_k, -(p - 1.0)) - 1.0;
        tr.values.push_back(base + std::pow(w.Lambda(k) / w.lambda(k + 1), q) /
                                       std::pow(den, 1.0 / (p - 1.0)));
    }
    std::size_t len = tr.values.size();
    tr.ratios = ratio_array(w, len);
    tr.log_values.resize(len);
    for (std::size_t i = 0; i < len; ++i) tr.log_values[i] = std::log(tr.values[i]);
    barrier_check(tr, p, L);
    return tr;
}

RecurrenceTrace ks_classical_weights(double p, std::size_t n) {
    require_p_gt_1(p, "ks_classical_weights");
    if (n < 1) throw std::invalid_argument("ks_classical_weights: needs n >= 1");

    std::vector<double> w(n + 1);
    w[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k)
        w[k] = (1.0 - 1.0 / (p * static_cast<double>(k))) * w[k - 1];

    double q = p / (p - 1.0);
    double U = std::pow(q, p);
    RecurrenceTrace tr;
    tr.kind = RecurrenceKind::ks_weights;
    tr.p = p;
    tr.values.assign(w.begin(), w.begin() + n);
    tr.log_values.resize(n);
    tr.margins.resize(n);
    for (std::size_t k = 1; k <= n; ++k) {
        double nd = static_cast<double>(k);
        tr.log_values[k - 1] = std::log(w[k - 1]);
        // prefix sum via the defining identity, exact by construction
        double S = (nd - 1.0 / p) / (1.0 - 1.0 / p) * w[k - 1];
        tr.margins[k - 1] = U * std::pow(nd, p) *
                                (std::pow(w[k - 1], p - 1.0) - std::pow(w[k], p - 1.0)) -
                            std::pow(S, p - 1.0);
        if (tr.margins[k - 1] < 0.0 && !tr.first_violation) tr.first_violation = k;
    }
    return tr;
}

RecurrenceTrace gao_sequence(const WeightSequence& w, double p, double L, std::size_t n) {
    require_p_gt_1(p, "gao_sequence");
    require_L_in_0_p(p, L, "gao_sequence");
    require_positive_prefix(w, n, "gao_sequence");

    double beta = L / (p - L);
    double U = std::pow(p / (p - L), p);

    std::vector<double> a(n + 1), A(n);
    a[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        double factor = 1.0 + beta - beta * w.lambda(k) / w.Lambda(k);
        A[k - 1] = factor * a[k - 1];
        a[k] = factor / (1.0 + beta) * a[k - 1];
    }

    RecurrenceTrace tr;
    tr.kind = RecurrenceKind::gao_sequence;
    tr.p = p;
    tr.L = L;
    tr.beta = beta;
    tr.values.assign(a.begin(), a.begin() + n);
    tr.log_values.resize(n);
    tr.margins.resize(n);
    for (std::size_t k = 1; k <= n; ++k) {
        tr.log_values[k - 1] = std::log(a[k - 1]);
        double lead = U * std::pow(a[k - 1], p - 1.0) / w.lambda(k);
        if (k < n) lead -= U * std::pow(a[k], p - 1.0) / w.lambda(k + 1);
        tr.margins[k - 1] = lead - std::pow(A[k - 1], p - 1.0) / w.Lambda(k);
        if (tr.margins[k - 1] < 0.0 && !tr.first_violation) tr.first_violation = k;
    }
    return tr;
}

RecurrenceTrace reversed_w(const WeightSequence& w, double p, double L, std::size_t n) {
    if (!(p > 0.0) || !(p <= 1.0 / 3.0))
        throw std::invalid_argument("reversed_w: needs 0 < p <= 1/3, got p = " +
                                    std::to_string(p));
    if (!(L > p))
        throw std::invalid_argument("reversed_w: needs L > p, got L = " + std::to_string(L));
    require_positive_prefix(w, std::min(n + 1, w.size()), "reversed_w");
    if (w.size() < n + 1)
        throw std::invalid_argument("reversed_w: needs weights through n+1 = " +
                                    std::to_string(n + 1) + " for the last margin");

    double beta = (2.0 * p - L) / (L - p);
    std::vector<double> ws(n + 1), Wn(n);
    ws[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        double coef = (1.0 + beta) * w.ratio(k) - beta;
        if (!(coef > 0.0))
            throw std::domain_error("reversed_w: (1+beta) Lambda_n/lambda_n - beta <= 0 at n = " +
                                    std::to_string(k) + " (beta = " + std::to_string(beta) + ")");
        Wn[k - 1] = coef * ws[k - 1];
        ws[k] = coef * w.lambda(k + 1) / ((1.0 + beta) * w.Lambda(k)) * ws[k - 1];
    }

    // exponents are negative here (0 < p < 1), so go through logs; margins
    // shrink like a power of n and the log route keeps their sign honest
    double e_w = -1.0 / (1.0 - p);
    double e_L = -p / (1.0 - p);
    double C = std::pow((L - p) / p, p / (1.0 - p));
    auto u = [&](std::size_t k) {  // k is 0-based into ws
        return std::exp(e_w * std::log(ws[k]) + e_L * std::log(w.Lambda(k + 1)));
    };

    RecurrenceTrace tr;
    tr.kind = RecurrenceKind::reversed_w;
    tr.p = p;
    tr.L = L;
    tr.beta = beta;
    tr.values.assign(ws.begin(), ws.begin() + n);
    tr.log_values.resize(n);
    tr.margins.resize(n);
    double u_cur = u(0);
    for (std::size_t k = 1; k <= n; ++k) {
        tr.log_values[k - 1] = std::log(ws[k - 1]);
        double u_next = u(k);
        double lhs = std::exp(e_w * std::log(Wn[k - 1]) + e_L * std::log(w.lambda(k)));
        tr.margins[k - 1] = C * (u_cur - u_next) - lhs;
        if (tr.margins[k - 1] < 0.0 && !tr.first_violation) tr.first_violation = k;
        u_cur = u_next;
    }
    return tr;
}

}  // namespace hardy
