#include "hardycert/conditions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hardycert/accum.hpp"
#include "hardycert/recurrences.hpp"

namespace hardy {

namespace {

// ratios R_1..R_{m}; throws on zero lambda
std::vector<double> ratios_through(const WeightSequence& w, std::size_t m, const char* who) {
    if (m > w.size())
        throw std::invalid_argument(std::string(who) + ": needs weights through n+1 = " +
                                    std::to_string(m) + ", have " + std::to_string(w.size()));
    std::vector<double> r(m);
    for (std::size_t k = 1; k <= m; ++k) r[k - 1] = w.ratio(k);
    return r;
}

void finish_min_margin(ConditionReport& rep) {
    rep.first_violation.reset();
    rep.verdict = Verdict::holds;
    for (std::size_t i = 0; i < rep.margins.size(); ++i) {
        if (rep.margins[i] < 0.0) {
            rep.first_violation = i + 1;
            rep.verdict = Verdict::violated;
            break;
        }
    }
    if (!rep.margins.empty())
        rep.extras["min_margin"] = *std::min_element(rep.margins.begin(), rep.margins.end());
}

// observed sup of the ratio differences, the quantity the growth conditions bound
double max_ratio_diff(const std::vector<double>& r, std::size_t n) {
    double sup = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) sup = std::max(sup, r[i + 1] - r[i]);
    return sup;
}

}  // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::violated: return "violated";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

ConditionReport cartlidge_L(const WeightSequence& w, std::size_t n, std::optional<double> p,
                            Exec exec) {
    if (n < 1) throw std::invalid_argument("cartlidge_L: needs n >= 1");
    std::vector<double> r = ratios_through(w, n + 1, "cartlidge_L");

    ConditionReport rep;
    rep.condition = "cartlidge";
    rep.n_checked = n;
    rep.margins.resize(n);
    std::vector<double> diffs(n);
    for_each_index(n, exec, [&](std::size_t i) { diffs[i] = r[i + 1] - r[i]; });
    rep.sup_value = *std::max_element(diffs.begin(), diffs.end());
    if (p) {
        rep.p = *p;
        for_each_index(n, exec, [&](std::size_t i) { rep.margins[i] = *p - diffs[i]; });
        finish_min_margin(rep);
        rep.extras["bound"] = rep.sup_value < *p
                                  ? *p / (*p - rep.sup_value)
                                  : std::numeric_limits<double>::infinity();
    } else {
        rep.margins = diffs;
        rep.verdict = Verdict::inconclusive;  // nothing to test without p
    }
    return rep;
}

ConditionReport thm13_condition_check(const WeightSequence& w, double p, double L,
                                      std::size_t n, Exec exec) {
    if (!(p > 1.0)) throw std::invalid_argument("thm13_condition_check: needs p > 1");
    if (!(L > 0.0) || !(L < p))
        throw std::invalid_argument("thm13_condition_check: needs 0 < L < p");
    std::vector<double> r = ratios_through(w, n + 1, "thm13_condition_check");
    for (std::size_t i = 0; i < n; ++i)
        if (L / (p * r[i]) >= 1.0)
            throw std::domain_error(
                "thm13_condition_check: 1 - L lambda_n/(p Lambda_n) <= 0 at n = " +
                std::to_string(i + 1));

    ConditionReport rep;
    rep.condition = "thm13";
    rep.p = p;
    rep.L = L;
    rep.n_checked = n;
    rep.margins.resize(n);
    for_each_index(n, exec, [&](std::size_t i) {
        double grown = r[i] * std::expm1((1.0 - p) * std::log1p(-L / (p * r[i])));
        rep.margins[i] = grown + L / p - (r[i + 1] - r[i]);
    });
    finish_min_margin(rep);
    rep.sup_value = max_ratio_diff(r, n);
    rep.extras["bound"] = p / (p - L);
    return rep;
}

ConditionReport cor14_condition_check(const WeightSequence& w, double p, double L,
                                      std::size_t n, Exec exec) {
    if (!(p > 1.0)) throw std::invalid_argument("cor14_condition_check: needs p > 1");
    if (!(L > 0.0) || !(L < p))
        throw std::invalid_argument("cor14_condition_check: needs 0 < L < p");
    std::vector<double> r = ratios_through(w, n + 1, "cor14_condition_check");

    ConditionReport rep;
    rep.condition = "cor14";
    rep.p = p;
    rep.L = L;
    rep.n_checked = n;
    rep.margins.resize(n);
    for_each_index(n, exec, [&](std::size_t i) {
        rep.margins[i] = L + (1.0 - 1.0 / p) * L * L / (2.0 * r[i]) - (r[i + 1] - r[i]);
    });
    finish_min_margin(rep);
    rep.sup_value = max_ratio_diff(r, n);
    rep.extras["bound"] = p / (p - L);
    return rep;
}

ConditionReport carleman_M(const WeightSequence& w, std::size_t n, Exec exec) {
    if (n < 1) throw std::invalid_argument("carleman_M: needs n >= 1");
    std::vector<double> r = ratios_through(w, n + 1, "carleman_M");

    ConditionReport rep;
    rep.condition = "carleman_M";
    rep.n_checked = n;
    rep.margins.resize(n);
    for_each_index(n, exec, [&](std::size_t i) {
        rep.margins[i] = r[i] * std::log1p((r[i + 1] - r[i]) / r[i]);
    });
    rep.sup_value = *std::max_element(rep.margins.begin(), rep.margins.end());
    rep.extras["e_M"] = std::exp(rep.sup_value);
    return rep;
}

ConditionReport bennett_E(const WeightSequence& w, std::size_t n, Exec exec) {
    if (n < 1) throw std::invalid_argument("bennett_E: needs n >= 1");
    std::vector<double> r = ratios_through(w, n + 1, "bennett_E");

    // S_n = sum_{k<=n} lambda_k log(lambda_k/Lambda_k), then
    // E_n = r_{n+1} exp(S_n / Lambda_n)
    std::vector<double> terms(n);
    for (std::size_t k = 1; k <= n; ++k)
        terms[k - 1] = w.lambda(k) * std::log(w.lambda(k) / w.Lambda(k));
    std::vector<double> S = prefix_sums(terms);

    ConditionReport rep;
    rep.condition = "bennett_E";
    rep.n_checked = n;
    rep.margins.resize(n);
    for_each_index(n, exec, [&](std::size_t i) {
        rep.margins[i] = r[i + 1] * std::exp(S[i] / w.prefix()[i]);
    });
    rep.sup_value = *std::max_element(rep.margins.begin(), rep.margins.end());
    return rep;
}

ConditionReport thm61_checks(double alpha, double p, std::size_t n, Exec exec) {
    if (!(alpha >= 0.0) || !(alpha <= 1.0))
        throw std::invalid_argument("thm61_checks: needs 0 <= alpha <= 1");
    if (!(p > 1.0)) throw std::invalid_argument("thm61_checks: needs p > 1");
    if (n < 1) throw std::invalid_argument("thm61_checks: needs n >= 1");

    WeightSequence w = make_weights(WeightSpec::power(alpha), n);

    ConditionReport rep;
    rep.condition = "thm61";
    rep.p = p;
    rep.alpha = alpha;
    rep.L = 1.0 / (alpha + 1.0);
    rep.n_checked = n;
    rep.margins.resize(n);
    std::vector<double>& ratio_lower = rep.extra_margins["ratio_lower"];
    ratio_lower.resize(n);
    double a1 = alpha + 1.0;
    for_each_index(n, exec, [&](std::size_t i) {
        double nd = static_cast<double>(i + 1);
        double na = std::pow(nd, alpha);
        double x = 1.0 / w.prefix()[i];
        // f_n(x) regrouped: the 1 and the (n/(n+1))^a (n+1)^a x pieces cancel
        // against their counterparts analytically, leaving three O(1/n) terms
        double t1 = -std::expm1(-alpha * std::log1p(1.0 / nd));
        double t2 = na * x * (1.0 / a1 - 1.0);
        double t3 = 0.5 * na * na * (1.0 - 1.0 / p) * x * x / (a1 * a1);
        rep.margins[i] = t1 + t2 + t3;
        ratio_lower[i] = std::expm1(alpha * std::log1p(1.0 / nd)) - alpha / (2.0 * nd);
    });
    double h = std::pow(2.0, alpha) * (5.0 + 4.0 * alpha) - 4.0 * (1.0 + alpha) * (1.0 + alpha);
    rep.extras["h_alpha"] = h;
    finish_min_margin(rep);
    double min_ratio = *std::min_element(ratio_lower.begin(), ratio_lower.end());
    rep.extras["min_ratio_lower"] = min_ratio;
    if (min_ratio < 0.0 || h < 0.0) {
        rep.verdict = Verdict::violated;
        if (!rep.first_violation && min_ratio < 0.0)
            rep.first_violation =
                1 + (std::min_element(ratio_lower.begin(), ratio_lower.end()) -
                     ratio_lower.begin());
    }
    return rep;
}

LsCounterexample ls_counterexample(double p, std::size_t grid) {
    if (!(p > 0.0) || !(p < 1.0))
        throw std::invalid_argument("ls_counterexample: needs 0 < p < 1");
    if (grid < 2) throw std::invalid_argument("ls_counterexample: needs grid >= 2");

    LsCounterexample out;
    out.p = p;
    out.lhs = 1.0;  // a = e_1: only the n = 1 term survives on the left
    out.rhs = std::pow(p / (1.0 - p), p);
    out.fails = out.lhs < out.rhs;

    // two-term vectors (a_1, a_2) = (1-t, t); by homogeneity this covers
    // every direction. lhs = (a_1+a_2)^p + (a_2/2)^p, rhs as above.
    double worst = std::numeric_limits<double>::infinity();
    double cst = std::pow(p / (1.0 - p), p);
    for (std::size_t i = 0; i <= grid; ++i) {
        double t = static_cast<double>(i) / static_cast<double>(grid);
        double a1 = 1.0 - t, a2 = t;
        double lhs = std::pow(a1 + a2, p) + std::pow(a2 / 2.0, p);
        double rhs = cst * (std::pow(a1, p) + std::pow(a2, p));
        double gap = lhs - rhs;
        if (gap < worst) {
            worst = gap;
            out.a1 = a1;
            out.a2 = a2;
        }
    }
    out.pair_gap = worst;
    out.pair_found = worst < 0.0;
    return out;
}

ConditionReport reversed_condition_check(const WeightSequence& w, double p, double L,
                                         std::size_t n, Exec exec) {
    RecurrenceTrace tr = reversed_w(w, p, L, n);  // validates p, L, weights
    std::vector<double> r = ratios_through(w, n + 1, "reversed_condition_check");

    ConditionReport rep;
    rep.condition = "reversed_LS";
    rep.p = p;
    rep.L = L;
    rep.n_checked = n;
    rep.margins = tr.margins;
    std::vector<double>& growth = rep.extra_margins["growth"];
    growth.resize(n);
    for_each_index(n, exec, [&](std::size_t i) { growth[i] = L - (r[i + 1] - r[i]); });
    finish_min_margin(rep);
    rep.sup_value = max_ratio_diff(r, n);
    double min_growth = *std::min_element(growth.begin(), growth.end());
    rep.extras["min_growth_margin"] = min_growth;
    if (min_growth < 0.0 && rep.verdict == Verdict::holds) {
        rep.verdict = Verdict::inconclusive;
        rep.tail_note = "growth condition ratio_{n+1} - ratio_n <= L fails on the prefix; "
                        "the telescoping margins alone do not certify the lower bound";
    }
    if (w.spec().kind == WeightKind::power) {
        double a = w.spec().alpha;
        rep.alpha = a;
        rep.extras["decay_exponent"] =
            -(1.0 - (2.0 + a) * p + p * p * (1.0 + a)) / (p * (1.0 - p));
        double denom = 1.0 - (1.0 + a) * p;
        if (denom > 0.0) rep.extras["U_root_p"] = (1.0 + a) * p / denom;
        if (rep.tail_note.empty())
            rep.tail_note = "u_n decays like n^" +
                            std::to_string(rep.extras["decay_exponent"]) +
                            ", so the telescoped tail vanishes and the prefix check extends";
    } else if (rep.tail_note.empty()) {
        rep.tail_note = "no closed-form tail decay for this weight family; prefix check only";
    }
    return rep;
}

}  // namespace hardy
