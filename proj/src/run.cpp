#include "hardycert/run.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hardycert/carleman.hpp"
#include "hardycert/conditions.hpp"
#include "hardycert/norms.hpp"
#include "hardycert/recurrences.hpp"
#include "hardycert/wirtinger.hpp"

namespace hardy {

namespace {

double resolve_L(const RunConfig& cfg, const WeightSpec& spec, double alpha_override = -2.0) {
    if (cfg.L) return *cfg.L;
    double alpha;
    if (alpha_override > -1.5) alpha = alpha_override;
    else if (spec.kind == WeightKind::power) alpha = spec.alpha;
    else if (spec.kind == WeightKind::constant) alpha = 0.0;
    else
        throw std::invalid_argument(
            "L = auto means L = 1/(alpha+1) and needs power or constant weights; "
            "pass --L explicitly for this weight family");
    return 1.0 / (alpha + 1.0);
}

void note_verdict(Report& rep, const ConditionReport& c, const std::string& label) {
    std::ostringstream os;
    os << label << "verdict = " << verdict_name(c.verdict);
    if (c.first_violation) os << ", first violation at n = " << *c.first_violation;
    if (!std::isnan(c.sup_value)) os << ", sup = " << format_double(c.sup_value);
    for (const auto& [k, v] : c.extras) os << ", " << k << " = " << format_double(v);
    rep.notes.push_back(os.str());
    if (!c.tail_note.empty()) rep.notes.push_back(label + c.tail_note);
}

Report run_norm(const RunConfig& cfg) {
    WeightSpec spec = resolve_weight_spec(cfg.weights);
    WeightSequence w = make_weights(spec, cfg.n);
    Report rep;
    rep.command = "norm";
    rep.params = {{"weights", spec.to_string()},
                  {"N", std::to_string(cfg.n)},
                  {"method", cfg.method},
                  {"tol", format_double(cfg.tol)},
                  {"max_iter", std::to_string(cfg.max_iter)}};
    for (double p : cfg.p_grid) {
        if (!(p > 1.0)) throw std::invalid_argument("norm: needs p > 1");
        std::vector<NormEstimate> ests;
        if (cfg.method == "power" || cfg.method == "all")
            ests.push_back(estimate_pnorm(w, p, cfg.n, cfg.tol, cfg.max_iter));
        if (cfg.method == "eigen" || cfg.method == "all") {
            if (p == 2.0)
                ests.push_back(exact_l2_norm(w, cfg.n));
            else if (cfg.method == "eigen")
                throw std::invalid_argument("method eigen works for p = 2 only");
            else
                rep.notes.push_back("eigen method skipped for p = " + format_double(p));
        }
        if (cfg.method == "eta" || cfg.method == "all")
            ests.push_back(norm_via_eta_bisection(w, p, cfg.n, cfg.tol));
        for (const NormEstimate& e : ests) {
            rep.rows.push_back({{"p", p},
                                {"method", norm_method_name(e.method)},
                                {"norm", e.norm},
                                {"residual", e.residual},
                                {"iterations", e.iterations},
                                {"converged", e.converged}});
            if (!e.converged)
                rep.notes.push_back(std::string(norm_method_name(e.method)) + " at p = " +
                                    format_double(p) + " did not converge");
        }
    }
    return rep;
}

ConditionReport dispatch_condition(const std::string& name, const WeightSequence& w, double p,
                                   double L, std::size_t n, Exec exec) {
    if (name == "cartlidge") return cartlidge_L(w, n, p, exec);
    if (name == "thm13") return thm13_condition_check(w, p, L, n, exec);
    if (name == "cor14") return cor14_condition_check(w, p, L, n, exec);
    if (name == "reversed_LS") return reversed_condition_check(w, p, L, n, exec);
    throw std::invalid_argument("condition '" + name + "' does not fit this dispatch");
}

Report run_conditions(const RunConfig& cfg) {
    WeightSpec spec = resolve_weight_spec(cfg.weights);
    Report rep;
    rep.command = "conditions";
    rep.params = {{"condition", cfg.condition},
                  {"weights", spec.to_string()},
                  {"N", std::to_string(cfg.n)}};

    auto emit = [&](const ConditionReport& c, double p_label) {
        for (std::size_t i = 0; i < c.margins.size(); ++i) {
            Row row{{"p", p_label}, {"L", c.L}, {"n", i + 1}, {"margin", c.margins[i]}};
            for (const auto& [k, vs] : c.extra_margins) row.push_back({k, vs[i]});
            rep.rows.push_back(std::move(row));
        }
    };

    if (cfg.condition == "carleman_M" || cfg.condition == "bennett_E") {
        WeightSequence w = make_weights(spec, cfg.n + 1);
        ConditionReport c = cfg.condition == "carleman_M" ? carleman_M(w, cfg.n)
                                                          : bennett_E(w, cfg.n);
        emit(c, std::numeric_limits<double>::quiet_NaN());
        note_verdict(rep, c, "");
        return rep;
    }
    for (double p : cfg.p_grid) {
        std::string label = "p = " + format_double(p) + ": ";
        if (cfg.condition == "thm61") {
            if (spec.kind != WeightKind::power && spec.kind != WeightKind::constant)
                throw std::invalid_argument("thm61 checks power weights; pass --weights power:A");
            double alpha = spec.kind == WeightKind::power ? spec.alpha : 0.0;
            ConditionReport c = thm61_checks(alpha, p, cfg.n);
            emit(c, p);
            note_verdict(rep, c, label);
            continue;
        }
        WeightSequence w = make_weights(spec, cfg.n + 1);
        double L = cfg.condition == "cartlidge" ? 0.0 : resolve_L(cfg, spec);
        ConditionReport c = dispatch_condition(cfg.condition, w, p, L, cfg.n, Exec::parallel);
        emit(c, p);
        note_verdict(rep, c, label);
    }
    return rep;
}

Report run_certify(const RunConfig& cfg) {
    WeightSpec spec = resolve_weight_spec(cfg.weights);
    if (cfg.condition != "thm13" && cfg.condition != "cor14" && cfg.condition != "cartlidge")
        throw std::invalid_argument("certify accepts condition thm13, cor14 or cartlidge");
    WeightSequence w = make_weights(spec, cfg.n + 1);
    Report rep;
    rep.command = "certify";
    rep.params = {{"condition", cfg.condition},
                  {"weights", spec.to_string()},
                  {"N", std::to_string(cfg.n)},
                  {"method", cfg.method}};
    for (double p : cfg.p_grid) {
        double L = resolve_L(cfg, spec);
        ConditionReport c = dispatch_condition(cfg.condition, w, p, L, cfg.n, Exec::parallel);
        bool cond_ok = c.verdict == Verdict::holds;
        double bound = L < p ? p / (p - L) : std::numeric_limits<double>::infinity();
        NormEstimate est;
        if (cfg.method == "eigen") {
            if (p != 2.0) throw std::invalid_argument("method eigen works for p = 2 only");
            est = exact_l2_norm(w, cfg.n);
        } else if (cfg.method == "eta" || cfg.method == "all") {
            est = norm_via_eta_bisection(w, p, cfg.n, cfg.tol);
        } else {
            est = estimate_pnorm(w, p, cfg.n, cfg.tol, cfg.max_iter);
        }
        bool certified = cond_ok && est.norm <= bound + 1e-9;
        if (!certified) rep.assertion_failed = true;
        rep.rows.push_back({{"p", p},
                            {"L", L},
                            {"condition_verdict", verdict_name(c.verdict)},
                            {"min_margin", c.extras.count("min_margin")
                                               ? c.extras.at("min_margin")
                                               : std::numeric_limits<double>::quiet_NaN()},
                            {"norm_estimate", est.norm},
                            {"bound", bound},
                            {"certified", certified}});
        note_verdict(rep, c, "p = " + format_double(p) + ": ");
    }
    return rep;
}

Report run_carleman(const RunConfig& cfg) {
    WeightSpec spec = resolve_weight_spec(cfg.weights);
    WeightSequence w = make_weights(spec, cfg.n + 1);
    CarlemanEstimate est = bound_comparison(w, cfg.n, cfg.restarts, cfg.seed);
    Report rep;
    rep.command = "carleman";
    rep.params = {{"weights", spec.to_string()},
                  {"N", std::to_string(cfg.n)},
                  {"restarts", std::to_string(cfg.restarts)},
                  {"seed", std::to_string(cfg.seed)}};
    rep.rows.push_back({{"quantity", "lower_bound_E"}, {"value", est.lower_bound_E}});
    for (const auto& [k, v] : est.upper_bounds)
        rep.rows.push_back({{"quantity", k}, {"value", v}});
    rep.rows.push_back(
        {{"quantity", "iterations"}, {"value", static_cast<double>(est.iterations)}});
    return rep;
}

Report run_wirtinger(const RunConfig& cfg) {
    Report rep;
    rep.command = "wirtinger";
    rep.params = {{"a", format_double(cfg.a)},
                  {"b", format_double(cfg.b)},
                  {"N", std::to_string(cfg.n)},
                  {"samples", std::to_string(cfg.samples)},
                  {"seed", std::to_string(cfg.seed)}};
    std::vector<double> spectrum = tridiag_spectrum(cfg.a, cfg.b, cfg.n);
    for (std::size_t k = 0; k < spectrum.size(); ++k)
        rep.rows.push_back({{"item", "eigenvalue"}, {"k", k + 1}, {"value", spectrum[k]}});
    auto scalar = [&](const std::string& name, double v) {
        rep.rows.push_back({{"item", name}, {"k", 0}, {"value", v}});
    };
    if (cfg.a == 1.0 && cfg.b == 1.0) {
        scalar("fan_taussky_todd_lower", fan_taussky_todd_lower(cfg.n));
        scalar("milovanovic_upper", milovanovic_upper(cfg.n));
    }
    if (cfg.n >= 2) {
        scalar("redheffer_identity_error_plus",
               redheffer_mu(cfg.a, cfg.b, cfg.n, TelescopeSign::plus).max_identity_error);
        scalar("redheffer_identity_error_minus",
               redheffer_mu(cfg.a, cfg.b, cfg.n, TelescopeSign::minus).max_identity_error);
    }
    // random sandwich probes; vectors drawn serially so the report is a
    // pure function of the seed, margins evaluated in parallel
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::vector<double>> xs(cfg.samples, std::vector<double>(cfg.n));
    for (auto& x : xs)
        for (double& v : x) v = gauss(rng);
    std::vector<LossersMargins> margins = lossers_bounds_batch(cfg.a, cfg.b, xs);
    double lo = std::numeric_limits<double>::infinity(), hi = lo;
    for (const auto& m : margins) {
        lo = std::min(lo, m.lower);
        hi = std::min(hi, m.upper);
    }
    if (!margins.empty()) {
        scalar("lossers_min_lower_margin", lo);
        scalar("lossers_min_upper_margin", hi);
    }
    return rep;
}

Report run_sweep(const RunConfig& cfg) {
    std::vector<double> alphas = cfg.alpha_grid;
    if (alphas.empty()) alphas = parse_number_list("0:0.1:1");
    if (cfg.condition == "carleman_M" || cfg.condition == "bennett_E" ||
        cfg.condition == "reversed_LS")
        throw std::invalid_argument("sweep supports cartlidge, thm13, cor14 and thm61");

    Report rep;
    rep.command = "sweep";
    rep.params = {{"condition", cfg.condition},
                  {"alpha", [&] {
                       std::string s;
                       for (std::size_t i = 0; i < alphas.size(); ++i)
                           s += (i ? "," : "") + format_double(alphas[i]);
                       return s;
                   }()},
                  {"p", [&] {
                       std::string s;
                       for (std::size_t i = 0; i < cfg.p_grid.size(); ++i)
                           s += (i ? "," : "") + format_double(cfg.p_grid[i]);
                       return s;
                   }()},
                  {"N", std::to_string(cfg.n)}};

    std::size_t cells = alphas.size() * cfg.p_grid.size();
    std::vector<Row> rows(cells);
    std::vector<std::string> errors(cells);
    // parallel over cells, so each cell runs its margins serially
    for_each_index(cells, Exec::parallel, [&](std::size_t idx) {
        double alpha = alphas[idx / cfg.p_grid.size()];
        double p = cfg.p_grid[idx % cfg.p_grid.size()];
        try {
            double L = cfg.L ? *cfg.L : 1.0 / (alpha + 1.0);
            ConditionReport c;
            if (cfg.condition == "thm61") {
                c = thm61_checks(alpha, p, cfg.n, Exec::serial);
            } else {
                WeightSequence w = make_weights(WeightSpec::power(alpha), cfg.n + 1);
                c = dispatch_condition(cfg.condition, w, p, L, cfg.n, Exec::serial);
            }
            double min_margin = c.extras.count("min_margin")
                                    ? c.extras.at("min_margin")
                                    : std::numeric_limits<double>::quiet_NaN();
            rows[idx] = {{"alpha", alpha},
                         {"p", p},
                         {"L", c.L},
                         {"verdict", verdict_name(c.verdict)},
                         {"min_margin", min_margin},
                         {"first_violation",
                          static_cast<std::int64_t>(c.first_violation ? *c.first_violation : 0)},
                         {"sup_value", c.sup_value}};
        } catch (const std::exception& e) {
            errors[idx] = e.what();
        }
    });
    for (std::size_t i = 0; i < cells; ++i)
        if (!errors[i].empty())
            throw std::invalid_argument("sweep cell " + std::to_string(i) + ": " + errors[i]);
    rep.rows = std::move(rows);
    return rep;
}

Report run_counterexample(const RunConfig& cfg) {
    Report rep;
    rep.command = "counterexample";
    rep.params = {{"grid", "2000"}};
    for (double p : cfg.p_grid) {
        LsCounterexample c = ls_counterexample(p, 2000);
        rep.rows.push_back({{"p", c.p},
                            {"lhs_e1", c.lhs},
                            {"rhs_e1", c.rhs},
                            {"fails_on_e1", c.fails},
                            {"pair_violation_found", c.pair_found},
                            {"a1", c.a1},
                            {"a2", c.a2},
                            {"pair_gap", c.pair_gap}});
    }
    rep.notes.push_back(
        "the claimed validity threshold in the source inequality is p <= 1/3; the e_1 test "
        "fails only past p = 1/2, and two-term vectors already fail at p = 1/2");
    return rep;
}

}  // namespace

WeightSpec resolve_weight_spec(const std::string& text) {
    if (text.rfind("file:", 0) == 0) {
        std::string path = text.substr(5);
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open weights file '" + path + "'");
        std::vector<double> vs;
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::size_t b = line.find_first_not_of(" \t\r");
            if (b == std::string::npos) continue;
            std::size_t e = line.find_last_not_of(" \t\r");
            std::string tok = line.substr(b, e - b + 1);
            try {
                std::size_t pos = 0;
                double v = std::stod(tok, &pos);
                if (pos != tok.size()) throw std::invalid_argument("trailing junk");
                vs.push_back(v);
            } catch (const std::exception&) {
                throw std::invalid_argument("weights file '" + path + "' line " +
                                            std::to_string(lineno) + ": bad number '" + tok +
                                            "'");
            }
        }
        return WeightSpec::explicit_list(std::move(vs));
    }
    return WeightSpec::parse(text);
}

Report run_command(const RunConfig& cfg) {
    validate_config(cfg);
    if (cfg.command == "norm") return run_norm(cfg);
    if (cfg.command == "conditions") return run_conditions(cfg);
    if (cfg.command == "certify") return run_certify(cfg);
    if (cfg.command == "carleman") return run_carleman(cfg);
    if (cfg.command == "wirtinger") return run_wirtinger(cfg);
    if (cfg.command == "sweep") return run_sweep(cfg);
    if (cfg.command == "counterexample") return run_counterexample(cfg);
    throw std::invalid_argument("unknown command '" + cfg.command + "'");
}

int execute(const RunConfig& cfg, std::string* captured) {
    Report rep = run_command(cfg);
    std::string text = serialize(rep, cfg.format);
    if (captured) {
        // a capture sink replaces the stream, it does not tee
        *captured = std::move(text);
    } else if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.out, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot open output file '" + cfg.out + "'");
        out << text;
    }
    return rep.assertion_failed ? 1 : 0;
}

}  // namespace hardy
