#include "hardycert/carleman.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "hardycert/accum.hpp"
#include "hardycert/conditions.hpp"

namespace hardy {

namespace {

// geometric-mean terms g_n for n = 1..len(a); zero-aware
std::vector<double> geomean_terms(const WeightSequence& w, std::span<const double> a) {
    if (a.size() > w.size())
        throw std::invalid_argument("geomean_sum: a longer than weight sequence");
    if (a.empty()) throw std::invalid_argument("geomean_sum: empty vector");
    std::size_t n = a.size();
    std::vector<double> g(n);
    Accum logsum;
    std::size_t dead_from = n + 1;  // first index whose zero kills the tail
    for (std::size_t k = 1; k <= n; ++k) {
        double ak = a[k - 1];
        if (!(ak >= 0.0)) throw std::domain_error("geomean_sum: a must be nonnegative");
        double lk = w.lambda(k);
        if (lk > 0.0) {
            if (ak == 0.0 && dead_from > n) dead_from = k;
            if (dead_from > n) logsum.add(lk * std::log(ak));
        }
        g[k - 1] = k >= dead_from ? 0.0 : std::exp(logsum.value() / w.Lambda(k));
    }
    return g;
}

struct RestartResult {
    double ratio = 0.0;
    std::vector<double> a;
    std::size_t iterations = 0;
};

double simplex_ratio(const WeightSequence& w, const std::vector<double>& a) {
    std::vector<double> g = geomean_terms(w, a);
    return total(g) / total(a);
}

void project_simplex(std::vector<double>& a) {
    double s = total(a);
    if (!(s > 0.0)) throw std::domain_error("optimizer iterate summed to zero");
    for (double& v : a) v /= s;
}

RestartResult ascend(const WeightSequence& w, std::vector<double> a, std::size_t max_iter) {
    project_simplex(a);
    RestartResult res;
    res.ratio = simplex_ratio(w, a);
    res.a = a;
    std::size_t n = a.size();
    for (std::size_t it = 1; it <= max_iter; ++it) {
        res.iterations = it;
        std::vector<double> g = geomean_terms(w, a);
        double G = total(g);
        // suffix sums of g_n / Lambda_n drive the fixed-point step
        std::vector<double> t(n);
        for (std::size_t i = 0; i < n; ++i) t[i] = g[i] / w.prefix()[i];
        std::vector<double> T = suffix_sums(t);
        std::vector<double> cand(n);
        for (std::size_t i = 0; i < n; ++i) cand[i] = w.lambdas()[i] * T[i] / G;
        project_simplex(cand);
        double r_cand = simplex_ratio(w, cand);
        if (r_cand < res.ratio) {
            // blend back toward the current point until the step improves
            double theta = 0.5;
            bool improved = false;
            while (theta > 1e-8) {
                std::vector<double> mix(n);
                for (std::size_t i = 0; i < n; ++i)
                    mix[i] = (1.0 - theta) * a[i] + theta * cand[i];
                double r_mix = simplex_ratio(w, mix);
                if (r_mix >= res.ratio) {
                    cand.swap(mix);
                    r_cand = r_mix;
                    improved = true;
                    break;
                }
                theta *= 0.5;
            }
            if (!improved) break;  // stagnant along this direction
        }
        double gain = r_cand - res.ratio;
        a.swap(cand);
        res.ratio = r_cand;
        res.a = a;
        if (gain <= 1e-14 * res.ratio && it > 8) break;
    }
    return res;
}

std::vector<double> restart_seed(const WeightSequence& w, std::size_t n, std::size_t restart,
                                 std::uint64_t seed) {
    std::vector<double> a(n);
    // the a_k ~ lambda_k/Lambda_k^2 profile mirrors the classical extremal
    // sequence, geometric decay probes the short-range optimum
    if (restart == 0) {
        for (std::size_t i = 0; i < n; ++i)
            a[i] = w.lambdas()[i] / (w.prefix()[i] * w.prefix()[i]);
    } else if (restart == 1) {
        double rho = 0.9;
        double f = rho;
        for (std::size_t i = 0; i < n; ++i, f *= rho) a[i] = w.lambdas()[i] * f + 1e-12;
    } else if (restart == 2) {
        a.assign(n, 1.0);
    } else {
        std::mt19937_64 rng(seed + 1000003ULL * static_cast<std::uint64_t>(restart));
        std::normal_distribution<double> jitter(0.0, 0.75);
        for (std::size_t i = 0; i < n; ++i)
            a[i] = (w.lambdas()[i] + 1e-12) / (w.prefix()[i] * w.prefix()[i]) *
                   std::exp(jitter(rng));
    }
    return a;
}

}  // namespace

double geomean_sum(const WeightSequence& w, std::span<const double> a) {
    return total(geomean_terms(w, a));
}

CarlemanEstimate optimize_ratio(const WeightSequence& w, std::size_t n, std::size_t restarts,
                                std::uint64_t seed, std::size_t max_iter, Exec exec) {
    if (n < 1 || n > w.size())
        throw std::invalid_argument("optimize_ratio: n out of range for weight sequence");
    if (restarts < 1) throw std::invalid_argument("optimize_ratio: needs restarts >= 1");

    std::vector<RestartResult> results(restarts);
    for_each_index(restarts, exec, [&](std::size_t r) {
        results[r] = ascend(w, restart_seed(w, n, r, seed), max_iter);
    });

    CarlemanEstimate est;
    est.n = n;
    est.restarts = restarts;
    est.seed = seed;
    std::size_t best = 0;
    for (std::size_t r = 0; r < restarts; ++r) {
        est.iterations += results[r].iterations;
        if (results[r].ratio > results[best].ratio) best = r;  // ties keep lowest index
    }
    est.lower_bound_E = results[best].ratio;
    est.maximizer = std::move(results[best].a);
    return est;
}

CarlemanEstimate bound_comparison(const WeightSequence& w, std::size_t n, std::size_t restarts,
                                  std::uint64_t seed, Exec exec) {
    if (n + 1 > w.size())
        throw std::invalid_argument(
            "bound_comparison: needs weights through n+1 for the sup-based bounds");
    CarlemanEstimate est = optimize_ratio(w, n, restarts, seed, 2000, exec);
    est.upper_bounds["bennett_E"] = bennett_E(w, n, exec).sup_value;
    est.upper_bounds["exp_M"] = carleman_M(w, n, exec).extras.at("e_M");
    if (w.spec().kind == WeightKind::power)
        est.upper_bounds["exp_limit"] = std::exp(1.0 / (1.0 + w.spec().alpha));
    else if (w.spec().kind == WeightKind::constant)
        est.upper_bounds["exp_limit"] = std::exp(1.0);

    double bennett = est.upper_bounds.at("bennett_E");
    double em = est.upper_bounds.at("exp_M");
    if (est.lower_bound_E > bennett + 1e-6)
        throw std::logic_error("bound_comparison: optimizer exceeded the Bennett constant");
    if (bennett > em + 1e-9)
        throw std::logic_error("bound_comparison: Bennett constant exceeded e^M");
    return est;
}

}  // namespace hardy
