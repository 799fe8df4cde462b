// Timing harness for the parallel kernels against their serial twins.
// Medians over repeated runs; the outputs are also compared so a speedup
// never comes at the price of a different answer.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "hardycert/carleman.hpp"
#include "hardycert/conditions.hpp"
#include "hardycert/parallel.hpp"
#include "hardycert/tridiag.hpp"
#include "hardycert/weights.hpp"
#include "hardycert/wirtinger.hpp"

using namespace hardy;
using clock_type = std::chrono::steady_clock;

namespace {

template <class F>
double median_ms(F&& f, int reps) {
    std::vector<double> times;
    for (int i = 0; i < reps; ++i) {
        auto t0 = clock_type::now();
        f();
        times.push_back(std::chrono::duration<double, std::milli>(clock_type::now() - t0).count());
    }
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

void row(const std::string& name, double serial_ms, double parallel_ms, bool same) {
    std::printf("%-38s %10.2f ms %10.2f ms %7.2fx  %s\n", name.c_str(), serial_ms, parallel_ms,
                serial_ms / parallel_ms, same ? "identical" : "DIFFERENT RESULTS");
}

}  // namespace

int main() {
    std::printf("threads: %d (OpenMP %s)\n\n", max_threads(),
                openmp_compiled() ? "enabled" : "not compiled in");
    std::printf("%-38s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");

    {
        const std::size_t n = 2000000;
        WeightSequence w(WeightSpec::power(0.5), n + 1);
        ConditionReport a, b;
        double ts = median_ms([&] { a = cor14_condition_check(w, 2.0, 2.0 / 3.0, n, Exec::serial); }, 5);
        double tp = median_ms([&] { b = cor14_condition_check(w, 2.0, 2.0 / 3.0, n, Exec::parallel); }, 5);
        row("second-order margins, N=2e6", ts, tp, a.margins == b.margins);
    }
    {
        const std::size_t n = 2000000;
        WeightSequence w(WeightSpec::power(0.5), n + 1);
        ConditionReport a, b;
        double ts = median_ms([&] { a = thm13_condition_check(w, 2.0, 2.0 / 3.0, n, Exec::serial); }, 5);
        double tp = median_ms([&] { b = thm13_condition_check(w, 2.0, 2.0 / 3.0, n, Exec::parallel); }, 5);
        row("first-order margins, N=2e6", ts, tp, a.margins == b.margins);
    }
    {
        SymTridiag t;
        t.diag.assign(1200, 2.0);
        t.off.assign(1199, -1.0);
        std::vector<double> a, b;
        double ts = median_ms([&] { a = all_eigenvalues(t, Exec::serial); }, 3);
        double tp = median_ms([&] { b = all_eigenvalues(t, Exec::parallel); }, 3);
        row("full tridiagonal spectrum, N=1200", ts, tp, a == b);
    }
    {
        std::mt19937_64 rng(1);
        std::normal_distribution<double> gauss;
        std::vector<std::vector<double>> xs(20000, std::vector<double>(256));
        for (auto& x : xs)
            for (double& v : x) v = gauss(rng);
        std::vector<LossersMargins> a, b;
        double ts = median_ms([&] { a = lossers_bounds_batch(1.0, 1.1, xs, Exec::serial); }, 5);
        double tp = median_ms([&] { b = lossers_bounds_batch(1.0, 1.1, xs, Exec::parallel); }, 5);
        bool same = a.size() == b.size();
        for (std::size_t i = 0; same && i < a.size(); ++i)
            same = a[i].lower == b[i].lower && a[i].upper == b[i].upper;
        row("sandwich margins, 2e4 x 256", ts, tp, same);
    }
    {
        WeightSequence w(WeightSpec::power(0.5), 400);
        CarlemanEstimate a, b;
        double ts = median_ms([&] { a = optimize_ratio(w, 400, 8, 5, 2000, Exec::serial); }, 3);
        double tp = median_ms([&] { b = optimize_ratio(w, 400, 8, 5, 2000, Exec::parallel); }, 3);
        row("simplex optimizer, 8 restarts, N=400", ts, tp,
            a.lower_bound_E == b.lower_bound_E && a.maximizer == b.maximizer);
    }
    return 0;
}
