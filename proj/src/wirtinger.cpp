#include "hardycert/wirtinger.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hardy {

namespace {

void check_ab(double a, double b, const char* who) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument(std::string(who) + ": needs a > 0 and b > 0");
}

// sin(k t) for t = pi/(m+1), folded so the argument stays in (0, pi/2]
double sin_folded(std::size_t k, std::size_t m) {
    std::size_t kk = std::min(k, m + 1 - k);
    return std::sin(static_cast<double>(kk) * std::numbers::pi /
                    static_cast<double>(m + 1));
}

}  // namespace

SymTridiag TridiagonalForm::matrix() const {
    SymTridiag t;
    t.diag.assign(n, a * a + b * b);
    t.off.assign(n >= 1 ? n - 1 : 0, -a * b);
    return t;
}

std::vector<double> tridiag_spectrum(double a, double b, std::size_t n, Exec exec) {
    check_ab(a, b, "tridiag_spectrum");
    if (n < 1) throw std::invalid_argument("tridiag_spectrum: needs n >= 1");
    std::vector<double> vals(n);
    double d = a * a + b * b;
    for (std::size_t k = 1; k <= n; ++k)
        vals[k - 1] = d - 2.0 * a * b *
                              std::cos(static_cast<double>(k) * std::numbers::pi /
                                       static_cast<double>(n + 1));
    TridiagonalForm form{a, b, n};
    std::vector<double> numeric = all_eigenvalues(form.matrix(), exec);
    double scale = std::abs(vals.back());
    for (std::size_t i = 0; i < n; ++i)
        if (std::abs(vals[i] - numeric[i]) > 1e-9 * scale)
            throw std::logic_error("tridiag_spectrum: closed form and Sturm solver disagree at "
                                   "eigenvalue " +
                                   std::to_string(i + 1));
    return vals;
}

double quadratic_form(double a, double b, std::span<const double> x) {
    check_ab(a, b, "quadratic_form");
    if (x.empty()) throw std::invalid_argument("quadratic_form: empty vector");
    double q = b * b * x.front() * x.front() + a * a * x.back() * x.back();
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        double d = a * x[i] - b * x[i + 1];
        q += d * d;
    }
    return q;
}

LossersMargins lossers_bounds_check(double a, double b, std::span<const double> x) {
    double q = quadratic_form(a, b, x);
    double s = 0.0;
    for (double v : x) s += v * v;
    double c = std::cos(std::numbers::pi / static_cast<double>(x.size() + 1));
    double d = a * a + b * b;
    return {q - (d - 2.0 * a * b * c) * s, (d + 2.0 * a * b * c) * s - q};
}

std::vector<LossersMargins> lossers_bounds_batch(double a, double b,
                                                 const std::vector<std::vector<double>>& xs,
                                                 Exec exec) {
    std::vector<LossersMargins> out(xs.size());
    for_each_index(xs.size(), exec,
                   [&](std::size_t i) { out[i] = lossers_bounds_check(a, b, xs[i]); });
    return out;
}

double fan_taussky_todd_lower(std::size_t n) {
    double s = std::sin(std::numbers::pi / (2.0 * static_cast<double>(n + 1)));
    return 4.0 * s * s;
}

double milovanovic_upper(std::size_t n) {
    double c = std::cos(std::numbers::pi / (2.0 * static_cast<double>(n + 1)));
    return 4.0 * c * c;
}

RedhefferResult redheffer_mu(double a, double b, std::size_t n, TelescopeSign sign) {
    check_ab(a, b, "redheffer_mu");
    if (n < 2) throw std::invalid_argument("redheffer_mu: needs n >= 2");
    double sgn = sign == TelescopeSign::plus ? 1.0 : -1.0;
    double t = std::numbers::pi / static_cast<double>(n + 1);

    RedhefferResult res;
    res.mu.resize(n - 1);
    for (std::size_t k = 1; k + 1 <= n; ++k) {
        double s_k = sin_folded(k, n);
        if (s_k == 0.0)
            throw std::logic_error("redheffer_mu: sin(nt) vanished at n = " + std::to_string(k));
        res.mu[k - 1] = a * a + sgn * a * b * sin_folded(k + 1, n) / s_k;
    }
    res.constant = a * a + b * b + sgn * 2.0 * a * b * std::cos(t);

    double worst = std::abs(b * b + res.mu.front() - res.constant);
    for (std::size_t k = 1; k + 1 <= n - 1; ++k) {
        double nu = b * b * res.mu[k - 1] / (res.mu[k - 1] - a * a);
        worst = std::max(worst, std::abs(nu + res.mu[k] - res.constant));
    }
    double nu_last = b * b * res.mu.back() / (res.mu.back() - a * a);
    worst = std::max(worst, std::abs(nu_last + a * a - res.constant));
    res.max_identity_error = worst / std::abs(res.constant);
    return res;
}

}  // namespace hardy
