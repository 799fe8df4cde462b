#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hardycert/tridiag.hpp"

namespace hardy {

// Quadratic form of the discrete Wirtinger family:
//   Q(x) = b^2 x_1^2 + sum_{n<N} (a x_n - b x_{n+1})^2 + a^2 x_N^2
// whose matrix is the Toeplitz tridiagonal diag a^2+b^2, off -ab, with
// spectrum a^2 + b^2 - 2ab cos(k pi/(N+1)), k = 1..N (ascending in k).
struct TridiagonalForm {
    double a = 1.0;
    double b = 1.0;
    std::size_t n = 1;
    SymTridiag matrix() const;
};

// closed-form eigenvalues, ascending; cross-checked internally against the
// Sturm bisection solver to 1e-9 (throws on disagreement)
std::vector<double> tridiag_spectrum(double a, double b, std::size_t n,
                                     Exec exec = Exec::parallel);

double quadratic_form(double a, double b, std::span<const double> x);

// lower/upper sandwich margins of Q(x) against the extreme eigenvalues;
// both are >= 0 up to rounding for every real x
struct LossersMargins {
    double lower;  // Q - (a^2+b^2-2ab cos(pi/(N+1))) ||x||^2
    double upper;  // (a^2+b^2+2ab cos(pi/(N+1))) ||x||^2 - Q
};
LossersMargins lossers_bounds_check(double a, double b, std::span<const double> x);

// batch version over many vectors, one margin pair per row
std::vector<LossersMargins> lossers_bounds_batch(double a, double b,
                                                 const std::vector<std::vector<double>>& xs,
                                                 Exec exec = Exec::parallel);

// a = b = 1 endpoints of the sandwich
double fan_taussky_todd_lower(std::size_t n);   // 4 sin^2(pi/(2(N+1)))
double milovanovic_upper(std::size_t n);        // 4 cos^2(pi/(2(N+1)))

// Scalar sequence mu_n = a^2 +- ab sin((n+1)t)/sin(nt), t = pi/(N+1),
// n = 1..N-1, used to split Q into a telescoping sum of perfect squares.
// With nu_n = b^2 mu_n/(mu_n - a^2) the coefficients
//   b^2 + mu_1,  nu_n + mu_{n+1},  nu_{N-1} + a^2
// are all equal to a^2 + b^2 +- 2ab cos t; max_identity_error reports the
// worst relative deviation. Sines are evaluated after folding the argument
// into (0, pi/2] so nothing cancels near nt ~ pi.
enum class TelescopeSign { plus, minus };

struct RedhefferResult {
    std::vector<double> mu;         // length N-1
    double constant;                // a^2 + b^2 +- 2ab cos t
    double max_identity_error;      // relative to |constant|
};
RedhefferResult redheffer_mu(double a, double b, std::size_t n, TelescopeSign sign);

}  // namespace hardy
