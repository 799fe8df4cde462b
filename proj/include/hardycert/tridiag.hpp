#pragma once

#include <cstddef>
#include <vector>

#include "hardycert/parallel.hpp"

namespace hardy {

struct SymTridiag {
    std::vector<double> diag;  // length n
    std::vector<double> off;   // length n-1, off[i] couples i and i+1
    std::size_t size() const { return diag.size(); }
};

// Sturm count: number of eigenvalues strictly below x.
std::size_t eigen_count_below(const SymTridiag& t, double x);

// k-th smallest eigenvalue, k = 0..n-1, by bisection on the Sturm count.
double kth_eigenvalue(const SymTridiag& t, std::size_t k);

double smallest_eigenvalue(const SymTridiag& t);

// all eigenvalues ascending; independent bisections, parallel over k
std::vector<double> all_eigenvalues(const SymTridiag& t, Exec exec = Exec::parallel);

}  // namespace hardy
