#pragma once

#include "uhsl2/rational.hpp"

#include <vector>

namespace uhsl2 {

// Coefficients f_0..f_K of the series F(x) = sum f_k x^{2k} that makes
// X = F(h J+) J+ reproduce the deformed commutation relations. f_0 = 1.
struct FSequence {
    std::vector<Rational> values;

    int max_index() const { return static_cast<int>(values.size()) - 1; }
    const Rational& at(int k) const { return values.at(k); }
};

// Bootstrap route: f_k = (1/2k) * sum_{s=1}^{k} 1/(2s+1)! *
// sum over ordered compositions i_1+...+i_{2s+1} = k-s of f_{i_1}...f_{i_{2s+1}}.
// The inner sums are convolution powers of the partial sequence, memoized so
// the whole run is quadratic per odd power.
FSequence f_recurrence(int K);

// Closed form f_k = 1 / ((2k+1) * 4^k), i.e. F(x) = (2/x) artanh(x/2).
FSequence f_closed(int K);

// Formal-series residual of d(xF)/dx = sinh(xF)/x through degree 2K, using
// the supplied coefficients. All-zero output certifies the defining ODE.
std::vector<Rational> ode_residual(const FSequence& f);
std::vector<Rational> ode_residual(int K);

}  // namespace uhsl2
