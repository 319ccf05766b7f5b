#pragma once

#include "uhsl2/polymatrix.hpp"

namespace uhsl2 {

enum class AnalyticFn { exp, sqrt1p, arctanh, tanh, cosh, sinh, log1p, geom_inv };

// Taylor coefficients of the chosen function about 0 (for sqrt1p, log1p and
// geom_inv: of sqrt(1+x), log(1+x) and 1/(1+x)), up to and including x^n.
std::vector<Rational> series_coefficients(AnalyticFn fn, int n);

// Evaluates the series on a nilpotent matrix, where it terminates and the
// result is exact. Throws std::domain_error for non-nilpotent input: scalar
// shifts of the form c*I + N cannot be handled exactly over Q[h] (e^c is
// irrational for rational c != 0), and the i*pi shifts that do occur in the
// epsilon = -1 representations are routed through exp_ipi_triangular instead.
PolyMatrix analytic_series(const PolyMatrix& m, AnalyticFn fn);

// Exact exp(sign * i*pi * m) for an upper-triangular m whose diagonal entries
// are distinct constant integers. The diagonal of the result is (-1)^{d_i};
// off-diagonal entries follow from F m = m F, dividing only by the integer
// gaps d_j - d_i, so everything stays in Q[h]. Since e^{i pi d} = e^{-i pi d}
// on integers, both signs yield the same matrix; the parameter is kept so
// call sites document which branch they mean.
PolyMatrix exp_ipi_triangular(const PolyMatrix& m, int sign);

struct Diagonalization {
    PolyMatrix P;     // unipotent upper-triangular change of basis
    PolyMatrix D;     // diagonal of m
    PolyMatrix Pinv;  // exact inverse of P
};

// For upper-triangular m with pairwise distinct constant diagonal entries,
// returns P with Pinv * m * P = D. Divisions are by diagonal differences only.
Diagonalization diagonalize_distinct(const PolyMatrix& m);

}  // namespace uhsl2
