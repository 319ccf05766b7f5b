#pragma once

#include "uhsl2/represent.hpp"

namespace uhsl2 {

// Highest-weight module on w_0..w_depth, built degree by degree from the
// defining relations alone (no deformation map involved), so it serves as an
// independent oracle for the map-built irreps.
//
// Conventions: Y w_m = w_{m+1} (pure shift), T w_0 = eps w_0 and
// H w_0 = eps*lambda w_0. The eps = -1 highest weight carries the sign along
// with lambda: with H w_0 = +lambda the module has Casimir (l/2)(l/2 - 1) and
// provably no singular vector at any positive level, so no finite quotient
// would exist.
struct VermaModule {
    int lambda = 0;
    int epsilon = 1;
    int depth = 0;  // highest stored level index
    PolyMatrix T, Tinv, H, Y;
    // Y maps w_depth out of the stored span; its last column is zero and must
    // not be consulted.
    bool last_column_truncated = true;
};

// depth < 0 selects the default lambda + 2. The T and H columns are produced
// by rewriting T Y and H Y through the commutation relations; Tinv columns by
// back substitution against the already-built triangular T.
VermaModule build_verma(int lambda, int epsilon, int depth = -1);

// Residuals of the defining relations on the truncation (columns that are
// fully determined by the stored data). All zero for a correct build; used by
// tests rather than production paths.
std::vector<PolyMatrix> verma_relation_residuals(const VermaModule& vm);

struct SingularVector {
    int level = 0;                   // lambda + 1
    std::vector<HPoly> coefficients; // c_0..c_level over w_0..w_level, c_level = 1, c_0 = 0
};

// Solves (T - eps I) v = 0 for v = w_{lambda+1} + sum_{0<k<=lambda} c_k w_k by
// back substitution; divisions are exact in Q[h] or the solve fails. Requires
// depth >= lambda + 2 so a guard level exists beyond everything consulted.
SingularVector find_singular(const VermaModule& vm);

// Quotient by the submodule generated by the singular vector, before any
// change of basis: H is triangular here (this is the gauge in which the
// lambda = 2, 3 matrices are usually displayed). Xreg is recovered as
// log(eps T)/h.
struct QuotientRep {
    int lambda = 0;
    int epsilon = 1;
    PolyMatrix H, T, Tinv, Y, Xreg;
};

QuotientRep quotient_raw(const VermaModule& vm, const SingularVector& sv);

// Same quotient pushed through diagonalize_distinct on H and packaged with
// the classical triple recovered via the inverse map. Must coincide exactly
// with build_irrep(lambda/2, eps).
Irrep quotient_irrep(const VermaModule& vm, const SingularVector& sv);

}  // namespace uhsl2
