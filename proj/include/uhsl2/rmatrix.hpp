#pragma once

#include "uhsl2/represent.hpp"

#include <optional>
#include <string>

namespace uhsl2 {

// R acting on V1 (x) V2, rows and columns indexed i1 * dim2 + i2.
struct RMatrix {
    HalfInt j1{0}, j2{0};
    int eps1 = 1, eps2 = 1;
    PolyMatrix matrix{0, 0};
};

// Evaluates the universal R-matrix on a pair of irreps. The two exponential
// factors are
//
//   exp(-h X_1 (x) TH_2) * exp(h TH_1 (x) X_2),   TH := T H,
//
// where an eps = -1 slot contributes X = i pi / h + Xreg. The i pi / h part
// commutes with everything else in its factor (asserted at runtime before the
// split) and exponentiates to the exact parity matrix exp_ipi_triangular(TH),
// so every entry of the result stays in Q[h].
RMatrix universal_r(const Irrep& r1, const Irrep& r2);

struct YbeSpin {
    HalfInt j{0};
    int epsilon = 1;
};

struct YbeWitness {
    int row = 0, col = 0;
    HPoly difference;
};

struct YbeReport {
    YbeSpin s1, s2, s3;
    int dim = 0;  // dim1 * dim2 * dim3
    bool pass = false;
    std::optional<YbeWitness> witness;
    std::string describe() const;
};

// Checks R12 R13 R23 = R23 R13 R12 on V1 (x) V2 (x) V3 with exact
// coefficients. R12 and R23 are Kronecker embeddings; R13 is placed by index
// arithmetic on the composite index (i1 d2 + i2) d3 + i3.
YbeReport check_ybe(const YbeSpin& s1, const YbeSpin& s2, const YbeSpin& s3);

}  // namespace uhsl2
