#pragma once

#include "uhsl2/polymatrix.hpp"

#include <string>
#include <vector>

namespace uhsl2 {

// Non-negative half-integer spin, stored as twice its value.
class HalfInt {
public:
    HalfInt() : twice_(0) {}
    explicit HalfInt(int twice);
    static HalfInt from_twice(int twice) { return HalfInt(twice); }
    // Accepts "3/2" style fractions (denominator 1 or 2) and plain integers.
    static HalfInt parse(const std::string& s);

    int twice() const { return twice_; }
    bool is_integer() const { return twice_ % 2 == 0; }
    // Dimension of the spin-j irreducible: 2j + 1.
    int dimension() const { return twice_ + 1; }
    std::string str() const;

    friend bool operator==(const HalfInt& a, const HalfInt& b) { return a.twice_ == b.twice_; }
    friend bool operator!=(const HalfInt& a, const HalfInt& b) { return a.twice_ != b.twice_; }
    friend bool operator<=(const HalfInt& a, const HalfInt& b) { return a.twice_ <= b.twice_; }

private:
    int twice_;
};

struct ClassicalTriple {
    PolyMatrix Jplus, Jminus, J3;
};

// sl(2) generators on the basis v_k = (J-)^k v_0, k = 0..2j:
//   J3 v_k = (j - k) v_k, J- v_k = v_{k+1}, J+ v_k = k(2j+1-k) v_{k-1}.
ClassicalTriple classical_generators(HalfInt j);

enum class Basis { verma_diagonal, symmetric_numeric };

// Finite-dimensional irreducible of the h-deformed algebra. Matrix entries
// live in Q[h]; the only non-polynomial datum of the eps = -1 branch, the
// i*pi/h shift in X, is carried by the epsilon flag and never materialized:
// X = Xreg for eps = +1 and X = Xreg + (i*pi/h) I for eps = -1.
struct Irrep {
    HalfInt j;
    int epsilon = 1;
    Basis basis = Basis::verma_diagonal;
    int dimension = 0;
    PolyMatrix H, T, Tinv, Y, Xreg;
    // The classical triple the deformation map was applied to. For eps = -1
    // this is (-J+, -J-, J3): the sign twist keeps Y's subdiagonal at +1 and
    // matches both the displayed R-matrices and the Verma quotient gauge.
    PolyMatrix Jplus, Jminus, J3;
};

// Deformation map: with A = (h/2) J'+ for the twisted J'+ = eps J+,
//   T = eps (1 + A)(1 - A)^{-1},  H = 2 eps J3,  Xreg = (2/h) artanh(A),
//   Y = sqrt(1 - h^2 J+^2/4) J- sqrt(1 - h^2 J+^2/4).
// Y is epsilon-independent (the twist in J'- cancels the branch sign), which
// is what keeps its subdiagonal at +1 on both branches.
Irrep build_irrep(HalfInt j, int epsilon);

// Recomputes the classical generators from the deformed ones through the
// inverse map and compares exactly:
//   J'+ from (2/h) tanh(h Xreg/2) and from (2/h)(T - eps)(T + eps)^{-1},
//   J3  from eps H/2,
//   J'- from cosh(h Xreg/2) Y cosh(h Xreg/2) (eps = +1; the eps = -1 form
//   needs sqrt(T) which leaves Q[h]) and from the sqrt factor inversion.
// Returns a list of mismatch descriptions, empty on success.
std::vector<std::string> inverse_map_check(const Irrep& r);

enum class Automorphism { omega, varpi };

// omega: T <-> Tinv, Y -> -Y, H -> H, Xreg -> -Xreg (epsilon kept).
// varpi: negates T, Tinv, Y, H, flips epsilon, then re-canonicalizes the
// basis by conjugating with diag((-1)^k) so the result coincides exactly with
// build_irrep(j, -epsilon); Xreg is unchanged (the i*pi/h shift moves into
// the flipped epsilon flag).
Irrep apply_automorphism(const Irrep& r, Automorphism a);

// --- symmetric (orthonormal-weight) basis -------------------------------

enum class SymGen { X, T, Y };

// One term of a generator action: coefficient is a polynomial in h with
// floating-point coefficients (the a_m products are irrational).
struct SymmetricTerm {
    int twice_m_target;
    std::vector<double> coeff;  // coeff[p] multiplies h^p

    double eval(double h0) const;
};

// Closed-form action of X, T or Y on the weight vector w_m of the spin-j
// module in the symmetric basis (a_m = sqrt((j-m)(j+m+1))). Zero terms are
// dropped, so summation limits are honored but never emit out-of-range
// targets. Valid for the eps = +1 branch.
std::vector<SymmetricTerm> symmetric_oracle(HalfInt j, int twice_m, SymGen g);

struct NumericIrrep {
    HalfInt j;
    double h0;
    CMatrix H, T, X, Y;
};

// Rescales the verma_diagonal basis by d_k = prod_{i=1}^{k} a_{j-i} (numeric)
// so the matrices act on the symmetric basis; comparison target for the
// oracle above.
NumericIrrep to_symmetric_basis(const Irrep& r, double h0);

}  // namespace uhsl2
