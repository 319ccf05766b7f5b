#pragma once

#include "uhsl2/hpoly.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace uhsl2 {

// Dense matrix over Q[h], row-major. All operations are pure: inputs are never
// mutated, so concurrent reads are safe.
class PolyMatrix {
public:
    PolyMatrix() : rows_(0), cols_(0) {}
    PolyMatrix(int rows, int cols);

    static PolyMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    HPoly& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const HPoly& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const;
    bool is_identity() const;
    bool is_upper_triangular() const;
    bool is_strictly_upper_triangular() const;
    // True when every diagonal entry is a constant polynomial.
    bool has_constant_diagonal() const;

    PolyMatrix operator-() const;
    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);
    friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

    PolyMatrix scaled(const HPoly& k) const;
    PolyMatrix scaled(const Rational& k) const;
    // Entrywise exact division by h^k.
    PolyMatrix divided_by_h(unsigned k = 1) const;

private:
    int rows_, cols_;
    std::vector<HPoly> e_;
};

// Reference kernel: plain triple loop, always serial.
PolyMatrix mul_serial(const PolyMatrix& a, const PolyMatrix& b);
// Production kernel: OpenMP over output rows for larger matrices, exact and
// bit-identical to mul_serial (each entry is an independent fixed-order sum).
PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b);

PolyMatrix kron_serial(const PolyMatrix& a, const PolyMatrix& b);
// Kronecker product with the row-major composite index (i1*rows(b) + i2).
PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix anticommutator(const PolyMatrix& a, const PolyMatrix& b);

// Inverse of an upper-triangular matrix whose diagonal entries are nonzero
// constants, by back substitution. Exact over Q[h].
PolyMatrix invert_upper_triangular(const PolyMatrix& m);

// Smallest k with m^k = 0, trying powers up to rows(m); nullopt if none.
std::optional<int> nilpotency_index(const PolyMatrix& m);

// Dense complex matrix produced by numeric specialization.
struct CMatrix {
    int rows = 0, cols = 0;
    std::vector<std::complex<double>> e;

    CMatrix() = default;
    CMatrix(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c) {}
    std::complex<double>& at(int r, int c) { return e[static_cast<size_t>(r) * cols + c]; }
    const std::complex<double>& at(int r, int c) const {
        return e[static_cast<size_t>(r) * cols + c];
    }
};

CMatrix specialize(const PolyMatrix& m, const std::complex<double>& h0);

CMatrix cmul(const CMatrix& a, const CMatrix& b);
CMatrix cadd(const CMatrix& a, const CMatrix& b);
CMatrix csub(const CMatrix& a, const CMatrix& b);
CMatrix cscale(const CMatrix& a, const std::complex<double>& k);
CMatrix cidentity(int n);
double cmax_abs(const CMatrix& a);
// exp(a) by scaled Taylor summation; adequate for the small matrices used in
// the numeric relation checks.
CMatrix cexp(const CMatrix& a);

}  // namespace uhsl2
