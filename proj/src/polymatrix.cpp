#include "uhsl2/polymatrix.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace uhsl2 {

namespace {

void check_same_shape(const PolyMatrix& a, const PolyMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument(std::string(op) + ": shape mismatch");
}

// One output row of a matrix product; fixed summation order keeps results
// identical no matter how rows are scheduled across threads.
void mul_row(const PolyMatrix& a, const PolyMatrix& b, PolyMatrix& out, int i) {
    for (int k = 0; k < a.cols(); ++k) {
        const HPoly& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols(); ++j) {
            const HPoly& bkj = b.at(k, j);
            if (bkj.is_zero()) continue;
            out.at(i, j) += aik * bkj;
        }
    }
}

}  // namespace

PolyMatrix::PolyMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("PolyMatrix: negative dimension");
    e_.assign(static_cast<size_t>(rows) * cols, HPoly());
}

PolyMatrix PolyMatrix::identity(int n) {
    PolyMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = HPoly(1);
    return m;
}

bool PolyMatrix::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

bool PolyMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            if (r == c ? at(r, c) != HPoly(1) : !at(r, c).is_zero()) return false;
        }
    return true;
}

bool PolyMatrix::is_upper_triangular() const {
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < std::min(r, cols_); ++c)
            if (!at(r, c).is_zero()) return false;
    return true;
}

bool PolyMatrix::is_strictly_upper_triangular() const {
    if (!is_upper_triangular()) return false;
    for (int i = 0; i < std::min(rows_, cols_); ++i)
        if (!at(i, i).is_zero()) return false;
    return true;
}

bool PolyMatrix::has_constant_diagonal() const {
    for (int i = 0; i < std::min(rows_, cols_); ++i)
        if (!at(i, i).is_constant()) return false;
    return true;
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix r(*this);
    for (auto& p : r.e_) p = -p;
    return r;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    check_same_shape(a, b, "add");
    PolyMatrix r(a);
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] += b.e_[i];
    return r;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    check_same_shape(a, b, "sub");
    PolyMatrix r(a);
    for (size_t i = 0; i < r.e_.size(); ++i) r.e_[i] -= b.e_[i];
    return r;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) { return mul(a, b); }

PolyMatrix mul_serial(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul: inner dimension mismatch");
    PolyMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) mul_row(a, b, out, i);
    return out;
}

PolyMatrix mul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("mul: inner dimension mismatch");
    PolyMatrix out(a.rows(), b.cols());
#ifdef _OPENMP
    if (a.rows() >= 16 && static_cast<long>(a.rows()) * b.cols() * a.cols() >= 4096) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < a.rows(); ++i) mul_row(a, b, out, i);
        return out;
    }
#endif
    for (int i = 0; i < a.rows(); ++i) mul_row(a, b, out, i);
    return out;
}

PolyMatrix kron_serial(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i1 = 0; i1 < a.rows(); ++i1)
        for (int k1 = 0; k1 < a.cols(); ++k1) {
            const HPoly& av = a.at(i1, k1);
            if (av.is_zero()) continue;
            for (int i2 = 0; i2 < b.rows(); ++i2)
                for (int k2 = 0; k2 < b.cols(); ++k2) {
                    const HPoly& bv = b.at(i2, k2);
                    if (bv.is_zero()) continue;
                    out.at(i1 * b.rows() + i2, k1 * b.cols() + k2) = av * bv;
                }
        }
    return out;
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
#ifdef _OPENMP
    if (a.rows() * b.rows() >= 32) {
        PolyMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
#pragma omp parallel for schedule(dynamic)
        for (int i1 = 0; i1 < a.rows(); ++i1)
            for (int k1 = 0; k1 < a.cols(); ++k1) {
                const HPoly& av = a.at(i1, k1);
                if (av.is_zero()) continue;
                for (int i2 = 0; i2 < b.rows(); ++i2)
                    for (int k2 = 0; k2 < b.cols(); ++k2) {
                        const HPoly& bv = b.at(i2, k2);
                        if (bv.is_zero()) continue;
                        out.at(i1 * b.rows() + i2, k1 * b.cols() + k2) = av * bv;
                    }
            }
        return out;
    }
#endif
    return kron_serial(a, b);
}

PolyMatrix commutator(const PolyMatrix& a, const PolyMatrix& b) {
    return mul(a, b) - mul(b, a);
}

PolyMatrix anticommutator(const PolyMatrix& a, const PolyMatrix& b) {
    return mul(a, b) + mul(b, a);
}

PolyMatrix PolyMatrix::scaled(const HPoly& k) const {
    PolyMatrix r(*this);
    for (auto& p : r.e_) p = p * k;
    return r;
}

PolyMatrix PolyMatrix::scaled(const Rational& k) const {
    PolyMatrix r(*this);
    for (auto& p : r.e_) p = p.scaled(k);
    return r;
}

PolyMatrix PolyMatrix::divided_by_h(unsigned k) const {
    PolyMatrix r(*this);
    for (auto& p : r.e_) p = p.divided_by_h(k);
    return r;
}

PolyMatrix invert_upper_triangular(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("invert: not square");
    if (!m.is_upper_triangular())
        throw std::invalid_argument("invert: matrix is not upper triangular");
    const int n = m.rows();
    for (int i = 0; i < n; ++i)
        if (!m.at(i, i).is_constant() || m.at(i, i).is_zero())
            throw std::invalid_argument("invert: diagonal entry is not a nonzero constant");
    PolyMatrix inv(n, n);
    for (int c = 0; c < n; ++c) {
        // Solve m * x = e_c top-up from row c.
        inv.at(c, c) = HPoly(Rational(1) / m.at(c, c).coeff(0));
        for (int r = c - 1; r >= 0; --r) {
            HPoly s;
            for (int k = r + 1; k <= c; ++k) s += m.at(r, k) * inv.at(k, c);
            inv.at(r, c) = (-s).scaled(Rational(1) / m.at(r, r).coeff(0));
        }
    }
    return inv;
}

std::optional<int> nilpotency_index(const PolyMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("nilpotency_index: not square");
    if (m.is_zero()) return 1;
    PolyMatrix p = m;
    for (int k = 2; k <= m.rows(); ++k) {
        p = mul(p, m);
        if (p.is_zero()) return k;
    }
    return std::nullopt;
}

CMatrix specialize(const PolyMatrix& m, const std::complex<double>& h0) {
    CMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).eval(h0);
    return r;
}

CMatrix cmul(const CMatrix& a, const CMatrix& b) {
    CMatrix r(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            auto v = a.at(i, k);
            if (v == std::complex<double>(0.0, 0.0)) continue;
            for (int j = 0; j < b.cols; ++j) r.at(i, j) += v * b.at(k, j);
        }
    return r;
}

CMatrix cadd(const CMatrix& a, const CMatrix& b) {
    CMatrix r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] += b.e[i];
    return r;
}

CMatrix csub(const CMatrix& a, const CMatrix& b) {
    CMatrix r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] -= b.e[i];
    return r;
}

CMatrix cscale(const CMatrix& a, const std::complex<double>& k) {
    CMatrix r = a;
    for (auto& v : r.e) v *= k;
    return r;
}

CMatrix cidentity(int n) {
    CMatrix r(n, n);
    for (int i = 0; i < n; ++i) r.at(i, i) = 1.0;
    return r;
}

double cmax_abs(const CMatrix& a) {
    double m = 0.0;
    for (const auto& v : a.e) m = std::max(m, std::abs(v));
    return m;
}

CMatrix cexp(const CMatrix& a) {
    // Scale down so the Taylor series converges quickly, then square back up.
    int squarings = 0;
    double norm = cmax_abs(a) * a.rows;
    while (norm > 0.5 && squarings < 40) {
        norm /= 2.0;
        ++squarings;
    }
    CMatrix x = cscale(a, std::ldexp(1.0, -squarings));
    CMatrix sum = cidentity(a.rows);
    CMatrix term = cidentity(a.rows);
    for (int k = 1; k <= 40; ++k) {
        term = cscale(cmul(term, x), 1.0 / k);
        sum = cadd(sum, term);
        if (cmax_abs(term) < 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) sum = cmul(sum, sum);
    return sum;
}

}  // namespace uhsl2
