#pragma once

#include "uhsl2/rational.hpp"

#include <complex>
#include <string>
#include <vector>

namespace uhsl2 {

// Raised when a polynomial operation would exceed the configured degree limit.
// The limit is a resource guard, not a truncation: results are always exact.
struct degree_limit_error : std::runtime_error {
    explicit degree_limit_error(const std::string& what) : std::runtime_error(what) {}
};

int degree_limit();
void set_degree_limit(int limit);

// Dense polynomial in the deformation parameter h with Rational coefficients.
// Coefficients are stored ascending by power with no trailing zeros, so the
// representation of any value is unique.
class HPoly {
public:
    HPoly() = default;
    HPoly(const Rational& constant);
    HPoly(long constant) : HPoly(Rational(constant)) {}
    explicit HPoly(std::vector<Rational> coeffs);

    static HPoly h(unsigned power = 1) { return monomial(Rational(1), power); }
    static HPoly monomial(const Rational& coeff, unsigned power);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    // Coefficient of h^k; zero beyond the stored degree.
    const Rational& coeff(size_t k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    HPoly operator-() const;
    HPoly& operator+=(const HPoly& o);
    HPoly& operator-=(const HPoly& o);
    friend HPoly operator+(HPoly a, const HPoly& b) { return a += b; }
    friend HPoly operator-(HPoly a, const HPoly& b) { return a -= b; }
    friend HPoly operator*(const HPoly& a, const HPoly& b);
    HPoly& operator*=(const HPoly& o) { return *this = *this * o; }

    HPoly scaled(const Rational& k) const;

    // Multiplication by h^k.
    HPoly shifted_up(unsigned k) const;
    // Exact division by h^k; throws std::domain_error if any low coefficient
    // is nonzero.
    HPoly divided_by_h(unsigned k = 1) const;
    bool divisible_by_h(unsigned k = 1) const;

    std::complex<double> eval(const std::complex<double>& h0) const;
    Rational eval_rational(const Rational& h0) const;

    // Plain text like "1 - 3/2 h^2 + h^4".
    std::string str() const;

    friend bool operator==(const HPoly& a, const HPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const HPoly& a, const HPoly& b) { return !(a == b); }

private:
    std::vector<Rational> c_;
    void trim();
    void check_limit() const;
};

// Product truncated to degree <= max_degree, for power-series work where the
// full product would be discarded anyway.
HPoly mul_truncated(const HPoly& a, const HPoly& b, int max_degree);

// Exact quotient num / den in Q[h]; throws std::domain_error when den is zero
// or the division leaves a remainder.
HPoly div_exact(const HPoly& num, const HPoly& den);

}  // namespace uhsl2
