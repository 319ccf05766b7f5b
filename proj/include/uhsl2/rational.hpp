#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace uhsl2 {

// Exact rational number, kept reduced with a positive denominator.
// Backed by GMP so numerators and denominators can grow without overflow.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den);
    explicit Rational(mpz_class num, mpz_class den = 1);

    // Parses the canonical text form "p/q" (or "p" when q = 1).
    static Rational from_string(const std::string& s);

    // Canonical text form "p/q"; the "/q" is omitted when q = 1.
    std::string str() const;

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn() == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sgn() const { return ::sgn(v_); }

    double to_double() const { return v_.get_d(); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

Rational factorial(unsigned n);

// Binomial coefficient C(1/2, k): the Taylor coefficients of sqrt(1 + x).
Rational sqrt_binomial(unsigned k);

}  // namespace uhsl2
