#include "uhsl2/rational.hpp"

#include <ostream>

namespace uhsl2 {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational::Rational(mpz_class num, mpz_class den) : v_(std::move(num), std::move(den)) {
    if (v_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator in '" + s + "'");
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational sqrt_binomial(unsigned k) {
    // C(1/2, k) = (1/k!) * prod_{s=0}^{k-1} (1/2 - s)
    Rational c(1);
    for (unsigned s = 0; s < k; ++s) c *= Rational(1, 2) - Rational(static_cast<long>(s));
    return c / factorial(k);
}

}  // namespace uhsl2
