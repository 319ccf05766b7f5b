#include "uhsl2/hpoly.hpp"

#include <atomic>
#include <sstream>

namespace uhsl2 {

namespace {
std::atomic<int> g_degree_limit{4096};

const Rational kZero{};
}  // namespace

int degree_limit() { return g_degree_limit.load(); }

void set_degree_limit(int limit) {
    if (limit < 0) throw std::invalid_argument("set_degree_limit: negative limit");
    g_degree_limit.store(limit);
}

HPoly::HPoly(const Rational& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

HPoly::HPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
    check_limit();
}

HPoly HPoly::monomial(const Rational& coeff, unsigned power) {
    HPoly p;
    if (coeff.is_zero()) return p;
    if (static_cast<int>(power) > degree_limit())
        throw degree_limit_error("monomial degree exceeds limit");
    p.c_.assign(power + 1, Rational(0));
    p.c_[power] = coeff;
    return p;
}

const Rational& HPoly::coeff(size_t k) const {
    return k < c_.size() ? c_[k] : kZero;
}

void HPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void HPoly::check_limit() const {
    if (degree() > degree_limit())
        throw degree_limit_error("polynomial degree " + std::to_string(degree()) +
                                 " exceeds limit " + std::to_string(degree_limit()));
}

HPoly HPoly::operator-() const {
    HPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

HPoly& HPoly::operator+=(const HPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

HPoly& HPoly::operator-=(const HPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

HPoly operator*(const HPoly& a, const HPoly& b) {
    HPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    int deg = a.degree() + b.degree();
    if (deg > degree_limit())
        throw degree_limit_error("product degree " + std::to_string(deg) + " exceeds limit " +
                                 std::to_string(degree_limit()));
    r.c_.assign(deg + 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t k = 0; k < b.c_.size(); ++k) r.c_[i + k] += a.c_[i] * b.c_[k];
    }
    r.trim();
    return r;
}

HPoly mul_truncated(const HPoly& a, const HPoly& b, int max_degree) {
    HPoly r;
    if (a.is_zero() || b.is_zero() || max_degree < 0) return r;
    std::vector<Rational> c(static_cast<size_t>(max_degree) + 1, Rational(0));
    for (size_t i = 0; i < a.coeffs().size() && static_cast<int>(i) <= max_degree; ++i) {
        if (a.coeff(i).is_zero()) continue;
        size_t top = std::min(b.coeffs().size(), static_cast<size_t>(max_degree) + 1 - i);
        for (size_t k = 0; k < top; ++k) c[i + k] += a.coeff(i) * b.coeff(k);
    }
    return HPoly(std::move(c));
}

HPoly div_exact(const HPoly& num, const HPoly& den) {
    if (den.is_zero()) throw std::domain_error("div_exact: division by zero polynomial");
    if (num.is_zero()) return HPoly();
    const int dd = den.degree();
    if (num.degree() < dd) throw std::domain_error("div_exact: nonzero remainder");
    std::vector<Rational> rem(num.coeffs());
    std::vector<Rational> q(static_cast<size_t>(num.degree() - dd) + 1, Rational(0));
    const Rational lead = den.coeff(static_cast<size_t>(dd));
    for (size_t k = q.size(); k-- > 0;) {
        Rational c = rem[k + dd] / lead;
        q[k] = c;
        if (c.is_zero()) continue;
        for (int i = 0; i <= dd; ++i) rem[k + i] -= c * den.coeff(static_cast<size_t>(i));
    }
    for (const auto& c : rem)
        if (!c.is_zero()) throw std::domain_error("div_exact: nonzero remainder");
    return HPoly(std::move(q));
}

HPoly HPoly::scaled(const Rational& k) const {
    if (k.is_zero()) return HPoly();
    HPoly r(*this);
    for (auto& c : r.c_) c *= k;
    return r;
}

HPoly HPoly::shifted_up(unsigned k) const {
    if (is_zero() || k == 0) return *this;
    HPoly r;
    if (degree() + static_cast<int>(k) > degree_limit())
        throw degree_limit_error("shift exceeds degree limit");
    r.c_.assign(c_.size() + k, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

bool HPoly::divisible_by_h(unsigned k) const {
    if (is_zero()) return true;
    if (c_.size() < k) return false;
    for (unsigned i = 0; i < k; ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

HPoly HPoly::divided_by_h(unsigned k) const {
    if (is_zero() || k == 0) return *this;
    if (!divisible_by_h(k))
        throw std::domain_error("divided_by_h: polynomial " + str() + " not divisible by h^" +
                                std::to_string(k));
    HPoly r;
    r.c_.assign(c_.begin() + k, c_.end());
    return r;
}

std::complex<double> HPoly::eval(const std::complex<double>& h0) const {
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * h0 + c_[i].to_double();
    return acc;
}

Rational HPoly::eval_rational(const Rational& h0) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * h0 + c_[i];
    return acc;
}

std::string HPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
        const Rational& c = c_[k];
        if (c.is_zero()) continue;
        Rational mag = c.sgn() < 0 ? -c : c;
        if (first) {
            if (c.sgn() < 0) os << "-";
            first = false;
        } else {
            os << (c.sgn() < 0 ? " - " : " + ");
        }
        bool show_coeff = (k == 0) || !mag.is_one();
        if (show_coeff) os << mag.str();
        if (k > 0) {
            if (show_coeff) os << " ";
            os << "h";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace uhsl2
