#include "zetask/laurent_fraction.hpp"

namespace zetask {

Polynomial<Rational> laurent_to_dense(const LaurentPoly& p) {
    if (p.is_zero()) return {};
    if (p.min_exp() < 0) throw std::logic_error("laurent_to_dense: negative exponent");
    std::vector<Rational> c(static_cast<std::size_t>(p.max_exp()) + 1, Rational(0));
    for (const auto& [e, v] : p.terms()) c[static_cast<std::size_t>(e)] = v;
    return Polynomial<Rational>(std::move(c));
}

LaurentPoly dense_to_laurent(const Polynomial<Rational>& p, const std::string& var) {
    LaurentPoly r(var);
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        r += LaurentPoly::monomial(var, static_cast<std::int64_t>(i), p.coeff(i));
    return r;
}

void LaurentFraction::normalize() {
    if (den_.is_zero()) throw std::domain_error("division by zero polynomial");
    const std::string var = den_.var();
    if (num_.is_zero()) {
        num_ = LaurentPoly(var);
        den_ = LaurentPoly::constant(var, 1);
        return;
    }
    // Strip monomial content so both sides become ordinary polynomials with
    // nonzero constant term; the net power of w moves into the numerator.
    std::int64_t a = num_.min_exp();
    std::int64_t b = den_.min_exp();
    Polynomial<Rational> n = laurent_to_dense(num_.shifted(-a));
    Polynomial<Rational> d = laurent_to_dense(den_.shifted(-b));
    Polynomial<Rational> g = Polynomial<Rational>::gcd(n, d);
    if (g.degree() > 0) {
        n = Polynomial<Rational>::exact_div(n, g);
        d = Polynomial<Rational>::exact_div(d, g);
    }
    Rational lead = d.leading();
    n = n.scaled(Rational(1) / lead);
    d = d.scaled(Rational(1) / lead);
    num_ = dense_to_laurent(n, var).shifted(a - b);
    den_ = dense_to_laurent(d, var);
}

LaurentFraction LaurentFraction::operator-() const {
    LaurentFraction r = *this;
    r.num_ = -r.num_;
    return r;
}

LaurentFraction LaurentFraction::operator+(const LaurentFraction& o) const {
    return LaurentFraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

LaurentFraction LaurentFraction::operator-(const LaurentFraction& o) const { return *this + (-o); }

LaurentFraction LaurentFraction::operator*(const LaurentFraction& o) const {
    return LaurentFraction(num_ * o.num_, den_ * o.den_);
}

LaurentFraction LaurentFraction::operator/(const LaurentFraction& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero polynomial");
    return LaurentFraction(num_ * o.den_, den_ * o.num_);
}

std::string LaurentFraction::str() const {
    if (is_laurent()) return num_.str();
    bool wrap_num = num_.terms().size() > 1;
    bool wrap_den = den_.terms().size() > 1;
    std::string s = wrap_num ? "(" + num_.str() + ")" : num_.str();
    s += "/";
    s += wrap_den ? "(" + den_.str() + ")" : den_.str();
    return s;
}

} // namespace zetask
