#include "zetask/laurent.hpp"

#include <sstream>

namespace zetask {

LaurentPoly LaurentPoly::constant(std::string var, const Rational& c) {
    LaurentPoly p(std::move(var));
    p.insert_term(0, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(std::string var, std::int64_t exp, const Rational& c) {
    LaurentPoly p(std::move(var));
    p.insert_term(exp, c);
    return p;
}

Rational LaurentPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::logic_error("LaurentPoly: not a constant: " + str());
    return terms_.begin()->second;
}

std::int64_t LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::logic_error("LaurentPoly: min_exp of zero");
    return terms_.begin()->first;
}

std::int64_t LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::logic_error("LaurentPoly: max_exp of zero");
    return terms_.rbegin()->first;
}

Rational LaurentPoly::coeff(std::int64_t exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::insert_term(std::int64_t exp, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(exp, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

const std::string& LaurentPoly::var_check(const LaurentPoly& o) const {
    // A zero operand carries no meaningful tag; adopt the other side's.
    if (!terms_.empty() && !o.terms_.empty() && var_ != o.var_)
        throw std::logic_error("LaurentPoly: variable mismatch: " + var_ + " vs " + o.var_);
    return o.var_;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    var_check(o);
    LaurentPoly r(terms_.empty() ? o.var_ : var_);
    r.terms_ = terms_;
    for (const auto& [e, c] : o.terms_) r.insert_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    var_check(o);
    LaurentPoly r(terms_.empty() ? o.var_ : var_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.insert_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    LaurentPoly r(var_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly r = constant(var_, 1);
    LaurentPoly base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(std::int64_t shift) const {
    LaurentPoly r(var_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + shift, c);
    return r;
}

Rational LaurentPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
        if (e < 0 && x == 0) throw std::domain_error("LaurentPoly: negative exponent at 0");
        Rational p = 1;
        std::int64_t k = e < 0 ? -e : e;
        for (std::int64_t i = 0; i < k; ++i) p *= x;
        acc += c * (e < 0 ? Rational(1) / p : p);
    }
    return acc;
}

LaurentPoly LaurentPoly::rescaled(std::int64_t D, std::string new_var) const {
    if (D < 1) throw std::invalid_argument("rescale factor must be >= 1");
    LaurentPoly r(std::move(new_var));
    for (const auto& [e, c] : terms_) r.terms_.emplace(e * D, c);
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Highest exponent first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a < 0) { out << "-"; a = -a; }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (e == 0) {
            out << rat_str(a);
        } else {
            if (a != 1) out << rat_str(a) << "*";
            out << var_;
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

LaurentPoly ExponentRescaling::apply(const LaurentPoly& p) const {
    if (!p.is_zero() && p.var() != base_var)
        throw std::logic_error("rescaling expects variable " + base_var + ", got " + p.var());
    return p.rescaled(factor, target_var);
}

ExponentRescaling ExponentRescaling::then(const ExponentRescaling& next) const {
    if (next.base_var != target_var)
        throw std::logic_error("rescaling composition mismatch: " + target_var + " vs " + next.base_var);
    return ExponentRescaling{base_var, next.target_var, factor * next.factor};
}

LaurentPoly rescale_exponents(const LaurentPoly& p, std::int64_t D, std::string new_var) {
    if (D < 1) throw std::invalid_argument("rescale factor must be >= 1");
    return p.rescaled(D, std::move(new_var));
}

} // namespace zetask
