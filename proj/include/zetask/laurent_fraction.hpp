#pragma once

#include "zetask/laurent.hpp"
#include "zetask/polynomial.hpp"

#include <string>

namespace zetask {

// Element of the fraction field of Q[w, w^-1], stored as a pair of Laurent
// polynomials. Canonical form: the denominator is an ordinary monic
// polynomial with nonzero constant term (all monomial content is pushed
// into the numerator's exponents), and numerator/denominator are coprime.
// In the intended uses the denominator is almost always 1, so the sparse
// Laurent representation keeps huge exponents cheap.
class LaurentFraction {
public:
    LaurentFraction(int v = 0) : LaurentFraction(Rational(v)) {}
    explicit LaurentFraction(const Rational& c, std::string var = "w")
        : num_(LaurentPoly::constant(var, c)), den_(LaurentPoly::constant(var, 1)) {}
    explicit LaurentFraction(LaurentPoly p)
        : num_(std::move(p)), den_(LaurentPoly::constant(num_.var(), 1)) {}
    LaurentFraction(LaurentPoly n, LaurentPoly d) : num_(std::move(n)), den_(std::move(d)) {
        normalize();
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    const std::string& var() const { return num_.var(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_.is_constant() && den_.constant_value() == 1; }
    bool is_rational() const { return num_.is_constant() && is_laurent(); }
    Rational rational_value() const { return num_.constant_value(); }

    bool operator==(const LaurentFraction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const LaurentFraction& o) const { return !(*this == o); }

    LaurentFraction operator-() const;
    LaurentFraction operator+(const LaurentFraction& o) const;
    LaurentFraction operator-(const LaurentFraction& o) const;
    LaurentFraction operator*(const LaurentFraction& o) const;
    LaurentFraction operator/(const LaurentFraction& o) const;
    LaurentFraction& operator+=(const LaurentFraction& o) { return *this = *this + o; }
    LaurentFraction& operator*=(const LaurentFraction& o) { return *this = *this * o; }

    std::string str() const;

private:
    void normalize();

    LaurentPoly num_{"w"};
    LaurentPoly den_ = LaurentPoly::constant("w", 1);
};

// Conversions between sparse Laurent and dense polynomial form.
// to_dense requires all exponents nonnegative.
Polynomial<Rational> laurent_to_dense(const LaurentPoly& p);
LaurentPoly dense_to_laurent(const Polynomial<Rational>& p, const std::string& var);

} // namespace zetask
