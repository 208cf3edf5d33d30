#pragma once

#include "zetask/rational.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace zetask {

// Sparse univariate Laurent polynomial over Q: finitely many terms
// coeff * var^exp with integer (possibly negative) exponents.
// Zero coefficients are never stored. The variable tag travels with the
// value; arithmetic between different tags is rejected.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(std::string var) : var_(std::move(var)) {}

    static LaurentPoly constant(std::string var, const Rational& c);
    static LaurentPoly monomial(std::string var, std::int64_t exp, const Rational& c);
    static LaurentPoly variable(std::string var) { return monomial(std::move(var), 1, 1); }

    const std::string& var() const { return var_; }
    const std::map<std::int64_t, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    Rational constant_value() const;
    bool is_monomial() const { return terms_.size() == 1; }

    // Lowest/highest exponent; meaningless on zero (throws).
    std::int64_t min_exp() const;
    std::int64_t max_exp() const;
    Rational coeff(std::int64_t exp) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly& o) const { return var_ == var_check(o) && terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly scaled(const Rational& c) const;
    LaurentPoly pow(unsigned k) const;
    // Multiplies by var^shift.
    LaurentPoly shifted(std::int64_t shift) const;

    // Evaluation; x must be nonzero if any exponent is negative.
    Rational eval(const Rational& x) const;

    // Exponent substitution var = new_var^(1/D) inverted: every exponent e
    // becomes D*e, the tag becomes new_var. Requires D >= 1.
    LaurentPoly rescaled(std::int64_t D, std::string new_var) const;

    std::string str() const;

private:
    void insert_term(std::int64_t exp, const Rational& c);
    const std::string& var_check(const LaurentPoly& o) const;

    std::string var_ = "t";
    std::map<std::int64_t, Rational> terms_;
};

// Records the exponent substitution base_var = target_var^factor, used to
// clear fractional exponents before pole analysis.
struct ExponentRescaling {
    std::string base_var;   // e.g. "u"
    std::string target_var; // e.g. "w"
    std::int64_t factor = 1; // >= 1

    // Applies to a Laurent polynomial in base_var.
    LaurentPoly apply(const LaurentPoly& p) const;
    // Composition: first this, then next (next.base_var must equal target_var);
    // factors multiply.
    ExponentRescaling then(const ExponentRescaling& next) const;
};

// rescale_exponents(p, D): exponents multiplied by D exactly. D <= 0 is an error.
LaurentPoly rescale_exponents(const LaurentPoly& p, std::int64_t D, std::string new_var = "w");

} // namespace zetask
