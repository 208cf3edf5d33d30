#pragma once

#include "zetask/errors.hpp"
#include "zetask/poly_roots.hpp"
#include "zetask/polynomial.hpp"
#include "zetask/rational.hpp"
#include "zetask/rational_function.hpp"

#include <map>
#include <string>
#include <utility>

namespace zetask {

// Sparse bivariate polynomial over Q with nonnegative exponents; the working
// object of the curve resolver.
class PlanePoly {
public:
    PlanePoly() = default;
    static PlanePoly constant(const Rational& c);
    static PlanePoly monomial(int i, int j, const Rational& c);

    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
    void add_term(int i, int j, const Rational& c);
    bool is_zero() const { return terms_.empty(); }

    PlanePoly operator-() const;
    PlanePoly operator+(const PlanePoly& o) const;
    PlanePoly operator-(const PlanePoly& o) const;
    PlanePoly operator*(const PlanePoly& o) const;
    PlanePoly pow(unsigned k) const;
    bool operator==(const PlanePoly& o) const;

    Rational coeff(int i, int j) const;
    Rational eval(const Rational& x, const Rational& y) const;

    // Minimum total degree of a term: the multiplicity of the curve at 0.
    int multiplicity_at_origin() const;
    int total_degree() const;

    // x -> x + a, y -> y + b.
    PlanePoly translated(const Rational& a, const Rational& b) const;

    // Blowup chart substitutions (x, y) -> (x, x*y) and (x, y) -> (x*y, y).
    PlanePoly substitute_chart1() const;
    PlanePoly substitute_chart2() const;

    PlanePoly divide_x_power(int m) const;
    PlanePoly divide_y_power(int m) const;
    int order_in_x() const;
    int order_in_y() const;

    // f(0, y) and f(x, 0) as dense univariate polynomials.
    Polynomial<Rational> restrict_x0() const;
    Polynomial<Rational> restrict_y0() const;

    PlanePoly dx() const;
    PlanePoly dy() const;

    // Lowest-total-degree homogeneous part (tangent cone at the origin).
    PlanePoly initial_form() const;

    // gcd of the x-coefficient polynomials across y-slices (monic).
    Polynomial<Rational> restrict_y_content() const;

    std::string str() const;

private:
    std::map<std::pair<int, int>, Rational> terms_;
};

PlanePoly plane_gcd(const PlanePoly& a, const PlanePoly& b);
PlanePoly plane_exact_div(const PlanePoly& a, const PlanePoly& b);
// f divided by gcd(f, f_x, f_y): same support, all multiplicities one.
PlanePoly squarefree_part(const PlanePoly& f);

// Parses the input grammar: rational coefficients, x, y, ^, *, +, -, and
// parentheses. Throws DataError with a position on syntax errors.
PlanePoly parse_plane_poly(const std::string& text);

} // namespace zetask
