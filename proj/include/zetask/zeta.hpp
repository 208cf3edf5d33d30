#pragma once

#include "zetask/laurent_fraction.hpp"
#include "zetask/rational_function.hpp"
#include "zetask/strata_complex.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace zetask {

// One stratum's contribution: a coefficient times the product of the factors
// indexed by the (nu, N) data of its vertices. For the topological kind the
// coefficient is the constant chi; for the specialized motivic kind it is
// (u^2-1)^|J| times the stratum class with L replaced by u^2.
struct ZetaTerm {
    std::string cell_id;
    LaurentPoly coefficient; // in "u"
    std::vector<std::pair<std::int64_t, std::int64_t>> factors; // (nu, N), sorted
};

struct ZetaExpression {
    enum class Kind { Topological, NaiveSpecialized };
    Kind kind = Kind::Topological;
    int ambient_dimension = 2;
    std::vector<ZetaTerm> terms;
};

ZetaExpression topological_expression(const StrataComplex& c);
ZetaExpression naive_expression(const StrataComplex& c);

// Sum of chi * prod 1/(N s + nu) over the strata lying over x, as a canonical
// rational function in s.
RationalFunction<Rational> topological_zeta(const StrataComplex& c);

// The specialized motivic zeta function: classes are sent to their Poincare
// polynomials (L -> u^2), each L^{-nu - N s} becomes u^{-2 nu} T^N with
// T = L^{-s}, and exponents are cleared by u = w^D with D = 2 lcm of the
// vertex multiplicities, so every candidate pole is an integer power of w.
struct NaiveZeta {
    RationalFunction<LaurentFraction> rf; // in T over Q(w)
    ExponentRescaling rescaling;          // u = w^D
};
NaiveZeta naive_zeta_specialized(const StrataComplex& c);

// Distinct candidate poles -nu/N, ascending (restricted to the components
// through x in hypersurface mode).
std::vector<Rational> candidate_poles(const StrataComplex& c);

struct PoleReport {
    Rational candidate;
    int order = 0;
    bool is_largest = false;
    std::vector<std::string> witnesses; // over-x cells contributing a vanishing factor
};

// Pole orders of the topological zeta at each candidate. Orders are exact
// multiplicities in the canonical denominator; candidates of order zero are
// reported so cancellations stay visible.
std::vector<PoleReport> pole_spectrum(const RationalFunction<Rational>& z,
                                      const std::vector<Rational>& candidates,
                                      const StrataComplex& c);

// Pole orders of the specialized motivic zeta: the order at s0 = a/b is the
// one-variable order in T at T0 = w^{-2 D a / b} (an integer power of w by
// the choice of D).
std::vector<PoleReport> pole_spectrum(const NaiveZeta& z, const std::vector<Rational>& candidates,
                                      const StrataComplex& c);

// Residue-like limit (s - s0)^k Z at s = s0; exact.
Rational shifted_limit(const RationalFunction<Rational>& z, const Rational& s0, int k);

// Rendering. The factored denominators list primitive integer factors
// (b*s + a) for each pole -a/b, sorted by (b, a); for the motivic kind the
// factors are the binomials 1 - L^-nu T^N sorted by (N, -nu). The expanded
// form renders the canonical monic representation.
std::string render_expanded(const RationalFunction<Rational>& z, const std::string& var = "s");
std::string render_factored(const RationalFunction<Rational>& z);
std::string render_expanded(const NaiveZeta& z);
std::string render_factored(const NaiveZeta& z, const StrataComplex& c);

std::string render_poly(const Polynomial<Rational>& p, const std::string& var);

} // namespace zetask
