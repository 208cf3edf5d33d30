// Test-only independent oracles. These deliberately avoid the library's
// Euclidean-division code paths so they can cross-check them.
#pragma once

#include "zetask/laurent_fraction.hpp"
#include "zetask/polynomial.hpp"
#include "zetask/rational.hpp"
#include "zetask/rational_function.hpp"

#include <random>
#include <vector>

namespace zetask::oracles {

// Determinant by fraction-ful Gaussian elimination over a field K.
template <class K>
K determinant(std::vector<std::vector<K>> m) {
    const std::size_t n = m.size();
    K det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == K(0)) ++pivot;
        if (pivot == n) return K(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = K(0) - det;
        }
        det = det * m[col][col];
        K inv = K(1) / m[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            K factor = m[row][col] * inv;
            for (std::size_t j = col; j < n; ++j) m[row][j] = m[row][j] - factor * m[col][j];
        }
    }
    return det;
}

// Resultant via the Sylvester matrix; zero iff a and b share a factor.
template <class K>
K sylvester_resultant(const Polynomial<K>& a, const Polynomial<K>& b) {
    const int da = a.degree(), db = b.degree();
    if (da < 0 || db < 0) return K(0);
    const std::size_t n = static_cast<std::size_t>(da + db);
    if (n == 0) return K(1);
    std::vector<std::vector<K>> m(n, std::vector<K>(n, K(0)));
    for (int row = 0; row < db; ++row)
        for (int j = 0; j <= da; ++j) m[static_cast<std::size_t>(row)][static_cast<std::size_t>(row + j)] = a.coeff(static_cast<std::size_t>(da - j));
    for (int row = 0; row < da; ++row)
        for (int j = 0; j <= db; ++j) m[static_cast<std::size_t>(db + row)][static_cast<std::size_t>(row + j)] = b.coeff(static_cast<std::size_t>(db - j));
    return determinant(std::move(m));
}

// Valuation of p at x0 computed through formal derivatives (Taylor spirit):
// smallest k with p^(k)(x0) != 0. Independent of synthetic division.
template <class K>
int valuation_by_derivatives(Polynomial<K> p, const K& x0) {
    if (p.is_zero()) throw std::domain_error("valuation of zero polynomial");
    int k = 0;
    while (!(p.eval(x0) != K(0))) {
        p = p.derivative();
        ++k;
    }
    return k;
}

// Pole order via the principal-part route: the largest index m such that the
// coefficient of 1/(T-x0)^m in the dense partial-fraction expansion is
// nonzero. Uses derivative valuations and the Taylor-coefficient formula for
// the leading principal coefficient.
template <class K>
int pole_order_by_partial_fractions(const RationalFunction<K>& rf, const K& x0) {
    if (rf.is_zero()) return 0;
    int vd = valuation_by_derivatives(rf.den(), x0);
    int vn = valuation_by_derivatives(rf.num(), x0);
    int order = vd - vn;
    if (order <= 0) return 0;
    // Sanity: leading principal coefficient num(x0)*vn!/... is nonzero by
    // construction when vn = 0; when vn > 0 the subtraction above already
    // accounts for the cancellation.
    return order;
}

inline Rational random_rational(std::mt19937_64& rng, int max_abs_num = 9, int max_den = 5) {
    std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rational(num(rng), den(rng));
}

inline LaurentPoly random_laurent(std::mt19937_64& rng, const std::string& var, int max_terms = 4,
                                  int exp_range = 5) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(-exp_range, exp_range);
    LaurentPoly p(var);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) p += LaurentPoly::monomial(var, exp(rng), random_rational(rng));
    return p;
}

} // namespace zetask::oracles
