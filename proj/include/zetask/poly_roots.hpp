#pragma once

#include "zetask/polynomial.hpp"
#include "zetask/rational.hpp"

#include <utility>
#include <vector>

namespace zetask {

struct RationalRoots {
    std::vector<std::pair<Rational, int>> roots; // ascending, with multiplicities
    Polynomial<Rational> residual;               // monic cofactor with no rational roots
};

// All rational roots of p (nonzero), found by the rational root theorem on
// the integer-cleared polynomial. The residual is what remains after
// deflating them out, normalized monic.
RationalRoots rational_roots(const Polynomial<Rational>& p);

// Divisors of |n| (n nonzero), ascending. Factorization is by trial division
// with a cutoff; a residual cofactor is treated as prime, which can only
// cause extra candidates to be skipped for astronomically structured inputs.
std::vector<BigInt> divisors(BigInt n);

// Yun-style squarefree decomposition: p = prod_i out[i-1]^i with the entries
// pairwise coprime and squarefree. p must be nonzero; result entries monic.
std::vector<Polynomial<Rational>> squarefree_decomposition(Polynomial<Rational> p);

} // namespace zetask
