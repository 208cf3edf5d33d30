#include "zetask/zeta.hpp"

#include "zetask/poly_roots.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace zetask {

namespace {

using PolyQ = Polynomial<Rational>;
using RatFuncQ = RationalFunction<Rational>;
using PolyT = Polynomial<LaurentFraction>;
using RatFuncT = RationalFunction<LaurentFraction>;

std::vector<std::pair<std::int64_t, std::int64_t>> cell_factors(const StrataComplex& c,
                                                                const Stratum& s) {
    std::vector<std::pair<std::int64_t, std::int64_t>> f;
    for (const auto& vid : s.vertices) {
        const Divisor* v = c.find_vertex(vid);
        if (!v) throw DataError("cell " + s.id + ": unknown vertex " + vid);
        f.emplace_back(v->nu, v->N);
    }
    std::sort(f.begin(), f.end());
    return f;
}

std::int64_t rescale_factor(const StrataComplex& c) {
    BigInt l = 1;
    for (const Divisor& v : c.vertices) l = big_lcm(l, BigInt(v.N));
    l *= 2;
    if (l > BigInt(1) << 40) throw DataError("vertex multiplicities too large for exponent clearing");
    return static_cast<std::int64_t>(l);
}

void require_hypersurface(const StrataComplex& c, const char* what) {
    if (c.mode != ComplexMode::Hypersurface)
        throw DataError(std::string(what) + " requires hypersurface mode");
}

// 1 - w^{-c} T^N over Q(w).
PolyT one_minus_factor(std::int64_t c, std::int64_t N) {
    PolyT p = PolyT::constant(LaurentFraction(Rational(1)));
    return p - PolyT::monomial(static_cast<std::size_t>(N),
                               LaurentFraction(LaurentPoly::monomial("w", -c, 1)));
}

// T^N - w^c, the monic twin of the factor above.
PolyT monic_binomial(std::int64_t c, std::int64_t N) {
    return PolyT::monomial(static_cast<std::size_t>(N), LaurentFraction(Rational(1))) -
           PolyT::constant(LaurentFraction(LaurentPoly::monomial("w", c, 1)));
}

} // namespace

ZetaExpression topological_expression(const StrataComplex& c) {
    require_hypersurface(c, "the topological zeta function");
    ZetaExpression z;
    z.kind = ZetaExpression::Kind::Topological;
    z.ambient_dimension = c.ambient_dimension;
    for (const Stratum& s : c.cells) {
        if (!s.over_x) continue;
        if (!s.chi_over_x)
            throw DataError("cell " + s.id + ": over-x stratum is missing chi_over_x");
        ZetaTerm t;
        t.cell_id = s.id;
        t.coefficient = LaurentPoly::constant("u", Rational(*s.chi_over_x));
        t.factors = cell_factors(c, s);
        z.terms.push_back(std::move(t));
    }
    return z;
}

ZetaExpression naive_expression(const StrataComplex& c) {
    require_hypersurface(c, "the motivic zeta function");
    ZetaExpression z;
    z.kind = ZetaExpression::Kind::NaiveSpecialized;
    z.ambient_dimension = c.ambient_dimension;
    LaurentPoly u2_minus_1 = LaurentPoly::monomial("u", 2, 1) - LaurentPoly::constant("u", 1);
    for (const Stratum& s : c.cells) {
        if (!s.over_x) continue;
        LaurentPoly cls("u");
        if (s.poincare_over_x) {
            cls = *s.poincare_over_x;
        } else if (s.class_over_x) {
            cls = s.class_over_x->rescaled(2, "u"); // L -> u^2
        } else {
            throw DataError("cell " + s.id + ": over-x stratum is missing class_over_x");
        }
        ZetaTerm t;
        t.cell_id = s.id;
        t.coefficient = u2_minus_1.pow(static_cast<unsigned>(s.vertices.size())) * cls;
        t.factors = cell_factors(c, s);
        z.terms.push_back(std::move(t));
    }
    return z;
}

RationalFunction<Rational> topological_zeta(const StrataComplex& c) {
    ZetaExpression z = topological_expression(c);
    RatFuncQ acc;
    for (const ZetaTerm& t : z.terms) {
        PolyQ den = PolyQ::constant(1);
        for (const auto& [nu, N] : t.factors)
            den = den * PolyQ(std::vector<Rational>{Rational(nu), Rational(N)});
        acc += RatFuncQ(PolyQ::constant(t.coefficient.constant_value()), den);
    }
    return acc;
}

NaiveZeta naive_zeta_specialized(const StrataComplex& c) {
    ZetaExpression z = naive_expression(c);
    std::int64_t D = rescale_factor(c);
    ExponentRescaling rescaling{"u", "w", D};
    RatFuncT acc;
    for (const ZetaTerm& t : z.terms) {
        LaurentPoly coeff_w = rescaling.apply(t.coefficient);
        std::int64_t sum_nu = 0, sum_N = 0;
        PolyT den = PolyT::constant(LaurentFraction(Rational(1)));
        for (const auto& [nu, N] : t.factors) {
            sum_nu += nu;
            sum_N += N;
            den = den * one_minus_factor(2 * nu * D, N);
        }
        LaurentPoly numco = coeff_w * LaurentPoly::monomial("w", -2 * sum_nu * D, 1);
        PolyT num = PolyT::monomial(static_cast<std::size_t>(sum_N), LaurentFraction(numco));
        acc += RatFuncT(num, den);
    }
    return NaiveZeta{std::move(acc), rescaling};
}

std::vector<Rational> candidate_poles(const StrataComplex& c) {
    std::set<Rational> s;
    for (const Divisor& v : c.vertices) {
        if (c.mode == ComplexMode::Hypersurface && !v.meets_x) continue;
        s.insert(-vertex_weight(v));
    }
    return std::vector<Rational>(s.begin(), s.end());
}

namespace {

std::vector<std::string> pole_witnesses(const StrataComplex& c, const Rational& s0) {
    std::vector<std::string> out;
    for (const Stratum& s : c.cells) {
        if (!s.over_x) continue;
        for (const auto& vid : s.vertices) {
            const Divisor* v = c.find_vertex(vid);
            if (v && -vertex_weight(*v) == s0) {
                out.push_back(s.id);
                break;
            }
        }
    }
    return out;
}

void finalize_reports(std::vector<PoleReport>& reports, int n) {
    const PoleReport* largest = nullptr;
    for (const PoleReport& r : reports) {
        if (r.order > n)
            throw InternalError("pole order " + std::to_string(r.order) +
                                " exceeds the ambient dimension bound " + std::to_string(n));
        if (r.order >= 1) largest = &r; // reports are sorted ascending
    }
    for (PoleReport& r : reports) r.is_largest = (&r == largest);
}

} // namespace

std::vector<PoleReport> pole_spectrum(const RationalFunction<Rational>& z,
                                      const std::vector<Rational>& candidates,
                                      const StrataComplex& c) {
    std::vector<PoleReport> out;
    for (const Rational& s0 : candidates) {
        PoleReport r;
        r.candidate = s0;
        r.order = z.is_zero() ? 0 : pole_order_at(z, s0);
        r.witnesses = pole_witnesses(c, s0);
        out.push_back(std::move(r));
    }
    finalize_reports(out, c.ambient_dimension);
    return out;
}

std::vector<PoleReport> pole_spectrum(const NaiveZeta& z, const std::vector<Rational>& candidates,
                                      const StrataComplex& c) {
    const std::int64_t D = z.rescaling.factor;
    std::vector<PoleReport> out;
    for (const Rational& s0 : candidates) {
        // T0 = w^{-2 D s0}; integrality is guaranteed by the choice of D.
        BigInt num = BigInt(-2) * D * rat_num(s0);
        BigInt den = rat_den(s0);
        if (num % den != 0)
            throw InternalError("candidate " + rat_str(s0) +
                                " produces a non-integral exponent after rescaling");
        std::int64_t k = static_cast<std::int64_t>(num / den);
        LaurentFraction T0(LaurentPoly::monomial("w", k, 1));
        PoleReport r;
        r.candidate = s0;
        r.order = z.rf.is_zero() ? 0 : pole_order_at(z.rf, T0);
        r.witnesses = pole_witnesses(c, s0);
        out.push_back(std::move(r));
    }
    finalize_reports(out, c.ambient_dimension);
    return out;
}

Rational shifted_limit(const RationalFunction<Rational>& z, const Rational& s0, int k) {
    if (z.is_zero()) return 0;
    PolyQ num = z.num(), den = z.den();
    int vn = root_multiplicity(num, s0);
    int vd = root_multiplicity(den, s0);
    int order_of_zero = k + vn - vd;
    if (order_of_zero > 0) return 0;
    if (order_of_zero < 0) throw DataError("shifted limit diverges");
    for (int i = 0; i < vn; ++i) num = deflate(num, s0);
    for (int i = 0; i < vd; ++i) den = deflate(den, s0);
    return num.eval(s0) / den.eval(s0);
}

// ---------------------------------------------------------------------------
// Rendering

std::string render_poly(const Polynomial<Rational>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(static_cast<std::size_t>(i));
        if (c == 0) continue;
        if (first) {
            if (c < 0) { out << "-"; c = -c; }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0) {
            out << rat_str(c);
        } else {
            if (c != 1) out << rat_str(c) << "*";
            out << var;
            if (i != 1) out << "^" << i;
        }
    }
    return out.str();
}

std::string render_expanded(const RationalFunction<Rational>& z, const std::string& var) {
    if (z.den().is_constant()) return render_poly(z.num(), var);
    return "(" + render_poly(z.num(), var) + ")/(" + render_poly(z.den(), var) + ")";
}

std::string render_factored(const RationalFunction<Rational>& z) {
    if (z.is_zero()) return "0";
    if (z.den().is_constant()) return render_poly(z.num(), "s");
    RationalRoots rr = rational_roots(z.den());
    // Each rational root -a/b becomes the primitive factor (b*s + a); the
    // cleared content collects into one integer scalar up front.
    Rational scale = 1;
    std::vector<std::pair<std::pair<BigInt, BigInt>, int>> factors; // ((b, a), mult)
    for (const auto& [root, mult] : rr.roots) {
        BigInt b = rat_den(root), a = -rat_num(root);
        factors.emplace_back(std::make_pair(b, a), mult);
        for (int i = 0; i < mult; ++i) scale *= Rational(b);
    }
    std::sort(factors.begin(), factors.end());
    PolyQ num_scaled = z.num().scaled(scale);
    BigInt denlcm = 1;
    for (const Rational& c : num_scaled.coeffs()) denlcm = big_lcm(denlcm, rat_den(c));
    num_scaled = num_scaled.scaled(Rational(denlcm));

    std::ostringstream den;
    if (denlcm != 1) den << denlcm.str();
    bool first = denlcm == 1;
    for (const auto& [ba, mult] : factors) {
        if (!first) den << "*";
        first = false;
        PolyQ lin(std::vector<Rational>{Rational(ba.second), Rational(ba.first)});
        den << "(" << render_poly(lin, "s") << ")";
        if (mult > 1) den << "^" << mult;
    }
    if (!rr.residual.is_constant()) {
        if (!first) den << "*";
        den << "(" << render_poly(rr.residual, "s") << ")";
    }
    return "(" + render_poly(num_scaled, "s") + ")/(" + den.str() + ")";
}

namespace {

std::string render_laurent_coeff(const LaurentFraction& c) {
    if (c.is_laurent() && c.num().is_monomial()) return c.num().str();
    return "(" + c.str() + ")";
}

std::string render_poly_T(const PolyT& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        LaurentFraction c = p.coeff(static_cast<std::size_t>(i));
        if (c == LaurentFraction(0)) continue;
        if (!first) out << " + ";
        first = false;
        if (i == 0) {
            out << (c.is_rational() ? rat_str(c.rational_value())
                                    : "(" + c.str() + ")");
            continue;
        }
        if (c == LaurentFraction(Rational(1))) {
        } else if (c == LaurentFraction(Rational(-1))) {
            out << "-";
        } else {
            out << (c.is_rational() ? rat_str(c.rational_value()) : render_laurent_coeff(c)) << "*";
        }
        out << "T";
        if (i != 1) out << "^" << i;
    }
    return out.str();
}

// Renders a Laurent polynomial in w whose exponents are all multiples of 2D
// as a Laurent polynomial in L (w^{2D} = u^2 = L).
std::string render_w_as_L(const LaurentPoly& p, std::int64_t D) {
    LaurentPoly inL("L");
    for (const auto& [e, c] : p.terms()) {
        if (e % (2 * D) != 0) throw InternalError("exponent not expressible in L");
        inL += LaurentPoly::monomial("L", e / (2 * D), c);
    }
    return inL.str();
}

} // namespace

std::string render_expanded(const NaiveZeta& z) {
    if (z.rf.is_zero()) return "0";
    if (z.rf.den().is_constant() && z.rf.den().coeff(0) == LaurentFraction(Rational(1)))
        return render_poly_T(z.rf.num());
    return "(" + render_poly_T(z.rf.num()) + ")/(" + render_poly_T(z.rf.den()) + ")";
}

std::string render_factored(const NaiveZeta& z, const StrataComplex& c) {
    if (z.rf.is_zero()) return "0";
    const std::int64_t D = z.rescaling.factor;
    // Pull maximal powers of the monic binomials T^N - w^{2 nu D} out of the
    // canonical denominator, largest N first.
    std::set<std::pair<std::int64_t, std::int64_t>> pairs; // (nu, N)
    for (const Divisor& v : c.vertices) pairs.insert({v.nu, v.N});
    std::vector<std::pair<std::int64_t, std::int64_t>> order(pairs.begin(), pairs.end());
    std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first > b.first;
    });
    PolyT den = z.rf.den();
    PolyT num = z.rf.num();
    std::map<std::pair<std::int64_t, std::int64_t>, int> extracted; // (N, -nu) -> power
    for (const auto& [nu, N] : order) {
        PolyT bin = monic_binomial(2 * nu * D, N);
        while (den.degree() >= bin.degree()) {
            PolyT q, r;
            PolyT::divmod(den, bin, q, r);
            if (!r.is_zero()) break;
            den = q;
            ++extracted[{N, -nu}];
            // Compensate: (1 - w^{-c}T^N) = (-w^{-c}) (T^N - w^c).
            num = num.scaled(LaurentFraction(LaurentPoly::monomial("w", -2 * nu * D, -1)));
        }
    }
    std::ostringstream out;
    out << "(";
    // The numerator always lands back in L when the input classes do.
    bool in_L = true;
    for (const auto& coeff : num.coeffs())
        in_L = in_L && coeff.is_laurent() &&
               (coeff.is_zero() || [&] {
                   for (const auto& [e, cc] : coeff.num().terms())
                       if (e % (2 * D) != 0) return false;
                   return true;
               }());
    if (in_L) {
        bool first = true;
        std::ostringstream numout;
        for (int i = num.degree(); i >= 0; --i) {
            const LaurentFraction cf = num.coeff(static_cast<std::size_t>(i));
            if (cf.is_zero()) continue;
            if (!first) numout << " + ";
            first = false;
            std::string cs = render_w_as_L(cf.num(), D);
            if (i == 0) {
                numout << (cf.num().terms().size() > 1 ? "(" + cs + ")" : cs);
                continue;
            }
            if (cs != "1") numout << (cf.num().terms().size() > 1 ? "(" + cs + ")" : cs) << "*";
            numout << "T";
            if (i != 1) numout << "^" << i;
        }
        out << (first ? "0" : numout.str());
    } else {
        out << render_poly_T(num);
    }
    out << ")/(";
    bool first = true;
    for (const auto& [key, power] : extracted) { // sorted by (N, -nu)
        const auto& [N, neg_nu] = key;
        if (!first) out << "*";
        first = false;
        out << "(1 - L^" << neg_nu << "*T";
        if (N != 1) out << "^" << N;
        out << ")";
        if (power > 1) out << "^" << power;
    }
    if (!den.is_constant() || !(den.coeff(0) == LaurentFraction(Rational(1)))) {
        if (!first) out << "*";
        first = false;
        out << "(" << render_poly_T(den) << ")";
    }
    if (first) out << "1";
    out << ")";
    return out.str();
}

} // namespace zetask
