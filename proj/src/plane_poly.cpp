#include "zetask/plane_poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace zetask {

// ---------------------------------------------------------------------------
// Rational roots and squarefree decomposition of dense univariate polynomials.

std::vector<BigInt> divisors(BigInt n) {
    n = boost::multiprecision::abs(n);
    if (n == 0) throw InternalError("divisors of zero");
    std::vector<std::pair<BigInt, int>> factors;
    for (BigInt p = 2; p * p <= n && p < 1000000; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            factors.emplace_back(p, e);
        }
    }
    if (n > 1) factors.emplace_back(n, 1); // possibly composite; treated as prime
    std::vector<BigInt> divs{BigInt(1)};
    for (const auto& [p, e] : factors) {
        std::size_t base = divs.size();
        BigInt pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
        if (divs.size() > 200000) throw InternalError("divisor enumeration exploded");
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

RationalRoots rational_roots(const Polynomial<Rational>& p) {
    if (p.is_zero()) throw InternalError("rational_roots of zero polynomial");
    RationalRoots out;
    Polynomial<Rational> q = p;

    // Factor out the root at 0 first.
    int zero_mult = 0;
    while (!q.is_zero() && q.coeff(0) == 0) {
        q = deflate(q, Rational(0));
        ++zero_mult;
    }
    if (zero_mult > 0) out.roots.emplace_back(Rational(0), zero_mult);
    if (q.degree() <= 0) {
        out.residual = Polynomial<Rational>::constant(1);
        return out;
    }

    // Clear denominators to integer coefficients.
    BigInt denlcm = 1;
    for (const Rational& c : q.coeffs()) denlcm = big_lcm(denlcm, rat_den(c));
    std::vector<BigInt> ic;
    for (const Rational& c : q.coeffs()) ic.push_back(rat_num(c) * (denlcm / rat_den(c)));

    std::vector<BigInt> ps = divisors(ic.front());
    std::vector<BigInt> qs = divisors(ic.back());
    std::vector<Rational> candidates;
    for (const BigInt& a : ps)
        for (const BigInt& b : qs) {
            candidates.emplace_back(Rational(a, b));
            candidates.emplace_back(Rational(-a, b));
        }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (const Rational& r : candidates) {
        int mult = 0;
        while (q.degree() > 0 && q.eval(r) == 0) {
            q = deflate(q, r);
            ++mult;
        }
        if (mult > 0) out.roots.emplace_back(r, mult);
        if (q.degree() == 0) break;
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.residual = q.monic();
    return out;
}

std::vector<Polynomial<Rational>> squarefree_decomposition(Polynomial<Rational> p) {
    using PolyQ = Polynomial<Rational>;
    if (p.is_zero()) throw InternalError("squarefree decomposition of zero");
    p = p.monic();
    std::vector<PolyQ> out;
    if (p.degree() == 0) return out;
    PolyQ dp = p.derivative();
    PolyQ a = PolyQ::gcd(p, dp);
    PolyQ b = PolyQ::exact_div(p, a);
    PolyQ c = PolyQ::exact_div(dp, a);
    PolyQ d = c - b.derivative();
    while (true) {
        if (b.degree() == 0) break;
        PolyQ f = PolyQ::gcd(b, d);
        out.push_back(f.monic());
        b = PolyQ::exact_div(b, f);
        c = PolyQ::exact_div(d, f);
        d = c - b.derivative();
    }
    return out;
}

// ---------------------------------------------------------------------------
// PlanePoly

PlanePoly PlanePoly::constant(const Rational& c) {
    PlanePoly p;
    p.add_term(0, 0, c);
    return p;
}

PlanePoly PlanePoly::monomial(int i, int j, const Rational& c) {
    PlanePoly p;
    p.add_term(i, j, c);
    return p;
}

void PlanePoly::add_term(int i, int j, const Rational& c) {
    if (c == 0) return;
    if (i < 0 || j < 0) throw InternalError("negative exponent in plane polynomial");
    auto key = std::make_pair(i, j);
    auto [it, fresh] = terms_.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

PlanePoly PlanePoly::operator-() const {
    PlanePoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

PlanePoly PlanePoly::operator+(const PlanePoly& o) const {
    PlanePoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

PlanePoly PlanePoly::operator-(const PlanePoly& o) const { return *this + (-o); }

PlanePoly PlanePoly::operator*(const PlanePoly& o) const {
    PlanePoly r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

PlanePoly PlanePoly::pow(unsigned k) const {
    PlanePoly r = constant(1);
    PlanePoly base = *this;
    while (k) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

bool PlanePoly::operator==(const PlanePoly& o) const { return terms_ == o.terms_; }

Rational PlanePoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

int PlanePoly::multiplicity_at_origin() const {
    if (terms_.empty()) throw DataError("multiplicity of the zero polynomial");
    int m = -1;
    for (const auto& [k, c] : terms_) {
        int t = k.first + k.second;
        if (m < 0 || t < m) m = t;
    }
    return m;
}

int PlanePoly::total_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
    return d;
}

Rational PlanePoly::eval(const Rational& x, const Rational& y) const {
    Rational acc = 0;
    for (const auto& [k, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < k.first; ++i) t *= x;
        for (int j = 0; j < k.second; ++j) t *= y;
        acc += t;
    }
    return acc;
}

PlanePoly PlanePoly::translated(const Rational& a, const Rational& b) const {
    // x -> x + a, y -> y + b via binomial expansion per term.
    auto binomials = [](int n) {
        std::vector<BigInt> row(static_cast<std::size_t>(n) + 1);
        row[0] = 1;
        for (int i = 1; i <= n; ++i) row[static_cast<std::size_t>(i)] = row[static_cast<std::size_t>(i - 1)] * (n - i + 1) / i;
        return row;
    };
    PlanePoly r;
    for (const auto& [k, c] : terms_) {
        auto bx = binomials(k.first);
        auto by = binomials(k.second);
        std::vector<Rational> xpow(static_cast<std::size_t>(k.first) + 1, Rational(1));
        for (int i = 1; i <= k.first; ++i) xpow[static_cast<std::size_t>(i)] = xpow[static_cast<std::size_t>(i - 1)] * a;
        std::vector<Rational> ypow(static_cast<std::size_t>(k.second) + 1, Rational(1));
        for (int j = 1; j <= k.second; ++j) ypow[static_cast<std::size_t>(j)] = ypow[static_cast<std::size_t>(j - 1)] * b;
        for (int i = 0; i <= k.first; ++i)
            for (int j = 0; j <= k.second; ++j)
                r.add_term(i, j,
                           c * Rational(bx[static_cast<std::size_t>(k.first - i)]) * xpow[static_cast<std::size_t>(k.first - i)] *
                               Rational(by[static_cast<std::size_t>(k.second - j)]) * ypow[static_cast<std::size_t>(k.second - j)]);
    }
    return r;
}

PlanePoly PlanePoly::substitute_chart1() const {
    // (x, y) -> (x, x*y): monomial x^i y^j -> x^(i+j) y^j.
    PlanePoly r;
    for (const auto& [k, c] : terms_) r.add_term(k.first + k.second, k.second, c);
    return r;
}

PlanePoly PlanePoly::substitute_chart2() const {
    // (x, y) -> (x*y, y): monomial x^i y^j -> x^i y^(i+j).
    PlanePoly r;
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.first + k.second, c);
    return r;
}

PlanePoly PlanePoly::divide_x_power(int m) const {
    PlanePoly r;
    for (const auto& [k, c] : terms_) {
        if (k.first < m) throw InternalError("divide_x_power: term not divisible");
        r.add_term(k.first - m, k.second, c);
    }
    return r;
}

PlanePoly PlanePoly::divide_y_power(int m) const {
    PlanePoly r;
    for (const auto& [k, c] : terms_) {
        if (k.second < m) throw InternalError("divide_y_power: term not divisible");
        r.add_term(k.first, k.second - m, c);
    }
    return r;
}

int PlanePoly::order_in_x() const {
    if (terms_.empty()) throw InternalError("order_in_x of zero");
    int m = -1;
    for (const auto& [k, c] : terms_)
        if (m < 0 || k.first < m) m = k.first;
    return m;
}

int PlanePoly::order_in_y() const {
    if (terms_.empty()) throw InternalError("order_in_y of zero");
    int m = -1;
    for (const auto& [k, c] : terms_)
        if (m < 0 || k.second < m) m = k.second;
    return m;
}

Polynomial<Rational> PlanePoly::restrict_x0() const {
    // f(0, y) as a dense polynomial in y.
    int maxj = -1;
    for (const auto& [k, c] : terms_)
        if (k.first == 0) maxj = std::max(maxj, k.second);
    if (maxj < 0) return {};
    std::vector<Rational> coeffs(static_cast<std::size_t>(maxj) + 1, Rational(0));
    for (const auto& [k, c] : terms_)
        if (k.first == 0) coeffs[static_cast<std::size_t>(k.second)] = c;
    return Polynomial<Rational>(std::move(coeffs));
}

Polynomial<Rational> PlanePoly::restrict_y0() const {
    int maxi = -1;
    for (const auto& [k, c] : terms_)
        if (k.second == 0) maxi = std::max(maxi, k.first);
    if (maxi < 0) return {};
    std::vector<Rational> coeffs(static_cast<std::size_t>(maxi) + 1, Rational(0));
    for (const auto& [k, c] : terms_)
        if (k.second == 0) coeffs[static_cast<std::size_t>(k.first)] = c;
    return Polynomial<Rational>(std::move(coeffs));
}

PlanePoly PlanePoly::dx() const {
    PlanePoly r;
    for (const auto& [k, c] : terms_)
        if (k.first > 0) r.add_term(k.first - 1, k.second, c * k.first);
    return r;
}

PlanePoly PlanePoly::dy() const {
    PlanePoly r;
    for (const auto& [k, c] : terms_)
        if (k.second > 0) r.add_term(k.first, k.second - 1, c * k.second);
    return r;
}

PlanePoly PlanePoly::initial_form() const {
    int m = multiplicity_at_origin();
    PlanePoly r;
    for (const auto& [k, c] : terms_)
        if (k.first + k.second == m) r.add_term(k.first, k.second, c);
    return r;
}

std::string PlanePoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Deterministic order: by total degree, then x-exponent.
    std::vector<std::pair<std::pair<int, int>, Rational>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int ta = a.first.first + a.first.second, tb = b.first.first + b.first.second;
        if (ta != tb) return ta < tb;
        return a.first.first < b.first.first;
    });
    for (const auto& [k, c0] : ts) {
        Rational c = c0;
        if (first) {
            if (c < 0) { out << "-"; c = -c; }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool has_var = k.first > 0 || k.second > 0;
        if (!has_var || c != 1) {
            out << rat_str(c);
            if (has_var) out << "*";
        }
        if (k.first > 0) {
            out << "x";
            if (k.first > 1) out << "^" << k.first;
            if (k.second > 0) out << "*";
        }
        if (k.second > 0) {
            out << "y";
            if (k.second > 1) out << "^" << k.second;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Bivariate gcd through Q(x)[y], then content fixing. Sizes here are small,
// so Euclid over the fraction field is plenty.

namespace {

using PolyQ = Polynomial<Rational>;
using FracX = RationalFunction<Rational>;
using PolyYX = Polynomial<FracX>;

PolyYX to_y_poly(const PlanePoly& f) {
    int dy = 0;
    for (const auto& [k, c] : f.terms()) dy = std::max(dy, k.second);
    std::vector<FracX> coeffs(static_cast<std::size_t>(dy) + 1, FracX());
    std::vector<std::vector<Rational>> raw(static_cast<std::size_t>(dy) + 1);
    for (const auto& [k, c] : f.terms()) {
        auto& row = raw[static_cast<std::size_t>(k.second)];
        if (static_cast<int>(row.size()) <= k.first) row.resize(static_cast<std::size_t>(k.first) + 1, Rational(0));
        row[static_cast<std::size_t>(k.first)] = c;
    }
    for (std::size_t j = 0; j < raw.size(); ++j) coeffs[j] = FracX(PolyQ(std::move(raw[j])));
    return PolyYX(std::move(coeffs));
}

PlanePoly from_y_poly(const PolyYX& p) {
    PlanePoly out;
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
        const FracX& c = p.coeff(j);
        if (c.is_zero()) continue;
        if (c.den().degree() != 0) throw InternalError("from_y_poly: non-polynomial coefficient");
        Rational d = c.den().coeff(0);
        for (std::size_t i = 0; i < c.num().coeffs().size(); ++i)
            out.add_term(static_cast<int>(i), static_cast<int>(j), c.num().coeff(i) / d);
    }
    return out;
}

// Clears Q(x) denominators and the x-content: primitive in Q[x][y].
PlanePoly clear_to_primitive(const PolyYX& p) {
    PolyQ common = PolyQ::constant(1); // lcm of coefficient denominators
    for (const FracX& c : p.coeffs()) {
        if (c.is_zero()) continue;
        PolyQ g = PolyQ::gcd(common, c.den());
        common = common * PolyQ::exact_div(c.den(), g);
    }
    PlanePoly raw = from_y_poly(p * PolyYX::constant(FracX(common)));
    if (raw.terms().empty()) return raw;
    PolyQ content = raw.restrict_y_content();
    if (content.degree() > 0) {
        PolyYX py = to_y_poly(raw);
        std::vector<FracX> cs;
        for (const FracX& c : py.coeffs()) cs.push_back(c / FracX(content));
        raw = from_y_poly(PolyYX(std::move(cs)));
    }
    return raw;
}

} // namespace

PlanePoly plane_gcd(const PlanePoly& a, const PlanePoly& b) {
    if (a.terms().empty()) return b;
    if (b.terms().empty()) return a;
    PolyYX pa = to_y_poly(a), pb = to_y_poly(b);
    if (pa.degree() == 0 || pb.degree() == 0) {
        // One side is free of y: gcd is the gcd of x-contents.
        PolyQ ca = a.restrict_y_content();
        PolyQ cb = b.restrict_y_content();
        PolyQ g = PolyQ::gcd(ca, cb);
        PlanePoly out;
        for (std::size_t i = 0; i < g.coeffs().size(); ++i) out.add_term(static_cast<int>(i), 0, g.coeff(i));
        return out;
    }
    PolyYX g = PolyYX::gcd(pa, pb);
    PlanePoly prim = clear_to_primitive(g);
    // Multiply back the x-content gcd.
    PolyQ ca = a.restrict_y_content();
    PolyQ cb = b.restrict_y_content();
    PolyQ cg = PolyQ::gcd(ca, cb);
    PlanePoly content_part;
    for (std::size_t i = 0; i < cg.coeffs().size(); ++i) content_part.add_term(static_cast<int>(i), 0, cg.coeff(i));
    return prim * content_part;
}

Polynomial<Rational> PlanePoly::restrict_y_content() const {
    // gcd over y-slices of the coefficient polynomials in x.
    PolyQ content;
    std::map<int, std::vector<Rational>> rows;
    for (const auto& [k, c] : terms_) {
        auto& row = rows[k.second];
        if (static_cast<int>(row.size()) <= k.first) row.resize(static_cast<std::size_t>(k.first) + 1, Rational(0));
        row[static_cast<std::size_t>(k.first)] = c;
    }
    for (auto& [j, row] : rows) {
        PolyQ p(std::move(row));
        content = content.is_zero() ? p.monic() : PolyQ::gcd(content, p);
        if (content.degree() == 0) break;
    }
    return content.is_zero() ? PolyQ::constant(1) : content;
}

PlanePoly plane_exact_div(const PlanePoly& a, const PlanePoly& b) {
    if (b.terms().empty()) throw InternalError("plane_exact_div by zero");
    PolyYX pa = to_y_poly(a), pb = to_y_poly(b);
    PolyYX q, r;
    PolyYX::divmod(pa, pb, q, r);
    if (!r.is_zero()) throw InternalError("plane_exact_div: nonzero remainder");
    return from_y_poly(q);
}

PlanePoly squarefree_part(const PlanePoly& f) {
    if (f.terms().empty()) throw DataError("squarefree part of zero");
    PlanePoly g = plane_gcd(plane_gcd(f, f.dx()), f.dy());
    if (g.total_degree() <= 0) return f;
    return plane_exact_div(f, g);
}

// ---------------------------------------------------------------------------
// Parser for the input micro-grammar: rational coefficients, x, y, ^, *, +,
// -, parentheses. '^' binds tightest, then '*', then additive operators;
// unary minus is allowed.

namespace {

class PolyParser {
public:
    explicit PolyParser(const std::string& s) : s_(s) {}

    PlanePoly parse() {
        PlanePoly r = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return r;
    }

private:
    PlanePoly expr() {
        skip_ws();
        bool neg = false;
        while (peek() == '+' || peek() == '-') {
            if (get() == '-') neg = !neg;
            skip_ws();
        }
        PlanePoly acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                get();
                PlanePoly t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    PlanePoly term() {
        PlanePoly acc = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                get();
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    PlanePoly factor() {
        PlanePoly base = atom();
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            std::string digits;
            while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(get());
            if (digits.empty()) fail("expected a nonnegative integer exponent after '^'");
            unsigned long e = std::stoul(digits);
            if (e > 64) fail("exponent too large");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    PlanePoly atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            PlanePoly r = expr();
            skip_ws();
            if (peek() != ')') fail("expected ')'");
            get();
            return r;
        }
        if (c == 'x') {
            get();
            return PlanePoly::monomial(1, 0, 1);
        }
        if (c == 'y') {
            get();
            return PlanePoly::monomial(0, 1, 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(get());
            skip_ws();
            if (peek() == '/') {
                std::size_t save = pos_;
                get();
                skip_ws();
                std::string den;
                while (std::isdigit(static_cast<unsigned char>(peek()))) den.push_back(get());
                if (den.empty()) {
                    pos_ = save; // not a fraction (e.g. nothing follows)
                } else {
                    if (BigInt(den) == 0) fail("zero denominator in coefficient");
                    return PlanePoly::constant(Rational(BigInt(digits), BigInt(den)));
                }
            }
            return PlanePoly::constant(Rational(BigInt(digits)));
        }
        fail(std::string("unexpected character '") + (c ? std::string(1, c) : std::string("end")) + "'");
        return PlanePoly();
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw DataError("polynomial syntax error at position " + std::to_string(pos_) + ": " + why);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

PlanePoly parse_plane_poly(const std::string& text) { return PolyParser(text).parse(); }

} // namespace zetask
