#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace zetask {

// Dense univariate polynomial over a field K. K must be constructible from
// int, support + - * / and ==. Trailing zero coefficients are trimmed; the
// zero polynomial has an empty coefficient vector and degree -1.
template <class K>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(K v) {
        Polynomial p;
        if (!(v == K(0))) p.c_.push_back(std::move(v));
        return p;
    }
    static Polynomial monomial(std::size_t deg, K v) {
        Polynomial p;
        if (!(v == K(0))) {
            p.c_.assign(deg + 1, K(0));
            p.c_[deg] = std::move(v);
        }
        return p;
    }
    static Polynomial variable() { return monomial(1, K(1)); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }
    const std::vector<K>& coeffs() const { return c_; }
    const K& leading() const {
        if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto& v : r.c_) v = K(0) - v;
        return r;
    }
    Polynomial operator+(const Polynomial& o) const {
        std::vector<K> r(std::max(c_.size(), o.c_.size()), K(0));
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
        return Polynomial(std::move(r));
    }
    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }
    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        std::vector<K> r(c_.size() + o.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
        return Polynomial(std::move(r));
    }
    Polynomial scaled(const K& v) const {
        Polynomial r = *this;
        for (auto& x : r.c_) x = x * v;
        r.trim();
        return r;
    }
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    K eval(const K& x) const {
        K acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<K> r(c_.size() - 1, K(0));
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * K(static_cast<int>(i));
        return Polynomial(std::move(r));
    }

    Polynomial pow(unsigned k) const {
        Polynomial r = constant(K(1));
        Polynomial base = *this;
        while (k) {
            if (k & 1) r = r * base;
            base = base * base;
            k >>= 1;
        }
        return r;
    }

    // Euclidean division: a = q*b + r with deg r < deg b. b must be nonzero.
    static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        q = Polynomial();
        r = a;
        K inv_lead = K(1) / b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            K factor = r.leading() * inv_lead;
            Polynomial t = Polynomial::monomial(shift, factor);
            q += t;
            r = r - t * b;
            // Guard against a non-decreasing degree (would mean K is not a field).
            if (!r.is_zero() && r.degree() >= static_cast<int>(shift) + b.degree())
                throw std::logic_error("polynomial division failed to reduce degree");
        }
    }

    Polynomial operator/(const Polynomial& o) const {
        Polynomial q, r;
        divmod(*this, o, q, r);
        return q;
    }
    Polynomial operator%(const Polynomial& o) const {
        Polynomial q, r;
        divmod(*this, o, q, r);
        return r;
    }

    // Exact division; throws if the remainder is nonzero.
    static Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
        Polynomial q, r;
        divmod(a, b, q, r);
        if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
        return q;
    }

    // Monic gcd via the Euclidean algorithm (remainders are re-scaled to
    // monic at each step to keep nested coefficient fields small).
    static Polynomial gcd(Polynomial a, Polynomial b) {
        while (!b.is_zero()) {
            b = b.scaled(K(1) / b.leading());
            Polynomial r = a % b;
            a = std::move(b);
            b = std::move(r);
        }
        if (!a.is_zero()) a = a.scaled(K(1) / a.leading());
        return a;
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(K(1) / leading());
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
    }

    std::vector<K> c_;
};

// Synthetic division by (X - x0); remainder is p(x0) and is discarded, so the
// caller is responsible for having checked it vanishes when exactness matters.
template <class K>
Polynomial<K> deflate(const Polynomial<K>& p, const K& x0) {
    if (p.is_zero() || p.degree() == 0) return Polynomial<K>();
    std::vector<K> q(static_cast<std::size_t>(p.degree()), K(0));
    K carry = p.coeff(static_cast<std::size_t>(p.degree()));
    for (int i = p.degree() - 1; i >= 0; --i) {
        q[static_cast<std::size_t>(i)] = carry;
        carry = p.coeff(static_cast<std::size_t>(i)) + carry * x0;
    }
    return Polynomial<K>(std::move(q));
}

// Multiplicity of x0 as a root of p; p must be nonzero.
template <class K>
int root_multiplicity(Polynomial<K> p, const K& x0) {
    if (p.is_zero()) throw std::domain_error("root multiplicity in zero polynomial");
    int m = 0;
    while (p.eval(x0) == K(0)) {
        p = deflate(p, x0);
        ++m;
    }
    return m;
}

} // namespace zetask
