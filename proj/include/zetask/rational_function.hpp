#pragma once

#include "zetask/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace zetask {

// Univariate rational function over a field K, kept in canonical form:
// denominator monic and coprime to the numerator (the scalar freed by making
// the denominator monic is folded into the numerator). Equality of canonical
// forms decides equality of functions.
template <class K>
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial<K>::constant(K(1))) {}
    explicit RationalFunction(int v)
        : num_(Polynomial<K>::constant(K(v))), den_(Polynomial<K>::constant(K(1))) {}
    explicit RationalFunction(Polynomial<K> num)
        : num_(std::move(num)), den_(Polynomial<K>::constant(K(1))) {}
    RationalFunction(Polynomial<K> num, Polynomial<K> den)
        : num_(std::move(num)), den_(std::move(den)) {
        normalize();
    }
    static RationalFunction constant(K v) { return RationalFunction(Polynomial<K>::constant(std::move(v))); }

    const Polynomial<K>& num() const { return num_; }
    const Polynomial<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RationalFunction operator+(const RationalFunction& o) const {
        return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RationalFunction operator-(const RationalFunction& o) const { return *this + (-o); }
    RationalFunction operator*(const RationalFunction& o) const {
        return RationalFunction(num_ * o.num_, den_ * o.den_);
    }
    RationalFunction operator/(const RationalFunction& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero polynomial");
        return RationalFunction(num_ * o.den_, den_ * o.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    K eval(const K& x) const {
        K d = den_.eval(x);
        if (d == K(0)) throw std::domain_error("evaluation at a pole");
        return num_.eval(x) / d;
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("division by zero polynomial");
        if (num_.is_zero()) {
            den_ = Polynomial<K>::constant(K(1));
            return;
        }
        Polynomial<K> g = Polynomial<K>::gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = Polynomial<K>::exact_div(num_, g);
            den_ = Polynomial<K>::exact_div(den_, g);
        }
        K lead = den_.leading();
        if (!(lead == K(1))) {
            K inv = K(1) / lead;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    Polynomial<K> num_;
    Polynomial<K> den_;
};

// normalize(rf): the canonical representative. The constructor already
// canonicalizes, so this is the identity on well-formed values; it exists to
// make idempotence testable as an operation.
template <class K>
RationalFunction<K> normalize(const RationalFunction<K>& rf) {
    return RationalFunction<K>(rf.num(), rf.den());
}

// Order of the pole of rf at x0: multiplicity of x0 in the denominator minus
// multiplicity in the numerator, clamped below at zero ("not a pole").
// Computed by repeated synthetic division.
template <class K>
int pole_order_at(const RationalFunction<K>& rf, const K& x0) {
    if (rf.is_zero()) return 0;
    int den_mult = root_multiplicity(rf.den(), x0);
    int num_mult = root_multiplicity(rf.num(), x0);
    return std::max(0, den_mult - num_mult);
}

} // namespace zetask
