#pragma once

#include <optional>
#include <utility>

#include "qspectra/laurent.hpp"

namespace qspectra {

class pole_error : public scalar_error {
public:
    using scalar_error::scalar_error;
};

/**
 * Element of Q(q), the field of rational functions in q, kept in a canonical
 * reduced form: numerator and denominator share no polynomial factor, the
 * denominator is an ordinary polynomial with nonzero constant term and
 * leading coefficient 1 (any q-power shift lives in the numerator). Equal
 * values therefore have identical stored representations.
 */
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(long value) : num_(LaurentPoly(value)) {}
    RatFunc(const Rational& value) : num_(LaurentPoly(value)) {}
    RatFunc(LaurentPoly poly) : num_(std::move(poly)) {}
    RatFunc(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {
        reduce_();
    }

    static RatFunc q() { return RatFunc(LaurentPoly::q()); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        if (a.den_ == b.den_) return RatFunc(a.num_ - b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a) {
        RatFunc r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        if (a.den_.is_one() && b.den_.is_one()) {
            RatFunc r;
            r.num_ = a.num_ * b.num_;
            return r;
        }
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw scalar_error("division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    RatFunc inverse() const {
        if (is_zero()) throw scalar_error("inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    /// Exact value at q = q0; throws pole_error when the reduced denominator vanishes.
    Rational eval(const Rational& q0) const {
        Rational d = den_.eval(q0);
        if (qspectra::is_zero(d))
            throw pole_error("pole at q = " + q0.get_str() + ": denominator (" +
                             den_.to_string() + ") vanishes");
        return num_.eval(q0) / d;
    }

    std::optional<RatFunc> sqrt() const {
        auto n = num_.sqrt();
        if (!n) return std::nullopt;
        auto d = den_.sqrt();
        if (!d) return std::nullopt;
        return RatFunc(*n, *d);
    }

private:
    void reduce_();

    LaurentPoly num_;
    LaurentPoly den_ = LaurentPoly(1);
};

inline void RatFunc::reduce_() {
    if (den_.is_zero()) throw scalar_error("zero denominator in rational function");
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    const long a = num_.low(), b = den_.low();
    LaurentPoly n = num_.shifted(-a), d = den_.shifted(-b);
    LaurentPoly g = LaurentPoly::gcd(n, d);
    if (!g.is_one()) {
        n = LaurentPoly::divmod(n, g).first;
        d = LaurentPoly::divmod(d, g).first;
    }
    const Rational lead = d.coeff(d.degree());
    if (!qspectra::is_one(lead)) {
        Rational inv = Rational(1) / lead;
        n = n.scaled(inv);
        d = d.scaled(inv);
    }
    num_ = n.shifted(a - b);
    den_ = d;
}

inline bool is_zero(const RatFunc& x) { return x.is_zero(); }
inline bool is_one(const RatFunc& x) { return x.is_one(); }

}  // namespace qspectra
