#pragma once

#include <map>
#include <optional>
#include <utility>

#include "qspectra/rational.hpp"

namespace qspectra {

/**
 * Laurent polynomial in the deformation parameter q with rational
 * coefficients. Stored as a sparse exponent -> coefficient map; no zero
 * coefficient is ever kept, so structural equality is value equality.
 */
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(long value) {
        if (value != 0) coeff_[0] = Rational(value);
    }
    explicit LaurentPoly(const Rational& value) {
        if (!qspectra::is_zero(value)) coeff_[0] = value;
    }

    static LaurentPoly monomial(long exp, const Rational& coef) {
        LaurentPoly p;
        if (!qspectra::is_zero(coef)) p.coeff_[exp] = coef;
        return p;
    }
    /// The variable q itself.
    static LaurentPoly q() { return monomial(1, Rational(1)); }

    bool is_zero() const { return coeff_.empty(); }
    bool is_one() const {
        return coeff_.size() == 1 && coeff_.begin()->first == 0 && coeff_.begin()->second == 1;
    }

    /// Highest exponent; requires a nonzero polynomial.
    long degree() const {
        if (is_zero()) throw scalar_error("degree of zero polynomial");
        return coeff_.rbegin()->first;
    }
    /// Lowest exponent; requires a nonzero polynomial.
    long low() const {
        if (is_zero()) throw scalar_error("low exponent of zero polynomial");
        return coeff_.begin()->first;
    }

    Rational coeff(long exp) const {
        auto it = coeff_.find(exp);
        return it == coeff_.end() ? Rational(0) : it->second;
    }
    const std::map<long, Rational>& terms() const { return coeff_; }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeff_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.coeff_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        for (const auto& [e, c] : a.coeff_) r.coeff_[e] = -c;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.coeff_)
            for (const auto& [eb, cb] : b.coeff_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Rational& c) const {
        LaurentPoly r;
        if (qspectra::is_zero(c)) return r;
        for (const auto& [e, v] : coeff_) r.coeff_[e] = v * c;
        return r;
    }
    /// Multiply by q^d.
    LaurentPoly shifted(long d) const {
        LaurentPoly r;
        for (const auto& [e, v] : coeff_) r.coeff_[e + d] = v;
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return coeff_ == o.coeff_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Exact evaluation at q = q0 (q0 must be nonzero if negative exponents occur).
    Rational eval(const Rational& q0) const {
        Rational acc(0);
        for (const auto& [e, c] : coeff_) {
            if (e < 0 && qspectra::is_zero(q0))
                throw scalar_error("evaluation at q = 0 with negative exponent");
            acc += c * rat_pow(q0, e);
        }
        return acc;
    }

    /// Euclidean division over Q[q]; both operands must have low() >= 0.
    static std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b) {
        if (b.is_zero()) throw scalar_error("polynomial division by zero");
        if ((!a.is_zero() && a.low() < 0) || b.low() < 0)
            throw scalar_error("divmod requires ordinary polynomials");
        LaurentPoly quo, rem = a;
        const long db = b.degree();
        const Rational lb = b.coeff(db);
        while (!rem.is_zero() && rem.degree() >= db) {
            long d = rem.degree() - db;
            Rational f = rem.coeff(rem.degree()) / lb;
            LaurentPoly t = monomial(d, f);
            quo += t;
            rem -= t * b;
        }
        return {quo, rem};
    }

    /// Monic gcd over Q[q]; operands must have low() >= 0.
    static LaurentPoly gcd(LaurentPoly a, LaurentPoly b) {
        while (!b.is_zero()) {
            auto [quo, rem] = divmod(a, b);
            (void)quo;
            a = std::move(b);
            b = std::move(rem);
        }
        if (a.is_zero()) return a;
        return a.scaled(Rational(1) / a.coeff(a.degree()));
    }

    /// Canonical rendering in the scalar grammar: terms by descending
    /// exponent, e.g. "q^2 - 2 + 3/2*q^-1".
    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (auto it = coeff_.rbegin(); it != coeff_.rend(); ++it) {
            const long e = it->first;
            const Rational& c = it->second;
            const bool neg = sgn(c) < 0;
            Rational mag = neg ? Rational(-c) : c;
            std::string term;
            if (e == 0) {
                term = mag.get_str();
            } else {
                std::string qp = (e == 1) ? "q" : "q^" + std::to_string(e);
                term = (mag == 1) ? qp : mag.get_str() + "*" + qp;
            }
            if (first) {
                out = (neg ? "-" : "") + term;
                first = false;
            } else {
                out += (neg ? " - " : " + ") + term;
            }
        }
        return out;
    }

    /// Exact square root, if one exists as a Laurent polynomial.
    std::optional<LaurentPoly> sqrt() const {
        if (is_zero()) return LaurentPoly();
        if (low() % 2 != 0 || (degree() - low()) % 2 != 0) return std::nullopt;
        const long shift = low() / 2;
        LaurentPoly g = shifted(-2 * shift);
        long dg = g.degree();
        auto c0 = rat_sqrt(g.coeff(0));
        if (!c0) return std::nullopt;
        LaurentPoly h = monomial(0, *c0);
        for (long k = 1; k <= dg / 2; ++k) {
            Rational acc = g.coeff(k);
            for (long i = 1; i < k; ++i) acc -= h.coeff(i) * h.coeff(k - i);
            h += monomial(k, acc / (2 * (*c0)));
        }
        if (h * h != g) return std::nullopt;
        return h.shifted(shift);
    }

private:
    void add_term(long e, const Rational& c) {
        auto it = coeff_.find(e);
        if (it == coeff_.end()) {
            if (!qspectra::is_zero(c)) coeff_.emplace(e, c);
        } else {
            it->second += c;
            if (qspectra::is_zero(it->second)) coeff_.erase(it);
        }
    }

    std::map<long, Rational> coeff_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

}  // namespace qspectra
