#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "qspectra/ratfunc.hpp"

namespace qspectra {

// ---------------------------------------------------------------------------
// Generic field interface shared by the two scalar backends:
//   RatFunc  — symbolic elements of Q(q)
//   Rational — values sampled at a fixed generic q = q0
// ---------------------------------------------------------------------------

template <class S>
S spow(const S& base, long e) {
    if (e == 0) return S(1);
    S b = base;
    long n = e;
    if (n < 0) {
        b = S(1) / b;
        n = -n;
    }
    S acc(1);
    while (n > 0) {
        if (n & 1) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

template <>
inline Rational spow<Rational>(const Rational& base, long e) {
    return rat_pow(base, e);
}

/// q-number n_q = (q^n - q^-n)/(q - q^-1) evaluated in the scalar field.
template <class S>
S q_int(const S& q, long n) {
    if (n == 0) return S(0);
    const long a = n > 0 ? n : -n;
    S acc(0);
    for (long i = 0; i < a; ++i) acc += spow(q, a - 1 - 2 * i);
    if (n > 0) return acc;
    S neg = S(0) - acc;
    return neg;
}

/// q-number as an explicit Laurent polynomial:
/// sign(n) * (q^{|n|-1} + q^{|n|-3} + ... + q^{1-|n|}); q_number(0) = 0.
inline LaurentPoly q_number(long n) {
    LaurentPoly p;
    if (n == 0) return p;
    const long a = n > 0 ? n : -n;
    const Rational s(n > 0 ? 1 : -1);
    for (long i = 0; i < a; ++i) p += LaurentPoly::monomial(a - 1 - 2 * i, s);
    return p;
}

/// Canonical reduced quotient of two Laurent polynomials.
inline RatFunc ratfunc_reduce(const LaurentPoly& num, const LaurentPoly& den) {
    return RatFunc(num, den);
}

/// Exact rational value of f at q = q0.
inline Rational eval_at(const RatFunc& f, const Rational& q0) { return f.eval(q0); }

inline std::string scalar_str(const Rational& x) { return rat_str(x); }
inline std::string scalar_str(const RatFunc& f) {
    if (f.is_polynomial()) return f.num().to_string();
    return "(" + f.num().to_string() + ")/(" + f.den().to_string() + ")";
}

inline std::optional<RatFunc> scalar_sqrt(const RatFunc& x) { return x.sqrt(); }
inline std::optional<Rational> scalar_sqrt(const Rational& x) { return rat_sqrt(x); }

// ---------------------------------------------------------------------------
// Scalar grammar parser. Accepted forms: integers, `q`, `^` with (possibly
// negative) integer exponents, `+ - * /`, parentheses. Round-trips the
// renderer bit-exactly.
// ---------------------------------------------------------------------------

class parse_error : public scalar_error {
public:
    using scalar_error::scalar_error;
};

namespace detail {

class ScalarParser {
public:
    explicit ScalarParser(std::string_view src) : src_(src) {}

    RatFunc parse() {
        RatFunc v = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("trailing input");
        return v;
    }

private:
    RatFunc expr() {
        RatFunc v = term();
        for (;;) {
            skip_ws();
            if (try_eat('+'))
                v += term();
            else if (try_eat('-'))
                v -= term();
            else
                return v;
        }
    }

    RatFunc term() {
        RatFunc v = unary();
        for (;;) {
            skip_ws();
            if (try_eat('*'))
                v *= unary();
            else if (try_eat('/'))
                v /= unary();
            else
                return v;
        }
    }

    RatFunc unary() {
        skip_ws();
        if (try_eat('-')) return -unary();
        return power();
    }

    RatFunc power() {
        RatFunc base = atom();
        skip_ws();
        if (try_eat('^')) {
            skip_ws();
            bool neg = try_eat('-');
            long e = integer_long();
            return spow(base, neg ? -e : e);
        }
        return base;
    }

    RatFunc atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of input");
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc v = expr();
            skip_ws();
            if (!try_eat(')')) fail("expected ')'");
            return v;
        }
        if (c == 'q') {
            ++pos_;
            return RatFunc::q();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_])))
                digits.push_back(src_[pos_++]);
            Rational r{Integer(digits)};
            return RatFunc(r);
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    long integer_long() {
        skip_ws();
        if (pos_ >= src_.size() || !std::isdigit(static_cast<unsigned char>(src_[pos_])))
            fail("expected integer exponent");
        long v = 0;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
            v = v * 10 + (src_[pos_++] - '0');
            if (v > 1000000) fail("exponent out of range");
        }
        return v;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool try_eat(char c) {
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw parse_error("scalar parse error at offset " + std::to_string(pos_) + ": " + why);
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline RatFunc parse_scalar(std::string_view text) { return detail::ScalarParser(text).parse(); }

// ---------------------------------------------------------------------------
// Backend descriptor
// ---------------------------------------------------------------------------

/**
 * Arithmetic backend selector. Symbolic mode computes in Q(q); SampledQ mode
 * substitutes a fixed rational q0, which must pass the generic-q guard
 * (q0 not in {0, 1, -1} and q0^j != 1 for all j up to the guard bound).
 */
struct ScalarBackend {
    enum class Mode { Symbolic, SampledQ };

    Mode mode = Mode::Symbolic;
    Rational q0 = Rational(0);
    int guard_bound = 64;

    static ScalarBackend symbolic() { return {}; }
    static ScalarBackend sampled(const Rational& q0, int guard_bound = 64) {
        ScalarBackend b{Mode::SampledQ, q0, guard_bound};
        b.check_generic();
        return b;
    }

    void check_generic() const {
        if (mode != Mode::SampledQ) return;
        if (qspectra::is_zero(q0)) throw scalar_error("sampled q = 0 is not generic");
        Rational p(1);
        for (int j = 1; j <= guard_bound; ++j) {
            p *= q0;
            if (p == 1) throw scalar_error("sampled q = " + q0.get_str() + " fails the generic-q guard (q^" +
                                           std::to_string(j) + " = 1)");
        }
    }
};

}  // namespace qspectra
