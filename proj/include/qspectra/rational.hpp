#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace qspectra {

/// Arbitrary-precision rational, always stored in canonical (reduced) form.
using Rational = mpq_class;
using Integer = mpz_class;

class scalar_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_one(const Rational& x) { return x == 1; }

inline Rational rational(long num, long den = 1) {
    if (den == 0) throw scalar_error("zero denominator in rational literal");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (is_zero(base)) {
        if (e < 0) throw scalar_error("0 raised to a negative power");
        return Rational(0);
    }
    Rational b = base;
    long n = e;
    if (n < 0) {
        b = Rational(1) / b;
        n = -n;
    }
    Rational acc(1);
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

inline std::string rat_str(const Rational& x) { return x.get_str(); }

/// Exact square root, if the value is a perfect square of a rational.
inline std::optional<Rational> rat_sqrt(const Rational& x) {
    if (sgn(x) < 0) return std::nullopt;
    Integer num = x.get_num(), den = x.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
    Integer rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    Rational r(rn, rd);
    r.canonicalize();
    return r;
}

}  // namespace qspectra
