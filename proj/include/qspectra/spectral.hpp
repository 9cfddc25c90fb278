#pragma once

#include <string>
#include <vector>

#include "qspectra/check.hpp"
#include "qspectra/partitions.hpp"
#include "qspectra/series.hpp"

namespace qspectra {

class spectral_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Which family of finite-dimensional modules a spectrum belongs to.
enum class Side { V, Dual };

inline std::string side_str(Side s) { return s == Side::V ? "V" : "V*"; }

/// Spectral values of the generating matrix in the module labeled by lambda
/// (zero-padded to m components):
///   side V:  mu_i = q^{-2(lambda_i - i + m)},   side V*: mu_i = q^{2(lambda_i - i + 1)}.
template <class S>
std::vector<S> spectrum(const Partition& lam, int m, Side side, const S& q) {
    if (lam.height() > m)
        throw spectral_error("partition height exceeds bi-rank m = " + std::to_string(m));
    std::vector<S> mu;
    mu.reserve(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        const long li = lam.part(i) - i;
        mu.push_back(side == Side::V ? spow(q, -2 * (li + m)) : spow(q, 2 * (li + 1)));
    }
    return mu;
}

enum class MultKind { d, d_tilde };
enum class PowerKind { p, t };

/// Spectral multiplicities:
///   d_i       = q^{-1} prod_{j != i} (mu_i - q^{-2} mu_j)/(mu_i - mu_j),
///   tilde d_i = q      prod_{j != i} (mu_i - q^{2} mu_j)/(mu_i - mu_j).
template <class S>
std::vector<S> multiplicities(const std::vector<S>& mu, MultKind kind, const S& q) {
    const std::size_t m = mu.size();
    const S shift = kind == MultKind::d ? spow(q, -2) : spow(q, 2);
    const S front = kind == MultKind::d ? S(1) / q : q;
    std::vector<S> out;
    out.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        S acc = front;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            const S den = mu[i] - mu[j];
            if (qspectra::is_zero(den))
                throw spectral_error("coincident spectral values mu_" + std::to_string(i + 1) +
                                     " = mu_" + std::to_string(j + 1));
            acc = acc * (mu[i] - shift * mu[j]) / den;
        }
        out.push_back(acc);
    }
    return out;
}

/// Power sums in the spectral parameterization:
///   p_n = sum mu_i^n d_i,   t_n = sum (q^{-2} mu_i)^n tilde d_i.
template <class S>
S spectral_power_sum(const std::vector<S>& mu, long n, PowerKind kind, const S& q) {
    const auto d = multiplicities(mu, kind == PowerKind::p ? MultKind::d : MultKind::d_tilde, q);
    S acc(0);
    const S qm2 = spow(q, -2);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        S base = mu[i];
        if (kind == PowerKind::t) base = qm2 * mu[i];
        acc += spow(base, n) * d[i];
    }
    return acc;
}

/// Elementary symmetric polynomials e_0..e_m of the given values.
template <class S>
std::vector<S> elementary_symmetric(const std::vector<S>& mu) {
    std::vector<S> e(mu.size() + 1, S(0));
    e[0] = S(1);
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (std::size_t k = std::min(i + 1, mu.size()); k >= 1; --k) e[k] += mu[i] * e[k - 1];
    return e;
}

// ---------------------------------------------------------------------------
// Generating functions
// ---------------------------------------------------------------------------

/// P(x) = sum_{n>=1} p_n x^n from the spectral parameterization.
template <class S>
TruncSeries<S> p_series(const std::vector<S>& mu, const S& q, int order) {
    TruncSeries<S> out(order);
    const auto d = multiplicities(mu, MultKind::d, q);
    for (int n = 1; n <= order; ++n) {
        S acc(0);
        for (std::size_t i = 0; i < mu.size(); ++i) acc += spow(mu[i], n) * d[i];
        out[n] = acc;
    }
    return out;
}

/// T(x) = sum_{n>=1} t_n x^n from the spectral parameterization.
template <class S>
TruncSeries<S> t_series(const std::vector<S>& mu, const S& q, int order) {
    TruncSeries<S> out(order);
    const auto d = multiplicities(mu, MultKind::d_tilde, q);
    const S qm2 = spow(q, -2);
    for (int n = 1; n <= order; ++n) {
        S acc(0);
        for (std::size_t i = 0; i < mu.size(); ++i) {
            const S base = S(qm2 * mu[i]);
            acc += spow(base, n) * d[i];
        }
        out[n] = acc;
    }
    return out;
}

/// A(x) = 1 + sum a_k x^k with q^k a_k = e_k(mu).
template <class S>
TruncSeries<S> a_series(const std::vector<S>& mu, const S& q, int order) {
    TruncSeries<S> out(order);
    const auto e = elementary_symmetric(mu);
    for (std::size_t k = 0; k < e.size() && k <= static_cast<std::size_t>(order); ++k)
        out[static_cast<int>(k)] = e[k] * spow(q, -static_cast<long>(k));
    return out;
}

/// prod_i (1 + a mu_i x) as a truncated series.
template <class S>
TruncSeries<S> linear_product(const std::vector<S>& mu, const S& a, int order) {
    TruncSeries<S> out = TruncSeries<S>::constant(order, S(1));
    for (const S& m : mu) {
        TruncSeries<S> f = TruncSeries<S>::constant(order, S(1));
        if (order >= 1) f[1] = a * m;
        out = out * f;
    }
    return out;
}

namespace detail {
inline void push_check(std::vector<CheckResult>& out, const std::string& name,
                       const std::string& params, bool pass, const std::string& witness = "") {
    out.push_back({name, params, pass, false, pass ? "" : witness});
}
}  // namespace detail

/**
 * Coefficientwise checks of the generating-function identities:
 *   1 + w P(x)  = prod (1 - q^{-2} mu_i x)/(1 - mu_i x)
 *   1 - w T(x)  = prod (1 - mu_i x)/(1 - q^{-2} mu_i x)
 *   w A(qx) P(-x) = A(x/q) - A(qx)
 *   w A(x/q) T(-x) = A(x/q) - A(qx)
 *   P = T + w P T
 *   A(qx) = prod (1 + mu_i x)
 * and the Hall-Littlewood specialization: the degree-n coefficient of the
 * first product equals w p_n for n >= 1.
 */
template <class S>
std::vector<CheckResult> series_identities(const std::vector<S>& mu, const S& q, int order,
                                           const std::string& params = "") {
    std::vector<CheckResult> out;
    const S w = q - S(1) / q;
    const TruncSeries<S> one = TruncSeries<S>::constant(order, S(1));
    const TruncSeries<S> P = p_series(mu, q, order);
    const TruncSeries<S> T = t_series(mu, q, order);
    const TruncSeries<S> A = a_series(mu, q, order);

    const S neg_qm2 = S(0) - spow(q, -2);
    const TruncSeries<S> top = linear_product(mu, neg_qm2, order);      // prod(1 - q^-2 mu x)
    const TruncSeries<S> bottom = linear_product(mu, S(-1), order);     // prod(1 - mu x)
    const TruncSeries<S> ratio = top * bottom.inverse();

    detail::push_check(out, "series_P_product", params, one + P.scaled(w) == ratio,
                       "1 + w P(x) != prod(1-q^-2 mu x)/(1-mu x)");
    detail::push_check(out, "series_T_product", params, one - T.scaled(w) == bottom * top.inverse(),
                       "1 - w T(x) != prod(1-mu x)/(1-q^-2 mu x)");

    const TruncSeries<S> Aq = A.subst_scaled_var(q);
    const TruncSeries<S> Aiq = A.subst_scaled_var(S(1) / q);
    const TruncSeries<S> Pneg = P.subst_scaled_var(S(-1));
    const TruncSeries<S> Tneg = T.subst_scaled_var(S(-1));
    detail::push_check(out, "series_AP", params, (Aq * Pneg).scaled(w) == Aiq - Aq,
                       "w A(qx) P(-x) != A(x/q) - A(qx)");
    detail::push_check(out, "series_AT", params, (Aiq * Tneg).scaled(w) == Aiq - Aq,
                       "w A(x/q) T(-x) != A(x/q) - A(qx)");
    detail::push_check(out, "series_PT", params, P == T + (P * T).scaled(w),
                       "P != T + w P T");
    detail::push_check(out, "series_A_product", params, Aq == linear_product(mu, S(1), order),
                       "A(qx) != prod(1 + mu x)");

    bool hl = true;
    for (int n = 1; n <= order; ++n)
        if (ratio[n] != w * P[n]) hl = false;
    detail::push_check(out, "series_hall_littlewood", params, hl,
                       "coefficient of x^n in the P-product != w p_n");
    return out;
}

/**
 * Lemma-style single-eigenvalue shift identities with S(z) = z/(1-z)^2:
 *   P(x; mu with mu_k -> q^{-2} mu_k) + w S(q^{-2} x mu_k)
 *        = P(x; mu) (1 - w^2 S(q^{-2} x mu_k)),
 *   T(x; mu with mu_k -> q^{2} mu_k) - w S(x mu_k)
 *        = T(x; mu) (1 - w^2 S(x mu_k)).
 * Throws spectral_error when the shifted spectrum collides.
 */
template <class S>
std::vector<CheckResult> lemma42_check(const std::vector<S>& mu, const S& q, int k0, int order,
                                       const std::string& params = "") {
    if (k0 < 1 || static_cast<std::size_t>(k0) > mu.size())
        throw spectral_error("eigenvalue index out of range");
    std::vector<CheckResult> out;
    const S w = q - S(1) / q;
    const TruncSeries<S> one = TruncSeries<S>::constant(order, S(1));
    const std::size_t i0 = static_cast<std::size_t>(k0) - 1;

    {
        std::vector<S> shifted = mu;
        const S z = S(spow(q, -2) * mu[i0]);
        shifted[i0] = z;
        const TruncSeries<S> Sp = s_kernel(order, z);
        const TruncSeries<S> lhs = p_series(shifted, q, order) + Sp.scaled(w);
        const TruncSeries<S> rhs = p_series(mu, q, order) * (one - Sp.scaled(S(w * w)));
        detail::push_check(out, "lemma42_P", params, lhs == rhs,
                           "P-shift identity fails");
    }
    {
        std::vector<S> shifted = mu;
        shifted[i0] = S(spow(q, 2) * mu[i0]);
        const TruncSeries<S> St = s_kernel(order, mu[i0]);
        const TruncSeries<S> lhs = t_series(shifted, q, order) - St.scaled(w);
        const TruncSeries<S> rhs = t_series(mu, q, order) * (one - St.scaled(S(w * w)));
        detail::push_check(out, "lemma42_T", params, lhs == rhs,
                           "T-shift identity fails");
    }
    return out;
}

/// True when replacing mu_{k0} by q^{+-2} mu_{k0} (T / P variants) collides
/// with another eigenvalue, which makes lemma42_check throw.
template <class S>
bool lemma42_collides(const std::vector<S>& mu, const S& q, int k0, PowerKind kind) {
    const std::size_t i0 = static_cast<std::size_t>(k0) - 1;
    const S factor = kind == PowerKind::p ? spow(q, -2) : spow(q, 2);
    const S shifted = S(factor * mu[i0]);
    for (std::size_t j = 0; j < mu.size(); ++j)
        if (j != i0 && mu[j] == shifted) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Closed character formulas
// ---------------------------------------------------------------------------

/// Closed-form characters of the power sums, with l_i = lambda_i - i:
///   side V:  chi(p_n)  = q^{-m(2n+1)} sum_i q^{-2n l_i} prod_{j!=i} (l_i-l_j-1)_q/(l_i-l_j)_q
///   side V*: chi*(p_n) = q^{2n-m}     sum_i q^{ 2n l_i} prod_{j!=i} (l_i-l_j+1)_q/(l_i-l_j)_q
template <class S>
S closed_character_p(const Partition& lam, int m, long n, Side side, const S& q) {
    if (lam.height() > m)
        throw spectral_error("partition height exceeds bi-rank m = " + std::to_string(m));
    std::vector<long> ell;
    for (int i = 1; i <= m; ++i) ell.push_back(lam.part(i) - i);
    S acc(0);
    for (int i = 0; i < m; ++i) {
        S term = side == Side::V ? spow(q, -2 * n * ell[static_cast<std::size_t>(i)])
                                 : spow(q, 2 * n * ell[static_cast<std::size_t>(i)]);
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            const long diff = ell[static_cast<std::size_t>(i)] - ell[static_cast<std::size_t>(j)];
            const long num = side == Side::V ? diff - 1 : diff + 1;
            term = term * q_int(q, num) / q_int(q, diff);
        }
        acc += term;
    }
    const S front = side == Side::V ? spow(q, -static_cast<long>(m) * (2 * n + 1))
                                    : spow(q, 2 * n - static_cast<long>(m));
    return front * acc;
}

// ---------------------------------------------------------------------------
// Classical limit
// ---------------------------------------------------------------------------

/// q -> 1 limit data for the shifted generating matrix: exact q-characters
/// of the shifted eigenvalues, their limits lambda_i - i + N, the limiting
/// multiplicities, and the classical power sums sum_i mu_i^n d_i.
struct ClassicalLimit {
    std::vector<RatFunc> mu_hat_q;  // chi(mu_hat_i) as elements of Q(q)
    std::vector<Rational> mu_hat;   // q -> 1 limits
    std::vector<Rational> d_hat;    // limiting multiplicities
    std::vector<Rational> power_sums;  // Tr L-hat^n for n = 1..n_max
};

inline ClassicalLimit classical_limit(const Partition& lam, int N, int n_max = 3) {
    if (lam.height() > N) throw spectral_error("partition height exceeds N");
    ClassicalLimit out;
    const RatFunc q = RatFunc::q();
    const RatFunc w = q - RatFunc(1) / q;
    // chi(mu_hat_i) = (1 - q^{-2(lambda_i + N - i)}) / (q - q^{-1}) = q^{-a} a_q
    for (int i = 1; i <= N; ++i) {
        const long a = lam.part(i) + N - i;
        out.mu_hat_q.push_back(spow(q, -a) * RatFunc(q_number(a)));
    }
    for (const RatFunc& f : out.mu_hat_q) out.mu_hat.push_back(f.eval(Rational(1)));
    // d_i(mu_hat) = q^{-1} prod_{j != i} (mu_i - mu_j - q^{-1})/(mu_i - mu_j), then q -> 1
    for (int i = 0; i < N; ++i) {
        RatFunc acc = RatFunc(1) / q;
        for (int j = 0; j < N; ++j) {
            if (j == i) continue;
            const RatFunc den = out.mu_hat_q[static_cast<std::size_t>(i)] -
                                out.mu_hat_q[static_cast<std::size_t>(j)];
            if (den.is_zero()) throw spectral_error("coincident shifted eigenvalues");
            acc = acc * (den - RatFunc(1) / q) / den;
        }
        out.d_hat.push_back(acc.eval(Rational(1)));
    }
    for (long n = 1; n <= n_max; ++n) {
        Rational s(0);
        for (int i = 0; i < N; ++i)
            s += rat_pow(out.mu_hat[static_cast<std::size_t>(i)], n) *
                 out.d_hat[static_cast<std::size_t>(i)];
        out.power_sums.push_back(s);
    }
    return out;
}

}  // namespace qspectra
