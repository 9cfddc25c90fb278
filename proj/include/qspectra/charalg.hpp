#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qspectra/heckerep.hpp"
#include "qspectra/spectral.hpp"

namespace qspectra {

class charalg_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class not_scalar_error : public charalg_error {
public:
    using charalg_error::charalg_error;
};

/// N x N matrix whose entries are operators on V^{(x) k}.
template <class S>
struct OpMatrix {
    long N = 0;
    int legs = 0;
    long dim = 0;
    std::vector<TensorOp<S>> e;  // row-major N*N entries

    OpMatrix() = default;
    OpMatrix(long n, int legs_, long dim_)
        : N(n), legs(legs_), dim(dim_),
          e(static_cast<std::size_t>(n * n), TensorOp<S>(legs_, dim_)) {}

    static OpMatrix identity(long n, int legs, long dim) {
        OpMatrix M(n, legs, dim);
        for (long i = 0; i < n; ++i) M.at(i, i) = TensorOp<S>::identity(legs, dim);
        return M;
    }

    TensorOp<S>& at(long i, long j) { return e[static_cast<std::size_t>(i * N + j)]; }
    const TensorOp<S>& at(long i, long j) const { return e[static_cast<std::size_t>(i * N + j)]; }

    /// Operator-composition matrix product: (AB)_i^j = sum_a A_i^a o B_a^j.
    friend OpMatrix mul(const OpMatrix& A, const OpMatrix& B) {
        OpMatrix out(A.N, A.legs, A.dim);
        for (long i = 0; i < A.N; ++i)
            for (long j = 0; j < A.N; ++j) {
                TensorOp<S> acc(A.legs, A.dim);
                for (long a = 0; a < A.N; ++a) acc = add(acc, compose(A.at(i, a), B.at(a, j)));
                out.at(i, j) = std::move(acc);
            }
        return out;
    }

    /// this - z * Id
    OpMatrix sub_scalar(const S& z) const {
        OpMatrix out = *this;
        const TensorOp<S> zI = TensorOp<S>::identity(legs, dim).scale(z);
        for (long i = 0; i < N; ++i) out.at(i, i) = sub(out.at(i, i), zI);
        return out;
    }

    OpMatrix scaled(const S& f) const {
        OpMatrix out = *this;
        for (auto& t : out.e) t = t.scale(f);
        return out;
    }

    /// Entrywise composition with X on the right.
    OpMatrix right_mul(const TensorOp<S>& X) const {
        OpMatrix out = *this;
        for (auto& t : out.e) t = compose(t, X);
        return out;
    }

    bool is_zero() const {
        for (const auto& t : e)
            if (!t.is_zero()) return false;
        return true;
    }
};

// ---------------------------------------------------------------------------
// Power matrices and the monomial oracle
// ---------------------------------------------------------------------------

/// Central power matrices on V^{(x) k}:
///   q^{2m(n-1)} T_k^n = <J_{k+1}^{-n}>_{k+1},   P_k^n = <J_{k+1}^n>_{k+1}.
template <class S>
struct PowerMatrices {
    int k = 0;
    long n = 1;
    TensorOp<S> P;
    TensorOp<S> T;
};

template <class S>
PowerMatrices<S> power_matrices(const HeckeSymmetry<S>& H, int k, long n) {
    if (k < 0 || n < 1) throw charalg_error("power_matrices requires k >= 0, n >= 1");
    const auto J = jucys_murphy(H, k + 1);
    const auto Ji = jucys_murphy_inv(H, k + 1);
    PowerMatrices<S> out{k, n, TensorOp<S>(k, H.N), TensorOp<S>(k, H.N)};
    out.P = J[static_cast<std::size_t>(k)].pow(n).rtrace({k + 1}, H.C);
    out.T = Ji[static_cast<std::size_t>(k)].pow(n).rtrace({k + 1}, H.C).scale(
        spow(H.q, -2 * static_cast<long>(H.m) * (n - 1)));
    return out;
}

/**
 * Matrix of t_n acting on V^{(x) k} via the explicit monomial route: build
 * prod_{a=1..n} J_{k+a}^{-1} prod_{b=2..n} J_b^{up k} on k+n legs, append
 * the chain R_{k+n-1}^{-1} ... R_{k+1}^{-1}, and R-trace legs k+1..k+n.
 * Independent oracle for T_k^n.
 */
template <class S>
TensorOp<S> monomial_action_t(const HeckeSymmetry<S>& H, int k, long n) {
    if (k < 0 || n < 1) throw charalg_error("monomial_action_t requires k >= 0, n >= 1");
    const int p = k + static_cast<int>(n);
    const auto Ji = jucys_murphy_inv(H, p);
    TensorOp<S> acc = TensorOp<S>::identity(p, H.N);
    for (long a = 1; a <= n; ++a)
        acc = compose(acc, Ji[static_cast<std::size_t>(k) + static_cast<std::size_t>(a) - 1]);
    for (long b = 2; b <= n; ++b) acc = compose(acc, jm_shifted(H, static_cast<int>(b), k, p));
    for (int idx = p - 1; idx >= k + 1; --idx) acc = compose(acc, H.Rinv.embed(idx, p));
    std::set<int> legs;
    for (int l = k + 1; l <= p; ++l) legs.insert(l);
    return acc.rtrace(legs, H.C);
}

/// The unique scalar chi with M . E = chi . E. Throws not_scalar_error when
/// the product is not a scalar multiple of E (which would falsify the
/// scalarity of characteristic elements on the module).
template <class S>
S extract_character(const TensorOp<S>& M, const TensorOp<S>& E) {
    Index r = 0, c = 0;
    S pivot(0);
    if (!E.first_entry(r, c, pivot))
        throw not_scalar_error("cannot extract a character against the zero projector");
    const TensorOp<S> D = compose(M, E);
    const S chi = D.entry(r, c) / pivot;
    if (D != E.scale(chi)) throw not_scalar_error("operator is not scalar on this module");
    return chi;
}

// ---------------------------------------------------------------------------
// Represented generator matrices
// ---------------------------------------------------------------------------

/**
 * Generator matrices of the reflection-equation algebra acting on the tensor
 * tower. The primal (V-side) matrices are sliced from J_{k+1}^{-1}, the dual
 * ones from J_{k+1}, with the matrix-index leg at position k+1. The slicing
 * convention (index roles, transpose) is resolved empirically at build time:
 * the stored matrices satisfy
 *     R" L1 R" L1 = L1 R" L1 R"
 * on two matrix legs, with R" = R for the dual side and R" = R^{-1} for the
 * primal side (the underline-shifted form of the defining relation);
 * `re_form` records which one passed.
 */
template <class S>
struct RepresentedGenerators {
    int k = 0;
    bool dual = false;
    std::string re_form;      // "R" or "R_inv"
    std::string convention;   // slicing convention tag
    OpMatrix<S> L;
};

namespace detail {

template <class S>
OpMatrix<S> slice_matrix_leg(const TensorOp<S>& J, long N, bool swap_roles, bool transpose) {
    const int k = J.legs() - 1;
    OpMatrix<S> out(N, k, N);
    for (const auto& [r, row] : J.rows())
        for (const auto& [c, v] : row) {
            const Index rr = r / static_cast<Index>(N);
            const long s = static_cast<long>(r % static_cast<Index>(N));
            const Index cc = c / static_cast<Index>(N);
            const long t = static_cast<long>(c % static_cast<Index>(N));
            const long i = swap_roles ? t : s;
            const long j = swap_roles ? s : t;
            if (transpose)
                out.at(i, j).add_to(cc, rr, v);
            else
                out.at(i, j).add_to(rr, cc, v);
        }
    return out;
}

/// Check R" L1 R" L1 = L1 R" L1 R" with two matrix legs in front of the
/// representation legs.
template <class S>
bool re_relation_holds(const OpMatrix<S>& L, const TensorOp<S>& R2) {
    const long N = L.N;
    const int p = 2 + L.legs;
    const TensorOp<S> Rm = R2.embed(1, p);
    TensorOp<S> L1(p, N);
    const TensorOp<S> I1 = TensorOp<S>::identity(1, N);
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j) {
            if (L.at(i, j).is_zero()) continue;
            L1 = add(L1, kron(kron(matrix_unit<S>(N, i, j), I1), L.at(i, j)));
        }
    const TensorOp<S> lhs = compose(Rm, compose(L1, compose(Rm, L1)));
    const TensorOp<S> rhs = compose(L1, compose(Rm, compose(L1, Rm)));
    return lhs == rhs;
}

}  // namespace detail

template <class S>
RepresentedGenerators<S> represented_generators(const HeckeSymmetry<S>& H, int k, bool dual) {
    if (k < 0) throw charalg_error("represented_generators requires k >= 0");
    const auto Js = dual ? jucys_murphy(H, k + 1) : jucys_murphy_inv(H, k + 1);
    const TensorOp<S>& J = Js[static_cast<std::size_t>(k)];
    struct Cand {
        bool swap, transpose;
        const char* tag;
    };
    // pinned conventions first, then the remaining combinations
    const std::vector<Cand> cands = dual
        ? std::vector<Cand>{{true, true, "swap+transpose"},
                            {false, false, "direct"},
                            {true, false, "swap"},
                            {false, true, "transpose"}}
        : std::vector<Cand>{{false, false, "direct"},
                            {true, true, "swap+transpose"},
                            {true, false, "swap"},
                            {false, true, "transpose"}};
    for (const char* form : {"R", "R_inv"}) {
        const TensorOp<S>& R2 = (std::string(form) == "R") ? H.R : H.Rinv;
        for (const Cand& cand : cands) {
            OpMatrix<S> L = detail::slice_matrix_leg(J, H.N, cand.swap, cand.transpose);
            if (detail::re_relation_holds(L, R2)) {
                RepresentedGenerators<S> out;
                out.k = k;
                out.dual = dual;
                out.re_form = form;
                out.convention = cand.tag;
                out.L = std::move(L);
                return out;
            }
        }
    }
    throw charalg_error("no slicing convention satisfies the reflection-equation relation");
}

/// R-trace contraction sum_{i,j} C_j^i rho(l_i^j), i.e. the represented
/// <L>. Equals P_k^1 for the dual generators and T_k^1 for the primal ones.
template <class S>
TensorOp<S> generator_trace(const RepresentedGenerators<S>& G, const HeckeSymmetry<S>& H) {
    TensorOp<S> acc(G.k, H.N);
    for (long i = 0; i < H.N; ++i)
        for (long j = 0; j < H.N; ++j) {
            const S w = H.C.entry(static_cast<Index>(i), static_cast<Index>(j));
            if (qspectra::is_zero(w)) continue;
            acc = add(acc, G.L.at(i, j).scale(w));
        }
    return acc;
}

// ---------------------------------------------------------------------------
// Cayley-Hamilton
// ---------------------------------------------------------------------------

/**
 * Cayley-Hamilton residual prod_{j=1..m} (L - chi_lambda(mu_j) I) . E for
 * the module selected by `side`. On the V side the generator matrix from the
 * J^{-1} slices is normalized by q^{-2(m-1)}, which aligns its spectrum with
 * chi_lambda(mu_i) = q^{-2(lambda_i - i + m)}; the dual side uses the plain
 * J slices against chi*_lambda(mu_i) = q^{2(lambda_i - i + 1)}. The result
 * must be the exact zero operator matrix.
 */
template <class S>
OpMatrix<S> cayley_hamilton_residual(const HeckeSymmetry<S>& H, int k, const Partition& lam,
                                     const TensorOp<S>& E, Side side = Side::V) {
    RepresentedGenerators<S> G = represented_generators(H, k, side == Side::Dual);
    OpMatrix<S> L = side == Side::V
                        ? G.L.scaled(spow(H.q, -2 * (static_cast<long>(H.m) - 1)))
                        : G.L;
    const auto mus = spectrum(lam, H.m, side, H.q);
    OpMatrix<S> acc = OpMatrix<S>::identity(H.N, k, H.N);
    for (const S& mu : mus) acc = mul(acc, L.sub_scalar(mu));
    return acc.right_mul(E);
}

// ---------------------------------------------------------------------------
// Newton relations
// ---------------------------------------------------------------------------

enum class NewtonKind { a_from_p, a_from_t, t_from_p, p_from_t };

/**
 * Triangular solves of the quantum Newton relations:
 *   n_q a_n + sum_{k=1..n} (-1)^k q^{n-k} a_{n-k} p_k = 0,
 *   n_q a_n + sum_{k=1..n} (-1)^k q^{k-n} a_{n-k} t_k = 0,
 *   p_n = t_n + (q - q^{-1}) sum_{k=1..n-1} p_{n-k} t_k.
 * For the a-producing kinds, a bi-rank bound m enforces a_n = 0 for n > m.
 */
template <class S>
std::vector<S> newton_convert(NewtonKind kind, const std::vector<S>& in, std::optional<int> m,
                              const S& q) {
    const long n_max = static_cast<long>(in.size());
    const S w = q - S(1) / q;
    std::vector<S> out;
    out.reserve(in.size());
    auto in_at = [&](long i) -> const S& { return in[static_cast<std::size_t>(i) - 1]; };
    auto out_at = [&](long i) -> const S& { return out[static_cast<std::size_t>(i) - 1]; };

    for (long n = 1; n <= n_max; ++n) {
        switch (kind) {
            case NewtonKind::a_from_p:
            case NewtonKind::a_from_t: {
                const bool from_p = kind == NewtonKind::a_from_p;
                const S nq = q_int(q, n);
                if (qspectra::is_zero(nq))
                    throw charalg_error("n_q vanishes: backend q is not generic");
                S acc(0);
                for (long kk = 1; kk <= n; ++kk) {
                    const S a_prev = (n - kk == 0) ? S(1) : out_at(n - kk);
                    const S qpow = from_p ? spow(q, n - kk) : spow(q, kk - n);
                    const S sign = (kk % 2 == 0) ? S(1) : S(-1);
                    acc += sign * qpow * a_prev * in_at(kk);
                }
                S a_n = S(0) - acc / nq;
                if (m && n > *m) {
                    if (!qspectra::is_zero(a_n))
                        throw charalg_error("a_" + std::to_string(n) +
                                            " does not vanish beyond the bi-rank m = " +
                                            std::to_string(*m));
                    a_n = S(0);
                }
                out.push_back(a_n);
                break;
            }
            case NewtonKind::t_from_p: {
                S acc = in_at(n);
                for (long kk = 1; kk <= n - 1; ++kk) acc -= w * in_at(n - kk) * out_at(kk);
                out.push_back(acc);
                break;
            }
            case NewtonKind::p_from_t: {
                S acc = in_at(n);
                for (long kk = 1; kk <= n - 1; ++kk) acc += w * out_at(n - kk) * in_at(kk);
                out.push_back(acc);
                break;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Projected recursion checks (matrix identities among P_k^n, T_k^n, J_k)
// ---------------------------------------------------------------------------

/**
 * Checks, for a standard tableau T of weight k with c the content of the box
 * holding k and E = E^lambda_T:
 *   P_k^n E = lift(P_{k-1}^n) E + w n q^{2nc} E + w^2 sum_s s q^{2sc} P_k^{n-s} E,
 *   T_k^n E = lift(T_{k-1}^n) E - w n q^{-2n(c+m)} E + w^2 sum_s s q^{-2s(c+m)} T_k^{n-s} E,
 * plus the raw matrix identity
 *   R_k J_{k+1}^n = J_k^n R_k + w sum_{s=1..n} J_{k+1}^s J_k^{n-s}.
 */
template <class S>
std::vector<CheckResult> lemma44_check(const HeckeSymmetry<S>& H, int k, long n,
                                       const StandardTableau& tab, const TensorOp<S>& E,
                                       const std::string& params = "") {
    if (k < 1) throw charalg_error("lemma44_check requires k >= 1");
    std::vector<CheckResult> out;
    const S w = H.omega;
    const long c = tab.content(k);

    std::vector<PowerMatrices<S>> pm;  // pm[s-1] holds order s
    for (long s = 1; s <= n; ++s) pm.push_back(power_matrices(H, k, s));
    const PowerMatrices<S> prev = power_matrices(H, k - 1, n);

    {
        TensorOp<S> lhs = compose(pm[static_cast<std::size_t>(n) - 1].P, E);
        TensorOp<S> rhs = compose(prev.P.embed(1, k), E);
        rhs = add(rhs, E.scale(w * S(n) * spow(H.q, 2 * n * c)));
        for (long s = 1; s <= n - 1; ++s)
            rhs = add(rhs, compose(pm[static_cast<std::size_t>(n - s) - 1].P, E)
                               .scale(w * w * S(s) * spow(H.q, 2 * s * c)));
        out.push_back({"lemma44_P", params, lhs == rhs, false,
                       lhs == rhs ? "" : "projected P-recursion fails"});
    }
    {
        TensorOp<S> lhs = compose(pm[static_cast<std::size_t>(n) - 1].T, E);
        TensorOp<S> rhs = compose(prev.T.embed(1, k), E);
        rhs = sub(rhs, E.scale(w * S(n) * spow(H.q, -2 * n * (c + H.m))));
        for (long s = 1; s <= n - 1; ++s)
            rhs = add(rhs, compose(pm[static_cast<std::size_t>(n - s) - 1].T, E)
                               .scale(w * w * S(s) * spow(H.q, -2 * s * (c + H.m))));
        out.push_back({"lemma44_T", params, lhs == rhs, false,
                       lhs == rhs ? "" : "projected T-recursion fails"});
    }
    {
        const auto J = jucys_murphy(H, k + 1);
        const TensorOp<S> Rk = H.R.embed(k, k + 1);
        const TensorOp<S>& Jk = J[static_cast<std::size_t>(k) - 1];
        const TensorOp<S>& Jk1 = J[static_cast<std::size_t>(k)];
        TensorOp<S> lhs = compose(Rk, Jk1.pow(n));
        TensorOp<S> rhs = compose(Jk.pow(n), Rk);
        for (long s = 1; s <= n; ++s)
            rhs = add(rhs, compose(Jk1.pow(s), Jk.pow(n - s)).scale(w));
        out.push_back({"lemma44_RJn", params, lhs == rhs, false,
                       lhs == rhs ? "" : "raw identity R_k J_{k+1}^n fails"});
    }
    return out;
}

}  // namespace qspectra
