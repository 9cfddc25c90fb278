#pragma once

#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qspectra/check.hpp"
#include "qspectra/tensor.hpp"

namespace qspectra {

class braiding_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Validated Hecke symmetry bundle: the braiding R on V (x) V, its inverse,
 * the parameter q, the skew-inverse Psi with its partial traces B and C, and
 * the bi-rank m (the R-skew-symmetric algebra dies in degree m+1).
 */
template <class S>
struct HeckeSymmetry {
    long N = 0;
    S q = S(0);
    S omega = S(0);  // q - q^{-1}
    int m = 0;
    TensorOp<S> R;
    TensorOp<S> Rinv;
    TensorOp<S> Psi;
    TensorOp<S> B;
    TensorOp<S> C;
};

/// Skew inverse: solves Tr_(2)(R_12 Psi_23) = P_13 by inverting the
/// partial-transpose reshuffle of R. Throws if the reshuffle is singular.
template <class S>
TensorOp<S> skew_inverse(const TensorOp<S>& R) {
    const long N = R.dim();
    if (R.legs() != 2) throw braiding_error("skew_inverse expects a two-leg operator");
    TensorOp<S> A(2, N);
    for (const auto& [r, row] : R.rows())
        for (const auto& [c, v] : row) {
            const auto rd = R.unpack(r), cd = R.unpack(c);
            // A[(a,i),(b',b)] = R^{ab}_{ib'}
            A.set(TensorOp<S>::pack({rd[0], cd[0]}, N), TensorOp<S>::pack({cd[1], rd[1]}, N), v);
        }
    TensorOp<S> Ainv(2, N);
    try {
        Ainv = A.inverse();
    } catch (const singular_error&) {
        throw braiding_error("not skew-invertible: reshuffled matrix is singular");
    }
    TensorOp<S> D(2, N);
    for (long a = 0; a < N; ++a)
        for (long i = 0; i < N; ++i)
            D.set(TensorOp<S>::pack({a, i}, N), TensorOp<S>::pack({i, a}, N), S(1));
    TensorOp<S> X = compose(Ainv, D);
    TensorOp<S> Psi(2, N);
    for (const auto& [r, row] : X.rows())
        for (const auto& [c, v] : row) {
            const auto rd = X.unpack(r), cd = X.unpack(c);
            // X[(b',b),(c,k)] = Psi^{b'c}_{bk}
            Psi.set(TensorOp<S>::pack({rd[0], cd[0]}, N), TensorOp<S>::pack({rd[1], cd[1]}, N), v);
        }
    return Psi;
}

/// B_i^j = sum_a Psi_{ai}^{aj} and C_i^j = sum_a Psi_{ia}^{ja}: the plain
/// partial traces of Psi over its first and second leg.
template <class S>
std::pair<TensorOp<S>, TensorOp<S>> bc_matrices(const TensorOp<S>& Psi) {
    return {Psi.ptrace({1}), Psi.ptrace({2})};
}

namespace detail {

/// Jucys-Murphy matrices J_1..J_p on p legs from a bare braiding.
template <class S>
std::vector<TensorOp<S>> jm_from_r(const TensorOp<S>& R2, int p, long N) {
    std::vector<TensorOp<S>> out;
    out.push_back(TensorOp<S>::identity(p, N));
    for (int k = 2; k <= p; ++k) {
        TensorOp<S> Rk = R2.embed(k - 1, p);
        out.push_back(compose(Rk, compose(out.back(), Rk)));
    }
    return out;
}

/// One-column Young idempotent E^{(1^k)} on k legs via the Jucys-Murphy
/// interpolation along the single-column tableau.
template <class S>
TensorOp<S> column_idempotent(const TensorOp<S>& R2, const S& q, int k, long N) {
    auto J = jm_from_r(R2, k, N);
    TensorOp<S> E = TensorOp<S>::identity(k, N);
    for (int j = 2; j <= k; ++j) {
        // shape (1^{j-1}) admits contents {1, 1-j}; extend the column (c = 1-j)
        const S top = spow(q, 2);
        const S cj = spow(q, 2 * (1 - j));
        const S denom = cj - top;
        if (qspectra::is_zero(denom))
            throw braiding_error("non-generic q: interpolation denominator vanishes");
        TensorOp<S> factor = sub(J[static_cast<std::size_t>(j) - 1],
                                 TensorOp<S>::identity(k, N).scale(top));
        E = compose(E, factor.scale(S(1) / denom));
        if (E.is_zero()) break;
    }
    return E;
}

}  // namespace detail

/// Bi-rank search: smallest m with E^{(1^{m+1})}(R) = 0.
template <class S>
int birank(const TensorOp<S>& R2, const S& q, long N, int k_max = 6) {
    for (int k = 2; k <= k_max + 1; ++k) {
        if (detail::column_idempotent(R2, q, k, N).is_zero()) return k - 1;
    }
    throw braiding_error("bi-rank undetermined up to k_max = " + std::to_string(k_max) +
                         " (possibly not of type (m|0))");
}

/// Structural validation: braid relation, Hecke condition, both skew-inverse
/// identities, and the trace of C against q^{-m} m_q.
template <class S>
std::vector<CheckResult> validate(const HeckeSymmetry<S>& H) {
    std::vector<CheckResult> out;
    const long N = H.N;
    auto push = [&out](const std::string& name, bool ok, const std::string& witness = "") {
        out.push_back({name, "", ok, false, ok ? "" : witness});
    };

    TensorOp<S> R1 = H.R.embed(1, 3), R2 = H.R.embed(2, 3);
    push("braid", compose(R1, compose(R2, R1)) == compose(R2, compose(R1, R2)),
         "R1 R2 R1 != R2 R1 R2");

    TensorOp<S> I2 = TensorOp<S>::identity(2, N);
    TensorOp<S> hecke = compose(sub(I2.scale(H.q), H.R), add(I2.scale(S(1) / H.q), H.R));
    push("hecke", hecke.is_zero(), "(q - R)(q^-1 + R) != 0");

    TensorOp<S> P = flip_op<S>(N);
    TensorOp<S> left = compose(H.R.embed(1, 3), H.Psi.embed(2, 3)).ptrace({2});
    TensorOp<S> right = compose(H.Psi.embed(1, 3), H.R.embed(2, 3)).ptrace({2});
    push("skew_inverse_left", left == P, "Tr_(2)(R12 Psi23) != P13");
    push("skew_inverse_right", right == P, "Tr_(2)(Psi12 R23) != P13");

    S trc = H.C.plain_trace();
    S expected = spow(H.q, -H.m) * q_int(H.q, H.m);
    push("trace_c", trc == expected, "Tr(C) = " + scalar_str(trc) + ", expected q^-m m_q = " +
                                         scalar_str(expected));
    return out;
}

/// Assemble and fully validate a Hecke symmetry from a braiding and its q.
template <class S>
HeckeSymmetry<S> make_hecke(long N, TensorOp<S> R, const S& q, int k_max = 6) {
    HeckeSymmetry<S> H;
    H.N = N;
    H.q = q;
    H.omega = q - S(1) / q;
    H.R = std::move(R);
    H.Rinv = sub(H.R, TensorOp<S>::identity(2, N).scale(H.omega));
    if (compose(H.R, H.Rinv) != TensorOp<S>::identity(2, N))
        throw braiding_error("Hecke condition fails: R - omega I is not inverse to R");
    H.Psi = skew_inverse(H.R);
    auto bc = bc_matrices(H.Psi);
    H.B = std::move(bc.first);
    H.C = std::move(bc.second);
    H.m = birank(H.R, H.q, N, k_max);
    auto report = validate(H);
    if (!all_pass(report)) {
        std::string why;
        for (const auto& r : report)
            if (!r.pass) why += (why.empty() ? "" : "; ") + r.name;
        throw braiding_error("Hecke symmetry validation failed: " + why);
    }
    return H;
}

/// Standard GL(N) Drinfeld-Jimbo Hecke symmetry of bi-rank (N|0):
///   R(x_i (x) x_i) = q x_i (x) x_i,
///   R(x_i (x) x_j) = x_j (x) x_i + [i<j] (q - q^-1) x_i (x) x_j.
template <class S>
HeckeSymmetry<S> drinfeld_jimbo(long N, const S& q) {
    if (N < 1) throw braiding_error("drinfeld_jimbo requires N >= 1");
    const S omega = q - S(1) / q;
    TensorOp<S> R(2, N);
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j) {
            const Index col = TensorOp<S>::pack({i, j}, N);
            if (i == j) {
                R.set(col, col, q);
            } else {
                R.set(TensorOp<S>::pack({j, i}, N), col, S(1));
                if (i < j) R.add_to(col, col, omega);
            }
        }
    return make_hecke(N, std::move(R), q);
}

/// Symbolic Drinfeld-Jimbo symmetry.
inline HeckeSymmetry<RatFunc> drinfeld_jimbo_symbolic(long N) {
    return drinfeld_jimbo<RatFunc>(N, RatFunc::q());
}

// ---------------------------------------------------------------------------
// q recovery for user-supplied braidings
// ---------------------------------------------------------------------------

/**
 * Recover the Hecke parameter from the spectrum of a user-supplied braiding:
 * R^2 - I = w R pins w, the two Hecke eigenvalues are the roots of
 * x^2 - w x - 1, and the root whose eigenprojector has the larger rank is
 * labeled q. A mislabel is caught later by the bi-rank check.
 */
template <class S>
S recover_q(const TensorOp<S>& R) {
    const long N = R.dim();
    TensorOp<S> D = sub(compose(R, R), TensorOp<S>::identity(2, N));
    if (D.is_zero())
        throw braiding_error("involutive symmetry (q = +-1), outside the generic Hecke class");
    Index r, c;
    S rv(0), dv(0);
    if (!D.first_entry(r, c, dv)) throw braiding_error("unexpected empty difference");
    rv = R.entry(r, c);
    if (qspectra::is_zero(rv)) throw braiding_error("not a Hecke symmetry: R^2 - I is not proportional to R");
    S w = dv / rv;
    if (D != R.scale(w))
        throw braiding_error("not a Hecke symmetry: R^2 - I is not proportional to R");
    auto disc = scalar_sqrt(w * w + S(4));
    if (!disc) throw braiding_error("cannot recover q: discriminant has no exact square root");
    S r1 = (w + *disc) / S(2);
    S r2 = (w - *disc) / S(2);
    if (qspectra::is_zero(r1 - r2)) throw braiding_error("degenerate Hecke spectrum");
    // eigenprojector onto r1 is idempotent, so its rank equals its plain trace
    TensorOp<S> P1 = sub(R, TensorOp<S>::identity(2, N).scale(r2)).scale(S(1) / (r1 - r2));
    auto as_integer = [](const S& s) -> long {
        Rational v;
        if constexpr (std::is_same_v<S, Rational>) {
            v = s;
        } else {
            if (s.is_zero())
                v = Rational(0);
            else if (s.is_polynomial() && s.num().degree() == 0 && s.num().low() == 0)
                v = s.num().coeff(0);
            else
                throw braiding_error("eigenprojector trace is not constant");
        }
        if (v.get_den() != 1) throw braiding_error("eigenprojector trace is not an integer");
        return static_cast<long>(v.get_num().get_si());
    };
    const long rank1 = as_integer(P1.plain_trace());
    const long rank2 = N * N - rank1;
    if (rank1 == rank2)
        throw braiding_error("cannot label q: both Hecke eigenprojectors have equal rank");
    return rank1 > rank2 ? r1 : r2;
}

/// Build a validated Hecke symmetry from a bare braiding, recovering q.
template <class S>
HeckeSymmetry<S> hecke_from_braiding(TensorOp<S> R, int k_max = 6) {
    const long N = R.dim();
    S q = recover_q(R);
    return make_hecke(N, std::move(R), q, k_max);
}

/// Best-effort structural diagnosis of a user-supplied braiding. Appends
/// pass/fail entries for the braid relation, the Hecke condition (via q
/// recovery), skew-invertibility, and Tr(C); returns the assembled symmetry
/// only when every structural check passes.
template <class S>
std::optional<HeckeSymmetry<S>> diagnose_braiding(const TensorOp<S>& R,
                                                  std::vector<CheckResult>& out, int k_max = 6) {
    const long N = R.dim();
    const TensorOp<S> R1 = R.embed(1, 3), R2 = R.embed(2, 3);
    const bool braid_ok = compose(R1, compose(R2, R1)) == compose(R2, compose(R1, R2));
    out.push_back({"braid", "", braid_ok, false, braid_ok ? "" : "R1 R2 R1 != R2 R1 R2"});

    bool hecke_ok = true;
    std::string hecke_witness;
    S q(0);
    try {
        q = recover_q(R);
        const TensorOp<S> I2 = TensorOp<S>::identity(2, N);
        hecke_ok = compose(sub(I2.scale(q), R), add(I2.scale(S(1) / q), R)).is_zero();
        if (!hecke_ok) hecke_witness = "(q - R)(q^-1 + R) != 0";
    } catch (const braiding_error& e) {
        hecke_ok = false;
        hecke_witness = e.what();
    }
    out.push_back({"hecke", "", hecke_ok, false, hecke_witness});
    if (!braid_ok || !hecke_ok) return std::nullopt;

    try {
        HeckeSymmetry<S> H = make_hecke(N, R, q, k_max);
        for (auto& r : validate(H))
            if (r.name != "braid" && r.name != "hecke") out.push_back(std::move(r));
        return H;
    } catch (const braiding_error& e) {
        out.push_back({"hecke_symmetry_assembly", "", false, false, e.what()});
        return std::nullopt;
    }
}

/// Evaluate a symbolic tensor operator at q = q0.
inline TensorOp<Rational> eval_tensor(const TensorOp<RatFunc>& T, const Rational& q0) {
    TensorOp<Rational> out(T.legs(), T.dim());
    for (const auto& [r, row] : T.rows())
        for (const auto& [c, v] : row) out.set(r, c, v.eval(q0));
    return out;
}

/// Specialize a symbolic Hecke symmetry at a sampled generic q0.
inline HeckeSymmetry<Rational> sample_hecke(const HeckeSymmetry<RatFunc>& H, const Rational& q0) {
    HeckeSymmetry<Rational> out;
    out.N = H.N;
    out.q = H.q.eval(q0);
    out.omega = H.omega.eval(q0);
    out.m = H.m;
    out.R = eval_tensor(H.R, q0);
    out.Rinv = eval_tensor(H.Rinv, q0);
    out.Psi = eval_tensor(H.Psi, q0);
    out.B = eval_tensor(H.B, q0);
    out.C = eval_tensor(H.C, q0);
    return out;
}

}  // namespace qspectra
