#pragma once

#include <algorithm>
#include <vector>

#include "qspectra/braiding.hpp"
#include "qspectra/partitions.hpp"

namespace qspectra {

/// Jucys-Murphy matrices J_1..J_p on p legs: J_1 = I, J_k = R_{k-1} J_{k-1} R_{k-1}.
template <class S>
std::vector<TensorOp<S>> jucys_murphy(const HeckeSymmetry<S>& H, int p) {
    return detail::jm_from_r(H.R, p, H.N);
}

/// Inverse Jucys-Murphy matrices, built from R^{-1} directly.
template <class S>
std::vector<TensorOp<S>> jucys_murphy_inv(const HeckeSymmetry<S>& H, int p) {
    return detail::jm_from_r(H.Rinv, p, H.N);
}

/// Shifted Jucys-Murphy matrix J_b^{up k} = R_{k+b-1}...R_{k+1}^2...R_{k+b-1} on p legs.
template <class S>
TensorOp<S> jm_shifted(const HeckeSymmetry<S>& H, int b, int k, int p) {
    TensorOp<S> J = TensorOp<S>::identity(p, H.N);
    for (int step = 2; step <= b; ++step) {
        TensorOp<S> Rk = H.R.embed(k + step - 1, p);
        J = compose(Rk, compose(J, Rk));
    }
    return J;
}

/// Primitive Young projector on V^{(x) k} attached to a standard tableau.
template <class S>
struct YoungIdempotent {
    Partition shape;
    StandardTableau tableau;
    TensorOp<S> E;
};

/**
 * All primitive Young idempotents of weight k, built by Jucys-Murphy spectral
 * interpolation along each tableau's growth chain:
 *
 *   E_{T_j} = E_{T_{j-1}} prod_{c' in Adm(T_{j-1}), c' != c}
 *             (J_j - q^{2c'} I) / (q^{2c} - q^{2c'}),
 *
 * where Adm is the set of contents of boxes addable to shape(T_{j-1}) and c
 * is the content of the box receiving j. Idempotents whose shape is taller
 * than the bi-rank come out as exact zero operators. The returned order is
 * descending content-lexicographic (tableaux of one shape stay adjacent).
 */
template <class S>
std::vector<YoungIdempotent<S>> young_idempotents(const HeckeSymmetry<S>& H, int k) {
    if (k < 1) throw combinatorics_error("young_idempotents requires k >= 1");
    const auto J = jucys_murphy(H, k);
    const TensorOp<S> I = TensorOp<S>::identity(k, H.N);
    std::vector<YoungIdempotent<S>> out;

    StandardTableau chain;
    chain.box_row.resize(static_cast<std::size_t>(k));
    chain.contents.resize(static_cast<std::size_t>(k));

    auto rec = [&](auto&& self, int t, const Partition& shape, const TensorOp<S>& E) -> void {
        if (t > k) {
            StandardTableau tab = chain;
            tab.shape = shape;
            out.push_back({shape, std::move(tab), E});
            return;
        }
        auto boxes = shape.addable();
        std::sort(boxes.begin(), boxes.end(),
                  [](const auto& a, const auto& b) { return a.second > b.second; });
        for (const auto& [row, c] : boxes) {
            chain.box_row[static_cast<std::size_t>(t) - 1] = row;
            chain.contents[static_cast<std::size_t>(t) - 1] = c;
            TensorOp<S> En = E;
            if (t > 1 && !En.is_zero()) {
                const S qc = spow(H.q, 2 * c);
                for (const auto& [row2, c2] : boxes) {
                    if (c2 == c) continue;
                    const S qc2 = spow(H.q, 2 * c2);
                    const S denom = qc - qc2;
                    if (qspectra::is_zero(denom))
                        throw braiding_error(
                            "non-generic q: interpolation denominator q^{2c} - q^{2c'} vanishes");
                    En = compose(En, sub(J[static_cast<std::size_t>(t) - 1], I.scale(qc2))
                                         .scale(S(1) / denom));
                }
            }
            self(self, t + 1, shape.with_box(row), En);
        }
    };
    rec(rec, 1, Partition(), I);
    return out;
}

}  // namespace qspectra
