#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "qspectra/scalar.hpp"

namespace qspectra {

class tensor_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
class singular_error : public tensor_error {
public:
    using tensor_error::tensor_error;
};

using Index = std::uint64_t;

/**
 * Exact sparse linear operator on V^{(x) p} with dim V = N. Entries are kept
 * in row -> (col -> value) maps with no explicit zeros, so operators compare
 * canonically. Multi-indices (i_1..i_p) in {0..N-1}^p are flattened
 * big-endian: leg 1 is the most significant digit.
 */
template <class S>
class TensorOp {
public:
    TensorOp() : legs_(0), dim_(1) {}
    TensorOp(int legs, long dim) : legs_(legs), dim_(dim) {
        if (legs < 0 || dim < 1) throw tensor_error("invalid tensor shape");
    }

    static TensorOp identity(int legs, long dim) {
        TensorOp t(legs, dim);
        const Index n = t.side();
        for (Index i = 0; i < n; ++i) t.rows_[i][i] = S(1);
        return t;
    }

    int legs() const { return legs_; }
    long dim() const { return dim_; }
    /// Matrix side length N^p.
    Index side() const {
        Index n = 1;
        for (int i = 0; i < legs_; ++i) n *= static_cast<Index>(dim_);
        return n;
    }

    bool is_zero() const { return rows_.empty(); }
    std::size_t nnz() const {
        std::size_t n = 0;
        for (const auto& [r, row] : rows_) n += row.size();
        return n;
    }

    void set(Index r, Index c, const S& v) {
        if (qspectra::is_zero(v)) {
            auto it = rows_.find(r);
            if (it != rows_.end()) {
                it->second.erase(c);
                if (it->second.empty()) rows_.erase(it);
            }
        } else {
            rows_[r][c] = v;
        }
    }
    void add_to(Index r, Index c, const S& v) {
        if (qspectra::is_zero(v)) return;
        auto& row = rows_[r];
        auto it = row.find(c);
        if (it == row.end()) {
            row.emplace(c, v);
        } else {
            it->second += v;
            if (qspectra::is_zero(it->second)) {
                row.erase(it);
                if (row.empty()) rows_.erase(r);
            }
        }
    }
    S entry(Index r, Index c) const {
        auto it = rows_.find(r);
        if (it == rows_.end()) return S(0);
        auto jt = it->second.find(c);
        return jt == it->second.end() ? S(0) : jt->second;
    }
    const std::map<Index, std::map<Index, S>>& rows() const { return rows_; }

    /// First nonzero entry in row-major order, if any.
    bool first_entry(Index& r, Index& c, S& v) const {
        if (rows_.empty()) return false;
        const auto& [rr, row] = *rows_.begin();
        r = rr;
        c = row.begin()->first;
        v = row.begin()->second;
        return true;
    }

    bool operator==(const TensorOp& o) const {
        return legs_ == o.legs_ && dim_ == o.dim_ && rows_ == o.rows_;
    }
    bool operator!=(const TensorOp& o) const { return !(*this == o); }

    friend TensorOp compose(const TensorOp& a, const TensorOp& b) {
        a.require_same_shape(b);
        TensorOp out(a.legs_, a.dim_);
        for (const auto& [r, row_a] : a.rows_) {
            std::map<Index, S> acc;
            for (const auto& [m, va] : row_a) {
                auto it = b.rows_.find(m);
                if (it == b.rows_.end()) continue;
                for (const auto& [c, vb] : it->second) {
                    auto jt = acc.find(c);
                    if (jt == acc.end())
                        acc.emplace(c, va * vb);
                    else
                        jt->second += va * vb;
                }
            }
            for (auto& [c, v] : acc)
                if (!qspectra::is_zero(v)) out.rows_[r].emplace(c, std::move(v));
        }
        return out;
    }

    friend TensorOp add(const TensorOp& a, const TensorOp& b) {
        a.require_same_shape(b);
        TensorOp out = a;
        for (const auto& [r, row] : b.rows_)
            for (const auto& [c, v] : row) out.add_to(r, c, v);
        return out;
    }
    friend TensorOp sub(const TensorOp& a, const TensorOp& b) {
        a.require_same_shape(b);
        TensorOp out = a;
        for (const auto& [r, row] : b.rows_)
            for (const auto& [c, v] : row) out.add_to(r, c, S(0) - v);
        return out;
    }

    TensorOp scale(const S& f) const {
        TensorOp out(legs_, dim_);
        if (qspectra::is_zero(f)) return out;
        for (const auto& [r, row] : rows_)
            for (const auto& [c, v] : row) out.rows_[r][c] = v * f;
        return out;
    }

    /// this placed at leg position pos (1-based) inside total legs, identity elsewhere.
    TensorOp embed(int pos, int total) const {
        if (pos < 1 || pos + legs_ - 1 > total)
            throw tensor_error("embed position out of range");
        const int left = pos - 1, right = total - pos + 1 - legs_;
        Index nl = 1, nr = 1;
        for (int i = 0; i < left; ++i) nl *= static_cast<Index>(dim_);
        for (int i = 0; i < right; ++i) nr *= static_cast<Index>(dim_);
        const Index mid = side();
        TensorOp out(total, dim_);
        for (const auto& [r, row] : rows_)
            for (const auto& [c, v] : row)
                for (Index l = 0; l < nl; ++l)
                    for (Index t = 0; t < nr; ++t) {
                        Index rr = (l * mid + r) * nr + t;
                        Index cc = (l * mid + c) * nr + t;
                        out.rows_[rr][cc] = v;
                    }
        return out;
    }

    friend TensorOp kron(const TensorOp& a, const TensorOp& b) {
        if (a.dim_ != b.dim_) throw tensor_error("kron with mismatched leg dimension");
        TensorOp out(a.legs_ + b.legs_, a.dim_);
        const Index nb = b.side();
        for (const auto& [ra, rowa] : a.rows_)
            for (const auto& [ca, va] : rowa)
                for (const auto& [rb, rowb] : b.rows_)
                    for (const auto& [cb, vb] : rowb) out.rows_[ra * nb + rb][ca * nb + cb] = va * vb;
        return out;
    }

    /// Plain partial trace over the given (1-based) legs.
    TensorOp ptrace(const std::set<int>& legs) const { return traced(legs, nullptr); }

    /// R-trace over the given legs: Tr_legs((prod C_l) . this), with C a
    /// one-leg operator. Surviving legs are renumbered order-preservingly.
    TensorOp rtrace(const std::set<int>& legs, const TensorOp& C) const {
        if (C.legs() != 1 || C.dim() != dim_) throw tensor_error("rtrace weight must be a one-leg operator");
        return traced(legs, &C);
    }

    TensorOp transpose() const {
        TensorOp out(legs_, dim_);
        for (const auto& [r, row] : rows_)
            for (const auto& [c, v] : row) out.rows_[c][r] = v;
        return out;
    }

    S plain_trace() const {
        S acc(0);
        for (const auto& [r, row] : rows_) {
            auto it = row.find(r);
            if (it != row.end()) acc += it->second;
        }
        return acc;
    }

    TensorOp pow(long n) const {
        if (n < 0) throw tensor_error("negative operator power");
        TensorOp acc = identity(legs_, dim_);
        TensorOp base = *this;
        while (n > 0) {
            if (n & 1) acc = compose(acc, base);
            base = compose(base, base);
            n >>= 1;
        }
        return acc;
    }

    /// Exact inverse by Gauss-Jordan elimination over the scalar field.
    TensorOp inverse() const {
        const Index n = side();
        std::vector<std::vector<S>> a(n, std::vector<S>(n, S(0)));
        std::vector<std::vector<S>> inv(n, std::vector<S>(n, S(0)));
        for (const auto& [r, row] : rows_)
            for (const auto& [c, v] : row) a[r][c] = v;
        for (Index i = 0; i < n; ++i) inv[i][i] = S(1);
        for (Index col = 0; col < n; ++col) {
            Index piv = n;
            for (Index r = col; r < n; ++r)
                if (!qspectra::is_zero(a[r][col])) {
                    piv = r;
                    break;
                }
            if (piv == n) throw singular_error("operator is singular");
            if (piv != col) {
                std::swap(a[piv], a[col]);
                std::swap(inv[piv], inv[col]);
            }
            S f = S(1) / a[col][col];
            for (Index c = 0; c < n; ++c) {
                if (!qspectra::is_zero(a[col][c])) a[col][c] = a[col][c] * f;
                if (!qspectra::is_zero(inv[col][c])) inv[col][c] = inv[col][c] * f;
            }
            for (Index r = 0; r < n; ++r) {
                if (r == col || qspectra::is_zero(a[r][col])) continue;
                S g = a[r][col];
                for (Index c = 0; c < n; ++c) {
                    if (!qspectra::is_zero(a[col][c])) a[r][c] -= g * a[col][c];
                    if (!qspectra::is_zero(inv[col][c])) inv[r][c] -= g * inv[col][c];
                }
            }
        }
        TensorOp out(legs_, dim_);
        for (Index r = 0; r < n; ++r)
            for (Index c = 0; c < n; ++c)
                if (!qspectra::is_zero(inv[r][c])) out.rows_[r][c] = inv[r][c];
        return out;
    }

    std::vector<long> unpack(Index x) const {
        std::vector<long> d(legs_);
        for (int j = legs_ - 1; j >= 0; --j) {
            d[j] = static_cast<long>(x % static_cast<Index>(dim_));
            x /= static_cast<Index>(dim_);
        }
        return d;
    }
    static Index pack(const std::vector<long>& digits, long dim) {
        Index x = 0;
        for (long d : digits) x = x * static_cast<Index>(dim) + static_cast<Index>(d);
        return x;
    }

private:
    void require_same_shape(const TensorOp& o) const {
        if (legs_ != o.legs_ || dim_ != o.dim_)
            throw tensor_error("tensor shape mismatch: (" + std::to_string(legs_) + "," +
                               std::to_string(dim_) + ") vs (" + std::to_string(o.legs_) + "," +
                               std::to_string(o.dim_) + ")");
    }

    TensorOp traced(const std::set<int>& legs, const TensorOp* C) const {
        for (int l : legs)
            if (l < 1 || l > legs_) throw tensor_error("trace leg out of range");
        std::vector<int> rem;
        for (int l = 1; l <= legs_; ++l)
            if (!legs.count(l)) rem.push_back(l);
        TensorOp out(static_cast<int>(rem.size()), dim_);
        for (const auto& [r, row] : rows_) {
            const std::vector<long> rd = unpack(r);
            for (const auto& [c, v] : row) {
                const std::vector<long> cd = unpack(c);
                S w = v;
                bool dead = false;
                for (int l : legs) {
                    if (C == nullptr) {
                        if (rd[l - 1] != cd[l - 1]) {
                            dead = true;
                            break;
                        }
                    } else {
                        const S cw = C->entry(static_cast<Index>(cd[l - 1]),
                                              static_cast<Index>(rd[l - 1]));
                        if (qspectra::is_zero(cw)) {
                            dead = true;
                            break;
                        }
                        w = w * cw;
                    }
                }
                if (dead) continue;
                std::vector<long> rr, cc;
                rr.reserve(rem.size());
                cc.reserve(rem.size());
                for (int l : rem) {
                    rr.push_back(rd[l - 1]);
                    cc.push_back(cd[l - 1]);
                }
                out.add_to(pack(rr, dim_), pack(cc, dim_), w);
            }
        }
        return out;
    }

    int legs_;
    long dim_;
    std::map<Index, std::map<Index, S>> rows_;
};

/// Flip operator P(x (x) y) = y (x) x on two legs.
template <class S>
TensorOp<S> flip_op(long N) {
    TensorOp<S> P(2, N);
    for (long i = 0; i < N; ++i)
        for (long j = 0; j < N; ++j)
            P.set(TensorOp<S>::pack({j, i}, N), TensorOp<S>::pack({i, j}, N), S(1));
    return P;
}

/// One-leg matrix unit E_i^j (single entry at row i, column j).
template <class S>
TensorOp<S> matrix_unit(long N, long i, long j) {
    TensorOp<S> e(1, N);
    e.set(static_cast<Index>(i), static_cast<Index>(j), S(1));
    return e;
}

}  // namespace qspectra
