#pragma once

#include <vector>

#include "qspectra/scalar.hpp"

namespace qspectra {

/// Truncated formal power series over an exact scalar field; all identities
/// downstream are checked coefficientwise, so no analytic questions arise.
template <class S>
class TruncSeries {
public:
    explicit TruncSeries(int order) : c_(static_cast<std::size_t>(order) + 1, S(0)) {}
    TruncSeries(int order, std::vector<S> coeffs) : c_(std::move(coeffs)) {
        c_.resize(static_cast<std::size_t>(order) + 1, S(0));
    }

    static TruncSeries constant(int order, const S& v) {
        TruncSeries s(order);
        s.c_[0] = v;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const S& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    S& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }

    bool operator==(const TruncSeries& o) const { return c_ == o.c_; }
    bool operator!=(const TruncSeries& o) const { return !(*this == o); }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries out(a.order());
        for (int k = 0; k <= a.order(); ++k) out[k] = a[k] + b[k];
        return out;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries out(a.order());
        for (int k = 0; k <= a.order(); ++k) out[k] = a[k] - b[k];
        return out;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        TruncSeries out(a.order());
        for (int i = 0; i <= a.order(); ++i) {
            if (qspectra::is_zero(a[i])) continue;
            for (int j = 0; i + j <= a.order(); ++j) out[i + j] += a[i] * b[j];
        }
        return out;
    }

    TruncSeries scaled(const S& f) const {
        TruncSeries out(order());
        for (int k = 0; k <= order(); ++k) out[k] = c_[static_cast<std::size_t>(k)] * f;
        return out;
    }

    /// Substitute x -> a x.
    TruncSeries subst_scaled_var(const S& a) const {
        TruncSeries out(order());
        S p(1);
        for (int k = 0; k <= order(); ++k) {
            out[k] = c_[static_cast<std::size_t>(k)] * p;
            p = p * a;
        }
        return out;
    }

    /// Multiplicative inverse; the constant term must be invertible.
    TruncSeries inverse() const {
        if (qspectra::is_zero(c_[0])) throw scalar_error("series inverse needs a unit constant term");
        TruncSeries out(order());
        const S u = S(1) / c_[0];
        out[0] = u;
        for (int k = 1; k <= order(); ++k) {
            S acc(0);
            for (int i = 1; i <= k; ++i) acc += c_[static_cast<std::size_t>(i)] * out[k - i];
            out[k] = S(0) - acc * u;
        }
        return out;
    }

private:
    std::vector<S> c_;
};

/// Geometric-derivative kernel S(z) = z/(1-z)^2 as a series in x at z = a x:
/// sum_{k>=1} k a^k x^k.
template <class S>
TruncSeries<S> s_kernel(int order, const S& a) {
    TruncSeries<S> out(order);
    S p(1);
    for (int k = 1; k <= order; ++k) {
        p = p * a;
        out[k] = S(static_cast<long>(k)) * p;
    }
    return out;
}

}  // namespace qspectra
