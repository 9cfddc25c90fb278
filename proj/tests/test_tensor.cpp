#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace qspectra;

namespace {
const RatFunc Q = RatFunc::q();

const HeckeSymmetry<RatFunc>& dj2() {
    static const HeckeSymmetry<RatFunc> H = drinfeld_jimbo_symbolic(2);
    return H;
}
}  // namespace

TEST_CASE("embed") {
    const long N = 2;
    auto P = flip_op<RatFunc>(N);
    CHECK(P.embed(1, 2) == P);
    auto I2 = TensorOp<RatFunc>::identity(2, N);
    CHECK(I2.embed(1, 4) == TensorOp<RatFunc>::identity(4, N));
    CHECK(I2.embed(3, 4) == TensorOp<RatFunc>::identity(4, N));
    CHECK_THROWS_AS(P.embed(2, 2), tensor_error);
    // entry count multiplies by N^{p-2}
    CHECK(P.embed(2, 4).nnz() == P.nnz() * 4);
}

TEST_CASE("braid relation for the validated R") {
    const auto& H = dj2();
    auto R1 = H.R.embed(1, 3), R2 = H.R.embed(2, 3);
    CHECK(compose(R1, compose(R2, R1)) == compose(R2, compose(R1, R2)));
}

TEST_CASE("compose basics") {
    const auto& H = dj2();
    auto I = TensorOp<RatFunc>::identity(2, 2);
    CHECK(compose(H.R, I) == H.R);
    CHECK(compose(H.R, H.Rinv) == I);
    // Hecke condition rearranged: R R = I + omega R
    CHECK(compose(H.R, H.R) == add(I, H.R.scale(H.omega)));
    CHECK_THROWS_AS(compose(H.R, TensorOp<RatFunc>::identity(3, 2)), tensor_error);
}

TEST_CASE("rtrace base value") {
    const auto& H = dj2();
    auto one = TensorOp<RatFunc>::identity(1, 2).rtrace({1}, H.C);
    REQUIRE(one.legs() == 0);
    CHECK(one.entry(0, 0) == spow(H.q, -H.m) * q_int(H.q, H.m));
}

TEST_CASE("trace factorizes over disjoint legs") {
    std::mt19937_64 rng(5);
    const auto& H = dj2();
    for (int i = 0; i < 10; ++i) {
        auto a = qtest::random_tensor(rng, 1, 2, 3);
        auto b = qtest::random_tensor(rng, 1, 2, 3);
        auto traced = kron(a, b).rtrace({2}, H.C);
        auto expected = a.scale(b.rtrace({1}, H.C).entry(0, 0));
        CHECK(traced == expected);
    }
}

TEST_CASE("sandwich trace rules") {
    // <X R_p Y>_{p+1} = X Y and <X R_p^{-1} Y>_{p+1} = q^{-2m} X Y
    std::mt19937_64 rng(17);
    const auto& H = dj2();
    const int p = 2;
    auto Rp = H.R.embed(p, p + 1);
    auto Rpi = H.Rinv.embed(p, p + 1);
    for (int i = 0; i < 8; ++i) {
        auto X = qtest::random_tensor(rng, p, 2, 5);
        auto Y = qtest::random_tensor(rng, p, 2, 5);
        auto Xa = X.embed(1, p + 1), Ya = Y.embed(1, p + 1);
        auto plus = compose(Xa, compose(Rp, Ya)).rtrace({p + 1}, H.C);
        CHECK(plus == compose(X, Y));
        auto minus = compose(Xa, compose(Rpi, Ya)).rtrace({p + 1}, H.C);
        CHECK(minus == compose(X, Y).scale(spow(H.q, -2 * H.m)));
    }
}

TEST_CASE("cyclic property of the multi-trace") {
    std::mt19937_64 rng(23);
    const auto& H = dj2();
    // <M Q>_{1..k} = <Q M>_{1..k} for Q a monomial in R_1..R_{k-1}
    for (int i = 0; i < 6; ++i) {
        auto M2 = qtest::random_tensor(rng, 2, 2, 5);
        auto Q2 = H.R;
        CHECK(compose(M2, Q2).rtrace({1, 2}, H.C) == compose(Q2, M2).rtrace({1, 2}, H.C));

        auto M3 = qtest::random_tensor(rng, 3, 2, 7);
        auto Q3 = compose(H.R.embed(1, 3), H.Rinv.embed(2, 3));
        CHECK(compose(M3, Q3).rtrace({1, 2, 3}, H.C) == compose(Q3, M3).rtrace({1, 2, 3}, H.C));
    }
}

TEST_CASE("C-commutation R (C x C) = (C x C) R") {
    const auto& H = dj2();
    auto CC = kron(H.C, H.C);
    CHECK(compose(H.R, CC) == compose(CC, H.R));
}

TEST_CASE("conjugation trace rule") {
    // <R_k X R_k^{-1}>_{k+1} = <X>_k (x) I for X a polynomial in R_1..R_{k-1}
    std::mt19937_64 rng(31);
    const auto& H = dj2();
    const int k = 2;
    auto Rk = H.R.embed(k, k + 1);
    auto Rki = H.Rinv.embed(k, k + 1);
    for (int i = 0; i < 6; ++i) {
        RatFunc a(qtest::random_laurent(rng, 2, 2));
        RatFunc b(qtest::random_laurent(rng, 2, 2));
        auto X = add(TensorOp<RatFunc>::identity(k, 2).scale(a), H.R.scale(b));
        auto lhs = compose(Rk, compose(X.embed(1, k + 1), Rki)).rtrace({k + 1}, H.C);
        auto rhs = kron(X.rtrace({k}, H.C), TensorOp<RatFunc>::identity(1, 2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("exact inverse") {
    const auto& H = dj2();
    auto J2 = compose(H.R, H.R);
    CHECK(compose(J2.inverse(), J2) == TensorOp<RatFunc>::identity(2, 2));
    // rank-deficient operator
    TensorOp<RatFunc> ones(1, 2);
    for (Index r = 0; r < 2; ++r)
        for (Index c = 0; c < 2; ++c) ones.set(r, c, RatFunc(1));
    CHECK_THROWS_AS(ones.inverse(), singular_error);
}

TEST_CASE("transpose, power, plain trace") {
    const auto& H = dj2();
    CHECK(H.R.transpose().transpose() == H.R);
    CHECK(H.R.pow(2) == compose(H.R, H.R));
    CHECK(H.R.pow(0) == TensorOp<RatFunc>::identity(2, 2));
    CHECK(TensorOp<RatFunc>::identity(3, 2).plain_trace() == RatFunc(8));
}

TEST_CASE("index packing is big-endian") {
    TensorOp<RatFunc> T(3, 3);
    const std::vector<long> digits{2, 0, 1};
    const Index x = TensorOp<RatFunc>::pack(digits, 3);
    CHECK(x == 2 * 9 + 0 * 3 + 1);
    CHECK(T.unpack(x) == digits);
}

TEST_CASE("zero-leg operators behave like scalars") {
    TensorOp<RatFunc> s(0, 2);
    s.set(0, 0, Q);
    CHECK(s.side() == 1);
    CHECK(compose(s, s).entry(0, 0) == Q * Q);
}

TEST_CASE("flip squares to identity") {
    auto P = flip_op<RatFunc>(3);
    CHECK(compose(P, P) == TensorOp<RatFunc>::identity(2, 3));
}
