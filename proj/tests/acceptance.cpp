// Acceptance suite: runs every acceptance criterion at its stated sweep and
// tolerance (all equalities are exact) and prints one pass/fail line each.
// An optional argv[1] names the CLI binary, used by the determinism check.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qspectra/qspectra.hpp"

using namespace qspectra;

namespace {

int g_failures = 0;

void criterion(int number, const std::string& what, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << what << "\n";
    if (!ok) ++g_failures;
}

template <class S>
std::vector<std::pair<StandardTableau, TensorOp<S>>> weight_projectors(const HeckeSymmetry<S>& H,
                                                                       int k) {
    std::vector<std::pair<StandardTableau, TensorOp<S>>> out;
    if (k == 0) {
        StandardTableau empty;
        empty.shape = Partition();
        out.emplace_back(empty, TensorOp<S>::identity(0, H.N));
        return out;
    }
    for (auto& yi : young_idempotents(H, k))
        if (yi.shape.height() <= H.m) out.emplace_back(yi.tableau, yi.E);
    return out;
}

/// Criteria 1 and 2 (and 3 when instantiated with sampled scalars):
/// character extraction against the Theorem 4.1 spectra on both sides.
template <class S>
bool theorem41_sweep(const HeckeSymmetry<S>& H, int k_max, long n_max, bool module_side) {
    for (int k = 0; k <= k_max; ++k) {
        const auto projectors = weight_projectors(H, k);
        for (long n = 1; n <= n_max; ++n) {
            const auto pm = power_matrices(H, k, n);
            for (const auto& [tab, E] : projectors) {
                const auto mu = spectrum(tab.shape, H.m, module_side ? Side::V : Side::Dual, H.q);
                const S expected = module_side
                                       ? spectral_power_sum(mu, n, PowerKind::t, H.q)
                                       : spectral_power_sum(mu, n, PowerKind::p, H.q);
                try {
                    const S got = extract_character(module_side ? pm.T : pm.P, E);
                    if (!(got == expected)) return false;
                } catch (const not_scalar_error&) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool newton_sweep(const HeckeSymmetry<RatFunc>& H, int k_max, long n_max) {
    const RatFunc q = H.q;
    const RatFunc w = H.omega;
    for (int k = 0; k <= k_max; ++k) {
        const auto projectors = weight_projectors(H, k);
        std::vector<PowerMatrices<RatFunc>> pms;
        for (long n = 1; n <= n_max; ++n) pms.push_back(power_matrices(H, k, n));
        for (const auto& [tab, E] : projectors) {
            std::vector<RatFunc> t_chars, p_chars;
            for (long n = 1; n <= n_max; ++n) {
                t_chars.push_back(extract_character(pms[static_cast<std::size_t>(n) - 1].T, E));
                p_chars.push_back(extract_character(pms[static_cast<std::size_t>(n) - 1].P, E));
            }
            // V-side family: p from t, a from t; dual family: t from p, a from p
            for (bool module_side : {true, false}) {
                const auto& t = module_side
                                    ? t_chars
                                    : newton_convert(NewtonKind::t_from_p, p_chars, std::nullopt, q);
                const auto& p = module_side
                                    ? newton_convert(NewtonKind::p_from_t, t_chars, std::nullopt, q)
                                    : p_chars;
                std::vector<RatFunc> a;
                try {
                    a = newton_convert(NewtonKind::a_from_t, t, H.m, q);
                } catch (const charalg_error&) {
                    return false;  // a_n failed to vanish beyond m
                }
                auto a_at = [&](long i) { return i == 0 ? RatFunc(1) : a[static_cast<std::size_t>(i) - 1]; };
                for (long n = 1; n <= n_max; ++n) {
                    // first family residual
                    RatFunc res1 = q_int(q, n) * a_at(n);
                    for (long kk = 1; kk <= n; ++kk) {
                        const RatFunc sign = (kk % 2 == 0) ? RatFunc(1) : RatFunc(-1);
                        res1 += sign * spow(q, n - kk) * a_at(n - kk) * p[static_cast<std::size_t>(kk) - 1];
                    }
                    if (!res1.is_zero()) return false;
                    // third family residual
                    RatFunc res3 = p[static_cast<std::size_t>(n) - 1] - t[static_cast<std::size_t>(n) - 1];
                    for (long kk = 1; kk <= n - 1; ++kk)
                        res3 -= w * p[static_cast<std::size_t>(n - kk) - 1] * t[static_cast<std::size_t>(kk) - 1];
                    if (!res3.is_zero()) return false;
                }
            }
        }
    }
    return true;
}

bool idempotent_sweep(long N, int k_max) {
    const auto H = drinfeld_jimbo_symbolic(N);
    VerifyOptions opt;
    opt.k_max = k_max;
    opt.symbolic = false;  // criterion pins the sweep; no cap skips allowed
    // run only the idempotent checks by filtering the suite output
    auto rs = verify_suite(H, [&] {
        VerifyOptions o = opt;
        o.n_max = 0;            // theorem/lemma sweeps become empty
        o.base_case_n_max = 0;  // base cases off
        o.series_order = 1;
        return o;
    }());
    bool ok = true;
    for (const auto& r : rs) {
        if (r.name == "idempotency" || r.name == "orthogonality" ||
            r.name == "resolution_of_unity" || r.name == "jm_eigenrelation" ||
            r.name == "height_vanishing")
            ok = ok && r.pass;
    }
    return ok;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const auto H2 = drinfeld_jimbo_symbolic(2);

    // 1. Theorem 4.1, module side, DJ N=2 symbolic, k <= 3, n <= 3
    criterion(1, "Theorem 4.1 module side (N=2 symbolic, k<=3, n<=3, all tableaux)",
              theorem41_sweep(H2, 3, 3, true));

    // 2. Theorem 4.1, dual side
    criterion(2, "Theorem 4.1 dual side (N=2 symbolic, k<=3, n<=3, all tableaux)",
              theorem41_sweep(H2, 3, 3, false));

    // 3. Theorem 4.1 at N=3, sampled at three generic rational q values
    {
        bool ok = true;
        for (const Rational& q0 : {Rational(2), Rational(3, 2), Rational(5, 7)}) {
            ScalarBackend::sampled(q0);
            const auto H3 = drinfeld_jimbo<Rational>(3, q0);
            ok = ok && theorem41_sweep(H3, 3, 3, true) && theorem41_sweep(H3, 3, 3, false);
        }
        criterion(3, "Theorem 4.1 at N=3 (sampled q in {2, 3/2, 5/7}, k<=3, n<=3)", ok);
    }

    // 4. Lemma 4.3 oracle equivalence for all k+n <= 5
    {
        bool ok = true;
        for (int k = 0; k <= 4; ++k)
            for (long n = 1; k + n <= 5; ++n)
                ok = ok && monomial_action_t(H2, k, n) == power_matrices(H2, k, n).T;
        criterion(4, "Lemma 4.3 oracle equivalence (N=2 symbolic, all k+n<=5)", ok);
    }

    // 5. Lemma 4.4 projected recursions and the raw identity, k <= 3, n <= 3
    {
        bool ok = true;
        for (int k = 1; k <= 3; ++k) {
            const auto projectors = weight_projectors(H2, k);
            for (long n = 1; n <= 3; ++n)
                for (const auto& [tab, E] : projectors)
                    for (const auto& r : lemma44_check(H2, k, n, tab, E)) ok = ok && r.pass;
        }
        criterion(5, "Lemma 4.4 recursions and raw R_k J_{k+1}^n identity (k<=3, n<=3)", ok);
    }

    // 6. Cayley-Hamilton residuals vanish, k in {1,2,3}
    {
        bool ok = true;
        for (int k = 1; k <= 3; ++k)
            for (const auto& [tab, E] : weight_projectors(H2, k))
                ok = ok && cayley_hamilton_residual(H2, k, tab.shape, E, Side::V).is_zero();
        criterion(6, "Cayley-Hamilton residual is the zero operator (N=2, k<=3)", ok);
    }

    // 7. Newton relations on the character level, including a_n = 0 beyond m
    criterion(7, "Newton families on matrix-extracted characters (k<=3, n<=3, a_n=0 past m)",
              newton_sweep(H2, 3, 3));

    // 8. Generating-function identities to order x^5
    {
        bool ok = true;
        const RatFunc q = RatFunc::q();
        for (int m : {2, 3})
            for (const Partition& lam : {Partition(), Partition({1}), Partition({2, 1})})
                for (Side side : {Side::V, Side::Dual}) {
                    const auto mu = spectrum(lam, m, side, q);
                    for (const auto& r : series_identities(mu, q, 5)) ok = ok && r.pass;
                    for (int k0 = 1; k0 <= m; ++k0) {
                        if (lemma42_collides(mu, q, k0, PowerKind::p) ||
                            lemma42_collides(mu, q, k0, PowerKind::t)) {
                            bool threw = false;
                            try {
                                lemma42_check(mu, q, k0, 5);
                            } catch (const spectral_error&) {
                                threw = true;
                            }
                            ok = ok && threw;
                        } else {
                            for (const auto& r : lemma42_check(mu, q, k0, 5)) ok = ok && r.pass;
                        }
                    }
                }
        criterion(8, "Corollary 3.3 + Prop 3.4 + Lemma 4.2 series identities to x^5", ok);
    }

    // 9. Hecke-structure suite: N=2 k<=4, N=3 k<=3, exact
    criterion(9, "Idempotent suite (N=2 k<=4, N=3 k<=3): projectors, resolution, JM, heights",
              idempotent_sweep(2, 4) && idempotent_sweep(3, 3));

    // 10. Base cases for n <= 5, m in {1,2,3}
    {
        bool ok = true;
        for (long N : {1L, 2L, 3L}) {
            const auto H = drinfeld_jimbo_symbolic(N);
            const RatFunc mq = q_int(H.q, H.m);
            const auto muV = spectrum(Partition(), H.m, Side::V, H.q);
            const auto muD = spectrum(Partition(), H.m, Side::Dual, H.q);
            for (long n = 1; n <= 5; ++n) {
                const RatFunc t_exp = spow(H.q, H.m * (1 - 2 * n)) * mq;
                const RatFunc p_exp = spow(H.q, -H.m) * mq;
                const auto pm = power_matrices(H, 0, n);
                ok = ok && pm.T.entry(0, 0) == t_exp && pm.P.entry(0, 0) == p_exp;
                ok = ok && spectral_power_sum(muV, n, PowerKind::t, H.q) == t_exp;
                ok = ok && spectral_power_sum(muD, n, PowerKind::p, H.q) == p_exp;
            }
        }
        criterion(10, "Base cases T_0^n and P_0^n by matrix and by spectral routes (m<=3, n<=5)",
                  ok);
    }

    // 11. Classical limit for N in {2,3}, all |lambda| <= 3
    {
        bool ok = true;
        for (int N : {2, 3})
            for (long k = 0; k <= 3; ++k)
                for (const Partition& lam : partitions(k, N)) {
                    const ClassicalLimit cl = classical_limit(lam, N);
                    for (int i = 1; i <= N; ++i) {
                        ok = ok && cl.mu_hat[static_cast<std::size_t>(i) - 1] ==
                                       Rational(lam.part(i) - i + N);
                        Rational expect(1);
                        for (int j = 1; j <= N; ++j) {
                            if (j == i) continue;
                            const long diff = lam.part(i) - lam.part(j) + j - i;
                            expect *= Rational(diff - 1) / Rational(diff);
                        }
                        ok = ok && cl.d_hat[static_cast<std::size_t>(i) - 1] == expect;
                    }
                    ok = ok && cl.power_sums[0] == Rational(k);
                }
        criterion(11, "Classical limit values and n=1 power sum (N in {2,3}, |lambda|<=3)", ok);
    }

    // 12. Determinism: identical verify configs produce byte-identical reports
    {
        bool ok = false;
        if (!cli.empty()) {
            const std::string d1 = "/tmp/qspectra_det_1", d2 = "/tmp/qspectra_det_2";
            const std::string args =
                " verify --N 2 --k-max 2 --n-max 2 --backend sampled --samples 2 --seed 7 --out ";
            const int rc1 = std::system((cli + args + d1 + " > /dev/null").c_str());
            const int rc2 = std::system((cli + args + d2 + " > /dev/null").c_str());
            const std::string r1 = slurp(d1 + "/report.json");
            const std::string r2 = slurp(d2 + "/report.json");
            ok = rc1 == 0 && rc2 == 0 && !r1.empty() && r1 == r2;
        } else {
            // no CLI path provided: compare two in-process report serializations
            VerifyOptions opt;
            opt.k_max = 2;
            opt.n_max = 2;
            const auto a = report_to_json(verify_suite(H2, opt)).dump(2);
            const auto b = report_to_json(verify_suite(H2, opt)).dump(2);
            ok = !a.empty() && a == b;
        }
        criterion(12, "Determinism: byte-identical verify reports for identical configs", ok);
    }

    std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << " ("
              << (12 - g_failures) << "/12)\n";
    return g_failures;
}
