#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qspectra/verify.hpp"

namespace qspectra {

using json = nlohmann::ordered_json;

class io_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Tensor dumps (dense debugging/golden format)
// ---------------------------------------------------------------------------

template <class S>
json tensor_to_json(const TensorOp<S>& T) {
    json out;
    out["leg_count"] = T.legs();
    out["leg_dim"] = T.dim();
    const Index n = T.side();
    json rows = json::array();
    for (Index r = 0; r < n; ++r) {
        json row = json::array();
        for (Index c = 0; c < n; ++c) row.push_back(scalar_str(T.entry(r, c)));
        rows.push_back(std::move(row));
    }
    out["entries"] = std::move(rows);
    return out;
}

inline TensorOp<RatFunc> tensor_from_json(const json& j) {
    const int legs = j.at("leg_count").get<int>();
    const long dim = j.at("leg_dim").get<long>();
    TensorOp<RatFunc> T(legs, dim);
    const auto& rows = j.at("entries");
    Index r = 0;
    for (const auto& row : rows) {
        Index c = 0;
        for (const auto& cell : row) {
            RatFunc v = parse_scalar(cell.get<std::string>());
            if (!v.is_zero()) T.set(r, c, v);
            ++c;
        }
        ++r;
    }
    return T;
}

// ---------------------------------------------------------------------------
// R-matrix input files: {"N": n, "R": dense N^2 x N^2 row-major entries in
// the scalar grammar (nested rows or a flat array)}
// ---------------------------------------------------------------------------

inline TensorOp<RatFunc> load_r_matrix(const json& j, long& N_out) {
    const long N = j.at("N").get<long>();
    if (N < 1) throw io_error("R-matrix file: invalid N");
    const Index side = static_cast<Index>(N) * static_cast<Index>(N);
    TensorOp<RatFunc> R(2, N);
    const auto& arr = j.at("R");
    if (!arr.is_array()) throw io_error("R-matrix file: R must be an array");
    std::vector<std::string> flat;
    if (!arr.empty() && arr.front().is_array()) {
        for (const auto& row : arr)
            for (const auto& cell : row) flat.push_back(cell.get<std::string>());
    } else {
        for (const auto& cell : arr) flat.push_back(cell.get<std::string>());
    }
    if (flat.size() != static_cast<std::size_t>(side) * side)
        throw io_error("R-matrix file: expected " + std::to_string(side * side) + " entries, got " +
                       std::to_string(flat.size()));
    std::size_t idx = 0;
    for (Index r = 0; r < side; ++r)
        for (Index c = 0; c < side; ++c) {
            RatFunc v = parse_scalar(flat[idx++]);
            if (!v.is_zero()) R.set(r, c, v);
        }
    N_out = N;
    return R;
}

inline TensorOp<RatFunc> load_r_matrix_file(const std::string& path, long& N_out) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open R-matrix file: " + path);
    json j;
    in >> j;
    return load_r_matrix(j, N_out);
}

// ---------------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------------

inline json report_to_json(const std::vector<CheckResult>& rs) {
    json arr = json::array();
    for (const auto& r : rs) {
        json e;
        e["check_name"] = r.name;
        e["parameters"] = r.params;
        e["pass"] = r.pass;
        if (r.skipped) e["skipped"] = true;
        if (!r.witness.empty()) e["witness"] = r.witness;
        arr.push_back(std::move(e));
    }
    return arr;
}

// ---------------------------------------------------------------------------
// Character tables
// ---------------------------------------------------------------------------

/// One table record per (lambda, side), plus the classical block on the V
/// side. Scalars are rendered through the scalar grammar.
inline json character_table(int m, int k_max, long n_max) {
    const RatFunc q = RatFunc::q();
    json entries = json::array();
    for (long k = 0; k <= k_max; ++k) {
        for (const Partition& lam : partitions(k, m)) {
            for (Side side : {Side::V, Side::Dual}) {
                json e;
                e["m"] = m;
                e["lambda"] = lam.parts;
                e["side"] = side_str(side);
                const auto mu = spectrum(lam, m, side, q);
                json mus = json::array();
                for (const auto& v : mu) mus.push_back(scalar_str(v));
                e["mu"] = std::move(mus);
                std::vector<RatFunc> plist;
                json p = json::object(), t = json::object(), a = json::object();
                for (long n = 1; n <= n_max; ++n) {
                    plist.push_back(spectral_power_sum(mu, n, PowerKind::p, q));
                    p[std::to_string(n)] = scalar_str(plist.back());
                    t[std::to_string(n)] =
                        scalar_str(spectral_power_sum(mu, n, PowerKind::t, q));
                }
                const auto alist = newton_convert(NewtonKind::a_from_p, plist, m, q);
                for (long n = 1; n <= n_max; ++n)
                    a[std::to_string(n)] = scalar_str(alist[static_cast<std::size_t>(n) - 1]);
                e["p"] = std::move(p);
                e["t"] = std::move(t);
                e["a"] = std::move(a);
                if (side == Side::V) {
                    ClassicalLimit cl = classical_limit(lam, m, static_cast<int>(n_max));
                    json c;
                    json mq = json::array(), ml = json::array(), dl = json::array(),
                         ps = json::array();
                    for (const auto& v : cl.mu_hat_q) mq.push_back(scalar_str(v));
                    for (const auto& v : cl.mu_hat) ml.push_back(rat_str(v));
                    for (const auto& v : cl.d_hat) dl.push_back(rat_str(v));
                    for (const auto& v : cl.power_sums) ps.push_back(rat_str(v));
                    c["mu_hat_q"] = std::move(mq);
                    c["mu_hat"] = std::move(ml);
                    c["d_hat"] = std::move(dl);
                    c["power_sums"] = std::move(ps);
                    e["classical"] = std::move(c);
                }
                entries.push_back(std::move(e));
            }
        }
    }
    return entries;
}

/// Flat CSV projection of the character table: one row per (lambda, side,
/// quantity, index).
inline std::string character_table_csv(int m, int k_max, long n_max) {
    std::ostringstream os;
    os << "lambda,side,quantity,n,value\n";
    const json entries = character_table(m, k_max, n_max);
    auto lam_str = [](const json& e) {
        std::string s = "(";
        bool first = true;
        for (const auto& p : e.at("lambda")) {
            if (!first) s += " ";
            s += std::to_string(p.get<long>());
            first = false;
        }
        return s + ")";
    };
    auto quote = [](const std::string& s) { return "\"" + s + "\""; };
    for (const auto& e : entries) {
        const std::string lam = lam_str(e), side = e.at("side").get<std::string>();
        int i = 1;
        for (const auto& v : e.at("mu"))
            os << quote(lam) << "," << quote(side) << ",mu," << i++ << ","
               << quote(v.get<std::string>()) << "\n";
        for (const char* qty : {"p", "t", "a"})
            for (const auto& [n, v] : e.at(qty).items())
                os << quote(lam) << "," << quote(side) << "," << qty << "," << n << ","
                   << quote(v.get<std::string>()) << "\n";
        if (e.contains("classical")) {
            const auto& c = e.at("classical");
            for (const char* qty : {"mu_hat_q", "mu_hat", "d_hat", "power_sums"}) {
                int j = 1;
                for (const auto& v : c.at(qty))
                    os << quote(lam) << "," << quote(side) << ",classical_" << qty << "," << j++
                       << "," << quote(v.get<std::string>()) << "\n";
            }
        }
    }
    return os.str();
}

/// Classical-limit record for one partition.
inline json classical_limit_json(const Partition& lam, int N, int n_max) {
    ClassicalLimit cl = classical_limit(lam, N, n_max);
    json e;
    e["N"] = N;
    e["lambda"] = lam.parts;
    json mq = json::array(), ml = json::array(), dl = json::array(), ps = json::array();
    for (const auto& v : cl.mu_hat_q) mq.push_back(scalar_str(v));
    for (const auto& v : cl.mu_hat) ml.push_back(rat_str(v));
    for (const auto& v : cl.d_hat) dl.push_back(rat_str(v));
    for (const auto& v : cl.power_sums) ps.push_back(rat_str(v));
    e["mu_hat_q"] = std::move(mq);
    e["mu_hat"] = std::move(ml);
    e["d_hat"] = std::move(dl);
    e["power_sums"] = std::move(ps);
    return e;
}

}  // namespace qspectra
