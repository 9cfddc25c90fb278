// Command-line driver: character tables, identity verification, classical limits.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "qspectra/qspectra.hpp"

namespace {

using namespace qspectra;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceCap = 3;

struct Options {
    long N = 2;
    int k_max = 3;
    long n_max = 3;
    std::string backend = "symbolic";
    int samples = 3;
    unsigned long seed = 1;
    std::string r_matrix;
    std::string output = "json";
    std::string out_dir;
    std::string lambda_csv;
};

Partition parse_lambda(const std::string& text) {
    std::vector<long> parts;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (!cur.empty()) parts.push_back(std::stol(cur));
            cur.clear();
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            cur.push_back(ch);
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            throw combinatorics_error("invalid character in partition: " + text);
        }
    }
    return Partition(parts);
}

/// Deterministic generic sample values: rationals a/b with 2 <= a,b <= 97,
/// a != b, passing the generic-q guard.
std::vector<Rational> draw_samples(unsigned long seed, int count) {
    std::mt19937_64 rng(seed);
    std::vector<Rational> out;
    while (static_cast<int>(out.size()) < count) {
        const long a = 2 + static_cast<long>(rng() % 96);
        const long b = 2 + static_cast<long>(rng() % 96);
        if (a == b) continue;
        Rational q0(a, b);
        q0.canonicalize();
        bool dup = false;
        for (const auto& prev : out)
            if (prev == q0) dup = true;
        if (dup) continue;
        try {
            ScalarBackend::sampled(q0);
        } catch (const scalar_error&) {
            continue;
        }
        out.push_back(q0);
    }
    return out;
}

void write_or_print(const std::string& out_dir, const std::string& filename,
                    const std::string& payload) {
    if (out_dir.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::filesystem::create_directories(out_dir);
    const std::string path = out_dir + "/" + filename;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io_error("cannot write " + path);
    f << payload << "\n";
    std::cout << "wrote " << path << "\n";
}

HeckeSymmetry<RatFunc> build_symbolic(const Options& opt) {
    if (!opt.r_matrix.empty()) {
        long N = 0;
        TensorOp<RatFunc> R = load_r_matrix_file(opt.r_matrix, N);
        return hecke_from_braiding(std::move(R));
    }
    return drinfeld_jimbo_symbolic(opt.N);
}

int cmd_table(const Options& opt) {
    int m = static_cast<int>(opt.N);
    if (!opt.r_matrix.empty()) m = build_symbolic(opt).m;
    if (opt.output == "csv") {
        write_or_print(opt.out_dir, "table.csv", character_table_csv(m, opt.k_max, opt.n_max));
    } else {
        json doc;
        doc["m"] = m;
        doc["k_max"] = opt.k_max;
        doc["n_max"] = opt.n_max;
        doc["entries"] = character_table(m, opt.k_max, opt.n_max);
        write_or_print(opt.out_dir, "table.json", doc.dump(2));
    }
    return kExitOk;
}

int emit_report(const Options& opt, json config, const std::vector<CheckResult>& all) {
    std::size_t fails = 0, skips = 0;
    for (const auto& r : all) {
        if (r.skipped) {
            ++skips;
        } else if (!r.pass) {
            ++fails;
            std::cout << "FAIL " << r.name << " [" << r.params << "] " << r.witness << "\n";
        }
    }
    std::cout << "checks: " << all.size() << "  failed: " << fails << "  skipped: " << skips
              << "\n";
    json doc;
    doc["config"] = std::move(config);
    doc["total"] = all.size();
    doc["failed"] = fails;
    doc["skipped"] = skips;
    doc["checks"] = report_to_json(all);
    write_or_print(opt.out_dir, "report.json", doc.dump(2));
    if (fails > 0) return kExitCheckFailure;
    if (skips > 0) return kExitResourceCap;
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    std::vector<CheckResult> all;
    VerifyOptions vopt;
    vopt.k_max = opt.k_max;
    vopt.n_max = opt.n_max;

    json config;
    config["command"] = "verify";
    config["k_max"] = opt.k_max;
    config["n_max"] = opt.n_max;
    config["backend"] = opt.backend;

    HeckeSymmetry<RatFunc> Hsym;
    if (!opt.r_matrix.empty()) {
        config["r_matrix"] = opt.r_matrix;
        long N = 0;
        TensorOp<RatFunc> R = load_r_matrix_file(opt.r_matrix, N);
        config["N"] = N;
        auto built = diagnose_braiding(R, all);
        if (!built) return emit_report(opt, std::move(config), all);
        Hsym = std::move(*built);
        all.clear();  // the suite re-runs the structural checks
    } else {
        Hsym = drinfeld_jimbo_symbolic(opt.N);
        config["N"] = Hsym.N;
    }
    config["m"] = Hsym.m;

    if (opt.backend == "sampled") {
        vopt.symbolic = false;
        const auto q0s = draw_samples(opt.seed, opt.samples);
        json qs = json::array();
        for (const auto& q0 : q0s) qs.push_back(rat_str(q0));
        config["seed"] = opt.seed;
        config["samples"] = opt.samples;
        config["q_values"] = qs;
        for (const auto& q0 : q0s) {
            HeckeSymmetry<Rational> H = sample_hecke(Hsym, q0);
            for (auto r : verify_suite(H, vopt)) {
                r.params = "q0=" + rat_str(q0) + (r.params.empty() ? "" : " " + r.params);
                all.push_back(std::move(r));
            }
        }
    } else {
        vopt.symbolic = true;
        for (auto& r : verify_suite(Hsym, vopt)) all.push_back(std::move(r));
    }
    for (auto& r : verify_classical(static_cast<int>(Hsym.m), std::min<long>(opt.k_max, 3),
                                    static_cast<int>(opt.n_max)))
        all.push_back(std::move(r));

    return emit_report(opt, std::move(config), all);
}

int cmd_limit(const Options& opt) {
    const Partition lam = parse_lambda(opt.lambda_csv);
    if (lam.height() > opt.N) throw combinatorics_error("partition height exceeds N");
    json doc = classical_limit_json(lam, static_cast<int>(opt.N), static_cast<int>(opt.n_max));
    write_or_print(opt.out_dir, "limit.json", doc.dump(2));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qspectra: exact character workbench for GL(m)-type reflection equation algebras"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&opt](CLI::App* sub, bool wants_backend) {
        sub->add_option("--N", opt.N, "leg dimension / bi-rank of the built-in symmetry")
            ->check(CLI::PositiveNumber);
        sub->add_option("--k-max", opt.k_max, "largest tensor power");
        sub->add_option("--n-max", opt.n_max, "largest power-sum order");
        sub->add_option("--r-matrix", opt.r_matrix, "JSON file with a user-supplied braiding");
        sub->add_option("--out", opt.out_dir, "output directory (default: print to stdout)");
        if (wants_backend) {
            sub->add_option("--backend", opt.backend, "symbolic | sampled")
                ->check(CLI::IsMember({"symbolic", "sampled"}));
            sub->add_option("--samples", opt.samples, "number of sampled q values")
                ->check(CLI::PositiveNumber);
            sub->add_option("--seed", opt.seed, "seed for the sampled-q draw");
        }
    };

    CLI::App* table = app.add_subcommand("table", "emit character tables");
    add_common(table, false);
    table->add_option("--output", opt.output, "json | csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI::App* verify = app.add_subcommand("verify", "run the identity verification suite");
    add_common(verify, true);

    CLI::App* limit = app.add_subcommand("limit", "classical q -> 1 limit data for one partition");
    add_common(limit, false);
    limit->add_option("--lambda", opt.lambda_csv, "partition, e.g. 2,1,0")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (table->parsed()) return cmd_table(opt);
        if (verify->parsed()) return cmd_verify(opt);
        if (limit->parsed()) return cmd_limit(opt);
    } catch (const combinatorics_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
