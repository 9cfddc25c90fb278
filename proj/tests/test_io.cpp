#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace qspectra;

namespace {
const HeckeSymmetry<RatFunc>& dj2() {
    static const HeckeSymmetry<RatFunc> H = drinfeld_jimbo_symbolic(2);
    return H;
}
}  // namespace

TEST_CASE("tensor dump round trip") {
    const auto& H = dj2();
    json j = tensor_to_json(H.R);
    CHECK(j["leg_count"] == 2);
    CHECK(j["leg_dim"] == 2);
    CHECK(j["entries"].size() == 4);
    CHECK(tensor_from_json(j) == H.R);

    std::mt19937_64 rng(8);
    for (int i = 0; i < 5; ++i) {
        auto T = qtest::random_tensor(rng, 2, 2, 5);
        CHECK(tensor_from_json(tensor_to_json(T)) == T);
    }
}

TEST_CASE("R-matrix file loading") {
    const auto& H = dj2();
    json file;
    file["N"] = 2;
    file["R"] = tensor_to_json(H.R)["entries"];

    SECTION("nested rows") {
        long N = 0;
        auto R = load_r_matrix(file, N);
        CHECK(N == 2);
        CHECK(R == H.R);
        auto H2 = hecke_from_braiding(R);
        CHECK(H2.q == RatFunc::q());
        CHECK(H2.m == 2);
    }
    SECTION("flat row-major array") {
        json flat = json::array();
        for (const auto& row : file["R"])
            for (const auto& cell : row) flat.push_back(cell);
        json file2;
        file2["N"] = 2;
        file2["R"] = flat;
        long N = 0;
        CHECK(load_r_matrix(file2, N) == H.R);
    }
    SECTION("bad entry counts are rejected") {
        json file3;
        file3["N"] = 2;
        file3["R"] = json::array({"q", "1"});
        long N = 0;
        CHECK_THROWS_AS(load_r_matrix(file3, N), io_error);
    }
    SECTION("invalid N is rejected") {
        json file4;
        file4["N"] = 0;
        file4["R"] = json::array();
        long N = 0;
        CHECK_THROWS_AS(load_r_matrix(file4, N), io_error);
    }
}

TEST_CASE("report serialization") {
    std::vector<CheckResult> rs;
    rs.push_back({"braid", "", true, false, ""});
    rs.push_back({"hecke", "k=2", false, false, "nonzero"});
    rs.push_back({"big", "k=9", true, true, "skipped: symbolic resource cap"});
    json j = report_to_json(rs);
    REQUIRE(j.size() == 3);
    CHECK(j[0]["check_name"] == "braid");
    CHECK(j[0]["pass"] == true);
    CHECK(!j[0].contains("witness"));
    CHECK(j[1]["pass"] == false);
    CHECK(j[1]["witness"] == "nonzero");
    CHECK(j[2]["skipped"] == true);
}

TEST_CASE("character table layout") {
    json entries = character_table(2, 2, 3);
    // partitions of 0..2 with height <= 2: (), (1), (2), (1,1); two sides each
    REQUIRE(entries.size() == 8);
    CHECK(entries[0]["side"] == "V");
    CHECK(entries[1]["side"] == "V*");
    SECTION("vacuum spectra") {
        const auto& e = entries[0];
        CHECK(e["m"] == 2);
        CHECK(e["lambda"].size() == 0);
        CHECK(e["mu"][0] == "q^-2");
        CHECK(e["mu"][1] == "1");
        CHECK(e.contains("classical"));
        CHECK(!entries[1].contains("classical"));
    }
    SECTION("characters agree with the closed formulas") {
        const auto& e = entries[2];  // lambda = (1), side V
        REQUIRE(e["lambda"].size() == 1);
        const RatFunc p1 = parse_scalar(e["p"]["1"].get<std::string>());
        CHECK(p1 == closed_character_p(Partition({1}), 2, 1, Side::V, RatFunc::q()));
    }
    SECTION("deterministic output") {
        CHECK(character_table(2, 2, 3).dump(2) == entries.dump(2));
    }
}

TEST_CASE("character table CSV") {
    const std::string csv = character_table_csv(1, 1, 2);
    CHECK(csv.rfind("lambda,side,quantity,n,value\n", 0) == 0);
    CHECK(csv.find("\"()\",\"V\",mu,1,") != std::string::npos);
    CHECK(csv.find(",p,1,") != std::string::npos);
    CHECK(csv.find("classical_mu_hat") != std::string::npos);
    CHECK(character_table_csv(1, 1, 2) == csv);
}

TEST_CASE("classical limit record") {
    json j = classical_limit_json(Partition({2, 1}), 3, 2);
    CHECK(j["N"] == 3);
    CHECK(j["mu_hat"] == json::array({"4", "2", "0"}));
    CHECK(j["power_sums"][0] == "3");
}
