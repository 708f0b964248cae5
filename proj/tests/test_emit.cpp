#include <catch_amalgamated.hpp>

#include "treeheight/emit.hpp"

using namespace treeheight;

TEST_CASE("moment table JSON schema and exact string numerals") {
    auto spec = validate_family({2});
    auto g = moment_series(spec, 4, 9);
    auto t = moment_table_at(spec, g, 7);
    REQUIRE(t.has_value());
    auto j = moment_table_json(*t, 30);
    CHECK(j["family"] == Json::array({2}));
    CHECK(j["n"] == 7);
    CHECK(j["f_n"] == "5");
    CHECK(j["mu"] == "58/5");
    CHECK(j["m"][0] == "16/25");
    CHECK(j["alpha"][0] == "-1.5");
}

TEST_CASE("JSON output round-trips byte-identically") {
    auto spec = validate_family({1, 2});
    auto g = moment_series(spec, 4, 30);
    Json payload = Json::array();
    for (long n : {5L, 12L, 30L}) {
        auto t = moment_table_at(spec, g, n);
        REQUIRE(t.has_value());
        payload.push_back(moment_table_json(*t, 30));
    }
    std::string emitted = payload.dump(2);
    std::string reemitted = Json::parse(emitted).dump(2);
    CHECK(emitted == reemitted);

    auto sj = solve_json(spec, g);
    CHECK(sj.dump(2) == Json::parse(sj.dump(2)).dump(2));
}

TEST_CASE("solve JSON exposes f and g_r as string arrays") {
    auto spec = validate_family({2});
    auto g = moment_series(spec, 2, 9);
    auto j = solve_json(spec, g);
    std::vector<std::string> f = j["f"];
    CHECK(f == std::vector<std::string>{"0", "1", "0", "1", "0", "2", "0", "5", "0", "14"});
    std::vector<std::string> g1 = j["g"]["g1"];
    CHECK(g1[3] == "2");
    CHECK(g1[5] == "12");
    CHECK(g1[7] == "58");
}

TEST_CASE("limit estimate JSON carries samples and errors as strings") {
    std::vector<std::pair<long, Dec>> samples;
    for (long n : {100L, 400L, 1600L, 6400L}) samples.push_back({n, Dec("2.5", 256)});
    auto est = limit_estimate(3, samples, Dec("2.5", 256));
    auto j = limit_estimate_json(est, 30);
    CHECK(j["i"] == 3);
    CHECK(j["samples"].size() == 4);
    CHECK(j["samples"][0][0] == 100);
    CHECK(j["samples"][0][1] == "2.5");
    CHECK(j["target"] == "2.5");
}

TEST_CASE("CSV mirrors the JSON columns") {
    auto spec = validate_family({2});
    auto g = moment_series(spec, 3, 9);
    auto t = moment_table_at(spec, g, 7);
    REQUIRE(t.has_value());
    auto csv = moment_tables_csv({*t}, 30);
    CHECK(csv.find("family,n,f_n,mu,m2,m3,alpha3") == 0);
    CHECK(csv.find("7,5,58/5,16/25") != std::string::npos);
    CHECK(csv.find("-1.5") != std::string::npos);
}

TEST_CASE("decimal rendering") {
    CHECK(dec_to_string(Dec("0.25", 128), 10) == "0.25");
    CHECK(dec_to_string(Dec("-1.5", 128), 10) == "-1.5");
    CHECK(dec_to_string(Dec(0, 128), 10) == "0");
    CHECK(dec_to_string(Dec("1460.5", 128), 10) == "1460.5");
    CHECK(dec_to_string(Dec(1024, 128), 4) == "1024");
}
