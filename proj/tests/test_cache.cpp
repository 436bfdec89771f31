#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <sstream>

#include "grex/cache.hpp"
#include "grex/comb.hpp"

using namespace grex;

TEST_CASE("record stream round-trips arbitrary payloads") {
    std::vector<std::string> payloads{"", "hello", "two\nlines", std::string(1000, 'x'),
                                      "unicode \xc3\xa9\xc2\xb5", "spaces   and\ttabs"};
    std::stringstream buf;
    for (auto& p : payloads) write_record(buf, p);
    std::string got;
    for (auto& p : payloads) {
        REQUIRE(read_record(buf, got));
        CHECK(got == p);
    }
    CHECK(!read_record(buf, got));
}

TEST_CASE("malformed streams are rejected") {
    std::string payload;
    {
        std::stringstream buf("notanumber\nxyz\n");
        CHECK_THROWS_AS(read_record(buf, payload), CacheError);
    }
    {
        std::stringstream buf("10\nshort\n");
        CHECK_THROWS_AS(read_record(buf, payload), CacheError);
    }
    {
        std::stringstream buf("3\nabcX");
        CHECK_THROWS_AS(read_record(buf, payload), CacheError);
    }
}

TEST_CASE("exchange-graph cache round-trips byte-identically") {
    Registry reg(3, 6);
    Seed s0 = build_initial_seed(3, 6, reg);
    auto g = explore(s0, reg, ExploreCaps{});
    REQUIRE(g.closed);

    GraphCache before = make_cache(g, reg);
    CHECK(before.seeds.size() == 50);
    CHECK(before.variables.size() == 16 + 6);

    std::string path = "test_cache_g36.bin";
    write_cache(path, before);
    GraphCache after = read_cache(path);
    CHECK(before == after);

    // writing the reread cache reproduces the file byte for byte
    std::string path2 = "test_cache_g36_rewrite.bin";
    write_cache(path2, after);
    auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    CHECK(slurp(path) == slurp(path2));
    std::remove(path.c_str());
    std::remove(path2.c_str());

    // every cached polynomial parses back to the registry's canonical form
    for (auto& [name, poly] : after.variables) {
        VarId v = parse_varid(name);
        CHECK(lp_parse(poly) == reg.value(v));
    }
}
