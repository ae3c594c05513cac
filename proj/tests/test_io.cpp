#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "addcyc/json_io.hpp"
#include "oracles.hpp"

using namespace addcyc;

#ifndef ADDCYC_DATA_DIR
#define ADDCYC_DATA_DIR "data"
#endif

namespace {

const std::string kDataDir = ADDCYC_DATA_DIR;

std::uint64_t fnv1a_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::uint64_t h = 14695981039346656037ULL;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace

TEST_SUITE("io") {
    TEST_CASE("descriptor round trip") {
        auto gen = oracles::rng(81);
        for (auto [n, p] : std::vector<std::pair<std::size_t, std::uint32_t>>{{9, 2}, {8, 3}}) {
            auto cs = CosetStructure::get(n, p);
            for (int it = 0; it < 20; ++it) {
                AdditiveCyclicCode C = oracles::random_component_code(gen, cs);
                CodeDescriptor d = descriptor_of(C);
                CodeDescriptor back = descriptor_from_json(descriptor_to_json(d));
                CHECK(back == d);
                CHECK(code_from_descriptor(back) == C);
            }
        }
    }

    TEST_CASE("canonicalization is idempotent after one pass") {
        auto gen = oracles::rng(82);
        auto cs = CosetStructure::get(15, 2);
        for (int it = 0; it < 25; ++it) {
            // an arbitrary (possibly non-canonical) triple, fed through a parse cycle
            CodeDescriptor raw;
            raw.p = 2;
            raw.n = 15;
            raw.g = cyclic_reduce(cs->field, oracles::random_poly(gen, cs->field, 15), 15);
            raw.k = cyclic_reduce(cs->field, oracles::random_poly(gen, cs->field, 15), 15);
            raw.h = cyclic_reduce(cs->field, oracles::random_poly(gen, cs->field, 15), 15);
            CodeDescriptor once = descriptor_of(code_from_descriptor(raw));
            CodeDescriptor twice = descriptor_of(code_from_descriptor(once));
            CHECK(once == twice);
        }
    }

    TEST_CASE("parse errors carry the offending field") {
        json bad = {{"p", 2}, {"n", 7}, {"g", {0, 1}}, {"k", json::array()}, {"h", {2}}};
        CHECK_THROWS_WITH_AS(descriptor_from_json(bad),
                             "descriptor field 'h' has an entry outside [0, p)", std::runtime_error);
        json missing = {{"p", 2}, {"n", 7}, {"g", json::array()}, {"k", json::array()}};
        CHECK_THROWS_WITH_AS(descriptor_from_json(missing), "descriptor missing field 'h'",
                             std::runtime_error);
        json too_long = {{"p", 2},
                         {"n", 3},
                         {"g", {1, 0, 0, 1}},
                         {"k", json::array()},
                         {"h", json::array()}};
        CHECK_THROWS_AS(descriptor_from_json(too_long), std::runtime_error);

        json wrong_type = {{"p", 2}, {"n", 7}, {"g", "x+1"}, {"k", json::array()}, {"h", json::array()}};
        CHECK_THROWS_WITH_AS(descriptor_from_json(wrong_type),
                             "descriptor field 'g' must be an array", std::runtime_error);
        json frac = {{"p", 2}, {"n", 7}, {"g", {0.5}}, {"k", json::array()}, {"h", json::array()}};
        CHECK_THROWS_AS(descriptor_from_json(frac), std::runtime_error);
        json negative = {{"p", 5}, {"n", 4}, {"g", {-1}}, {"k", json::array()}, {"h", json::array()}};
        CHECK_THROWS_AS(descriptor_from_json(negative), std::runtime_error);
    }

    TEST_CASE("search config defaults and round trip") {
        SearchConfig cfg = search_config_from_json(json{{"n", 21}});
        CHECK(cfg.p == 2);
        CHECK(cfg.e_max == 4);
        CHECK(cfg.distance_budget == 26);
        CHECK_FALSE(cfg.emit_all);
        SearchConfig full = search_config_from_json(
            json{{"n", 7}, {"p", 2}, {"e_max", 2}, {"d_target", 3}, {"emit_all", true}});
        CHECK(full.d_target == 3);
        CHECK(full.emit_all);
        json j = search_config_to_json(full);
        SearchConfig back = search_config_from_json(j);
        CHECK(back.n == full.n);
        CHECK(back.e_max == full.e_max);
        CHECK(back.d_target == full.d_target);
        CHECK_THROWS_AS(search_config_from_json(json::object()), std::runtime_error);
    }

    TEST_CASE("bundled data files are intact") {
        const std::vector<std::pair<std::string, std::uint64_t>> expected = {
            {"previous_best.csv", 0x20deea368cc9534bULL},
            {"table2/row01.json", 0x08807428551873a6ULL},
            {"table2/row02.json", 0xc47943b77fc965d4ULL},
            {"table2/row03.json", 0x9060a97b40a584f7ULL},
            {"table2/row04.json", 0xecbe45e814c56b25ULL},
            {"table2/row05.json", 0x5d0b943f7554b7eaULL},
            {"table2/row06.json", 0xb7776dfeddf4478fULL},
            {"table2/row07.json", 0xed935bed18116553ULL},
            {"table2/row08.json", 0x79991a187924e840ULL},
            {"table2/row09.json", 0xcbc341869e11dc31ULL},
            {"table2/row10.json", 0xed6099e3612f38d2ULL},
        };
        for (const auto& [file, hash] : expected) {
            CAPTURE(file);
            CHECK(fnv1a_file(kDataDir + "/" + file) == hash);
        }
    }

    TEST_CASE("best-known table lookup") {
        BestKnownTable t = load_best_known_csv(kDataDir + "/previous_best.csv");
        CHECK(t.entries.size() == 10);
        CHECK(t.lookup(22, 2) == 6);
        CHECK(t.lookup(64, 35) == 7);
        CHECK_FALSE(t.lookup(1, 1).has_value());
        // every bundled row beats its previous best
        for (const auto& row : table1_expectations()) {
            auto prev = t.lookup(row.qn, row.qk);
            REQUIRE(prev.has_value());
            CHECK(row.d_claimed == *prev + 1);
        }
    }

    TEST_CASE("search record serialization shape") {
        SearchConfig cfg;
        cfg.p = 2;
        cfg.n = 7;
        cfg.e_max = 0;
        cfg.emit_all = true;
        std::vector<SearchRecord> records;
        enumerate_with_e_budget(cfg, [&](const SearchRecord& r) {
            records.push_back(r);
            return records.size() < 3;
        });
        REQUIRE(!records.empty());
        json j = search_record_to_json(records.front());
        CHECK(j.contains("code"));
        CHECK(j.contains("classification"));
        CHECK(j.contains("quantum"));
        CHECK(j["classification"]["e"] == 0);
    }

    TEST_CASE("cosets dump carries factors and pairing") {
        json j = cosets_to_json(*CosetStructure::get(7, 2));
        CHECK(j["n"] == 7);
        CHECK(j["cosets"].size() == 3);
        CHECK(j["factors"].size() == 3);
        CHECK(j["negation_pairing"].size() == 3);
        // x^3 + x + 1 and x^3 + x^2 + 1 appear among the factors
        std::set<std::vector<int>> factors;
        for (const auto& f : j["factors"]) factors.insert(f.get<std::vector<int>>());
        CHECK(factors.count({1, 1, 0, 1}) == 1);
        CHECK(factors.count({1, 0, 1, 1}) == 1);
    }
}
