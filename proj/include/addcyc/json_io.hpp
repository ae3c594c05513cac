#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "search.hpp"

namespace addcyc {

using nlohmann::json;

/* ---------- code descriptors ---------- */

inline json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (auto c : p.c) arr.push_back(c);
    return arr;
}

inline Poly poly_from_json(const json& j, std::uint32_t p, const std::string& field) {
    if (!j.is_array()) throw std::runtime_error("descriptor field '" + field + "' must be an array");
    std::vector<std::uint32_t> c;
    for (const auto& v : j) {
        if (!v.is_number_unsigned() && !v.is_number_integer())
            throw std::runtime_error("descriptor field '" + field + "' has a non-integer entry");
        const long long x = v.get<long long>();
        if (x < 0 || x >= static_cast<long long>(p))
            throw std::runtime_error("descriptor field '" + field + "' has an entry outside [0, p)");
        c.push_back(static_cast<std::uint32_t>(x));
    }
    return Poly(std::move(c));
}

inline json descriptor_to_json(const CodeDescriptor& d) {
    return json{{"p", d.p}, {"n", d.n}, {"g", poly_to_json(d.g)}, {"k", poly_to_json(d.k)},
                {"h", poly_to_json(d.h)}};
}

inline CodeDescriptor descriptor_from_json(const json& j) {
    for (const char* key : {"p", "n", "g", "k", "h"})
        if (!j.contains(key)) throw std::runtime_error(std::string("descriptor missing field '") + key + "'");
    CodeDescriptor d;
    d.p = j.at("p").get<std::uint32_t>();
    d.n = j.at("n").get<std::size_t>();
    d.g = poly_from_json(j.at("g"), d.p, "g");
    d.k = poly_from_json(j.at("k"), d.p, "k");
    d.h = poly_from_json(j.at("h"), d.p, "h");
    if (d.g.degree() >= static_cast<int>(d.n) || d.k.degree() >= static_cast<int>(d.n) ||
        d.h.degree() >= static_cast<int>(d.n))
        throw std::runtime_error("descriptor polynomial degree exceeds n - 1");
    return d;
}

inline CodeDescriptor load_descriptor(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("parse error in " + path + ": " + e.what());
    }
    return descriptor_from_json(j);
}

inline void save_descriptor(const CodeDescriptor& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << descriptor_to_json(d).dump(2) << "\n";
}

/* ---------- reports and parameters ---------- */

inline json report_to_json(const OrthogonalityReport& r) {
    json units = json::array();
    for (const auto& u : r.units) {
        json ju{{"bucket", bucket_name(u.bucket)}, {"e", u.e_contribution}};
        if (u.is_pair)
            ju["pair"] = json::array({u.i, u.j});
        else
            ju["coset"] = u.i;
        units.push_back(ju);
    }
    return json{{"self_orthogonal", r.is_self_orthogonal},
                {"self_dual", r.is_self_dual},
                {"e", r.e},
                {"dim_intersection", r.dim_intersection},
                {"units", units},
                {"e2_consistent", r.e2_consistent}};
}

inline json quantum_to_json(const QuantumParams& q) {
    json j{{"p", q.p},         {"n", q.n}, {"k", q.k}, {"d_lower", q.d_lower},
           {"construction", q.construction}, {"r", q.r}};
    if (q.d_exact) j["d_exact"] = *q.d_exact;
    if (q.pure) j["pure"] = *q.pure;
    if (q.d_claimed) j["d_claimed"] = *q.d_claimed;
    return j;
}

inline json distance_to_json(const DistanceResult& d, const QuadRing* ring = nullptr) {
    json j;
    j["method"] = d.method == DistanceResult::Method::Exhaustive ? "exhaustive" : "bound_only";
    if (d.value)
        j["value"] = *d.value;
    else
        j["value"] = nullptr;  // no nonzero codeword in range
    if (d.bound) j["bound"] = *d.bound;
    if (d.witness && ring) {
        json w{{"a", poly_to_json(d.witness->a)}, {"b", poly_to_json(d.witness->b)}};
        j["witness"] = w;
    }
    return j;
}

inline json cosets_to_json(const CosetStructure& cs) {
    json jcosets = json::array(), jfactors = json::array(), jpairing = json::array(),
         jleaders = json::array(), jidem = json::array();
    for (std::size_t i = 0; i < cs.num_cosets(); ++i) {
        jcosets.push_back(cs.cosets[i]);
        jfactors.push_back(poly_to_json(cs.factors[i]));
        jpairing.push_back(cs.negation_pairing[i]);
        jleaders.push_back(cs.leaders[i]);
        jidem.push_back(poly_to_json(cs.idempotents[i]));
    }
    json self_paired = json::array();
    for (std::size_t i = 0; i < cs.num_cosets(); ++i)
        if (cs.self_paired[i]) self_paired.push_back(i);
    return json{{"n", cs.n},
                {"p", cs.p},
                {"cosets", jcosets},
                {"leaders", jleaders},
                {"factors", jfactors},
                {"negation_pairing", jpairing},
                {"self_paired", self_paired},
                {"idempotents", jidem}};
}

inline json search_record_to_json(const SearchRecord& r) {
    json j{{"code", descriptor_to_json(r.code)},
           {"classification", report_to_json(r.report)},
           {"millis", r.millis}};
    if (r.params) j["quantum"] = quantum_to_json(*r.params);
    return j;
}

inline SearchConfig search_config_from_json(const json& j) {
    SearchConfig cfg;
    if (!j.contains("n")) throw std::runtime_error("search config requires 'n'");
    cfg.n = j.at("n").get<std::size_t>();
    cfg.p = j.value("p", 2u);
    cfg.e_max = j.value("e_max", std::size_t{4});
    cfg.dim_min = j.value("dim_min", std::size_t{0});
    cfg.dim_max = j.value("dim_max", static_cast<std::size_t>(-1));
    cfg.distance_budget = j.value("distance_budget", 26);
    if (j.contains("d_target")) cfg.d_target = j.at("d_target").get<int>();
    if (j.contains("time_budget_s")) cfg.time_budget_s = j.at("time_budget_s").get<double>();
    cfg.seed = j.value("seed", std::uint64_t{0});
    cfg.emit_all = j.value("emit_all", false);
    cfg.threads = j.value("threads", 1u);
    return cfg;
}

inline json search_config_to_json(const SearchConfig& cfg) {
    json j{{"p", cfg.p},
           {"n", cfg.n},
           {"e_max", cfg.e_max},
           {"dim_min", cfg.dim_min},
           {"dim_max", cfg.dim_max},
           {"distance_budget", cfg.distance_budget},
           {"seed", cfg.seed},
           {"emit_all", cfg.emit_all},
           {"threads", cfg.threads}};
    if (cfg.d_target) j["d_target"] = *cfg.d_target;
    if (cfg.time_budget_s) j["time_budget_s"] = *cfg.time_budget_s;
    return j;
}

inline json verification_to_json(const TableVerification& v) {
    json rows = json::array();
    for (const auto& r : v.rows) {
        const char* status = r.d_status == RowVerification::DStatus::Verified   ? "verified"
                             : r.d_status == RowVerification::DStatus::Deferred ? "deferred"
                                                                                : "failed";
        json jr{{"row", r.row},       {"canonical_ok", r.canonical_ok}, {"dim_ok", r.dim_ok},
                {"e_ok", r.e_ok},     {"params_ok", r.params_ok},       {"d_status", status},
                {"d_lower", r.d_lower}, {"d_claimed", r.d_claimed},     {"pass", r.pass()}};
        if (r.d_exact) jr["d_exact"] = *r.d_exact;
        if (!r.message.empty()) jr["note"] = r.message;
        rows.push_back(jr);
    }
    return json{{"rows", rows}, {"all_pass", v.all_pass}};
}

/* ---------- previous best-known parameters (CSV, columns n,k,d) ---------- */

struct BestKnownTable {
    std::vector<std::tuple<std::size_t, std::size_t, int>> entries;

    std::optional<int> lookup(std::size_t n, std::size_t k) const {
        for (const auto& [en, ek, ed] : entries)
            if (en == n && ek == k) return ed;
        return std::nullopt;
    }
};

inline BestKnownTable load_best_known_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    BestKnownTable table;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        if (lineno == 1 && line.find("n,k,d") == 0) continue;  // header
        std::istringstream ss(line);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (fields.size() != 3)
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected n,k,d");
        table.entries.emplace_back(std::stoul(fields[0]), std::stoul(fields[1]), std::stoi(fields[2]));
    }
    return table;
}

}  // namespace addcyc
