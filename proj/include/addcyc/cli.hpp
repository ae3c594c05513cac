#pragma once

/*
 * Library side of the command line surface: every subcommand body lives
 * here and returns JSON, so the binary stays a thin argv adapter and tests
 * can compare its output byte for byte against direct calls.
 */

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace addcyc::cli {

inline json run_cosets(std::size_t n, std::uint32_t p) {
    return cosets_to_json(*CosetStructure::get(n, p));
}

inline std::string cosets_text(std::size_t n, std::uint32_t p) {
    auto cs = CosetStructure::get(n, p);
    std::ostringstream os;
    os << "p-cyclotomic cosets mod " << n << " (p = " << p << "), " << cs->num_cosets()
       << " cosets\n";
    for (std::size_t i = 0; i < cs->num_cosets(); ++i) {
        os << "  Z[" << i << "] leader " << cs->leaders[i] << " size " << cs->coset_size(i) << " {";
        for (std::size_t t = 0; t < cs->cosets[i].size(); ++t)
            os << (t ? "," : "") << cs->cosets[i][t];
        os << "}  f = " << poly_to_string(cs->factors[i]) << "  pair -> " << cs->negation_pairing[i]
           << (cs->self_paired[i] ? " (self)" : "") << "\n";
    }
    return os.str();
}

inline json run_info(const CodeDescriptor& desc) {
    AdditiveCyclicCode C = code_from_descriptor(desc);
    const CosetStructure& cs = C.cosets();
    json comps = json::array();
    for (std::size_t i = 0; i < cs.num_cosets(); ++i) {
        const auto& f = C.components()[i];
        json jc{{"coset", i}, {"leader", cs.leaders[i]}, {"size", cs.coset_size(i)}};
        switch (f.kind) {
            case ComponentKind::Zero: jc["form"] = "zero"; break;
            case ComponentKind::OneGenPlain: jc["form"] = "plain"; break;
            case ComponentKind::OneGenOmega:
                jc["form"] = "omega";
                jc["s"] = poly_to_json(f.s);
                break;
            case ComponentKind::FullN: jc["form"] = "full"; break;
        }
        jc["dim"] = cs.coset_size(i) * f.generator_count();
        comps.push_back(jc);
    }
    return json{{"p", C.p()},
                {"n", C.n()},
                {"dimension", C.dimension()},
                {"linear", C.is_linear()},
                {"canonical", descriptor_to_json(descriptor_of(C))},
                {"components", comps}};
}

inline std::string info_text(const CodeDescriptor& desc) {
    AdditiveCyclicCode C = code_from_descriptor(desc);
    std::ostringstream os;
    os << "additive cyclic code over F_" << C.p() * C.p() << ", length " << C.n() << "\n"
       << "  dimension (over F_" << C.p() << "): " << C.dimension() << "\n"
       << "  linear over F_" << C.p() * C.p() << ": " << (C.is_linear() ? "yes" : "no") << "\n"
       << "  g = " << poly_to_string(C.gen_g()) << "\n"
       << "  k = " << poly_to_string(C.gen_k()) << "\n"
       << "  h = " << poly_to_string(C.gen_h()) << "\n";
    const CosetStructure& cs = C.cosets();
    for (std::size_t i = 0; i < cs.num_cosets(); ++i) {
        const auto& f = C.components()[i];
        os << "  component " << i << " (leader " << cs.leaders[i] << ", size " << cs.coset_size(i)
           << "): ";
        switch (f.kind) {
            case ComponentKind::Zero: os << "zero"; break;
            case ComponentKind::OneGenPlain: os << "<theta>"; break;
            case ComponentKind::OneGenOmega: os << "<theta(omega + " << poly_to_string(f.s) << ")>"; break;
            case ComponentKind::FullN: os << "full N"; break;
        }
        os << "\n";
    }
    return os.str();
}

inline json run_dual(const CodeDescriptor& desc) {
    return descriptor_to_json(descriptor_of(dual(code_from_descriptor(desc))));
}

inline json run_classify(const CodeDescriptor& desc) {
    return report_to_json(classify_orthogonality(code_from_descriptor(desc)));
}

inline json run_distance(const CodeDescriptor& desc, const EnumOptions& opts, bool bound_only) {
    AdditiveCyclicCode C = code_from_descriptor(desc);
    DistanceResult res;
    auto bound = cyclic_lower_bound(C, opts);
    if (bound_only) {
        res.method = DistanceResult::Method::BoundOnly;
        res.bound = bound.bound;
    } else {
        res = min_weight_exhaustive(C, opts);
        res.bound = bound.bound;
    }
    json j = distance_to_json(res, &C.cosets().ring);
    json parts = json::array();
    for (const auto& [name, d] : bound.parts) {
        json jp{{"code", name}};
        if (d)
            jp["d"] = *d;
        else
            jp["d"] = nullptr;
        parts.push_back(jp);
    }
    j["bound_rule"] = bound.rule;
    j["bound_parts"] = parts;
    j["bound_complete"] = bound.complete;
    return j;
}

inline json run_quantum(const CodeDescriptor& desc, const std::string& construction,
                        const EnumOptions& opts, const std::string& records_csv = "") {
    AdditiveCyclicCode C = code_from_descriptor(desc);
    QuantumParams q;
    if (construction == "stabilizer")
        q = stabilizer_params(C, opts);
    else if (construction == "nso")
        q = nearly_self_orthogonal_params(C, opts);
    else
        throw std::runtime_error("unknown construction '" + construction + "' (stabilizer|nso)");
    json j = quantum_to_json(q);
    if (!records_csv.empty()) {
        const BestKnownTable table = load_best_known_csv(records_csv);
        if (auto prev = table.lookup(q.n, q.k)) {
            j["previous_d"] = *prev;
            // a record only if the distance is proven, not merely claimed
            j["record"] = q.d_exact ? *q.d_exact > *prev : q.d_lower > *prev;
        }
    }
    return j;
}

inline std::vector<int> parse_row_selection(const std::string& selection) {
    std::vector<int> rows;
    std::stringstream ss(selection);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) {
            rows.push_back(std::stoi(item));
        } else {
            const int lo = std::stoi(item.substr(0, dash));
            const int hi = std::stoi(item.substr(dash + 1));
            for (int r = lo; r <= hi; ++r) rows.push_back(r);
        }
    }
    return rows;
}

inline std::string table_row_path(const std::string& data_dir, int row) {
    std::ostringstream os;
    os << data_dir << "/table2/row" << (row < 10 ? "0" : "") << row << ".json";
    return os.str();
}

inline TableVerification run_verify_tables(const std::string& data_dir, const std::vector<int>& rows,
                                           const EnumOptions& opts) {
    std::vector<std::pair<int, CodeDescriptor>> loaded;
    for (int r : rows) loaded.emplace_back(r, load_descriptor(table_row_path(data_dir, r)));
    return verify_tables(loaded, opts);
}

inline std::string verification_text(const TableVerification& v) {
    std::ostringstream os;
    for (const auto& r : v.rows) {
        os << "row " << r.row << ": "
           << (r.pass() ? "PASS" : "FAIL")
           << "  [canonical " << (r.canonical_ok ? "ok" : "BAD") << ", dim "
           << (r.dim_ok ? "ok" : "BAD") << ", e " << (r.e_ok ? "ok" : "BAD") << ", params "
           << (r.params_ok ? "ok" : "BAD") << ", d ";
        switch (r.d_status) {
            case RowVerification::DStatus::Verified: os << "verified=" << *r.d_exact; break;
            case RowVerification::DStatus::Deferred:
                os << "deferred (claim " << r.d_claimed << ", proven >= " << r.d_lower << ")";
                break;
            case RowVerification::DStatus::Failed: os << "MISMATCH"; break;
        }
        os << "]";
        if (!r.message.empty() && !r.pass()) os << "  " << r.message;
        os << "\n";
    }
    os << (v.all_pass ? "all rows pass" : "FAILURES present") << "\n";
    return os.str();
}

/*
 * Search runner: streams records to a JSON-lines file and maintains a
 * sibling cursor file so interrupted runs can resume.
 */
inline SearchOutcome run_search(const SearchConfig& cfg, const std::string& out_path, bool resume) {
    std::vector<std::size_t> cursor;
    bool have_cursor = false;
    const std::string cursor_path = out_path + ".cursor";
    if (resume) {
        std::ifstream in(cursor_path);
        if (!in) throw std::runtime_error("resume requested but " + cursor_path + " is missing");
        json j;
        in >> j;
        if (j.value("completed", false)) throw std::runtime_error("search already completed");
        cursor = j.at("cursor").get<std::vector<std::size_t>>();
        have_cursor = true;
    }
    std::ofstream out(out_path, resume ? std::ios::app : std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + out_path);

    SearchOutcome outcome = enumerate_with_e_budget(
        cfg,
        [&](const SearchRecord& rec) {
            out << search_record_to_json(rec).dump() << "\n";
            return true;
        },
        have_cursor ? &cursor : nullptr);

    std::ofstream cur(cursor_path, std::ios::trunc);
    cur << json{{"completed", outcome.completed},
                {"cursor", outcome.cursor},
                {"visited", outcome.visited},
                {"emitted", outcome.emitted},
                {"config", search_config_to_json(cfg)}}
               .dump(2)
        << "\n";
    return outcome;
}

}  // namespace addcyc::cli
