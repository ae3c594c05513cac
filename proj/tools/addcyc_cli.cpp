#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "addcyc/cli.hpp"

using namespace addcyc;

namespace {

// exit codes: 0 success, 1 verification failure, 2 usage or input error
constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kUsage = 2;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"additive cyclic codes over F_{p^2} and derived quantum codes"};
    app.require_subcommand(1);

    // cosets
    auto* cosets_cmd = app.add_subcommand("cosets", "cyclotomic cosets, factors and pairing");
    std::size_t cosets_n = 0;
    std::uint32_t cosets_p = 2;
    bool cosets_json = false;
    cosets_cmd->add_option("--n", cosets_n, "length (coprime to p)")->required();
    cosets_cmd->add_option("--p", cosets_p, "prime");
    cosets_cmd->add_flag("--json", cosets_json, "emit JSON");

    // info
    auto* info_cmd = app.add_subcommand("info", "dimension, linearity and canonical generators");
    std::string info_file;
    bool info_json = false;
    info_cmd->add_option("code", info_file, "code descriptor (JSON)")->required();
    info_cmd->add_flag("--json", info_json, "emit JSON");

    // dual
    auto* dual_cmd = app.add_subcommand("dual", "symplectic dual descriptor");
    std::string dual_file, dual_out;
    dual_cmd->add_option("code", dual_file, "code descriptor (JSON)")->required();
    dual_cmd->add_option("-o,--output", dual_out, "output file (default: stdout)");

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "self-orthogonality classification and e");
    std::string classify_file;
    classify_cmd->add_option("code", classify_file, "code descriptor (JSON)")->required();

    // distance
    auto* dist_cmd = app.add_subcommand("distance", "exact minimum distance / cyclic lower bound");
    std::string dist_file;
    int dist_budget = 26;
    bool dist_bound_only = false;
    unsigned dist_threads = 1;
    dist_cmd->add_option("code", dist_file, "code descriptor (JSON)")->required();
    dist_cmd->add_option("--budget", dist_budget, "log2 of the enumeration budget (default 26)");
    dist_cmd->add_flag("--bound-only", dist_bound_only, "skip enumeration, report the bound");
    dist_cmd->add_option("--threads", dist_threads, "worker threads");

    // quantum
    auto* quantum_cmd = app.add_subcommand("quantum", "derived quantum code parameters");
    std::string quantum_file, quantum_construction = "nso", quantum_records;
    int quantum_budget = 26;
    unsigned quantum_threads = 1;
    quantum_cmd->add_option("code", quantum_file, "code descriptor (JSON)")->required();
    quantum_cmd->add_option("--construction", quantum_construction, "stabilizer | nso (default nso)");
    quantum_cmd->add_option("--budget", quantum_budget, "log2 of the enumeration budget");
    quantum_cmd->add_option("--threads", quantum_threads, "worker threads");
    quantum_cmd->add_option("--records", quantum_records,
                            "best-known parameters CSV (n,k,d) for record comparison");

    // search
    auto* search_cmd = app.add_subcommand("search", "enumerate codes with bounded e");
    std::string search_config, search_out;
    bool search_resume = false;
    unsigned search_threads = 0;
    search_cmd->add_option("config", search_config, "search configuration (JSON)")->required();
    search_cmd->add_option("-o,--output", search_out, "JSONL output file")->required();
    search_cmd->add_flag("--resume", search_resume, "resume from the cursor file");
    search_cmd->add_option("--threads", search_threads, "override worker threads");

    // verify-tables
    auto* verify_cmd = app.add_subcommand("verify-tables", "check the bundled reference codes");
    std::string verify_rows = "1-10", verify_data = "data";
    int verify_budget = 26;
    unsigned verify_threads = 1;
    bool verify_json = false;
    verify_cmd->add_option("--rows", verify_rows, "row selection, e.g. 1-10 or 1,3");
    verify_cmd->add_option("--budget", verify_budget, "log2 of the enumeration budget");
    verify_cmd->add_option("--data", verify_data, "data directory (default ./data)");
    verify_cmd->add_option("--threads", verify_threads, "worker threads");
    verify_cmd->add_flag("--json", verify_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kUsage;
    }

    try {
        if (*cosets_cmd) {
            if (cosets_json)
                std::cout << cli::run_cosets(cosets_n, cosets_p).dump(2) << "\n";
            else
                std::cout << cli::cosets_text(cosets_n, cosets_p);
        } else if (*info_cmd) {
            const CodeDescriptor d = load_descriptor(info_file);
            if (info_json)
                std::cout << cli::run_info(d).dump(2) << "\n";
            else
                std::cout << cli::info_text(d);
        } else if (*dual_cmd) {
            const json out = cli::run_dual(load_descriptor(dual_file));
            if (dual_out.empty()) {
                std::cout << out.dump(2) << "\n";
            } else {
                std::ofstream f(dual_out);
                if (!f) throw std::runtime_error("cannot write " + dual_out);
                f << out.dump(2) << "\n";
            }
        } else if (*classify_cmd) {
            std::cout << cli::run_classify(load_descriptor(classify_file)).dump(2) << "\n";
        } else if (*dist_cmd) {
            EnumOptions opts;
            opts.budget_log2 = dist_budget;
            opts.threads = dist_threads;
            std::cout << cli::run_distance(load_descriptor(dist_file), opts, dist_bound_only).dump(2)
                      << "\n";
        } else if (*quantum_cmd) {
            EnumOptions opts;
            opts.budget_log2 = quantum_budget;
            opts.threads = quantum_threads;
            std::cout << cli::run_quantum(load_descriptor(quantum_file), quantum_construction, opts,
                                          quantum_records)
                             .dump(2)
                      << "\n";
        } else if (*search_cmd) {
            std::ifstream in(search_config);
            if (!in) throw std::runtime_error("cannot open " + search_config);
            json jcfg;
            in >> jcfg;
            SearchConfig cfg = search_config_from_json(jcfg);
            if (search_threads > 0) cfg.threads = search_threads;
            SearchOutcome outcome = cli::run_search(cfg, search_out, search_resume);
            std::cerr << "visited " << outcome.visited << " assignments, emitted " << outcome.emitted
                      << (outcome.completed ? ", complete" : ", partial (cursor saved)") << "\n";
        } else if (*verify_cmd) {
            EnumOptions opts;
            opts.budget_log2 = verify_budget;
            opts.threads = verify_threads;
            const TableVerification v =
                cli::run_verify_tables(verify_data, cli::parse_row_selection(verify_rows), opts);
            if (verify_json)
                std::cout << verification_to_json(v).dump(2) << "\n";
            else
                std::cout << cli::verification_text(v);
            return v.all_pass ? kOk : kVerifyFail;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}
