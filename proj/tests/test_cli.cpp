#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "addcyc/cli.hpp"

using namespace addcyc;

#ifndef ADDCYC_CLI_PATH
#define ADDCYC_CLI_PATH "addcyc"
#endif
#ifndef ADDCYC_DATA_DIR
#define ADDCYC_DATA_DIR "data"
#endif

namespace {

const std::string kCli = ADDCYC_CLI_PATH;
const std::string kData = ADDCYC_DATA_DIR;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string out_path = "cli_test_stdout.tmp";
    const std::string cmd = kCli + " " + args + " > " + out_path + " 2> cli_test_stderr.tmp";
    const int rc = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(rc), ss.str()};
}

std::string fixture_path() {
    const std::string path = "cli_fixture_code.tmp.json";
    CodeDescriptor d;
    d.p = 2;
    d.n = 7;
    d.g = Poly({1, 1, 0, 1});
    d.k = Poly({0, 1, 1});
    d.h = Poly({1});
    save_descriptor(descriptor_of(code_from_descriptor(d)), path);  // canonical fixture
    return path;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("cosets output matches the library call byte for byte") {
        RunResult r = run("cosets --n 7 --p 2 --json");
        CHECK(r.exit_code == 0);
        CHECK(r.out == cli::run_cosets(7, 2).dump(2) + "\n");
    }

    TEST_CASE("info, classify, distance and quantum match the library calls") {
        const std::string fixture = fixture_path();
        const CodeDescriptor d = load_descriptor(fixture);

        RunResult info = run("info " + fixture + " --json");
        CHECK(info.exit_code == 0);
        CHECK(info.out == cli::run_info(d).dump(2) + "\n");

        RunResult classify = run("classify " + fixture);
        CHECK(classify.exit_code == 0);
        CHECK(classify.out == cli::run_classify(d).dump(2) + "\n");

        RunResult dist = run("distance " + fixture + " --budget 20");
        CHECK(dist.exit_code == 0);
        EnumOptions opts;
        opts.budget_log2 = 20;
        CHECK(dist.out == cli::run_distance(d, opts, false).dump(2) + "\n");

        // thread count must not change any output byte
        RunResult dist_mt = run("distance " + fixture + " --budget 20 --threads 3");
        CHECK(dist_mt.out == dist.out);

        RunResult bound = run("distance " + fixture + " --bound-only");
        CHECK(bound.exit_code == 0);
        CHECK(bound.out == cli::run_distance(d, EnumOptions{}, true).dump(2) + "\n");

        RunResult quantum = run("quantum " + fixture + " --construction nso");
        CHECK(quantum.exit_code == 0);
        CHECK(quantum.out == cli::run_quantum(d, "nso", EnumOptions{}).dump(2) + "\n");
    }

    TEST_CASE("dual writes a loadable descriptor") {
        const std::string fixture = fixture_path();
        RunResult r = run("dual " + fixture + " -o cli_test_dual.tmp.json");
        CHECK(r.exit_code == 0);
        const CodeDescriptor d = load_descriptor(fixture);
        const CodeDescriptor dd = load_descriptor("cli_test_dual.tmp.json");
        CHECK(code_from_descriptor(dd) == dual(code_from_descriptor(d)));
        std::remove("cli_test_dual.tmp.json");
    }

    TEST_CASE("verify-tables succeeds on the bundled rows") {
        RunResult r = run("verify-tables --rows 2,3 --budget 20 --data " + kData);
        CHECK(r.exit_code == 0);
        CHECK(r.out.find("row 2: PASS") != std::string::npos);
        CHECK(r.out.find("row 3: PASS") != std::string::npos);
    }

    TEST_CASE("search runs from a config file and resumes") {
        json cfg{{"p", 2}, {"n", 7}, {"e_max", 0}, {"emit_all", true}};
        {
            std::ofstream f("cli_test_search_cfg.tmp.json");
            f << cfg.dump() << "\n";
        }
        RunResult r = run("search cli_test_search_cfg.tmp.json -o cli_test_search.tmp.jsonl");
        CHECK(r.exit_code == 0);
        std::ifstream out("cli_test_search.tmp.jsonl");
        std::size_t lines = 0;
        std::string line;
        std::vector<json> parsed;
        while (std::getline(out, line)) {
            ++lines;
            parsed.push_back(json::parse(line));
        }
        CHECK(lines > 0);
        for (const auto& rec : parsed) CHECK(rec["classification"]["e"] == 0);
        // cursor file exists and reports completion
        std::ifstream cur("cli_test_search.tmp.jsonl.cursor");
        json jcur;
        cur >> jcur;
        CHECK(jcur["completed"] == true);
        // a resume of a completed run is refused
        RunResult again = run("search cli_test_search_cfg.tmp.json -o cli_test_search.tmp.jsonl --resume");
        CHECK(again.exit_code == 2);
        std::remove("cli_test_search_cfg.tmp.json");
        std::remove("cli_test_search.tmp.jsonl");
        std::remove("cli_test_search.tmp.jsonl.cursor");
    }

    TEST_CASE("exit codes distinguish usage errors") {
        RunResult bad_file = run("info does_not_exist.json");
        CHECK(bad_file.exit_code == 2);

        {
            std::ofstream f("cli_test_bad.tmp.json");
            f << "{\"p\": 2, \"n\": 7, \"g\": [5], \"k\": [], \"h\": []}\n";
        }
        RunResult bad_coeff = run("info cli_test_bad.tmp.json");
        CHECK(bad_coeff.exit_code == 2);
        std::remove("cli_test_bad.tmp.json");

        RunResult bad_sub = run("frobnicate");
        CHECK(bad_sub.exit_code == 2);
    }
}
