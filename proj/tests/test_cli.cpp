// End-to-end checks of the command-line surface: every verb, the exit-code
// contract (0 ok, 2 violation, 1 usage/IO), and output determinism.
// argv[1] = CLI binary, argv[2] = shipped bounds table.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "twodist/design.hpp"
#include "twodist/io.hpp"
#include "twodist/realize.hpp"

using nlohmann::json;

namespace {

int g_failures = 0;
std::string g_cli;
std::filesystem::path g_dir;

void expect(bool ok, const std::string& what) {
    if (ok) {
        std::printf("[PASS] %s\n", what.c_str());
    } else {
        ++g_failures;
        std::printf("[FAIL] %s\n", what.c_str());
    }
}

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::filesystem::path tmp = g_dir / "out.txt";
    const int rc = std::system((g_cli + " " + args + " > " + tmp.string() + " 2>/dev/null").c_str());
    std::ifstream in(tmp);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(rc), ss.str()};
}

std::filesystem::path write_file(const std::string& name, const std::string& content) {
    const std::filesystem::path p = g_dir / name;
    std::ofstream out(p);
    out << content;
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: test_cli <cli> <bounds-file>\n");
        return 2;
    }
    g_cli = argv[1];
    const std::string bounds = argv[2];

    std::error_code ec;
    g_dir = std::filesystem::temp_directory_path(ec) / "twodist_cli_test";
    std::filesystem::create_directories(g_dir, ec);

    namespace td = twodist;
    const auto design_path =
        write_file("pairs5.json", td::design_to_json(td::pairs_design(5)).dump());
    const auto gram_path = write_file(
        "tight10.json", td::gram_to_json(td::reference_fixtures().at("tight10_r4")).dump());
    const auto nontight_path = write_file(
        "r3.json", td::gram_to_json(td::reference_fixtures().at("r3_nontight")).dump());
    const auto etf_path =
        write_file("etf6.json", td::gram_to_json(td::conference_etf_gram(6)).dump());
    const auto basis_path = write_file(
        "basis5.json", td::gram_to_json(td::qsd_to_frame_basis(td::pairs_design(5))).dump());
    const auto fano_design = td::design_to_json(td::fano_plane()).dump();
    const auto params_path = write_file(
        "p19.json", R"({"v":19,"b":76,"r":36,"k":9,"lambda":16,"x":3,"y":5})");

    // verify
    {
        const RunResult r = run("verify " + gram_path.string());
        expect(r.code == 0, "verify exits 0 on a certified Gram");
        const json j = json::parse(r.out, nullptr, false);
        expect(!j.is_discarded() &&
                   j["payload"]["certificate"]["is_tight"].get<bool>(),
               "verify reports tightness");
        const RunResult again = run("verify " + gram_path.string());
        expect(again.out == r.out, "verify output is byte-identical across runs");

        const std::filesystem::path out_file = g_dir / "verify_out.json";
        const RunResult to_file =
            run("verify " + gram_path.string() + " -o " + out_file.string());
        std::ifstream in(out_file);
        std::stringstream ss;
        ss << in.rdbuf();
        expect(to_file.code == 0 && ss.str() == r.out,
               "-o writes the same bytes to a file");
    }

    // construct, both variants
    {
        const RunResult basis = run("construct " + design_path.string() + " --variant basis");
        const json j = json::parse(basis.out, nullptr, false);
        expect(basis.code == 0 &&
                   j["payload"]["certificate"]["profile"]["alpha"].get<std::string>() == "1/2",
               "construct --variant basis yields angles 0 and 1/2");
        const RunResult simplex =
            run("construct " + design_path.string() + " --variant simplex");
        expect(simplex.code == 0, "construct --variant simplex succeeds");

        const auto fano_path = write_file("fano.json", fano_design);
        const RunResult fano = run("construct " + fano_path.string() + " --variant basis");
        expect(fano.code == 2, "construct rejects the Fano plane with a violation");
    }

    // transform ops
    {
        expect(run("transform " + gram_path.string() + " --op naimark").code == 0,
               "transform --op naimark");
        expect(run("transform " + basis_path.string() + " --op project").code == 0,
               "transform --op project");
        expect(run("transform " + basis_path.string() + " --op translate --t -1/10").code == 0,
               "transform --op translate --t -1/10");
        expect(run("transform " + gram_path.string() + " --op lift --t2 1/2").code == 0,
               "transform --op lift --t2 1/2");

        const RunResult equilift = run("transform " + gram_path.string() + " --op equilift");
        const json j = json::parse(equilift.out, nullptr, false);
        expect(equilift.code == 0 &&
                   j["payload"]["common_angle"].get<std::string>() == "1/3",
               "transform --op equilift reports gamma 1/3");

        const RunResult equitr =
            run("transform " + basis_path.string() + " --op equitranslate");
        const json jt = json::parse(equitr.out, nullptr, false);
        expect(equitr.code == 0 &&
                   jt["payload"]["t"].get<std::string>() == "-1/10+1/40*sqrt(6)",
               "transform --op equitranslate solves t exactly");

        expect(run("transform " + etf_path.string() + " --op etf-neighbor --pivot 2").code == 0,
               "transform --op etf-neighbor");
        expect(run("transform " + etf_path.string() + " --op etf-project --pivot 0").code == 0,
               "transform --op etf-project");

        const RunResult complement =
            run("transform " + gram_path.string() + " --op complement");
        const json jc = json::parse(complement.out, nullptr, false);
        expect(complement.code == 0 && !jc["payload"]["is_tight_result"].get<bool>(),
               "transform --op complement flags m != 2n+1");

        expect(run("transform " + nontight_path.string() + " --op naimark").code == 2,
               "naimark of a non-tight Gram exits 2");
        expect(run("transform " + gram_path.string() + " --op nonsense").code == 1,
               "unknown op exits 1");
    }

    // design-check with the shipped bounds file
    {
        const RunResult r =
            run("design-check " + params_path.string() + " --bounds " + bounds);
        const json j = json::parse(r.out, nullptr, false);
        expect(r.code == 0 && j["payload"]["pipeline"].contains("nonexistence"),
               "design-check emits the 76 > 75 nonexistence certificate");
        expect(j["payload"]["pipeline"]["bounds_version"].get<std::string>() == "builtin-1",
               "design-check echoes the bounds-table version");

        const auto bad = write_file("bad.json",
                                    R"({"v":19,"b":76,"r":37,"k":9,"lambda":16,"x":3,"y":5})");
        expect(run("design-check " + bad.string()).code == 1,
               "inadmissible parameters exit 1");
    }

    // realize
    {
        const RunResult r = run("realize " + gram_path.string());
        const json j = json::parse(r.out, nullptr, false);
        expect(r.code == 0 && j["payload"]["frame"]["n"].get<int>() == 4,
               "realize recovers a rank-4 frame");
        expect(run("realize " + gram_path.string() + " --tol 1e-30").code == 2,
               "impossible tolerance exits 2");
    }

    // IO errors
    {
        expect(run("verify " + (g_dir / "missing.json").string()).code == 1,
               "missing input file exits 1");
        const auto garbage = write_file("garbage.json", "{not json");
        expect(run("verify " + garbage.string()).code == 1, "malformed JSON exits 1");
        const auto badscalar = write_file(
            "badscalar.json", R"({"m":2,"d":0,"rows":[["1","x"],["x","1"]]})");
        expect(run("verify " + badscalar.string()).code == 1, "bad scalar text exits 1");
        expect(run("frobnicate").code == 1, "unknown subcommand exits 1");
    }

    if (g_failures == 0) {
        std::printf("all cli checks passed\n");
        return 0;
    }
    std::printf("%d cli checks failed\n", g_failures);
    return 1;
}
