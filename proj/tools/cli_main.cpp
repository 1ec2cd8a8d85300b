#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "twodist/construct.hpp"
#include "twodist/design.hpp"
#include "twodist/errors.hpp"
#include "twodist/io.hpp"
#include "twodist/realize.hpp"
#include "twodist/version.hpp"

namespace {

using twodist::json;

struct IOError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw IOError(path + ": " + e.what());
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw IOError("cannot write " + out_path);
    out << text << "\n";
}

std::string wrap_ok(json payload, const std::vector<std::string>& diagnostics) {
    json j;
    j["status"] = "ok";
    j["artifact_version"] = twodist::kVersion;
    j["payload"] = std::move(payload);
    j["diagnostics"] = diagnostics;
    return j.dump(2);
}

json gram_with_certificate(const twodist::GramMatrix& g) {
    json payload;
    payload["gram"] = twodist::gram_to_json(g);
    payload["certificate"] = twodist::certificate_to_json(twodist::analyze(g));
    return payload;
}

int cmd_verify(const std::string& gram_path, const std::string& out_path) {
    const twodist::GramMatrix g = twodist::gram_from_json(read_json(gram_path));
    json payload;
    payload["certificate"] = twodist::certificate_to_json(twodist::analyze(g));
    emit(wrap_ok(std::move(payload), {}), out_path);
    return 0;
}

int cmd_construct(const std::string& design_path, const std::string& variant,
                  const std::string& out_path) {
    const twodist::BlockDesign d = twodist::design_from_json(read_json(design_path));
    const twodist::GramMatrix g =
        variant == "basis" ? twodist::qsd_to_frame_basis(d) : twodist::qsd_to_frame_simplex(d);
    emit(wrap_ok(gram_with_certificate(g), {"variant: " + variant}), out_path);
    return 0;
}

int cmd_transform(const std::string& gram_path, const std::string& op, const std::string& t_str,
                  const std::string& t2_str, std::size_t pivot, const std::string& root,
                  const std::string& out_path) {
    const twodist::GramMatrix g = twodist::gram_from_json(read_json(gram_path));
    std::vector<std::string> diagnostics = {"op: " + op};

    if (op == "naimark") {
        emit(wrap_ok(gram_with_certificate(twodist::naimark(g)), diagnostics), out_path);
    } else if (op == "project") {
        emit(wrap_ok(gram_with_certificate(twodist::project_to_balanced(g)), diagnostics),
             out_path);
    } else if (op == "complement") {
        const twodist::ComplementResult res = twodist::complement_transform(g);
        diagnostics.push_back("gamma: " + res.gamma.str());
        diagnostics.push_back(std::string("is_tight_result: ") +
                              (res.is_tight_result ? "true" : "false"));
        json payload;
        payload["gamma"] = res.gamma.str();
        payload["is_tight_result"] = res.is_tight_result;
        try {
            const twodist::GramMatrix out = twodist::GramMatrix::certify(res.candidate);
            payload["gram"] = twodist::gram_to_json(out);
            payload["certificate"] = twodist::certificate_to_json(twodist::analyze(out));
        } catch (const twodist::NotPSD& e) {
            diagnostics.push_back(std::string("candidate is not a Gram matrix: ") + e.what());
        }
        emit(wrap_ok(std::move(payload), diagnostics), out_path);
    } else if (op == "translate") {
        const twodist::Quad t = twodist::Quad::parse(t_str);
        diagnostics.push_back("t: " + t.str());
        emit(wrap_ok(gram_with_certificate(twodist::translate(g, t)), diagnostics), out_path);
    } else if (op == "lift") {
        const twodist::Quad t2 = twodist::Quad::parse(t2_str);
        diagnostics.push_back("t2: " + t2.str());
        emit(wrap_ok(gram_with_certificate(twodist::lift(g, t2.rational())), diagnostics),
             out_path);
    } else if (op == "equilift") {
        const twodist::EquiangularLiftResult res = twodist::equiangular_lift(g);
        diagnostics.push_back("gamma: " + res.common_angle.str());
        diagnostics.push_back("t2: " + res.t_squared.str());
        json payload = gram_with_certificate(res.gram);
        payload["common_angle"] = res.common_angle.str();
        payload["t_squared"] = res.t_squared.str();
        emit(wrap_ok(std::move(payload), diagnostics), out_path);
    } else if (op == "equitranslate") {
        const twodist::RootChoice choice = root == "larger" ? twodist::RootChoice::LargerAbs
                                                            : twodist::RootChoice::SmallerAbs;
        const twodist::EquiangularTranslateResult res = twodist::equiangular_translate(g, choice);
        diagnostics.push_back("gamma: " + res.common_angle.str());
        diagnostics.push_back("t: " + res.t.str());
        json payload = gram_with_certificate(res.gram);
        payload["common_angle"] = res.common_angle.str();
        payload["t"] = res.t.str();
        emit(wrap_ok(std::move(payload), diagnostics), out_path);
    } else if (op == "etf-neighbor") {
        const twodist::NeighborSubsetResult res = twodist::etf_neighbor_subset(g, pivot);
        diagnostics.push_back("pivot: " + std::to_string(pivot));
        emit(wrap_ok(gram_with_certificate(res.gram), diagnostics), out_path);
    } else if (op == "etf-project") {
        diagnostics.push_back("pivot: " + std::to_string(pivot));
        emit(wrap_ok(gram_with_certificate(twodist::etf_projection(g, pivot)), diagnostics),
             out_path);
    } else {
        throw IOError("unknown --op " + op);
    }
    return 0;
}

int cmd_design_check(const std::string& params_path, const std::string& bounds_path,
                     const std::string& out_path) {
    const twodist::QSDParams params = twodist::params_from_json(read_json(params_path));
    const twodist::LinesBoundsTable table = bounds_path.empty()
                                                ? twodist::LinesBoundsTable::builtin()
                                                : twodist::LinesBoundsTable::load(bounds_path);

    json payload;
    payload["params"] = twodist::params_to_json(params);
    try {
        payload["srg"] = twodist::srg_to_json(twodist::srg_params(params));
    } catch (const twodist::NonIntegralS& e) {
        payload["srg_error"] = e.what();
    }
    payload["conditions"] = twodist::conditions_to_json(twodist::qsd_necessary_conditions(params));
    payload["pipeline"] =
        twodist::pipeline_to_json(twodist::equiangular_pipeline(params, table), table.version());

    json condition_certs = json::array();
    for (const auto& cert : twodist::nonexistence_from_conditions(params)) {
        json c;
        c["reason"] = cert.reason;
        c["witness"] = cert.witness;
        condition_certs.push_back(std::move(c));
    }
    payload["nonexistence_from_conditions"] = std::move(condition_certs);

    emit(wrap_ok(std::move(payload), {"bounds_version: " + table.version()}), out_path);
    return 0;
}

int cmd_realize(const std::string& gram_path, double tol, const std::string& out_path) {
    const twodist::GramMatrix g = twodist::gram_from_json(read_json(gram_path));
    const twodist::VectorFrame f = twodist::realize(g, tol);

    json report;
    report["max_deviation_within"] = f.tolerance;
    const twodist::FrameOperatorReport rep = twodist::frame_operator_check(f);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", rep.lower_bound);
    report["lower_bound"] = std::string(buf);
    std::snprintf(buf, sizeof(buf), "%.17g", rep.upper_bound);
    report["upper_bound"] = std::string(buf);
    std::snprintf(buf, sizeof(buf), "%.17g", rep.frame_potential);
    report["frame_potential"] = std::string(buf);

    // the frame block keeps its own fixed-format serialization
    std::string text = "{\"status\": \"ok\", \"artifact_version\": \"";
    text += twodist::kVersion;
    text += "\", \"payload\": {\"frame\": ";
    text += twodist::frame_to_json_text(f);
    text += ", \"report\": ";
    text += report.dump();
    text += "}, \"diagnostics\": []}";
    emit(text, out_path);
    return 0;
}

std::string failure_text(const char* status, const std::string& message) {
    json j;
    j["status"] = status;
    j["artifact_version"] = twodist::kVersion;
    j["payload"] = json::object();
    j["diagnostics"] = {message};
    return j.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction and certification of regular two-distance sets"};
    app.require_subcommand(1);

    std::string in_path, out_path, variant = "simplex", op, t_str = "0", t2_str = "1";
    std::string bounds_path, root = "smaller";
    std::size_t pivot = 0;
    double tol = 1e-10;

    CLI::App* verify = app.add_subcommand("verify", "certify a Gram matrix file");
    verify->add_option("gram", in_path, "Gram JSON file")->required();
    verify->add_option("-o,--out", out_path, "output file (default stdout)");

    CLI::App* construct = app.add_subcommand("construct", "build a frame from a design");
    construct->add_option("design", in_path, "design JSON file")->required();
    construct->add_option("--variant", variant, "basis|simplex")
        ->check(CLI::IsMember({"basis", "simplex"}))
        ->required();
    construct->add_option("-o,--out", out_path);

    CLI::App* transform = app.add_subcommand("transform", "apply a Gram-level transform");
    transform->add_option("gram", in_path)->required();
    transform
        ->add_option("--op", op,
                     "naimark|project|complement|translate|lift|equilift|equitranslate|"
                     "etf-neighbor|etf-project")
        ->required();
    transform->add_option("--t", t_str, "translation parameter (scalar text)");
    transform->add_option("--t2", t2_str, "squared lift parameter (scalar text)");
    transform->add_option("--pivot", pivot, "pivot index for ETF operations (0-based)");
    transform->add_option("--root", root, "equitranslate root choice: smaller|larger")
        ->check(CLI::IsMember({"smaller", "larger"}));
    transform->add_option("-o,--out", out_path);

    CLI::App* check = app.add_subcommand("design-check", "necessary conditions and line counts");
    check->add_option("params", in_path, "parameter JSON file")->required();
    check->add_option("--bounds", bounds_path, "equiangular-lines bounds table file");
    check->add_option("-o,--out", out_path);

    CLI::App* realize_cmd = app.add_subcommand("realize", "recover floating frame vectors");
    realize_cmd->add_option("gram", in_path)->required();
    realize_cmd->add_option("--tol", tol, "round-trip tolerance (default 1e-10)");
    realize_cmd->add_option("-o,--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        if (verify->parsed()) return cmd_verify(in_path, out_path);
        if (construct->parsed()) return cmd_construct(in_path, variant, out_path);
        if (transform->parsed())
            return cmd_transform(in_path, op, t_str, t2_str, pivot, root, out_path);
        if (check->parsed()) return cmd_design_check(in_path, bounds_path, out_path);
        if (realize_cmd->parsed()) return cmd_realize(in_path, tol, out_path);
    } catch (const IOError& e) {
        std::cout << failure_text("error", e.what()) << "\n";
        return 1;
    } catch (const twodist::ParseError& e) {
        std::cout << failure_text("error", e.what()) << "\n";
        return 1;
    } catch (const twodist::IdentityViolation& e) {
        std::cout << failure_text("error", e.what()) << "\n";
        return 1;
    } catch (const twodist::Error& e) {
        std::cout << failure_text("violation", e.what()) << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cout << failure_text("violation", std::string("internal identity failed: ") + e.what())
                  << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cout << failure_text("error", e.what()) << "\n";
        return 1;
    }
    return 1;
}
