#include "twodist/io.hpp"

#include <cinttypes>
#include <cstdio>

#include "twodist/errors.hpp"
#include "twodist/version.hpp"

namespace twodist {

json gram_to_json(const GramMatrix& g) {
    json j;
    j["m"] = g.m();
    if (!g.radicand().fits_slong_p()) throw Error("radicand too large for the JSON schema");
    j["d"] = g.radicand().get_si();
    json rows = json::array();
    for (std::size_t i = 0; i < g.m(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < g.m(); ++k) row.push_back(g.at(i, k).str());
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

GramMatrix gram_from_json(const json& j) {
    const std::size_t m = j.at("m").get<std::size_t>();
    const auto& rows = j.at("rows");
    if (rows.size() != m) throw Error("gram json: row count differs from m");
    Matrix e(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (rows[i].size() != m) throw Error("gram json: row " + std::to_string(i) + " length differs from m");
        for (std::size_t k = 0; k < m; ++k)
            e.at(i, k) = Quad::parse(rows[i][k].get<std::string>());
    }
    GramMatrix g = GramMatrix::certify(std::move(e));
    if (j.contains("d")) {
        const long declared = j.at("d").get<long>();
        if (g.radicand() != declared)
            throw Error("gram json: declared radicand " + std::to_string(declared) +
                        " differs from entries");
    }
    return g;
}

json certificate_to_json(const Certificate& cert) {
    json j;
    j["artifact_version"] = kVersion;
    j["m"] = cert.m;
    j["rank"] = cert.rank;
    j["is_two_distance"] = cert.is_two_distance;
    j["is_regular"] = cert.is_regular;
    j["is_balanced"] = cert.is_balanced;
    j["is_tight"] = cert.is_tight;
    j["has_duplicate_vectors"] = cert.has_duplicate_vectors;
    if (cert.profile) {
        json p;
        p["alpha"] = cert.profile->alpha.str();
        p["beta"] = cert.profile->beta.str();
        p["k_alpha"] = cert.profile->k_alpha;
        p["k_beta"] = cert.profile->k_beta;
        p["grammian_constant"] = cert.profile->grammian_constant.str();
        j["profile"] = std::move(p);
    }
    if (cert.row_sum) j["row_sum"] = cert.row_sum->str();
    j["frame_potential"] = cert.frame_potential.str();
    if (cert.tight_bound) j["tight_bound"] = cert.tight_bound->str();
    json flags = json::array();
    for (const BoundFlag& f : cert.bound_flags) {
        json fj;
        fj["name"] = f.name;
        fj["applicable"] = f.applicable;
        fj["pass"] = f.pass;
        flags.push_back(std::move(fj));
    }
    j["bound_flags"] = std::move(flags);
    j["classification_notes"] = cert.classification_notes;
    return j;
}

json design_to_json(const BlockDesign& d) {
    json j;
    j["v"] = d.v;
    json blocks = json::array();
    for (const auto& blk : d.blocks) {
        json b = json::array();
        for (std::size_t p : blk) b.push_back(p + 1);
        blocks.push_back(std::move(b));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

BlockDesign design_from_json(const json& j) {
    const std::size_t v = j.at("v").get<std::size_t>();
    std::vector<std::vector<std::size_t>> blocks;
    for (const auto& bj : j.at("blocks")) {
        std::vector<std::size_t> blk;
        for (const auto& pj : bj) {
            const long p = pj.get<long>();
            if (p < 1 || static_cast<std::size_t>(p) > v)
                throw Error("design json: point " + std::to_string(p) + " outside 1.." +
                            std::to_string(v));
            blk.push_back(static_cast<std::size_t>(p - 1));
        }
        blocks.push_back(std::move(blk));
    }
    return validate_design(v, std::move(blocks));
}

json params_to_json(const QSDParams& q) {
    json j;
    j["v"] = q.v;
    j["b"] = q.b;
    j["r"] = q.r;
    j["k"] = q.k;
    j["lambda"] = q.lambda;
    j["x"] = q.x;
    j["y"] = q.y;
    return j;
}

QSDParams params_from_json(const json& j) {
    QSDParams q;
    q.v = j.at("v").get<std::size_t>();
    q.b = j.at("b").get<std::size_t>();
    q.r = j.at("r").get<std::size_t>();
    q.k = j.at("k").get<std::size_t>();
    q.lambda = j.at("lambda").get<std::size_t>();
    q.x = j.at("x").get<std::size_t>();
    q.y = j.at("y").get<std::size_t>();
    check_admissible(q);
    return q;
}

json srg_to_json(const SRGParams& s) {
    json j;
    j["n_vertices"] = s.n_vertices;
    j["s"] = s.s;
    j["mu1"] = s.mu1;
    j["mu2"] = s.mu2;
    j["theta1"] = s.theta1.str();
    j["theta2"] = s.theta2.str();
    return j;
}

json conditions_to_json(const std::vector<ConditionCheck>& checks) {
    json out = json::array();
    for (const ConditionCheck& c : checks) {
        json j;
        j["name"] = c.name;
        j["applicable"] = c.applicable;
        j["pass"] = c.pass;
        if (!c.detail.empty()) j["detail"] = c.detail;
        out.push_back(std::move(j));
    }
    return out;
}

json pipeline_to_json(const PipelineResult& result, const std::string& bounds_version) {
    json j;
    j["artifact_version"] = kVersion;
    j["bounds_version"] = bounds_version;
    if (result.lines_claim) {
        json c;
        c["lines"] = result.lines_claim->lines;
        c["dimension"] = result.lines_claim->dimension;
        j["lines_claim"] = std::move(c);
    }
    if (result.nonexistence) {
        json c;
        c["params"] = params_to_json(result.nonexistence->params);
        c["reason"] = result.nonexistence->reason;
        c["witness"] = result.nonexistence->witness;
        c["bounds_version"] = result.nonexistence->bounds_version;
        j["nonexistence"] = std::move(c);
    }
    return j;
}

json neighbor_parts_to_json(const std::vector<NeighborPart>& parts) {
    json out = json::array();
    for (const NeighborPart& p : parts) {
        json j;
        j["value"] = p.value.str();
        json idx = json::array();
        for (std::size_t i : p.indices) idx.push_back(i);
        j["indices"] = std::move(idx);
        switch (p.kind) {
            case PartKind::Empty: j["kind"] = "empty"; break;
            case PartKind::Singleton: j["kind"] = "singleton"; break;
            case PartKind::Constant: j["kind"] = "constant"; break;
            case PartKind::RegularTwoDistance: j["kind"] = "regular_two_distance"; break;
            case PartKind::Irregular: j["kind"] = "irregular"; break;
        }
        if (p.constant_value) j["constant_value"] = p.constant_value->str();
        if (p.profile) {
            json q;
            q["alpha"] = p.profile->alpha.str();
            q["beta"] = p.profile->beta.str();
            q["k_alpha"] = p.profile->k_alpha;
            q["k_beta"] = p.profile->k_beta;
            j["profile"] = std::move(q);
        }
        out.push_back(std::move(j));
    }
    return out;
}

std::string frame_to_json_text(const VectorFrame& f) {
    auto fmt = [](double x) {
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        return std::string(buf);
    };
    std::string out = "{\"n\": " + std::to_string(f.n) + ", \"m\": " + std::to_string(f.m) +
                      ", \"columns\": [";
    for (std::size_t j = 0; j < f.m; ++j) {
        if (j) out += ", ";
        out += "[";
        for (std::size_t i = 0; i < f.n; ++i) {
            if (i) out += ", ";
            out += fmt(f.columns[j][i]);
        }
        out += "]";
    }
    out += "]}";
    return out;
}

VectorFrame frame_from_json(const json& j) {
    VectorFrame f;
    f.n = j.at("n").get<std::size_t>();
    f.m = j.at("m").get<std::size_t>();
    const auto& cols = j.at("columns");
    if (cols.size() != f.m) throw Error("frame json: column count differs from m");
    for (const auto& cj : cols) {
        if (cj.size() != f.n) throw Error("frame json: column length differs from n");
        f.columns.push_back(cj.get<std::vector<double>>());
    }
    return f;
}

}  // namespace twodist
