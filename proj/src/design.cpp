#include "twodist/design.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "twodist/errors.hpp"

namespace twodist {

namespace {

Rational rat(std::size_t v) { return Rational(static_cast<long>(v)); }

std::size_t intersection_size(const std::vector<std::size_t>& a,
                              const std::vector<std::size_t>& b) {
    std::size_t i = 0, j = 0, count = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else {
            ++count;
            ++i;
            ++j;
        }
    }
    return count;
}

}  // namespace

BlockDesign validate_design(std::size_t v, std::vector<std::vector<std::size_t>> blocks) {
    if (v == 0 || blocks.empty()) throw Error("design needs at least one point and one block");
    for (auto& blk : blocks) {
        std::sort(blk.begin(), blk.end());
        if (std::adjacent_find(blk.begin(), blk.end()) != blk.end())
            throw Error("block contains a repeated point");
        if (!blk.empty() && blk.back() >= v) throw Error("block contains a point outside [v]");
    }

    const std::size_t k = blocks[0].size();
    for (std::size_t i = 1; i < blocks.size(); ++i)
        if (blocks[i].size() != k) throw UnequalBlockSizes(0, i);
    if (k == 0) throw Error("blocks are empty");

    // Point degrees and pair coverage by direct counting.
    std::vector<std::size_t> degree(v, 0);
    std::vector<std::size_t> pair_count(v * v, 0);
    for (const auto& blk : blocks) {
        for (std::size_t p : blk) ++degree[p];
        for (std::size_t i = 0; i < blk.size(); ++i)
            for (std::size_t j = i + 1; j < blk.size(); ++j) ++pair_count[blk[i] * v + blk[j]];
    }

    const std::size_t lambda = v >= 2 ? pair_count[0 * v + 1] : 0;
    for (std::size_t p = 0; p < v; ++p)
        for (std::size_t q = p + 1; q < v; ++q)
            if (pair_count[p * v + q] != lambda)
                throw NotPairBalanced(p, q, pair_count[p * v + q], lambda);

    const std::size_t r = degree[0];
    for (std::size_t p = 1; p < v; ++p)
        if (degree[p] != r) throw NotPairBalanced(0, p, degree[p], r);

    BlockDesign d;
    d.v = v;
    d.b = blocks.size();
    d.r = r;
    d.k = k;
    d.lambda = lambda;
    d.blocks = std::move(blocks);

    if (d.v * d.r != d.b * d.k) throw IdentityViolation("vr = bk");
    if (d.r * (d.k - 1) != d.lambda * (d.v - 1)) throw IdentityViolation("r(k-1) = lambda(v-1)");
    return d;
}

void check_admissible(const QSDParams& q) {
    if (q.v == 0 || q.b == 0 || q.k == 0) throw IdentityViolation("positive parameters");
    if (q.v * q.r != q.b * q.k) throw IdentityViolation("vr = bk");
    if (q.r * (q.k - 1) != q.lambda * (q.v - 1)) throw IdentityViolation("r(k-1) = lambda(v-1)");
    if (q.x >= q.y) throw IdentityViolation("x < y");
    if (q.y > q.k) throw IdentityViolation("y <= k");
}

QSDParams detect_intersection_numbers(const BlockDesign& d) {
    std::set<std::size_t> sizes;
    for (std::size_t i = 0; i < d.b; ++i)
        for (std::size_t j = i + 1; j < d.b; ++j)
            sizes.insert(intersection_size(d.blocks[i], d.blocks[j]));

    if (sizes.size() != 2) {
        std::string found;
        for (std::size_t s : sizes) found += (found.empty() ? "" : ",") + std::to_string(s);
        throw NotQuasiSymmetric(found);
    }

    QSDParams q;
    q.v = d.v;
    q.b = d.b;
    q.r = d.r;
    q.k = d.k;
    q.lambda = d.lambda;
    q.x = *sizes.begin();
    q.y = *std::next(sizes.begin());
    return q;
}

SRGParams srg_params(const QSDParams& q) {
    check_admissible(q);
    const Rational yx = rat(q.y) - rat(q.x);
    const Rational s = (rat(q.k) * (rat(q.r) - 1) - rat(q.x) * (rat(q.b) - 1)) / yx;
    if (!s.is_integer() || s.sign() < 0 || s > rat(q.b - 1)) throw NonIntegralS("s = " + s.str());

    SRGParams out;
    out.n_vertices = q.b;
    out.s = static_cast<std::size_t>(s.num().get_si());
    out.theta1 = (rat(q.r) - rat(q.lambda) - rat(q.k) + rat(q.x)) / yx;
    out.theta2 = (rat(q.x) - rat(q.k)) / yx;

    const Rational mu1 = s + out.theta1 + out.theta2 + out.theta1 * out.theta2;
    const Rational mu2 = s + out.theta1 * out.theta2;
    if (!mu1.is_nonneg_integer()) throw NonIntegralS("mu1 = " + mu1.str());
    if (!mu2.is_nonneg_integer()) throw NonIntegralS("mu2 = " + mu2.str());
    out.mu1 = static_cast<std::size_t>(mu1.num().get_si());
    out.mu2 = static_cast<std::size_t>(mu2.num().get_si());
    return out;
}

GramMatrix qsd_to_frame_basis(const BlockDesign& d) {
    detect_intersection_numbers(d);  // throws NotQuasiSymmetric when not QS
    Matrix out(d.b);
    const Rational k = rat(d.k);
    for (std::size_t i = 0; i < d.b; ++i) {
        out.at(i, i) = Quad(1);
        for (std::size_t j = i + 1; j < d.b; ++j) {
            out.at(i, j) = Quad(rat(intersection_size(d.blocks[i], d.blocks[j])) / k);
            out.at(j, i) = out.at(i, j);
        }
    }
    return GramMatrix::certify(std::move(out));
}

GramMatrix qsd_to_frame_simplex(const BlockDesign& d) {
    detect_intersection_numbers(d);
    if (d.k >= d.v) throw Error("simplex construction requires k < v");
    Matrix out(d.b);
    const Rational denom = rat(d.k) * (rat(d.v) - rat(d.k));
    for (std::size_t i = 0; i < d.b; ++i) {
        out.at(i, i) = Quad(1);
        for (std::size_t j = i + 1; j < d.b; ++j) {
            const Rational inter = rat(intersection_size(d.blocks[i], d.blocks[j]));
            out.at(i, j) = Quad((inter * rat(d.v) - rat(d.k) * rat(d.k)) / denom);
            out.at(j, i) = out.at(i, j);
        }
    }
    return GramMatrix::certify(std::move(out));
}

std::vector<NeighborPart> neighbor_substructure(const GramMatrix& g, std::size_t pivot) {
    const std::size_t m = g.m();
    if (pivot >= m) throw Error("pivot index out of range");

    std::vector<NeighborPart> parts;
    for (std::size_t j = 0; j < m; ++j) {
        if (j == pivot) continue;
        const Quad& v = g.at(pivot, j);
        auto it = std::find_if(parts.begin(), parts.end(),
                               [&](const NeighborPart& p) { return p.value == v; });
        if (it == parts.end()) {
            parts.push_back(NeighborPart{v, {j}, PartKind::Empty, {}, {}});
        } else {
            it->indices.push_back(j);
        }
    }

    for (NeighborPart& part : parts) {
        const std::size_t s = part.indices.size();
        if (s == 0) {
            part.kind = PartKind::Empty;
            continue;
        }
        if (s == 1) {
            part.kind = PartKind::Singleton;
            continue;
        }
        Matrix sub(s);
        for (std::size_t i = 0; i < s; ++i) {
            sub.at(i, i) = Quad(1);
            for (std::size_t j = i + 1; j < s; ++j) {
                sub.at(i, j) = g.at(part.indices[i], part.indices[j]);
                sub.at(j, i) = sub.at(i, j);
            }
        }
        const Certificate cert = analyze(GramMatrix::certify(std::move(sub)));
        if (cert.is_two_distance && cert.is_regular) {
            part.kind = PartKind::RegularTwoDistance;
            part.profile = cert.profile;
        } else if (cert.is_two_distance) {
            part.kind = PartKind::Irregular;
        } else {
            bool constant = true;
            Quad value = g.at(part.indices[0], part.indices[1]);
            for (std::size_t i = 0; i < s && constant; ++i)
                for (std::size_t j = i + 1; j < s; ++j)
                    if (g.at(part.indices[i], part.indices[j]) != value) {
                        constant = false;
                        break;
                    }
            if (constant) {
                part.kind = PartKind::Constant;
                part.constant_value = value;
            } else {
                part.kind = PartKind::Irregular;
            }
        }
    }
    return parts;
}

std::vector<ConditionCheck> qsd_necessary_conditions(const QSDParams& q) {
    check_admissible(q);
    std::vector<ConditionCheck> checks;

    const Rational kk_v = rat(q.k) * rat(q.k) / rat(q.v);
    const bool x_eq = rat(q.x) == kk_v;
    const bool y_eq = rat(q.y) == kk_v;

    checks.push_back({"x <= k^2/v <= y, not both equal", true,
                      rat(q.x) <= kk_v && kk_v <= rat(q.y) && !(x_eq && y_eq),
                      "k^2/v = " + kk_v.str()});

    std::size_t s_value = 0;
    bool s_ok = true;
    try {
        s_value = srg_params(q).s;
    } catch (const NonIntegralS&) {
        s_ok = false;
    }
    checks.push_back({"block-graph degree s integral", true, s_ok,
                      s_ok ? "s = " + std::to_string(s_value) : "s not integral"});

    {
        ConditionCheck c{"b = (s+1)(b-v+1) when x = k^2/v", x_eq, true, ""};
        if (x_eq && s_ok) {
            c.pass = q.b == (s_value + 1) * (q.b - q.v + 1);
            c.detail = "b = " + std::to_string(q.b) + ", (s+1)(b-v+1) = " +
                       std::to_string((s_value + 1) * (q.b - q.v + 1));
        }
        checks.push_back(std::move(c));
    }
    {
        ConditionCheck c{"b = (b-s-1)(b-v+1) when y = k^2/v", y_eq, true, ""};
        if (y_eq && s_ok) {
            c.pass = q.b == (q.b - s_value - 1) * (q.b - q.v + 1);
            c.detail = "b = " + std::to_string(q.b) + ", (b-s-1)(b-v+1) = " +
                       std::to_string((q.b - s_value - 1) * (q.b - q.v + 1));
        }
        checks.push_back(std::move(c));
    }
    {
        ConditionCheck c{"s even when b odd", q.b % 2 == 1, true, ""};
        if (q.b % 2 == 1 && s_ok) {
            c.pass = s_value % 2 == 0;
            c.detail = "s = " + std::to_string(s_value);
        }
        checks.push_back(std::move(c));
    }

    // Informational only; cited from outside this theory.
    checks.push_back({"info: k^2/v < lambda", false, kk_v < rat(q.lambda),
                      "k^2/v = " + kk_v.str() + ", lambda = " + std::to_string(q.lambda)});
    return checks;
}

LinesBoundsTable LinesBoundsTable::builtin() {
    LinesBoundsTable t;
    t.version_ = "builtin-1";
    t.bounds_ = {
        {4, {6, 6}},      {5, {10, 10}},    {9, {28, 28}},    {19, {72, 75}},
        {22, {176, 176}}, {42, {276, 288}}, {45, {344, 540}}, {46, {344, 736}},
    };
    return t;
}

LinesBoundsTable LinesBoundsTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open bounds table " + path);
    LinesBoundsTable t;
    t.version_ = "file:" + path;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.rfind("# version:", 0) == 0) {
            std::string v = line.substr(10);
            const auto start = v.find_first_not_of(" \t");
            t.version_ = start == std::string::npos ? v : v.substr(start);
            continue;
        }
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::size_t dim, lo, hi;
        if (!(ss >> dim >> lo >> hi) || lo > hi)
            throw Error("bad bounds line " + std::to_string(lineno) + " in " + path);
        t.bounds_[dim] = {lo, hi};
    }
    return t;
}

std::optional<std::pair<std::size_t, std::size_t>> LinesBoundsTable::lookup(
    std::size_t dimension) const {
    auto it = bounds_.find(dimension);
    if (it == bounds_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::pair<std::size_t, std::size_t>> lines_bound(const LinesBoundsTable& table,
                                                               std::size_t dimension) {
    return table.lookup(dimension);
}

PipelineResult equiangular_pipeline(const QSDParams& q, const LinesBoundsTable& table) {
    check_admissible(q);
    PipelineResult result;

    // Sufficient condition x + y <= 2kr/b; no claim otherwise.
    if (rat(q.x) + rat(q.y) > Rational(2) * rat(q.k) * rat(q.r) / rat(q.b)) return result;

    result.lines_claim = LinesClaim{q.b, q.v};
    if (auto bounds = table.lookup(q.v); bounds && q.b > bounds->second) {
        NonexistenceCertificate cert;
        cert.params = q;
        cert.reason = "lines_bound_conflict";
        cert.witness = "design would give " + std::to_string(q.b) +
                       " equiangular lines in dimension " + std::to_string(q.v) +
                       ", exceeding the known maximum " + std::to_string(bounds->second);
        cert.bounds_version = table.version();
        result.nonexistence = std::move(cert);
    }
    return result;
}

std::vector<NonexistenceCertificate> nonexistence_from_conditions(const QSDParams& q) {
    std::vector<NonexistenceCertificate> certs;
    for (const ConditionCheck& c : qsd_necessary_conditions(q)) {
        if (!c.applicable || c.pass) continue;
        NonexistenceCertificate cert;
        cert.params = q;
        cert.reason = c.name;
        cert.witness = c.detail;
        cert.bounds_version = "";
        certs.push_back(std::move(cert));
    }
    return certs;
}

BlockDesign pairs_design(std::size_t n) {
    if (n < 3) throw Error("pairs design needs n >= 3");
    std::vector<std::vector<std::size_t>> blocks;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) blocks.push_back({i, j});
    return validate_design(n, std::move(blocks));
}

BlockDesign fano_plane() {
    return validate_design(7, {{0, 1, 2},
                               {0, 3, 4},
                               {0, 5, 6},
                               {1, 3, 5},
                               {1, 4, 6},
                               {2, 3, 6},
                               {2, 4, 5}});
}

BlockDesign witt_qsd_22() {
    // Weight-7 codewords of the binary [23,12,7] quadratic-residue (Golay)
    // code form the Steiner system S(4,7,23); the 176 blocks avoiding one
    // point are the quasi-symmetric 3-(22,7,4) design.
    const uint32_t gen = (1u << 11) | (1u << 10) | (1u << 6) | (1u << 5) | (1u << 4) |
                         (1u << 2) | 1u;  // x^11+x^10+x^6+x^5+x^4+x^2+1
    std::vector<std::vector<std::size_t>> blocks;
    for (uint32_t msg = 0; msg < (1u << 12); ++msg) {
        uint32_t word = 0;
        for (std::size_t bit = 0; bit < 12; ++bit)
            if (msg & (1u << bit)) word ^= gen << bit;
        if (__builtin_popcount(word) != 7) continue;
        if (word & (1u << 22)) continue;  // discard blocks through the removed point
        std::vector<std::size_t> block;
        for (std::size_t p = 0; p < 22; ++p)
            if (word & (1u << p)) block.push_back(p);
        blocks.push_back(std::move(block));
    }
    return validate_design(22, std::move(blocks));
}

}  // namespace twodist
