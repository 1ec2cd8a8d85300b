#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "twodist/construct.hpp"
#include "twodist/design.hpp"
#include "twodist/errors.hpp"
#include "twodist/realize.hpp"

using namespace twodist;

namespace {

Quad q(long n, long d = 1) { return Quad(Rational(n, d)); }

QSDParams params(std::size_t v, std::size_t b, std::size_t r, std::size_t k, std::size_t lambda,
                 std::size_t x, std::size_t y) {
    QSDParams p;
    p.v = v;
    p.b = b;
    p.r = r;
    p.k = k;
    p.lambda = lambda;
    p.x = x;
    p.y = y;
    return p;
}

}  // namespace

TEST_CASE("design validation") {
    SUBCASE("pairs design on five points") {
        const BlockDesign d = pairs_design(5);
        CHECK(d.v == 5);
        CHECK(d.b == 10);
        CHECK(d.r == 4);
        CHECK(d.k == 2);
        CHECK(d.lambda == 1);
    }
    SUBCASE("Fano plane") {
        const BlockDesign d = fano_plane();
        CHECK(d.v == 7);
        CHECK(d.b == 7);
        CHECK(d.r == 3);
        CHECK(d.k == 3);
        CHECK(d.lambda == 1);
    }
    SUBCASE("uncovered pair is reported") {
        CHECK_THROWS_AS(validate_design(4, {{0, 1}, {2, 3}}), NotPairBalanced);
    }
    SUBCASE("unequal block sizes are reported") {
        CHECK_THROWS_AS(validate_design(4, {{0, 1}, {0, 1, 2}}), UnequalBlockSizes);
    }
}

TEST_CASE("intersection numbers") {
    SUBCASE("pairs design has x=0, y=1") {
        const QSDParams q = detect_intersection_numbers(pairs_design(5));
        CHECK(q.x == 0);
        CHECK(q.y == 1);
        CHECK(q.r == 4);
    }
    SUBCASE("Fano blocks all meet in one point: not quasi-symmetric") {
        CHECK_THROWS_AS(detect_intersection_numbers(fano_plane()), NotQuasiSymmetric);
    }
    SUBCASE("a single block has no intersections") {
        const BlockDesign one = validate_design(3, {{0, 1, 2}});
        CHECK_THROWS_AS(detect_intersection_numbers(one), NotQuasiSymmetric);
    }
}

TEST_CASE("strongly regular graph parameters") {
    SUBCASE("pairs design on [5] gives the triangular graph T(5)") {
        const SRGParams s = srg_params(detect_intersection_numbers(pairs_design(5)));
        CHECK(s.n_vertices == 10);
        CHECK(s.s == 6);
        CHECK(s.mu1 == 3);
        CHECK(s.mu2 == 4);
        CHECK(s.theta1 == Rational(1));
        CHECK(s.theta2 == Rational(-2));
    }
    SUBCASE("parameter-only evaluations") {
        CHECK(srg_params(params(22, 176, 56, 7, 16, 1, 3)).s == 105);
        CHECK(srg_params(params(9, 36, 20, 5, 10, 1, 3)).s == 30);
        CHECK(srg_params(params(19, 76, 36, 9, 16, 3, 5)).s == 45);
    }
}

TEST_CASE("basis construction") {
    const BlockDesign d = pairs_design(5);
    const GramMatrix g = qsd_to_frame_basis(d);
    const Certificate cert = analyze(g);

    CHECK(cert.is_regular);
    CHECK(cert.profile->alpha == q(1, 2));
    CHECK(cert.profile->k_alpha == 6);  // = s
    CHECK(cert.profile->beta == q(0));
    CHECK(cert.profile->k_beta == 3);  // = b-s-1
    CHECK(cert.profile->grammian_constant == q(4));  // = r
    CHECK(cert.rank == 5);  // spans rank v
    CHECK_FALSE(cert.is_tight);
    CHECK(cert.frame_potential.rational() > Rational(100, 5));  // strict FP excess

    SUBCASE("the Fano plane cannot feed the construction") {
        CHECK_THROWS_AS(qsd_to_frame_basis(fano_plane()), NotQuasiSymmetric);
    }
}

TEST_CASE("simplex construction") {
    SUBCASE("pairs design on [5] reproduces the reference matrix") {
        CHECK(qsd_to_frame_simplex(pairs_design(5)) == reference_fixtures().at("tight10_r4"));
    }
    SUBCASE("pairs design on [4] degenerates to angles -1 and 0") {
        const GramMatrix g = qsd_to_frame_simplex(pairs_design(4));
        const Certificate cert = analyze(g);
        CHECK(cert.profile->alpha == q(0));
        CHECK(cert.profile->beta == q(-1));
        CHECK(cert.rank == 3);
        CHECK(cert.is_tight);
        CHECK(cert.is_balanced);
    }
    SUBCASE("basis and simplex constructions agree through the projection") {
        for (std::size_t n = 5; n <= 8; ++n) {
            const BlockDesign d = pairs_design(n);
            CHECK(project_to_balanced(qsd_to_frame_basis(d)) == qsd_to_frame_simplex(d));
        }
    }
    SUBCASE("the residual of the Fano plane is the pairs design on four points") {
        const BlockDesign fano = fano_plane();
        // delete block {0,1,2} and restrict the others to the remaining points
        std::vector<std::vector<std::size_t>> residual;
        for (std::size_t i = 1; i < fano.b; ++i) {
            std::vector<std::size_t> blk;
            for (std::size_t p : fano.blocks[i])
                if (p >= 3) blk.push_back(p - 3);
            residual.push_back(std::move(blk));
        }
        std::sort(residual.begin(), residual.end());
        const BlockDesign d = validate_design(4, std::move(residual));
        CHECK(d.b == 6);
        CHECK(d.k == 2);
        CHECK(d.lambda == 1);
        CHECK(qsd_to_frame_simplex(d) == qsd_to_frame_simplex(pairs_design(4)));
        CHECK(project_to_balanced(qsd_to_frame_basis(d)) == qsd_to_frame_simplex(d));
    }
}

TEST_CASE("per-row count of the y-angle equals the block-graph degree s") {
    for (std::size_t n = 5; n <= 8; ++n) {
        const BlockDesign d = pairs_design(n);
        const QSDParams p = detect_intersection_numbers(d);
        const SRGParams s = srg_params(p);
        const Certificate cert = analyze(qsd_to_frame_basis(d));
        INFO("n = ", n);
        CHECK(cert.profile->alpha == q(static_cast<long>(p.y), static_cast<long>(p.k)));
        CHECK(cert.profile->k_alpha == s.s);
        CHECK(cert.profile->grammian_constant == q(static_cast<long>(p.r)));
    }
}

TEST_CASE("neighbor substructure") {
    SUBCASE("the 10-vector frame splits into a regular set and a constant set") {
        const GramMatrix g = reference_fixtures().at("tight10_r4");
        const auto parts = neighbor_substructure(g, 0);
        REQUIRE(parts.size() == 2);

        const NeighborPart* ypart = nullptr;
        const NeighborPart* zpart = nullptr;
        for (const auto& part : parts) {
            if (part.value == q(1, 6)) ypart = &part;
            if (part.value == q(-2, 3)) zpart = &part;
        }
        REQUIRE(ypart != nullptr);
        REQUIRE(zpart != nullptr);

        CHECK(ypart->indices.size() == 6);
        CHECK(ypart->kind == PartKind::RegularTwoDistance);
        CHECK(ypart->profile->k_alpha == 3);
        CHECK(ypart->profile->k_beta == 2);

        CHECK(zpart->indices.size() == 3);
        CHECK(zpart->kind == PartKind::Constant);
        CHECK(*zpart->constant_value == q(1, 6));
    }
    SUBCASE("the 8-vector example breaks the pattern") {
        const GramMatrix g = reference_fixtures().at("eight_vector_r5");
        const auto parts = neighbor_substructure(g, 0);
        const NeighborPart* neg = nullptr;
        for (const auto& part : parts)
            if (part.value == q(-1, 3)) neg = &part;
        REQUIRE(neg != nullptr);
        CHECK(neg->indices.size() == 5);
        CHECK(neg->kind == PartKind::Irregular);
    }
    SUBCASE("one-distance input yields a single constant part") {
        const auto parts = neighbor_substructure(simplex_gram(4), 0);
        REQUIRE(parts.size() == 1);
        CHECK(parts[0].kind == PartKind::Constant);
        CHECK(*parts[0].constant_value == q(-1, 4));
    }
}

TEST_CASE("necessary conditions") {
    SUBCASE("pairs design on [5] passes") {
        const auto checks = qsd_necessary_conditions(params(5, 10, 4, 2, 1, 0, 1));
        for (const auto& c : checks)
            if (c.applicable) CHECK(c.pass);
    }
    SUBCASE("the 176-block parameters pass with b even") {
        const auto checks = qsd_necessary_conditions(params(22, 176, 56, 7, 16, 1, 3));
        for (const auto& c : checks) {
            INFO(c.name);
            if (c.applicable) CHECK(c.pass);
            if (c.name == "s even when b odd") CHECK_FALSE(c.applicable);
        }
    }
    SUBCASE("odd b with odd s fails the parity law") {
        const QSDParams bad = params(22, 77, 35, 10, 15, 2, 6);  // s = 47, b = 77
        CHECK(srg_params(bad).s == 47);
        bool parity_failed = false;
        for (const auto& c : qsd_necessary_conditions(bad))
            if (c.name == "s even when b odd" && c.applicable && !c.pass) parity_failed = true;
        CHECK(parity_failed);

        const auto certs = nonexistence_from_conditions(bad);
        REQUIRE(certs.size() >= 1);
        CHECK(certs[0].reason == "s even when b odd");
    }
    SUBCASE("non-integral block-graph data is itself a nonexistence witness") {
        const auto certs = nonexistence_from_conditions(params(11, 11, 5, 5, 2, 1, 3));
        REQUIRE(certs.size() >= 1);
        CHECK(certs[0].reason == "block-graph degree s integral");
    }
}

TEST_CASE("equiangular pipeline") {
    const LinesBoundsTable table = LinesBoundsTable::builtin();

    SUBCASE("36 claimed lines in rank 9 exceed the known 28") {
        const PipelineResult res = equiangular_pipeline(params(9, 36, 20, 5, 10, 1, 3), table);
        REQUIRE(res.lines_claim.has_value());
        CHECK(res.lines_claim->lines == 36);
        CHECK(res.lines_claim->dimension == 9);
        REQUIRE(res.nonexistence.has_value());
        CHECK(res.nonexistence->reason == "lines_bound_conflict");
        CHECK(res.nonexistence->bounds_version == table.version());
    }
    SUBCASE("76 claimed lines in rank 19 exceed the known 75") {
        const PipelineResult res = equiangular_pipeline(params(19, 76, 36, 9, 16, 3, 5), table);
        REQUIRE(res.nonexistence.has_value());
    }
    SUBCASE("the 176-line configuration is consistent") {
        const PipelineResult res = equiangular_pipeline(params(22, 176, 56, 7, 16, 1, 3), table);
        REQUIRE(res.lines_claim.has_value());
        CHECK(res.lines_claim->lines == 176);
        CHECK_FALSE(res.nonexistence.has_value());
    }
    SUBCASE("speculative designs stay inside the recorded intervals") {
        const QSDParams spec[] = {
            params(42, 287, 123, 18, 51, 6, 9),
            params(45, 396, 132, 15, 42, 3, 6),
            params(46, 621, 216, 16, 72, 4, 7),
        };
        const std::size_t lines[] = {287, 396, 621};
        for (int i = 0; i < 3; ++i) {
            for (const auto& c : qsd_necessary_conditions(spec[i]))
                if (c.applicable) CHECK(c.pass);
            const PipelineResult res = equiangular_pipeline(spec[i], table);
            REQUIRE(res.lines_claim.has_value());
            CHECK(res.lines_claim->lines == lines[i]);
            CHECK_FALSE(res.nonexistence.has_value());
            const auto bounds = table.lookup(spec[i].v);
            REQUIRE(bounds.has_value());
            CHECK(lines[i] >= bounds->first);
            CHECK(lines[i] <= bounds->second);
        }
    }
    SUBCASE("no claim without the sufficient condition") {
        const PipelineResult res = equiangular_pipeline(params(11, 11, 5, 5, 2, 2, 3), table);
        CHECK_FALSE(res.lines_claim.has_value());
        CHECK_FALSE(res.nonexistence.has_value());
    }
    SUBCASE("pipeline results are reproducible") {
        const QSDParams p = params(9, 36, 20, 5, 10, 1, 3);
        const PipelineResult a = equiangular_pipeline(p, table);
        const PipelineResult b = equiangular_pipeline(p, table);
        CHECK(a.nonexistence->witness == b.nonexistence->witness);
        CHECK(a.nonexistence->reason == b.nonexistence->reason);
    }
}

TEST_CASE("lines bounds table") {
    const LinesBoundsTable table = LinesBoundsTable::builtin();
    CHECK(lines_bound(table, 22) == std::pair<std::size_t, std::size_t>{176, 176});
    CHECK(lines_bound(table, 42) == std::pair<std::size_t, std::size_t>{276, 288});
    CHECK_FALSE(lines_bound(table, 7).has_value());

    SUBCASE("user tables load from disk") {
        const char* path = "test_bounds.txt";
        {
            std::ofstream out(path);
            out << "# version: local-2\n";
            out << "# dimension lower upper\n";
            out << "7 28 28\n";
            out << "22 176 176\n";
        }
        const LinesBoundsTable local = LinesBoundsTable::load(path);
        CHECK(local.version() == "local-2");
        CHECK(lines_bound(local, 7) == std::pair<std::size_t, std::size_t>{28, 28});
        std::remove(path);
    }
}

TEST_CASE("cross-construction identity on the 176-block design") {
    const BlockDesign d = witt_qsd_22();
    const GramMatrix basis = qsd_to_frame_basis(d);
    const GramMatrix projected = project_to_balanced(basis);
    const GramMatrix simplex = qsd_to_frame_simplex(d);
    CHECK(projected == simplex);
    CHECK(basis.rank() == 22);
    CHECK(simplex.rank() == 21);
}

TEST_CASE("the 176-block quasi-symmetric design") {
    const BlockDesign d = witt_qsd_22();
    CHECK(d.v == 22);
    CHECK(d.b == 176);
    CHECK(d.r == 56);
    CHECK(d.k == 7);
    CHECK(d.lambda == 16);

    const QSDParams p = detect_intersection_numbers(d);
    CHECK(p.x == 1);
    CHECK(p.y == 3);
    CHECK(srg_params(p).s == 105);

    // per-block count of y-intersections equals s, directly on the blocks
    std::size_t y_neighbors = 0;
    for (std::size_t j = 1; j < d.b; ++j) {
        std::size_t inter = 0;
        for (std::size_t pt : d.blocks[0])
            for (std::size_t qt : d.blocks[j])
                if (pt == qt) ++inter;
        if (inter == p.y) ++y_neighbors;
    }
    CHECK(y_neighbors == 105);
}
