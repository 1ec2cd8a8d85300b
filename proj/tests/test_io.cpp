#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twodist/errors.hpp"
#include "twodist/io.hpp"
#include "twodist/realize.hpp"
#include "twodist/version.hpp"

using namespace twodist;

TEST_CASE("gram json round trip across fixtures") {
    auto fixtures = reference_fixtures();
    fixtures.insert({"conference6", conference_etf_gram(6)});
    for (const auto& [name, g] : fixtures) {
        INFO(name);
        const json j = gram_to_json(g);
        CHECK(gram_from_json(j) == g);
        // serialization is deterministic
        CHECK(j.dump() == gram_to_json(g).dump());
    }
}

TEST_CASE("gram json carries the field radicand") {
    const json j = gram_to_json(conference_etf_gram(6));
    CHECK(j.at("d").get<long>() == 5);
    const json rational = gram_to_json(reference_fixtures().at("tight10_r4"));
    CHECK(rational.at("d").get<long>() == 0);
}

TEST_CASE("malformed gram json is rejected") {
    json j = gram_to_json(reference_fixtures().at("tight10_r4"));

    SUBCASE("asymmetry") {
        j["rows"][0][1] = "1/7";
        CHECK_THROWS_AS(gram_from_json(j), NotSymmetric);
    }
    SUBCASE("bad scalar") {
        j["rows"][0][1] = "wat";
        CHECK_THROWS_AS(gram_from_json(j), ParseError);
    }
    SUBCASE("wrong radicand declaration") {
        j["d"] = 7;
        CHECK_THROWS_AS(gram_from_json(j), Error);
    }
    SUBCASE("row count mismatch") {
        j["m"] = 9;
        CHECK_THROWS_AS(gram_from_json(j), Error);
    }
}

TEST_CASE("certificate json") {
    const Certificate cert = analyze(reference_fixtures().at("tight10_r4"));
    const json j = certificate_to_json(cert);
    CHECK(j.at("artifact_version").get<std::string>() == kVersion);
    CHECK(j.at("m").get<std::size_t>() == 10);
    CHECK(j.at("rank").get<std::size_t>() == 4);
    CHECK(j.at("is_tight").get<bool>());
    CHECK(j.at("tight_bound").get<std::string>() == "5/2");
    CHECK(j.at("profile").at("alpha").get<std::string>() == "1/6");
    CHECK(j.at("profile").at("k_alpha").get<std::size_t>() == 6);
    CHECK(j.at("frame_potential").get<std::string>() == "25");
    CHECK(j.at("bound_flags").is_array());
}

TEST_CASE("design json round trip is 1-based") {
    const BlockDesign d = pairs_design(4);
    const json j = design_to_json(d);
    CHECK(j.at("blocks")[0][0].get<int>() == 1);  // smallest point prints as 1
    const BlockDesign back = design_from_json(j);
    CHECK(back.v == d.v);
    CHECK(back.blocks == d.blocks);

    json bad = j;
    bad["blocks"][0][0] = 0;
    CHECK_THROWS_AS(design_from_json(bad), Error);
}

TEST_CASE("params json") {
    json j;
    j["v"] = 9;
    j["b"] = 36;
    j["r"] = 20;
    j["k"] = 5;
    j["lambda"] = 10;
    j["x"] = 1;
    j["y"] = 3;
    const QSDParams q = params_from_json(j);
    CHECK(q.b == 36);
    CHECK(params_to_json(q) == j);

    j["r"] = 21;  // vr = bk broken
    CHECK_THROWS_AS(params_from_json(j), IdentityViolation);
}

TEST_CASE("frame json text is byte-stable with 17 significant digits") {
    const VectorFrame f = realize(reference_fixtures().at("tight10_r4"));
    const std::string text = frame_to_json_text(f);
    CHECK(text == frame_to_json_text(f));
    CHECK(text.find("\"n\": 4") != std::string::npos);
    CHECK(text.find("\"m\": 10") != std::string::npos);

    const VectorFrame back = frame_from_json(json::parse(text));
    CHECK(back.n == f.n);
    CHECK(back.m == f.m);
    for (std::size_t j = 0; j < f.m; ++j)
        for (std::size_t i = 0; i < f.n; ++i)
            CHECK(back.columns[j][i] == f.columns[j][i]);  // %.17g round-trips doubles
}

TEST_CASE("pipeline json embeds versions") {
    const LinesBoundsTable table = LinesBoundsTable::builtin();
    QSDParams p;
    p.v = 9; p.b = 36; p.r = 20; p.k = 5; p.lambda = 10; p.x = 1; p.y = 3;
    const json j = pipeline_to_json(equiangular_pipeline(p, table), table.version());
    CHECK(j.at("artifact_version").get<std::string>() == kVersion);
    CHECK(j.at("bounds_version").get<std::string>() == "builtin-1");
    CHECK(j.at("nonexistence").at("reason").get<std::string>() == "lines_bound_conflict");
    CHECK(j.at("lines_claim").at("lines").get<std::size_t>() == 36);
}
