#include <catch2/catch_amalgamated.hpp>

#include "wga/report.hpp"

using namespace wga;
using Catch::Matchers::ContainsSubstring;

static SLDDocument load_fixture(const std::string& name) {
    return load_sld(std::string(WGA_FIXTURE_DIR) + "/" + name + ".sld");
}

static const std::set<std::string> kAll = {"validate", "invariants", "chunks",
                                           "classify", "dehn"};

TEST_CASE("symbolic number rendering") {
    CHECK(pi_quarters(0) == "0");
    CHECK(pi_quarters(1) == "pi/4");
    CHECK(pi_quarters(2) == "pi/2");
    CHECK(pi_quarters(4) == "pi");
    CHECK(pi_quarters(5) == "5 pi/4");
    CHECK(pi_quarters(6) == "3 pi/2");
    CHECK(pi_quarters(8) == "2 pi");
    CHECK(pi_quarters(20) == "5 pi");
    CHECK(v8_multiples(1.0) == "v8");
    CHECK(v8_multiples(2.0) == "2 v8");
    CHECK(v8_multiples(0.5) == "v8/2");
    CHECK(v8_multiples(1.5) == "3/2 v8");
    CHECK(v8_multiples(0.3).empty());
    CHECK(decimal6(7.32772475341774) == "7.327725");
}

TEST_CASE("report is stable under re-serialization") {
    for (const char* name : {"fig8_s2", "weave4_t2", "trefoil_s2", "fig2_t2",
                             "10_161_t2", "knot_g5"}) {
        INFO(name);
        SLDDocument doc = load_fixture(name);
        PipelineOptions opt;
        opt.slope = Slope{0, 1, 5};
        nlohmann::json r1 = run_pipeline(doc, kAll, opt);
        nlohmann::json r2 = nlohmann::json::parse(r1.dump());
        CHECK(r1 == r2);
        CHECK(r1.dump() == r2.dump());
        // deterministic across runs
        CHECK(r1.dump() == run_pipeline(load_fixture(name), kAll, opt).dump());
    }
}

TEST_CASE("validate section") {
    SECTION("figure-eight: everything passes except representativity") {
        nlohmann::json r = run_pipeline(load_fixture("fig8_s2"), {"validate"});
        const auto& v = r["validate"];
        CHECK(v["alternating"]["holds"] == true);
        CHECK(v["checkerboard_colourable"]["holds"] == true);
        CHECK(v["weakly_prime"]["holds"] == true);
        CHECK(v["representativity"]["r"] == 2);
        CHECK(v["certificate"]["passed"] == false);
        CHECK_THAT(v["certificate"]["refusal"].get<std::string>(),
                   ContainsSubstring("representativity"));
    }
    SECTION("square weave: full certificate with infinite representativity") {
        nlohmann::json r = run_pipeline(load_fixture("weave4_t2"), {"validate"});
        const auto& v = r["validate"];
        CHECK(v["representativity"]["r"] == "inf");
        CHECK(v["certificate"]["passed"] == true);
    }
    SECTION("non-colourable diagram") {
        nlohmann::json r = run_pipeline(load_fixture("fig2_t2"), {"validate"});
        const auto& v = r["validate"];
        CHECK(v["alternating"]["holds"] == true);
        CHECK(v["checkerboard_colourable"]["holds"] == false);
        CHECK(v["representativity"]["e"] == 0);
    }
    SECTION("weak primeness witness is reported") {
        nlohmann::json r =
            run_pipeline(load_fixture("sum_trefoils_s2"), {"validate"});
        const auto& wp = r["validate"]["weakly_prime"];
        CHECK(wp["holds"] == false);
        CHECK(wp.contains("witness"));
        CHECK(wp["witness"]["edges"].size() == 2);
    }
}

TEST_CASE("invariants section") {
    nlohmann::json r = run_pipeline(load_fixture("weave4_t2"), {"invariants"});
    const auto& v = r["invariants"];
    CHECK(v["twist"]["tw"] == 4);
    CHECK(v["volume"]["certificate"]["passed"] == true);
    CHECK(v["volume"]["lower_bound"]["decimal"] == "7.327725");
    CHECK(v["volume"]["lower_bound"]["symbolic"] == "2 v8");
    CHECK(v["guts"]["shaded"]["chi"] == -2);
    CHECK(v["guts"]["white"]["chi"] == -2);
    CHECK(v["surface_geometry"]["shaded"]["kind"] == "quasifuchsian");
    CHECK(v["primeness"]["passed"] == true);
}

TEST_CASE("chunks section") {
    SECTION("figure-eight decomposition dump") {
        nlohmann::json r = run_pipeline(load_fixture("fig8_s2"), {"chunks"});
        const auto& c = r["chunks"];
        CHECK(c["num_chunks"] == 2);
        CHECK(c["edge_classes"].size() == 4);
        for (const auto& ec : c["edge_classes"]) CHECK(ec["members"].size() == 4);
        CHECK(c["boundary_squares"].size() == 8);
        CHECK(c["angled_structure"]["passed"] == true);
    }
    SECTION("diagrams without a decomposition are refused, not errors") {
        SLDDocument doc = load_fixture("fig8_s2");
        doc.diagram.free_loops = 1;  // a crossing-free component blocks the build
        nlohmann::json r = run_pipeline(doc, {"chunks"});
        CHECK(r["chunks"].contains("refused"));
    }
}

TEST_CASE("classify section") {
    nlohmann::json r = run_pipeline(load_fixture("weave4_t2"), {"classify"});
    CHECK(r["classify"]["geometry"] == "hyperbolic");
    nlohmann::json r2 = run_pipeline(load_fixture("trefoil_s2"), {"classify"});
    CHECK(r2["classify"]["geometry"] == "unknown");
}

TEST_CASE("dehn section") {
    SECTION("weave with a long slope") {
        PipelineOptions opt;
        opt.component = 0;
        opt.slope = Slope{0, 1, 5};
        nlohmann::json r = run_pipeline(load_fixture("weave4_t2"), {"dehn"}, opt);
        const auto& d = r["dehn"];
        CHECK(d["harlequin_tiling"]["length"] == 4);
        CHECK(d["slope_length_bounds"]["certificate"]["passed"] == false);  // link
        CHECK(d["combinatorial_length"]["lower_bound"]["symbolic"] == "5 pi");
        CHECK(d["combinatorial_length"]["certifies_hyperbolic"] == true);
        CHECK(d["filling"]["hyperbolic"] == true);
    }
    SECTION("figure-eight knot bounds") {
        nlohmann::json r = run_pipeline(load_fixture("fig8_s2"), {"dehn"});
        const auto& d = r["dehn"];
        CHECK(d["harlequin_tiling"]["length"] == 8);
        CHECK(d["slope_length_bounds"]["meridian"]["decimal"] == "1.500000");
        CHECK(d["slope_length_bounds"]["longitude"]["decimal"] == "6.000000");
        CHECK(d["geometric_threshold"]["q_threshold"]["decimal"] == "2.686500");
    }
    SECTION("declared ambient facts are surfaced in the summary") {
        nlohmann::json r = run_pipeline(load_fixture("knot_g5"), {"dehn"});
        CHECK(r["summary"]["ambient"]["atoroidal"] == true);
        CHECK(r["summary"]["ambient"]["kind"] == "Declared");
        CHECK(r["summary"]["ambient"].contains("declared_representativity"));
    }
}
