#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "wga/sld.hpp"
#include "wga/twist.hpp"
#include "wga/validation.hpp"

using namespace wga;

static SLDDocument load_fixture(const std::string& name) {
    return load_sld(std::string(WGA_FIXTURE_DIR) + "/" + name + ".sld");
}

TEST_CASE("alternation holds on all fixtures, by both formulations") {
    for (const char* name : {"fig8_s2", "trefoil_s2", "kink_s2", "borromean_s2",
                             "sum_trefoils_s2", "flype6_s2", "weave4_t2", "fig2_t2",
                             "10_161_t2"}) {
        SLDDocument doc = load_fixture(name);
        INFO(name);
        CHECK(is_alternating(doc.diagram).alternating);
        // cross-validation: the per-edge and per-face-walk criteria agree
        CHECK(face_walks_alternating(doc.diagram));
    }
}

TEST_CASE("flipping one crossing breaks alternation with an edge witness") {
    SLDDocument doc = load_fixture("fig8_s2");
    auto j = serialize_sld(doc);
    j["crossings"][0]["over_pair"] = "02";
    SLDDocument flipped = parse_sld(j);
    AlternationReport rep = is_alternating(flipped.diagram);
    CHECK_FALSE(rep.alternating);
    REQUIRE(rep.witness_edge.has_value());
    const DiagramEdge& e = flipped.diagram.edges[*rep.witness_edge];
    CHECK(flipped.diagram.is_over_port(e.a.crossing, e.a.port) ==
          flipped.diagram.is_over_port(e.b.crossing, e.b.port));
    CHECK_FALSE(face_walks_alternating(flipped.diagram));
    CHECK_THROWS_WITH(checkerboard_colouring(flipped.diagram),
                      Catch::Matchers::ContainsSubstring("alternating"));
}

TEST_CASE("checkerboard colouring") {
    // sphere diagrams are always colourable
    for (const char* name : {"fig8_s2", "trefoil_s2", "kink_s2", "borromean_s2",
                             "sum_trefoils_s2", "flype6_s2"}) {
        SLDDocument doc = load_fixture(name);
        INFO(name);
        Colouring col = checkerboard_colouring(doc.diagram);
        REQUIRE(col.colourable);
        // adjacent faces differ across every edge
        for (const DiagramEdge& e : doc.diagram.edges) {
            int fa = doc.diagram.faces.dart_face[dart_of(e.a.crossing, e.a.port)];
            int fb = doc.diagram.faces.dart_face[dart_of(e.b.crossing, e.b.port)];
            CHECK(col.colour[fa] != col.colour[fb]);
        }
    }
    SECTION("square weave: two faces of each colour") {
        Colouring col = checkerboard_colouring(load_fixture("weave4_t2").diagram);
        REQUIRE(col.colourable);
        int white = 0, shaded = 0;
        for (int c : col.colour) (c == 0 ? white : shaded)++;
        CHECK(white == 2);
        CHECK(shaded == 2);
    }
    SECTION("one-crossing torus diagram with an annular region is not colourable") {
        Colouring col = checkerboard_colouring(load_fixture("fig2_t2").diagram);
        CHECK_FALSE(col.colourable);
        CHECK(col.odd_cycle.size() >= 1);
    }
}

TEST_CASE("weak primeness") {
    for (const char* name :
         {"fig8_s2", "trefoil_s2", "borromean_s2", "flype6_s2", "weave4_t2", "10_161_t2"}) {
        INFO(name);
        CHECK(is_weakly_prime(load_fixture(name).diagram).weakly_prime);
    }
    SECTION("connected sum fails with the summing circle as witness") {
        SLDDocument doc = load_fixture("sum_trefoils_s2");
        WeakPrimenessReport rep = is_weakly_prime(doc.diagram);
        CHECK_FALSE(rep.weakly_prime);
        REQUIRE(rep.witness.has_value());
        // the witness curve crosses exactly the two edges along which the
        // trefoil diagrams were spliced together
        CHECK(rep.witness->edges == std::array<int, 2>{0, 6});
        CHECK(rep.witness->bounds_disk);
        CHECK(rep.witness->disk_crossings == 3);  // one summand on each side
    }
    SECTION("one-crossing sphere diagram has too few crossings") {
        WeakPrimenessReport rep = is_weakly_prime(load_fixture("kink_s2").diagram);
        CHECK_FALSE(rep.weakly_prime);
        CHECK_THAT(rep.reason, Catch::Matchers::ContainsSubstring("fewer than two"));
    }
    SECTION("a kink on a positive-genus surface bounds a crossing-filled disk") {
        WeakPrimenessReport rep = is_weakly_prime(load_fixture("fig2_t2").diagram);
        CHECK_FALSE(rep.weakly_prime);
        REQUIRE(rep.witness.has_value());
        CHECK(rep.witness->disk_crossings == 1);
        CHECK(rep.witness->edges[0] == rep.witness->edges[1]);  // doubled edge
    }
}

TEST_CASE("weak primeness is a mirror and relabeling invariant") {
    for (const char* name : {"fig8_s2", "sum_trefoils_s2"}) {
        SLDDocument doc = load_fixture(name);
        INFO(name);
        bool expected = is_weakly_prime(doc.diagram).weakly_prime;
        auto j = serialize_sld(doc);
        for (auto& c : j["crossings"])
            c["over_pair"] = c["over_pair"] == "02" ? "13" : "02";
        CHECK(is_weakly_prime(parse_sld(j).diagram).weakly_prime == expected);
        auto k = serialize_sld(doc);
        const int n = doc.diagram.num_crossings();
        for (auto& c : k["crossings"]) c["id"] = n - 1 - c["id"].get<int>();
        for (auto& e : k["edges"])
            for (auto& end : e) end[0] = n - 1 - end[0].get<int>();
        CHECK(is_weakly_prime(parse_sld(k).diagram).weakly_prime == expected);
    }
}

TEST_CASE("no curve crossing at most three edges bounds a crossing-filled disk") {
    // A disk-bounding curve meets the projection an even number of times, so
    // with weak primeness this covers every curve crossing <= 3 edges.
    for (const char* name : {"weave4_t2", "10_161_t2"}) {
        INFO(name);
        CHECK(two_cut_disk_sides_crossing_free(load_fixture(name).diagram));
    }
}

TEST_CASE("twist structure") {
    SECTION("figure-eight: two 2-crossing chains") {
        TwistStructure ts = twist_structure(load_fixture("fig8_s2").diagram);
        CHECK(ts.tw == 2);
        CHECK_FALSE(ts.bigon_cycle.has_value());
        for (const TwistRegion& r : ts.regions) {
            CHECK(r.is_chain);
            CHECK(r.crossings.size() == 2);
            CHECK(r.bigon_faces.size() == 1);
        }
        CHECK(ts.tw_per_component == std::vector<int>{2});
    }
    SECTION("borromean rings: no bigons, six lone crossings") {
        TwistStructure ts = twist_structure(load_fixture("borromean_s2").diagram);
        CHECK(ts.tw == 6);
        for (const TwistRegion& r : ts.regions) CHECK(r.bigon_faces.empty());
        CHECK(ts.tw_per_component == std::vector<int>{4, 4, 4});
    }
    SECTION("trefoil: a closed cycle of bigons") {
        TwistStructure ts = twist_structure(load_fixture("trefoil_s2").diagram);
        REQUIRE(ts.bigon_cycle.has_value());
        CHECK(ts.bigon_cycle->size() == 3);
    }
    SECTION("square weave: no bigons") {
        TwistStructure ts = twist_structure(load_fixture("weave4_t2").diagram);
        CHECK(ts.tw == 4);
        CHECK_FALSE(ts.bigon_cycle.has_value());
    }
    SECTION("flype fixture: lone, chain, lone, chain") {
        TwistStructure ts = twist_structure(load_fixture("flype6_s2").diagram);
        CHECK(ts.tw == 4);
        std::multiset<size_t> sizes;
        for (const TwistRegion& r : ts.regions) sizes.insert(r.crossings.size());
        CHECK(sizes == std::multiset<size_t>{1, 1, 2, 2});
    }
    SECTION("11-crossing torus diagram: ten twist regions") {
        TwistStructure ts = twist_structure(load_fixture("10_161_t2").diagram);
        CHECK(ts.tw == 10);
        CHECK_FALSE(ts.bigon_cycle.has_value());
    }
}

TEST_CASE("weak twist-reducedness") {
    for (const char* name : {"fig8_s2", "borromean_s2", "weave4_t2", "10_161_t2"}) {
        INFO(name);
        CHECK(is_weakly_twist_reduced(load_fixture(name).diagram).weakly_twist_reduced);
    }
    SECTION("flype position: lone crossings separated by a twist region") {
        SLDDocument doc = load_fixture("flype6_s2");
        TwistReducedReport rep = is_weakly_twist_reduced(doc.diagram);
        CHECK_FALSE(rep.weakly_twist_reduced);
        REQUIRE(rep.witness.has_value());
        // the witness curve runs through corners of the two lone crossings
        TwistStructure ts = twist_structure(doc.diagram);
        CHECK(ts.regions[ts.region_of[rep.witness->crossing1]].crossings.size() == 1);
        CHECK(ts.regions[ts.region_of[rep.witness->crossing2]].crossings.size() == 1);
        CHECK_FALSE(rep.witness->disk_crossings.empty());
    }
}

TEST_CASE("full diagrammatic certificate") {
    SECTION("square weave in a thickened torus passes") {
        SLDDocument doc = load_fixture("weave4_t2");
        Certificate cert = wga_certificate(doc.diagram, doc.ambient);
        CHECK(cert.passed());
        CHECK(cert.conclusion == "weakly generalised alternating");
        for (const Hypothesis& h : cert.hypotheses)
            CHECK(h.status == HypothesisStatus::Pass);
    }
    SECTION("non-colourable torus diagram fails at colourability") {
        SLDDocument doc = load_fixture("fig2_t2");
        Certificate cert = wga_certificate(doc.diagram, doc.ambient);
        CHECK_FALSE(cert.passed());
        CHECK_THAT(cert.refusal,
                   Catch::Matchers::StartsWith("checkerboard colourable"));
    }
    SECTION("declared representativity flows into the certificate") {
        SLDDocument doc = load_fixture("10_161_t2");
        Certificate cert = wga_certificate(doc.diagram, doc.ambient);
        CHECK(cert.passed());
        bool found = false;
        for (const Hypothesis& h : cert.hypotheses)
            if (h.name == "representativity at least 4") {
                found = true;
                CHECK(h.provenance == "declared");
            }
        CHECK(found);
    }
    SECTION("sphere splittings have representativity 2 and fail") {
        SLDDocument doc = load_fixture("borromean_s2");
        Certificate cert = wga_certificate(doc.diagram, doc.ambient);
        CHECK_FALSE(cert.passed());
        CHECK_THAT(cert.refusal, Catch::Matchers::ContainsSubstring("representativity"));
    }
    SECTION("a crossing-free component fails the first hypothesis") {
        SLDDocument doc = load_fixture("weave4_t2");
        auto j = serialize_sld(doc);
        j["free_loops"] = 1;
        SLDDocument withloop = parse_sld(j);
        Certificate cert = wga_certificate(withloop.diagram, withloop.ambient);
        CHECK_FALSE(cert.passed());
        CHECK_THAT(cert.refusal,
                   Catch::Matchers::StartsWith("every link component meets a crossing"));
    }
    SECTION("undeclared topological inputs refuse rather than fail") {
        SLDDocument doc = load_fixture("weave4_t2");
        AmbientContext ctx;
        ctx.kind = AmbientKind::HeegaardTorusS3;  // no compressing slopes given
        Certificate cert = wga_certificate(doc.diagram, ctx);
        CHECK_FALSE(cert.passed());
        CHECK_THAT(cert.refusal, Catch::Matchers::ContainsSubstring("undeclared"));
    }
    SECTION("a conclusion is only ever emitted when every hypothesis passes") {
        for (const char* name : {"fig8_s2", "trefoil_s2", "kink_s2", "borromean_s2",
                                 "sum_trefoils_s2", "flype6_s2", "weave4_t2",
                                 "fig2_t2", "10_161_t2"}) {
            SLDDocument doc = load_fixture(name);
            Certificate cert = wga_certificate(doc.diagram, doc.ambient);
            INFO(name);
            bool all_pass = true;
            for (const Hypothesis& h : cert.hypotheses)
                if (h.status != HypothesisStatus::Pass) all_pass = false;
            CHECK(cert.passed() == all_pass);
            CHECK(cert.conclusion.empty() == !cert.refusal.empty());
        }
    }
}
