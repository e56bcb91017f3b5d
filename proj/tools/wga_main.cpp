// wga: analyse surface link diagrams.
//
//   wga validate|invariants|chunks|classify|dehn <file.sld>
//       [--json] [--component N] [--slope p/q]
//
// Exit status is 0 unless the file cannot be parsed or the usage is wrong;
// refused certificates are reported, not errors.

#include <cstdio>
#include <cstring>
#include <numeric>
#include <optional>
#include <string>

#include "wga/report.hpp"

namespace {

int usage() {
    std::fputs(
        "usage: wga <validate|invariants|chunks|classify|dehn> <file.sld>\n"
        "           [--json] [--component N] [--slope p/q]\n",
        stderr);
    return 2;
}

void print_certificate(const nlohmann::json& c, const char* indent = "  ") {
    std::printf("%s%s\n", indent, c["statement"].get<std::string>().c_str());
    for (const auto& h : c["hypotheses"]) {
        std::string status = h["status"].get<std::string>();
        const char* mark = status == "pass" ? "ok " : status == "fail" ? "FAIL" : "?? ";
        std::printf("%s  [%s] %s", indent, mark, h["name"].get<std::string>().c_str());
        if (h.contains("provenance"))
            std::printf(" (%s)", h["provenance"].get<std::string>().c_str());
        if (h.contains("detail"))
            std::printf(": %s", h["detail"].get<std::string>().c_str());
        std::printf("\n");
    }
    if (c.contains("conclusion"))
        std::printf("%s=> %s\n", indent, c["conclusion"].get<std::string>().c_str());
    if (c.contains("refusal"))
        std::printf("%s=> refused: %s\n", indent,
                    c["refusal"].get<std::string>().c_str());
}

std::string num(const nlohmann::json& n) {
    std::string s = n["decimal"].get<std::string>();
    if (n.contains("symbolic")) s += " (" + n["symbolic"].get<std::string>() + ")";
    return s;
}

void print_summary(const nlohmann::json& s) {
    if (s.contains("label"))
        std::printf("%s\n", s["label"].get<std::string>().c_str());
    std::printf("crossings %d, edges %d, regions %d, link components %d, "
                "euler characteristic %d\n",
                s["crossings"].get<int>(), s["edges"].get<int>(),
                s["regions"].get<int>(), s["link_components"].get<int>(),
                s["euler_characteristic"].get<int>());
    for (const auto& f : s["surfaces"])
        std::printf("surface %d: genus %d\n", f["id"].get<int>(),
                    f["genus"].get<int>());
    std::printf("ambient: %s\n", s["ambient"].dump().c_str());
}

void print_flag(const nlohmann::json& j, const char* key, const char* label) {
    const auto& f = j[key];
    std::printf("%-24s %s", label, f["holds"].get<bool>() ? "yes" : "NO");
    if (f.contains("detail"))
        std::printf(" (%s)", f["detail"].get<std::string>().c_str());
    std::printf("\n");
}

void print_validate(const nlohmann::json& v) {
    print_flag(v, "alternating", "alternating");
    print_flag(v, "checkerboard_colourable", "checkerboard colourable");
    print_flag(v, "weakly_prime", "weakly prime");
    print_flag(v, "weakly_twist_reduced", "weakly twist-reduced");
    const auto& r = v["representativity"];
    if (r.contains("status"))
        std::printf("representativity: undeclared (%s)\n",
                    r["detail"].get<std::string>().c_str());
    else
        std::printf("representativity: r = %s, r-hat = %s, e = %s (%s)\n",
                    r["r"].dump().c_str(), r["r_hat"].dump().c_str(),
                    r["e"].dump().c_str(), r["method"].get<std::string>().c_str());
    std::printf("\n");
    print_certificate(v["certificate"]);
}

void print_invariants(const nlohmann::json& v) {
    if (v["checkerboard"].contains("error")) {
        std::printf("checkerboard surfaces: %s\n",
                    v["checkerboard"]["error"].get<std::string>().c_str());
    } else {
        const auto& c = v["checkerboard"];
        std::printf("checkerboard surfaces: chi = %d (shaded), %d (white); "
                    "non-bigon regions %d / %d; boundary intersection %d\n",
                    c["chi_shaded"].get<int>(), c["chi_white"].get<int>(),
                    c["nonbigon_regions_shaded"].get<int>(),
                    c["nonbigon_regions_white"].get<int>(),
                    c["boundary_intersection_number"].get<int>());
    }
    if (v.contains("twist")) {
        std::printf("twist number %d", v["twist"]["tw"].get<int>());
        if (v["twist"].contains("bigon_cycle_crossings"))
            std::printf(" (closed bigon cycle present)");
        std::printf("\n");
    }
    std::printf("\nvolume:\n");
    print_certificate(v["volume"]["certificate"]);
    if (v["volume"].contains("lower_bound"))
        std::printf("  lower bound %s\n", num(v["volume"]["lower_bound"]).c_str());
    for (const char* col : {"shaded", "white"}) {
        std::printf("\nguts along the %s surface:\n", col);
        print_certificate(v["guts"][col]["certificate"]);
        std::printf("\n%s surface geometry: %s\n", col,
                    v["surface_geometry"][col]["kind"].get<std::string>().c_str());
        if (v["surface_geometry"][col].contains("facts"))
            for (const auto& f : v["surface_geometry"][col]["facts"])
                std::printf("  - %s\n", f.get<std::string>().c_str());
        if (v["surface_geometry"][col].contains("alternative"))
            std::printf("  - %s\n",
                        v["surface_geometry"][col]["alternative"]
                            .get<std::string>()
                            .c_str());
    }
    std::printf("\nprimeness:\n");
    print_certificate(v["primeness"]);
}

void print_classify(const nlohmann::json& v) {
    std::printf("geometry: %s\n", v["geometry"].get<std::string>().c_str());
    if (v.contains("notes"))
        for (const auto& n : v["notes"])
            std::printf("  - %s\n", n.get<std::string>().c_str());
    std::printf("\n");
    print_certificate(v["certificate"]);
}

void print_dehn(const nlohmann::json& v) {
    std::printf("component %d\n", v["component"].get<int>());
    if (v["harlequin_tiling"].contains("length"))
        std::printf("harlequin tiling: %d boundary squares\n",
                    v["harlequin_tiling"]["length"].get<int>());
    std::printf("\nslope length bounds:\n");
    print_certificate(v["slope_length_bounds"]["certificate"]);
    if (v["slope_length_bounds"].contains("note"))
        std::printf("  note: %s\n",
                    v["slope_length_bounds"]["note"].get<std::string>().c_str());
    std::printf("\ngeometric filling threshold:\n");
    print_certificate(v["geometric_threshold"]["certificate"]);
    if (!v.contains("slope")) return;
    std::printf("\nslope %s\n", v["slope"].get<std::string>().c_str());
    std::printf("\nfilled volume:\n");
    print_certificate(v["filled_volume"]["certificate"]);
    std::printf("\ncombinatorial length:\n");
    print_certificate(v["combinatorial_length"]["certificate"]);
    if (v["combinatorial_length"].contains("lower_bound"))
        std::printf("  lower bound %s\n",
                    num(v["combinatorial_length"]["lower_bound"]).c_str());
    std::printf("\nfilling certificate:\n");
    if (v["filling"].contains("error"))
        std::printf("  %s\n", v["filling"]["error"].get<std::string>().c_str());
    else {
        print_certificate(v["filling"]["certificate"]);
        if (v["filling"].contains("reason"))
            std::printf("  verdict: %s (%s)\n",
                        v["filling"]["hyperbolic"].get<bool>() ? "hyperbolic"
                        : v["filling"]["trivial"].get<bool>()  ? "trivial"
                                                               : "no conclusion",
                        v["filling"]["reason"].get<std::string>().c_str());
    }
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 3) return usage();
    std::string cmd = argv[1];
    std::string file = argv[2];
    bool json = false;
    wga::PipelineOptions opt;
    bool have_slope = false;
    long long sp = 0, sq = 0;
    for (int i = 3; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--json") {
            json = true;
        } else if (a == "--component" && i + 1 < argc) {
            opt.component = std::atoi(argv[++i]);
        } else if (a == "--slope" && i + 1 < argc) {
            if (std::sscanf(argv[++i], "%lld/%lld", &sp, &sq) != 2) return usage();
            have_slope = true;
        } else {
            return usage();
        }
    }
    if (have_slope) opt.slope = wga::Slope{opt.component, sp, sq};

    if (cmd != "validate" && cmd != "invariants" && cmd != "chunks" &&
        cmd != "classify" && cmd != "dehn")
        return usage();

    wga::SLDDocument doc;
    try {
        doc = wga::load_sld(file);
    } catch (const wga::diagram_error& e) {
        std::fprintf(stderr, "wga: %s: %s\n", file.c_str(), e.what());
        return 1;
    }

    nlohmann::json report = wga::run_pipeline(doc, {cmd}, opt);

    // chunk dumps are JSON-only; everything else has a text rendering
    if (json || cmd == "chunks") {
        std::printf("%s\n", report.dump(2).c_str());
        return 0;
    }
    print_summary(report["summary"]);
    std::printf("\n");
    if (cmd == "validate") print_validate(report["validate"]);
    if (cmd == "invariants") print_invariants(report["invariants"]);
    if (cmd == "classify") print_classify(report["classify"]);
    if (cmd == "dehn") print_dehn(report["dehn"]);
    return 0;
}
