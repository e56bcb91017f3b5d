#pragma once

// How the projection surface sits inside the ambient 3-manifold: either a
// thickened surface F x I, a Heegaard torus in S^3, or a context with
// declared (unverified) topological facts.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wga {

// Integer extended with +infinity; infinity compares above every integer.
struct ExtInt {
    bool infinite = false;
    long long value = 0;

    static ExtInt inf() { return {true, 0}; }
    static ExtInt of(long long v) { return {false, v}; }

    friend bool operator==(const ExtInt& x, const ExtInt& y) {
        return x.infinite == y.infinite && (x.infinite || x.value == y.value);
    }
    friend bool operator<(const ExtInt& x, const ExtInt& y) {
        if (x.infinite) return false;
        if (y.infinite) return true;
        return x.value < y.value;
    }
    friend bool operator<=(const ExtInt& x, const ExtInt& y) { return x == y || x < y; }
    friend bool operator>(const ExtInt& x, const ExtInt& y) { return y < x; }
    friend bool operator>=(const ExtInt& x, const ExtInt& y) { return y <= x; }

    std::string str() const { return infinite ? "inf" : std::to_string(value); }
};

inline ExtInt min(ExtInt a, ExtInt b) { return a < b ? a : b; }
inline ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }

enum class AmbientKind { ThickenedSurface, HeegaardTorusS3, Declared };

struct SlopePair {
    long long a = 0, b = 0;  // primitive homology class on the torus
};

struct DeclaredRep {
    ExtInt r_minus, r_plus;
    std::string note;  // provenance of the declared values
};

// One boundary component of the ambient manifold Y.
struct BoundaryComponent {
    int genus = 0;
    int euler_char() const { return 2 - 2 * genus; }
};

struct AmbientContext {
    AmbientKind kind = AmbientKind::ThickenedSurface;

    // Declared contexts: explicit boundary of Y (ThickenedSurface derives it
    // from F; HeegaardTorusS3 has closed Y = S^3).
    std::vector<BoundaryComponent> boundary_of_Y;

    // Topological facts the tool cannot compute; absent means undeclared.
    std::optional<bool> is_atoroidal;              // Y cut along N(F) is atoroidal
    std::optional<bool> is_boundary_anannular;     // ... and boundary-anannular
    std::optional<bool> boundary_incompressible;   // boundary of Y is incompressible

    // Genus-1-in-S^3 classification inputs.
    std::optional<bool> heegaard;               // F is a Heegaard torus of S^3
    std::optional<bool> annulus_core_knotted;   // core of an annular region is knotted

    // Per surface component, declared representativity values.
    std::vector<std::optional<DeclaredRep>> declared_representativity;

    // HeegaardTorusS3: compressing-disk slopes, one per side.
    std::optional<SlopePair> slope_minus, slope_plus;
};

// Euler characteristic of the boundary of Y.
inline int boundary_euler_char(const AmbientContext& ctx, int chi_F) {
    switch (ctx.kind) {
        case AmbientKind::ThickenedSurface:
            return 2 * chi_F;  // two parallel copies of F
        case AmbientKind::HeegaardTorusS3:
            return 0;  // Y = S^3 is closed
        case AmbientKind::Declared: {
            int chi = 0;
            for (const BoundaryComponent& b : ctx.boundary_of_Y) chi += b.euler_char();
            return chi;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace wga
