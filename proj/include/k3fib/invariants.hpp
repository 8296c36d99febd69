#pragma once

/// Global invariants of a classified fibration: parity of the beta'
/// half-twists, the canonical-divisor degree
///
///   deg K = (2g - 2) + N/6 + sum_P deg(P) * S_P,
///
/// Betti numbers b1 = 2g, b2 = 20 + sum deg*(C - 1), b3 = 6(g-1) + sum
/// deg*R with their applicability flags, the Euler characteristic, and the
/// Calabi-Yau candidacy test (degree-0 necessary condition).
///
/// All sums over points of the base run over places weighted by degree;
/// local data is constant along a Galois orbit, so this is exact.

#include "k3fib/classifier.hpp"
#include "k3fib/ratfunc.hpp"
#include "k3fib/weierstrass.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3fib {

struct ClassifiedPlace {
    Place place;
    LocalData local;
    FibreRecord fibre;
};

struct FibrationData {
    int genus = 0;
    int map_deg = 1;  // N = degree of the functional invariant map
    std::vector<ClassifiedPlace> places;
    std::vector<std::string> notes;
};

/// Classify every critical place of a Weierstrass datum over P^1. Smooth
/// I0 places where only the Weierstrass model degenerates (even-b beta'
/// twists at generic gamma) are listed; they contribute nothing to any sum.
inline FibrationData build_fibration(const WeierstrassDatum& datum) {
    FibrationData data;
    data.genus = 0;
    data.map_deg = map_degree(datum.gamma);
    Int zero_order(0);
    for (auto& [place, local] : critical_places(datum.gamma, datum.beta_prime, true)) {
        if (local.gamma_class == GammaClass::Zero) zero_order += Int(place.degree()) * local.d;
        data.places.push_back({place, local, classify(local)});
    }
    if (zero_order != data.map_deg)
        throw std::runtime_error("internal: zero divisor of gamma does not sum to the map degree");
    return data;
}

/// Builds from an explicit place list (used for higher-genus bases and
/// hand-constructed data). The map degree is inferred as the largest class
/// sum unless supplied; disagreement between the three class sums is
/// recorded as a note.
inline FibrationData build_fibration_from_places(int genus,
                                                 const std::vector<std::pair<Place, LocalData>>& places,
                                                 std::optional<int> map_deg = std::nullopt) {
    FibrationData data;
    data.genus = genus;
    Int sums[3] = {Int(0), Int(0), Int(0)};
    for (const auto& [place, local] : places) {
        data.places.push_back({place, local, classify(local)});
        if (local.gamma_class != GammaClass::Generic)
            sums[static_cast<int>(local.gamma_class)] += Int(place.degree()) * local.d;
    }
    Int inferred = std::max({sums[0], sums[1], sums[2]});
    if (map_deg) {
        data.map_deg = *map_deg;
    } else if (inferred == 0) {
        data.map_deg = 1;
        data.notes.push_back(
            "map degree not inferable (no gamma-critical places listed); assuming N = 1, supply "
            "map_degree to override");
    } else {
        data.map_deg = static_cast<int>(inferred);
    }
    if (sums[0] != sums[1] || sums[1] != sums[2]) {
        std::ostringstream os;
        os << "class sums of deg*d differ (gamma=0: " << sums[0] << ", gamma=-1: " << sums[1]
           << ", gamma=inf: " << sums[2] << "); an actual functional invariant hits each of 0, -1, "
           << "infinity exactly N times";
        data.notes.push_back(os.str());
    }
    return data;
}

/// True iff the beta' half-twists cancel: sum of deg * (b mod 2) is even.
/// Automatic for data built from a rational beta' (principal divisors have
/// degree zero), so there it is an internal consistency assertion.
inline bool parity_check(const FibrationData& data) {
    long long total = 0;
    for (const auto& p : data.places) total += static_cast<long long>(p.place.degree()) * (p.local.b % 2);
    return total % 2 == 0;
}

inline Rat canonical_degree(const FibrationData& data) {
    Rat deg = Rat(2 * data.genus - 2) + Rat(data.map_deg, 6);
    for (const auto& p : data.places) deg += Rat(p.place.degree()) * p.fibre.S;
    return deg;
}

struct BettiNumbers {
    std::optional<Int> b0, b1, b2, b3, b4, b5, b6;
    std::vector<std::string> flags;
};

/// The smoothness criterion: every fibre over gamma = -1 has type III with
/// d = 1. Returns the offending type name when violated.
inline std::optional<std::string> smoothness_violation(const FibrationData& data) {
    for (const auto& p : data.places) {
        if (p.local.gamma_class != GammaClass::MinusOne) continue;
        if (p.fibre.type.kind == FibreKind::III && p.local.d == 1) continue;
        return p.fibre.type.str();
    }
    return std::nullopt;
}

inline BettiNumbers betti(const FibrationData& data) {
    BettiNumbers b;
    b.b0 = Int(1);
    b.b6 = Int(1);
    b.b1 = Int(2 * data.genus);
    b.b5 = b.b1;

    if (auto bad = smoothness_violation(data))
        b.flags.push_back("smoothness criterion violated (" + *bad + " at gamma=-1)");

    Int b2 = Int(20);
    for (const auto& p : data.places) b2 += Int(p.place.degree()) * (p.fibre.components - 1);
    b.b2 = b2;
    b.b4 = b2;

    bool ruled_component = false;
    for (const auto& p : data.places)
        if (p.fibre.type.kind == FibreKind::I0star && p.local.gamma_class != GammaClass::MinusOne)
            ruled_component = true;
    if (ruled_component) {
        b.flags.push_back("b3 withheld: I0* fibre with gamma != -1 (elliptic ruled component)");
    } else {
        Int b3 = Int(6) * (data.genus - 1);
        for (const auto& p : data.places) b3 += Int(p.place.degree()) * p.fibre.R;
        b.b3 = b3;
    }
    return b;
}

/// Alternating sum 2 - 2*b1 + 2*b2 - b3; withheld when any Betti input is
/// missing or flagged.
inline std::optional<Int> euler_characteristic(const BettiNumbers& b) {
    if (!b.flags.empty() || !b.b1 || !b.b2 || !b.b3) return std::nullopt;
    return Int(2) - 2 * *b.b1 + 2 * *b.b2 - *b.b3;
}

struct CyCandidacy {
    bool candidate = false;
    std::string rationale;
};

/// Necessary condition only: deg K = 0 over a rational base. Honest
/// triviality of the canonical sheaf needs divisor-level integrality data
/// this tool does not construct.
inline CyCandidacy cy_candidate(const FibrationData& data) {
    Rat deg = canonical_degree(data);
    CyCandidacy out;
    out.candidate = (deg == 0 && data.genus == 0);
    std::ostringstream os;
    if (out.candidate) {
        os << "canonical degree 0 over a genus-0 base; degree-0 necessary condition only "
              "(Q-divisor integrality not decided)";
    } else if (data.genus != 0) {
        os << "base has genus " << data.genus << " != 0";
    } else {
        os << "canonical degree " << rat_str(deg) << " != 0";
    }
    out.rationale = os.str();
    return out;
}

struct GlobalReport {
    bool parity_ok = false;
    Rat canonical_deg{0};
    BettiNumbers betti_numbers;
    std::optional<Int> euler;
    bool cy = false;
    std::vector<std::string> notes;
};

inline GlobalReport global_report(const FibrationData& data) {
    GlobalReport g;
    g.parity_ok = parity_check(data);
    g.canonical_deg = canonical_degree(data);
    g.betti_numbers = betti(data);
    g.euler = euler_characteristic(g.betti_numbers);
    CyCandidacy cy = cy_candidate(data);
    g.cy = cy.candidate;
    g.notes = data.notes;
    g.notes.push_back(cy.rationale);
    if (!g.parity_ok)
        g.notes.push_back("parity violation: a rational beta' cannot realize these half-twists");
    return g;
}

}  // namespace k3fib
