#pragma once

/// Lattice side of the story: Gram matrices for H, E8, A1, M1 = H + E8 +
/// E8 + A1 and its orthogonal complement H + <2>, plus the configuration
/// of 21 rational (-2)-curves on a generic fibre and the divisor calculus
/// on its span.
///
/// Numerical equivalence on the span of the 21 curves stands in for linear
/// equivalence: on a K3 the two notions agree, and only pairings against
/// the spanning curves are computable from the dual graph.

#include "k3fib/check.hpp"
#include "k3fib/linalg.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3fib {

struct IntLattice {
    std::string name;
    IMat gram;

    int rank() const { return static_cast<int>(gram.size()); }
    Int det() const { return det_bareiss(gram); }
    Inertia signature() const { return inertia_of(gram); }
};

enum class LatticeName { H, E8, A1, M1, M1perp };

namespace detail {

inline IMat block_sum(const std::vector<IMat>& blocks) {
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.size();
    IMat m(n, std::vector<Int>(n, Int(0)));
    std::size_t off = 0;
    for (const auto& b : blocks) {
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) m[off + i][off + j] = b[i][j];
        off += b.size();
    }
    return m;
}

inline IMat gram_H() { return {{Int(0), Int(1)}, {Int(1), Int(0)}}; }

inline IMat gram_A1() { return {{Int(-2)}}; }

/// Negative definite E8: nodes 1..7 in a chain, node 8 attached to node 3,
/// so the basis ordering puts the branch node third.
inline IMat gram_E8() {
    IMat m(8, std::vector<Int>(8, Int(0)));
    for (int i = 0; i < 8; ++i) m[i][i] = Int(-2);
    auto link = [&m](int a, int b) {
        m[a][b] = Int(1);
        m[b][a] = Int(1);
    };
    for (int i = 0; i + 1 < 7; ++i) link(i, i + 1);
    link(2, 7);
    return m;
}

}  // namespace detail

inline IntLattice gram(LatticeName name) {
    switch (name) {
        case LatticeName::H: return {"H", detail::gram_H()};
        case LatticeName::E8: return {"E8", detail::gram_E8()};
        case LatticeName::A1: return {"A1", detail::gram_A1()};
        case LatticeName::M1:
            return {"M1", detail::block_sum({detail::gram_H(), detail::gram_E8(), detail::gram_E8(),
                                             detail::gram_A1()})};
        case LatticeName::M1perp:
            return {"M1perp", detail::block_sum({detail::gram_H(), {{Int(2)}}})};
    }
    throw std::domain_error("unknown lattice name");
}

// ---------------------------------------------------------------------------
// The 21-curve configuration on a generic fibre
// ---------------------------------------------------------------------------

enum Curve : int {
    E1, E2, E3, E4, E5, E6, E7,
    F1, F2, F3, F4, F5, F6, F7,
    D1, D2, D3,
    Lx, Ly, Lz, C,
    kCurveCount
};

struct CurveConfig {
    std::array<std::string, kCurveCount> names;
    IMat intersection;  // 21 x 21, diagonal -2, off-diagonal 0/1

    int pair_curves(int a, int b) const { return static_cast<int>(intersection[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]); }
};

/// Two A7-chains E1..E7 and F1..F7 joined through Lx, the chain D1-D2-D3
/// joining Ly to Lz, and C attached to Lx.
inline const CurveConfig& generic_fibre_config() {
    static const CurveConfig config = [] {
        CurveConfig c;
        c.names = {"E1", "E2", "E3", "E4", "E5", "E6", "E7", "F1", "F2", "F3", "F4", "F5", "F6", "F7",
                   "D1", "D2", "D3", "Lx", "Ly", "Lz", "C"};
        c.intersection.assign(kCurveCount, std::vector<Int>(kCurveCount, Int(0)));
        for (int i = 0; i < kCurveCount; ++i) c.intersection[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Int(-2);
        auto link = [&c](int a, int b) {
            c.intersection[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = Int(1);
            c.intersection[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = Int(1);
        };
        link(E1, E2); link(E2, E3); link(E3, E4); link(E4, E5); link(E5, E6); link(E6, E7);
        link(E7, Lx); link(Lx, F7);
        link(F7, F6); link(F6, F5); link(F5, F4); link(F4, F3); link(F3, F2); link(F2, F1);
        link(Ly, E2); link(Ly, D1); link(D1, D2); link(D2, D3); link(D3, Lz); link(Lz, F2);
        link(C, Lx);
        return c;
    }();
    return config;
}

/// Integer class over the 21-curve basis.
struct DivisorClass {
    std::array<Int, kCurveCount> coeff{};

    static DivisorClass curve(int index) {
        DivisorClass d;
        d.coeff[static_cast<std::size_t>(index)] = Int(1);
        return d;
    }

    friend DivisorClass operator+(const DivisorClass& a, const DivisorClass& b) {
        DivisorClass r;
        for (int i = 0; i < kCurveCount; ++i) r.coeff[static_cast<std::size_t>(i)] = a.coeff[static_cast<std::size_t>(i)] + b.coeff[static_cast<std::size_t>(i)];
        return r;
    }
    friend DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) {
        DivisorClass r;
        for (int i = 0; i < kCurveCount; ++i) r.coeff[static_cast<std::size_t>(i)] = a.coeff[static_cast<std::size_t>(i)] - b.coeff[static_cast<std::size_t>(i)];
        return r;
    }
    friend DivisorClass operator*(int s, const DivisorClass& a) {
        DivisorClass r;
        for (int i = 0; i < kCurveCount; ++i) r.coeff[static_cast<std::size_t>(i)] = Int(s) * a.coeff[static_cast<std::size_t>(i)];
        return r;
    }
    DivisorClass& operator+=(const DivisorClass& b) { return *this = *this + b; }
};

/// Builder: sum of s * curve terms.
inline DivisorClass divisor(std::initializer_list<std::pair<int, int>> terms) {
    DivisorClass d;
    for (const auto& [mult, idx] : terms) d += mult * DivisorClass::curve(idx);
    return d;
}

inline Int pair(const DivisorClass& a, const DivisorClass& b) {
    const CurveConfig& cfg = generic_fibre_config();
    Int total(0);
    for (int i = 0; i < kCurveCount; ++i) {
        if (a.coeff[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < kCurveCount; ++j) {
            if (b.coeff[static_cast<std::size_t>(j)] == 0) continue;
            total += a.coeff[static_cast<std::size_t>(i)] * b.coeff[static_cast<std::size_t>(j)] *
                     cfg.intersection[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// Named fibration data (fibres, sections, bisections)
// ---------------------------------------------------------------------------

/// The four elliptic fibrations visible in the dual graph. Note: in
/// fibration 1 the second II* fibre is 2*D3 + 4*Lz + ... (D3 is the curve
/// adjacent to Lz; its mate D1 plays the same role for Ly).
struct EllipticFibration {
    std::string name;
    std::vector<std::pair<std::string, DivisorClass>> fibres;  // affine null classes
    std::vector<std::string> fibre_dynkin;                     // matching affine types
    std::vector<std::pair<std::string, int>> sections;         // curve name, index
    std::vector<std::pair<std::string, int>> bisections;
};

inline DivisorClass iistar_fibre_E() {
    return divisor({{2, D1}, {4, Ly}, {3, E1}, {6, E2}, {5, E3}, {4, E4}, {3, E5}, {2, E6}, {1, E7}});
}
inline DivisorClass iistar_fibre_F() {
    return divisor({{2, D3}, {4, Lz}, {3, F1}, {6, F2}, {5, F3}, {4, F4}, {3, F5}, {2, F6}, {1, F7}});
}
inline DivisorClass i12star_fibre() {
    DivisorClass d = divisor({{1, Ly}, {1, E1}, {1, F1}, {1, Lz}});
    for (int c : {E2, E3, E4, E5, E6, E7, Lx, F7, F6, F5, F4, F3, F2}) d += 2 * DivisorClass::curve(c);
    return d;
}
inline DivisorClass iiistar_fibre() {
    return divisor({{1, D2}, {2, D1}, {3, Ly}, {4, E2}, {3, E3}, {2, E4}, {1, E5}, {2, E1}});
}
inline DivisorClass i6star_fibre() {
    DivisorClass d = divisor({{1, Lz}, {1, F1}, {1, E7}, {1, C}});
    for (int c : {F2, F3, F4, F5, F6, F7, Lx}) d += 2 * DivisorClass::curve(c);
    return d;
}
inline DivisorClass i18_fibre() {
    DivisorClass d;
    for (int c : {E2, E3, E4, E5, E6, E7, Lx, F7, F6, F5, F4, F3, F2, Lz, D3, D2, D1, Ly})
        d += DivisorClass::curve(c);
    return d;
}

inline std::vector<EllipticFibration> elliptic_fibrations() {
    return {
        {"standard (II* + II* + I2)",
         {{"F", iistar_fibre_E()}, {"F'", iistar_fibre_F()}},
         {"E8~", "E8~"},
         {{"Lx", Lx}},
         {{"D2", D2}}},
        {"alternate (I12* + I2)",
         {{"I12*", i12star_fibre()}},
         {"D16~"},
         {{"D1", D1}, {"D3", D3}},
         {{"C", C}}},
        {"III* + I6*",
         {{"III*", iiistar_fibre()}, {"I6*", i6star_fibre()}},
         {"E7~", "D10~"},
         {{"D3", D3}, {"E6", E6}},
         {}},
        {"I18",
         {{"I18", i18_fibre()}},
         {"A17~"},
         {{"E1", E1}, {"C", C}, {"F1", F1}},
         {}},
    };
}

/// Expected affine Dynkin mark multisets, keyed by type name.
inline std::map<std::string, std::vector<int>> affine_mark_multisets() {
    return {
        {"E8~", {1, 2, 2, 3, 3, 4, 4, 5, 6}},
        {"D16~", {1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}},
        {"E7~", {1, 1, 2, 2, 2, 3, 3, 4}},
        {"D10~", {1, 1, 1, 1, 2, 2, 2, 2, 2, 2, 2}},
        {"A17~", std::vector<int>(18, 1)},
    };
}

/// Checks, for each fibration: fibre classes square to zero and pair to
/// zero with every curve in their support (the affine null-vector
/// property), the multiplicity multisets equal the affine Dynkin marks,
/// distinct fibres of one fibration are numerically equivalent, and the
/// named sections / bisections pair to 1 / 2 with the fibre class.
inline CheckReport verify_elliptic_fibrations() {
    const CurveConfig& cfg = generic_fibre_config();
    CheckReport report;
    report.title = "elliptic fibrations on the generic fibre";
    auto marks = affine_mark_multisets();

    for (const EllipticFibration& fib : elliptic_fibrations()) {
        for (std::size_t fi = 0; fi < fib.fibres.size(); ++fi) {
            const auto& [fname, cls] = fib.fibres[fi];
            std::string tag = fib.name + ": " + fname;
            report.add(tag + " squares to 0", pair(cls, cls) == 0, rat_str(Rat(pair(cls, cls))));

            bool null_ok = true;
            std::string bad;
            std::vector<int> mults;
            for (int c = 0; c < kCurveCount; ++c) {
                if (cls.coeff[static_cast<std::size_t>(c)] == 0) continue;
                mults.push_back(static_cast<int>(cls.coeff[static_cast<std::size_t>(c)]));
                if (pair(DivisorClass::curve(c), cls) != 0) {
                    null_ok = false;
                    bad = cfg.names[static_cast<std::size_t>(c)];
                }
            }
            report.add(tag + " is an affine null vector", null_ok, bad);

            std::sort(mults.begin(), mults.end());
            const auto& expect = marks.at(fib.fibre_dynkin[fi]);
            report.add(tag + " multiplicities are the " + fib.fibre_dynkin[fi] + " marks", mults == expect);
        }
        if (fib.fibres.size() == 2) {
            const DivisorClass diff = fib.fibres[0].second - fib.fibres[1].second;
            bool equiv = true;
            std::string bad;
            for (int c = 0; c < kCurveCount; ++c)
                if (pair(DivisorClass::curve(c), diff) != 0) {
                    equiv = false;
                    bad = cfg.names[static_cast<std::size_t>(c)];
                }
            report.add(fib.name + ": the two fibres are numerically equivalent", equiv, bad);
        }
        const DivisorClass& fibre = fib.fibres[0].second;
        for (const auto& [sname, idx] : fib.sections)
            report.add(fib.name + ": " + sname + " is a section",
                       pair(DivisorClass::curve(idx), fibre) == 1);
        for (const auto& [bname, idx] : fib.bisections)
            report.add(fib.name + ": " + bname + " is a bisection",
                       pair(DivisorClass::curve(idx), fibre) == 2);
    }
    return report;
}

/// Gram matrix of the 19 listed generators of the polarization lattice.
inline IMat m1_generator_gram() {
    std::vector<DivisorClass> gens;
    for (int c : {E1, E2, E3, E4, E5, E6}) gens.push_back(DivisorClass::curve(c));
    for (int c : {F1, F2, F3, F4, F5, F6}) gens.push_back(DivisorClass::curve(c));
    for (int c : {Lx, Ly, Lz, D1, D3}) gens.push_back(DivisorClass::curve(c));
    gens.push_back(iistar_fibre_E());
    gens.push_back(iistar_fibre_E() - DivisorClass::curve(C));
    IMat g(gens.size(), std::vector<Int>(gens.size()));
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) g[i][j] = pair(gens[i], gens[j]);
    return g;
}

/// rank 19, |det| = 2, signature (1,18) -- the invariants of M1.
inline CheckReport verify_M1_span() {
    CheckReport report;
    report.title = "19 generators span a copy of M1";
    IMat g = m1_generator_gram();
    Int d = det_bareiss(g);
    Inertia sig = inertia_of(g);
    report.add("rank = 19", sig.zero == 0 && rank_of(g) == 19, std::to_string(rank_of(g)));
    {
        std::ostringstream os;
        os << d;
        report.add("|det| = 2 = |disc M1|", abs_int(d) == 2 && abs_int(gram(LatticeName::M1).det()) == 2,
                   os.str());
    }
    report.add("signature = (1,18)", sig.positive == 1 && sig.negative == 18,
               "(" + std::to_string(sig.positive) + "," + std::to_string(sig.negative) + ")");
    return report;
}

/// The divisors cut out by the quartic model's coordinate hyperplanes.
inline DivisorClass divisor_W() {
    DivisorClass d = divisor({{2, Lx}, {1, Ly}, {1, Lz}, {1, C}, {1, D1}, {1, D2}, {1, D3}, {1, E1}, {1, F1}});
    for (int c : {E2, E3, E4, E5, E6, E7, F2, F3, F4, F5, F6, F7}) d += 2 * DivisorClass::curve(c);
    return d;
}
inline DivisorClass divisor_Y() {
    return divisor({{4, Ly}, {3, D1}, {2, D2}, {1, D3}, {3, E1}, {6, E2}, {5, E3}, {4, E4}, {3, E5}, {2, E6}, {1, E7}});
}
inline DivisorClass divisor_Z() {
    return divisor({{4, Lz}, {1, D1}, {2, D2}, {3, D3}, {3, F1}, {6, F2}, {5, F3}, {4, F4}, {3, F5}, {2, F6}, {1, F7}});
}
/// X uses the I18 fibre class for the moving elliptic curve G.
inline DivisorClass divisor_X() {
    DivisorClass d = divisor({{1, Lx}, {1, C}});
    for (int c : {E1, E2, E3, E4, E5, E6, E7, F1, F2, F3, F4, F5, F6, F7}) d += DivisorClass::curve(c);
    return d + i18_fibre();
}

/// W ~ Y ~ Z ~ X numerically, and W^2 = 4 (so h^0 = 2 + W^2/2 = 4).
inline CheckReport verify_intrinsic_divisors() {
    const CurveConfig& cfg = generic_fibre_config();
    CheckReport report;
    report.title = "intrinsic quartic model divisors";
    const DivisorClass W = divisor_W(), Y = divisor_Y(), Z = divisor_Z(), X = divisor_X();
    auto equiv = [&](const char* name, const DivisorClass& a, const DivisorClass& b) {
        DivisorClass diff = a - b;
        bool ok = true;
        std::string bad;
        for (int c = 0; c < kCurveCount; ++c)
            if (pair(DivisorClass::curve(c), diff) != 0) {
                ok = false;
                bad = cfg.names[static_cast<std::size_t>(c)];
            }
        report.add(name, ok, bad);
    };
    equiv("W ~ Y against all 21 curves", W, Y);
    equiv("Y ~ Z against all 21 curves", Y, Z);
    equiv("W ~ X against all 21 curves", W, X);
    report.add("W^2 = 4", pair(W, W) == 4, rat_str(Rat(pair(W, W))));
    report.add("h^0 = 2 + W^2/2 = 4", Rat(2) + Rat(pair(W, W), 2) == 4);
    return report;
}

// ---------------------------------------------------------------------------
// Exports
// ---------------------------------------------------------------------------

inline std::string curve_config_dot() {
    const CurveConfig& cfg = generic_fibre_config();
    std::ostringstream os;
    os << "graph generic_fibre {\n  node [shape=circle];\n";
    for (int i = 0; i < kCurveCount; ++i)
        os << "  " << cfg.names[static_cast<std::size_t>(i)] << ";\n";
    for (int i = 0; i < kCurveCount; ++i)
        for (int j = i + 1; j < kCurveCount; ++j)
            if (cfg.intersection[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0)
                os << "  " << cfg.names[static_cast<std::size_t>(i)] << " -- " << cfg.names[static_cast<std::size_t>(j)] << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace k3fib
