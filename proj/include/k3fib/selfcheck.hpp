#pragma once

/// Self-verification suites behind `k3fib --selfcheck`. Each suite returns
/// a CheckReport; "all" concatenates every suite.

#include "k3fib/classifier.hpp"
#include "k3fib/lattice.hpp"
#include "k3fib/version.hpp"
#include "k3fib/weierstrass.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace k3fib {

inline CheckReport selfcheck_lattice() {
    CheckReport out;
    out.title = "lattice";
    for (CheckReport r : {verify_elliptic_fibrations(), verify_M1_span(), verify_intrinsic_divisors()})
        for (CheckLine& l : r.lines) out.lines.push_back(std::move(l));

    IntLattice m1 = gram(LatticeName::M1);
    out.add("det M1 = 2", m1.det() == 2);
    Inertia s = m1.signature();
    out.add("signature M1 = (1,18)", s.positive == 1 && s.negative == 18 && s.zero == 0);
    IntLattice perp = gram(LatticeName::M1perp);
    Inertia sp = perp.signature();
    out.add("|det M1perp| = 2, signature (2,1)",
            abs_int(perp.det()) == 2 && sp.positive == 2 && sp.negative == 1);
    return out;
}

inline CheckReport selfcheck_toric(std::uint64_t seed = kDefaultSeed) {
    CheckReport out;
    out.title = "toric";
    ToricData t = toric_construction();
    out.add("index=12", t.sublattice_index == 12);
    out.add("|G|=12", t.group_order == 12);
    {
        std::string fs;
        for (const Int& f : t.invariant_factors) fs += (fs.empty() ? "" : ",") + rat_str(Rat(f));
        out.add("G invariant factors (2,6)", t.invariant_factors == std::vector<Int>{Int(2), Int(6)}, fs);
    }
    auto monos = enumerate_anticanonical_monomials();
    out.add("monomials=6", monos.size() == 6, std::to_string(monos.size()));
    bool expected = true;
    for (std::array<int, 4> m :
         {std::array<int, 4>{6, 0, 0, 0}, {0, 6, 0, 0}, {0, 0, 6, 0}, {0, 0, 0, 2}, {1, 1, 1, 1}, {2, 2, 2, 0}})
        if (std::find(monos.begin(), monos.end(), m) == monos.end()) expected = false;
    out.add("monomials are the six of the anticanonical family", expected);

    for (CheckLine& l : toric_resolve_node().report.lines) out.lines.push_back(std::move(l));
    for (CheckLine& l : verify_derivation_chain(Rat(1), Rat(1), 5, seed).lines)
        out.lines.push_back(std::move(l));
    for (CheckLine& l : singular_points_check(Rat(1), Rat(1), 20, seed).lines)
        out.lines.push_back(std::move(l));
    return out;
}

inline CheckReport selfcheck_monodromy() {
    CheckReport out;
    out.title = "monodromy";
    const Mat3 G0 = gamma_matrix(GammaClass::Zero);
    const Mat3 Gm1 = gamma_matrix(GammaClass::MinusOne);
    const Mat3 Ginf = gamma_matrix(GammaClass::Infinity);
    out.add("Gamma_-1^2 = Id", Gm1.pow(2) == Mat3::identity());
    out.add("Gamma_inf^3 = -Id", Ginf.pow(3) == Mat3::minus_identity());
    out.add("Gamma_inf^6 = Id", Ginf.pow(6) == Mat3::identity());

    bool closed_form = true;
    Mat3 p = Mat3::identity();
    for (int d = 1; d <= 100; ++d) {
        p = p * G0;
        Mat3 expect = Mat3::identity();
        expect.at(0, 1) = CycInt(Int(d));
        expect.at(1, 2) = CycInt(Int(d));
        expect.at(0, 2) = CycInt(Int(d) * Int(d - 1) / 2);
        if (p != expect) closed_form = false;
    }
    out.add("Gamma_0^d closed form, d <= 100", closed_form);

    // one representative per classification-table row: the classify()
    // internal cross-check throws on any det/R/representative mismatch
    const LocalData rows[] = {
        {GammaClass::Generic, 0, 0},  {GammaClass::Generic, 0, 1},  {GammaClass::Zero, 2, 0},
        {GammaClass::Zero, 2, 1},     {GammaClass::MinusOne, 1, 0}, {GammaClass::MinusOne, 1, 1},
        {GammaClass::MinusOne, 2, 0}, {GammaClass::MinusOne, 2, 1}, {GammaClass::Infinity, 1, 0},
        {GammaClass::Infinity, 2, 0}, {GammaClass::Infinity, 3, 0}, {GammaClass::Infinity, 1, 1},
        {GammaClass::Infinity, 2, 1}, {GammaClass::Infinity, 6, 0},
    };
    bool table_ok = true;
    std::string bad;
    for (const LocalData& row : rows) {
        try {
            FibreRecord rec = classify(row);
            if (3 - conj_invariants(rec.monodromy).fixed_rank != rec.R) table_ok = false;
        } catch (const TableIntegrityError& e) {
            table_ok = false;
            bad = e.what();
        }
    }
    out.add("Table rho/det/R cross-check", table_ok, bad);
    return out;
}

inline CheckReport selfcheck_counts() {
    CheckReport out;
    out.title = "counts";
    bool id_ok = true;
    for (int d = 1; d <= 1000; ++d)
        if (id_component_count(d) != Int(d) * Int(d) + 2) id_ok = false;
    out.add("I_d components d^2+2, d <= 1000", id_ok);

    bool idstar_ok = true, recursion_ok = true;
    for (int d = 1; d <= 1000; ++d) {
        IdStarBreakdown b = idstar_component_count(d);
        if (b.total() != 2 * Int(d) * Int(d) + 9 * Int(d) + 10) idstar_ok = false;
    }
    for (int d = 1; d <= 60; ++d)
        if (idstar_r_point_recursive(d) != idstar_component_count(d).from_R_point) recursion_ok = false;
    out.add("I_d* breakdown sums to 2d^2+9d+10, d <= 1000", idstar_ok);
    out.add("R-point recursion R(d) = R(d-2) + 8d - 8", recursion_ok);

    out.add("(m,n) counts: (4,3)->5, (3,2)->3, (2,0)->0",
            mn_exceptional_count(4, 3) == 5 && mn_exceptional_count(3, 2) == 3 &&
                mn_exceptional_count(2, 0) == 0);

    bool reduce_ok = true;
    for (int d = 1; d <= 60; ++d) {
        if (infinity_reduce(InfinityForm::A, d) != classify({GammaClass::Infinity, d, 0}).type)
            reduce_ok = false;
        if (infinity_reduce(InfinityForm::B, d) != classify({GammaClass::Infinity, d, 1}).type)
            reduce_ok = false;
    }
    out.add("infinity reduction agrees with classify, d <= 60", reduce_ok);
    return out;
}

inline std::vector<CheckReport> selfcheck(const std::string& suite, std::uint64_t seed = kDefaultSeed) {
    if (suite == "lattice") return {selfcheck_lattice()};
    if (suite == "toric") return {selfcheck_toric(seed)};
    if (suite == "monodromy") return {selfcheck_monodromy()};
    if (suite == "counts") return {selfcheck_counts()};
    if (suite == "all")
        return {selfcheck_lattice(), selfcheck_toric(seed), selfcheck_monodromy(), selfcheck_counts()};
    throw std::domain_error("unknown selfcheck suite '" + suite +
                            "' (expected lattice, toric, monodromy, counts or all)");
}

}  // namespace k3fib
