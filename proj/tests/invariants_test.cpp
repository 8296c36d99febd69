#include "k3fib/invariants.hpp"
#include "k3fib/parse.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace k3fib;

namespace {
WeierstrassDatum datum(const char* gamma, const char* beta_prime) {
    return WeierstrassDatum(parse_ratfunc(beta_prime), parse_ratfunc(gamma));
}
}  // namespace

TEST_CASE("worked example 1: gamma = t, beta' = 1") {
    FibrationData data = build_fibration(datum("t", "1"));
    REQUIRE(data.map_deg == 1);
    REQUIRE(data.places.size() == 3);
    REQUIRE(data.places[0].fibre.type == FibreType::make(FibreKind::Id, 1));
    REQUIRE(data.places[1].fibre.type == FibreType::make(FibreKind::III, 0, true));
    REQUIRE(data.places[2].fibre.type == FibreType::make(FibreKind::IIstar));

    REQUIRE(parity_check(data));
    REQUIRE(canonical_degree(data) == -1);

    BettiNumbers b = betti(data);
    REQUIRE(b.flags.empty());
    REQUIRE(b.b2 == Int(74));
    REQUIRE(b.b3 == Int(0));
    REQUIRE(b.b1 == Int(0));
    REQUIRE(euler_characteristic(b) == Int(150));
    REQUIRE_FALSE(cy_candidate(data).candidate);
}

TEST_CASE("worked example 2: gamma = -t^6, beta' = t^2 - 1") {
    FibrationData data = build_fibration(datum("-(t^6)", "t^2-1"));
    REQUIRE(data.map_deg == 6);
    REQUIRE(data.places.size() == 6);

    int iiistar = 0, iii = 0, i6 = 0, i0 = 0;
    for (const auto& p : data.places) {
        if (p.fibre.type == FibreType::make(FibreKind::IIIstar, 0, true)) ++iiistar;
        if (p.fibre.type == FibreType::make(FibreKind::III, 0, true)) {
            ++iii;
            REQUIRE(p.place.degree() == 2);
        }
        if (p.fibre.type == FibreType::make(FibreKind::Id, 6)) ++i6;
        if (p.fibre.type == FibreType::make(FibreKind::I0)) {
            ++i0;
            REQUIRE(p.place.is_infinity());
        }
    }
    REQUIRE(iiistar == 2);
    REQUIRE(iii == 2);
    REQUIRE(i6 == 1);
    REQUIRE(i0 == 1);

    REQUIRE(parity_check(data));
    REQUIRE(canonical_degree(data) == 0);

    BettiNumbers b = betti(data);
    REQUIRE(b.b2 == Int(77));
    REQUIRE(b.flags.size() == 1);
    REQUIRE(b.flags[0].find("smoothness criterion violated (III*") != std::string::npos);
    REQUIRE_FALSE(euler_characteristic(b).has_value());
    REQUIRE(cy_candidate(data).candidate);
}

TEST_CASE("formula evaluation away from P^1") {
    // g = 1 base, no singular fibres listed, N = 6 supplied directly
    FibrationData data = build_fibration_from_places(1, {}, 6);
    REQUIRE(canonical_degree(data) == 1);
    REQUIRE(betti(data).b1 == Int(2));
}

TEST_CASE("hand-built parity violation") {
    FibrationData data =
        build_fibration_from_places(0, {{Place::infinity(), LocalData{GammaClass::Generic, 0, 1}}}, 1);
    REQUIRE_FALSE(parity_check(data));
    REQUIRE(data.places.size() == 1);
    REQUIRE(data.places[0].fibre.type == FibreType::make(FibreKind::I0star));
    GlobalReport g = global_report(data);
    REQUIRE_FALSE(g.parity_ok);
}

TEST_CASE("b3 withheld for I0* away from gamma = -1") {
    FibrationData data = build_fibration_from_places(
        0,
        {{Place::finite(Polynomial::variable()), LocalData{GammaClass::Zero, 1, 0}},
         {Place::finite(parse_ratfunc("t-1").numerator()), LocalData{GammaClass::MinusOne, 1, 0}},
         {Place::infinity(), LocalData{GammaClass::Infinity, 1, 0}},
         {Place::finite(parse_ratfunc("t-2").numerator()), LocalData{GammaClass::Generic, 0, 1}},
         {Place::finite(parse_ratfunc("t-3").numerator()), LocalData{GammaClass::Generic, 0, 1}}});
    REQUIRE(data.places[3].fibre.type == FibreType::make(FibreKind::I0star));
    BettiNumbers b = betti(data);
    REQUIRE_FALSE(b.b3.has_value());
    bool found = false;
    for (const auto& f : b.flags)
        if (f.find("b3 withheld") != std::string::npos) found = true;
    REQUIRE(found);
    // b2 still reported
    REQUIRE(b.b2.has_value());
}

TEST_CASE("euler formula") {
    BettiNumbers b;
    b.b1 = Int(0);
    b.b2 = Int(74);
    b.b3 = Int(0);
    REQUIRE(euler_characteristic(b) == Int(150));
    b.b1 = Int(2);
    b.b2 = Int(20);
    b.b3 = Int(6);
    REQUIRE(euler_characteristic(b) == Int(32));
    b.flags.push_back("flagged");
    REQUIRE_FALSE(euler_characteristic(b).has_value());
}

TEST_CASE("canonical degree additivity and I_d -> I_d* bump") {
    auto place_t = Place::finite(Polynomial::variable());
    auto place_u = Place::finite(parse_ratfunc("t^2-2").numerator());

    FibrationData base = build_fibration_from_places(0, {}, 6);
    FibrationData with_a =
        build_fibration_from_places(0, {{place_t, LocalData{GammaClass::Zero, 3, 0}}}, 6);
    FibrationData with_b =
        build_fibration_from_places(0, {{place_u, LocalData{GammaClass::Infinity, 1, 1}}}, 6);
    FibrationData with_both = build_fibration_from_places(0,
                                                          {{place_t, LocalData{GammaClass::Zero, 3, 0}},
                                                           {place_u, LocalData{GammaClass::Infinity, 1, 1}}},
                                                          6);
    REQUIRE(canonical_degree(with_both) - canonical_degree(base) ==
            (canonical_degree(with_a) - canonical_degree(base)) +
                (canonical_degree(with_b) - canonical_degree(base)));

    // replacing I_d by I_d* (b: 0 -> 1) raises deg K by deg(place)/2 and b3 by deg(place)
    FibrationData star =
        build_fibration_from_places(0, {{place_u, LocalData{GammaClass::Zero, 3, 0}}}, 6);
    FibrationData starred =
        build_fibration_from_places(0, {{place_u, LocalData{GammaClass::Zero, 3, 1}}}, 6);
    REQUIRE(canonical_degree(starred) - canonical_degree(star) == Rat(place_u.degree(), 2));
    REQUIRE(*betti(starred).b3 - *betti(star).b3 == Int(place_u.degree()));
}

TEST_CASE("parity holds for 200 random rational beta'") {
    RatSampler sampler(20240613u);
    std::mt19937_64 rng(sampler.next_u64());
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(1, 3);
    auto random_poly = [&]() {
        std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = Rat(coeff(rng));
        c.back() = 1;
        return Polynomial(std::move(c));
    };
    int done = 0;
    while (done < 200) {
        Polynomial gn = random_poly(), gd = random_poly();
        Polynomial bn = random_poly(), bd = random_poly();
        RationalFunction gamma(gn, gd);
        if (gamma.is_zero() || gamma.is_constant()) continue;
        RationalFunction beta(bn, bd);
        if (beta.is_zero()) continue;
        FibrationData data = build_fibration(WeierstrassDatum(beta, gamma));
        REQUIRE(parity_check(data));
        ++done;
    }
}
