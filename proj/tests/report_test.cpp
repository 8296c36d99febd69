#include "k3fib/report.hpp"
#include "k3fib/selfcheck.hpp"
#include "k3fib/lattice.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace k3fib;

TEST_CASE("config parsing accepts both formats") {
    Config a = parse_config("gamma = t\nbeta_prime = 1\n");
    REQUIRE(a.gamma == "t");
    REQUIRE(a.beta_prime == "1");
    REQUIRE(a.base_genus == 0);

    Config b = parse_config(R"x({"gamma": "-(t^6)", "beta_prime": "t^2-1"})x");
    REQUIRE(b.gamma == "-(t^6)");

    Config c = parse_config("# comment\nplace = generic, 0, 1, 1\nbase_genus = 2\nmap_degree = 6\n");
    REQUIRE(c.places.size() == 1);
    REQUIRE(c.base_genus == 2);
    REQUIRE(c.map_degree == 6);

    Config d = parse_config(
        R"({"places": [{"gamma_class": "zero", "d": 2, "b": 1, "degree": 3}], "map_degree": 6})");
    REQUIRE(d.places.size() == 1);
    REQUIRE(d.places[0].gamma_class == GammaClass::Zero);
    REQUIRE(d.places[0].degree == 3);
}

TEST_CASE("config validation") {
    REQUIRE_THROWS_AS(parse_config(""), ConfigError);
    REQUIRE_THROWS_AS(parse_config("gamma = t\nplace = zero, 1, 0, 1\n"), ConfigError);  // both
    REQUIRE_THROWS_AS(parse_config("beta_prime = 1\n"), ConfigError);                    // neither
    REQUIRE_THROWS_AS(parse_config("base_genus = 1\ngamma = t\n"), ConfigError);  // genus needs places
    REQUIRE_THROWS_AS(parse_config("place = zero, 0, 0, 1\n"), ConfigError);      // d >= 1 for zero
    REQUIRE_THROWS_AS(parse_config("place = generic, 2, 0, 1\n"), ConfigError);   // generic has d = 0
    REQUIRE_THROWS_AS(parse_config("frob = 1\n"), ConfigError);
    REQUIRE_THROWS_AS(parse_config("{not json"), ConfigError);
}

TEST_CASE("run is deterministic and byte-identical") {
    Config c = parse_config("gamma = t\nbeta_prime = 1\n");
    std::string j1 = report_json(run(c)).dump(2);
    std::string j2 = report_json(run(c)).dump(2);
    REQUIRE(j1 == j2);
}

TEST_CASE("run rejects bad expressions with ConfigError") {
    REQUIRE_THROWS_AS(run(parse_config("gamma = t +\n")), ConfigError);
    REQUIRE_THROWS_AS(run(parse_config("gamma = 5\n")), ConfigError);       // isotrivial
    REQUIRE_THROWS_AS(run(parse_config("gamma = t\nbeta_prime = 0\n")), ConfigError);
}

TEST_CASE("json schema of the report") {
    Report r = run(parse_config("gamma = t\nbeta_prime = 1\n"), 7u);
    nlohmann::json j = report_json(r);
    REQUIRE(j["schema"] == "k3fib-report/1");
    REQUIRE(j["tool"]["name"] == "k3fib");
    REQUIRE(j["tool"]["seed"] == 7);
    REQUIRE(j["places"].size() == 3);
    REQUIRE(j["global"]["parity_ok"] == true);
    REQUIRE(j["global"]["canonical_degree"] == "-1");
    REQUIRE(j["global"]["betti"]["b2"] == 74);
    REQUIRE(j["global"]["betti"]["flags"].empty());
    REQUIRE(j["global"]["euler"] == 150);
    REQUIRE(j["global"]["cy_candidate"] == false);
    REQUIRE(j["places"][0]["type"] == "I1");
    REQUIRE(j["places"][0]["monodromy"][0][1] == "1+0*w");
}

TEST_CASE("text and json carry the same numbers") {
    Report r = run(parse_config("gamma = -(t^6)\nbeta_prime = t^2-1\n"));
    std::string text = report_text(r);
    nlohmann::json j = report_json(r);
    REQUIRE(text.find("canonical degree: " + j["global"]["canonical_degree"].get<std::string>()) !=
            std::string::npos);
    REQUIRE(text.find("b2: 77") != std::string::npos);
    REQUIRE(j["global"]["betti"]["b2"] == 77);
    REQUIRE(j["global"]["cy_candidate"] == true);
    REQUIRE(text.find("cy_candidate: true") != std::string::npos);
}

TEST_CASE("explicit places round through the pipeline") {
    Report r = run(parse_config("place = generic, 0, 1, 1\n"));
    REQUIRE_FALSE(r.global.parity_ok);
    REQUIRE(r.data.places.size() == 1);
    REQUIRE(r.data.places[0].fibre.type == FibreType::make(FibreKind::I0star));

    // genus-2 base with a consistent set of places, N = 1
    Report g2 = run(parse_config("base_genus = 2\n"
                                 "map_degree = 1\n"
                                 "place = zero, 1, 0, 1\n"
                                 "place = minus_one, 1, 0, 1\n"
                                 "place = infinity, 1, 0, 1\n"));
    REQUIRE(g2.global.betti_numbers.b1 == Int(4));
    REQUIRE(g2.global.parity_ok);
    // deg K = (2*2-2) + 1/6 + 5/6 = 3
    REQUIRE(g2.global.canonical_deg == 3);
}

TEST_CASE("selfcheck suites all pass") {
    for (const char* suite : {"lattice", "toric", "monodromy", "counts"}) {
        for (const CheckReport& r : selfcheck(suite)) {
            for (const CheckLine& line : r.lines) {
                INFO(r.title << " / " << line.name << " " << line.detail);
                CHECK(line.ok);
            }
            REQUIRE(r.all_ok());
        }
    }
    REQUIRE_THROWS_AS(selfcheck("bogus"), std::domain_error);
}

namespace {

// Minimal structural validator mirroring docs/report-schema.json.
void require_report_shape(const nlohmann::json& j) {
    for (const char* key : {"schema", "tool", "config", "places", "map_degree", "base_genus", "global"})
        REQUIRE(j.contains(key));
    REQUIRE(j["schema"] == "k3fib-report/1");
    for (const char* key : {"name", "version", "seed"}) REQUIRE(j["tool"].contains(key));
    REQUIRE(j["map_degree"].is_number_integer());
    REQUIRE(j["map_degree"].get<int>() >= 1);

    for (const auto& p : j["places"]) {
        for (const char* key : {"place", "degree", "gamma_class", "d", "b", "type", "singular",
                                "components", "R", "S", "det", "max_multiplicity", "monodromy"})
            REQUIRE(p.contains(key));
        REQUIRE((p["det"] == 1 || p["det"] == -1));
        REQUIRE(p["R"].get<int>() >= 0);
        REQUIRE(p["R"].get<int>() <= 3);
        REQUIRE(p["monodromy"].size() == 3);
        for (const auto& row : p["monodromy"]) {
            REQUIRE(row.size() == 3);
            for (const auto& entry : row) {
                std::string s = entry.get<std::string>();
                REQUIRE(s.find("*w") == s.size() - 2);
            }
        }
    }
    const auto& g = j["global"];
    for (const char* key : {"parity_ok", "canonical_degree", "betti", "euler", "cy_candidate", "notes"})
        REQUIRE(g.contains(key));
    for (const char* key : {"b0", "b1", "b2", "b3", "b4", "b5", "b6", "flags"})
        REQUIRE(g["betti"].contains(key));
}

}  // namespace

TEST_CASE("report json matches the shipped schema shape") {
    for (const char* cfg :
         {"gamma = t\nbeta_prime = 1\n", "gamma = -(t^6)\nbeta_prime = t^2-1\n",
          "place = generic, 0, 1, 1\n"}) {
        require_report_shape(report_json(run(parse_config(cfg))));
    }
    // Poincare duality in the emitted numbers
    nlohmann::json j = report_json(run(parse_config("gamma = t\nbeta_prime = 1\n")));
    REQUIRE(j["global"]["betti"]["b0"] == j["global"]["betti"]["b6"]);
    REQUIRE(j["global"]["betti"]["b1"] == j["global"]["betti"]["b5"]);
    REQUIRE(j["global"]["betti"]["b2"] == j["global"]["betti"]["b4"]);
}

TEST_CASE("smooth I0 places from even beta' twists are listed but inert") {
    // beta' = (t-3)^2 has an even-order zero at generic gamma: the
    // Weierstrass model degenerates there but the minimal fibre is smooth.
    Report with = run(parse_config("gamma = t\nbeta_prime = (t-3)^2\n"));
    Report without = run(parse_config("gamma = t\nbeta_prime = 1\n"));
    // one new place (t-3); the beta' pole at infinity lands on the existing
    // gamma-critical place and only updates its b
    REQUIRE(with.data.places.size() == without.data.places.size() + 1);
    for (const auto& p : with.data.places)
        if (p.place.is_infinity()) REQUIRE(p.local.b == 2);
    bool found = false;
    for (const auto& p : with.data.places) {
        if (p.local.gamma_class == GammaClass::Generic) {
            found = true;
            REQUIRE(p.fibre.type == FibreType::make(FibreKind::I0));
            REQUIRE(p.local.b % 2 == 0);
        }
    }
    REQUIRE(found);
    // global invariants unchanged by the inert places
    REQUIRE(with.global.canonical_deg == without.global.canonical_deg);
    REQUIRE(*with.global.betti_numbers.b2 == *without.global.betti_numbers.b2);
    REQUIRE(*with.global.betti_numbers.b3 == *without.global.betti_numbers.b3);
    REQUIRE(with.global.parity_ok);
}

TEST_CASE("b2 constant term is 1 + rho_h with rho_h = 19") {
    REQUIRE(gram(LatticeName::M1).rank() == 19);
    FibrationData empty = build_fibration_from_places(0, {}, 1);
    REQUIRE(*betti(empty).b2 == Int(1 + 19));
}

TEST_CASE("quartic serialization") {
    QuarticForm q = weierstrass_equation(Rat(2), Rat(1));
    nlohmann::json j = quartic_json(q);
    REQUIRE(j["a1"] == "1/27");
    REQUIRE(j["a6"] == "2");
    std::string s = quartic_str(q);
    REQUIRE(s.find("(1/27)*w^4") != std::string::npos);
    REQUIRE(s.find("(2)*x^2*y*z") != std::string::npos);
    REQUIRE(s.find("w*x*y*z") == std::string::npos);  // a3 = 0 term suppressed
}
