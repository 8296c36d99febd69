#pragma once

/// Batch pipeline: configuration -> critical places -> classification ->
/// global invariants, rendered as text or JSON ("k3fib-report/1").
///
/// Configurations come as JSON or as key = value lines. Exactly one of a
/// gamma expression or an explicit places list drives the run; a base of
/// genus > 0 requires the explicit list.

#include "k3fib/invariants.hpp"
#include "k3fib/parse.hpp"
#include "k3fib/version.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3fib {

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error("config error: " + msg) {}
};

struct ExplicitPlace {
    GammaClass gamma_class = GammaClass::Generic;
    int d = 0;
    int b = 0;
    int degree = 1;
};

struct Config {
    int base_genus = 0;
    std::optional<std::string> gamma;   // expression in t
    std::string beta_prime = "1";       // expression in t
    std::vector<ExplicitPlace> places;  // drives the run when present
    std::optional<int> map_degree;      // needed only with places on exotic bases
};

namespace detail {

inline GammaClass gamma_class_from(const std::string& s) {
    if (s == "zero") return GammaClass::Zero;
    if (s == "minus_one") return GammaClass::MinusOne;
    if (s == "infinity") return GammaClass::Infinity;
    if (s == "generic") return GammaClass::Generic;
    throw ConfigError("unknown gamma_class '" + s + "'");
}

inline std::string trimmed(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline Config config_from_json(const nlohmann::json& j) {
    Config c;
    try {
        if (j.contains("base_genus")) c.base_genus = j.at("base_genus").get<int>();
        if (j.contains("gamma")) c.gamma = j.at("gamma").get<std::string>();
        if (j.contains("beta_prime")) c.beta_prime = j.at("beta_prime").get<std::string>();
        if (j.contains("map_degree")) c.map_degree = j.at("map_degree").get<int>();
        if (j.contains("places")) {
            for (const auto& p : j.at("places")) {
                ExplicitPlace e;
                e.gamma_class = gamma_class_from(p.at("gamma_class").get<std::string>());
                e.d = p.value("d", 0);
                e.b = p.value("b", 0);
                e.degree = p.value("degree", 1);
                c.places.push_back(e);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(e.what());
    }
    return c;
}

inline Config config_from_keyvalue(const std::string& text) {
    Config c;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trimmed(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos) throw ConfigError("expected 'key = value': " + t);
        std::string key = trimmed(t.substr(0, eq));
        std::string value = trimmed(t.substr(eq + 1));
        if (key == "base_genus") {
            c.base_genus = std::stoi(value);
        } else if (key == "gamma") {
            c.gamma = value;
        } else if (key == "beta_prime") {
            c.beta_prime = value;
        } else if (key == "map_degree") {
            c.map_degree = std::stoi(value);
        } else if (key == "place") {
            // place = <gamma_class>, <d>, <b>, <degree>
            std::vector<std::string> parts;
            std::istringstream ps(value);
            std::string item;
            while (std::getline(ps, item, ',')) parts.push_back(trimmed(item));
            if (parts.size() != 4) throw ConfigError("place needs gamma_class, d, b, degree: " + value);
            ExplicitPlace e;
            e.gamma_class = gamma_class_from(parts[0]);
            e.d = std::stoi(parts[1]);
            e.b = std::stoi(parts[2]);
            e.degree = std::stoi(parts[3]);
            c.places.push_back(e);
        } else {
            throw ConfigError("unknown key '" + key + "'");
        }
    }
    return c;
}

}  // namespace detail

inline Config parse_config(const std::string& text) {
    std::string t = detail::trimmed(text);
    if (t.empty()) throw ConfigError("empty configuration");
    Config c;
    if (t[0] == '{') {
        nlohmann::json j = nlohmann::json::parse(t, nullptr, false);
        if (j.is_discarded()) throw ConfigError("malformed JSON configuration");
        c = detail::config_from_json(j);
    } else {
        try {
            c = detail::config_from_keyvalue(t);
        } catch (const std::invalid_argument&) {
            throw ConfigError("malformed integer in configuration");
        }
    }
    if (c.gamma.has_value() == !c.places.empty())
        throw ConfigError("exactly one of 'gamma' or a places list must be given");
    if (c.base_genus < 0) throw ConfigError("base_genus must be >= 0");
    if (c.base_genus > 0 && c.places.empty())
        throw ConfigError("base_genus > 0 requires an explicit places list");
    for (const ExplicitPlace& p : c.places) {
        if (p.degree < 1) throw ConfigError("place degree must be >= 1");
        if (p.b < 0 || p.d < 0) throw ConfigError("place orders must be >= 0");
        if (p.gamma_class != GammaClass::Generic && p.d < 1)
            throw ConfigError("d >= 1 required away from generic gamma");
        if (p.gamma_class == GammaClass::Generic && p.d != 0)
            throw ConfigError("generic places carry d = 0");
    }
    return c;
}

struct Report {
    Config config;
    FibrationData data;
    GlobalReport global;
    std::uint64_t seed = 0;
};

/// Deterministic pipeline run; identical (config, seed) give byte-identical
/// JSON output.
inline Report run(const Config& config, std::uint64_t seed = kDefaultSeed) {
    Report report;
    report.config = config;
    report.seed = seed;
    if (config.gamma) {
        RationalFunction gamma, beta_prime;
        try {
            gamma = parse_ratfunc(*config.gamma);
            beta_prime = parse_ratfunc(config.beta_prime);
        } catch (const ParseError& e) {
            throw ConfigError(std::string("expression: ") + e.what());
        }
        if (gamma.is_constant()) throw ConfigError("constant gamma: isotrivial fibration");
        if (beta_prime.is_zero()) throw ConfigError("beta' must not be identically zero");
        report.data = build_fibration(WeierstrassDatum(beta_prime, gamma));
    } else {
        std::vector<std::pair<Place, LocalData>> places;
        for (std::size_t i = 0; i < config.places.size(); ++i) {
            const ExplicitPlace& e = config.places[i];
            places.push_back({Place::abstract("P" + std::to_string(i + 1), e.degree),
                              LocalData{e.gamma_class, e.d, e.b}});
        }
        report.data = build_fibration_from_places(config.base_genus, places, config.map_degree);
    }
    report.global = global_report(report.data);
    return report;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace detail {

inline nlohmann::json int_json(const Int& v) {
    static const Int lo = -(Int(1) << 53), hi = Int(1) << 53;
    if (v > lo && v < hi) return static_cast<std::int64_t>(v);
    std::ostringstream os;
    os << v;
    return os.str();
}

inline nlohmann::json mat3_json(const Mat3& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < 3; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < 3; ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

inline nlohmann::json betti_json(const BettiNumbers& b) {
    nlohmann::json j;
    auto put = [&j](const char* key, const std::optional<Int>& v) {
        j[key] = v ? int_json(*v) : nlohmann::json(nullptr);
    };
    put("b0", b.b0);
    put("b1", b.b1);
    put("b2", b.b2);
    put("b3", b.b3);
    put("b4", b.b4);
    put("b5", b.b5);
    put("b6", b.b6);
    j["flags"] = b.flags;
    return j;
}

inline nlohmann::json config_json(const Config& c) {
    nlohmann::json j;
    j["base_genus"] = c.base_genus;
    if (c.gamma) j["gamma"] = *c.gamma;
    j["beta_prime"] = c.beta_prime;
    if (c.map_degree) j["map_degree"] = *c.map_degree;
    if (!c.places.empty()) {
        nlohmann::json arr = nlohmann::json::array();
        for (const ExplicitPlace& p : c.places)
            arr.push_back({{"gamma_class", to_string(p.gamma_class)},
                           {"d", p.d},
                           {"b", p.b},
                           {"degree", p.degree}});
        j["places"] = arr;
    }
    return j;
}

}  // namespace detail

/// QuarticForm as JSON, exact coefficients as "p/q" strings.
inline nlohmann::json quartic_json(const QuarticForm& q) {
    return {{"a1", rat_str(q.a1)}, {"a2", rat_str(q.a2)}, {"a3", rat_str(q.a3)},
            {"a4", rat_str(q.a4)}, {"a5", rat_str(q.a5)}, {"a6", rat_str(q.a6)},
            {"equation", quartic_str(q)}};
}

inline nlohmann::json report_json(const Report& report) {
    nlohmann::json j;
    j["schema"] = "k3fib-report/1";
    j["tool"] = {{"name", "k3fib"}, {"version", kVersion}, {"seed", report.seed}};
    j["config"] = detail::config_json(report.config);

    nlohmann::json places = nlohmann::json::array();
    for (const ClassifiedPlace& p : report.data.places) {
        nlohmann::json e;
        e["place"] = p.place.str();
        e["degree"] = p.place.degree();
        e["gamma_class"] = to_string(p.local.gamma_class);
        e["d"] = p.local.d;
        e["b"] = p.local.b;
        e["type"] = p.fibre.type.str();
        e["singular"] = p.fibre.type.singular;
        e["components"] = detail::int_json(p.fibre.components);
        e["R"] = p.fibre.R;
        e["S"] = rat_str(p.fibre.S);
        e["det"] = p.fibre.det;
        e["max_multiplicity"] =
            p.fibre.max_multiplicity ? nlohmann::json(*p.fibre.max_multiplicity) : nlohmann::json(nullptr);
        e["monodromy"] = detail::mat3_json(p.fibre.monodromy);
        places.push_back(e);
    }
    j["places"] = places;
    j["map_degree"] = report.data.map_deg;
    j["base_genus"] = report.data.genus;

    nlohmann::json g;
    g["parity_ok"] = report.global.parity_ok;
    g["canonical_degree"] = rat_str(report.global.canonical_deg);
    g["betti"] = detail::betti_json(report.global.betti_numbers);
    g["euler"] = report.global.euler ? detail::int_json(*report.global.euler) : nlohmann::json(nullptr);
    g["cy_candidate"] = report.global.cy;
    g["notes"] = report.global.notes;
    j["global"] = g;
    return j;
}

inline std::string report_text(const Report& report) {
    std::ostringstream os;
    os << "k3fib " << kVersion << " (seed " << report.seed << ")\n";
    os << "base genus " << report.data.genus << ", map degree " << report.data.map_deg << "\n\n";
    os << "places:\n";
    for (const ClassifiedPlace& p : report.data.places) {
        os << "  " << p.place.str() << "  [deg " << p.place.degree() << "]  gamma_class="
           << to_string(p.local.gamma_class) << " d=" << p.local.d << " b=" << p.local.b << "\n";
        os << "    type " << p.fibre.type.str() << ", C=" << p.fibre.components << ", R=" << p.fibre.R
           << ", S=" << rat_str(p.fibre.S) << ", det=" << (p.fibre.det > 0 ? "+1" : "-1");
        if (p.fibre.max_multiplicity) os << ", max mult " << *p.fibre.max_multiplicity;
        os << "\n    monodromy ";
        for (int i = 0; i < 3; ++i) {
            os << "[";
            for (int k = 0; k < 3; ++k) os << p.fibre.monodromy.at(i, k).str() << (k < 2 ? " " : "");
            os << "]";
        }
        os << "\n";
    }
    os << "\nglobal:\n";
    os << "  parity_ok: " << (report.global.parity_ok ? "true" : "false") << "\n";
    os << "  canonical degree: " << rat_str(report.global.canonical_deg) << "\n";
    const BettiNumbers& b = report.global.betti_numbers;
    auto show = [&os](const char* name, const std::optional<Int>& v) {
        os << "  " << name << ": ";
        if (v) os << *v;
        else os << "withheld";
        os << "\n";
    };
    show("b0", b.b0);
    show("b1", b.b1);
    show("b2", b.b2);
    show("b3", b.b3);
    show("b4", b.b4);
    show("b5", b.b5);
    show("b6", b.b6);
    for (const std::string& f : b.flags) os << "  flag: " << f << "\n";
    show("euler", report.global.euler);
    os << "  cy_candidate: " << (report.global.cy ? "true" : "false") << "\n";
    for (const std::string& n : report.global.notes) os << "  note: " << n << "\n";
    return os.str();
}

}  // namespace k3fib
