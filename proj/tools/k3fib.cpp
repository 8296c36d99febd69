// Command-line front end: classify the singular fibres of a K3 fibration
// given by its Weierstrass datum (or an explicit place list), report global
// invariants, export dual graphs, and run the self-verification suites.
//
// Exit codes: 0 success, 2 input/parse error, 3 mathematical inconsistency
// (parity violation from explicit places, table integrity), 4 internal
// error.

#include "k3fib/report.hpp"
#include "k3fib/selfcheck.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitInternal = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw k3fib::ConfigError("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void emit_dual_graphs(const k3fib::Report& report, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    std::set<std::string> done;
    for (const k3fib::ClassifiedPlace& p : report.data.places) {
        k3fib::DualGraph g = k3fib::dual_graph(p.fibre.type);
        std::string stem = p.fibre.type.slug();
        if (!done.insert(stem).second) continue;
        std::ofstream out(fs::path(dir) / (stem + ".dot"));
        out << k3fib::dual_graph_dot(g);
    }
    std::ofstream cfg(fs::path(dir) / "generic_fibre_config.dot");
    cfg << k3fib::curve_config_dot();
    std::ofstream mat(fs::path(dir) / "intersection_matrix.json");
    nlohmann::json j;
    const k3fib::CurveConfig& c = k3fib::generic_fibre_config();
    j["names"] = c.names;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : c.intersection) {
        nlohmann::json r = nlohmann::json::array();
        for (const k3fib::Int& v : row) r.push_back(static_cast<int>(v));
        rows.push_back(r);
    }
    j["intersection"] = rows;
    mat << j.dump(2) << "\n";
}

int run_selfcheck(const std::string& suite, std::uint64_t seed) {
    bool ok = true;
    for (const k3fib::CheckReport& report : k3fib::selfcheck(suite, seed)) {
        std::cout << "== " << report.title << " ==\n";
        for (const k3fib::CheckLine& line : report.lines) {
            std::cout << "  " << line.name << ": " << (line.ok ? "OK" : "FAIL");
            if (!line.ok && !line.detail.empty()) std::cout << " (" << line.detail << ")";
            std::cout << "\n";
            ok = ok && line.ok;
        }
    }
    std::cout << (ok ? "selfcheck passed" : "selfcheck FAILED") << "\n";
    return ok ? kExitOk : kExitInconsistent;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"k3fib: singular fibres and global invariants of threefolds fibred by "
                 "M1-polarized K3 surfaces"};
    std::string input, format = "text", graphs_dir, suite;
    std::uint64_t seed = k3fib::kDefaultSeed;

    app.add_option("--input", input, "configuration file (JSON or key = value)");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--emit-dual-graphs", graphs_dir, "write DOT dual graphs into this directory");
    app.add_option("--selfcheck", suite, "run a verification suite")
        ->check(CLI::IsMember({"lattice", "toric", "monodromy", "counts", "all"}));
    app.add_option("--seed", seed, "seed for the randomized exact identity checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!suite.empty()) return run_selfcheck(suite, seed);
        if (input.empty()) {
            std::cerr << "error: --input or --selfcheck required\n";
            return kExitInput;
        }

        k3fib::Config config;
        k3fib::Report report;
        try {
            config = k3fib::parse_config(read_file(input));
            report = k3fib::run(config, seed);
        } catch (const k3fib::ConfigError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitInput;
        } catch (const k3fib::ParseError& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitInput;
        } catch (const std::domain_error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitInput;
        }

        if (format == "json") {
            std::cout << k3fib::report_json(report).dump(2) << "\n";
        } else {
            std::cout << k3fib::report_text(report);
        }
        if (!graphs_dir.empty()) emit_dual_graphs(report, graphs_dir);

        if (!report.global.parity_ok) {
            std::cerr << "inconsistency: parity violation in the supplied places\n";
            return kExitInconsistent;
        }
        return kExitOk;
    } catch (const k3fib::TableIntegrityError& e) {
        std::cerr << "inconsistency: " << e.what() << "\n";
        return kExitInconsistent;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
