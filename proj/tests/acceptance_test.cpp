// Acceptance suite: eight criteria, one pass/fail line each, nonzero exit
// on any failure. Each criterion carries a wall-clock budget that is
// enforced, not just reported.

#include "k3fib/report.hpp"
#include "k3fib/selfcheck.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace k3fib;

namespace {

int failures = 0;
std::vector<std::string> current_errors;

void expect(bool ok, const std::string& what) {
    if (!ok) current_errors.push_back(what);
}

void criterion(int number, const std::string& name, double budget_seconds,
               const std::function<void()>& body) {
    current_errors.clear();
    auto start = std::chrono::steady_clock::now();
    try {
        body();
    } catch (const std::exception& e) {
        current_errors.push_back(std::string("exception: ") + e.what());
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds)
        current_errors.push_back("over time budget: " + std::to_string(elapsed) + "s > " +
                                 std::to_string(budget_seconds) + "s");
    bool ok = current_errors.empty();
    std::ostringstream line;
    line << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << name << "  ["
         << static_cast<int>(elapsed * 1000) << " ms]";
    std::cout << line.str() << "\n";
    if (!ok) {
        ++failures;
        for (const std::string& e : current_errors) std::cout << "      - " << e << "\n";
    }
}

struct TableRow {
    LocalData data;
    FibreType type;
    Int components;
    int det;
    int R;
    Rat S;
    Mat3 rho;
};

std::vector<TableRow> table_rows() {
    const Mat3 Id = Mat3::identity(), MId = Mat3::minus_identity();
    const Mat3 G0 = gamma_matrix(GammaClass::Zero);
    const Mat3 Gm1 = gamma_matrix(GammaClass::MinusOne);
    const Mat3 Ginf = gamma_matrix(GammaClass::Infinity);
    const CycInt w = CycInt::omega();

    std::vector<TableRow> rows;
    auto add = [&rows](LocalData d, FibreType t, Int c, int det, int r, Rat s, Mat3 rho) {
        rows.push_back({d, t, std::move(c), det, r, std::move(s), rho});
    };

    // I0 in its three guises
    add({GammaClass::Generic, 0, 0}, FibreType::make(FibreKind::I0), 1, 1, 0, Rat(0), Id);
    add({GammaClass::Infinity, 6, 0}, FibreType::make(FibreKind::I0), 1, 1, 0, Rat(0), Id);
    add({GammaClass::MinusOne, 2, 0}, FibreType::make(FibreKind::I0, 0, true), 1, 1, 0, Rat(0), Id);
    // I0* in its three guises
    add({GammaClass::Generic, 0, 1}, FibreType::make(FibreKind::I0star), 11, -1, 3, Rat(1, 2), MId);
    add({GammaClass::Infinity, 3, 0}, FibreType::make(FibreKind::I0star), 11, -1, 3, Rat(1, 2), MId);
    add({GammaClass::MinusOne, 2, 1}, FibreType::make(FibreKind::I0star, 0, true), 11, -1, 3, Rat(1, 2),
        MId);
    // I_d and I_d*
    for (int d : {1, 2, 3, 7}) {
        Mat3 u = G0.pow(static_cast<unsigned>(d));
        add({GammaClass::Zero, d, 0}, FibreType::make(FibreKind::Id, d), Int(d) * d + 2, 1, 2, Rat(0), u);
        add({GammaClass::Zero, d, 1}, FibreType::make(FibreKind::Idstar, d),
            2 * Int(d) * d + 9 * Int(d) + 10, -1, 3, Rat(1, 2), -u);
    }
    // III and III*
    add({GammaClass::MinusOne, 1, 0}, FibreType::make(FibreKind::III, 0, true), 1, -1, 1, Rat(0), Gm1);
    add({GammaClass::MinusOne, 3, 0}, FibreType::make(FibreKind::III, 0, true), 1, -1, 1, Rat(0), Gm1);
    add({GammaClass::MinusOne, 1, 1}, FibreType::make(FibreKind::IIIstar, 0, true), 11, 1, 2, Rat(1, 2),
        -Gm1);
    // gamma = infinity rows; the b-odd data realize the second row of the
    // modularity table
    add({GammaClass::Infinity, 1, 0}, FibreType::make(FibreKind::IIstar), 53, -1, 3, Rat(5, 6), Ginf);
    add({GammaClass::Infinity, 7, 0}, FibreType::make(FibreKind::IIstar), 53, -1, 3, Rat(5, 6), Ginf);
    add({GammaClass::Infinity, 4, 1}, FibreType::make(FibreKind::IIstar), 53, -1, 3, Rat(5, 6), Ginf);
    add({GammaClass::Infinity, 2, 0}, FibreType::make(FibreKind::IVstar), 22, 1, 2, Rat(2, 3),
        Mat3::diagonal(CycInt(1), w.pow(2), w.pow(4)));
    add({GammaClass::Infinity, 1, 1}, FibreType::make(FibreKind::IV), 6, 1, 2, Rat(1, 3),
        Mat3::diagonal(CycInt(1), w.pow(4), w.pow(2)));
    add({GammaClass::Infinity, 4, 0}, FibreType::make(FibreKind::IV), 6, 1, 2, Rat(1, 3),
        Mat3::diagonal(CycInt(1), w.pow(4), w.pow(2)));
    add({GammaClass::Infinity, 2, 1}, FibreType::make(FibreKind::II), 3, -1, 3, Rat(1, 6),
        Mat3::diagonal(CycInt(-1), w.pow(5), w));
    add({GammaClass::Infinity, 5, 0}, FibreType::make(FibreKind::II), 3, -1, 3, Rat(1, 6),
        Mat3::diagonal(CycInt(-1), w.pow(5), w));
    return rows;
}

std::string row_tag(const TableRow& row) {
    std::ostringstream os;
    os << row.type.str() << " via (" << to_string(row.data.gamma_class) << ", d=" << row.data.d
       << ", b=" << row.data.b << ")";
    return os.str();
}

nlohmann::json load_fixture() {
    std::ifstream in(std::string(K3FIB_SOURCE_DIR) + "/tests/fixtures/worked_examples.json");
    if (!in) throw std::runtime_error("fixture file missing");
    nlohmann::json j;
    in >> j;
    return j;
}

void check_against_fixture(const nlohmann::json& fx) {
    Config config;
    config.gamma = fx.at("config").at("gamma").get<std::string>();
    config.beta_prime = fx.at("config").at("beta_prime").get<std::string>();
    Report report = run(config);
    const std::string name = fx.at("name").get<std::string>();

    expect(report.data.map_deg == fx.at("map_degree").get<int>(), name + ": map degree");
    const auto& fplaces = fx.at("places");
    expect(report.data.places.size() == fplaces.size(), name + ": place count");
    if (report.data.places.size() != fplaces.size()) return;

    for (std::size_t i = 0; i < fplaces.size(); ++i) {
        const ClassifiedPlace& got = report.data.places[i];
        const nlohmann::json& want = fplaces[static_cast<int>(i)];
        std::string tag = name + " place " + want.at("place").get<std::string>();
        expect(got.place.str() == want.at("place").get<std::string>(), tag + ": identity/order");
        expect(got.place.degree() == want.at("degree").get<int>(), tag + ": degree");
        expect(std::string(to_string(got.local.gamma_class)) == want.at("gamma_class").get<std::string>(),
               tag + ": gamma class");
        expect(got.local.d == want.at("d").get<int>(), tag + ": d");
        expect(got.local.b == want.at("b").get<int>(), tag + ": b");
        expect(got.fibre.type.str() == want.at("type").get<std::string>(), tag + ": type");
        expect(got.fibre.components == Int(want.at("components").get<long long>()), tag + ": C");
        expect(got.fibre.R == want.at("R").get<int>(), tag + ": R");
        expect(rat_str(got.fibre.S) == want.at("S").get<std::string>(), tag + ": S");
        expect(got.fibre.det == want.at("det").get<int>(), tag + ": det");
    }

    const nlohmann::json& g = fx.at("global");
    expect(report.global.parity_ok == g.at("parity_ok").get<bool>(), name + ": parity");
    expect(rat_str(report.global.canonical_deg) == g.at("canonical_degree").get<std::string>(),
           name + ": canonical degree");
    const BettiNumbers& b = report.global.betti_numbers;
    expect(b.b2.has_value() && *b.b2 == Int(g.at("b2").get<long long>()), name + ": b2");
    expect(b.b3.has_value() && *b.b3 == Int(g.at("b3").get<long long>()), name + ": b3");
    expect(b.flags.size() == g.at("flags").size(), name + ": flag count");
    for (std::size_t i = 0; i < b.flags.size() && i < g.at("flags").size(); ++i)
        expect(b.flags[i] == g.at("flags")[static_cast<int>(i)].get<std::string>(),
               name + ": flag text '" + b.flags[i] + "'");
    if (g.at("euler").is_null()) {
        expect(!report.global.euler.has_value(), name + ": euler withheld");
    } else {
        expect(report.global.euler.has_value() &&
                   *report.global.euler == Int(g.at("euler").get<long long>()),
               name + ": euler");
    }
    expect(report.global.cy == g.at("cy_candidate").get<bool>(), name + ": cy candidate");
}

}  // namespace

int main() {
    criterion(1, "Table-1 reproduction (type, C, det, R, S, rho exact)", 1.0, [] {
        for (const TableRow& row : table_rows()) {
            FibreRecord rec = classify(row.data);
            expect(rec.type == row.type, row_tag(row) + ": type");
            expect(rec.components == row.components, row_tag(row) + ": components");
            expect(rec.det == row.det, row_tag(row) + ": det");
            expect(rec.R == row.R, row_tag(row) + ": R");
            expect(rec.S == row.S, row_tag(row) + ": S");
            expect(local_monodromy(row.data) == row.rho, row_tag(row) + ": rho matrix");
        }
    });

    criterion(2, "monodromy algebra and R = 3 - fixed_rank", 1.0, [] {
        const Mat3 G0 = gamma_matrix(GammaClass::Zero);
        const Mat3 Gm1 = gamma_matrix(GammaClass::MinusOne);
        const Mat3 Ginf = gamma_matrix(GammaClass::Infinity);
        expect(Gm1.pow(2) == Mat3::identity(), "Gamma_-1^2 = Id");
        expect(Ginf.pow(3) == Mat3::minus_identity(), "Gamma_inf^3 = -Id");
        expect(Ginf.pow(6) == Mat3::identity(), "Gamma_inf^6 = Id");
        Mat3 p = Mat3::identity();
        for (int d = 1; d <= 100; ++d) {
            p = p * G0;
            Mat3 e = Mat3::identity();
            e.at(0, 1) = CycInt(Int(d));
            e.at(1, 2) = CycInt(Int(d));
            e.at(0, 2) = CycInt(Int(d) * Int(d - 1) / 2);
            if (p != e) {
                expect(false, "Gamma_0^" + std::to_string(d) + " closed form");
                break;
            }
        }
        for (const TableRow& row : table_rows()) {
            ConjInvariants inv = conj_invariants(row.rho);
            expect(3 - inv.fixed_rank == row.R, row_tag(row) + ": R from fixed rank");
            expect(inv.det == row.det, row_tag(row) + ": det from matrix");
        }
    });

    criterion(3, "component-count oracles (I_d, I_d* breakdown, (m,n) lemma)", 1.0, [] {
        for (int d = 1; d <= 1000; ++d) {
            expect(id_component_count(d) == Int(d) * Int(d) + 2, "I_" + std::to_string(d) + " count");
            IdStarBreakdown b = idstar_component_count(d);
            expect(b.strict_transforms == 3 && b.from_curves == 5 * Int(d) + 4 &&
                       b.from_P_points == 2 * (Int(d) + 3) && b.from_Q_points == 2 * (Int(d) - 1) &&
                       b.from_R_point == 2 * Int(d) * Int(d) - 1,
                   "I_" + std::to_string(d) + "* breakdown terms");
            expect(b.total() == 2 * Int(d) * Int(d) + 9 * Int(d) + 10,
                   "I_" + std::to_string(d) + "* total");
        }
        expect(idstar_component_count(1).from_R_point == 1, "R(1) = 1");
        expect(idstar_component_count(2).from_R_point == 7, "R(2) = 7");
        for (int d = 3; d <= 200; ++d)
            expect(idstar_component_count(d).from_R_point ==
                       idstar_component_count(d - 2).from_R_point + 8 * Int(d) - 8,
                   "R recursion at d = " + std::to_string(d));
        expect(mn_exceptional_count(4, 3) == 5, "(4,3) -> 5");
        expect(mn_exceptional_count(3, 2) == 3, "(3,2) -> 3");
        expect(mn_exceptional_count(2, 0) == 0, "(2,0) -> 0");
    });

    criterion(4, "toric suite (index 12, |G| = 12, six monomials, crepant node resolution)", 1.0, [] {
        ToricData t = toric_construction();
        expect(t.sublattice_index == 12, "sublattice index");
        expect(t.group_order == 12, "|G| via Smith normal form");
        auto monos = enumerate_anticanonical_monomials();
        expect(monos.size() == 6, "exactly six monomials");
        std::vector<std::array<int, 4>> want = {{0, 0, 0, 2}, {0, 0, 6, 0}, {0, 6, 0, 0},
                                                {1, 1, 1, 1}, {2, 2, 2, 0}, {6, 0, 0, 0}};
        expect(monos == want, "monomials are the anticanonical six");
        ToricNodeResolution res = toric_resolve_node();
        expect(res.max_cones.size() == 4, "four maximal cones");
        expect(res.report.all_ok(), "node resolution checks");
    });

    criterion(5, "lattice suite (M1 span, four fibrations, intrinsic divisors)", 1.0, [] {
        IMat g = m1_generator_gram();
        Inertia sig = inertia_of(g);
        expect(rank_of(g) == 19, "rank 19");
        expect(abs_int(det_bareiss(g)) == 2, "|det| = 2");
        expect(sig.positive == 1 && sig.negative == 18, "signature (1,18)");
        for (const CheckReport& r :
             {verify_elliptic_fibrations(), verify_M1_span(), verify_intrinsic_divisors()}) {
            for (const CheckLine& line : r.lines) expect(line.ok, r.title + ": " + line.name);
        }
        expect(pair(divisor_W(), divisor_W()) == 4, "W^2 = 4");
    });

    criterion(6, "canonicalization round trip and rescaling covariance (100 + 100 seeded)", 5.0, [] {
        RatSampler sampler(kDefaultSeed);
        int done = 0;
        while (done < 100) {
            Rat bp = sampler.next_nonzero(50), gamma = sampler.next_nonzero(50);
            CanonicalParams p = canonicalize_quartic(weierstrass_equation(bp, gamma));
            expect(!p.gamma_infinite && p.beta_prime == bp && p.gamma == gamma,
                   "round trip at beta'=" + rat_str(bp) + ", gamma=" + rat_str(gamma));
            ++done;
        }
        done = 0;
        while (done < 100) {
            Rat bp = sampler.next_nonzero(50), gamma = sampler.next_nonzero(50),
                t = sampler.next_nonzero(50);
            QuarticForm q = weierstrass_equation(bp, gamma);
            q.a3 = sampler.next(50);
            CanonicalParams before = canonicalize_quartic(q);
            if (before.gamma_infinite) continue;
            CanonicalParams after = canonicalize_quartic(rescale_x(q, t));
            expect(!after.gamma_infinite && after.gamma == before.gamma,
                   "gamma invariant under x-rescaling");
            expect(after.beta_prime == before.beta_prime / (t * t), "beta' scales by 1/t^2");
            ++done;
        }
    });

    criterion(7, "end-to-end worked examples against the hand-computed fixture", 2.0, [] {
        nlohmann::json fixture = load_fixture();
        for (const nlohmann::json& fx : fixture.at("examples")) check_against_fixture(fx);
    });

    criterion(8, "property suite (parity, divisor degree zero, classify stability)", 10.0, [] {
        RatSampler seeder(kDefaultSeed);
        std::mt19937_64 rng(seeder.next_u64());
        std::uniform_int_distribution<int> coeff(-5, 5);
        std::uniform_int_distribution<int> deg(1, 3);
        auto random_poly = [&]() {
            std::vector<Rat> c(static_cast<std::size_t>(deg(rng)) + 1);
            for (auto& x : c) x = Rat(coeff(rng));
            c.back() = 1;
            return Polynomial(std::move(c));
        };

        int done = 0;
        while (done < 200) {
            RationalFunction gamma(random_poly(), random_poly());
            RationalFunction beta(random_poly(), random_poly());
            if (gamma.is_zero() || gamma.is_constant() || beta.is_zero()) continue;
            FibrationData data = build_fibration(WeierstrassDatum(beta, gamma));
            if (!parity_check(data)) {
                expect(false, "parity failed for gamma=" + gamma.str() + ", beta'=" + beta.str());
                break;
            }
            ++done;
        }

        done = 0;
        while (done < 200) {
            RationalFunction f(random_poly() * random_poly(), random_poly());
            if (f.is_zero() || f.is_constant()) continue;
            long long total = 0;
            for (const Place& p : support(f)) total += static_cast<long long>(p.degree()) * ord_at(f, p);
            if (total != 0) {
                expect(false, "principal divisor degree " + std::to_string(total) + " for " + f.str());
                break;
            }
            ++done;
        }

        bool stable = true;
        for (int d = 0; d <= 50 && stable; ++d)
            for (int b = 0; b <= 10 && stable; ++b)
                for (GammaClass c : {GammaClass::Generic, GammaClass::Zero, GammaClass::MinusOne,
                                     GammaClass::Infinity}) {
                    if (c != GammaClass::Generic && d == 0) continue;
                    LocalData data{c, c == GammaClass::Generic ? 0 : d, b};
                    FibreRecord rec = classify(data);
                    LocalData bumped = data;
                    bumped.b += 2;
                    if (!(classify(bumped) == rec)) {
                        expect(false, "b -> b+2 changed the record");
                        stable = false;
                        break;
                    }
                    if (c == GammaClass::Infinity) {
                        LocalData shifted{c, d + 6, b};
                        if (!(classify(shifted).type == rec.type)) {
                            expect(false, "d -> d+6 changed the type at infinity");
                            stable = false;
                            break;
                        }
                    }
                }
    });

    if (failures == 0) {
        std::cout << "acceptance: all 8 criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return 1;
}
