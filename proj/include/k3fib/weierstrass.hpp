#pragma once

/// The quartic normal form
///
///   a1 w^4 + a2 w^2yz + a3 wxyz + a4 wy^2z + a5 wyz^2 + a6 x^2yz = 0
///
/// with its parameter maps: (alpha, beta) -> (beta', gamma), the equation
/// for a given (beta', gamma), and canonicalization back from a general
/// admissible quartic. Also the toric derivation behind the normal form
/// (reflexive simplex, index-12 sublattice, anticanonical monomials) and
/// exact spot checks of the derivation chain.
///
/// Note the factor 27: eq-level consistency demands
/// gamma = 27 * a1*a4*a5*a6^3 / (a2*a6 - a3^2/4)^3, so that canonicalizing
/// the Weierstrass equation (whose w^4 coefficient is gamma/27) returns
/// gamma itself.

#include "k3fib/check.hpp"
#include "k3fib/linalg.hpp"
#include "k3fib/ratfunc_core.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3fib {

/// Coefficients of the quartic; F is Rat for a single surface or
/// RationalFunction for a family over the base curve.
template <class F>
struct QuarticFormT {
    F a1{}, a2{}, a3{}, a4{}, a5{}, a6{};

    /// a1, a4, a5, a6 all nonzero; degenerate forms (gamma in {0, infinity})
    /// are representable but flagged here.
    bool admissible() const {
        return !(a1 == F(0)) && !(a4 == F(0)) && !(a5 == F(0)) && !(a6 == F(0));
    }

    friend bool operator==(const QuarticFormT&, const QuarticFormT&) = default;
};

using QuarticForm = QuarticFormT<Rat>;
using QuarticFamily = QuarticFormT<RationalFunction>;

struct WeierstrassDatum {
    RationalFunction beta_prime;
    RationalFunction gamma;

    WeierstrassDatum(RationalFunction bp, RationalFunction g)
        : beta_prime(std::move(bp)), gamma(std::move(g)) {
        if (gamma.is_constant())
            throw std::domain_error("constant gamma: isotrivial fibration");
        if (beta_prime.is_zero()) throw std::domain_error("beta' must not be identically zero");
    }
};

/// beta' = 1/(4*beta - 1), gamma = 1728*alpha/(4*beta - 1)^3.
inline std::pair<Rat, Rat> params_from_alpha_beta(const Rat& alpha, const Rat& beta) {
    Rat q = 4 * beta - 1;
    if (q == 0) throw std::domain_error("beta = 1/4 is degenerate (beta' infinite)");
    return {inv_rat(q), Rat(1728) * alpha / (q * q * q)};
}

/// The Weierstrass equation for given parameters:
/// (a1..a6) = (gamma/27, 1, 0, 1, 1, beta').
template <class F>
QuarticFormT<F> weierstrass_equation(const F& beta_prime, const F& gamma) {
    return {gamma / F(27), F(1), F(0), F(1), F(1), beta_prime};
}

inline QuarticFamily weierstrass_equation(const WeierstrassDatum& d) {
    return weierstrass_equation<RationalFunction>(d.beta_prime, d.gamma);
}

/// Result of canonicalization; gamma_infinite marks the branch
/// a2*a6 - a3^2/4 = 0, where the surface degenerates to the fixed
/// gamma = infinity quartic 1/27 w^4 + wy^2z + wyz^2 + x^2yz.
template <class F>
struct CanonicalParamsT {
    F beta_prime{};
    bool gamma_infinite = false;
    F gamma{};
};

using CanonicalParams = CanonicalParamsT<Rat>;

template <class F>
CanonicalParamsT<F> canonicalize_quartic(const QuarticFormT<F>& q) {
    if (!q.admissible())
        throw std::domain_error("canonicalize_quartic requires a1*a4*a5*a6 != 0");
    F bp = q.a2 * q.a6 - q.a3 * q.a3 / F(4);
    if (bp == F(0)) return {bp, true, F(0)};
    F bp3 = bp * bp * bp;
    F gamma = F(27) * q.a1 * q.a4 * q.a5 * q.a6 * q.a6 * q.a6 / bp3;
    return {bp, false, gamma};
}

/// Substitution x -> t*x with the quartic rescaled accordingly:
/// a3 -> a3/t, a6 -> a6/t^2. Composed with beta' -> beta'/t^2 this fixes
/// the surface; gamma is invariant.
template <class F>
QuarticFormT<F> rescale_x(const QuarticFormT<F>& q, const F& t) {
    if (t == F(0)) throw std::domain_error("rescale_x requires t != 0");
    return {q.a1, q.a2, q.a3 / t, q.a4, q.a5, q.a6 / (t * t)};
}

/// Equation rendering in the variable order (w, x, y, z).
inline std::string quartic_str(const QuarticForm& q) {
    auto term = [](const Rat& c, const char* mono) {
        return "(" + rat_str(c) + ")*" + mono;
    };
    std::string out = term(q.a1, "w^4") + " + " + term(q.a2, "w^2*y*z");
    if (q.a3 != 0) out += " + " + term(q.a3, "w*x*y*z");
    out += " + " + term(q.a4, "w*y^2*z") + " + " + term(q.a5, "w*y*z^2") + " + " + term(q.a6, "x^2*y*z");
    return out;
}

// ---------------------------------------------------------------------------
// Toric construction behind the normal form
// ---------------------------------------------------------------------------

using Vec3 = std::array<Int, 3>;

/// Class in G = (Z6^3 + Z2 with weighted-sum zero) / diagonal Z6:
/// canonical representative has first entry 0.
struct GClass {
    std::array<int, 4> rep{};  // entries mod (6,6,6,2), rep[0] == 0

    static GClass of(int g0, int g1, int g2, int g3) {
        auto m6 = [](int v) { return ((v % 6) + 6) % 6; };
        auto m2 = [](int v) { return ((v % 2) + 2) % 2; };
        GClass c;
        c.rep = {0, m6(g1 - g0), m6(g2 - g0), m2(g3 - g0)};
        return c;
    }
    bool trivial() const { return rep == std::array<int, 4>{0, 0, 0, 0}; }
    friend bool operator==(const GClass&, const GClass&) = default;
};

/// Grading of the Cox ring by Z + G; monomial x0^d0 x1^d1 x2^d2 x3^d3 has
/// degree (d0+d1+d2+3*d3, class of (-d1-d2-3*d3, d1, d2, d3)).
inline std::pair<int, GClass> chow_grading(int d0, int d1, int d2, int d3) {
    (void)d0;
    return {d0 + d1 + d2 + 3 * d3, GClass::of(-d1 - d2 - 3 * d3, d1, d2, d3)};
}

struct ToricData {
    std::array<Vec3, 4> vertices;       // u0, u1, u2, u3
    Int sublattice_index;               // |det[u1;u2;u3]|
    std::vector<Int> invariant_factors; // nontrivial SNF entries of M/M'
    Int group_order;                    // product of invariant factors
};

inline ToricData toric_construction() {
    ToricData t;
    t.vertices = {Vec3{Int(-1), Int(-1), Int(-1)}, Vec3{Int(5), Int(-1), Int(-1)},
                  Vec3{Int(-1), Int(5), Int(-1)}, Vec3{Int(-1), Int(-1), Int(1)}};
    // u0 = -u1 - u2 - 3*u3
    for (int k = 0; k < 3; ++k) {
        Int lhs = t.vertices[0][static_cast<std::size_t>(k)];
        Int rhs = -t.vertices[1][static_cast<std::size_t>(k)] - t.vertices[2][static_cast<std::size_t>(k)] -
                  3 * t.vertices[3][static_cast<std::size_t>(k)];
        if (lhs != rhs) throw std::runtime_error("toric vertex relation violated");
    }
    IMat gen(3, std::vector<Int>(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) gen[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = t.vertices[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j)];
    t.sublattice_index = abs_int(det_bareiss(gen));
    t.group_order = Int(1);
    for (const Int& d : smith_normal_form(gen)) {
        if (d != 1) t.invariant_factors.push_back(d);
        t.group_order *= d;
    }
    return t;
}

/// All exponent vectors (d0..d3) >= 0 of Chow degree (6, 0): exactly the
/// six monomials of the anticanonical family
/// a0 x0^6 + a1 x1^6 + a2 x2^6 + a3 x3^2 + a4 x0x1x2x3 + a5 x0^2x1^2x2^2.
inline std::vector<std::array<int, 4>> enumerate_anticanonical_monomials() {
    std::vector<std::array<int, 4>> out;
    for (int d3 = 0; 3 * d3 <= 6; ++d3)
        for (int d0 = 0; d0 + 3 * d3 <= 6; ++d0)
            for (int d1 = 0; d0 + d1 + 3 * d3 <= 6; ++d1) {
                int d2 = 6 - 3 * d3 - d0 - d1;
                auto [deg, cls] = chow_grading(d0, d1, d2, d3);
                if (deg == 6 && cls.trivial()) out.push_back({d0, d1, d2, d3});
            }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Exact randomized verification of the derivation chain
// ---------------------------------------------------------------------------

/// At `samples` random rational points: (a) the monomial map
/// psi = (x0^6, x1^6, x2^6, x3^2, x0x1x2x3, x0^2x1^2x2^2) satisfies the
/// image relations y0y1y2 = y5^3 and y3y5 = y4^2 and pulls the hyperplane
/// section back to the anticanonical sextic; (b) the substitution
/// y -> (4b-1)y/4x, z -> (4b-1)z/4x followed by completing the square in x
/// turns the open torus form into the gamma/27 form exactly.
inline CheckReport verify_derivation_chain(const Rat& alpha, const Rat& beta, int samples,
                                           std::uint64_t seed = 20240613u) {
    if (samples < 1) throw std::domain_error("samples must be >= 1");
    Rat q4 = 4 * beta - 1;
    if (q4 == 0) throw std::domain_error("beta = 1/4 is degenerate");
    const Rat gamma = Rat(1728) * alpha / (q4 * q4 * q4);

    CheckReport report;
    report.title = "derivation chain at alpha=" + rat_str(alpha) + ", beta=" + rat_str(beta) +
                   ", seed=" + std::to_string(seed);
    RatSampler sampler(seed);

    bool psi_cubic = true, psi_square = true, hyperplane = true, change_of_vars = true;
    std::string witness;
    for (int s = 0; s < samples; ++s) {
        Rat x0 = sampler.next_nonzero(), x1 = sampler.next_nonzero(), x2 = sampler.next_nonzero(),
            x3 = sampler.next_nonzero();
        Rat y0 = pow_rat(x0, 6), y1 = pow_rat(x1, 6), y2 = pow_rat(x2, 6);
        Rat y3 = x3 * x3, y4 = x0 * x1 * x2 * x3, y5 = pow_rat(x0 * x1 * x2, 2);
        if (y0 * y1 * y2 != pow_rat(y5, 3)) psi_cubic = false;
        if (y3 * y5 != y4 * y4) psi_square = false;
        Rat lhs = alpha * y0 + y1 + y2 + y3 + y4 + beta * y5;
        Rat rhs = alpha * pow_rat(x0, 6) + pow_rat(x1, 6) + pow_rat(x2, 6) + x3 * x3 +
                  x0 * x1 * x2 * x3 + beta * pow_rat(x0 * x1 * x2, 2);
        if (lhs != rhs) hyperplane = false;

        // (b): open form E3(x,y,z) = x + y + z + alpha/(x^3 y z) + beta/x + 1
        Rat x = sampler.next_nonzero(), y = sampler.next_nonzero(), z = sampler.next_nonzero();
        Rat ys = q4 * y / (4 * x), zs = q4 * z / (4 * x);
        Rat e3 = x + ys + zs + alpha / (pow_rat(x, 3) * ys * zs) + beta / x + 1;
        Rat scaled = e3 * 4 * x / q4;
        Rat xt = 2 * x + 1;
        Rat e4 = xt * xt / q4 + y + z + gamma / (27 * y * z) + 1;
        if (scaled != e4) {
            change_of_vars = false;
            witness = "(x,y,z)=(" + rat_str(x) + "," + rat_str(y) + "," + rat_str(z) + ")";
        }
    }
    report.add("psi relation y0*y1*y2 = y5^3", psi_cubic);
    report.add("psi relation y3*y5 = y4^2", psi_square);
    report.add("hyperplane section pulls back to the sextic", hyperplane);
    report.add("change of variables maps the open form to the gamma/27 form", change_of_vars, witness);
    return report;
}

/// Exact check that the gradient of the Weierstrass quartic vanishes at
/// the four singular points P1..P4 on {w = 0} and at no sampled smooth
/// point. Sampling solves for x^2 on the surface: if x^2 != 0 the
/// x-partial 2*beta'*x*y*z is already nonzero, so no extension field is
/// needed.
inline CheckReport singular_points_check(const Rat& beta_prime, const Rat& gamma, int samples = 20,
                                         std::uint64_t seed = 20240613u) {
    if (beta_prime == 0) throw std::domain_error("beta' must be nonzero");
    if (gamma == 0 || gamma == -1) throw std::domain_error("gamma in {0,-1} excluded");

    const Rat a1 = gamma / 27, a4 = 1, a5 = 1;
    const Rat a2 = 1, a6 = beta_prime;

    // gradient of a1 w^4 + a2 w^2yz + a4 wy^2z + a5 wyz^2 + a6 x^2yz
    auto grad = [&](const Rat& w, const Rat& x, const Rat& y, const Rat& z) {
        std::array<Rat, 4> g;
        g[0] = 4 * a1 * pow_rat(w, 3) + 2 * a2 * w * y * z + a4 * y * y * z + a5 * y * z * z;
        g[1] = 2 * a6 * x * y * z;
        g[2] = a2 * w * w * z + 2 * a4 * w * y * z + a5 * w * z * z + a6 * x * x * z;
        g[3] = a2 * w * w * y + a4 * w * y * y + 2 * a5 * w * y * z + a6 * x * x * y;
        return g;
    };
    auto is_zero = [](const std::array<Rat, 4>& g) {
        return g[0] == 0 && g[1] == 0 && g[2] == 0 && g[3] == 0;
    };

    CheckReport report;
    report.title = "singular locus of the Weierstrass quartic, seed=" + std::to_string(seed);
    report.add("gradient vanishes at P1 = {w=x=y=0}", is_zero(grad(0, 0, 0, 1)));
    report.add("gradient vanishes at P2 = {w=x=z=0}", is_zero(grad(0, 0, 1, 0)));
    report.add("gradient vanishes at P3 = {w=y=z=0}", is_zero(grad(0, 1, 0, 0)));
    report.add("gradient vanishes at P4 = {w=x=y+z=0}", is_zero(grad(0, 0, 1, -1)));

    RatSampler sampler(seed);
    bool smooth_ok = true;
    std::string witness;
    int tested = 0;
    while (tested < samples) {
        Rat w = sampler.next_nonzero(), y = sampler.next_nonzero(), z = sampler.next_nonzero();
        // on-surface condition: a6 x^2 yz = -(a1 w^4 + a2 w^2yz + a4 wy^2z + a5 wyz^2)
        Rat xx = -(a1 * pow_rat(w, 4) + a2 * w * w * y * z + a4 * w * y * y * z + a5 * w * y * z * z) /
                 (a6 * y * z);
        ++tested;
        if (xx != 0) continue;  // x != 0 forces a nonzero x-partial
        if (is_zero(grad(w, 0, y, z))) {
            smooth_ok = false;
            witness = "(w,y,z)=(" + rat_str(w) + "," + rat_str(y) + "," + rat_str(z) + ")";
        }
    }
    report.add("no unexpected singular point among " + std::to_string(samples) + " samples", smooth_ok,
               witness);
    return report;
}

/// j = -1/gamma; gamma = 0 is the cusp (infinite j).
inline Rat elliptic_j(const Rat& gamma) {
    if (gamma == 0) throw std::domain_error("gamma = 0 is the cusp: j is infinite");
    return -inv_rat(gamma);
}

}  // namespace k3fib
