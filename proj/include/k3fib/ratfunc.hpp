#pragma once

/// Places of P^1 over Q and orders of vanishing of rational functions.
///
/// A place is a Galois orbit of closed points: a monic irreducible
/// polynomial, or the point at infinity. Its degree counts the geometric
/// points in the orbit. Working orbit-wise keeps everything inside exact
/// rational arithmetic; all downstream counts are weighted by place degree.

#include "k3fib/factor.hpp"
#include "k3fib/polynomial.hpp"
#include "k3fib/ratfunc_core.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3fib {

class Place {
public:
    static Place infinity() { return Place(Kind::Infinity); }

    /// Finite place given by a monic irreducible polynomial.
    static Place finite(Polynomial p) {
        if (p.degree() < 1) throw std::domain_error("finite place needs positive degree");
        if (!p.is_monic()) throw std::domain_error("finite place polynomial must be monic");
        Place out(Kind::Finite);
        out.deg_ = p.degree();
        out.poly_ = std::move(p);
        return out;
    }

    /// A named place of given degree on an abstract base curve; used for
    /// explicit per-place input where no coordinate is available.
    static Place abstract(std::string label, int degree) {
        if (degree < 1) throw std::domain_error("place degree must be >= 1");
        Place out(Kind::Abstract);
        out.label_ = std::move(label);
        out.deg_ = degree;
        return out;
    }

    bool is_infinity() const { return kind_ == Kind::Infinity; }
    bool is_finite() const { return kind_ == Kind::Finite; }

    const Polynomial& polynomial() const {
        if (!is_finite()) throw std::domain_error("only finite places carry a polynomial");
        return *poly_;
    }
    int degree() const { return deg_; }

    std::string str() const {
        switch (kind_) {
            case Kind::Infinity: return "infinity";
            case Kind::Finite: return poly_->str();
            case Kind::Abstract: return label_;
        }
        return "?";
    }

    friend bool operator==(const Place& a, const Place& b) {
        if (a.kind_ != b.kind_) return false;
        switch (a.kind_) {
            case Kind::Infinity: return true;
            case Kind::Finite: return *a.poly_ == *b.poly_;
            case Kind::Abstract: return a.label_ == b.label_ && a.deg_ == b.deg_;
        }
        return false;
    }
    friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }

    /// Finite places ordered by (degree, coefficients), then infinity,
    /// then abstract places by label.
    friend bool operator<(const Place& a, const Place& b) {
        if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
        switch (a.kind_) {
            case Kind::Infinity: return false;
            case Kind::Finite: return *a.poly_ < *b.poly_;
            case Kind::Abstract: return a.label_ < b.label_;
        }
        return false;
    }

private:
    enum class Kind { Finite, Infinity, Abstract };
    explicit Place(Kind k) : kind_(k) {}

    Kind kind_;
    std::optional<Polynomial> poly_;
    std::string label_;
    int deg_ = 1;
};

/// Multiplicity of the irreducible q in f (f nonzero).
inline int multiplicity_of(const Polynomial& f, const Polynomial& q) {
    int m = 0;
    Polynomial r = f;
    while (q.divides(r)) {
        r = r / q;
        ++m;
    }
    return m;
}

/// Order of vanishing (positive) or pole (negative) of f at p.
/// At infinity this is deg(denominator) - deg(numerator).
inline int ord_at(const RationalFunction& f, const Place& p) {
    if (f.is_zero()) throw std::domain_error("the zero function has no order");
    if (p.is_infinity()) return f.denominator().degree() - f.numerator().degree();
    return multiplicity_of(f.numerator(), p.polynomial()) - multiplicity_of(f.denominator(), p.polynomial());
}

/// All places where f has a zero or a pole, sorted, finite before infinity.
inline std::vector<Place> support(const RationalFunction& f) {
    if (f.is_zero()) throw std::domain_error("the zero function has no support");
    std::vector<Place> out;
    for (const auto& [q, m] : factor_squarefree(f.numerator())) {
        (void)m;
        out.push_back(Place::finite(q));
    }
    for (const auto& [q, m] : factor_squarefree(f.denominator())) {
        (void)m;
        if (std::find(out.begin(), out.end(), Place::finite(q)) == out.end()) out.push_back(Place::finite(q));
    }
    std::sort(out.begin(), out.end());
    if (ord_at(f, Place::infinity()) != 0) out.push_back(Place::infinity());
    return out;
}

/// Degree of gamma as a morphism P^1 -> P^1. Constant gamma means an
/// isotrivial fibration and is rejected.
inline int map_degree(const RationalFunction& gamma) {
    if (gamma.is_constant())
        throw std::domain_error("constant generalized functional invariant: isotrivial fibration");
    return std::max(gamma.numerator().degree(), gamma.denominator().degree());
}

enum class GammaClass { Zero, MinusOne, Infinity, Generic };

inline const char* to_string(GammaClass c) {
    switch (c) {
        case GammaClass::Zero: return "zero";
        case GammaClass::MinusOne: return "minus_one";
        case GammaClass::Infinity: return "infinity";
        case GammaClass::Generic: return "generic";
    }
    return "?";
}

/// Per-place classification key: where gamma sits on the modular curve,
/// the ramification order d toward that cusp/orbifold point, and the
/// absolute order b of zero/pole of beta'.
struct LocalData {
    GammaClass gamma_class = GammaClass::Generic;
    int d = 0;  // order of (gamma), (gamma+1) or (1/gamma); 0 for Generic
    int b = 0;  // |ord(beta')|

    friend bool operator==(const LocalData&, const LocalData&) = default;
};

/// Every place where gamma lies over {0, -1, infinity} or beta' has a
/// zero/pole. Places with generic gamma and even b are omitted by default:
/// the minimal-form fibre there is a smooth K3 and the model is unchanged.
/// Passing include_smooth_generic = true lists them anyway (the Weierstrass
/// model does degenerate there); their C = 1, R = 0, S = 0 keep every
/// downstream sum unchanged.
inline std::vector<std::pair<Place, LocalData>> critical_places(const RationalFunction& gamma,
                                                                const RationalFunction& beta_prime,
                                                                bool include_smooth_generic = false) {
    if (gamma.is_constant())
        throw std::domain_error("constant generalized functional invariant: isotrivial fibration");
    if (beta_prime.is_zero()) throw std::domain_error("beta' must not be identically zero");

    std::vector<std::pair<Place, LocalData>> out;
    auto find = [&out](const Place& p) -> LocalData* {
        for (auto& [q, data] : out)
            if (q == p) return &data;
        return nullptr;
    };
    auto add_class = [&](const Place& p, GammaClass c, int d) {
        if (LocalData* existing = find(p)) {
            existing->gamma_class = c;
            existing->d = d;
        } else {
            out.push_back({p, LocalData{c, d, 0}});
        }
    };

    const RationalFunction targets[] = {gamma, gamma + RationalFunction(1), gamma.inverse()};
    const GammaClass classes[] = {GammaClass::Zero, GammaClass::MinusOne, GammaClass::Infinity};
    for (int i = 0; i < 3; ++i) {
        for (const auto& [q, m] : factor_squarefree(targets[i].numerator()))
            add_class(Place::finite(q), classes[i], m);
        int oi = ord_at(targets[i], Place::infinity());
        if (oi > 0) add_class(Place::infinity(), classes[i], oi);
    }

    for (const Place& p : support(beta_prime)) {
        int b = std::abs(ord_at(beta_prime, p));
        if (LocalData* existing = find(p)) {
            existing->b = b;
        } else if (b % 2 == 1 || include_smooth_generic) {
            out.push_back({p, LocalData{GammaClass::Generic, 0, b}});
        }
        // generic gamma with even b: smooth minimal-form fibre
    }

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second.gamma_class != b.second.gamma_class)
            return static_cast<int>(a.second.gamma_class) < static_cast<int>(b.second.gamma_class);
        return a.first < b.first;
    });
    return out;
}

}  // namespace k3fib
