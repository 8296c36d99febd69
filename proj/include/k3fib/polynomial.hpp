#pragma once

/// Dense univariate polynomials over the rationals, in the variable t.
///
/// Coefficients are stored in ascending degree with a nonzero leading
/// coefficient (the zero polynomial is the empty coefficient vector, with
/// degree() == -1 by convention).

#include "k3fib/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace k3fib {

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rat& c) { if (c != 0) coeffs_.push_back(c); }
    Polynomial(int c) : Polynomial(Rat(c)) {}

    /// Coefficients ascending: {c0, c1, ...} means c0 + c1 t + ...
    explicit Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial variable() { return Polynomial({Rat(0), Rat(1)}); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    const Rat& coeff(int i) const {
        static const Rat zero(0);
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return zero;
        return coeffs_[static_cast<std::size_t>(i)];
    }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    const Rat& leading() const {
        if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
        return coeffs_.back();
    }
    const Rat& constant_term() const { return coeff(0); }

    bool is_monic() const { return !is_zero() && leading() == 1; }

    Polynomial monic() const {
        if (is_zero()) throw std::domain_error("cannot normalize zero polynomial");
        return *this / leading();
    }

    Rat evaluate(const Rat& x) const {
        Rat acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return Polynomial();
        std::vector<Rat> d(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rat(static_cast<int>(i));
        return Polynomial(std::move(d));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
        return Polynomial(std::move(c));
    }
    Polynomial operator-() const {
        std::vector<Rat> c(coeffs_);
        for (auto& x : c) x = -x;
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Polynomial& a, const Rat& s) {
        std::vector<Rat> c(a.coeffs_);
        for (auto& x : c) x *= s;
        return Polynomial(std::move(c));
    }
    friend Polynomial operator*(const Rat& s, const Polynomial& a) { return a * s; }
    friend Polynomial operator/(const Polynomial& a, const Rat& s) {
        if (s == 0) throw std::domain_error("division of polynomial by zero scalar");
        return a * inv_rat(s);
    }

    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    /// Euclidean division: returns (quotient, remainder).
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw std::domain_error("polynomial division by zero");
        Polynomial q, r = a;
        std::vector<Rat> qc;
        if (a.degree() >= b.degree()) qc.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), Rat(0));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int shift = r.degree() - b.degree();
            Rat c = r.leading() / b.leading();
            qc[static_cast<std::size_t>(shift)] = c;
            std::vector<Rat> sub(static_cast<std::size_t>(shift), Rat(0));
            for (const Rat& bc : b.coeffs_) sub.push_back(bc * c);
            r = r - Polynomial(std::move(sub));
        }
        return {Polynomial(std::move(qc)), r};
    }
    friend Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
    friend Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

    bool divides(const Polynomial& a) const { return (a % *this).is_zero(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Total order used to sort places deterministically: degree first,
    /// then coefficients from the top down.
    friend bool operator<(const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i) {
            if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
        }
        return false;
    }

    Polynomial pow(unsigned e) const {
        Polynomial r(1), b = *this;
        unsigned k = e;
        while (k) {
            if (k & 1u) r *= b;
            b *= b;
            k >>= 1;
        }
        return r;
    }

    /// Substitute t -> s*t (used by the factorization monicizing transform).
    Polynomial scale_variable(const Rat& s) const {
        std::vector<Rat> c(coeffs_);
        Rat f(1);
        for (std::size_t i = 1; i < c.size(); ++i) {
            f *= s;
            c[i] *= f;
        }
        return Polynomial(std::move(c));
    }

    /// Rational content and primitive integer coefficients, ascending.
    /// f == content * primitive, primitive has coprime integer coefficients
    /// with positive leading coefficient.
    std::pair<Rat, std::vector<Int>> content_primitive() const {
        if (is_zero()) throw std::domain_error("content of zero polynomial");
        Int l(1);
        for (const Rat& c : coeffs_) l = l / gcd_int(l, den(c)) * den(c);
        std::vector<Int> z;
        z.reserve(coeffs_.size());
        Int g(0);
        for (const Rat& c : coeffs_) {
            Int v = num(c) * (l / den(c));
            g = gcd_int(g, v);
            z.push_back(v);
        }
        if (z.back() < 0) {
            g = -g;
        }
        for (auto& v : z) v /= g;
        return {Rat(g, l), std::move(z)};
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const Rat& c = coeff(i);
            if (c == 0) continue;
            Rat a = c;
            if (first) {
                if (a < 0) {
                    out += "-";
                    a = -a;
                }
            } else {
                out += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            bool unit = (a == 1);
            if (i == 0 || !unit) out += rat_str(a);
            if (i > 0) {
                if (!unit) out += "*";
                out += "t";
                if (i > 1) out += "^" + std::to_string(i);
            }
            first = false;
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Rat> coeffs_;
};

/// Monic gcd; gcd(0,0) is an error.
inline Polynomial gcd(Polynomial a, Polynomial b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) undefined");
    while (!b.is_zero()) {
        Polynomial r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

}  // namespace k3fib
