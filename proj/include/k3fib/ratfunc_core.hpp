#pragma once

/// Rational functions on P^1 over Q: quotients of polynomials in t,
/// normalized so that gcd(num, den) = 1 and the denominator is monic.

#include "k3fib/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace k3fib {

class RationalFunction {
public:
    RationalFunction() : num_(Polynomial()), den_(Polynomial(1)) {}
    RationalFunction(const Rat& c) : num_(Polynomial(c)), den_(Polynomial(1)) {}
    RationalFunction(int c) : RationalFunction(Rat(c)) {}
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial(1)) {}

    RationalFunction(Polynomial numerator, Polynomial denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        normalize();
    }

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    Rat constant_value() const {
        if (!is_constant()) throw std::domain_error("not a constant rational function");
        return num_.constant_term() / den_.constant_term();
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("division by the zero function");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }

    RationalFunction pow(int e) const {
        if (e < 0) {
            if (is_zero()) throw std::domain_error("zero function to negative power");
            return RationalFunction(den_, num_).pow(-e);
        }
        return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
    }

    /// Reciprocal 1/f; f must be nonzero.
    RationalFunction inverse() const {
        if (is_zero()) throw std::domain_error("inverse of the zero function");
        return RationalFunction(den_, num_);
    }

    Rat evaluate(const Rat& x) const {
        Rat d = den_.evaluate(x);
        if (d == 0) throw std::domain_error("evaluation at a pole");
        return num_.evaluate(x) / d;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string str() const {
        if (den_ == Polynomial(1)) return num_.str();
        std::string n = num_.str();
        if (num_.degree() > 0) n = "(" + n + ")";
        std::string d = den_.str();
        if (den_.degree() > 0) d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Polynomial(1);
            return;
        }
        Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        Rat lc = den_.leading();
        if (lc != 1) {
            num_ = num_ / lc;
            den_ = den_ / lc;
        }
    }

    Polynomial num_;
    Polynomial den_;
};

}  // namespace k3fib
