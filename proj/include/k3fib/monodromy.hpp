#pragma once

/// The local monodromy calculus on the transcendental lattice: 3x3 matrices
/// over Z[w], w a primitive sixth root of unity with w^2 = w - 1.
///
/// The three generators are
///   G_0   = [[1,1,0],[0,1,1],[0,0,1]]   around gamma = 0,
///   G_-1  = diag(-1, 1, 1)              around gamma = -1,
///   G_inf = diag(-1, w, w^5)            around gamma = infinity,
/// and a zero/pole of beta' of order b contributes (-Id)^b.

#include "k3fib/fibre_type.hpp"
#include "k3fib/ratfunc.hpp"

#include <array>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

namespace k3fib {

/// a + b*w in Z[w], reduced via w^2 = w - 1 (so w^3 = -1, w^6 = 1).
struct CycInt {
    Int a{0};
    Int b{0};

    CycInt() = default;
    CycInt(int x) : a(x) {}
    CycInt(Int x) : a(std::move(x)) {}
    CycInt(Int x, Int y) : a(std::move(x)), b(std::move(y)) {}

    static CycInt omega() { return CycInt(Int(0), Int(1)); }

    friend CycInt operator+(const CycInt& x, const CycInt& y) { return {x.a + y.a, x.b + y.b}; }
    friend CycInt operator-(const CycInt& x, const CycInt& y) { return {x.a - y.a, x.b - y.b}; }
    CycInt operator-() const { return {-a, -b}; }
    friend CycInt operator*(const CycInt& x, const CycInt& y) {
        // (a + bw)(c + dw) = ac + (ad + bc)w + bd(w - 1)
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
    }
    CycInt& operator+=(const CycInt& y) { return *this = *this + y; }
    CycInt& operator*=(const CycInt& y) { return *this = *this * y; }

    friend bool operator==(const CycInt&, const CycInt&) = default;

    bool is_rational() const { return b == 0; }

    /// Conjugate under w -> w^5 = 1 - w (complex conjugation).
    CycInt conj() const { return {a + b, -b}; }

    /// Field norm a^2 + ab ... : z * conj(z) = a^2 + ab + b^2, a rational integer.
    Int norm() const { return a * a + a * b + b * b; }

    CycInt pow(unsigned e) const {
        CycInt r(1), base = *this;
        while (e) {
            if (e & 1u) r *= base;
            base *= base;
            e >>= 1;
        }
        return r;
    }

    std::string str() const {
        std::ostringstream os;
        os << a << (b < 0 ? "-" : "+") << abs_int(b) << "*w";
        return os.str();
    }
};

/// Exact division in the fraction field Q(w); y must be nonzero.
struct CycRat {
    Rat a{0};
    Rat b{0};

    CycRat() = default;
    CycRat(const CycInt& z) : a(z.a), b(z.b) {}
    CycRat(Rat x, Rat y) : a(std::move(x)), b(std::move(y)) {}

    friend CycRat operator+(const CycRat& x, const CycRat& y) { return {x.a + y.a, x.b + y.b}; }
    friend CycRat operator-(const CycRat& x, const CycRat& y) { return {x.a - y.a, x.b - y.b}; }
    friend CycRat operator*(const CycRat& x, const CycRat& y) {
        return {x.a * y.a - x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b};
    }
    friend CycRat operator/(const CycRat& x, const CycRat& y) {
        Rat n = y.a * y.a + y.a * y.b + y.b * y.b;
        if (n == 0) throw std::domain_error("division by zero in Q(w)");
        CycRat yc{y.a + y.b, -y.b};  // conjugate
        CycRat prod = x * yc;
        return {prod.a / n, prod.b / n};
    }
    friend bool operator==(const CycRat&, const CycRat&) = default;
    bool is_zero() const { return a == 0 && b == 0; }
};

class Mat3 {
public:
    Mat3() = default;  // zero matrix

    static Mat3 identity() {
        Mat3 m;
        for (int i = 0; i < 3; ++i) m.at(i, i) = CycInt(1);
        return m;
    }
    static Mat3 minus_identity() {
        Mat3 m;
        for (int i = 0; i < 3; ++i) m.at(i, i) = CycInt(-1);
        return m;
    }
    static Mat3 diagonal(const CycInt& x, const CycInt& y, const CycInt& z) {
        Mat3 m;
        m.at(0, 0) = x;
        m.at(1, 1) = y;
        m.at(2, 2) = z;
        return m;
    }

    CycInt& at(int r, int c) { return e_[static_cast<std::size_t>(3 * r + c)]; }
    const CycInt& at(int r, int c) const { return e_[static_cast<std::size_t>(3 * r + c)]; }

    friend Mat3 operator*(const Mat3& x, const Mat3& y) {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                CycInt s(0);
                for (int k = 0; k < 3; ++k) s += x.at(i, k) * y.at(k, j);
                r.at(i, j) = s;
            }
        return r;
    }
    Mat3 operator-() const {
        Mat3 r = *this;
        for (auto& v : r.e_) v = -v;
        return r;
    }
    friend bool operator==(const Mat3&, const Mat3&) = default;

    Mat3 pow(unsigned e) const {
        Mat3 r = identity(), base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    CycInt det() const {
        const Mat3& m = *this;
        return m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
               m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
               m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
    }

    CycInt trace() const { return at(0, 0) + at(1, 1) + at(2, 2); }

private:
    std::array<CycInt, 9> e_{};
};

/// Dimension of the eigenspace for eigenvalue 1, by exact elimination of
/// (m - Id) over Q(w).
inline int fixed_rank(const Mat3& m) {
    CycRat a[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            a[i][j] = CycRat(m.at(i, j));
            if (i == j) a[i][j] = a[i][j] - CycRat(CycInt(1));
        }
    int rank = 0;
    for (int col = 0; col < 3 && rank < 3; ++col) {
        int pr = -1;
        for (int r = rank; r < 3; ++r)
            if (!a[r][col].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        for (int j = 0; j < 3; ++j) std::swap(a[pr][j], a[rank][j]);
        for (int r = 0; r < 3; ++r) {
            if (r == rank || a[r][col].is_zero()) continue;
            CycRat f = a[r][col] / a[rank][col];
            for (int j = 0; j < 3; ++j) a[r][j] = a[r][j] - f * a[rank][j];
        }
        ++rank;
    }
    return 3 - rank;
}

/// The generator around gamma = 0 / -1 / infinity (Generic has none).
inline Mat3 gamma_matrix(GammaClass c) {
    const CycInt w = CycInt::omega();
    switch (c) {
        case GammaClass::Zero: {
            Mat3 m = Mat3::identity();
            m.at(0, 1) = CycInt(1);
            m.at(1, 2) = CycInt(1);
            return m;
        }
        case GammaClass::MinusOne:
            return Mat3::diagonal(CycInt(-1), CycInt(1), CycInt(1));
        case GammaClass::Infinity:
            return Mat3::diagonal(CycInt(-1), w, w.pow(5));
        case GammaClass::Generic:
            throw std::domain_error("no monodromy generator for generic gamma");
    }
    throw std::domain_error("bad gamma class");
}

/// (-Id)^b * Gamma_class^d; Generic contributes only the beta' sign.
inline Mat3 local_monodromy(const LocalData& data) {
    Mat3 sign = (data.b % 2 == 0) ? Mat3::identity() : Mat3::minus_identity();
    if (data.gamma_class == GammaClass::Generic) return sign;
    if (data.d < 1) throw std::domain_error("ramification order must be >= 1 away from generic gamma");
    return sign * gamma_matrix(data.gamma_class).pow(static_cast<unsigned>(data.d));
}

struct ConjInvariants {
    int det = 0;                      // +1 or -1
    CycInt trace;
    int fixed_rank = 0;               // dim of the 1-eigenspace
    std::optional<int> finite_order;  // smallest k <= 12 with m^k = Id
};

inline ConjInvariants conj_invariants(const Mat3& m) {
    ConjInvariants inv;
    CycInt d = m.det();
    if (!(d == CycInt(1) || d == CycInt(-1)))
        throw std::domain_error("monodromy matrix must have determinant +1 or -1");
    inv.det = (d == CycInt(1)) ? 1 : -1;
    inv.trace = m.trace();
    inv.fixed_rank = fixed_rank(m);
    Mat3 p = m;
    for (int k = 1; k <= 12; ++k) {
        if (p == Mat3::identity()) {
            inv.finite_order = k;
            break;
        }
        p = p * m;
    }
    return inv;
}

/// The representative matrix listed in the classification table for each
/// fibre type. These are exactly the matrices local_monodromy produces.
inline Mat3 table_matrix(const FibreType& type) {
    const Mat3 G0 = gamma_matrix(GammaClass::Zero);
    const Mat3 Ginf = gamma_matrix(GammaClass::Infinity);
    switch (type.kind) {
        case FibreKind::I0: return Mat3::identity();
        case FibreKind::I0star: return Mat3::minus_identity();
        case FibreKind::Id: return G0.pow(static_cast<unsigned>(type.d));
        case FibreKind::Idstar: return -G0.pow(static_cast<unsigned>(type.d));
        case FibreKind::III: return gamma_matrix(GammaClass::MinusOne);
        case FibreKind::IIIstar: return -gamma_matrix(GammaClass::MinusOne);
        case FibreKind::IIstar: return Ginf;
        case FibreKind::IVstar: return Ginf.pow(2);
        case FibreKind::IV: return Ginf.pow(4);
        case FibreKind::II: return Ginf.pow(5);
    }
    throw std::domain_error("bad fibre kind");
}

/// Literal equality with the table representative (no conjugacy testing;
/// the table already fixes representatives in the form local_monodromy
/// produces).
inline bool matches_table(const Mat3& m, const FibreType& type) { return m == table_matrix(type); }

}  // namespace k3fib
