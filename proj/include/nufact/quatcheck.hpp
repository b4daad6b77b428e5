#pragma once

/**
 * @file quatcheck.hpp
 * @brief Exact quaternion arithmetic over Q(sqrt 3) and membership in the order
 *
 *   S = { a + b i + c (sqrt3 i + j)/2 + d (sqrt3 + k)/2 : a, b, c, d in Z[sqrt3] }.
 *
 * Only identities are verified here; there is no factorization search in S.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <span>
#include <string>

namespace nufact {

using Rational = boost::multiprecision::cpp_rational;

/// u + v*sqrt(3) with rational u, v.
struct SqrtRat {
    Rational u{0};
    Rational v{0};

    SqrtRat() = default;
    SqrtRat(Rational uu, Rational vv = Rational{0}) : u(std::move(uu)), v(std::move(vv)) {}
    SqrtRat(long long n) : u(n), v(0) {}

    static SqrtRat sqrt3() { return {Rational{0}, Rational{1}}; }

    bool is_zero() const { return u == 0 && v == 0; }
    bool is_integral() const {
        return boost::multiprecision::denominator(u) == 1 && boost::multiprecision::denominator(v) == 1;
    }

    friend bool operator==(const SqrtRat& a, const SqrtRat& b) { return a.u == b.u && a.v == b.v; }
    friend SqrtRat operator+(const SqrtRat& a, const SqrtRat& b) { return {a.u + b.u, a.v + b.v}; }
    friend SqrtRat operator-(const SqrtRat& a, const SqrtRat& b) { return {a.u - b.u, a.v - b.v}; }
    SqrtRat operator-() const { return {-u, -v}; }
    friend SqrtRat operator*(const SqrtRat& a, const SqrtRat& b) {
        return {a.u * b.u + 3 * a.v * b.v, a.u * b.v + a.v * b.u};
    }
    SqrtRat conjugate() const { return {u, -v}; }
    /// Field norm u^2 - 3v^2 to Q.
    Rational field_norm() const { return u * u - 3 * v * v; }
    friend SqrtRat operator/(const SqrtRat& a, const SqrtRat& b) {
        auto n = b.field_norm();
        if (n == 0) throw std::domain_error("division by zero in Q(sqrt 3)");
        auto p = a * b.conjugate();
        return {p.u / n, p.v / n};
    }
};

/// w + x i + y j + z k with coefficients in Q(sqrt 3).
struct QuatQ3 {
    SqrtRat w, x, y, z;

    static QuatQ3 one() { return {SqrtRat{1}, {}, {}, {}}; }
    static QuatQ3 i() { return {{}, SqrtRat{1}, {}, {}}; }
    static QuatQ3 j() { return {{}, {}, SqrtRat{1}, {}}; }
    static QuatQ3 k() { return {{}, {}, {}, SqrtRat{1}}; }
    static QuatQ3 scalar(SqrtRat s) { return {std::move(s), {}, {}, {}}; }

    bool is_scalar() const { return x.is_zero() && y.is_zero() && z.is_zero(); }

    friend bool operator==(const QuatQ3&, const QuatQ3&) = default;
    friend QuatQ3 operator+(const QuatQ3& p, const QuatQ3& q) { return {p.w + q.w, p.x + q.x, p.y + q.y, p.z + q.z}; }
    friend QuatQ3 operator-(const QuatQ3& p, const QuatQ3& q) { return {p.w - q.w, p.x - q.x, p.y - q.y, p.z - q.z}; }
    QuatQ3 operator-() const { return {-w, -x, -y, -z}; }
};

/// Hamilton product: i^2 = j^2 = k^2 = ijk = -1.
inline QuatQ3 hmul(const QuatQ3& p, const QuatQ3& q) {
    return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
            p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
            p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
            p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}

inline QuatQ3 operator*(const QuatQ3& p, const QuatQ3& q) { return hmul(p, q); }

inline SqrtRat qnorm(const QuatQ3& q) { return q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z; }

/// Coordinates of q in the basis 1, i, (sqrt3 i + j)/2, (sqrt3 + k)/2.
struct SBasisCoords {
    SqrtRat a, b, c, d;
};

inline SBasisCoords s_coordinates(const QuatQ3& q) {
    auto r3 = SqrtRat::sqrt3();
    SqrtRat two{2};
    return {q.w - r3 * q.z, q.x - r3 * q.y, two * q.y, two * q.z};
}

inline bool in_S(const QuatQ3& q) {
    auto c = s_coordinates(q);
    return c.a.is_integral() && c.b.is_integral() && c.c.is_integral() && c.d.is_integral();
}

/// Inverse of s_coordinates.
inline QuatQ3 from_s_coordinates(const SBasisCoords& c) {
    auto r3 = SqrtRat::sqrt3();
    SqrtRat half{Rational{1, 2}};
    return {c.a + half * r3 * c.d, c.b + half * r3 * c.c, half * c.c, half * c.d};
}

/// Ordered product of `factors` equals `product`, and everything lies in S.
inline bool verify_identity(std::span<const QuatQ3> factors, const QuatQ3& product) {
    if (factors.empty()) return false;
    auto acc = factors.front();
    for (std::size_t n = 1; n < factors.size(); ++n) acc = hmul(acc, factors[n]);
    if (!(acc == product) || !in_S(product)) return false;
    for (const auto& f : factors)
        if (!in_S(f)) return false;
    return true;
}

}  // namespace nufact
