#pragma once

// Exact coefficient arithmetic: arbitrary-precision rationals and the
// ring Q[sqrt(2), sqrt(3)] spanned by {1, sqrt2, sqrt3, sqrt6}.
//
// Proof termination depends on exact zero tests, so coefficients are
// never represented in floating point. Denominators grow without bound
// under repeated halving, hence arbitrary precision.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace trigprove {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    return Rational(BigInt(num), BigInt(den));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// floor(p/q) for exact rationals.
inline BigInt floor_div(const BigInt& p, const BigInt& q) {
    BigInt d = p / q;
    if ((p % q) != 0 && ((p < 0) != (q < 0))) --d;
    return d;
}

inline BigInt floor_rational(const Rational& r) {
    return floor_div(numerator(r), denominator(r));
}

inline BigInt ceil_rational(const Rational& r) {
    return -floor_rational(-r);
}

// A value a + b*sqrt(2) + c*sqrt(3) + d*sqrt(6) with rational components.
// Closed under +, -, *; equality and zero tests are componentwise and exact.
struct SurdScalar {
    Rational c1, c2, c3, c6;

    SurdScalar() = default;
    explicit SurdScalar(Rational rational_part) : c1(std::move(rational_part)) {}
    SurdScalar(Rational a, Rational b, Rational c, Rational d)
        : c1(std::move(a)), c2(std::move(b)), c3(std::move(c)), c6(std::move(d)) {}

    static SurdScalar zero() { return SurdScalar{}; }
    static SurdScalar one() { return SurdScalar(Rational(1)); }
    static SurdScalar sqrt2() { return {Rational(0), Rational(1), Rational(0), Rational(0)}; }
    static SurdScalar sqrt3() { return {Rational(0), Rational(0), Rational(1), Rational(0)}; }
    static SurdScalar sqrt6() { return {Rational(0), Rational(0), Rational(0), Rational(1)}; }

    bool is_zero() const { return c1 == 0 && c2 == 0 && c3 == 0 && c6 == 0; }

    bool operator==(const SurdScalar& o) const {
        return c1 == o.c1 && c2 == o.c2 && c3 == o.c3 && c6 == o.c6;
    }
    bool operator!=(const SurdScalar& o) const { return !(*this == o); }

    SurdScalar operator-() const { return {-c1, -c2, -c3, -c6}; }

    SurdScalar& operator+=(const SurdScalar& o) {
        c1 += o.c1; c2 += o.c2; c3 += o.c3; c6 += o.c6;
        return *this;
    }
    SurdScalar& operator-=(const SurdScalar& o) {
        c1 -= o.c1; c2 -= o.c2; c3 -= o.c3; c6 -= o.c6;
        return *this;
    }

    friend SurdScalar operator+(SurdScalar a, const SurdScalar& b) { return a += b; }
    friend SurdScalar operator-(SurdScalar a, const SurdScalar& b) { return a -= b; }

    // Basis products: sqrt2*sqrt3 = sqrt6, sqrt2*sqrt6 = 2*sqrt3,
    // sqrt3*sqrt6 = 3*sqrt2, and the squares fold back into the
    // rational component.
    friend SurdScalar operator*(const SurdScalar& a, const SurdScalar& b) {
        SurdScalar r;
        r.c1 = a.c1 * b.c1 + 2 * a.c2 * b.c2 + 3 * a.c3 * b.c3 + 6 * a.c6 * b.c6;
        r.c2 = a.c1 * b.c2 + a.c2 * b.c1 + 3 * (a.c3 * b.c6 + a.c6 * b.c3);
        r.c3 = a.c1 * b.c3 + a.c3 * b.c1 + 2 * (a.c2 * b.c6 + a.c6 * b.c2);
        r.c6 = a.c1 * b.c6 + a.c6 * b.c1 + a.c2 * b.c3 + a.c3 * b.c2;
        return r;
    }
    SurdScalar& operator*=(const SurdScalar& o) { return *this = *this * o; }

    SurdScalar& operator*=(const Rational& q) {
        c1 *= q; c2 *= q; c3 *= q; c6 *= q;
        return *this;
    }
    friend SurdScalar operator*(SurdScalar a, const Rational& q) { return a *= q; }

    double to_double() const {
        return trigprove::to_double(c1) + trigprove::to_double(c2) * 1.4142135623730950488 +
               trigprove::to_double(c3) * 1.7320508075688772935 +
               trigprove::to_double(c6) * 2.4494897427831780982;
    }

    // Total order used only for deterministic tie-breaking.
    int compare(const SurdScalar& o) const {
        if (c1 != o.c1) return c1 < o.c1 ? -1 : 1;
        if (c2 != o.c2) return c2 < o.c2 ? -1 : 1;
        if (c3 != o.c3) return c3 < o.c3 ? -1 : 1;
        if (c6 != o.c6) return c6 < o.c6 ? -1 : 1;
        return 0;
    }
};

}  // namespace trigprove
