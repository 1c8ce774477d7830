#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "peq/error.hpp"

namespace peq {

// Checked 64-bit integer. Every arithmetic operation traps overflow and
// throws OverflowError instead of wrapping. Used as a ring scalar: no
// division is provided.
struct Int64 {
    std::int64_t v = 0;

    Int64() = default;
    Int64(std::int64_t x) : v(x) {}

    friend Int64 operator+(Int64 a, Int64 b) {
        Int64 r;
        if (__builtin_add_overflow(a.v, b.v, &r.v))
            throw OverflowError("int64 overflow in addition");
        return r;
    }
    friend Int64 operator-(Int64 a, Int64 b) {
        Int64 r;
        if (__builtin_sub_overflow(a.v, b.v, &r.v))
            throw OverflowError("int64 overflow in subtraction");
        return r;
    }
    friend Int64 operator*(Int64 a, Int64 b) {
        Int64 r;
        if (__builtin_mul_overflow(a.v, b.v, &r.v))
            throw OverflowError("int64 overflow in multiplication");
        return r;
    }
    friend Int64 operator-(Int64 a) { return Int64(0) - a; }
    Int64& operator+=(Int64 b) { return *this = *this + b; }
    Int64& operator-=(Int64 b) { return *this = *this - b; }
    Int64& operator*=(Int64 b) { return *this = *this * b; }
    friend bool operator==(Int64 a, Int64 b) { return a.v == b.v; }
    friend bool operator!=(Int64 a, Int64 b) { return a.v != b.v; }
};

// Exact rational scalar. Arbitrary-precision, always stored reduced with a
// positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// The two-element field. Addition is xor, multiplication is and.
struct GF2 {
    std::uint8_t v = 0;

    GF2() = default;
    GF2(std::int64_t x) : v(static_cast<std::uint8_t>(((x % 2) + 2) % 2)) {}

    friend GF2 operator+(GF2 a, GF2 b) { return GF2(a.v ^ b.v); }
    friend GF2 operator-(GF2 a, GF2 b) { return a + b; }
    friend GF2 operator*(GF2 a, GF2 b) { return GF2(a.v & b.v); }
    friend GF2 operator/(GF2 a, GF2 b) {
        if (b.v == 0) throw DomainError("division by zero in GF(2)");
        return a;
    }
    friend GF2 operator-(GF2 a) { return a; }
    GF2& operator+=(GF2 b) { return *this = *this + b; }
    GF2& operator-=(GF2 b) { return *this = *this - b; }
    GF2& operator*=(GF2 b) { return *this = *this * b; }
    friend bool operator==(GF2 a, GF2 b) { return a.v == b.v; }
    friend bool operator!=(GF2 a, GF2 b) { return a.v != b.v; }
};

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Int64> {
    static constexpr const char* name = "int";
    static constexpr bool exact = true;
};
template <>
struct ScalarTraits<Rational> {
    static constexpr const char* name = "rational";
    static constexpr bool exact = true;
};
template <>
struct ScalarTraits<GF2> {
    static constexpr const char* name = "gf2";
    static constexpr bool exact = true;
};
template <>
struct ScalarTraits<double> {
    static constexpr const char* name = "f64";
    static constexpr bool exact = false;
};

// Uniform construction from a plain integer, for code generic over the
// scalar type (basis coefficients are integers).
template <class S>
S scalar_from_int(std::int64_t x) {
    return S(x);
}
template <>
inline double scalar_from_int<double>(std::int64_t x) {
    return static_cast<double>(x);
}

}  // namespace peq
