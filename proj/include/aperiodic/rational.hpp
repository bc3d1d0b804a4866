#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace aperiodic {

// Exact rational on machine integers. Word indices and frequencies have tiny
// numerators/denominators, so 64 bits is plenty; every operation checks for
// overflow and throws rather than wrapping.
struct Rat64 {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Rat64() = default;
    Rat64(std::int64_t n) : num(n), den(1) {}
    Rat64(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        normalize();
    }

    void normalize() {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        std::int64_t g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        if (num == 0) den = 1;
    }

    static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
        return r;
    }
    static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("rational overflow");
        return r;
    }

    friend Rat64 operator+(const Rat64& a, const Rat64& b) {
        return Rat64(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                     checked_mul(a.den, b.den));
    }
    friend Rat64 operator-(const Rat64& a, const Rat64& b) {
        return Rat64(checked_add(checked_mul(a.num, b.den), -checked_mul(b.num, a.den)),
                     checked_mul(a.den, b.den));
    }
    friend Rat64 operator*(const Rat64& a, const Rat64& b) {
        return Rat64(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
    }
    friend Rat64 operator/(const Rat64& a, const Rat64& b) {
        if (b.num == 0) throw std::domain_error("rational division by zero");
        return Rat64(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
    }
    Rat64 operator-() const { return Rat64(-num, den); }

    friend bool operator==(const Rat64& a, const Rat64& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rat64& a, const Rat64& b) {
        // Cross-multiply in 128 bits so comparison never overflows.
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator>(const Rat64& a, const Rat64& b) { return b < a; }
    friend bool operator<=(const Rat64& a, const Rat64& b) { return !(b < a); }
    friend bool operator>=(const Rat64& a, const Rat64& b) { return !(a < b); }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

}  // namespace aperiodic
