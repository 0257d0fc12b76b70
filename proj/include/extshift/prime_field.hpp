#ifndef EXTSHIFT_PRIME_FIELD_HPP
#define EXTSHIFT_PRIME_FIELD_HPP

#include <extshift/field.hpp>

#include <array>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>

namespace extshift {

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= m - b ? a - (m - b) : a + b;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return a >= b ? a - b : a + (m - b);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (e != 0) {
        if (e & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        e >>= 1U;
    }
    return result;
}

} // namespace detail

/// Deterministic Miller-Rabin; the fixed base set is exact for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto b : bases) {
        if (n % b == 0) return n == b;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (auto a : bases) {
        std::uint64_t x = detail::pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = detail::mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Residue class modulo a word-size prime.
class Fp {
public:
    Fp() = default;
    Fp(std::uint64_t modulus, std::uint64_t residue) : p_(modulus), v_(residue % modulus) {}

    std::uint64_t modulus() const { return p_; }
    std::uint64_t value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    Fp zero_like() const { return {p_, 0, raw_tag{}}; }
    Fp one_like() const { return {p_, 1 % p_, raw_tag{}}; }

    Fp operator+(const Fp& o) const { check(o); return {p_, detail::add_mod(v_, o.v_, p_), raw_tag{}}; }
    Fp operator-(const Fp& o) const { check(o); return {p_, detail::sub_mod(v_, o.v_, p_), raw_tag{}}; }
    Fp operator*(const Fp& o) const { check(o); return {p_, detail::mul_mod(v_, o.v_, p_), raw_tag{}}; }
    Fp operator-() const { return {p_, v_ == 0 ? 0 : p_ - v_, raw_tag{}}; }
    Fp operator/(const Fp& o) const { check(o); return *this * o.inverse(); }

    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("division by zero in GF(" + std::to_string(p_) + ")");
        return {p_, detail::pow_mod(v_, p_ - 2, p_), raw_tag{}};
    }

    bool operator==(const Fp& o) const { return p_ == o.p_ && v_ == o.v_; }

    std::string to_string() const { return std::to_string(v_); }
    friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_; }

private:
    struct raw_tag {};
    Fp(std::uint64_t p, std::uint64_t v, raw_tag) : p_(p), v_(v) {}

    void check(const Fp& o) const {
        if (p_ != o.p_) throw std::invalid_argument("mixed-field operands");
    }

    std::uint64_t p_ = 0;
    std::uint64_t v_ = 0;
};

/// GF(p) for a prime p < 2^64.
class PrimeField {
public:
    using value_type = Fp;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    }

    std::uint64_t characteristic() const { return p_; }
    std::uint64_t order() const { return p_; }

    Fp zero() const { return {p_, 0}; }
    Fp one() const { return {p_, 1}; }
    Fp element(std::uint64_t residue) const { return {p_, residue}; }
    Fp from_integer(std::int64_t n) const {
        if (n >= 0) return {p_, static_cast<std::uint64_t>(n) % p_};
        // |n| - 1 is representable even for INT64_MIN
        std::uint64_t magnitude = (static_cast<std::uint64_t>(-(n + 1)) % p_ + 1) % p_;
        return -Fp{p_, magnitude};
    }
    Fp random(Rng& rng) const {
        std::uniform_int_distribution<std::uint64_t> dist(0, p_ - 1);
        return {p_, dist(rng)};
    }
    Fp embed(const Fp& a) const {
        if (a.modulus() != p_) throw std::invalid_argument("mixed-field operands");
        return a;
    }

    std::string name() const { return std::to_string(p_); }
    bool operator==(const PrimeField&) const = default;

private:
    std::uint64_t p_;
};

} // namespace extshift

#endif
