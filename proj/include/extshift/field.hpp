#ifndef EXTSHIFT_FIELD_HPP
#define EXTSHIFT_FIELD_HPP

#include <concepts>
#include <cstdint>
#include <random>
#include <string>

namespace extshift {

using Rng = std::mt19937_64;

/// Element of an exact field. Elements carry enough of their field to
/// produce zero/one of the same field and to reject mixed-field operands.
template <class E>
concept FieldElement = std::copyable<E> && requires(const E& a, const E& b) {
    { a + b } -> std::same_as<E>;
    { a - b } -> std::same_as<E>;
    { a * b } -> std::same_as<E>;
    { a / b } -> std::same_as<E>;
    { -a } -> std::same_as<E>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.is_one() } -> std::convertible_to<bool>;
    { a.inverse() } -> std::same_as<E>;
    { a.zero_like() } -> std::same_as<E>;
    { a.one_like() } -> std::same_as<E>;
};

/// Field descriptor: a cheap value describing the field and creating elements.
template <class F>
concept Field = std::copyable<F> && std::equality_comparable<F> &&
    FieldElement<typename F::value_type> &&
    requires(const F& f, std::int64_t n, Rng& rng) {
        { f.zero() } -> std::same_as<typename F::value_type>;
        { f.one() } -> std::same_as<typename F::value_type>;
        { f.from_integer(n) } -> std::same_as<typename F::value_type>;
        { f.random(rng) } -> std::same_as<typename F::value_type>;
        { f.characteristic() } -> std::convertible_to<std::uint64_t>;
        { f.name() } -> std::convertible_to<std::string>;
    };

template <FieldElement E>
E power(E base, std::uint64_t exponent) {
    E result = base.one_like();
    while (exponent != 0) {
        if (exponent & 1U) result = result * base;
        exponent >>= 1U;
        if (exponent != 0) base = base * base;
    }
    return result;
}

} // namespace extshift

#endif
