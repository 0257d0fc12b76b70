#ifndef EXTSHIFT_RATIONAL_HPP
#define EXTSHIFT_RATIONAL_HPP

#include <extshift/field.hpp>

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace extshift {

/// Exact rational number in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long numerator) : q_(numerator) {}  // NOLINT(google-explicit-constructor)
    Rational(long numerator, long denominator) {
        if (denominator == 0) throw std::domain_error("zero denominator");
        q_ = mpq_class(numerator, denominator);
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    const mpq_class& value() const { return q_; }
    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    Rational zero_like() const { return {}; }
    Rational one_like() const { return Rational(1); }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(q_ + o.q_), raw_tag{}); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(q_ - o.q_), raw_tag{}); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(q_ * o.q_), raw_tag{}); }
    Rational operator-() const { return Rational(mpq_class(-q_), raw_tag{}); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero in Q");
        return Rational(mpq_class(q_ / o.q_), raw_tag{});
    }
    Rational inverse() const { return Rational(1) / *this; }

    bool operator==(const Rational& o) const { return q_ == o.q_; }

    std::string to_string() const { return q_.get_str(); }
    friend std::ostream& operator<<(std::ostream& os, const Rational& a) { return os << a.q_.get_str(); }

private:
    struct raw_tag {};
    // gmp arithmetic already returns canonical values
    Rational(mpq_class q, raw_tag) : q_(std::move(q)) {}

    mpq_class q_;
};

/// The rationals. Random elements are integers drawn uniformly from [-bound, bound].
class RationalField {
public:
    using value_type = Rational;

    static constexpr std::int64_t default_bound = std::int64_t{1} << 16;

    explicit RationalField(std::int64_t random_bound = default_bound) : bound_(random_bound) {
        if (random_bound < 0) throw std::invalid_argument("random bound must be non-negative");
    }

    std::uint64_t characteristic() const { return 0; }
    std::int64_t random_bound() const { return bound_; }

    Rational zero() const { return {}; }
    Rational one() const { return Rational(1); }
    Rational from_integer(std::int64_t n) const { return Rational(static_cast<long>(n)); }
    Rational random(Rng& rng) const {
        std::uniform_int_distribution<std::int64_t> dist(-bound_, bound_);
        return Rational(static_cast<long>(dist(rng)));
    }
    Rational embed(const Rational& a) const { return a; }

    std::string name() const { return "q"; }
    // the sampling bound does not change the field
    bool operator==(const RationalField&) const { return true; }

private:
    std::int64_t bound_;
};

} // namespace extshift

#endif
