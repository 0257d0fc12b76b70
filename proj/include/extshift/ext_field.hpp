#ifndef EXTSHIFT_EXT_FIELD_HPP
#define EXTSHIFT_EXT_FIELD_HPP

#include <extshift/field.hpp>
#include <extshift/prime_field.hpp>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace extshift {

/// Dense univariate polynomials over GF(p), coefficients stored low to high
/// and kept trimmed (no trailing zeros; the zero polynomial is empty).
namespace gfp_poly {

using Poly = std::vector<std::uint64_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = detail::add_mod(x, y, p);
    }
    trim(r);
    return r;
}

inline Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint64_t x = i < a.size() ? a[i] : 0;
        std::uint64_t y = i < b.size() ? b[i] : 0;
        r[i] = detail::sub_mod(x, y, p);
    }
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = detail::add_mod(r[i + j], detail::mul_mod(a[i], b[j], p), p);
        }
    }
    trim(r);
    return r;
}

/// Returns (quotient, remainder). Throws on division by the zero polynomial.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b, std::uint64_t p) {
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    trim(a);
    if (a.size() < b.size()) return {{}, a};
    const std::uint64_t lead_inv = detail::pow_mod(b.back(), p - 2, p);
    Poly q(a.size() - b.size() + 1, 0);
    const int db = degree(b);
    for (int i = degree(a); i >= db; --i) {
        const auto top = static_cast<std::size_t>(i);
        std::uint64_t c = detail::mul_mod(a[top], lead_inv, p);
        const auto shift = static_cast<std::size_t>(i - db);
        q[shift] = c;
        if (c != 0) {
            for (std::size_t j = 0; j < b.size(); ++j) {
                a[shift + j] = detail::sub_mod(a[shift + j], detail::mul_mod(c, b[j], p), p);
            }
        }
    }
    trim(q);
    trim(a);
    return {q, a};
}

inline Poly mod(const Poly& a, const Poly& m, std::uint64_t p) { return divmod(a, m, p).second; }

inline Poly make_monic(Poly a, std::uint64_t p) {
    if (a.empty()) return a;
    std::uint64_t inv = detail::pow_mod(a.back(), p - 2, p);
    for (auto& c : a) c = detail::mul_mod(c, inv, p);
    return a;
}

inline Poly gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a), p);
}

/// Inverse of a modulo m, assuming gcd(a, m) = 1.
inline Poly inverse_mod(const Poly& a, const Poly& m, std::uint64_t p) {
    Poly r0 = m, r1 = mod(a, m, p);
    Poly s0{}, s1{1};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1, p);
        Poly s = sub(s0, mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.size() != 1) throw std::domain_error("element is not invertible");
    std::uint64_t inv = detail::pow_mod(r0[0], p - 2, p);
    Poly result = mul(s0, Poly{inv}, p);
    return mod(result, m, p);
}

inline Poly pow_mod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
    Poly result = mod(Poly{1}, m, p);
    base = mod(base, m, p);
    while (e != 0) {
        if (e & 1U) result = mod(mul(result, base, p), m, p);
        e >>= 1U;
        if (e != 0) base = mod(mul(base, base, p), m, p);
    }
    return result;
}

/// Rabin's irreducibility test for a monic f of degree d over GF(p):
/// x^(p^d) = x mod f, and gcd(x^(p^(d/q)) - x, f) = 1 for every prime q | d.
inline bool is_irreducible(const Poly& f, std::uint64_t p) {
    const int d = degree(f);
    if (d < 1) return false;
    if (d == 1) return true;
    const Poly x{0, 1};
    std::vector<Poly> frob;  // frob[i] = x^(p^i) mod f
    frob.push_back(mod(x, f, p));
    for (int i = 1; i <= d; ++i) frob.push_back(pow_mod(frob.back(), p, f, p));
    if (sub(frob[static_cast<std::size_t>(d)], mod(x, f, p), p) != Poly{}) return false;
    int rest = d;
    for (int q = 2; q <= rest; ++q) {
        if (rest % q != 0) continue;
        while (rest % q == 0) rest /= q;
        Poly h = sub(frob[static_cast<std::size_t>(d / q)], x, p);
        if (gcd(h, f, p).size() != 1) return false;
    }
    return true;
}

/// Smallest monic irreducible of degree d, scanning (c_{d-1}, ..., c_0)
/// in ascending lexicographic order.
inline Poly find_irreducible(std::uint64_t p, int d) {
    if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
    if (d < 1) throw std::invalid_argument("extension degree must be positive");
    Poly f(static_cast<std::size_t>(d) + 1, 0);
    f.back() = 1;
    while (true) {
        if (is_irreducible(f, p)) return f;
        std::size_t i = 0;  // increment the counter, c_0 least significant
        while (i < static_cast<std::size_t>(d)) {
            if (++f[i] < p) break;
            f[i] = 0;
            ++i;
        }
        if (i == static_cast<std::size_t>(d)) {
            throw std::logic_error("no irreducible polynomial found");  // unreachable
        }
    }
}

inline std::string to_string(const Poly& a, const std::string& var = "t") {
    if (a.empty()) return "0";
    std::string out;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0 || a[i] != 1) out += std::to_string(a[i]);
        if (i >= 1) {
            if (a[i] != 1) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace gfp_poly

/// Shared description of GF(p^d) = GF(p)[t]/(f).
struct ExtFieldContext {
    std::uint64_t p;
    int degree;
    gfp_poly::Poly modulus;  // monic, irreducible, size degree + 1

    bool operator==(const ExtFieldContext&) const = default;
};

/// Element of GF(p^d), stored as a reduced polynomial in t.
class Fq {
public:
    Fq() = default;
    Fq(std::shared_ptr<const ExtFieldContext> ctx, gfp_poly::Poly value)
        : ctx_(std::move(ctx)), c_(gfp_poly::mod(value, ctx_->modulus, ctx_->p)) {}

    const gfp_poly::Poly& coefficients() const { return c_; }
    const std::shared_ptr<const ExtFieldContext>& context() const { return ctx_; }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    Fq zero_like() const { return raw(ctx_, {}); }
    Fq one_like() const { return raw(ctx_, {1}); }

    Fq operator+(const Fq& o) const { check(o); return raw(ctx_, gfp_poly::add(c_, o.c_, ctx_->p)); }
    Fq operator-(const Fq& o) const { check(o); return raw(ctx_, gfp_poly::sub(c_, o.c_, ctx_->p)); }
    Fq operator-() const { return raw(ctx_, gfp_poly::sub({}, c_, ctx_->p)); }
    Fq operator*(const Fq& o) const {
        check(o);
        return raw(ctx_, gfp_poly::mod(gfp_poly::mul(c_, o.c_, ctx_->p), ctx_->modulus, ctx_->p));
    }
    Fq operator/(const Fq& o) const { check(o); return *this * o.inverse(); }

    Fq inverse() const {
        if (is_zero()) throw std::domain_error("division by zero in extension field");
        return raw(ctx_, gfp_poly::inverse_mod(c_, ctx_->modulus, ctx_->p));
    }

    bool operator==(const Fq& o) const { return same_field(o) && c_ == o.c_; }

    std::string to_string() const { return gfp_poly::to_string(c_); }
    friend std::ostream& operator<<(std::ostream& os, const Fq& a) { return os << a.to_string(); }

private:
    static Fq raw(const std::shared_ptr<const ExtFieldContext>& ctx, gfp_poly::Poly c) {
        Fq r;
        r.ctx_ = ctx;
        r.c_ = std::move(c);
        return r;
    }
    bool same_field(const Fq& o) const {
        return ctx_ == o.ctx_ || (ctx_ && o.ctx_ && *ctx_ == *o.ctx_);
    }
    void check(const Fq& o) const {
        if (!same_field(o)) throw std::invalid_argument("mixed-field operands");
    }

    std::shared_ptr<const ExtFieldContext> ctx_;
    gfp_poly::Poly c_;
};

/// GF(p^d) built on the smallest monic irreducible of degree d.
class ExtField {
public:
    using value_type = Fq;

    ExtField(std::uint64_t p, int d)
        : ctx_(std::make_shared<const ExtFieldContext>(
              ExtFieldContext{p, d, gfp_poly::find_irreducible(p, d)})) {}

    ExtField(std::uint64_t p, gfp_poly::Poly modulus) {
        if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
        gfp_poly::trim(modulus);
        if (modulus.empty() || modulus.back() != 1 || !gfp_poly::is_irreducible(modulus, p)) {
            throw std::invalid_argument("modulus must be monic irreducible");
        }
        int d = gfp_poly::degree(modulus);
        ctx_ = std::make_shared<const ExtFieldContext>(ExtFieldContext{p, d, std::move(modulus)});
    }

    std::uint64_t characteristic() const { return ctx_->p; }
    int degree() const { return ctx_->degree; }
    const gfp_poly::Poly& modulus() const { return ctx_->modulus; }
    PrimeField prime_subfield() const { return PrimeField(ctx_->p); }

    Fq zero() const { return {ctx_, {}}; }
    Fq one() const { return {ctx_, {1}}; }
    Fq generator() const { return {ctx_, {0, 1}}; }
    Fq element(gfp_poly::Poly coefficients) const {
        for (auto& c : coefficients) c %= ctx_->p;
        gfp_poly::trim(coefficients);
        return {ctx_, std::move(coefficients)};
    }
    Fq from_integer(std::int64_t n) const {
        return embed(PrimeField(ctx_->p).from_integer(n));
    }
    Fq embed(const Fp& a) const {
        if (a.modulus() != ctx_->p) throw std::invalid_argument("mixed-field operands");
        return {ctx_, a.is_zero() ? gfp_poly::Poly{} : gfp_poly::Poly{a.value()}};
    }
    Fq random(Rng& rng) const {
        std::uniform_int_distribution<std::uint64_t> dist(0, ctx_->p - 1);
        gfp_poly::Poly c(static_cast<std::size_t>(ctx_->degree));
        for (auto& x : c) x = dist(rng);
        gfp_poly::trim(c);
        return {ctx_, std::move(c)};
    }

    std::string name() const {
        return std::to_string(ctx_->p) + "^" + std::to_string(ctx_->degree);
    }

    bool operator==(const ExtField& o) const { return ctx_ == o.ctx_ || *ctx_ == *o.ctx_; }

private:
    std::shared_ptr<const ExtFieldContext> ctx_;
};

} // namespace extshift

#endif
