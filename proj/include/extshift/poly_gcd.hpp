#ifndef EXTSHIFT_POLY_GCD_HPP
#define EXTSHIFT_POLY_GCD_HPP

#include <extshift/ext_field.hpp>
#include <extshift/multipoly.hpp>
#include <extshift/prime_field.hpp>
#include <extshift/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace extshift {

template <Field F>
MultiPoly<F> gcd(const MultiPoly<F>& p, const MultiPoly<F>& q);

namespace detail {

/// Arithmetic of a prime field GF(P) on raw residues.
struct ModArith {
    std::uint64_t p;

    std::uint64_t order() const { return p; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return add_mod(a, b, p); }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return sub_mod(a, b, p); }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mul_mod(a, b, p); }
    std::uint64_t inv(std::uint64_t a) const { return pow_mod(a, p - 2, p); }
    std::uint64_t pow(std::uint64_t a, unsigned e) const { return pow_mod(a, e, p); }
    std::uint64_t from_residue(std::uint64_t c) const { return c % p; }
};

/// Arithmetic of a small GF(p^d) in Zech-logarithm form: 0 is zero, and
/// 1 + i stands for g^i with g a primitive element.
class ZechArith {
public:
    ZechArith(std::uint64_t p, std::uint64_t min_order) : p_(p) {
        int d = 1;
        std::uint64_t q = p;
        while (q < min_order) {
            q *= p;
            ++d;
        }
        q_ = q;
        n_ = q - 1;
        half_ = p == 2 ? 0 : n_ / 2;
        build(d);
    }

    std::uint64_t order() const { return q_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        if (a == 0 || b == 0) return 0;
        return 1 + (a - 1 + b - 1) % n_;
    }
    std::uint64_t inv(std::uint64_t a) const { return 1 + (n_ - (a - 1)) % n_; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : 1 + (a - 1 + half_) % n_; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        if (a == 0) return b;
        if (b == 0) return a;
        const std::uint64_t t = (b + n_ - a) % n_;  // log(b / a)
        const std::int64_t z = zech_[t];
        if (z < 0) return 0;
        return 1 + (a - 1 + static_cast<std::uint64_t>(z)) % n_;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }
    std::uint64_t pow(std::uint64_t a, unsigned e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        return 1 + static_cast<std::uint64_t>((static_cast<unsigned __int128>(a - 1) * e) % n_);
    }
    std::uint64_t from_residue(std::uint64_t c) const {
        c %= p_;
        return c == 0 ? 0 : 1 + log_of_constant_[c];
    }

private:
    void build(int d) {
        const std::uint64_t top_weight = q_ / p_;  // p^(d-1)
        gfp_poly::Poly f(static_cast<std::size_t>(d) + 1, 0);
        f.back() = 1;
        std::vector<std::uint32_t> exp(n_);
        while (true) {
            if (gfp_poly::is_irreducible(f, p_) && walk(f, d, top_weight, exp)) break;
            std::size_t i = 0;
            while (++f[i] == p_) f[i++] = 0;
        }
        std::vector<std::uint32_t> log(q_, 0);
        for (std::uint64_t i = 0; i < n_; ++i) log[exp[i]] = static_cast<std::uint32_t>(i);
        log_of_constant_.assign(p_, 0);
        for (std::uint64_t c = 1; c < p_; ++c) log_of_constant_[c] = log[c];
        zech_.resize(n_);
        for (std::uint64_t t = 0; t < n_; ++t) {
            std::uint64_t e = exp[t];
            e = (e % p_ == p_ - 1) ? e - (p_ - 1) : e + 1;
            zech_[t] = e == 0 ? -1 : static_cast<std::int32_t>(log[e]);
        }
    }

    /// Fills exp[i] with the base-p code of x^i mod f; false unless x has order q - 1.
    bool walk(const gfp_poly::Poly& f, int d, std::uint64_t top_weight, std::vector<std::uint32_t>& exp) const {
        std::uint64_t e = 1;
        for (std::uint64_t i = 0; i < n_; ++i) {
            if (i > 0 && e == 1) return false;
            exp[i] = static_cast<std::uint32_t>(e);
            const std::uint64_t top = e / top_weight;
            std::uint64_t shifted = (e % top_weight) * p_;
            if (top != 0) {
                std::uint64_t out = 0, weight = 1, rest = shifted;
                for (int j = 0; j < d; ++j) {
                    const std::uint64_t digit = rest % p_;
                    rest /= p_;
                    out += sub_mod(digit, mul_mod(top, f[static_cast<std::size_t>(j)], p_), p_) * weight;
                    weight *= p_;
                }
                shifted = out;
            }
            e = shifted;
        }
        return e == 1;
    }

    std::uint64_t p_, q_ = 0, n_ = 0, half_ = 0;
    std::vector<std::int32_t> zech_;
    std::vector<std::uint32_t> log_of_constant_;
};

template <class A>
void trim_univariate(std::vector<std::uint64_t>& a, const A&) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

/// Degree of gcd(a, b) for univariate polynomials (coefficients low to high).
template <class A>
int univariate_gcd_degree(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b, const A& ar) {
    trim_univariate(a, ar);
    trim_univariate(b, ar);
    while (!b.empty()) {
        const std::uint64_t lead_inv = ar.inv(b.back());
        while (a.size() >= b.size()) {
            const std::uint64_t c = ar.mul(a.back(), lead_inv);
            const std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = ar.sub(a[shift + j], ar.mul(c, b[j]));
            trim_univariate(a, ar);
        }
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

/// Coefficient of a polynomial over F as a residue mod P; empty if it has no image.
inline std::optional<std::uint64_t> residue(const Rational& c, std::uint64_t modulus) {
    const mpz_class p(static_cast<unsigned long>(modulus));
    mpz_class num = c.numerator() % p;
    if (num < 0) num += p;
    if (c.denominator() == 1) return num.get_ui();
    mpz_class den = c.denominator() % p;
    if (den == 0) return std::nullopt;
    return mul_mod(num.get_ui(), pow_mod(den.get_ui(), modulus - 2, modulus), modulus);
}
inline std::optional<std::uint64_t> residue(const Fp& c, std::uint64_t) { return c.value(); }

/// p with every variable except `var` replaced by the given point.
template <Field F, class A>
std::optional<std::vector<std::uint64_t>> univariate_image(const MultiPoly<F>& p, std::size_t var,
                                                           const std::vector<std::vector<std::uint64_t>>& powers,
                                                           std::uint64_t modulus, const A& ar) {
    std::vector<std::uint64_t> out(static_cast<std::size_t>(p.degree_in(var)) + 1, 0);
    for (std::size_t t = 0; t < p.length(); ++t) {
        auto c = residue(p.coefficient(t), modulus);
        if (!c) return std::nullopt;
        std::uint64_t term = ar.from_residue(*c);
        const auto exps = p.exponents(t);
        for (std::size_t v = 0; v < exps.size() && term != 0; ++v) {
            if (v != var && exps[v] != 0) term = ar.mul(term, powers[v][exps[v]]);
        }
        out[exps[var]] = ar.add(out[exps[var]], term);
    }
    return out;
}

template <Field F, class A>
std::optional<int> image_gcd_degree_with(const MultiPoly<F>& p, const MultiPoly<F>& q, std::size_t var,
                                         std::uint64_t modulus, const A& ar) {
    thread_local Rng rng(0x9e3779b97f4a7c15ULL);
    const int dp = p.degree_in(var), dq = q.degree_in(var);
    const std::size_t nvars = p.variable_count();
    std::uniform_int_distribution<std::uint64_t> pick(0, ar.order() - 1);
    for (int attempt = 0; attempt < 3; ++attempt) {
        std::vector<std::vector<std::uint64_t>> powers(nvars);
        for (std::size_t v = 0; v < nvars; ++v) {
            if (v == var) continue;
            const int top = std::max(p.degree_in(v), q.degree_in(v));
            const std::uint64_t x = pick(rng);
            powers[v].resize(static_cast<std::size_t>(top) + 1);
            for (int e = 0; e <= top; ++e) powers[v][static_cast<std::size_t>(e)] = ar.pow(x, static_cast<unsigned>(e));
        }
        auto a = univariate_image(p, var, powers, modulus, ar);
        auto b = univariate_image(q, var, powers, modulus, ar);
        if (!a || !b) return std::nullopt;
        trim_univariate(*a, ar);
        trim_univariate(*b, ar);
        if (static_cast<int>(a->size()) - 1 != dp || static_cast<int>(b->size()) - 1 != dq) continue;
        return univariate_gcd_degree(std::move(*a), std::move(*b), ar);
    }
    return std::nullopt;
}

inline constexpr std::uint64_t image_min_order = std::uint64_t{1} << 18;

/// The image field of characteristic p, built once per thread.
inline const ZechArith& zech_arith(std::uint64_t p) {
    thread_local std::map<std::uint64_t, ZechArith> tables;
    auto it = tables.find(p);
    if (it == tables.end()) it = tables.emplace(p, ZechArith(p, image_min_order)).first;
    return it->second;
}

/// Degree in `var` of gcd(p, q) at a random image point: an upper bound for
/// the true degree, and a certified zero when it is zero. Empty when no image
/// kept the degrees of both inputs (or the field has no image domain).
template <Field F>
std::optional<int> image_gcd_degree(const MultiPoly<F>& p, const MultiPoly<F>& q, std::size_t var) {
    if constexpr (std::is_same_v<F, RationalField>) {
        constexpr std::uint64_t modulus = 2305843009213693951ULL;  // 2^61 - 1
        return image_gcd_degree_with(p, q, var, modulus, ModArith{modulus});
    } else if constexpr (std::is_same_v<F, PrimeField>) {
        const std::uint64_t ch = p.field().characteristic();
        if (ch >= image_min_order) return image_gcd_degree_with(p, q, var, ch, ModArith{ch});
        return image_gcd_degree_with(p, q, var, ch, zech_arith(ch));
    } else {
        return std::nullopt;
    }
}

/// gcd of a list of polynomials, smallest first, stopping at a constant.
template <Field F>
MultiPoly<F> gcd_of_all(std::vector<MultiPoly<F>> polys, const MultiPoly<F>& like) {
    std::erase_if(polys, [](const MultiPoly<F>& c) { return c.is_zero(); });
    std::sort(polys.begin(), polys.end(), [](const MultiPoly<F>& a, const MultiPoly<F>& b) {
        return a.length() != b.length() ? a.length() < b.length() : a.total_degree() < b.total_degree();
    });
    MultiPoly<F> g = like.zero_like();
    for (const auto& c : polys) {
        g = gcd(g, c);
        if (g.is_constant()) break;
    }
    return g;
}

/// gcd of the coefficients of p viewed as a polynomial in `var`.
template <Field F>
MultiPoly<F> content_in(const MultiPoly<F>& p, std::size_t var) {
    return gcd_of_all(p.coefficients_in(var), p);
}

/// Pseudo-remainder of a by b with respect to var: the remainder of
/// lc(b)^(deg a - deg b + 1) * a on division by b.
template <Field F>
MultiPoly<F> pseudo_remainder(MultiPoly<F> a, const MultiPoly<F>& b, std::size_t var) {
    const int db = b.degree_in(var);
    const auto b_coeffs = b.coefficients_in(var);
    const MultiPoly<F>& lead_b = b_coeffs.back();
    std::vector<Exponent> shift(b.variable_count(), 0);
    int missing = a.degree_in(var) - db + 1;
    while (!a.is_zero()) {
        const int da = a.degree_in(var);
        if (da < db) break;
        auto a_coeffs = a.coefficients_in(var);
        shift[var] = static_cast<Exponent>(da - db);
        a = lead_b * a - (a_coeffs.back() * b).shifted(shift);
        --missing;
    }
    for (; missing > 0 && !a.is_zero(); --missing) a = lead_b * a;
    return a;
}

template <Field F>
MultiPoly<F> leading_coefficient_in(const MultiPoly<F>& p, std::size_t var) {
    return p.coefficients_in(var).back();
}

template <Field F>
MultiPoly<F> power_of(const MultiPoly<F>& p, int e) {
    MultiPoly<F> r = p.one_like();
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
}

/// gcd of polynomials that are not divisible by any single variable.
///
/// Variables the gcd provably avoids are eliminated by passing to the
/// coefficients in that variable; otherwise a subresultant PRS runs in the
/// shared variable of least degree.
template <Field F>
MultiPoly<F> gcd_without_monomial_content(const MultiPoly<F>& p, const MultiPoly<F>& q) {
    if (p.is_constant() || q.is_constant()) return p.one_like();
    const std::size_t nvars = p.variable_count();
    std::vector<std::size_t> shared;
    for (std::size_t v = 0; v < nvars; ++v) {
        if (p.degree_in(v) > 0 && q.degree_in(v) > 0) shared.push_back(v);
    }
    if (shared.empty()) return p.one_like();

    std::optional<std::size_t> avoided;  // a variable of degree 0 in the gcd
    std::size_t pieces = 0;
    std::size_t main_var = shared.front();
    int main_deg = -1;
    std::optional<int> main_image;  // degree of the gcd in main_var, if an image bounds it
    bool all_avoided = true;
    for (auto v : shared) {
        const int dp = p.degree_in(v), dq = q.degree_in(v);
        auto d = image_gcd_degree(p, q, v);
        if (d && *d == 0) {
            if (!avoided || static_cast<std::size_t>(dp + dq) > pieces) {
                avoided = v;
                pieces = static_cast<std::size_t>(dp + dq);
            }
            continue;
        }
        all_avoided = false;
        const int m = std::min(dp, dq);
        if (main_deg < 0 || m < main_deg) {
            main_deg = m;
            main_var = v;
            main_image = d;
        }
    }
    if (all_avoided) return p.one_like();
    if (avoided) {
        auto coeffs = p.coefficients_in(*avoided);
        auto more = q.coefficients_in(*avoided);
        coeffs.insert(coeffs.end(), more.begin(), more.end());
        return gcd_of_all(std::move(coeffs), p).monic();
    }

    const std::size_t x = main_var;
    MultiPoly<F> cp = content_in(p, x);
    MultiPoly<F> cq = content_in(q, x);
    MultiPoly<F> c = gcd(cp, cq);
    MultiPoly<F> a = exact_divide(p, cp);
    MultiPoly<F> b = exact_divide(q, cq);
    if (a.degree_in(x) < b.degree_in(x)) std::swap(a, b);
    const MultiPoly<F> a0 = a, b0 = b;
    // Once the sequence reaches the degree seen in the images, the primitive
    // part of the current remainder is the gcd if it divides both inputs.
    auto certified = [&](const MultiPoly<F>& cand) -> std::optional<MultiPoly<F>> {
        if (!main_image || cand.degree_in(x) != *main_image) return std::nullopt;
        MultiPoly<F> pp = exact_divide(cand, content_in(cand, x));
        if (try_divide(b0, pp) && try_divide(a0, pp)) return (c * pp).monic();
        return std::nullopt;
    };
    if (auto done = certified(b)) return *done;
    // subresultant PRS: coefficient growth is removed by exact divisions
    // instead of content computations at every step
    MultiPoly<F> g = p.one_like(), h = p.one_like();
    while (true) {
        const int delta = a.degree_in(x) - b.degree_in(x);
        MultiPoly<F> r = pseudo_remainder(a, b, x);
        if (r.is_zero()) break;
        if (r.degree_in(x) == 0) return c.monic();
        a = std::move(b);
        b = exact_divide(r, g * power_of(h, delta));
        g = leading_coefficient_in(a, x);
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            h = exact_divide(power_of(g, delta), power_of(h, delta - 1));
        }
        if (auto done = certified(b)) return *done;
    }
    return (c * exact_divide(b, content_in(b, x))).monic();
}

} // namespace detail

/// Greatest common divisor, normalized so that the leading coefficient (in
/// the canonical deglex order) is 1. gcd(p, 0) is p normalized.
///
/// Recursive on variables: strip monomial contents, then either drop to the
/// coefficients in a variable the gcd avoids or run a subresultant PRS.
template <Field F>
MultiPoly<F> gcd(const MultiPoly<F>& p, const MultiPoly<F>& q) {
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();
    if (p.is_constant() || q.is_constant()) return p.one_like();
    if (p.length() == q.length()) {
        MultiPoly<F> pm = p.monic();
        if (pm == q.monic()) return pm;
    }
    auto mp = p.monomial_content();
    auto mq = q.monomial_content();
    std::vector<Exponent> common(mp.size());
    for (std::size_t v = 0; v < mp.size(); ++v) common[v] = std::min(mp[v], mq[v]);
    MultiPoly<F> g = detail::gcd_without_monomial_content(p.divided_by_monomial(mp), q.divided_by_monomial(mq));
    return g.shifted(common);
}

/// gcd of a family of polynomials (zero for an empty or all-zero family).
template <Field F>
MultiPoly<F> gcd(std::span<const MultiPoly<F>> polys, const MultiPoly<F>& like) {
    MultiPoly<F> g = like.zero_like();
    for (const auto& p : polys) {
        if (p.is_zero()) continue;
        g = gcd(g, p);
        if (g.is_one()) break;
    }
    return g;
}

} // namespace extshift

#endif
