#ifndef EXTSHIFT_MULTIPOLY_HPP
#define EXTSHIFT_MULTIPOLY_HPP

#include <extshift/field.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace extshift {

using Exponent = std::uint16_t;
using IndexPair = std::pair<int, int>;

/// Ordered set of indeterminates x_{i,j}. The order is row-major ascending
/// in (i, j) and fixed at construction; it is also the variable order of the
/// degree-lexicographic term order.
///
/// Inversion-derived sets have i < j. The n^2-variable generic matrix also
/// uses pairs with i >= j, so only distinctness and positivity are enforced.
class VariableSet {
public:
    explicit VariableSet(std::vector<IndexPair> pairs) : pairs_(std::move(pairs)) {
        std::sort(pairs_.begin(), pairs_.end());
        if (std::adjacent_find(pairs_.begin(), pairs_.end()) != pairs_.end()) {
            throw std::invalid_argument("duplicate variable in variable set");
        }
        for (const auto& [i, j] : pairs_) {
            if (i < 1 || j < 1) throw std::invalid_argument("variable indices must be positive");
        }
    }

    static std::shared_ptr<const VariableSet> make(std::vector<IndexPair> pairs) {
        return std::make_shared<const VariableSet>(std::move(pairs));
    }

    std::size_t size() const { return pairs_.size(); }
    const IndexPair& operator[](std::size_t i) const { return pairs_[i]; }
    const std::vector<IndexPair>& pairs() const { return pairs_; }

    std::optional<std::size_t> index_of(const IndexPair& pair) const {
        auto it = std::lower_bound(pairs_.begin(), pairs_.end(), pair);
        if (it == pairs_.end() || *it != pair) return std::nullopt;
        return static_cast<std::size_t>(it - pairs_.begin());
    }

    std::string name(std::size_t i) const {
        return "x_{" + std::to_string(pairs_[i].first) + "," + std::to_string(pairs_[i].second) + "}";
    }

    bool operator==(const VariableSet&) const = default;

private:
    std::vector<IndexPair> pairs_;
};

using VariablesPtr = std::shared_ptr<const VariableSet>;

/// Sparse multivariate polynomial over an exact field.
///
/// Terms are kept sorted by descending degree-lexicographic order with no
/// zero coefficients, so the representation of each polynomial is unique.
/// Every monomial is stored as a row [total degree, e_1, ..., e_m] in one
/// flat buffer; comparing rows lexicographically is then exactly deglex.
template <Field F>
class MultiPoly {
public:
    using field_type = F;
    using coefficient_type = typename F::value_type;

    MultiPoly(F field, VariablesPtr vars)
        : field_(std::move(field)), vars_(std::move(vars)), width_(vars_->size() + 1) {}

    static MultiPoly constant(F field, VariablesPtr vars, const coefficient_type& c) {
        MultiPoly r(std::move(field), std::move(vars));
        if (!c.is_zero()) {
            r.mono_.assign(r.width_, 0);
            r.coef_.push_back(c);
        }
        return r;
    }

    static MultiPoly variable(F field, VariablesPtr vars, std::size_t index) {
        if (index >= vars->size()) throw std::out_of_range("variable index out of range");
        MultiPoly r(field, std::move(vars));
        r.mono_.assign(r.width_, 0);
        r.mono_[0] = 1;
        r.mono_[index + 1] = 1;
        r.coef_.push_back(field.one());
        return r;
    }

    static MultiPoly variable(F field, VariablesPtr vars, const IndexPair& pair) {
        auto idx = vars->index_of(pair);
        if (!idx) throw std::invalid_argument("unknown variable x_{" + std::to_string(pair.first) + "," + std::to_string(pair.second) + "}");
        return variable(std::move(field), std::move(vars), *idx);
    }

    /// Builds a polynomial from arbitrary (exponents, coefficient) pairs,
    /// combining like terms and dropping zeros.
    static MultiPoly from_terms(F field, VariablesPtr vars,
                                const std::vector<std::pair<std::vector<Exponent>, coefficient_type>>& terms) {
        MultiPoly r(std::move(field), std::move(vars));
        std::vector<Exponent> rows;
        std::vector<coefficient_type> coefs;
        for (const auto& [exps, c] : terms) {
            if (exps.size() != r.width_ - 1) throw std::invalid_argument("exponent vector has wrong length");
            unsigned deg = 0;
            for (auto e : exps) deg += e;
            if (deg > 0xFFFFU) throw std::overflow_error("monomial degree overflow");
            rows.push_back(static_cast<Exponent>(deg));
            rows.insert(rows.end(), exps.begin(), exps.end());
            coefs.push_back(c);
        }
        r.assign_unsorted(rows, coefs);
        return r;
    }

    const F& field() const { return field_; }
    const VariablesPtr& variables() const { return vars_; }
    std::size_t variable_count() const { return width_ - 1; }

    std::size_t length() const { return coef_.size(); }
    /// Maximal total degree; -1 for the zero polynomial.
    int total_degree() const { return coef_.empty() ? -1 : mono_[0]; }
    bool is_zero() const { return coef_.empty(); }
    bool is_constant() const { return coef_.empty() || (coef_.size() == 1 && mono_[0] == 0); }
    bool is_monomial() const { return coef_.size() == 1; }
    bool is_one() const { return coef_.size() == 1 && mono_[0] == 0 && coef_[0].is_one(); }

    std::span<const Exponent> exponents(std::size_t term) const {
        return {mono_.data() + term * width_ + 1, width_ - 1};
    }
    int term_degree(std::size_t term) const { return mono_[term * width_]; }
    const coefficient_type& coefficient(std::size_t term) const { return coef_[term]; }
    const coefficient_type& leading_coefficient() const { return coef_.at(0); }

    MultiPoly zero_like() const { return MultiPoly(field_, vars_); }
    MultiPoly one_like() const { return constant(field_, vars_, field_.one()); }

    bool same_ring(const MultiPoly& o) const {
        return (vars_ == o.vars_ || *vars_ == *o.vars_) && field_ == o.field_;
    }

    MultiPoly operator+(const MultiPoly& o) const { return combine(o, false); }
    MultiPoly operator-(const MultiPoly& o) const { return combine(o, true); }
    MultiPoly& operator+=(const MultiPoly& o) { return *this = combine(o, false); }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = combine(o, true); }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& c : r.coef_) c = -c;
        return r;
    }

    MultiPoly operator*(const MultiPoly& o) const {
        check_ring(o);
        if (is_zero() || o.is_zero()) return zero_like();
        if (o.coef_.size() == 1) return mul_term(o.mono_.data(), o.coef_[0]);
        if (coef_.size() == 1) return o.mul_term(mono_.data(), coef_[0]);
        const MultiPoly& a = coef_.size() <= o.coef_.size() ? *this : o;
        const MultiPoly& b = coef_.size() <= o.coef_.size() ? o : *this;
        std::vector<Exponent> rows(a.coef_.size() * b.coef_.size() * width_);
        std::vector<coefficient_type> coefs;
        coefs.reserve(a.coef_.size() * b.coef_.size());
        Exponent* out = rows.data();
        for (std::size_t i = 0; i < a.coef_.size(); ++i) {
            const Exponent* ra = a.row(i);
            for (std::size_t j = 0; j < b.coef_.size(); ++j) {
                add_rows(ra, b.row(j), out);
                out += width_;
                coefs.push_back(a.coef_[i] * b.coef_[j]);
            }
        }
        MultiPoly r(field_, vars_);
        r.assign_unsorted(rows, coefs);
        return r;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    MultiPoly scaled(const coefficient_type& c) const {
        if (c.is_zero()) return zero_like();
        MultiPoly r = *this;
        for (auto& x : r.coef_) x = x * c;
        return r;
    }

    /// Multiplies by the monomial with the given exponents.
    MultiPoly shifted(std::span<const Exponent> exps) const {
        std::vector<Exponent> row(width_);
        unsigned deg = 0;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            row[i + 1] = exps[i];
            deg += exps[i];
        }
        row[0] = static_cast<Exponent>(deg);
        return mul_term(row.data(), field_.one());
    }

    bool operator==(const MultiPoly& o) const {
        return same_ring(o) && mono_ == o.mono_ && coef_ == o.coef_;
    }

    /// Largest exponent of the given variable; 0 if absent.
    int degree_in(std::size_t var) const {
        int d = 0;
        for (std::size_t t = 0; t < coef_.size(); ++t) d = std::max<int>(d, row(t)[var + 1]);
        return d;
    }

    /// Componentwise minimum of all exponent vectors (the monomial content).
    std::vector<Exponent> monomial_content() const {
        if (coef_.empty()) return std::vector<Exponent>(width_ - 1, 0);
        std::vector<Exponent> m(row(0) + 1, row(0) + width_);
        for (std::size_t t = 1; t < coef_.size(); ++t) {
            const Exponent* r = row(t);
            for (std::size_t v = 0; v + 1 < width_; ++v) m[v] = std::min(m[v], r[v + 1]);
        }
        return m;
    }

    /// Divides by a monomial that divides every term.
    MultiPoly divided_by_monomial(std::span<const Exponent> exps) const {
        MultiPoly r = *this;
        unsigned deg = 0;
        for (auto e : exps) deg += e;
        for (std::size_t t = 0; t < coef_.size(); ++t) {
            Exponent* rr = r.mono_.data() + t * width_;
            if (rr[0] < deg) throw std::logic_error("monomial does not divide polynomial");
            rr[0] = static_cast<Exponent>(rr[0] - deg);
            for (std::size_t v = 0; v < exps.size(); ++v) {
                if (rr[v + 1] < exps[v]) throw std::logic_error("monomial does not divide polynomial");
                rr[v + 1] = static_cast<Exponent>(rr[v + 1] - exps[v]);
            }
        }
        return r;  // uniform shift keeps the order
    }

    /// Coefficients with respect to one variable: result[d] is the
    /// coefficient of var^d, itself free of var.
    std::vector<MultiPoly> coefficients_in(std::size_t var) const {
        std::vector<MultiPoly> out(static_cast<std::size_t>(degree_in(var)) + 1, zero_like());
        for (std::size_t t = 0; t < coef_.size(); ++t) {
            const Exponent* r = row(t);
            const Exponent d = r[var + 1];
            MultiPoly& c = out[d];
            std::size_t base = c.mono_.size();
            c.mono_.insert(c.mono_.end(), r, r + width_);
            c.mono_[base] = static_cast<Exponent>(c.mono_[base] - d);
            c.mono_[base + var + 1] = 0;
            c.coef_.push_back(coef_[t]);
        }
        // removing a common power of var preserves deglex order within each group
        return out;
    }

    /// The inverse of coefficients_in: sum of coefficients[d] * var^d.
    static MultiPoly from_coefficients(const std::vector<MultiPoly>& coefficients, std::size_t var,
                                       const MultiPoly& like) {
        MultiPoly r = like.zero_like();
        std::vector<Exponent> exps(like.width_ - 1, 0);
        for (std::size_t d = 0; d < coefficients.size(); ++d) {
            if (coefficients[d].is_zero()) continue;
            exps[var] = static_cast<Exponent>(d);
            r += coefficients[d].shifted(exps);
        }
        return r;
    }

    /// Multiplies by the inverse of the leading coefficient.
    MultiPoly monic() const {
        if (is_zero()) return *this;
        return scaled(coef_[0].inverse());
    }

    std::string to_string() const {
        if (coef_.empty()) return "0";
        std::string out;
        for (std::size_t t = 0; t < coef_.size(); ++t) {
            std::string mono;
            const Exponent* r = row(t);
            for (std::size_t v = 0; v + 1 < width_; ++v) {
                if (r[v + 1] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_->name(v);
                if (r[v + 1] > 1) mono += "^" + std::to_string(r[v + 1]);
            }
            std::string c = coef_[t].to_string();
            bool negative = !c.empty() && c[0] == '-';
            if (negative) c.erase(0, 1);
            if (c.find_first_of("+-") != std::string::npos) c = "(" + c + ")";
            std::string term;
            if (mono.empty()) term = c;
            else if (c == "1") term = mono;
            else term = c + "*" + mono;
            if (t == 0) out = (negative ? "-" : "") + term;
            else out += (negative ? " - " : " + ") + term;
        }
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

    /// Exact quotient p / q. Division that leaves a remainder is a logic
    /// error in the caller.
    friend MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& q) {
        auto r = try_divide(p, q);
        if (!r) throw std::logic_error("inexact polynomial division");
        return std::move(*r);
    }

    /// p / q when q divides p, nullopt otherwise.
    friend std::optional<MultiPoly> try_divide(const MultiPoly& p, const MultiPoly& q) {
        p.check_ring(q);
        if (q.is_zero()) throw std::domain_error("polynomial division by zero");
        if (q.coef_.size() == 1) {
            for (std::size_t t = 0; t < p.coef_.size(); ++t) {
                for (std::size_t v = 0; v < p.width_; ++v) {
                    if (p.row(t)[v] < q.row(0)[v]) return std::nullopt;
                }
            }
            MultiPoly r = p.divided_by_monomial(q.exponents(0));
            coefficient_type inv = q.coef_[0].inverse();
            for (auto& c : r.coef_) c = c * inv;
            return r;
        }
        MultiPoly quotient = p.zero_like();
        MultiPoly rem = p;
        const coefficient_type lead_inv = q.coef_[0].inverse();
        std::vector<Exponent> row(p.width_);
        while (!rem.is_zero()) {
            const Exponent* lr = rem.row(0);
            const Exponent* lq = q.row(0);
            for (std::size_t v = 0; v < p.width_; ++v) {
                if (lr[v] < lq[v]) return std::nullopt;
                row[v] = static_cast<Exponent>(lr[v] - lq[v]);
            }
            coefficient_type c = rem.coef_[0] * lead_inv;
            quotient.mono_.insert(quotient.mono_.end(), row.begin(), row.end());
            quotient.coef_.push_back(c);
            rem -= q.mul_term(row.data(), c);
        }
        return quotient;
    }

private:
    const Exponent* row(std::size_t t) const { return mono_.data() + t * width_; }

    int compare_rows(const Exponent* a, const Exponent* b) const {
        for (std::size_t i = 0; i < width_; ++i) {
            if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // descending order
        }
        return 0;
    }

    void add_rows(const Exponent* a, const Exponent* b, Exponent* out) const {
        if (static_cast<unsigned>(a[0]) + b[0] > 0xFFFFU) throw std::overflow_error("monomial degree overflow");
        for (std::size_t i = 0; i < width_; ++i) out[i] = static_cast<Exponent>(a[i] + b[i]);
    }

    void check_ring(const MultiPoly& o) const {
        if (!same_ring(o)) throw std::invalid_argument("polynomials from different rings");
    }

    MultiPoly mul_term(const Exponent* r, const coefficient_type& c) const {
        MultiPoly out(field_, vars_);
        if (c.is_zero()) return out;
        out.mono_.resize(mono_.size());
        out.coef_.reserve(coef_.size());
        for (std::size_t t = 0; t < coef_.size(); ++t) {
            add_rows(row(t), r, out.mono_.data() + t * width_);
            out.coef_.push_back(coef_[t] * c);
        }
        // fields have no zero divisors, so no coefficient vanishes
        return out;
    }

    MultiPoly combine(const MultiPoly& o, bool subtract) const {
        check_ring(o);
        MultiPoly r(field_, vars_);
        r.mono_.reserve(mono_.size() + o.mono_.size());
        r.coef_.reserve(coef_.size() + o.coef_.size());
        std::size_t i = 0, j = 0;
        auto push = [&](const Exponent* rw, coefficient_type c) {
            r.mono_.insert(r.mono_.end(), rw, rw + width_);
            r.coef_.push_back(std::move(c));
        };
        while (i < coef_.size() && j < o.coef_.size()) {
            int cmp = compare_rows(row(i), o.row(j));
            if (cmp < 0) {
                push(row(i), coef_[i]);
                ++i;
            } else if (cmp > 0) {
                push(o.row(j), subtract ? -o.coef_[j] : o.coef_[j]);
                ++j;
            } else {
                coefficient_type c = subtract ? coef_[i] - o.coef_[j] : coef_[i] + o.coef_[j];
                if (!c.is_zero()) push(row(i), std::move(c));
                ++i;
                ++j;
            }
        }
        for (; i < coef_.size(); ++i) push(row(i), coef_[i]);
        for (; j < o.coef_.size(); ++j) push(o.row(j), subtract ? -o.coef_[j] : o.coef_[j]);
        return r;
    }

    void assign_unsorted(const std::vector<Exponent>& rows, const std::vector<coefficient_type>& coefs) {
        std::vector<std::size_t> order(coefs.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return compare_rows(rows.data() + a * width_, rows.data() + b * width_) < 0;
        });
        mono_.clear();
        coef_.clear();
        for (std::size_t k = 0; k < order.size();) {
            const Exponent* r = rows.data() + order[k] * width_;
            coefficient_type c = coefs[order[k]];
            std::size_t m = k + 1;
            while (m < order.size() && compare_rows(r, rows.data() + order[m] * width_) == 0) {
                c = c + coefs[order[m]];
                ++m;
            }
            if (!c.is_zero()) {
                mono_.insert(mono_.end(), r, r + width_);
                coef_.push_back(std::move(c));
            }
            k = m;
        }
    }

    F field_;
    VariablesPtr vars_;
    std::size_t width_;
    std::vector<Exponent> mono_;
    std::vector<coefficient_type> coef_;
};

template <Field F>
MultiPoly<F> operator*(const typename F::value_type& c, const MultiPoly<F>& p) {
    return p.scaled(c);
}

/// Substitutes field values for the variables. `target` must contain the
/// coefficient field (via its `embed`).
template <Field F, Field E>
typename E::value_type evaluate(const MultiPoly<F>& p, const std::map<IndexPair, typename E::value_type>& assignment,
                                const E& target) {
    const auto& vars = *p.variables();
    std::vector<std::optional<typename E::value_type>> values(vars.size());
    for (std::size_t v = 0; v < vars.size(); ++v) {
        auto it = assignment.find(vars[v]);
        if (it != assignment.end()) values[v] = it->second;
    }
    typename E::value_type sum = target.zero();
    for (std::size_t t = 0; t < p.length(); ++t) {
        typename E::value_type term = target.embed(p.coefficient(t));
        auto exps = p.exponents(t);
        for (std::size_t v = 0; v < exps.size(); ++v) {
            if (exps[v] == 0) continue;
            if (!values[v]) throw std::invalid_argument("assignment is missing variable " + vars.name(v));
            term = term * power(*values[v], exps[v]);
        }
        sum = sum + term;
    }
    return sum;
}

template <Field F>
typename F::value_type evaluate(const MultiPoly<F>& p, const std::map<IndexPair, typename F::value_type>& assignment) {
    return evaluate(p, assignment, p.field());
}

} // namespace extshift

#endif
