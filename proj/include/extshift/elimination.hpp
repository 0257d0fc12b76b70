#ifndef EXTSHIFT_ELIMINATION_HPP
#define EXTSHIFT_ELIMINATION_HPP

#include <extshift/field.hpp>
#include <extshift/matrix.hpp>
#include <extshift/multipoly.hpp>
#include <extshift/poly_gcd.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace extshift {

enum class Engine { eager, lazy };

inline std::string to_string(Engine e) { return e == Engine::eager ? "eager" : "lazy"; }

/// Operation counters of one elimination run.
struct EliminationStats {
    std::uint64_t multiplications = 0;  // ring multiplications by non-units
    std::uint64_t gcd_calls = 0;
    std::size_t max_length = 0;  // largest number of terms seen in an entry
    int max_degree = -1;         // largest total degree seen in an entry

    void merge(const EliminationStats& o) {
        multiplications += o.multiplications;
        gcd_calls += o.gcd_calls;
        max_length = std::max(max_length, o.max_length);
        max_degree = std::max(max_degree, o.max_degree);
    }
};

/// Pivot columns (0-based, ascending) of a matrix, i.e. the columns outside
/// the span of the columns to their left, together with the matrix the
/// engine ended with: the row echelon form (eager) or the accumulated row
/// transform (lazy).
template <class T>
struct EchelonResult {
    std::vector<std::size_t> pivot_columns;
    Matrix<T> transform;
    EliminationStats stats;
};

namespace detail {

template <class T>
std::size_t entry_length(const T& a) {
    if constexpr (FieldElement<T>) {
        return a.is_zero() ? 0 : 1;
    } else {
        return a.length();
    }
}

template <class T>
int entry_degree(const T& a) {
    if constexpr (FieldElement<T>) {
        return a.is_zero() ? -1 : 0;
    } else {
        return a.total_degree();
    }
}

template <class T>
void observe(const T& a, EliminationStats& st) {
    st.max_length = std::max(st.max_length, entry_length(a));
    st.max_degree = std::max(st.max_degree, entry_degree(a));
}

/// Multipliers (keep, scale) with keep * target - scale * pivot = 0. Over a
/// polynomial ring these are the gcd cofactors pivot/g and target/g.
template <class T>
struct Cofactors {
    T keep;
    T scale;
};

template <class T>
Cofactors<T> cofactors(const T& target, const T& pivot, EliminationStats& st) {
    if constexpr (FieldElement<T>) {
        return {target.one_like(), target / pivot};
    } else {
        ++st.gcd_calls;
        T g = gcd(target, pivot);
        return {exact_divide(pivot, g), exact_divide(target, g)};
    }
}

template <class T>
T scale_entry(const T& factor, const T& x, EliminationStats& st) {
    if (x.is_zero()) return x;
    if (factor.is_one()) return x;
    ++st.multiplications;
    return factor * x;
}

/// row <- keep * row - scale * pivot_row, over the given column range.
template <class T>
void update_row(std::span<T> row, std::span<const T> pivot_row, const Cofactors<T>& cf, std::size_t from,
                EliminationStats& st) {
    for (std::size_t c = from; c < row.size(); ++c) {
        if (row[c].is_zero() && pivot_row[c].is_zero()) continue;
        T left = scale_entry(cf.keep, row[c], st);
        if (pivot_row[c].is_zero()) {
            row[c] = std::move(left);
        } else {
            row[c] = left - scale_entry(cf.scale, pivot_row[c], st);
        }
    }
}

/// Divides a row by the gcd of its entries (polynomial rings only).
template <class T>
void remove_content(std::span<T> row, EliminationStats& st) {
    if constexpr (!FieldElement<T>) {
        if (row.empty()) return;
        T g = row[0].zero_like();
        ++st.gcd_calls;
        for (const auto& x : row) {
            if (x.is_zero()) continue;
            g = gcd(g, x);
            if (g.is_one()) return;
        }
        if (g.is_zero()) return;
        for (auto& x : row) {
            if (!x.is_zero()) x = exact_divide(x, g);
        }
    } else {
        (void)row;
        (void)st;
    }
}

} // namespace detail

/// Among the nonzero entries of minimal length (number of terms), the one
/// with the least index. Over a field this is the first nonzero entry.
template <class T>
std::size_t pivot_select(std::span<const T> column) {
    std::size_t best = column.size();
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < column.size(); ++i) {
        if (column[i].is_zero()) continue;
        std::size_t len = detail::entry_length(column[i]);
        if (best == column.size() || len < best_len) {
            best = i;
            best_len = len;
        }
    }
    if (best == column.size()) throw std::invalid_argument("pivot_select: column is zero");
    return best;
}

/// Row echelon form by fraction-free elimination (gcd cofactors and row
/// content removal over polynomial rings, plain Gaussian steps over fields).
template <class T>
EchelonResult<T> ind_eager(Matrix<T> m) {
    EchelonResult<T> res{{}, m, {}};
    const std::size_t rows = m.rows(), cols = m.cols();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) detail::observe(m(i, j), res.stats);
    }
    std::size_t r = 0;
    for (std::size_t j = 0; j < cols && r < rows; ++j) {
        std::vector<T> column;
        column.reserve(rows - r);
        for (std::size_t i = r; i < rows; ++i) column.push_back(m(i, j));
        if (std::all_of(column.begin(), column.end(), [](const T& x) { return x.is_zero(); })) continue;
        const std::size_t p = r + pivot_select(std::span<const T>(column));
        m.swap_rows(p, r);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m(i, j).is_zero()) continue;
            auto cf = detail::cofactors(m(i, j), m(r, j), res.stats);
            m(i, j) = m.zero();
            detail::update_row(m.row(i), std::span<const T>(m.row(r)), cf, j + 1, res.stats);
            detail::remove_content(m.row(i), res.stats);
            for (std::size_t c = j + 1; c < cols; ++c) detail::observe(m(i, c), res.stats);
        }
        res.pivot_columns.push_back(j);
        ++r;
    }
    res.transform = std::move(m);
    return res;
}

/// Lazy, column-oriented row reduction. Only the transform v is updated; each
/// column c = v m_{*j} is evaluated just in the rows that hold no step yet.
/// Stops as soon as every row holds a step.
template <class T>
EchelonResult<T> ind_lazy(const Matrix<T>& m) {
    const std::size_t l = m.rows(), cols = m.cols();
    EchelonResult<T> res{{}, Matrix<T>::identity(l, m.zero()), {}};
    Matrix<T>& v = res.transform;
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < cols; ++j) detail::observe(m(i, j), res.stats);
    }
    std::size_t r = 0;  // |I|
    for (std::size_t j = 0; j < cols && r < l; ++j) {
        std::vector<T> c(l - r, m.zero());
        bool nonzero = false;
        for (std::size_t i = r; i < l; ++i) {
            T acc = m.zero();
            for (std::size_t t = 0; t < l; ++t) {
                const T& vt = v(i, t);
                const T& mt = m(t, j);
                if (vt.is_zero() || mt.is_zero()) continue;
                if (vt.is_one()) {
                    acc = acc + mt;
                } else if (mt.is_one()) {
                    acc = acc + vt;
                } else {
                    ++res.stats.multiplications;
                    acc = acc + vt * mt;
                }
            }
            detail::observe(acc, res.stats);
            nonzero = nonzero || !acc.is_zero();
            c[i - r] = std::move(acc);
        }
        if (!nonzero) continue;
        res.pivot_columns.push_back(j);
        if (res.pivot_columns.size() == l) break;
        const std::size_t piv = pivot_select(std::span<const T>(c));
        if (piv != 0) {
            std::swap(c[0], c[piv]);
            v.swap_rows(r, r + piv);
        }
        for (std::size_t i = 1; i < c.size(); ++i) {
            if (c[i].is_zero()) continue;
            auto cf = detail::cofactors(c[i], c[0], res.stats);
            detail::update_row(v.row(r + i), std::span<const T>(v.row(r)), cf, 0, res.stats);
            detail::remove_content(v.row(r + i), res.stats);
            for (std::size_t t = 0; t < l; ++t) detail::observe(v(r + i, t), res.stats);
        }
        ++r;
    }
    return res;
}

template <class T>
EchelonResult<T> ind(const Matrix<T>& m, Engine engine) {
    return engine == Engine::eager ? ind_eager(m) : ind_lazy(m);
}

} // namespace extshift

#endif
