#ifndef EXTSHIFT_EXTERIOR_HPP
#define EXTSHIFT_EXTERIOR_HPP

#include <extshift/field.hpp>
#include <extshift/hypergraph.hpp>
#include <extshift/matrix.hpp>
#include <extshift/multipoly.hpp>
#include <extshift/permutation.hpp>

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

namespace extshift {

/// Quotient known to be exact: field division, or exact polynomial division.
template <class T>
T exact_quotient(const T& a, const T& b) {
    if constexpr (FieldElement<T>) {
        return a / b;
    } else {
        return exact_divide(a, b);
    }
}

/// Fraction-free (Bareiss) determinant of a square matrix.
template <class T>
T bareiss_det(Matrix<T> m) {
    const std::size_t n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return m.zero().one_like();
    bool negate = false;
    T prev = m.zero().one_like();
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k).is_zero()) ++piv;
        if (piv == n) return m.zero();
        if (piv != k) {
            m.swap_rows(piv, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = exact_quotient(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
            }
            m(i, k) = m.zero();
        }
        prev = m(k, k);
    }
    T d = m(n - 1, n - 1);
    return negate ? -d : d;
}

namespace detail {

/// Determinant over a field by Gaussian elimination.
template <FieldElement T>
T gauss_det(Matrix<T> m) {
    const std::size_t n = m.rows();
    T det = m.zero().one_like();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m(piv, k).is_zero()) ++piv;
        if (piv == n) return m.zero();
        if (piv != k) {
            m.swap_rows(piv, k);
            det = -det;
        }
        det = det * m(k, k);
        const T inv = m(k, k).inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k).is_zero()) continue;
            const T factor = m(i, k) * inv;
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = m(i, j) - factor * m(k, j);
        }
    }
    return det;
}

struct MaskPairHash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const {
        return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
    }
};

} // namespace detail

/// Minors of one matrix by memoized cofactor expansion, always expanding along
/// the sparsest remaining row or column. Division-free, so it works over
/// polynomial rings; sub-minors are shared across all requested minors.
template <class T>
class MinorEvaluator {
public:
    explicit MinorEvaluator(const Matrix<T>& g) : g_(g) {
        if (g.rows() > 64 || g.cols() > 64) throw std::invalid_argument("minor evaluation supports at most 64 rows/columns");
    }

    /// Determinant of the submatrix with the given (1-based) rows and columns.
    T operator()(const KSet& rows, const KSet& cols) {
        if (rows.size() != cols.size()) throw std::invalid_argument("minor: row and column sets differ in size");
        if (rows.max_vertex_in_set() > static_cast<int>(g_.rows()) || cols.max_vertex_in_set() > static_cast<int>(g_.cols())) {
            throw std::out_of_range("minor: index out of range");
        }
        return det(rows.mask(), cols.mask());
    }

    std::size_t cache_size() const { return memo_.size(); }

private:
    const T& entry(int r, int c) const { return g_(static_cast<std::size_t>(r), static_cast<std::size_t>(c)); }

    T det(std::uint64_t rows, std::uint64_t cols) {
        const int k = std::popcount(rows);
        if (k == 0) return g_.zero().one_like();
        if (k == 1) return entry(std::countr_zero(rows), std::countr_zero(cols));
        auto key = std::make_pair(rows, cols);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        // pick the line with the fewest nonzero entries
        int best_count = k + 1;
        bool best_is_row = true;
        int best_index = -1;
        for (std::uint64_t r = rows; r != 0; r &= r - 1) {
            int ri = std::countr_zero(r), cnt = 0;
            for (std::uint64_t c = cols; c != 0; c &= c - 1) cnt += entry(ri, std::countr_zero(c)).is_zero() ? 0 : 1;
            if (cnt < best_count) { best_count = cnt; best_is_row = true; best_index = ri; }
        }
        for (std::uint64_t c = cols; c != 0; c &= c - 1) {
            int ci = std::countr_zero(c), cnt = 0;
            for (std::uint64_t r = rows; r != 0; r &= r - 1) cnt += entry(std::countr_zero(r), ci).is_zero() ? 0 : 1;
            if (cnt < best_count) { best_count = cnt; best_is_row = false; best_index = ci; }
        }

        T result = g_.zero();
        if (best_count > 0) {
            const std::uint64_t fixed_bit = std::uint64_t{1} << best_index;
            const std::uint64_t fixed_mask = best_is_row ? rows : cols;
            const std::uint64_t other_mask = best_is_row ? cols : rows;
            const int fixed_pos = std::popcount(fixed_mask & (fixed_bit - 1));
            int pos = 0;
            for (std::uint64_t o = other_mask; o != 0; o &= o - 1, ++pos) {
                const int oi = std::countr_zero(o);
                const T& a = best_is_row ? entry(best_index, oi) : entry(oi, best_index);
                if (a.is_zero()) continue;
                const std::uint64_t other_bit = std::uint64_t{1} << oi;
                T sub = best_is_row ? det(rows & ~fixed_bit, cols & ~other_bit) : det(rows & ~other_bit, cols & ~fixed_bit);
                if (sub.is_zero()) continue;
                T term = a * sub;
                result = ((fixed_pos + pos) % 2 == 0) ? result + term : result - term;
            }
        }
        memo_.emplace(key, result);
        return result;
    }

    const Matrix<T>& g_;
    std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, T, detail::MaskPairHash> memo_;
};

/// det of g restricted to rows sigma and columns tau (1-based index sets).
template <class T>
T minor_det(const Matrix<T>& g, const KSet& sigma, const KSet& tau) {
    if (sigma.size() != tau.size()) throw std::invalid_argument("minor: row and column sets differ in size");
    if (sigma.max_vertex_in_set() > static_cast<int>(g.rows()) || tau.max_vertex_in_set() > static_cast<int>(g.cols())) {
        throw std::out_of_range("minor: index out of range");
    }
    if constexpr (FieldElement<T>) {
        std::vector<std::size_t> rs, cs;
        for (int r : sigma.vertices()) rs.push_back(static_cast<std::size_t>(r - 1));
        for (int c : tau.vertices()) cs.push_back(static_cast<std::size_t>(c - 1));
        return detail::gauss_det(g.submatrix(rs, cs));
    } else {
        MinorEvaluator<T> eval(g);
        return eval(sigma, tau);
    }
}

/// Rows of the k-th compound matrix indexed by a family S, restricted to a
/// column family (ascending lex).
template <class T>
struct CompoundSubmatrix {
    std::vector<KSet> row_sets;
    std::vector<KSet> column_sets;
    Matrix<T> entries;
};

template <class T>
CompoundSubmatrix<T> compound_submatrix(const Matrix<T>& g, const UniformHypergraph& s,
                                        std::optional<std::vector<KSet>> columns = std::nullopt) {
    const int n = static_cast<int>(g.rows());
    if (g.rows() != g.cols()) throw std::invalid_argument("compound_submatrix: matrix must be square");
    if (s.n() > n) throw std::invalid_argument("compound_submatrix: hypergraph exceeds matrix size");
    const int k = s.k();
    std::vector<KSet> cols = columns ? std::move(*columns) : all_ksets(n, k);
    for (const auto& t : cols) {
        if (t.size() != k) throw std::invalid_argument("compound_submatrix: column set of wrong cardinality");
        if (t.max_vertex_in_set() > n) throw std::out_of_range("compound_submatrix: column index out of range");
    }
    std::sort(cols.begin(), cols.end());
    Matrix<T> m(s.size(), cols.size(), g.zero());
    if constexpr (FieldElement<T>) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = minor_det(g, s.faces()[i], cols[j]);
        }
    } else {
        MinorEvaluator<T> eval(g);
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = eval(s.faces()[i], cols[j]);
        }
    }
    return {s.faces(), std::move(cols), std::move(m)};
}

/// Variables x_{ij} for (i, j) in inv w.
inline VariablesPtr inversion_variables(const Permutation& w) { return VariableSet::make(inversions(w)); }

/// U(w): unipotent upper triangular, x_{ij} at the inversion positions of w.
template <Field F>
Matrix<MultiPoly<F>> build_U(const Permutation& w, const F& field) {
    auto vars = inversion_variables(w);
    const auto n = static_cast<std::size_t>(w.size());
    MultiPoly<F> zero(field, vars);
    auto u = Matrix<MultiPoly<F>>::identity(n, zero);
    for (std::size_t v = 0; v < vars->size(); ++v) {
        const auto& [i, j] = (*vars)[v];
        u(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = MultiPoly<F>::variable(field, vars, v);
    }
    return u;
}

/// R(w) = U(w) P(w).
template <Field F>
Matrix<MultiPoly<F>> build_R(const Permutation& w, const F& field) {
    auto u = build_U(w, field);
    return u * permutation_matrix(w, u.zero());
}

/// The n x n matrix of n^2 independent indeterminates x_{ij}.
template <Field F>
Matrix<MultiPoly<F>> generic_matrix(int n, const F& field) {
    std::vector<IndexPair> pairs;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) pairs.emplace_back(i, j);
    }
    auto vars = VariableSet::make(std::move(pairs));
    Matrix<MultiPoly<F>> x(static_cast<std::size_t>(n), static_cast<std::size_t>(n), MultiPoly<F>(field, vars));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            x(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = MultiPoly<F>::variable(field, vars, IndexPair{i, j});
        }
    }
    return x;
}

/// U(w)(v): the unipotent matrix with v_{ij} at the inversion positions.
template <Field E>
Matrix<typename E::value_type> build_U_numeric(const Permutation& w,
                                               const std::map<IndexPair, typename E::value_type>& values,
                                               const E& field) {
    const auto inv = inversions(w);
    for (const auto& [pair, value] : values) {
        if (!std::binary_search(inv.begin(), inv.end(), pair)) {
            throw std::invalid_argument("assignment for (" + std::to_string(pair.first) + "," + std::to_string(pair.second) + ") outside inv w");
        }
    }
    const auto n = static_cast<std::size_t>(w.size());
    auto u = Matrix<typename E::value_type>::identity(n, field.zero());
    for (const auto& pair : inv) {
        auto it = values.find(pair);
        if (it == values.end()) {
            throw std::invalid_argument("missing assignment for (" + std::to_string(pair.first) + "," + std::to_string(pair.second) + ")");
        }
        u(static_cast<std::size_t>(pair.first - 1), static_cast<std::size_t>(pair.second - 1)) = it->second;
    }
    return u;
}

/// Random assignment v in E^{inv w}, drawn in inversion order.
template <Field E>
std::map<IndexPair, typename E::value_type> random_assignment(const Permutation& w, const E& field, Rng& rng) {
    std::map<IndexPair, typename E::value_type> v;
    for (const auto& pair : inversions(w)) v.emplace(pair, field.random(rng));
    return v;
}

template <Field E>
Matrix<typename E::value_type> random_unipotent(const Permutation& w, const E& field, Rng& rng) {
    return build_U_numeric(w, random_assignment(w, field, rng), field);
}

/// The entries of an upper unipotent u at the inversion positions of w.
/// Throws if u is not unipotent upper triangular or has support outside inv w.
template <class T>
std::map<IndexPair, T> unipotent_assignment(const Matrix<T>& u, const Permutation& w) {
    const auto n = static_cast<std::size_t>(w.size());
    if (u.rows() != n || u.cols() != n) throw std::invalid_argument("unipotent matrix has wrong size");
    const auto inv = inversions(w);
    std::map<IndexPair, T> v;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const T& a = u(i, j);
            if (i == j) {
                if (!a.is_one()) throw std::invalid_argument("matrix is not unipotent");
            } else if (i > j) {
                if (!a.is_zero()) throw std::invalid_argument("matrix is not upper triangular");
            } else {
                IndexPair pair{static_cast<int>(i + 1), static_cast<int>(j + 1)};
                bool in_inv = std::binary_search(inv.begin(), inv.end(), pair);
                if (!in_inv && !a.is_zero()) throw std::invalid_argument("unipotent support outside inv w");
                if (in_inv) v.emplace(pair, a);
            }
        }
    }
    return v;
}

} // namespace extshift

#endif
