#ifndef EXTSHIFT_PERMUTATION_HPP
#define EXTSHIFT_PERMUTATION_HPP

#include <extshift/field.hpp>
#include <extshift/matrix.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace extshift {

/// Inversion pairs (i, j), i < j, in ascending order.
using InversionSet = std::vector<std::pair<int, int>>;

/// Element of S_n in one-line notation (w(1), ..., w(n)).
///
/// Products act left to right: compose(v, w) maps i to w(v(i)). With the
/// permutation matrix P[i, w(i)] = 1 this makes P(compose(v, w)) = P(v) P(w),
/// and right multiplication by a simple transposition s_a swaps the values
/// a and a + 1 in the one-line notation.
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size() + 1, false);
        for (int x : images_) {
            if (x < 1 || x > static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(x)]) {
                throw std::invalid_argument("not a permutation in one-line notation");
            }
            seen[static_cast<std::size_t>(x)] = true;
        }
    }

    static Permutation identity(int n) {
        std::vector<int> v(static_cast<std::size_t>(n));
        std::iota(v.begin(), v.end(), 1);
        return Permutation(std::move(v));
    }

    /// w0(i) = n + 1 - i.
    static Permutation longest_element(int n) {
        if (n < 1) throw std::invalid_argument("longest_element: n must be positive");
        std::vector<int> v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n - i;
        return Permutation(std::move(v));
    }

    /// The transposition exchanging a and b.
    static Permutation transposition(int n, int a, int b) {
        if (a == b || a < 1 || b < 1 || a > n || b > n) throw std::invalid_argument("invalid transposition");
        Permutation p = identity(n);
        std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
        return p;
    }

    /// The simple transposition s_a = (a a+1).
    static Permutation simple(int n, int a) { return transposition(n, a, a + 1); }

    /// Parses one-line notation ("2 3 4 1", commas allowed) or the keywords
    /// `id` and `w0`, which need n.
    static Permutation parse(const std::string& text, int n) {
        std::string t = text;
        t.erase(0, t.find_first_not_of(" \t"));
        t.erase(t.find_last_not_of(" \t") + 1);
        if (t == "id") return identity(n);
        if (t == "w0") return longest_element(n);
        std::replace(t.begin(), t.end(), ',', ' ');
        std::istringstream in(t);
        std::vector<int> v;
        std::string tok;
        while (in >> tok) {
            std::size_t used = 0;
            int x = 0;
            try {
                x = std::stoi(tok, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("invalid permutation '" + text + "'");
            }
            if (used != tok.size()) throw std::invalid_argument("invalid permutation '" + text + "'");
            v.push_back(x);
        }
        if (v.empty()) throw std::invalid_argument("empty permutation");
        Permutation p(std::move(v));
        if (n > 0 && p.size() != n) {
            throw std::invalid_argument("permutation has " + std::to_string(p.size()) + " entries, expected " + std::to_string(n));
        }
        return p;
    }

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& images() const { return images_; }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < images_.size(); ++i) {
            if (i > 0) out += " ";
            out += std::to_string(images_[i]);
        }
        return out;
    }
    friend std::ostream& operator<<(std::ostream& os, const Permutation& w) { return os << w.to_string(); }

private:
    std::vector<int> images_;
};

/// {(i, j) : i < j, w(i) > w(j)}.
inline InversionSet inversions(const Permutation& w) {
    InversionSet out;
    for (int i = 1; i <= w.size(); ++i) {
        for (int j = i + 1; j <= w.size(); ++j) {
            if (w(i) > w(j)) out.emplace_back(i, j);
        }
    }
    return out;
}

inline int length(const Permutation& w) { return static_cast<int>(inversions(w).size()); }

/// The left-to-right product: i maps to w(v(i)).
inline Permutation compose(const Permutation& v, const Permutation& w) {
    if (v.size() != w.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> out(static_cast<std::size_t>(v.size()));
    for (int i = 1; i <= v.size(); ++i) out[static_cast<std::size_t>(i - 1)] = w(v(i));
    return Permutation(std::move(out));
}

inline Permutation inverse(const Permutation& w) {
    std::vector<int> out(static_cast<std::size_t>(w.size()));
    for (int i = 1; i <= w.size(); ++i) out[static_cast<std::size_t>(w(i) - 1)] = i;
    return Permutation(std::move(out));
}

/// True when w * s_a is shorter than w, i.e. a + 1 precedes a in one-line notation.
inline bool has_right_descent(const Permutation& w, int a) {
    const auto& im = w.images();
    auto pa = std::find(im.begin(), im.end(), a);
    auto pb = std::find(im.begin(), im.end(), a + 1);
    return pb < pa;
}

namespace detail {

inline double count_reduced_words(const Permutation& w, std::map<Permutation, double>& memo) {
    if (auto it = memo.find(w); it != memo.end()) return it->second;
    double total = 0;
    bool any = false;
    for (int a = 1; a < w.size(); ++a) {
        if (!has_right_descent(w, a)) continue;
        any = true;
        total += count_reduced_words(compose(w, Permutation::simple(w.size(), a)), memo);
    }
    if (!any) total = 1;  // identity
    memo.emplace(w, total);
    return total;
}

} // namespace detail

/// A saturated chain id = v_0 < v_1 < ... < v_m = w in right weak order,
/// following a uniformly random reduced word of w (uniform up to rounding of
/// the floating-point word counts).
inline std::vector<Permutation> right_weak_chain(const Permutation& w, Rng& rng) {
    std::map<Permutation, double> memo;
    std::vector<Permutation> chain{w};
    Permutation current = w;
    while (length(current) > 0) {
        std::vector<Permutation> below;
        std::vector<double> weights;
        for (int a = 1; a < current.size(); ++a) {
            if (!has_right_descent(current, a)) continue;
            below.push_back(compose(current, Permutation::simple(current.size(), a)));
            weights.push_back(detail::count_reduced_words(below.back(), memo));
        }
        std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
        current = below[pick(rng)];
        chain.push_back(current);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

/// The n x n matrix with P[i, w(i)] = 1.
template <class T>
Matrix<T> permutation_matrix(const Permutation& w, const T& zero) {
    const auto n = static_cast<std::size_t>(w.size());
    Matrix<T> m(n, n, zero);
    for (int i = 1; i <= w.size(); ++i) m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(w(i) - 1)) = zero.one_like();
    return m;
}

} // namespace extshift

#endif
