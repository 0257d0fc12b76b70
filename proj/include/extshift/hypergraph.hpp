#ifndef EXTSHIFT_HYPERGRAPH_HPP
#define EXTSHIFT_HYPERGRAPH_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace extshift {

/// A finite subset of {1, ..., 64}, stored as a bit mask.
///
/// The built-in ordering is the lexicographic order: sigma < tau iff the
/// minimum of the symmetric difference lies in sigma. On sets of equal
/// cardinality this is the usual lexicographic order of sorted tuples.
class KSet {
public:
    static constexpr int max_vertex = 64;

    KSet() = default;
    KSet(std::initializer_list<int> vertices) : KSet(std::span<const int>(vertices.begin(), vertices.size())) {}
    explicit KSet(std::span<const int> vertices) {
        for (int v : vertices) {
            if (v < 1 || v > max_vertex) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
            if (contains(v)) throw std::invalid_argument("duplicate vertex " + std::to_string(v));
            bits_ |= bit(v);
        }
    }

    static KSet from_mask(std::uint64_t mask) {
        KSet s;
        s.bits_ = mask;
        return s;
    }

    std::uint64_t mask() const { return bits_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    bool contains(int v) const { return v >= 1 && v <= max_vertex && (bits_ & bit(v)) != 0; }
    bool is_subset_of(const KSet& o) const { return (bits_ & ~o.bits_) == 0; }
    int min_vertex() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
    int max_vertex_in_set() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

    std::vector<int> vertices() const {
        std::vector<int> out;
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    KSet with(int v) const { return from_mask(bits_ | bit(v)); }
    KSet without(int v) const { return from_mask(bits_ & ~bit(v)); }

    bool operator==(const KSet&) const = default;
    std::strong_ordering operator<=>(const KSet& o) const {
        const std::uint64_t diff = bits_ ^ o.bits_;
        if (diff == 0) return std::strong_ordering::equal;
        return (bits_ & diff & (~diff + 1)) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    /// Compact form: "13" when every vertex is a single digit, else "{1,3,12}".
    std::string to_string() const {
        auto vs = vertices();
        bool compact = std::all_of(vs.begin(), vs.end(), [](int v) { return v < 10; });
        std::string out = compact ? "" : "{";
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (!compact && i > 0) out += ",";
            out += std::to_string(vs[i]);
        }
        if (!compact) out += "}";
        return out;
    }
    friend std::ostream& operator<<(std::ostream& os, const KSet& s) { return os << s.to_string(); }

private:
    static std::uint64_t bit(int v) { return std::uint64_t{1} << (v - 1); }

    std::uint64_t bits_ = 0;
};

struct KSetHash {
    std::size_t operator()(const KSet& s) const { return std::hash<std::uint64_t>{}(s.mask()); }
};

/// Lexicographic comparison of equal-size sets.
inline std::strong_ordering lex_compare(const KSet& a, const KSet& b) {
    if (a.size() != b.size()) throw std::invalid_argument("lex_compare: cardinality mismatch");
    return a <=> b;
}

/// Domination order: the i-th smallest element of a is at most that of b, for all i.
inline bool dominates_leq(const KSet& a, const KSet& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dominates_leq: cardinality mismatch");
    auto va = a.vertices();
    auto vb = b.vertices();
    for (std::size_t i = 0; i < va.size(); ++i) {
        if (va[i] > vb[i]) return false;
    }
    return true;
}

/// sigma with i replaced by j when i is in sigma; sigma itself otherwise.
inline KSet replace_vertex(const KSet& sigma, int i, int j) {
    if (!sigma.contains(i)) return sigma;
    if (i == j) return sigma;
    if (sigma.contains(j)) {
        throw std::invalid_argument("replace_vertex: " + std::to_string(j) + " already in " + sigma.to_string());
    }
    if (j < 1 || j > KSet::max_vertex) throw std::invalid_argument("replace_vertex: vertex out of range");
    return sigma.without(i).with(j);
}

/// All k-subsets of {1, ..., n} in ascending lexicographic order.
inline std::vector<KSet> all_ksets(int n, int k) {
    std::vector<KSet> out;
    if (k < 0 || k > n) return out;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.emplace_back(std::span<const int>(c));
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
        if (i < 0) break;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

/// A nonempty k-uniform hypergraph on {1, ..., n}; faces kept in ascending lex order.
class UniformHypergraph {
public:
    UniformHypergraph(int n, std::vector<KSet> faces) : n_(n), faces_(std::move(faces)) {
        if (faces_.empty()) throw std::invalid_argument("hypergraph must be nonempty");
        if (n_ < 1 || n_ > KSet::max_vertex) throw std::invalid_argument("ground set size out of range");
        k_ = faces_.front().size();
        for (const auto& f : faces_) {
            if (f.size() != k_) throw std::invalid_argument("faces of a uniform hypergraph must have equal size");
            if (f.max_vertex_in_set() > n_) throw std::invalid_argument("face " + f.to_string() + " exceeds n");
        }
        std::sort(faces_.begin(), faces_.end());
        if (std::adjacent_find(faces_.begin(), faces_.end()) != faces_.end()) {
            throw std::invalid_argument("duplicate face in hypergraph");
        }
    }

    /// n is inferred as the largest vertex.
    explicit UniformHypergraph(std::vector<KSet> faces) : UniformHypergraph(max_vertex_of(faces), std::move(faces)) {}

    /// Faces already strictly ascending; checked in linear time instead of sorted.
    static UniformHypergraph from_sorted(int n, std::vector<KSet> faces) {
        if (faces.empty()) throw std::invalid_argument("hypergraph must be nonempty");
        if (n < 1 || n > KSet::max_vertex) throw std::invalid_argument("ground set size out of range");
        UniformHypergraph s;
        s.n_ = n;
        s.k_ = faces.front().size();
        for (std::size_t i = 0; i < faces.size(); ++i) {
            if (faces[i].size() != s.k_) throw std::invalid_argument("faces of a uniform hypergraph must have equal size");
            if (faces[i].max_vertex_in_set() > n) throw std::invalid_argument("face " + faces[i].to_string() + " exceeds n");
            if (i > 0 && !(faces[i - 1] < faces[i])) throw std::invalid_argument("faces are not strictly ascending");
        }
        s.faces_ = std::move(faces);
        return s;
    }

    int n() const { return n_; }
    int k() const { return k_; }
    std::size_t size() const { return faces_.size(); }
    const std::vector<KSet>& faces() const { return faces_; }
    auto begin() const { return faces_.begin(); }
    auto end() const { return faces_.end(); }
    const KSet& lex_max() const { return faces_.back(); }

    bool contains(const KSet& s) const { return std::binary_search(faces_.begin(), faces_.end(), s); }

    bool operator==(const UniformHypergraph&) const = default;

    std::string to_string() const {
        std::string out = "{";
        for (std::size_t i = 0; i < faces_.size(); ++i) {
            if (i > 0) out += ", ";
            out += faces_[i].to_string();
        }
        return out + "}";
    }
    friend std::ostream& operator<<(std::ostream& os, const UniformHypergraph& s) { return os << s.to_string(); }

private:
    UniformHypergraph() = default;

    static int max_vertex_of(const std::vector<KSet>& faces) {
        int m = 0;
        for (const auto& f : faces) m = std::max(m, f.max_vertex_in_set());
        return m;
    }

    int n_ = 0;
    int k_ = 0;
    std::vector<KSet> faces_;
};

/// Shiftedness test: every face stays in S when any vertex i > 1 is moved to
/// i - 1 (moves onto a vertex already present leave the face unchanged).
inline bool is_shifted(const UniformHypergraph& s) {
    for (const auto& sigma : s) {
        for (int i : sigma.vertices()) {
            if (i == 1 || sigma.contains(i - 1)) continue;
            if (!s.contains(replace_vertex(sigma, i, i - 1))) return false;
        }
    }
    return true;
}

/// Applies the transposition (a b) to the elements of sigma.
inline KSet apply_transposition(const KSet& sigma, int a, int b) {
    const bool has_a = sigma.contains(a);
    const bool has_b = sigma.contains(b);
    if (has_a == has_b) return sigma;
    return has_a ? sigma.without(a).with(b) : sigma.without(b).with(a);
}

/// Erdos-Ko-Rado compression along the transposition (a b): each face is
/// moved to its image when that image is lex-smaller and not already present.
///
/// Linear in |S|: the faces that may move (b in, a out for a < b) keep their
/// relative order under the swap, so one pointer walk over S answers every
/// membership query and a merge restores ascending order. `ops`, if given, is
/// increased by the number of face visits, pointer steps and merge steps.
inline UniformHypergraph combinatorial_shift(const UniformHypergraph& s, int a, int b, std::size_t* ops = nullptr) {
    if (a == b || a < 1 || b < 1 || a > s.n() || b > s.n()) {
        throw std::invalid_argument("combinatorial_shift: (" + std::to_string(a) + " " + std::to_string(b) + ") is not a transposition in S_n");
    }
    if (a > b) std::swap(a, b);
    const auto& faces = s.faces();
    std::vector<KSet> stay, moved;
    std::size_t steps = 0, p = 0;
    for (const auto& sigma : faces) {
        ++steps;
        if (!sigma.contains(b) || sigma.contains(a)) {
            stay.push_back(sigma);
            continue;
        }
        const KSet image = sigma.without(b).with(a);
        while (p < faces.size() && faces[p] < image) {
            ++p;
            ++steps;
        }
        if (p < faces.size() && faces[p] == image) {
            stay.push_back(sigma);
        } else {
            moved.push_back(image);
        }
    }
    std::vector<KSet> out(faces.size());
    std::merge(stay.begin(), stay.end(), moved.begin(), moved.end(), out.begin());
    steps += out.size();
    if (ops != nullptr) *ops += steps;
    return UniformHypergraph::from_sorted(s.n(), std::move(out));
}

/// Compares two families by their ascending-lex face sequences.
inline std::strong_ordering family_lex_compare(const UniformHypergraph& s, const UniformHypergraph& t) {
    if (s.size() != t.size() || s.k() != t.k()) throw std::invalid_argument("family_lex_compare: cardinality mismatch");
    for (std::size_t i = 0; i < s.size(); ++i) {
        auto c = s.faces()[i] <=> t.faces()[i];
        if (c != 0) return c;
    }
    return std::strong_ordering::equal;
}

/// A simplicial complex on {1, ..., n}, given by its facets (inclusion-maximal faces).
class SimplicialComplex {
public:
    /// Accepts any generating faces; non-maximal ones are dropped.
    SimplicialComplex(int n, std::vector<KSet> generators) : n_(n) {
        if (n < 1 || n > KSet::max_vertex) throw std::invalid_argument("ground set size out of range");
        std::sort(generators.begin(), generators.end(), [](const KSet& a, const KSet& b) {
            if (a.size() != b.size()) return a.size() > b.size();
            return a < b;
        });
        generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
        for (const auto& g : generators) {
            if (g.empty()) continue;
            if (g.max_vertex_in_set() > n) throw std::invalid_argument("face " + g.to_string() + " exceeds n");
            bool covered = std::any_of(facets_.begin(), facets_.end(), [&](const KSet& f) { return g.is_subset_of(f); });
            if (!covered) facets_.push_back(g);
        }
        if (facets_.empty()) throw std::invalid_argument("simplicial complex needs a nonempty face");
        std::sort(facets_.begin(), facets_.end());
    }

    int n() const { return n_; }
    const std::vector<KSet>& facets() const { return facets_; }
    int dimension() const {
        int d = 0;
        for (const auto& f : facets_) d = std::max(d, f.size());
        return d - 1;
    }
    bool is_pure() const {
        return std::all_of(facets_.begin(), facets_.end(), [&](const KSet& f) { return f.size() == facets_.front().size(); });
    }
    bool contains(const KSet& face) const {
        return std::any_of(facets_.begin(), facets_.end(), [&](const KSet& f) { return face.is_subset_of(f); });
    }
    bool has_facet_of_dimension(int d) const {
        return std::any_of(facets_.begin(), facets_.end(), [&](const KSet& f) { return f.size() == d + 1; });
    }

    bool operator==(const SimplicialComplex&) const = default;

private:
    int n_;
    std::vector<KSet> facets_;
};

/// All (d+1)-subsets of facets of K, i.e. the d-dimensional faces.
inline UniformHypergraph skeleton(const SimplicialComplex& complex, int d) {
    if (d < 0 || d > complex.dimension()) throw std::invalid_argument("skeleton: dimension out of range");
    std::vector<KSet> faces;
    for (const auto& f : complex.facets()) {
        auto vs = f.vertices();
        if (static_cast<int>(vs.size()) < d + 1) continue;
        for (const auto& local : all_ksets(static_cast<int>(vs.size()), d + 1)) {
            std::uint64_t mask = 0;
            for (int idx : local.vertices()) mask |= std::uint64_t{1} << (vs[static_cast<std::size_t>(idx - 1)] - 1);
            faces.push_back(KSet::from_mask(mask));
        }
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    return UniformHypergraph(complex.n(), std::move(faces));
}

/// Face counts per dimension, starting at dimension 0.
inline std::vector<std::size_t> f_vector(const SimplicialComplex& complex) {
    std::vector<std::size_t> f;
    for (int d = 0; d <= complex.dimension(); ++d) f.push_back(skeleton(complex, d).size());
    return f;
}

} // namespace extshift

#endif
