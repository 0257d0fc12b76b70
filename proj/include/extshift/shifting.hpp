#ifndef EXTSHIFT_SHIFTING_HPP
#define EXTSHIFT_SHIFTING_HPP

#include <extshift/elimination.hpp>
#include <extshift/error.hpp>
#include <extshift/exterior.hpp>
#include <extshift/field.hpp>
#include <extshift/field_spec.hpp>
#include <extshift/hypergraph.hpp>
#include <extshift/matrix.hpp>
#include <extshift/multipoly.hpp>
#include <extshift/permutation.hpp>

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace extshift {

enum class Method { deterministic, las_vegas, monte_carlo, combinatorial };

inline std::string to_string(Method m) {
    switch (m) {
    case Method::deterministic: return "deterministic";
    case Method::las_vegas: return "las-vegas";
    case Method::monte_carlo: return "monte-carlo";
    case Method::combinatorial: return "combinatorial";
    }
    return "?";
}

struct PhaseTimes {
    double sampling_ms = 0;      // computing the sampled shifts (phase A)
    double verification_ms = 0;  // certifying the chosen sample (phase B)
    double total_ms = 0;
};

struct ShiftResult {
    UniformHypergraph family;
    Method method = Method::deterministic;
    bool certified = false;
    std::size_t trials = 0;
    bool short_circuit = false;
    PhaseTimes times;
    EliminationStats stats;
};

namespace detail {

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

template <class T>
std::vector<KSet> pivot_sets(const CompoundSubmatrix<T>& cs, Engine engine, EliminationStats* stats) {
    auto res = ind(cs.entries, engine);
    if (stats != nullptr) stats->merge(res.stats);
    std::vector<KSet> out;
    out.reserve(res.pivot_columns.size());
    for (auto j : res.pivot_columns) out.push_back(cs.column_sets[j]);
    return out;
}

inline std::vector<KSet> ksets_below(int n, int k, const KSet& bound, bool inclusive) {
    std::vector<KSet> out;
    for (const auto& t : all_ksets(n, k)) {
        if (t < bound || (inclusive && t == bound)) out.push_back(t);
    }
    return out;
}

/// Mixes a master seed with a stream index into an independent generator.
inline Rng sub_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32U),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32U)};
    return Rng(seq);
}

inline void check_sizes(const UniformHypergraph& s, const Permutation& w) {
    if (s.n() > w.size()) throw std::invalid_argument("permutation acts on fewer vertices than the hypergraph uses");
}

} // namespace detail

/// Partial shift by an explicit matrix: the k-sets whose columns of g^{wedge S}
/// are not spanned by lex-smaller columns.
template <class T>
UniformHypergraph delta_matrix(const UniformHypergraph& s, const Matrix<T>& g, Engine engine = Engine::lazy,
                               EliminationStats* stats = nullptr) {
    if (g.rows() != g.cols()) throw std::invalid_argument("delta_matrix: matrix must be square");
    if (static_cast<int>(g.rows()) < s.n()) throw std::invalid_argument("delta_matrix: matrix smaller than the ground set");
    if constexpr (FieldElement<T>) {
        if (detail::gauss_det(g).is_zero()) throw singular_matrix("delta_matrix: matrix is singular");
    }
    auto cs = compound_submatrix(g, s);
    auto pivots = detail::pivot_sets(cs, engine, stats);
    if (pivots.size() != s.size()) throw singular_matrix("delta_matrix: matrix is singular");
    return UniformHypergraph(static_cast<int>(g.rows()), std::move(pivots));
}

/// Delta_{R(w)}(S), computed symbolically over F[x_{inv w}].
template <Field F>
ShiftResult delta_partial(const UniformHypergraph& s, const Permutation& w, const F& field, Engine engine = Engine::lazy) {
    detail::check_sizes(s, w);
    detail::Stopwatch clock;
    EliminationStats stats;
    auto family = delta_matrix(s, build_R(w, field), engine, &stats);
    ShiftResult r{std::move(family), Method::deterministic, true, 0, false, {}, stats};
    r.times.total_ms = clock.elapsed_ms();
    return r;
}

/// The full shift Delta(S) = Delta_{R(w0)}(S); depends only on the characteristic of F.
template <Field F>
ShiftResult delta_full(const UniformHypergraph& s, const F& field, Engine engine = Engine::lazy) {
    return delta_partial(s, Permutation::longest_element(s.n()), field, engine);
}

/// The shift by the matrix of n^2 independent indeterminates.
template <Field F>
UniformHypergraph delta_generic(const UniformHypergraph& s, const F& field, Engine engine = Engine::lazy) {
    return delta_matrix(s, generic_matrix(s.n(), field), engine);
}

struct VerifyOutcome {
    bool verified = false;
    bool short_circuit = false;
    UniformHypergraph sampled;  // Delta_{uw}(S)
    EliminationStats stats;
};

/// Decides whether Delta_{uw}(S) = Delta_{R(w)}(S) for an upper unipotent u
/// supported on inv w. The symbolic step runs over the prime field of E.
template <Field E>
VerifyOutcome verify_shift_details(const UniformHypergraph& s, const Permutation& w,
                                   const Matrix<typename E::value_type>& u, const E& field,
                                   Engine engine = Engine::lazy) {
    detail::check_sizes(s, w);
    unipotent_assignment(u, w);
    VerifyOutcome out{false, false, delta_matrix(s, u * permutation_matrix(w, field.zero()), engine), {}};
    const KSet sigma_max = out.sampled.lex_max();
    auto below = detail::ksets_below(w.size(), s.k(), sigma_max, false);
    if (out.sampled.size() == below.size() + 1) {
        out.verified = out.short_circuit = true;
        return out;
    }
    const auto base = prime_subfield(field);
    auto cs = compound_submatrix(build_R(w, base), s, std::move(below));
    auto pivots = detail::pivot_sets(cs, engine, &out.stats);
    std::vector<KSet> expected(out.sampled.faces().begin(), out.sampled.faces().end() - 1);
    out.verified = pivots == expected;
    return out;
}

template <Field E>
bool verify_shift(const UniformHypergraph& s, const Permutation& w, const Matrix<typename E::value_type>& u,
                  const E& field, Engine engine = Engine::lazy) {
    return verify_shift_details(s, w, u, field, engine).verified;
}

/// Whether a claimed family equals Delta_{R(w)}(S) over F.
template <Field F>
bool verify_claimed(const UniformHypergraph& s, const Permutation& w, const UniformHypergraph& claimed, const F& field,
                    Engine engine = Engine::lazy) {
    detail::check_sizes(s, w);
    if (claimed.size() != s.size() || claimed.k() != s.k()) throw std::invalid_argument("claimed family has the wrong cardinality");
    if (claimed.n() > w.size()) throw std::invalid_argument("claimed family exceeds the ground set");
    auto columns = detail::ksets_below(w.size(), s.k(), claimed.lex_max(), true);
    auto cs = compound_submatrix(build_R(w, field), s, std::move(columns));
    return detail::pivot_sets(cs, engine, nullptr) == claimed.faces();
}

struct LasVegasOptions {
    std::size_t samples = 0;  // 0: 1 over Q, 100 over finite fields
    std::size_t rounds = 1;
    Engine engine = Engine::lazy;
    std::uint64_t seed = 0;
};

inline std::size_t default_samples(std::uint64_t characteristic) { return characteristic == 0 ? 1 : 100; }

/// Samples random unipotents, keeps the one with the lex-least shift and
/// certifies it; throws field_too_small when no round certifies.
template <Field E>
ShiftResult delta_las_vegas(const UniformHypergraph& s, const Permutation& w, const E& field, const LasVegasOptions& opt = {}) {
    detail::check_sizes(s, w);
    const std::size_t n_samples = opt.samples == 0 ? default_samples(field.characteristic()) : opt.samples;
    if (opt.rounds == 0) throw std::invalid_argument("las vegas needs at least one round");
    detail::Stopwatch clock;
    ShiftResult result{s, Method::las_vegas, false, 0, false, {}, {}};
    const auto p = permutation_matrix(w, field.zero());
    for (std::size_t round = 0; round < opt.rounds; ++round) {
        detail::Stopwatch phase_a;
        std::optional<UniformHypergraph> best;
        std::optional<Matrix<typename E::value_type>> best_u;
        std::size_t best_index = 0;
        for (std::size_t i = 0; i < n_samples; ++i) {
            Rng rng = detail::sub_rng(opt.seed, round * n_samples + i);
            auto u = random_unipotent(w, field, rng);
            auto shift = delta_matrix(s, u * p, opt.engine, &result.stats);
            if (!best || family_lex_compare(shift, *best) < 0) {
                best = std::move(shift);
                best_u = std::move(u);
                best_index = i;
            }
        }
        result.times.sampling_ms += phase_a.elapsed_ms();
        detail::Stopwatch phase_b;
        auto outcome = verify_shift_details(s, w, *best_u, field, opt.engine);
        result.times.verification_ms += phase_b.elapsed_ms();
        result.stats.merge(outcome.stats);
        if (outcome.verified) {
            result.family = std::move(*best);
            result.certified = true;
            result.trials = round * n_samples + best_index + 1;
            result.short_circuit = outcome.short_circuit;
            result.times.total_ms = clock.elapsed_ms();
            return result;
        }
    }
    throw field_too_small("no sampled matrix verified after " + std::to_string(opt.rounds) + " round(s) of " +
                          std::to_string(n_samples) + " sample(s); field may be too small; try an extension");
}

/// A single random unipotent; uncertified, lex-greater or equal to the true shift.
template <Field E>
ShiftResult delta_monte_carlo(const UniformHypergraph& s, const Permutation& w, const E& field, std::uint64_t seed,
                              Engine engine = Engine::lazy) {
    detail::check_sizes(s, w);
    detail::Stopwatch clock;
    Rng rng = detail::sub_rng(seed, 0);
    auto u = random_unipotent(w, field, rng);
    EliminationStats stats;
    auto family = delta_matrix(s, u * permutation_matrix(w, field.zero()), engine, &stats);
    ShiftResult r{std::move(family), Method::monte_carlo, false, 1, false, {}, stats};
    r.times.total_ms = r.times.sampling_ms = clock.elapsed_ms();
    return r;
}

/// Every element of a finite field, in a fixed order.
inline std::vector<Fp> field_elements(const PrimeField& f) {
    std::vector<Fp> out;
    for (std::uint64_t i = 0; i < f.order(); ++i) out.push_back(f.element(i));
    return out;
}

inline std::vector<Fq> field_elements(const ExtField& f) {
    std::vector<Fq> out;
    const std::uint64_t p = f.characteristic();
    std::uint64_t total = 1;
    for (int i = 0; i < f.degree(); ++i) total *= p;
    for (std::uint64_t code = 0; code < total; ++code) {
        gfp_poly::Poly c(static_cast<std::size_t>(f.degree()));
        std::uint64_t rest = code;
        for (auto& x : c) {
            x = rest % p;
            rest /= p;
        }
        out.push_back(f.element(std::move(c)));
    }
    return out;
}

template <Field E>
struct GenericitySearch {
    UniformHypergraph target;  // Delta_{R(w)}(S)
    std::uint64_t assignments = 0;
    std::uint64_t verifying = 0;
    std::optional<std::map<IndexPair, typename E::value_type>> witness;
};

/// Scans every v in E^{inv w} and counts those with Delta_{U(w)(v) w}(S) = Delta_{R(w)}(S).
template <Field E>
GenericitySearch<E> search_genericity(const UniformHypergraph& s, const Permutation& w, const E& field,
                                      Engine engine = Engine::lazy) {
    detail::check_sizes(s, w);
    const auto elements = field_elements(field);
    const auto inv = inversions(w);
    GenericitySearch<E> out{delta_partial(s, w, prime_subfield(field), engine).family, 0, 0, std::nullopt};
    const auto p = permutation_matrix(w, field.zero());
    std::vector<std::size_t> digits(inv.size(), 0);
    while (true) {
        std::map<IndexPair, typename E::value_type> v;
        for (std::size_t i = 0; i < inv.size(); ++i) v.emplace(inv[i], elements[digits[i]]);
        auto g = build_U_numeric(w, v, field) * p;
        ++out.assignments;
        if (delta_matrix(s, g, engine) == out.target) {
            ++out.verifying;
            if (!out.witness) out.witness = std::move(v);
        }
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == elements.size()) digits[pos++] = 0;
        if (pos == digits.size()) break;
    }
    return out;
}

/// Shifting options shared by the hypergraph and complex front ends.
struct ShiftOptions {
    Method method = Method::deterministic;
    Engine engine = Engine::lazy;
    std::size_t samples = 0;
    std::size_t rounds = 1;
    std::uint64_t seed = 0;
};

/// Delta_{R(w)}(S) by the chosen method. The deterministic method works over
/// the prime field of E; the randomized ones sample from E.
template <Field E>
ShiftResult shift(const UniformHypergraph& s, const Permutation& w, const E& field, const ShiftOptions& opt) {
    switch (opt.method) {
    case Method::deterministic: return delta_partial(s, w, prime_subfield(field), opt.engine);
    case Method::las_vegas: return delta_las_vegas(s, w, field, LasVegasOptions{opt.samples, opt.rounds, opt.engine, opt.seed});
    case Method::monte_carlo: return delta_monte_carlo(s, w, field, opt.seed, opt.engine);
    case Method::combinatorial: break;
    }
    throw std::invalid_argument("combinatorial shifting needs a transposition, not a field");
}

struct ComplexShiftResult {
    SimplicialComplex complex;
    std::vector<int> dimensions;      // dimensions that were shifted, 0 ... dim K
    std::vector<ShiftResult> levels;  // shift of the skeleton of each such dimension
};

namespace detail {

inline SimplicialComplex assemble_complex(int n, const std::vector<UniformHypergraph>& levels) {
    for (std::size_t hi = 0; hi < levels.size(); ++hi) {
        for (std::size_t lo = 0; lo < hi; ++lo) {
            const int k = levels[lo].k();
            for (const auto& face : levels[hi]) {
                auto vs = face.vertices();
                for (const auto& local : all_ksets(static_cast<int>(vs.size()), k)) {
                    std::uint64_t mask = 0;
                    for (int idx : local.vertices()) mask |= std::uint64_t{1} << (vs[static_cast<std::size_t>(idx - 1)] - 1);
                    if (!levels[lo].contains(KSet::from_mask(mask))) {
                        throw std::logic_error("inconsistent shifted levels: " + face.to_string() + " has a missing face");
                    }
                }
            }
        }
    }
    std::vector<KSet> generators;
    for (const auto& level : levels) generators.insert(generators.end(), level.begin(), level.end());
    return SimplicialComplex(n, std::move(generators));
}

inline std::strong_ordering tuple_lex_compare(const std::vector<UniformHypergraph>& a, const std::vector<UniformHypergraph>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto c = family_lex_compare(a[i], b[i]);
        if (c != 0) return c;
    }
    return std::strong_ordering::equal;
}

} // namespace detail

/// Shifts a simplicial complex: every skeleton is shifted with the same
/// matrix, and the result is the complex those levels generate. Shifting only
/// the dimensions that hold facets is not enough once K is not Cohen-Macaulay
/// (two triangles sharing a vertex already lose an edge that way).
template <Field E>
ComplexShiftResult shift_complex(const SimplicialComplex& complex, const Permutation& w, const E& field,
                                 const ShiftOptions& opt) {
    if (complex.n() > w.size()) throw std::invalid_argument("permutation acts on fewer vertices than the complex uses");
    std::vector<int> dims;
    std::vector<UniformHypergraph> skeleta;
    for (int d = 0; d <= complex.dimension(); ++d) {
        dims.push_back(d);
        auto sk = skeleton(complex, d);
        skeleta.push_back(UniformHypergraph(w.size(), {sk.begin(), sk.end()}));
    }
    std::vector<ShiftResult> levels;
    if (opt.method == Method::deterministic) {
        for (const auto& sk : skeleta) levels.push_back(delta_partial(sk, w, prime_subfield(field), opt.engine));
    } else if (opt.method == Method::monte_carlo) {
        detail::Stopwatch clock;
        Rng rng = detail::sub_rng(opt.seed, 0);
        const auto g = random_unipotent(w, field, rng) * permutation_matrix(w, field.zero());
        for (const auto& sk : skeleta) {
            EliminationStats stats;
            auto fam = delta_matrix(sk, g, opt.engine, &stats);
            levels.push_back(ShiftResult{std::move(fam), Method::monte_carlo, false, 1, false, {}, stats});
        }
        for (auto& l : levels) l.times.total_ms = l.times.sampling_ms = clock.elapsed_ms();
    } else if (opt.method == Method::las_vegas) {
        const std::size_t n_samples = opt.samples == 0 ? default_samples(field.characteristic()) : opt.samples;
        if (opt.rounds == 0) throw std::invalid_argument("las vegas needs at least one round");
        const auto p = permutation_matrix(w, field.zero());
        bool done = false;
        for (std::size_t round = 0; round < opt.rounds && !done; ++round) {
            detail::Stopwatch phase_a;
            std::optional<std::vector<UniformHypergraph>> best;
            std::optional<Matrix<typename E::value_type>> best_u;
            std::size_t best_index = 0;
            for (std::size_t i = 0; i < n_samples; ++i) {
                Rng rng = detail::sub_rng(opt.seed, round * n_samples + i);
                auto u = random_unipotent(w, field, rng);
                const auto g = u * p;
                std::vector<UniformHypergraph> tuple;
                for (const auto& sk : skeleta) tuple.push_back(delta_matrix(sk, g, opt.engine));
                if (!best || detail::tuple_lex_compare(tuple, *best) < 0) {
                    best = std::move(tuple);
                    best_u = std::move(u);
                    best_index = i;
                }
            }
            const double sampling = phase_a.elapsed_ms();
            std::vector<ShiftResult> attempt;
            bool ok = true;
            for (std::size_t lvl = 0; lvl < skeleta.size() && ok; ++lvl) {
                detail::Stopwatch phase_b;
                auto outcome = verify_shift_details(skeleta[lvl], w, *best_u, field, opt.engine);
                ok = outcome.verified;
                ShiftResult r{(*best)[lvl], Method::las_vegas, true, round * n_samples + best_index + 1,
                              outcome.short_circuit, {}, outcome.stats};
                r.times.sampling_ms = sampling;
                r.times.verification_ms = phase_b.elapsed_ms();
                attempt.push_back(std::move(r));
            }
            if (ok) {
                levels = std::move(attempt);
                done = true;
            }
        }
        if (!done) throw field_too_small("no sampled matrix verified every level; field may be too small; try an extension");
    } else {
        throw std::invalid_argument("combinatorial shifting of complexes is not supported");
    }
    std::vector<UniformHypergraph> families;
    for (const auto& l : levels) families.push_back(l.family);
    auto shifted = detail::assemble_complex(w.size(), families);
    return {std::move(shifted), std::move(dims), std::move(levels)};
}

/// The full shift of a complex.
template <Field E>
ComplexShiftResult shift_complex(const SimplicialComplex& complex, const E& field, const ShiftOptions& opt) {
    return shift_complex(complex, Permutation::longest_element(complex.n()), field, opt);
}

} // namespace extshift

#endif
