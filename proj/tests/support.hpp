#ifndef EXTSHIFT_TESTS_SUPPORT_HPP
#define EXTSHIFT_TESTS_SUPPORT_HPP

#include <extshift/hypergraph.hpp>
#include <extshift/permutation.hpp>

#include <algorithm>
#include <random>
#include <vector>

namespace support {

using extshift::KSet;
using extshift::UniformHypergraph;

/// A random nonempty k-uniform family on [n] with at most max_size faces.
inline UniformHypergraph random_family(int n, int k, std::size_t max_size, std::mt19937_64& rng) {
    auto all = extshift::all_ksets(n, k);
    std::shuffle(all.begin(), all.end(), rng);
    std::uniform_int_distribution<std::size_t> size(1, std::min(max_size, all.size()));
    all.resize(size(rng));
    return UniformHypergraph(n, std::move(all));
}

inline extshift::Permutation random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(v.begin(), v.end(), rng);
    return extshift::Permutation(std::move(v));
}

/// Shiftedness straight from the definition: every set dominated by a face is a face.
inline bool shifted_by_definition(const UniformHypergraph& s) {
    for (const auto& sigma : s) {
        for (const auto& rho : extshift::all_ksets(s.n(), s.k())) {
            if (extshift::dominates_leq(rho, sigma) && !s.contains(rho)) return false;
        }
    }
    return true;
}

} // namespace support

#endif
