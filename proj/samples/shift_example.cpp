// Shifts the 4-cycle graph three ways and prints the results.
#include <extshift/rational.hpp>
#include <extshift/prime_field.hpp>
#include <extshift/ext_field.hpp>
#include <extshift/shifting.hpp>

#include <iostream>

using namespace extshift;

int main() {
    const UniformHypergraph cycle(4, {KSet{1, 3}, KSet{1, 4}, KSet{2, 3}, KSet{2, 4}});
    const Permutation w({2, 3, 4, 1});

    // symbolic: R(w) over GF(2)
    auto exact = delta_partial(cycle, w, PrimeField(2));
    std::cout << "partial shift by (1 2 3 4): " << exact.family.to_string() << "\n";

    // randomized, certified: sample over GF(4) and verify symbolically
    ShiftOptions opt;
    opt.method = Method::las_vegas;
    opt.seed = 1;
    auto lv = shift(cycle, w, ExtField(2, 2), opt);
    std::cout << "las vegas over GF(4):       " << lv.family.to_string() << " after " << lv.trials << " trial(s)\n";

    // the full shift over Q
    auto full = delta_full(cycle, RationalField());
    std::cout << "full shift over Q:          " << full.family.to_string()
              << (is_shifted(full.family) ? " (shifted)" : "") << "\n";
}
