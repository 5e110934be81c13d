#ifndef MSF_TEST_HELPERS_HPP
#define MSF_TEST_HELPERS_HPP

#include <initializer_list>
#include <random>
#include <vector>

#include "msf/core.hpp"

namespace msf::test {

/// Mask from 1-based element indices: mask({1,2}) = {a_1,a_2}.
inline Mask mask(std::initializer_list<int> elements) {
    Mask m = 0;
    for (int e : elements) m |= Mask{1} << (e - 1);
    return m;
}

/// Deterministic sample of `count` subsets of the given level, as mask lists.
inline std::vector<std::vector<Mask>> sample_uppers(const Params& params,
                                                    int count,
                                                    std::uint32_t seed) {
    std::mt19937 rng(seed);
    std::vector<Mask> level = level_sets(params, params.k + 1);
    std::vector<std::vector<Mask>> out;
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < count; ++i) {
        std::vector<Mask> upper;
        for (Mask b : level)
            if (coin(rng)) upper.push_back(b);
        out.push_back(std::move(upper));
    }
    return out;
}

}  // namespace msf::test

#endif
