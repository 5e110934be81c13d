#ifndef MSF_PROFILE_HPP
#define MSF_PROFILE_HPP

#include <optional>
#include <vector>

#include "msf/core.hpp"

namespace msf {

/// Per-element parameters of a family. Index 0 corresponds to a_1.
/// p[i] counts lower members avoiding a_{i+1}, q[i] counts upper members
/// containing it, r[i] = p[i] + q[i], r_max = max_i r[i].
struct ParameterProfile {
    std::vector<int> p;
    std::vector<int> q;
    std::vector<int> r;
    int r_max = 0;
    std::vector<int> argmax;  // 1-based indices attaining r_max

    int r_at(int i) const { return r[i - 1]; }  // i is 1-based
};

ParameterProfile parameter_profile(const Params& params,
                                   const TypedFamily& family);

/// The two slice sets behind the r_i identity: k-masks avoiding a_i that
/// are covered by the upper level, and upper members containing a_i.
struct Theorem6Slices {
    std::vector<Mask> covered_lower_i;
    std::vector<Mask> upper_with_i;
};

Theorem6Slices theorem6_slices(const Params& params, const TypedFamily& family,
                               int i);

/// r_i = C(n-1,k) - |covered_lower_i| + |upper_with_i| for every i.
bool check_theorem6_identity(const Params& params, const TypedFamily& family);

/// For each i, the lexicographically least k-mask A with a_i not in A,
/// A not in F and A | {a_i} not in F; absent when no such mask exists.
std::vector<std::optional<Mask>> theorem1_witnesses(const Params& params,
                                                    const TypedFamily& family);

}  // namespace msf

#endif
