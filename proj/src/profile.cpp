#include "msf/profile.hpp"

namespace msf {

ParameterProfile parameter_profile(const Params& params,
                                   const TypedFamily& family) {
    ParameterProfile prof;
    prof.p.assign(params.n, 0);
    prof.q.assign(params.n, 0);
    prof.r.assign(params.n, 0);
    for (int i = 0; i < params.n; ++i) {
        Mask bit = Mask{1} << i;
        for (Mask a : family.lower)
            if (!(a & bit)) ++prof.p[i];
        for (Mask b : family.upper)
            if (b & bit) ++prof.q[i];
        prof.r[i] = prof.p[i] + prof.q[i];
    }
    prof.r_max = 0;
    for (int v : prof.r) prof.r_max = std::max(prof.r_max, v);
    for (int i = 0; i < params.n; ++i)
        if (prof.r[i] == prof.r_max) prof.argmax.push_back(i + 1);
    return prof;
}

Theorem6Slices theorem6_slices(const Params& params, const TypedFamily& family,
                               int i) {
    if (i < 1 || i > params.n)
        throw std::invalid_argument("theorem6_slices: index out of range");
    Theorem6Slices out;
    Mask bit = Mask{1} << (i - 1);
    for (Mask a : level_sets(params, params.k)) {
        if (a & bit) continue;
        for (Mask b : family.upper) {
            if (subset_of(a, b)) {
                out.covered_lower_i.push_back(a);
                break;
            }
        }
    }
    for (Mask b : family.upper)
        if (b & bit) out.upper_with_i.push_back(b);
    return out;
}

bool check_theorem6_identity(const Params& params, const TypedFamily& family) {
    ParameterProfile prof = parameter_profile(params, family);
    std::uint64_t cnk = binomial_u64(params.n - 1, params.k);
    for (int i = 1; i <= params.n; ++i) {
        Theorem6Slices s = theorem6_slices(params, family, i);
        std::int64_t rhs = static_cast<std::int64_t>(cnk) -
                           static_cast<std::int64_t>(s.covered_lower_i.size()) +
                           static_cast<std::int64_t>(s.upper_with_i.size());
        if (prof.r_at(i) != rhs) return false;
    }
    return true;
}

std::vector<std::optional<Mask>> theorem1_witnesses(const Params& params,
                                                    const TypedFamily& family) {
    MaskSet members(params.n, family.all_members());
    std::vector<std::optional<Mask>> out(params.n);
    std::vector<Mask> ks = level_sets(params, params.k);
    for (int i = 0; i < params.n; ++i) {
        Mask bit = Mask{1} << i;
        for (Mask a : ks) {
            if (a & bit) continue;
            if (!members.contains(a) && !members.contains(a | bit)) {
                out[i] = a;
                break;
            }
        }
    }
    return out;
}

}  // namespace msf
