#include "msf/core.hpp"

#include <algorithm>

namespace msf {

mpz_class binomial(int n, int k) {
    if (k < 0 || n < 0) throw std::invalid_argument("binomial: negative input");
    if (k > n) return 0;
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

std::uint64_t binomial_u64(int n, int k) {
    mpz_class v = binomial(n, k);
    if (!v.fits_ulong_p())
        throw std::overflow_error("binomial_u64: value does not fit");
    return mpz_get_ui(v.get_mpz_t());
}

std::vector<Mask> level_sets(const Params& params, int size) {
    if (size < 0) throw std::invalid_argument("level_sets: negative size");
    std::vector<Mask> out;
    if (size > params.n) return out;
    if (size == 0) {
        out.push_back(0);
        return out;
    }
    // Gosper's hack walks same-popcount masks in ascending order.
    Mask m = (Mask{1} << size) - 1;
    Mask limit = Mask{1} << params.n;
    while (m < limit) {
        out.push_back(m);
        Mask c = m & -m;
        Mask r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    return out;
}

bool is_sperner(const std::vector<Mask>& family) {
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (comparable(family[i], family[j])) return false;
    return true;
}

std::vector<Mask> TypedFamily::all_members() const {
    std::vector<Mask> out;
    out.reserve(lower.size() + upper.size());
    std::merge(lower.begin(), lower.end(), upper.begin(), upper.end(),
               std::back_inserter(out));
    return out;
}

bool is_maximal_sperner(const Params& params, const std::vector<Mask>& family) {
    if (!is_sperner(family))
        throw std::invalid_argument("is_maximal_sperner: family is not Sperner");
    MaskSet members(params.n, family);
    Mask limit = Mask{1} << params.n;
    for (Mask a = 0; a < limit; ++a) {
        if (members.contains(a)) continue;
        bool covered = false;
        for (Mask m : family) {
            if (comparable(a, m)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

TypedFamily complete_from_upper(const Params& params,
                                const std::vector<Mask>& upper) {
    for (Mask b : upper)
        if (popcount(b) != params.k + 1)
            throw std::invalid_argument(
                "complete_from_upper: upper mask of wrong cardinality");
    TypedFamily fam;
    fam.params = params;
    fam.upper = upper;
    std::sort(fam.upper.begin(), fam.upper.end());
    fam.upper.erase(std::unique(fam.upper.begin(), fam.upper.end()),
                    fam.upper.end());
    for (Mask a : level_sets(params, params.k)) {
        bool covered = false;
        for (Mask b : fam.upper) {
            if (subset_of(a, b)) {
                covered = true;
                break;
            }
        }
        if (!covered) fam.lower.push_back(a);
    }
    return fam;
}

bool is_valid_upper(const Params& params, const std::vector<Mask>& upper) {
    MaskSet in_upper(params.n, upper);
    // k-subsets covered by some included member.
    MaskSet covered(params.n);
    for (Mask b : upper)
        for (int i = 0; i < params.n; ++i)
            if (b & (Mask{1} << i)) covered.insert(b & ~(Mask{1} << i));
    for (Mask b : level_sets(params, params.k + 1)) {
        if (in_upper.contains(b)) continue;
        bool has_uncovered = false;
        for (int i = 0; i < params.n; ++i) {
            Mask bit = Mask{1} << i;
            if ((b & bit) && !covered.contains(b & ~bit)) {
                has_uncovered = true;
                break;
            }
        }
        if (!has_uncovered) return false;
    }
    return true;
}

}  // namespace msf
