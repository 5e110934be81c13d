#ifndef MSF_CORE_HPP
#define MSF_CORE_HPP

#include <cstdint>
#include <bit>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace msf {

/// One subset of the ground set as an n-bit mask. Element a_i is bit i-1;
/// the pivot a_n is the highest bit.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

/// Ground-set size n and lower level size k for type-(k,k+1) families.
struct Params {
    int n = 0;
    int k = 0;

    static constexpr int max_n = 20;

    Params() = default;
    Params(int n_, int k_) : n(n_), k(k_) { validate(); }

    void validate() const {
        if (n < 3) throw std::invalid_argument("n must be at least 3");
        if (n > max_n)
            throw std::invalid_argument("n exceeds mask width cap of " +
                                        std::to_string(max_n));
        if (k < 1) throw std::invalid_argument("k must be at least 1");
        if (k >= (n + 1) / 2)
            throw std::invalid_argument("k must be below ceil(n/2)");
    }

    Mask full_mask() const { return (Mask{1} << n) - 1; }
    Mask pivot() const { return Mask{1} << (n - 1); }

    bool operator==(const Params&) const = default;
};

/// Exact C(n,k); zero when k > n.
mpz_class binomial(int n, int k);

/// C(n,k) in machine precision; throws if the value does not fit.
std::uint64_t binomial_u64(int n, int k);

/// All masks of the given cardinality over n elements, strictly ascending.
std::vector<Mask> level_sets(const Params& params, int size);

inline bool subset_of(Mask a, Mask b) { return (a & b) == a; }

/// True iff A and B are comparable under inclusion.
inline bool comparable(Mask a, Mask b) {
    return subset_of(a, b) || subset_of(b, a);
}

/// True iff no two distinct members are comparable.
bool is_sperner(const std::vector<Mask>& family);

/// A type-(k,k+1) family split into lower level (all size k) and upper
/// level (all size k+1), each strictly ascending by mask value.
struct TypedFamily {
    Params params;
    std::vector<Mask> lower;
    std::vector<Mask> upper;

    /// All members merged into one strictly ascending list.
    std::vector<Mask> all_members() const;

    bool operator==(const TypedFamily&) const = default;
    bool operator<(const TypedFamily& o) const {
        if (upper != o.upper) return upper < o.upper;
        return lower < o.lower;
    }
};

/// Reference maximality check: full scan over all 2^n subsets of S.
/// Throws if the family is not Sperner.
bool is_maximal_sperner(const Params& params, const std::vector<Mask>& family);

/// Lower level forced by an upper level: all k-masks contained in no upper
/// member. Throws if some upper mask has the wrong cardinality.
TypedFamily complete_from_upper(const Params& params,
                                const std::vector<Mask>& upper);

/// Two-level maximality criterion: every (k+1)-mask outside `upper` must
/// have at least one k-subset uncovered by `upper`.
bool is_valid_upper(const Params& params, const std::vector<Mask>& upper);

/// Membership bitset over all 2^n masks, for O(1) family lookups.
class MaskSet {
public:
    explicit MaskSet(int n) : bits_(std::size_t{1} << n, false) {}
    MaskSet(int n, const std::vector<Mask>& masks) : MaskSet(n) {
        for (Mask m : masks) bits_[m] = true;
    }
    bool contains(Mask m) const { return bits_[m]; }
    void insert(Mask m) { bits_[m] = true; }

private:
    std::vector<bool> bits_;
};

}  // namespace msf

#endif
