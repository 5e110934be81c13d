#ifndef MSF_ENUMERATE_HPP
#define MSF_ENUMERATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "msf/core.hpp"

namespace msf {

enum class FamilySource { oracle, recursive, bounded_upper };

std::string to_string(FamilySource s);

/// Deduplicated collection of maximal Sperner families in canonical order.
struct FamilySet {
    Params params;
    std::vector<TypedFamily> families;
    FamilySource source = FamilySource::oracle;
};

/// The unique family with r_n = 0: all (k+1)-masks avoiding the pivot a_n
/// plus all k-masks containing it.
TypedFamily seed_family(const Params& params);

/// Candidate pool for one transformation step.
///   m_sets: k-masks avoiding a_n outside the lower level (M)
///   l_sets: (k+1)-masks containing a_n outside the upper level (L)
///   m_plus: M with a_n added; l_minus: L with a_n removed
struct PsiCandidates {
    std::vector<Mask> m_sets;
    std::vector<Mask> l_sets;
    std::vector<Mask> m_plus;
    std::vector<Mask> l_minus;
    std::vector<Mask> all_candidates;  // deduplicated union, ascending
};

/// Throws std::domain_error("saturated") when r_n already equals C(n-1,k);
/// such families are left unchanged by the construction.
PsiCandidates psi_candidates(const Params& params, const TypedFamily& family);

struct TransformResult {
    TypedFamily family;
    bool closure_incomplete = false;  // result failed the full maximality check
};

/// Add x, drop members comparable with x, then re-add candidates from the
/// entry-time pool (ascending mask order, repeated to fixpoint) whenever
/// incomparable with every current member. When widen_pool is set the
/// closure scans all k- and (k+1)-masks instead of the entry-time pool.
TransformResult transform(const Params& params, const TypedFamily& family,
                          Mask x, bool widen_pool = false);

/// Count of distinct families first produced at step t.
struct GenerationTrace {
    int generation = 0;
    std::uint64_t families_at_step = 0;
    std::uint64_t total_distinct = 0;
};

struct RecursiveResult {
    FamilySet families;
    std::vector<GenerationTrace> trace;
    std::vector<TypedFamily> closure_failures;  // non-maximal transform outputs
};

/// Breadth-first fixpoint iteration of the construction: generation 1 is
/// the seed; each later generation applies transform over every candidate
/// of every unsaturated family. Stops at fixpoint or t > C(n-1,k).
RecursiveResult enumerate_recursive(const Params& params,
                                    bool widen_pool = false);

/// Opaque serialized DFS frontier for resuming a budget-limited run.
struct ResumeToken {
    int version = 1;
    Params params;
    int split_depth = 0;
    std::vector<std::uint32_t> pending_prefixes;  // decision bitmasks, ascending
};

struct OracleResult {
    FamilySet families;
    std::optional<ResumeToken> resume;  // set when the budget ran out
};

struct OracleOptions {
    int jobs = 1;
    std::optional<double> time_budget_seconds;
    std::optional<ResumeToken> resume_from;
};

/// Ground-truth enumerator: depth-first include/exclude over the level-(k+1)
/// masks in ascending order. A branch dies as soon as an excluded mask has
/// every k-subset covered by included ones, since coverage only grows.
OracleResult enumerate_oracle(const Params& params, const OracleOptions& opts = {});

/// Serial reference implementation without splitting, used by tests and the
/// benchmark as the baseline for the parallel path.
FamilySet enumerate_oracle_serial(const Params& params);

/// All maximal families whose upper level has at most max_upper members.
FamilySet enumerate_bounded_upper(const Params& params, int max_upper);

}  // namespace msf

#endif
