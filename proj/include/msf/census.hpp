#ifndef MSF_CENSUS_HPP
#define MSF_CENSUS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "msf/enumerate.hpp"

namespace msf {

/// Exhaustive enumeration result for one (n,k): total count, histogram of
/// r(F) values, and the split at r = C(n-1,k).
struct CensusRecord {
    Params params;
    FamilySource source = FamilySource::oracle;
    std::uint64_t total = 0;
    std::map<int, std::uint64_t> r_histogram;
    std::uint64_t count_r_max = 0;  // families with r = C(n-1,k)
    std::uint64_t count_r_lt = 0;   // families with r < C(n-1,k)
    double wall_time_seconds = 0.0;
};

CensusRecord run_census(const Params& params, const FamilySet& families,
                        int jobs = 1);

/// Serial reference fold, kept as the baseline for the parallel path.
CensusRecord run_census_serial(const Params& params, const FamilySet& families);

/// All applicable closed-form values for (n,k), exact arithmetic.
std::map<std::string, mpz_class> formula_values(const Params& params);

enum class Verdict { pass, fail, not_applicable, reported };

std::string to_string(Verdict v);

struct ClaimReport {
    std::string id;
    Verdict verdict = Verdict::not_applicable;
    std::string detail;
};

/// One report per registered claim; family-by-family theorem checks are
/// pass/fail, count claims compare against the census, asymptotic claims
/// are always "reported" with the measured numbers.
std::vector<ClaimReport> verify_claims(const CensusRecord& census,
                                       const FamilySet& families);

struct SeriesRow {
    int n = 0;
    int k = 0;
    bool present = false;
    std::uint64_t total = 0;
    std::uint64_t count_r_max = 0;
    mpq_class ratio;             // count_r_max / total
    mpz_class hypothesis_target; // (k+1) * 2^C(n-1,k)
    mpq_class hypothesis_ratio;  // total / hypothesis_target
};

std::vector<SeriesRow> typicality_series(
    int k, int n_min, int n_max,
    const std::vector<std::optional<CensusRecord>>& censuses);

/// Exact rational rendered with six decimal places, round half up.
std::string render_ratio(const mpq_class& q);

}  // namespace msf

#endif
