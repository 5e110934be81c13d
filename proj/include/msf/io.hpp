#ifndef MSF_IO_HPP
#define MSF_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "msf/census.hpp"
#include "msf/enumerate.hpp"

namespace msf {

inline constexpr const char* engine_version = "1.0.0";

/// One family per line: {"n":..,"k":..,"sets":[m1,m2,...]} with masks as
/// ascending unsigned integers.
std::string family_to_jsonl_line(const TypedFamily& fam);
TypedFamily family_from_jsonl_line(const std::string& line);

std::string census_to_json(const CensusRecord& rec);
CensusRecord census_from_json(const std::string& text);

std::string claims_to_json(const Params& params,
                           const std::vector<ClaimReport>& reports);

std::string series_to_csv(const std::vector<SeriesRow>& rows);

std::string resume_token_to_json(const ResumeToken& tok);
ResumeToken resume_token_from_json(const std::string& text);

/// Cache file name for a census, keyed by params, algorithm, bound and
/// engine version.
std::string census_cache_name(const Params& params, FamilySource source,
                              int max_upper);

/// Big integers beyond 2^53 are serialized as strings.
nlohmann::json big_to_json(const mpz_class& v);

}  // namespace msf

#endif
