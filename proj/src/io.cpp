#include "msf/io.hpp"

#include <nlohmann/json.hpp>

namespace msf {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

nlohmann::json big_to_json(const mpz_class& v) {
    static const mpz_class limit = mpz_class(1) << 53;
    if (abs(v) < limit) return json(v.get_si());
    return json(v.get_str());
}

std::string family_to_jsonl_line(const TypedFamily& fam) {
    ordered_json j;
    j["n"] = fam.params.n;
    j["k"] = fam.params.k;
    j["sets"] = fam.all_members();
    return j.dump();
}

TypedFamily family_from_jsonl_line(const std::string& line) {
    json j = json::parse(line);
    Params params(j.at("n").get<int>(), j.at("k").get<int>());
    std::vector<Mask> upper;
    std::vector<Mask> lower;
    for (Mask m : j.at("sets").get<std::vector<Mask>>()) {
        int c = popcount(m);
        if (c == params.k + 1)
            upper.push_back(m);
        else if (c != params.k)
            throw std::invalid_argument("family line: mask outside levels");
    }
    TypedFamily fam = complete_from_upper(params, upper);
    return fam;
}

std::string census_to_json(const CensusRecord& rec) {
    ordered_json j;
    j["engine_version"] = engine_version;
    j["n"] = rec.params.n;
    j["k"] = rec.params.k;
    j["source"] = to_string(rec.source);
    j["total"] = rec.total;
    ordered_json hist = ordered_json::object();
    for (const auto& [r, count] : rec.r_histogram)
        hist[std::to_string(r)] = count;
    j["r_histogram"] = hist;
    j["count_r_max"] = rec.count_r_max;
    j["count_r_lt"] = rec.count_r_lt;
    return j.dump(2) + "\n";
}

CensusRecord census_from_json(const std::string& text) {
    json j = json::parse(text);
    CensusRecord rec;
    rec.params = Params(j.at("n").get<int>(), j.at("k").get<int>());
    std::string src = j.at("source").get<std::string>();
    if (src == "oracle")
        rec.source = FamilySource::oracle;
    else if (src == "recursive")
        rec.source = FamilySource::recursive;
    else if (src == "bounded-upper")
        rec.source = FamilySource::bounded_upper;
    else
        throw std::invalid_argument("census: unknown source " + src);
    rec.total = j.at("total").get<std::uint64_t>();
    for (const auto& [key, value] : j.at("r_histogram").items())
        rec.r_histogram[std::stoi(key)] = value.get<std::uint64_t>();
    rec.count_r_max = j.at("count_r_max").get<std::uint64_t>();
    rec.count_r_lt = j.at("count_r_lt").get<std::uint64_t>();
    return rec;
}

std::string claims_to_json(const Params& params,
                           const std::vector<ClaimReport>& reports) {
    ordered_json j;
    j["engine_version"] = engine_version;
    j["n"] = params.n;
    j["k"] = params.k;
    ordered_json claims = ordered_json::array();
    for (const ClaimReport& rep : reports) {
        ordered_json c;
        c["id"] = rep.id;
        c["verdict"] = to_string(rep.verdict);
        c["detail"] = rep.detail;
        claims.push_back(c);
    }
    j["claims"] = claims;
    return j.dump(2) + "\n";
}

std::string series_to_csv(const std::vector<SeriesRow>& rows) {
    std::string out = "n,k,total,count_r_max,ratio,hypothesis_target,hypothesis_ratio\n";
    for (const SeriesRow& row : rows) {
        out += std::to_string(row.n) + "," + std::to_string(row.k) + ",";
        if (!row.present) {
            out += "absent,absent,absent,absent,absent\n";
            continue;
        }
        out += std::to_string(row.total) + "," + std::to_string(row.count_r_max) +
               "," + render_ratio(row.ratio) + "," + row.hypothesis_target.get_str() +
               "," + render_ratio(row.hypothesis_ratio) + "\n";
    }
    return out;
}

std::string resume_token_to_json(const ResumeToken& tok) {
    ordered_json j;
    j["version"] = tok.version;
    j["n"] = tok.params.n;
    j["k"] = tok.params.k;
    j["split_depth"] = tok.split_depth;
    j["pending_prefixes"] = tok.pending_prefixes;
    return j.dump() + "\n";
}

ResumeToken resume_token_from_json(const std::string& text) {
    json j = json::parse(text);
    ResumeToken tok;
    tok.version = j.at("version").get<int>();
    if (tok.version != 1)
        throw std::invalid_argument("unsupported resume token version");
    tok.params = Params(j.at("n").get<int>(), j.at("k").get<int>());
    tok.split_depth = j.at("split_depth").get<int>();
    tok.pending_prefixes =
        j.at("pending_prefixes").get<std::vector<std::uint32_t>>();
    return tok;
}

std::string census_cache_name(const Params& params, FamilySource source,
                              int max_upper) {
    std::string name = "census-n" + std::to_string(params.n) + "-k" +
                       std::to_string(params.k) + "-" + to_string(source);
    if (source == FamilySource::bounded_upper)
        name += "-mu" + std::to_string(max_upper);
    return name + "-v" + engine_version + ".json";
}

}  // namespace msf
