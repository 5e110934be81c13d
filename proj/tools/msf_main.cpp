#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "msf/census.hpp"
#include "msf/enumerate.hpp"
#include "msf/io.hpp"

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

msf::FamilySource parse_algo(const std::string& algo) {
    if (algo == "oracle") return msf::FamilySource::oracle;
    if (algo == "recursive") return msf::FamilySource::recursive;
    if (algo == "bounded-upper") return msf::FamilySource::bounded_upper;
    throw CLI::ValidationError("--algo must be oracle, recursive or bounded-upper");
}

struct EnumerationOutcome {
    msf::FamilySet families;
    std::optional<msf::ResumeToken> resume;
};

EnumerationOutcome enumerate_families(const msf::Params& params,
                                      msf::FamilySource algo, int max_upper,
                                      int jobs, std::optional<double> budget,
                                      std::optional<msf::ResumeToken> resume,
                                      bool widen_pool) {
    EnumerationOutcome out;
    switch (algo) {
        case msf::FamilySource::oracle: {
            msf::OracleOptions opts;
            opts.jobs = jobs;
            opts.time_budget_seconds = budget;
            opts.resume_from = std::move(resume);
            msf::OracleResult res = msf::enumerate_oracle(params, opts);
            out.families = std::move(res.families);
            out.resume = std::move(res.resume);
            break;
        }
        case msf::FamilySource::recursive:
            out.families = msf::enumerate_recursive(params, widen_pool).families;
            break;
        case msf::FamilySource::bounded_upper:
            out.families = msf::enumerate_bounded_upper(params, max_upper);
            break;
    }
    return out;
}

std::string default_cache_dir() {
    if (const char* env = std::getenv("MSF_CACHE_DIR")) return env;
    return "";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Maximal Sperner family enumeration and verification"};
    app.require_subcommand(1);

    int n = 0, k = 0, jobs = 1, max_upper = 3;
    int n_min = 0, n_max = 0;
    std::string algo = "oracle";
    std::string out_path, report_path, csv_path, resume_path;
    std::string cache_dir = default_cache_dir();
    double time_budget = 0.0;
    bool widen_pool = false;

    auto add_common = [&](CLI::App* cmd, bool needs_nk) {
        if (needs_nk) {
            cmd->add_option("--n", n, "ground-set size")->required();
            cmd->add_option("--k", k, "lower level size")->required();
        }
        cmd->add_option("--jobs", jobs, "worker count")->check(CLI::PositiveNumber);
        cmd->add_option("--cache-dir", cache_dir, "census cache directory");
    };

    CLI::App* cmd_enum = app.add_subcommand("enumerate", "write families as JSONL");
    add_common(cmd_enum, true);
    cmd_enum->add_option("--algo", algo, "oracle | recursive | bounded-upper");
    cmd_enum->add_option("--max-upper", max_upper, "bound for bounded-upper");
    cmd_enum->add_option("--time-budget", time_budget, "wall-time budget, seconds");
    cmd_enum->add_option("--resume", resume_path, "resume token file");
    cmd_enum->add_flag("--widen-pool", widen_pool,
                       "widen the recursive closure pool to all level masks");
    cmd_enum->add_option("--out", out_path, "output JSONL path")->required();

    CLI::App* cmd_census = app.add_subcommand("census", "write a census document");
    add_common(cmd_census, true);
    cmd_census->add_option("--algo", algo, "oracle | recursive | bounded-upper");
    cmd_census->add_option("--max-upper", max_upper, "bound for bounded-upper");
    cmd_census->add_option("--out", out_path, "output JSON path")->required();

    CLI::App* cmd_verify = app.add_subcommand("verify", "run the claim ledger");
    add_common(cmd_verify, true);
    cmd_verify->add_option("--algo", algo, "oracle | recursive | bounded-upper");
    cmd_verify->add_option("--max-upper", max_upper, "bound for bounded-upper");
    cmd_verify->add_option("--report", report_path, "claim report JSON path")
        ->required();

    CLI::App* cmd_series = app.add_subcommand("series", "typicality series CSV");
    add_common(cmd_series, false);
    cmd_series->add_option("--k", k, "lower level size")->required();
    cmd_series->add_option("--n-min", n_min, "first n")->required();
    cmd_series->add_option("--n-max", n_max, "last n")->required();
    cmd_series->add_option("--csv", csv_path, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_enum) {
            msf::Params params(n, k);
            msf::FamilySource src = parse_algo(algo);
            std::optional<double> budget;
            if (time_budget > 0) budget = time_budget;
            std::optional<msf::ResumeToken> resume;
            if (!resume_path.empty())
                resume = msf::resume_token_from_json(read_file(resume_path));
            EnumerationOutcome res = enumerate_families(
                params, src, max_upper, jobs, budget, std::move(resume), widen_pool);
            std::string body;
            for (const msf::TypedFamily& fam : res.families.families)
                body += msf::family_to_jsonl_line(fam) + "\n";
            write_file(out_path, body);
            if (res.resume) {
                std::string token_path = out_path + ".resume";
                write_file(token_path, msf::resume_token_to_json(*res.resume));
                std::cerr << "time budget exhausted; partial results in " << out_path
                          << ", resume token in " << token_path << "\n";
                return 3;
            }
            std::cerr << "wrote " << res.families.families.size() << " families\n";
            return 0;
        }

        if (*cmd_census) {
            msf::Params params(n, k);
            msf::FamilySource src = parse_algo(algo);
            fs::path cache_file;
            if (!cache_dir.empty()) {
                cache_file = fs::path(cache_dir) /
                             msf::census_cache_name(params, src, max_upper);
                if (fs::exists(cache_file)) {
                    write_file(out_path, read_file(cache_file));
                    std::cerr << "census served from cache\n";
                    return 0;
                }
            }
            EnumerationOutcome res = enumerate_families(params, src, max_upper, jobs,
                                                        std::nullopt, std::nullopt,
                                                        false);
            msf::CensusRecord rec = msf::run_census(params, res.families, jobs);
            std::string doc = msf::census_to_json(rec);
            write_file(out_path, doc);
            if (!cache_file.empty()) write_file(cache_file, doc);
            std::cerr << "census: total " << rec.total << " in "
                      << rec.wall_time_seconds << "s fold\n";
            return 0;
        }

        if (*cmd_verify) {
            msf::Params params(n, k);
            msf::FamilySource src = parse_algo(algo);
            EnumerationOutcome res = enumerate_families(params, src, max_upper, jobs,
                                                        std::nullopt, std::nullopt,
                                                        false);
            msf::CensusRecord rec = msf::run_census(params, res.families, jobs);
            std::vector<msf::ClaimReport> reports =
                msf::verify_claims(rec, res.families);
            write_file(report_path, msf::claims_to_json(params, reports));
            bool failed = false;
            for (const msf::ClaimReport& rep : reports) {
                std::cerr << rep.id << ": " << msf::to_string(rep.verdict) << "\n";
                if (rep.verdict == msf::Verdict::fail) failed = true;
            }
            return failed ? 1 : 0;
        }

        if (*cmd_series) {
            std::vector<std::optional<msf::CensusRecord>> censuses;
            for (int nn = n_min; nn <= n_max; ++nn) {
                msf::Params params(nn, k);
                fs::path cache_file;
                if (!cache_dir.empty()) {
                    cache_file = fs::path(cache_dir) /
                                 msf::census_cache_name(params,
                                                        msf::FamilySource::oracle, 0);
                    if (fs::exists(cache_file)) {
                        censuses.push_back(msf::census_from_json(read_file(cache_file)));
                        continue;
                    }
                }
                msf::OracleOptions opts;
                opts.jobs = jobs;
                msf::OracleResult res = msf::enumerate_oracle(params, opts);
                msf::CensusRecord rec = msf::run_census(params, res.families, jobs);
                if (!cache_file.empty())
                    write_file(cache_file, msf::census_to_json(rec));
                censuses.push_back(std::move(rec));
            }
            auto rows = msf::typicality_series(k, n_min, n_max, censuses);
            write_file(csv_path, msf::series_to_csv(rows));
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
