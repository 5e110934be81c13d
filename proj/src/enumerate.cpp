#include "msf/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "msf/profile.hpp"

namespace msf {

std::string to_string(FamilySource s) {
    switch (s) {
        case FamilySource::oracle: return "oracle";
        case FamilySource::recursive: return "recursive";
        case FamilySource::bounded_upper: return "bounded-upper";
    }
    return "?";
}

TypedFamily seed_family(const Params& params) {
    TypedFamily fam;
    fam.params = params;
    Mask pivot = params.pivot();
    for (Mask b : level_sets(params, params.k + 1))
        if (!(b & pivot)) fam.upper.push_back(b);
    for (Mask a : level_sets(params, params.k))
        if (a & pivot) fam.lower.push_back(a);
    return fam;
}

PsiCandidates psi_candidates(const Params& params, const TypedFamily& family) {
    Mask pivot = params.pivot();
    ParameterProfile prof = parameter_profile(params, family);
    if (prof.r_at(params.n) ==
        static_cast<int>(binomial_u64(params.n - 1, params.k)))
        throw std::domain_error("saturated");
    MaskSet members(params.n, family.all_members());
    PsiCandidates psi;
    for (Mask a : level_sets(params, params.k))
        if (!(a & pivot) && !members.contains(a)) psi.m_sets.push_back(a);
    for (Mask b : level_sets(params, params.k + 1))
        if ((b & pivot) && !members.contains(b)) psi.l_sets.push_back(b);
    for (Mask a : psi.m_sets) psi.m_plus.push_back(a | pivot);
    for (Mask b : psi.l_sets) psi.l_minus.push_back(b & ~pivot);
    std::vector<Mask> all;
    all.insert(all.end(), psi.m_sets.begin(), psi.m_sets.end());
    all.insert(all.end(), psi.l_sets.begin(), psi.l_sets.end());
    all.insert(all.end(), psi.m_plus.begin(), psi.m_plus.end());
    all.insert(all.end(), psi.l_minus.begin(), psi.l_minus.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    psi.all_candidates = std::move(all);
    return psi;
}

namespace {

TypedFamily split_by_level(const Params& params, std::vector<Mask> members) {
    std::sort(members.begin(), members.end());
    TypedFamily fam;
    fam.params = params;
    for (Mask m : members) {
        int c = popcount(m);
        if (c == params.k)
            fam.lower.push_back(m);
        else if (c == params.k + 1)
            fam.upper.push_back(m);
        else
            throw std::logic_error("member outside levels k, k+1");
    }
    return fam;
}

}  // namespace

TransformResult transform(const Params& params, const TypedFamily& family,
                          Mask x, bool widen_pool) {
    PsiCandidates psi = psi_candidates(params, family);
    if (!std::binary_search(psi.all_candidates.begin(),
                            psi.all_candidates.end(), x))
        throw std::invalid_argument("transform: x is not a psi candidate");

    std::vector<Mask> pool;
    if (widen_pool) {
        pool = level_sets(params, params.k);
        std::vector<Mask> up = level_sets(params, params.k + 1);
        pool.insert(pool.end(), up.begin(), up.end());
        std::sort(pool.begin(), pool.end());
    } else {
        pool = psi.all_candidates;
    }

    std::vector<Mask> cur;
    for (Mask m : family.all_members())
        if (!comparable(m, x)) cur.push_back(m);
    cur.push_back(x);

    MaskSet in_cur(params.n, cur);
    bool changed = true;
    while (changed) {
        changed = false;
        for (Mask c : pool) {
            if (in_cur.contains(c)) continue;
            bool free = true;
            for (Mask m : cur) {
                if (comparable(c, m)) {
                    free = false;
                    break;
                }
            }
            if (free) {
                cur.push_back(c);
                in_cur.insert(c);
                changed = true;
            }
        }
    }

    TransformResult res;
    res.family = split_by_level(params, std::move(cur));
    res.closure_incomplete =
        !is_maximal_sperner(params, res.family.all_members());
    return res;
}

RecursiveResult enumerate_recursive(const Params& params, bool widen_pool) {
    int cnk = static_cast<int>(binomial_u64(params.n - 1, params.k));
    RecursiveResult out;
    out.families.params = params;
    out.families.source = FamilySource::recursive;

    std::set<std::vector<Mask>> known;  // keyed by upper level
    std::set<std::vector<Mask>> failed_seen;
    std::vector<TypedFamily> frontier;

    TypedFamily seed = seed_family(params);
    known.insert(seed.upper);
    out.families.families.push_back(seed);
    frontier.push_back(seed);
    out.trace.push_back({1, 1, 1});

    int t = 1;
    while (!frontier.empty() && t <= cnk) {
        std::set<TypedFamily> fresh;
        for (const TypedFamily& fam : frontier) {
            ParameterProfile prof = parameter_profile(params, fam);
            if (prof.r_at(params.n) == cnk) continue;  // left unchanged
            PsiCandidates psi = psi_candidates(params, fam);
            for (Mask x : psi.all_candidates) {
                TransformResult res = transform(params, fam, x, widen_pool);
                if (res.closure_incomplete) {
                    if (failed_seen.insert(res.family.upper).second)
                        out.closure_failures.push_back(res.family);
                    continue;
                }
                if (!known.contains(res.family.upper)) fresh.insert(res.family);
            }
        }
        ++t;
        frontier.clear();
        for (const TypedFamily& fam : fresh) {
            known.insert(fam.upper);
            out.families.families.push_back(fam);
            frontier.push_back(fam);
        }
        out.trace.push_back({t, static_cast<std::uint64_t>(fresh.size()),
                             static_cast<std::uint64_t>(known.size())});
        if (fresh.empty()) break;
    }

    std::sort(out.families.families.begin(), out.families.families.end());
    return out;
}

namespace {

// Static structure of one (n,k) search: the level-(k+1) masks, their
// k-subsets, and the (k+1)-supersets of every k-mask.
struct SearchSpace {
    Params params;
    std::vector<Mask> uppers;                       // ascending
    std::vector<Mask> kmasks;                       // ascending
    std::vector<std::vector<int>> subsets_of;       // upper idx -> k idxs
    std::vector<std::vector<int>> supersets_of;     // k idx -> upper idxs

    explicit SearchSpace(const Params& p) : params(p) {
        uppers = level_sets(p, p.k + 1);
        kmasks = level_sets(p, p.k);
        std::map<Mask, int> kindex;
        for (int i = 0; i < static_cast<int>(kmasks.size()); ++i)
            kindex[kmasks[i]] = i;
        subsets_of.resize(uppers.size());
        supersets_of.resize(kmasks.size());
        for (int b = 0; b < static_cast<int>(uppers.size()); ++b) {
            for (int i = 0; i < p.n; ++i) {
                Mask bit = Mask{1} << i;
                if (uppers[b] & bit) {
                    int s = kindex.at(uppers[b] & ~bit);
                    subsets_of[b].push_back(s);
                    supersets_of[s].push_back(b);
                }
            }
        }
    }
};

// Incremental include/exclude state over the search space. Coverage counts
// only grow along a branch, so an excluded upper whose k-subsets are all
// covered kills the branch permanently.
struct DfsState {
    const SearchSpace& space;
    std::vector<int> cover_count;     // per k-mask
    std::vector<int> uncovered;       // per upper: k-subsets with count 0
    std::vector<char> excluded;
    std::vector<int> included;

    explicit DfsState(const SearchSpace& s)
        : space(s),
          cover_count(s.kmasks.size(), 0),
          excluded(s.uppers.size(), 0) {
        uncovered.reserve(s.uppers.size());
        for (const auto& subs : s.subsets_of)
            uncovered.push_back(static_cast<int>(subs.size()));
    }

    // Returns false when a previously excluded upper became fully covered.
    bool include(int b) {
        included.push_back(b);
        bool ok = true;
        for (int s : space.subsets_of[b]) {
            if (cover_count[s]++ == 0) {
                for (int t : space.supersets_of[s]) {
                    if (--uncovered[t] == 0 && excluded[t]) ok = false;
                }
            }
        }
        return ok;
    }

    void undo_include(int b) {
        included.pop_back();
        for (int s : space.subsets_of[b]) {
            if (--cover_count[s] == 0)
                for (int t : space.supersets_of[s]) ++uncovered[t];
        }
    }

    // Returns false when b is already fully covered (can never stay out).
    bool exclude(int b) {
        excluded[b] = 1;
        return uncovered[b] > 0;
    }

    void undo_exclude(int b) { excluded[b] = 0; }
};

void dfs(DfsState& st, int pos, std::vector<std::vector<Mask>>& out) {
    int total = static_cast<int>(st.space.uppers.size());
    if (pos == total) {
        std::vector<Mask> upper;
        upper.reserve(st.included.size());
        for (int b : st.included) upper.push_back(st.space.uppers[b]);
        out.push_back(std::move(upper));
        return;
    }
    if (st.exclude(pos)) dfs(st, pos + 1, out);
    st.undo_exclude(pos);
    if (st.include(pos)) dfs(st, pos + 1, out);
    st.undo_include(pos);
}

// Viable decision prefixes of the first `depth` positions, in ascending
// bitmask order (bit i set = include position i).
std::vector<std::uint32_t> viable_prefixes(const SearchSpace& space, int depth) {
    std::vector<std::uint32_t> out;
    DfsState st(space);
    auto rec = [&](auto&& self, int pos, std::uint32_t bits) -> void {
        if (pos == depth) {
            out.push_back(bits);
            return;
        }
        if (st.exclude(pos)) self(self, pos + 1, bits);
        st.undo_exclude(pos);
        if (st.include(pos)) self(self, pos + 1, bits | (1u << pos));
        st.undo_include(pos);
    };
    rec(rec, 0, 0);
    std::sort(out.begin(), out.end());
    return out;
}

// Replay a prefix and run the remaining subtree. The prefix is viable by
// construction, so replay cannot fail.
std::vector<std::vector<Mask>> run_prefix(const SearchSpace& space, int depth,
                                          std::uint32_t bits) {
    DfsState st(space);
    for (int pos = 0; pos < depth; ++pos) {
        if (bits & (1u << pos))
            st.include(pos);
        else
            st.exclude(pos);
    }
    std::vector<std::vector<Mask>> out;
    dfs(st, depth, out);
    return out;
}

FamilySet assemble(const Params& params, std::vector<std::vector<Mask>> uppers) {
    std::sort(uppers.begin(), uppers.end());
    FamilySet fs;
    fs.params = params;
    fs.source = FamilySource::oracle;
    fs.families.reserve(uppers.size());
    for (const auto& u : uppers)
        fs.families.push_back(complete_from_upper(params, u));
    return fs;
}

}  // namespace

FamilySet enumerate_oracle_serial(const Params& params) {
    SearchSpace space(params);
    DfsState st(space);
    std::vector<std::vector<Mask>> uppers;
    dfs(st, 0, uppers);
    return assemble(params, std::move(uppers));
}

OracleResult enumerate_oracle(const Params& params, const OracleOptions& opts) {
    SearchSpace space(params);
    int total = static_cast<int>(space.uppers.size());
    int depth = std::min(total, 8);

    std::vector<std::uint32_t> prefixes;
    if (opts.resume_from) {
        const ResumeToken& tok = *opts.resume_from;
        if (tok.version != 1)
            throw std::invalid_argument("unsupported resume token version");
        if (!(tok.params == params))
            throw std::invalid_argument("resume token is for different params");
        depth = tok.split_depth;
        prefixes = tok.pending_prefixes;
    } else {
        prefixes = viable_prefixes(space, depth);
    }

    auto start = std::chrono::steady_clock::now();
    auto expired = [&]() {
        if (!opts.time_budget_seconds) return false;
        std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
        return d.count() > *opts.time_budget_seconds;
    };

    int np = static_cast<int>(prefixes.size());
    std::vector<std::vector<std::vector<Mask>>> per_prefix(np);
    std::vector<char> done(np, 0);
    std::atomic<bool> stop{false};

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, opts.jobs))
#endif
    for (int i = 0; i < np; ++i) {
        if (stop.load(std::memory_order_relaxed)) continue;
        per_prefix[i] = run_prefix(space, depth, prefixes[i]);
        done[i] = 1;
        if (expired()) stop.store(true, std::memory_order_relaxed);
    }

    std::vector<std::vector<Mask>> uppers;
    std::vector<std::uint32_t> pending;
    for (int i = 0; i < np; ++i) {
        if (done[i])
            for (auto& u : per_prefix[i]) uppers.push_back(std::move(u));
        else
            pending.push_back(prefixes[i]);
    }

    OracleResult res;
    res.families = assemble(params, std::move(uppers));
    if (!pending.empty()) {
        ResumeToken tok;
        tok.version = 1;
        tok.params = params;
        tok.split_depth = depth;
        tok.pending_prefixes = std::move(pending);
        res.resume = std::move(tok);
    }
    return res;
}

FamilySet enumerate_bounded_upper(const Params& params, int max_upper) {
    if (max_upper < 0)
        throw std::invalid_argument("enumerate_bounded_upper: negative bound");
    std::vector<Mask> uppers = level_sets(params, params.k + 1);
    int total = static_cast<int>(uppers.size());
    std::vector<std::vector<Mask>> valid;
    std::vector<Mask> chosen;
    auto rec = [&](auto&& self, int start) -> void {
        if (is_valid_upper(params, chosen)) valid.push_back(chosen);
        if (static_cast<int>(chosen.size()) == max_upper) return;
        for (int i = start; i < total; ++i) {
            chosen.push_back(uppers[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    FamilySet fs = assemble(params, std::move(valid));
    fs.source = FamilySource::bounded_upper;
    return fs;
}

}  // namespace msf
