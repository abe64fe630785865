#include "nakarig/search.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "nakarig/errors.hpp"

namespace nakarig {

using ordered_json = nlohmann::ordered_json;

namespace {

constexpr std::uint64_t kChunk = 1024;

/// Splits [0, total) into chunks handed out to `threads` workers; each worker
/// owns one State and the states are returned in worker order.
template <typename State, typename Fn>
std::vector<State> parallel_chunks(std::uint64_t total, int threads, const State& init, Fn&& body) {
    const int workers = static_cast<int>(std::max<std::uint64_t>(
        1, std::min<std::uint64_t>(static_cast<std::uint64_t>(std::max(threads, 1)), (total + kChunk - 1) / kChunk)));
    std::vector<State> states(static_cast<std::size_t>(workers), init);
    std::atomic<std::uint64_t> next{0};
    auto work = [&](State& st) {
        for (;;) {
            const std::uint64_t begin = next.fetch_add(kChunk);
            if (begin >= total) {
                return;
            }
            const std::uint64_t end = std::min(total, begin + kChunk);
            for (std::uint64_t i = begin; i < end; ++i) {
                body(st, i);
            }
        }
    };
    if (workers == 1) {
        work(states[0]);
        return states;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back(work, std::ref(states[static_cast<std::size_t>(w)]));
    }
    for (auto& th : pool) {
        th.join();
    }
    return states;
}

std::vector<int> rotation_permutation(const AlgebraParams& a) {
    std::vector<int> perm(static_cast<std::size_t>(a.stable_count()));
    for (int i = 0; i < a.stable_count(); ++i) {
        const Vertex v = stable_vertex(i, a);
        perm[static_cast<std::size_t>(i)] = stable_index(Vertex{(v.x + 1) % a.n, v.t}, a);
    }
    return perm;
}

std::uint64_t apply_permutation(std::uint64_t mask, const std::vector<int>& perm) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if ((mask >> i) & 1U) {
            out |= std::uint64_t{1} << perm[i];
        }
    }
    return out;
}

bool is_orbit_representative(std::uint64_t mask, const std::vector<int>& perm, int n) {
    std::uint64_t cur = mask;
    for (int r = 1; r < n; ++r) {
        cur = apply_permutation(cur, perm);
        if (cur < mask) {
            return false;
        }
    }
    return true;
}

void check_budget(const AlgebraParams& a, const SearchConfig& cfg) {
    a.require_m_at_least_n();
    const int bits = a.stable_count();
    const int cap = std::min(cfg.max_bits, 62);
    if (bits > cap) {
        std::ostringstream os;
        os << "exhaustive search over A(" << a.n << "," << a.m << ") needs 2^" << bits
           << " subsets, above the budget of 2^" << cap << " (raise --max-bits)";
        throw BudgetExceeded(os.str());
    }
}

ordered_json ext_json(ExtNat v) {
    if (v.is_infinite()) {
        return "inf";
    }
    return v.value();
}

ordered_json members_json(const GenCogenSet& s) {
    auto arr = ordered_json::array();
    for (const Vertex& v : s.members()) {
        arr.push_back({v.x, v.t});
    }
    return arr;
}

ordered_json gldim_json(const GldimReport& g) {
    ordered_json j;
    j["value"] = ext_json(g.value);
    j["at_most_two"] = g.at_most_two;
    return j;
}

} // namespace

// --- rigidity degrees ------------------------------------------------------

ExtNat rd_of_set(const GenCogenSet& M) {
    const std::vector<Vertex> ms = M.members();
    return rd_pair(ms, ms, M.params());
}

ExtTable::ExtTable(const AlgebraParams& a)
    : params_{a}, count_{a.stable_count()}, first_(static_cast<std::size_t>(count_ * count_), 0) {
    const int period = omega_period(a);
    for (int u = 0; u < count_; ++u) {
        for (int v = u; v < count_; ++v) {
            const Vertex xs[] = {stable_vertex(u, a)};
            const Vertex ys[] = {stable_vertex(v, a)};
            int hit = 0;
            for (int i = 1; i <= period && hit == 0; ++i) {
                if (ext_nonzero(i, xs, ys, a) || ext_nonzero(i, ys, xs, a)) {
                    hit = i;
                }
            }
            first_[static_cast<std::size_t>(u * count_ + v)] = hit;
            first_[static_cast<std::size_t>(v * count_ + u)] = hit;
        }
    }
    if (count_ > 64) {
        return;
    }
    by_degree_.resize(static_cast<std::size_t>(count_));
    for (int u = 0; u < count_; ++u) {
        auto& row = by_degree_[static_cast<std::size_t>(u)];
        for (int i = 1; i <= period; ++i) {
            std::uint64_t partners = 0;
            for (int v = 0; v < count_; ++v) {
                if (first_degree(u, v) == i) {
                    partners |= std::uint64_t{1} << v;
                }
            }
            if (partners != 0) {
                row.emplace_back(i, partners);
            }
        }
    }
}

ExtNat ExtTable::rd_of_mask(std::uint64_t mask) const {
    if (count_ > 64) {
        throw ContractViolation("ExtTable::rd_of_mask needs at most 64 stable vertices");
    }
    int best = 0;
    for (int u = 0; u < count_; ++u) {
        if (!((mask >> u) & 1U)) {
            continue;
        }
        for (const auto& [degree, partners] : by_degree_[static_cast<std::size_t>(u)]) {
            if (best != 0 && degree >= best) {
                break;
            }
            if (partners & mask) {
                best = degree;
                break;
            }
        }
    }
    return best == 0 ? ExtNat::infinity() : ExtNat{best - 1};
}

int resolve_thread_count(int requested) {
    if (requested > 0) {
        return requested;
    }
    if (const char* env = std::getenv("NAKARIG_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) {
            return v;
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

// --- exhaustive search -----------------------------------------------------

namespace {

struct SearchState {
    bool have = false;
    ExtNat rd;
    std::vector<Vertex> members;
    std::uint64_t mask = 0;
    GldimReport gldim;
    std::uint64_t examined = 0;
    std::uint64_t finite = 0;

    bool improves(ExtNat cand_rd, const std::vector<Vertex>& cand) const {
        if (!have) {
            return true;
        }
        if (cand_rd != rd) {
            return cand_rd > rd;
        }
        return cand < members;
    }
};

} // namespace

RigdimReport brute_force_rigdim(const AlgebraParams& a, const SearchConfig& cfg) {
    check_budget(a, cfg);
    const auto start = std::chrono::steady_clock::now();
    const ExtTable table(a);
    const std::vector<int> perm = rotation_permutation(a);
    const std::uint64_t total = std::uint64_t{1} << a.stable_count();

    auto states = parallel_chunks(total, resolve_thread_count(cfg.threads), SearchState{},
                                  [&](SearchState& st, std::uint64_t i) {
                                      const std::uint64_t mask = i ^ (i >> 1); // Gray-code order
                                      if (cfg.prune_rotation && !is_orbit_representative(mask, perm, a.n)) {
                                          return;
                                      }
                                      ++st.examined;
                                      const ExtNat rd = table.rd_of_mask(mask);
                                      if (cfg.rd_prefilter && st.have && rd < st.rd) {
                                          return;
                                      }
                                      const GenCogenSet M = GenCogenSet::from_mask(a, mask);
                                      const GldimReport g = gldim_end(M);
                                      if (g.value.is_infinite()) {
                                          return;
                                      }
                                      ++st.finite;
                                      std::vector<Vertex> ms = M.members();
                                      if (st.improves(rd, ms)) {
                                          st.have = true;
                                          st.rd = rd;
                                          st.members = std::move(ms);
                                          st.mask = mask;
                                          st.gldim = g;
                                      }
                                  });

    SearchState best;
    std::uint64_t examined = 0;
    std::uint64_t finite = 0;
    for (const SearchState& st : states) {
        examined += st.examined;
        finite += st.finite;
        if (st.have && best.improves(st.rd, st.members)) {
            best = st;
        }
    }

    RigdimReport r{a, rigdim_formula(a), std::nullopt, std::nullopt, examined, std::nullopt, cfg.prune_rotation,
                   std::chrono::milliseconds{0}};
    if (!cfg.rd_prefilter) {
        r.finite_gldim_subsets = finite;
    }
    if (best.have) {
        r.brute_value = best.rd + ExtNat{2};
        r.best_witness = WitnessSummary{GenCogenSet::from_mask(a, best.mask), best.rd, best.gldim};
    }
    r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    return r;
}

std::string to_json(const RigdimReport& r) {
    ordered_json j;
    j["n"] = r.params.n;
    j["m"] = r.params.m;
    j["formula_value"] = ext_json(r.formula_value);
    j["brute_value"] = r.brute_value ? ext_json(*r.brute_value) : ordered_json(nullptr);
    j["agrees"] = r.agrees();
    if (r.best_witness) {
        ordered_json w;
        w["members"] = members_json(r.best_witness->set);
        w["rd"] = ext_json(r.best_witness->rd);
        w["gldim"] = gldim_json(r.best_witness->gldim);
        j["best_witness"] = w;
    } else {
        j["best_witness"] = nullptr;
    }
    j["subsets_examined"] = r.subsets_examined;
    j["finite_gldim_subsets"] = r.finite_gldim_subsets ? ordered_json(*r.finite_gldim_subsets) : ordered_json(nullptr);
    j["prune_rotation"] = r.prune_rotation;
    j["elapsed_ms"] = r.elapsed.count();
    j["note"] = "dominant dimension of End(M) is taken as rd(M)+2; End(M) is never constructed";
    return j.dump(2);
}

// --- witnesses -------------------------------------------------------------

GenCogenSet build_witness(const WitnessParams& w, const AlgebraParams& a) {
    switch (w.family) {
    case WitnessFamily::S:
        return family_S(w.t, w.delta, a);
    case WitnessFamily::N:
        return family_N(w.t, w.delta, a);
    case WitnessFamily::Auslander:
        return GenCogenSet::auslander(a);
    }
    throw ContractViolation("build_witness: unknown family");
}

WitnessCheck verify_witness(const AlgebraParams& a) {
    const WitnessParams recipe = witness_params(a);
    GenCogenSet set = build_witness(recipe, a);
    const GldimReport g = gldim_end(set);
    const ExtNat rd = rd_of_set(set);
    const ExtNat formula = rigdim_formula(a);
    const bool passed = g.value.is_finite() && rd + ExtNat{2} == formula;
    return WitnessCheck{a, recipe, std::move(set), g, rd, formula, passed};
}

std::string to_json(const WitnessCheck& w) {
    ordered_json j;
    j["n"] = w.params.n;
    j["m"] = w.params.m;
    j["family"] = to_string(w.recipe.family);
    j["t"] = w.recipe.t;
    j["delta"] = w.recipe.delta;
    j["members"] = members_json(w.set);
    j["gldim"] = gldim_json(w.gldim);
    j["rd"] = ext_json(w.rd);
    j["formula"] = ext_json(w.formula);
    j["passed"] = w.passed;
    return j.dump(2);
}

// --- delta-freeness scan ---------------------------------------------------

namespace {

struct ScanState {
    std::vector<DeltaFreeCheck> checks;
    std::vector<std::vector<GenCogenSet>> found;
    std::uint64_t examined = 0;
};

constexpr std::size_t kKeptCounterexamples = 5;

} // namespace

DeltaFreeReport delta_free_scan(const AlgebraParams& a, const SearchConfig& cfg) {
    check_budget(a, cfg);
    const EuclidChain c = euclid_chain(a);
    std::vector<DeltaFreeCheck> checks;
    if (c.quotient(0) >= 3) {
        DeltaFreeCheck ck;
        ck.hypothesis = DeltaHypothesis::EitherNotFree;
        ck.threshold = 1;
        checks.push_back(ck);
    } else {
        for (int l = 1; l < c.d + 1; l += 2) {
            const std::int64_t s_next = c.remainder(l + 1);
            if (s_next > 0 && 2 * s_next < a.m) {
                DeltaFreeCheck ck;
                ck.hypothesis = DeltaHypothesis::BothFree;
                ck.l = l;
                ck.threshold = 2 * c.weighted_fib(l) + 1;
                checks.push_back(ck);
            }
        }
    }

    const ExtTable table(a);
    const std::uint64_t total = std::uint64_t{1} << a.stable_count();
    ScanState init{checks, std::vector<std::vector<GenCogenSet>>(checks.size()), 0};

    auto states = parallel_chunks(total, resolve_thread_count(cfg.threads), init, [&](ScanState& st, std::uint64_t i) {
        ++st.examined;
        const ExtNat rd = table.rd_of_mask(i);
        std::optional<GenCogenSet> M;
        std::optional<bool> finite;
        std::optional<bool> free_m;
        std::optional<bool> free_shift;
        for (std::size_t k = 0; k < st.checks.size(); ++k) {
            DeltaFreeCheck& ck = st.checks[k];
            if (rd < ExtNat{ck.threshold}) {
                continue;
            }
            ++ck.above_threshold;
            if (!M) {
                M = GenCogenSet::from_mask(a, i);
                finite = gldim_end(*M).value.is_finite();
                free_m = delta_free(*M);
                free_shift = delta_free(syzygy_shift(*M));
            }
            const bool hyp = ck.hypothesis == DeltaHypothesis::BothFree ? (*free_m && *free_shift)
                                                                       : (!*free_m || !*free_shift);
            if (*finite) {
                ++ck.finite_above_threshold;
            }
            if (hyp) {
                ++ck.hypothesis_holds;
                if (*finite) {
                    ++ck.counterexamples;
                    st.found[k].push_back(*M);
                }
            }
        }
    });

    DeltaFreeReport report{a, checks, 0};
    for (std::size_t k = 0; k < checks.size(); ++k) {
        std::vector<GenCogenSet> all;
        for (const ScanState& st : states) {
            const DeltaFreeCheck& s = st.checks[k];
            DeltaFreeCheck& r = report.checks[k];
            r.above_threshold += s.above_threshold;
            r.hypothesis_holds += s.hypothesis_holds;
            r.counterexamples += s.counterexamples;
            r.finite_above_threshold += s.finite_above_threshold;
            all.insert(all.end(), st.found[k].begin(), st.found[k].end());
        }
        std::sort(all.begin(), all.end(),
                  [](const GenCogenSet& x, const GenCogenSet& y) { return x.members() < y.members(); });
        if (all.size() > kKeptCounterexamples) {
            all.erase(all.begin() + static_cast<std::ptrdiff_t>(kKeptCounterexamples), all.end());
        }
        report.checks[k].first_counterexamples = std::move(all);
    }
    for (const ScanState& st : states) {
        report.subsets_examined += st.examined;
    }
    return report;
}

std::string to_json(const DeltaFreeReport& r) {
    ordered_json j;
    j["n"] = r.params.n;
    j["m"] = r.params.m;
    j["subsets_examined"] = r.subsets_examined;
    auto arr = ordered_json::array();
    for (const DeltaFreeCheck& ck : r.checks) {
        ordered_json c;
        c["hypothesis"] = ck.hypothesis == DeltaHypothesis::BothFree ? "both_delta_free" : "either_not_delta_free";
        c["l"] = ck.l;
        c["threshold"] = ck.threshold;
        c["above_threshold"] = ck.above_threshold;
        c["hypothesis_holds"] = ck.hypothesis_holds;
        c["counterexamples"] = ck.counterexamples;
        c["finite_above_threshold"] = ck.finite_above_threshold;
        auto ex = ordered_json::array();
        for (const GenCogenSet& s : ck.first_counterexamples) {
            ex.push_back(members_json(s));
        }
        c["first_counterexamples"] = ex;
        arr.push_back(c);
    }
    j["checks"] = arr;
    return j.dump(2);
}

// --- sweeps ----------------------------------------------------------------

std::vector<SweepRow> sweep(int n_lo, int n_hi, int m_lo, int m_hi, const SearchConfig& cfg) {
    std::vector<SweepRow> rows;
    for (int n = std::max(1, n_lo); n <= n_hi; ++n) {
        for (int m = std::max(n, m_lo); m <= m_hi; ++m) {
            const AlgebraParams a = AlgebraParams::make(n, m);
            const EuclidChain c = euclid_chain(a);
            SweepRow row;
            row.params = a;
            row.k0 = c.quotient(0);
            row.d = c.d;
            row.formula = rigdim_formula(a);
            if (a.stable_count() <= std::min(cfg.max_bits, 62)) {
                const RigdimReport r = brute_force_rigdim(a, cfg);
                row.brute = r.brute_value;
                row.subsets = r.subsets_examined;
                row.millis = r.elapsed.count();
            }
            if (n > 1) {
                row.witness_rd = verify_witness(a).rd;
            }
            rows.push_back(row);
        }
    }
    return rows;
}

std::string to_tsv(const std::vector<SweepRow>& rows) {
    std::ostringstream os;
    os << "n\tm\tk_0\td\tformula\tbrute\twitness_rd\tsubsets\tmillis\n";
    for (const SweepRow& r : rows) {
        os << r.params.n << '\t' << r.params.m << '\t' << r.k0 << '\t' << r.d << '\t' << r.formula.to_string() << '\t'
           << (r.brute ? r.brute->to_string() : "-") << '\t' << (r.witness_rd ? r.witness_rd->to_string() : "-")
           << '\t' << r.subsets << '\t' << r.millis << '\n';
    }
    return os.str();
}

} // namespace nakarig
