#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nakarig/arith_chain.hpp"
#include "nakarig/ext_nat.hpp"
#include "nakarig/gen_cogen.hpp"
#include "nakarig/resolution.hpp"

namespace nakarig {

/// Rigidity degree of Lambda + pi(S): min over ordered pairs of stable members
/// of the first nonvanishing Ext degree, minus one. Projectives are Ext-inert,
/// so the bare algebra has rd = infinity.
ExtNat rd_of_set(const GenCogenSet& M);

/// First nonvanishing Ext degree (in either direction) for every pair of
/// canonical stable vertices; 0 encodes "none within the omega period".
class ExtTable {
public:
    explicit ExtTable(const AlgebraParams& a);

    const AlgebraParams& params() const { return params_; }
    int first_degree(int u, int v) const { return first_[static_cast<std::size_t>(u * count_ + v)]; }

    /// Same value as rd_of_set for the set encoded by mask.
    ExtNat rd_of_mask(std::uint64_t mask) const;

private:
    AlgebraParams params_;
    int count_;
    std::vector<int> first_;
    /// Per vertex: (degree, partners first hit at that degree), ascending.
    std::vector<std::vector<std::pair<int, std::uint64_t>>> by_degree_;
};

struct SearchConfig {
    int max_bits = 20;
    /// Evaluate one representative per orbit of the cyclic shift x -> x + 1.
    bool prune_rotation = false;
    /// Skip the gldim computation for subsets whose rd is already below the
    /// best value found so far (exact; the finite-gldim count becomes partial).
    bool rd_prefilter = false;
    /// 0 picks NAKARIG_THREADS or the hardware concurrency.
    int threads = 0;
};

/// Worker count: explicit request, else the NAKARIG_THREADS environment
/// variable, else std::thread::hardware_concurrency().
int resolve_thread_count(int requested);

struct WitnessSummary {
    GenCogenSet set;
    ExtNat rd;
    GldimReport gldim;
};

struct RigdimReport {
    AlgebraParams params;
    ExtNat formula_value;
    std::optional<ExtNat> brute_value;
    std::optional<WitnessSummary> best_witness;
    std::uint64_t subsets_examined = 0;
    std::optional<std::uint64_t> finite_gldim_subsets;
    bool prune_rotation = false;
    std::chrono::milliseconds elapsed{0};

    bool agrees() const { return brute_value && *brute_value == formula_value; }
};

/// Exhaustive search over all 2^{n(m-1)} generator-cogenerators.
/// Throws BudgetExceeded when n(m-1) > cfg.max_bits.
RigdimReport brute_force_rigdim(const AlgebraParams& a, const SearchConfig& cfg);

std::string to_json(const RigdimReport& r);

struct WitnessCheck {
    AlgebraParams params;
    WitnessParams recipe;
    GenCogenSet set;
    GldimReport gldim;
    ExtNat rd;
    ExtNat formula;
    bool passed = false;
};

/// Builds the attaining generator-cogenerator and checks finite gldim and
/// rd = rigdim - 2.
WitnessCheck verify_witness(const AlgebraParams& a);

std::string to_json(const WitnessCheck& w);

/// Builds the generator-cogenerator named by a recipe.
GenCogenSet build_witness(const WitnessParams& w, const AlgebraParams& a);

enum class DeltaHypothesis {
    /// k_0 <= 2: M and its syzygy shift both delta-free, rd >= 2F_l + 1.
    BothFree,
    /// k_0 >= 3: M or its syzygy shift not delta-free, rd >= 1.
    EitherNotFree,
};

struct DeltaFreeCheck {
    DeltaHypothesis hypothesis = DeltaHypothesis::BothFree;
    int l = -1; // Euclid index for BothFree, -1 otherwise
    std::int64_t threshold = 1;
    std::uint64_t above_threshold = 0;
    std::uint64_t hypothesis_holds = 0;
    /// Hypothesis holds but gldim is finite: contradicts the infinite-gldim claim.
    std::uint64_t counterexamples = 0;
    /// Any subset with rd >= threshold and finite gldim.
    std::uint64_t finite_above_threshold = 0;
    std::vector<GenCogenSet> first_counterexamples;
};

struct DeltaFreeReport {
    AlgebraParams params;
    std::vector<DeltaFreeCheck> checks;
    std::uint64_t subsets_examined = 0;
};

/// Exhaustively tests the infinite-gldim claims tied to delta-freeness. For
/// k_0 >= 3 one check with threshold 1; otherwise one check per odd l < d + 1
/// with 0 < s_{l+1} < m/2, threshold 2F_l + 1.
DeltaFreeReport delta_free_scan(const AlgebraParams& a, const SearchConfig& cfg);

std::string to_json(const DeltaFreeReport& r);

struct SweepRow {
    AlgebraParams params;
    std::int64_t k0 = 0;
    int d = -1;
    ExtNat formula;
    std::optional<ExtNat> brute;
    std::optional<ExtNat> witness_rd;
    std::uint64_t subsets = 0;
    std::int64_t millis = 0;
};

/// All m >= n pairs in [n_lo, n_hi] x [m_lo, m_hi]. Brute force runs only
/// within cfg.max_bits; larger cases carry the formula alone.
std::vector<SweepRow> sweep(int n_lo, int n_hi, int m_lo, int m_hi, const SearchConfig& cfg);

/// Header "n\tm\tk_0\td\tformula\tbrute\twitness_rd\tsubsets\tmillis"; absent values print "-".
std::string to_tsv(const std::vector<SweepRow>& rows);

} // namespace nakarig
