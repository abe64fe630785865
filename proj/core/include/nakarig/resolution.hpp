#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nakarig/ext_nat.hpp"
#include "nakarig/gen_cogen.hpp"
#include "nakarig/quiver.hpp"

namespace nakarig {

/// Minimal right add(M)-approximation of an indecomposable, read off the
/// extended quiver: approx_summands lists the vertices of the middle term
/// (the zero-layer corner included), syzygy_summands the kernel Omega_M.
/// Both are lifts on the cover.
struct ApproxResult {
    std::vector<Vertex> approx_summands;
    std::vector<Vertex> syzygy_summands;
};

/// The rectangle selection procedure. v must be stable and not in M.
ApproxResult min_approximation(const Vertex& v, const GenCogenSet& M);

/// Omega_M of the indecomposable at v as a sorted multiset of canonical
/// vertices; empty when v is in add(M).
std::vector<Vertex> omega_M(const Vertex& v, const GenCogenSet& M);

class MdimOutcome {
public:
    static MdimOutcome finite(int value);
    /// cycle must be nonempty: v_0 -> v_1 -> ... -> v_0 in the Omega_M successor graph.
    static MdimOutcome infinite(std::vector<Vertex> cycle);

    bool is_finite() const { return cycle_.empty(); }
    int value() const;
    const std::vector<Vertex>& cycle_witness() const { return cycle_; }
    ExtNat as_ext() const { return is_finite() ? ExtNat{value_} : ExtNat::infinity(); }

private:
    int value_ = 0;
    std::vector<Vertex> cycle_;
};

/// Per-M memo for mdim: successor lists and finished DFS results. A memo must
/// only be used with the set it was created for.
class MdimMemo {
public:
    explicit MdimMemo(const GenCogenSet& M);

private:
    enum class State : std::uint8_t { Unvisited, InProgress, Done };

    const GenCogenSet* owner_;
    std::vector<State> state_;
    std::vector<int> value_;        // -1 marks an infinite result
    std::vector<int> witness_;      // index into cycles_ for infinite results
    std::vector<std::vector<Vertex>> cycles_;
    std::vector<std::vector<int>> successors_;
    std::vector<bool> successors_ready_;

    friend MdimOutcome mdim(const Vertex& v, const GenCogenSet& M, MdimMemo& memo);
    const std::vector<int>& successors(int index);
};

/// M-dimension of the indecomposable at v: 0 in add(M), otherwise
/// 1 + max over the non-member summands of Omega_M. A cycle reachable in the
/// successor graph makes it infinite and is returned as the witness.
MdimOutcome mdim(const Vertex& v, const GenCogenSet& M, MdimMemo& memo);

struct GldimReport {
    ExtNat value;
    /// Every M-dimension vanished; End(M) has global dimension at most 2.
    bool at_most_two = false;
    /// Largest M-dimension when finite.
    int max_mdim = 0;

    std::string to_string() const { return at_most_two ? std::string{"<=2"} : value.to_string(); }
};

/// Global dimension of End(M): infinity if any M-dimension is infinite, else
/// max M-dimension + 2, with the D = 0 case flagged as "<=2" (reported as 2).
GldimReport gldim_end(const GenCogenSet& M);

enum class KnitDirection { Forward, Backward };

/// Immediate successors / predecessors of a stable vertex in the AR quiver,
/// on the cover. Zero-layer vertices are omitted, projective ones are kept.
std::vector<Vertex> ar_successors(const Vertex& v, const AlgebraParams& a);
std::vector<Vertex> ar_predecessors(const Vertex& v, const AlgebraParams& a);

/// Saturates M: forward adds tau^-X for members X whose successors all lie in
/// add(M); backward adds tau X when all predecessors do. Runs to the fixpoint.
GenCogenSet knit_step(const GenCogenSet& M, KnitDirection direction);

/// Does add(M) contain a full section of the stable quiver, i.e. a path
/// (x_1, 1), (x_2, 2), ..., (x_{m-1}, m-1) of members with x_{t+1} in {x_t, x_t - 1}?
bool contains_complete_slice(const GenCogenSet& M);

/// Lambda + L_0^1..L_0^t + L_0^{t+delta}..L_0^{m-1}.
GenCogenSet family_S(int t, int delta, const AlgebraParams& a);

/// Lambda + L_0^1..L_0^t + the diagonal L_{-j}^{delta+t+j}, 0 <= j <= m-1-delta-t.
GenCogenSet family_N(int t, int delta, const AlgebraParams& a);

/// min{t >= 0 : (x, delta + t) in M^}, delta = max{n, (k_0 - 1) n}. Requires m >= n.
int t_x(std::int64_t x, const GenCogenSet& M);

/// No column x has (x, t_x) in M^ (zero layer included). Requires m >= n.
bool delta_free(const GenCogenSet& M);

/// Replaces each stable member by its plain syzygy omega(x, t); Lambda is kept.
GenCogenSet syzygy_shift(const GenCogenSet& M);

} // namespace nakarig
