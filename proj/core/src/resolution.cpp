#include "nakarig/resolution.hpp"

#include <algorithm>
#include <sstream>

#include "nakarig/arith_chain.hpp"
#include "nakarig/errors.hpp"

namespace nakarig {

// --- approximations --------------------------------------------------------

ApproxResult min_approximation(const Vertex& v, const GenCogenSet& M) {
    const AlgebraParams& a = M.params();
    if (!v.is_stable(a)) {
        throw ContractViolation("min_approximation: " + to_string(v) + " is not a stable vertex");
    }
    if (M.contains(v)) {
        throw ContractViolation("min_approximation: " + to_string(v) + " already lies in add(M)");
    }

    int h = v.t + 1;
    while (!M.contains(Vertex{v.x, h})) {
        ++h; // (x, m) is always a member
    }

    ApproxResult r;
    r.approx_summands.push_back(Vertex{v.x, h});

    // Current rectangle: spanned by (x, t) and (x + t, top - t) with top edge at column-height `top`.
    std::int64_t x = v.x;
    std::int64_t t = v.t;
    std::int64_t top = h;
    for (;;) {
        // The corner (x + t, 0) is always a member, so a selection exists.
        // The top edge y + w = x + top is skipped: maps from there factor
        // through the previous pick.
        Vertex pick{};
        bool found = false;
        for (std::int64_t y = x + 1; y <= x + t && !found; ++y) {
            for (std::int64_t w = x + t - y; w < x + top - y; ++w) {
                if (M.contains(Vertex{y, static_cast<int>(w)})) {
                    pick = Vertex{y, static_cast<int>(w)};
                    found = true;
                    break;
                }
            }
        }
        r.approx_summands.push_back(pick);
        const auto kernel_layer = static_cast<int>(top - pick.x + x);
        if (kernel_layer != 0) {
            r.syzygy_summands.push_back(Vertex{pick.x, kernel_layer});
        }
        if (pick.t == x + t - pick.x) {
            break; // selection on the lower boundary
        }
        const std::int64_t next_t = x + t - pick.x;
        x = pick.x;
        t = next_t;
        top = pick.t;
    }
    return r;
}

std::vector<Vertex> omega_M(const Vertex& v, const GenCogenSet& M) {
    if (!v.is_stable(M.params()) || M.contains(v)) {
        return {};
    }
    std::vector<Vertex> out;
    for (const Vertex& w : min_approximation(v, M).syzygy_summands) {
        out.push_back(canonicalize(w, M.params()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// --- M-dimension -----------------------------------------------------------

MdimOutcome MdimOutcome::finite(int value) {
    MdimOutcome o;
    o.value_ = value;
    return o;
}

MdimOutcome MdimOutcome::infinite(std::vector<Vertex> cycle) {
    if (cycle.empty()) {
        throw ContractViolation("MdimOutcome::infinite needs a nonempty cycle witness");
    }
    MdimOutcome o;
    o.cycle_ = std::move(cycle);
    return o;
}

int MdimOutcome::value() const {
    if (!is_finite()) {
        throw ContractViolation("MdimOutcome::value() on an infinite outcome");
    }
    return value_;
}

MdimMemo::MdimMemo(const GenCogenSet& M)
    : owner_{&M},
      state_(static_cast<std::size_t>(M.params().stable_count()), State::Unvisited),
      value_(state_.size(), 0),
      witness_(state_.size(), -1),
      successors_(state_.size()),
      successors_ready_(state_.size(), false) {}

const std::vector<int>& MdimMemo::successors(int index) {
    const auto i = static_cast<std::size_t>(index);
    if (!successors_ready_[i]) {
        const AlgebraParams& a = owner_->params();
        std::vector<int> out;
        for (const Vertex& w : omega_M(stable_vertex(index, a), *owner_)) {
            if (!owner_->contains(w)) {
                out.push_back(stable_index(w, a));
            }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        successors_[i] = std::move(out);
        successors_ready_[i] = true;
    }
    return successors_[i];
}

MdimOutcome mdim(const Vertex& v, const GenCogenSet& M, MdimMemo& memo) {
    if (memo.owner_ != &M) {
        throw ContractViolation("mdim: memo was created for a different generator-cogenerator");
    }
    const AlgebraParams& a = M.params();
    if (!v.is_stable(a)) {
        throw DomainError("mdim: " + to_string(v) + " is not stable");
    }
    if (M.contains(v)) {
        return MdimOutcome::finite(0);
    }
    using State = MdimMemo::State;
    const int root = stable_index(canonicalize(v, a), a);

    auto result_of = [&](int idx) {
        const auto i = static_cast<std::size_t>(idx);
        if (memo.value_[i] < 0) {
            return MdimOutcome::infinite(memo.cycles_[static_cast<std::size_t>(memo.witness_[i])]);
        }
        return MdimOutcome::finite(memo.value_[i]);
    };
    if (memo.state_[static_cast<std::size_t>(root)] == State::Done) {
        return result_of(root);
    }

    struct Frame {
        int node;
        std::size_t next = 0;
        int best = 0;
    };
    std::vector<Frame> stack;
    stack.push_back(Frame{root});
    memo.state_[static_cast<std::size_t>(root)] = State::InProgress;

    auto fail_stack = [&](int cycle_id) {
        for (const Frame& f : stack) {
            const auto i = static_cast<std::size_t>(f.node);
            memo.state_[i] = State::Done;
            memo.value_[i] = -1;
            memo.witness_[i] = cycle_id;
        }
        stack.clear();
    };

    while (!stack.empty()) {
        Frame& f = stack.back();
        const std::vector<int>& succ = memo.successors(f.node);
        if (f.next == succ.size()) {
            const auto i = static_cast<std::size_t>(f.node);
            memo.state_[i] = State::Done;
            memo.value_[i] = f.best + 1;
            const int done = f.best + 1;
            stack.pop_back();
            if (!stack.empty()) {
                stack.back().best = std::max(stack.back().best, done);
            }
            continue;
        }
        const int w = succ[f.next++];
        const auto wi = static_cast<std::size_t>(w);
        switch (memo.state_[wi]) {
        case State::Unvisited:
            memo.state_[wi] = State::InProgress;
            stack.push_back(Frame{w});
            break;
        case State::InProgress: {
            std::vector<Vertex> cycle;
            auto it = std::find_if(stack.begin(), stack.end(), [w](const Frame& fr) { return fr.node == w; });
            for (; it != stack.end(); ++it) {
                cycle.push_back(stable_vertex(it->node, a));
            }
            memo.cycles_.push_back(std::move(cycle));
            fail_stack(static_cast<int>(memo.cycles_.size()) - 1);
            break;
        }
        case State::Done:
            if (memo.value_[wi] < 0) {
                fail_stack(memo.witness_[wi]);
            } else {
                f.best = std::max(f.best, memo.value_[wi]);
            }
            break;
        }
    }
    return result_of(root);
}

GldimReport gldim_end(const GenCogenSet& M) {
    const AlgebraParams& a = M.params();
    MdimMemo memo(M);
    int worst = 0;
    for (int i = 0; i < a.stable_count(); ++i) {
        const MdimOutcome o = mdim(stable_vertex(i, a), M, memo);
        if (!o.is_finite()) {
            return GldimReport{ExtNat::infinity(), false, 0};
        }
        worst = std::max(worst, o.value());
    }
    if (worst == 0) {
        return GldimReport{ExtNat{2}, true, 0};
    }
    return GldimReport{ExtNat{worst + 2}, false, worst};
}

// --- knitting and slices ---------------------------------------------------

std::vector<Vertex> ar_successors(const Vertex& v, const AlgebraParams& a) {
    if (!v.is_stable(a)) {
        throw DomainError("ar_successors: " + to_string(v) + " is not stable");
    }
    std::vector<Vertex> out;
    if (v.t - 1 >= 1) {
        out.push_back(Vertex{v.x, v.t - 1});
    }
    out.push_back(Vertex{v.x - 1, v.t + 1});
    return out;
}

std::vector<Vertex> ar_predecessors(const Vertex& v, const AlgebraParams& a) {
    if (!v.is_stable(a)) {
        throw DomainError("ar_predecessors: " + to_string(v) + " is not stable");
    }
    std::vector<Vertex> out;
    out.push_back(Vertex{v.x, v.t + 1});
    if (v.t - 1 >= 1) {
        out.push_back(Vertex{v.x + 1, v.t - 1});
    }
    return out;
}

GenCogenSet knit_step(const GenCogenSet& M, KnitDirection direction) {
    const AlgebraParams& a = M.params();
    GenCogenSet cur = M;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const Vertex& v : cur.members()) {
            const bool forward = direction == KnitDirection::Forward;
            const auto neighbours = forward ? ar_successors(v, a) : ar_predecessors(v, a);
            const bool saturated =
                std::all_of(neighbours.begin(), neighbours.end(), [&](const Vertex& w) { return cur.contains(w); });
            const Vertex next{forward ? v.x - 1 : v.x + 1, v.t};
            if (saturated && !cur.contains(next)) {
                cur.insert(next);
                changed = true;
            }
        }
    }
    return cur;
}

bool contains_complete_slice(const GenCogenSet& M) {
    const AlgebraParams& a = M.params();
    if (a.m < 2) {
        return false;
    }
    std::vector<bool> reach(static_cast<std::size_t>(a.n));
    for (int x = 0; x < a.n; ++x) {
        reach[static_cast<std::size_t>(x)] = M.contains(Vertex{x, 1});
    }
    for (int t = 2; t <= a.m - 1; ++t) {
        std::vector<bool> next(reach.size());
        for (int y = 0; y < a.n; ++y) {
            const bool from_below = reach[static_cast<std::size_t>(y)] || reach[static_cast<std::size_t>((y + 1) % a.n)];
            next[static_cast<std::size_t>(y)] = from_below && M.contains(Vertex{y, t});
        }
        reach = std::move(next);
    }
    return std::find(reach.begin(), reach.end(), true) != reach.end();
}

// --- families --------------------------------------------------------------

namespace {

void check_family_args(const char* name, int t, int delta, const AlgebraParams& a) {
    if (t < 0 || delta < 0 || t + delta > a.m) {
        std::ostringstream os;
        os << name << ": need t >= 0, delta >= 0 and t + delta <= m, got t=" << t << " delta=" << delta
           << " m=" << a.m;
        throw DomainError(os.str());
    }
}

} // namespace

GenCogenSet family_S(int t, int delta, const AlgebraParams& a) {
    check_family_args("family_S", t, delta, a);
    GenCogenSet s(a);
    for (int i = 1; i <= std::min(t, a.m - 1); ++i) {
        s.insert(Vertex{0, i});
    }
    for (int i = std::max(1, t + delta); i <= a.m - 1; ++i) {
        s.insert(Vertex{0, i});
    }
    return s;
}

GenCogenSet family_N(int t, int delta, const AlgebraParams& a) {
    check_family_args("family_N", t, delta, a);
    GenCogenSet s(a);
    for (int i = 1; i <= std::min(t, a.m - 1); ++i) {
        s.insert(Vertex{0, i});
    }
    for (int j = 0; j <= a.m - 1 - delta - t; ++j) {
        s.insert(Vertex{-j, delta + t + j}); // zero layer (delta + t = 0) is ignored
    }
    return s;
}

// --- delta-freeness and syzygy shift ---------------------------------------

int t_x(std::int64_t x, const GenCogenSet& M) {
    const int delta = standard_delta(M.params());
    int t = 0;
    while (!M.contains(Vertex{x, delta + t})) {
        ++t; // (x, m) is always a member
    }
    return t;
}

bool delta_free(const GenCogenSet& M) {
    const AlgebraParams& a = M.params();
    for (int x = 0; x < a.n; ++x) {
        if (M.contains(Vertex{x, t_x(x, M)})) {
            return false;
        }
    }
    return true;
}

GenCogenSet syzygy_shift(const GenCogenSet& M) {
    const AlgebraParams& a = M.params();
    GenCogenSet out(a);
    for (const Vertex& v : M.members()) {
        out.insert(omega(v, 1, a));
    }
    return out;
}

} // namespace nakarig
