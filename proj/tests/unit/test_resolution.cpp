#include <gtest/gtest.h>

#include <random>

#include "nakarig/errors.hpp"
#include "nakarig/resolution.hpp"

using namespace nakarig;

namespace {

AlgebraParams A(int n, int m) { return AlgebraParams::make(n, m); }

std::vector<Vertex> canonical(const std::vector<Vertex>& vs, const AlgebraParams& a) {
    std::vector<Vertex> out;
    for (const Vertex& v : vs) {
        out.push_back(canonicalize(v, a));
    }
    std::sort(out.begin(), out.end());
    return out;
}

GenCogenSet a23_with_01() { return parse_members("0:1", A(2, 3)); }

} // namespace

TEST(MinApproximation, Examples) {
    const GenCogenSet M = a23_with_01();
    const ApproxResult r02 = min_approximation(Vertex{0, 2}, M);
    EXPECT_EQ(r02.approx_summands, (std::vector<Vertex>{{0, 3}, {2, 0}}));
    EXPECT_EQ(canonical(r02.syzygy_summands, M.params()), (std::vector<Vertex>{{0, 1}}));

    const ApproxResult r11 = min_approximation(Vertex{1, 1}, M);
    EXPECT_EQ(r11.approx_summands, (std::vector<Vertex>{{1, 3}, {2, 0}}));
    EXPECT_EQ(canonical(r11.syzygy_summands, M.params()), (std::vector<Vertex>{{0, 2}}));
}

// (2,2) sits on the top edge of the rectangle under (1,3); the map from it
// factors through the projective, so it must not be picked.
TEST(MinApproximation, SkipsTopEdge) {
    const GenCogenSet M = parse_members("0:2", A(2, 3));
    const ApproxResult r = min_approximation(Vertex{1, 2}, M);
    EXPECT_EQ(r.approx_summands, (std::vector<Vertex>{{1, 3}, {3, 0}}));
    EXPECT_EQ(canonical(r.syzygy_summands, M.params()), (std::vector<Vertex>{{1, 1}}));
}

TEST(MinApproximation, ContractViolations) {
    const GenCogenSet M = a23_with_01();
    EXPECT_THROW(min_approximation(Vertex{0, 1}, M), ContractViolation);
    EXPECT_THROW(min_approximation(Vertex{0, 3}, M), ContractViolation);
    EXPECT_THROW(min_approximation(Vertex{0, 1}, GenCogenSet::auslander(A(2, 3))), ContractViolation);
}

TEST(MinApproximation, LengthsBalance) {
    // 0 -> Omega_M X -> approximation -> X -> 0 is exact.
    std::mt19937_64 rng{17};
    for (int trial = 0; trial < 3000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const int m = std::max(n, 2) + static_cast<int>(rng() % 6);
        const AlgebraParams a = A(n, m);
        const GenCogenSet M = GenCogenSet::from_mask(a, rng() & ((std::uint64_t{1} << a.stable_count()) - 1));
        const Vertex v = stable_vertex(static_cast<int>(rng() % static_cast<unsigned>(a.stable_count())), a);
        if (M.contains(v)) {
            continue;
        }
        const ApproxResult r = min_approximation(v, M);
        int middle = 0;
        int kernel = 0;
        for (const Vertex& w : r.approx_summands) {
            middle += w.t;
        }
        for (const Vertex& w : r.syzygy_summands) {
            EXPECT_TRUE(w.is_stable(a));
            kernel += w.t;
        }
        EXPECT_EQ(middle, v.t + kernel);
    }
}

TEST(OmegaM, Examples) {
    const GenCogenSet M = a23_with_01();
    EXPECT_TRUE(omega_M(Vertex{0, 1}, M).empty());
    EXPECT_EQ(omega_M(Vertex{0, 2}, M), (std::vector<Vertex>{{0, 1}}));
    EXPECT_EQ(omega_M(Vertex{1, 2}, M), (std::vector<Vertex>{{0, 2}}));
    EXPECT_TRUE(omega_M(Vertex{1, 3}, M).empty());
}

TEST(OmegaM, EmptyExactlyOnMembers) {
    for (const auto& [n, m] : {std::pair{2, 4}, std::pair{3, 4}}) {
        const AlgebraParams a = A(n, m);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a.stable_count()); ++mask) {
            const GenCogenSet M = GenCogenSet::from_mask(a, mask);
            for (int i = 0; i < a.stable_count(); ++i) {
                const Vertex v = stable_vertex(i, a);
                EXPECT_EQ(omega_M(v, M).empty(), M.contains(v));
            }
        }
    }
}

TEST(OmegaM, BareAlgebraGivesPlainSyzygy) {
    for (const auto& [n, m] : {std::pair{2, 3}, std::pair{3, 7}, std::pair{5, 6}}) {
        const AlgebraParams a = A(n, m);
        const GenCogenSet lambda{a};
        for (int i = 0; i < a.stable_count(); ++i) {
            const Vertex v = stable_vertex(i, a);
            EXPECT_EQ(omega_M(v, lambda), (std::vector<Vertex>{canonicalize(omega(v, 1, a), a)}));
        }
    }
}

TEST(Mdim, Examples) {
    const GenCogenSet M = a23_with_01();
    MdimMemo memo{M};
    EXPECT_EQ(mdim(Vertex{0, 2}, M, memo).value(), 1);
    EXPECT_EQ(mdim(Vertex{1, 1}, M, memo).value(), 2);
    EXPECT_EQ(mdim(Vertex{0, 1}, M, memo).value(), 0);

    const GenCogenSet lambda{A(2, 3)};
    MdimMemo bare{lambda};
    const MdimOutcome inf = mdim(Vertex{0, 1}, lambda, bare);
    EXPECT_FALSE(inf.is_finite());
    EXPECT_FALSE(inf.cycle_witness().empty());
    EXPECT_TRUE(inf.as_ext().is_infinite());
    EXPECT_THROW((void)inf.value(), ContractViolation);
}

TEST(Mdim, MemoBelongsToOneSet) {
    const GenCogenSet M = a23_with_01();
    const GenCogenSet other{A(2, 3)};
    MdimMemo memo{M};
    EXPECT_THROW((void)mdim(Vertex{0, 2}, other, memo), ContractViolation);
}

TEST(Mdim, CycleWitnessIsClosedUnderOmegaM) {
    std::mt19937_64 rng{23};
    for (int trial = 0; trial < 500; ++trial) {
        const AlgebraParams a = A(3, 5);
        const GenCogenSet M = GenCogenSet::from_mask(a, rng() & 0xfff);
        MdimMemo memo{M};
        for (int i = 0; i < a.stable_count(); ++i) {
            const MdimOutcome d = mdim(stable_vertex(i, a), M, memo);
            if (d.is_finite()) {
                continue;
            }
            const auto& cyc = d.cycle_witness();
            for (std::size_t k = 0; k < cyc.size(); ++k) {
                const Vertex next = cyc[(k + 1) % cyc.size()];
                const std::vector<Vertex> om = omega_M(cyc[k], M);
                EXPECT_NE(std::find(om.begin(), om.end(), next), om.end());
                EXPECT_FALSE(M.contains(cyc[k]));
            }
        }
    }
}

TEST(Gldim, Examples) {
    const AlgebraParams a = A(2, 3);
    const GldimReport aus = gldim_end(GenCogenSet::auslander(a));
    EXPECT_TRUE(aus.at_most_two);
    EXPECT_EQ(aus.value, ExtNat{2});
    EXPECT_EQ(aus.to_string(), "<=2");

    const GldimReport g = gldim_end(a23_with_01());
    EXPECT_EQ(g.value, ExtNat{4});
    EXPECT_FALSE(g.at_most_two);
    EXPECT_EQ(g.to_string(), "4");

    EXPECT_TRUE(gldim_end(GenCogenSet{a}).value.is_infinite());
}

TEST(Knitting, Examples) {
    const AlgebraParams a34 = A(3, 4);
    EXPECT_EQ(knit_step(parse_members("0:1,0:2,0:3", a34), KnitDirection::Forward), GenCogenSet::auslander(a34));
    EXPECT_EQ(knit_step(GenCogenSet::auslander(a34), KnitDirection::Forward), GenCogenSet::auslander(a34));

    const AlgebraParams a23 = A(2, 3);
    const GenCogenSet missing = parse_members("0:1,1:1,0:2", a23);
    EXPECT_EQ(knit_step(missing, KnitDirection::Forward), GenCogenSet::auslander(a23));
}

TEST(Knitting, ArNeighbours) {
    const AlgebraParams a = A(3, 4);
    EXPECT_EQ(ar_successors(Vertex{0, 2}, a), (std::vector<Vertex>{{0, 1}, {-1, 3}}));
    EXPECT_EQ(ar_successors(Vertex{0, 1}, a), (std::vector<Vertex>{{-1, 2}}));
    EXPECT_EQ(ar_predecessors(Vertex{0, 2}, a), (std::vector<Vertex>{{0, 3}, {1, 1}}));
    EXPECT_EQ(ar_predecessors(Vertex{0, 1}, a), (std::vector<Vertex>{{0, 2}}));
}

TEST(Knitting, PreservesFiniteness) {
    std::mt19937_64 rng{29};
    for (int trial = 0; trial < 400; ++trial) {
        const AlgebraParams a = A(3, 5);
        const GenCogenSet M = GenCogenSet::from_mask(a, rng() & 0xfff);
        for (const KnitDirection dir : {KnitDirection::Forward, KnitDirection::Backward}) {
            const GenCogenSet K = knit_step(M, dir);
            EXPECT_EQ(gldim_end(M).value.is_finite(), gldim_end(K).value.is_finite());
        }
    }
}

TEST(CompleteSlice, Examples) {
    const AlgebraParams a = A(3, 5);
    EXPECT_TRUE(contains_complete_slice(family_S(4, 0, a)));
    EXPECT_FALSE(contains_complete_slice(GenCogenSet{a}));
    EXPECT_TRUE(contains_complete_slice(family_N(2, 1, a)));
    EXPECT_TRUE(contains_complete_slice(parse_members("0:1,-1:2,-1:3,-2:4", a)));
    EXPECT_FALSE(contains_complete_slice(parse_members("0:1,-1:2,0:3,-2:4", a)));
}

TEST(Families, Examples) {
    EXPECT_EQ(family_S(2, 0, A(3, 3)).members(), (std::vector<Vertex>{{0, 1}, {0, 2}}));
    EXPECT_EQ(family_N(2, 4, A(4, 7)).members(), (std::vector<Vertex>{{0, 1}, {0, 2}, {0, 6}}));
    EXPECT_EQ(family_N(1, 2, A(2, 3)).members(), (std::vector<Vertex>{{0, 1}}));
    EXPECT_EQ(family_N(1, 1, A(3, 5)).members(), (std::vector<Vertex>{{0, 1}, {0, 2}, {1, 4}, {2, 3}}));
    EXPECT_THROW(family_S(3, 3, A(2, 5)), DomainError);
    EXPECT_THROW(family_N(-1, 0, A(2, 5)), DomainError);
}

TEST(DeltaFree, Examples) {
    EXPECT_TRUE(delta_free(GenCogenSet{A(4, 7)}));
    const GenCogenSet not_free = parse_members("0:3", A(4, 7));
    EXPECT_EQ(t_x(0, not_free), 3);
    EXPECT_FALSE(delta_free(not_free));
    const GenCogenSet free = parse_members("0:2", A(4, 7));
    EXPECT_EQ(t_x(0, free), 3);
    EXPECT_TRUE(delta_free(free));
    EXPECT_THROW((void)delta_free(GenCogenSet{A(4, 3)}), UnsupportedParameters);
}

TEST(SyzygyShift, Examples) {
    const AlgebraParams a = A(2, 3);
    EXPECT_EQ(syzygy_shift(parse_members("0:1", a)).members(), (std::vector<Vertex>{{1, 2}}));
    EXPECT_EQ(syzygy_shift(GenCogenSet{a}), GenCogenSet{a});
}

TEST(SyzygyShift, PeriodReturnsToStart) {
    std::mt19937_64 rng{31};
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const int m = std::max(n, 2) + static_cast<int>(rng() % 6);
        const AlgebraParams a = A(n, m);
        const GenCogenSet M = GenCogenSet::from_mask(a, rng() & ((std::uint64_t{1} << a.stable_count()) - 1));
        GenCogenSet S = M;
        for (int k = 0; k < omega_period(a); ++k) {
            S = syzygy_shift(S);
        }
        EXPECT_EQ(S, M);
    }
}
