#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "nakarig/errors.hpp"
#include "nakarig/quiver.hpp"

using namespace nakarig;

namespace {

AlgebraParams A(int n, int m) { return AlgebraParams::make(n, m); }

bool ext_single(int i, Vertex x, Vertex y, const AlgebraParams& a) {
    const Vertex xs[] = {x};
    const Vertex ys[] = {y};
    return ext_nonzero(i, xs, ys, a);
}

std::int64_t rem(std::int64_t v, int n) { return ((v % n) + n) % n; }

} // namespace

TEST(AlgebraParams, Validation) {
    EXPECT_THROW(AlgebraParams::make(0, 3), DomainError);
    EXPECT_THROW(AlgebraParams::make(2, 0), DomainError);
    EXPECT_THROW(A(3, 2).require_m_at_least_n(), UnsupportedParameters);
    EXPECT_NO_THROW(A(3, 3).require_m_at_least_n());
    EXPECT_EQ(A(4, 7).stable_count(), 24);
}

TEST(Canonicalize, Examples) {
    EXPECT_EQ(canonicalize(Vertex{2, 1}, A(2, 3)), (Vertex{0, 1}));
    EXPECT_EQ(canonicalize(Vertex{-1, 2}, A(3, 4)), (Vertex{2, 2}));
    EXPECT_EQ(canonicalize(Vertex{4, 3}, A(4, 7)), (Vertex{0, 3}));
    EXPECT_THROW(canonicalize(Vertex{0, 8}, A(4, 7)), DomainError);
    EXPECT_THROW(canonicalize(Vertex{0, -1}, A(4, 7)), DomainError);
}

TEST(Canonicalize, Idempotent) {
    std::mt19937_64 rng{11};
    std::uniform_int_distribution<std::int64_t> xs{-1000, 1000};
    for (int trial = 0; trial < 2000; ++trial) {
        const AlgebraParams a = A(1 + static_cast<int>(rng() % 9), 1 + static_cast<int>(rng() % 12));
        const Vertex v{xs(rng), static_cast<int>(rng() % static_cast<unsigned>(a.m + 1))};
        const Vertex c = canonicalize(v, a);
        EXPECT_EQ(canonicalize(c, a), c);
        EXPECT_GE(c.x, 0);
        EXPECT_LT(c.x, a.n);
    }
}

TEST(Tau, Examples) {
    EXPECT_EQ(tau(Vertex{0, 2}, 1, A(3, 4)), (Vertex{1, 2}));
    EXPECT_EQ(canonicalize(tau(Vertex{0, 2}, 3, A(3, 4)), A(3, 4)), (Vertex{0, 2}));
    EXPECT_EQ(tau(Vertex{5, 1}, -2, A(3, 4)), (Vertex{3, 1}));
    EXPECT_THROW(tau(Vertex{0, 4}, 1, A(3, 4)), DomainError);
}

TEST(Omega, Examples) {
    EXPECT_EQ(omega(Vertex{0, 2}, 1, A(2, 3)), (Vertex{2, 1}));
    EXPECT_EQ(omega(Vertex{3, 2}, 2, A(2, 5)), (Vertex{8, 2}));
    EXPECT_EQ(omega(omega(Vertex{3, 2}, 1, A(2, 5)), -1, A(2, 5)), (Vertex{3, 2}));
    EXPECT_EQ(omega(Vertex{1, 1}, 0, A(2, 5)), (Vertex{1, 1}));
}

TEST(Omega, PeriodReturnsToStart) {
    for (int n = 1; n <= 30; ++n) {
        for (int m = n; m <= 30; ++m) {
            const AlgebraParams a = A(n, m);
            const int p = omega_period(a);
            ASSERT_EQ(p, 2 * n / std::gcd(m, n));
            for (int t = 1; t < m; ++t) {
                const Vertex v{0, t};
                EXPECT_EQ(canonicalize(omega(v, p, a), a), v) << n << "," << m << " t=" << t;
                Vertex w = v;
                for (int k = 0; k < p; ++k) {
                    w = omega(w, 1, a);
                }
                EXPECT_EQ(canonicalize(w, a), v);
            }
        }
    }
}

TEST(Region, HMinusExamples) {
    const AlgebraParams a = A(2, 3);
    const Region r{Vertex{0, 2}, RegionKind::HMinus};
    EXPECT_TRUE(region_contains(r, Vertex{0, 2}, a));
    EXPECT_TRUE(region_contains(r, Vertex{1, 1}, a));
    EXPECT_FALSE(region_contains(r, Vertex{1, 2}, a));
}

TEST(Region, HammockDuality) {
    // H^-(v) = H^+(tau^{-1} omega v) on the cover.
    std::mt19937_64 rng{5};
    for (int trial = 0; trial < 4000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const int m = n + static_cast<int>(rng() % 8);
        if (m < 2) {
            continue;
        }
        const AlgebraParams a = A(n, m);
        const Vertex v{static_cast<std::int64_t>(rng() % 13) - 6, 1 + static_cast<int>(rng() % (m - 1))};
        const Vertex w{v.x + static_cast<std::int64_t>(rng() % (2 * m + 1)) - m,
                       1 + static_cast<int>(rng() % (m - 1))};
        const Vertex dual = tau(omega(v, 1, a), -1, a);
        EXPECT_EQ(region_contains(Region{v, RegionKind::HMinus}, w, a),
                  region_contains(Region{dual, RegionKind::HPlus}, w, a))
            << "v=" << to_string(v) << " w=" << to_string(w) << " A(" << n << "," << m << ")";
    }
}

TEST(Region, HMinusAndHPlusAreConverse) {
    // w in H^-(v) exactly when v in H^+(w).
    for (const auto& [n, m] : {std::pair{2, 3}, std::pair{3, 5}, std::pair{4, 9}}) {
        const AlgebraParams a = A(n, m);
        for (int t = 1; t < m; ++t) {
            for (std::int64_t y = -2 * m; y <= 2 * m; ++y) {
                for (int s = 1; s < m; ++s) {
                    const Vertex v{0, t};
                    const Vertex w{y, s};
                    EXPECT_EQ(region_contains(Region{v, RegionKind::HMinus}, w, a),
                              region_contains(Region{w, RegionKind::HPlus}, v, a));
                }
            }
        }
    }
}

TEST(Ext, Examples) {
    const AlgebraParams a = A(2, 3);
    EXPECT_TRUE(ext_single(3, Vertex{0, 1}, Vertex{0, 1}, a));
    EXPECT_FALSE(ext_single(1, Vertex{0, 1}, Vertex{0, 1}, a));
    for (int n = 1; n <= 6; ++n) {
        for (int m = std::max(n, 2); m <= 9; ++m) {
            EXPECT_TRUE(ext_single(2 * n, Vertex{0, 1}, Vertex{0, 1}, A(n, m)));
        }
    }
    const Vertex v[] = {Vertex{0, 1}};
    EXPECT_THROW((void)ext_nonzero(0, v, v, a), DomainError);
}

TEST(Ext, SelfExtArithmeticPredicate) {
    // Ext^{2j}((0,t),(0,t)) != 0 iff rem(jm)_n < t; Ext^{2j+1} iff rem(jm)_n >= n - t.
    for (int n = 1; n <= 40; ++n) {
        for (int m = std::max(n, 2); m <= 40; ++m) {
            const AlgebraParams a = A(n, m);
            const int p = omega_period(a);
            for (int t = 1; 2 * t <= m; ++t) {
                for (int i = 1; i <= p; ++i) {
                    const std::int64_t r = rem(static_cast<std::int64_t>(i / 2) * m, n);
                    const bool expected = i % 2 == 0 ? r < t : r >= n - t;
                    ASSERT_EQ(ext_single(i, Vertex{0, t}, Vertex{0, t}, a), expected)
                        << "A(" << n << "," << m << ") t=" << t << " i=" << i;
                }
            }
        }
    }
}

TEST(Ext, MonotoneInLayer) {
    for (int n = 1; n <= 12; ++n) {
        for (int m = std::max(n, 3); m <= 20; ++m) {
            const AlgebraParams a = A(n, m);
            for (int t = 2; 2 * t <= m; ++t) {
                for (int i = 1; i <= omega_period(a); ++i) {
                    if (ext_single(i, Vertex{0, t - 1}, Vertex{0, t - 1}, a)) {
                        EXPECT_TRUE(ext_single(i, Vertex{0, t}, Vertex{0, t}, a));
                    }
                }
            }
        }
    }
}

TEST(RdPair, Examples) {
    const Vertex v01[] = {Vertex{0, 1}};
    const Vertex v03[] = {Vertex{0, 3}};
    EXPECT_EQ(rd_pair(v01, v01, A(2, 3)), ExtNat{2});
    EXPECT_EQ(rd_pair(v01, v01, A(3, 4)), ExtNat{4});
    EXPECT_EQ(rd_pair(v03, v03, A(4, 7)), ExtNat{2});
    EXPECT_TRUE(rd_pair({}, {}, A(4, 7)).is_infinite());
}

TEST(RdPair, IndependentOfColumn) {
    for (const auto& [n, m] : {std::pair{3, 5}, std::pair{4, 7}, std::pair{5, 13}}) {
        const AlgebraParams a = A(n, m);
        for (int t = 1; t < m; ++t) {
            const Vertex base[] = {Vertex{0, t}};
            for (int x = 1; x < n; ++x) {
                const Vertex other[] = {Vertex{x, t}};
                EXPECT_EQ(rd_pair(base, base, a), rd_pair(other, other, a));
            }
            const Vertex shifted[] = {canonicalize(omega(Vertex{0, t}, 1, a), a)};
            EXPECT_EQ(rd_pair(base, base, a), rd_pair(shifted, shifted, a));
        }
    }
}
