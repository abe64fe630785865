#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nakarig/ext_nat.hpp"

/// Integer combinatorics of the translation quiver ZA_{m-1}, its extension by
/// the projective layer t = m and the zero layer t = 0, and its quotient by the
/// cyclic group generated by tau^n.
///
/// A vertex (x, t) stands for the uniserial module with top S_{x mod n} and
/// length t. Arrows go (x, t) -> (x, t-1) and (x, t) -> (x-1, t+1), so
/// tau(x, t) = (x+1, t) and the syzygy automorphism is omega(x, t) = (x+t, m-t).
namespace nakarig {

/// The self-injective Nakayama algebra with n simple modules and Loewy length m.
struct AlgebraParams {
    int n = 1;
    int m = 1;

    /// Validates n >= 1 and m >= 1.
    static AlgebraParams make(int n, int m);

    /// Throws UnsupportedParameters unless m >= n.
    void require_m_at_least_n() const;

    /// Number of stable (non-projective, non-zero) vertices of the quotient, n(m-1).
    int stable_count() const { return n * (m - 1); }

    friend bool operator==(const AlgebraParams&, const AlgebraParams&) = default;
};

struct Vertex {
    std::int64_t x = 0;
    int t = 0;

    bool is_stable(const AlgebraParams& a) const { return t >= 1 && t <= a.m - 1; }

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

std::string to_string(const Vertex& v);

enum class RegionKind { HMinus, HPlus };

/// H^-(v): vertices with a nonzero stable map into v. H^+(v): vertices receiving
/// a nonzero stable map from v. Both are parallelograms on the universal cover.
struct Region {
    Vertex anchor;
    RegionKind kind = RegionKind::HMinus;
};

/// (x mod n, t). Throws DomainError if t is outside [0, m].
Vertex canonicalize(const Vertex& v, const AlgebraParams& a);

/// tau^k(v) = (x + k, t). v must be stable.
Vertex tau(const Vertex& v, std::int64_t k, const AlgebraParams& a);

/// omega^k(v); negative k applies omega^{-1}(x, t) = (x - (m - t), m - t).
Vertex omega(const Vertex& v, std::int64_t k, const AlgebraParams& a);

/// 2n / gcd(m, n). omega^P is the identity on the stable quotient, so Ext^i is
/// periodic in i with a period dividing P.
int omega_period(const AlgebraParams& a);

/// Membership of w in the region, both taken on the universal cover.
bool region_contains(const Region& r, const Vertex& w, const AlgebraParams& a);

/// Is Ext^i(pi(X), pi(Y)) nonzero? X and Y are canonical stable vertices.
bool ext_nonzero(int i, std::span<const Vertex> xs, std::span<const Vertex> ys, const AlgebraParams& a);

/// min{i >= 1 : Ext^i(X, Y) != 0 or Ext^i(Y, X) != 0} - 1, infinity when no i
/// up to the omega period hits.
ExtNat rd_pair(std::span<const Vertex> xs, std::span<const Vertex> ys, const AlgebraParams& a);

} // namespace nakarig
