#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nakarig/ext_nat.hpp"
#include "nakarig/quiver.hpp"

namespace nakarig {

/// Euclidean algorithm for (m, n):
///   m = k_0 n + s_1,  n = k_1 s_1 + s_2,  ...,  s_d = k_{d+1} s_{d+1},  s_{d+2} = 0
/// together with the weighted Fibonacci values F_l = k_l F_{l-1} + F_{l-2},
/// F_{-1} = 0, F_0 = 1.
///
/// Storage is zero-based: k[i] = k_i, s[i] = s_i (s[0] = n, last entry 0) and
/// fib[i] = F_{i-1}. When n divides m the chain stops at k_0 and d = -1.
struct EuclidChain {
    std::vector<std::int64_t> k;
    std::vector<std::int64_t> s;
    std::vector<std::int64_t> fib;
    int d = -1;

    /// k_i, s_i and F_l with the indices used in the formulas.
    std::int64_t quotient(int i) const { return k.at(static_cast<std::size_t>(i)); }
    std::int64_t remainder(int i) const { return s.at(static_cast<std::size_t>(i)); }
    std::int64_t weighted_fib(int l) const { return fib.at(static_cast<std::size_t>(l + 1)); }
};

std::string to_string(const EuclidChain& c);

/// Requires m >= n >= 1.
EuclidChain euclid_chain(const AlgebraParams& a);

/// Rigidity degree of the indecomposable on layer t (any column), from the
/// Euclid chain alone. t is first folded to min(t, m - t).
std::int64_t rd_closed_form(int t, const AlgebraParams& a);

/// Rigidity dimension of A(n, m), m >= n. Infinity only for the semisimple A(1, 1).
ExtNat rigdim_formula(const AlgebraParams& a);

enum class WitnessFamily { S, N, Auslander };

std::string to_string(WitnessFamily f);

/// Recipe for a generator-cogenerator that attains the rigidity dimension.
/// For the Auslander generator t and delta are unused (0).
struct WitnessParams {
    WitnessFamily family = WitnessFamily::Auslander;
    int t = 0;
    int delta = 0;

    friend bool operator==(const WitnessParams&, const WitnessParams&) = default;
};

/// Requires m >= n > 1.
WitnessParams witness_params(const AlgebraParams& a);

/// max{n, (k_0 - 1) n}; the gap width used by the delta-freeness test.
int standard_delta(const AlgebraParams& a);

} // namespace nakarig
