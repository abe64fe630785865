#pragma once

// Module-theoretic oracle for the self-injective Nakayama algebra A(n,m):
// the path algebra of the cyclic quiver 0 -> 1 -> ... -> n-1 -> 0 modulo
// paths of length m, over GF(p). Modules are explicit representations, and
// everything (Hom, stable Hom, minimal approximations, syzygies,
// decomposition) is plain linear algebra. Nothing here uses AR-quiver
// combinatorics.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

inline constexpr std::int64_t kPrime = 2147483647; // 2^31 - 1

/// Dense matrix over GF(kPrime), row-major.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : rows_{rows}, cols_{cols}, a_(static_cast<std::size_t>(rows * cols), 0) {}
    static Mat identity(int k);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::int64_t& operator()(int r, int c) { return a_[static_cast<std::size_t>(r * cols_ + c)]; }
    std::int64_t operator()(int r, int c) const { return a_[static_cast<std::size_t>(r * cols_ + c)]; }

    Mat column(int c) const;
    Mat operator*(const Mat& b) const;
    /// [this | b]
    Mat hcat(const Mat& b) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<std::int64_t> a_;
};

int rank(const Mat& a);
/// Columns form a basis of {v : a v = 0}.
Mat null_space(const Mat& a);
/// Solves b x = y for x, given that the columns of b are independent and
/// every column of y lies in their span.
Mat solve(const Mat& b, const Mat& y);

/// Uniserial module L_a^s: top S_a, composition factors S_a, ..., S_{a+s-1}.
struct Uniserial {
    int a = 0; // in [0, n)
    int s = 0; // in [1, m]
    friend auto operator<=>(const Uniserial&, const Uniserial&) = default;
};

/// Representation of the cyclic quiver: one space per vertex and one map per
/// arrow, arrow[v] : V_v -> V_{v+1 mod n}.
struct Rep {
    int n = 0;
    std::vector<int> dim;
    std::vector<Mat> arrow;

    /// Composite of `len` arrows starting at vertex v.
    Mat path(int v, int len) const;
};

class Algebra {
public:
    Algebra(int n, int m);

    int n() const { return n_; }
    int m() const { return m_; }

    /// Direct sum of uniserials in the standard basis: for each summand,
    /// e_0, ..., e_{s-1} with e_k at vertex a + k and alpha e_k = e_{k+1}.
    Rep uniserial_sum(const std::vector<Uniserial>& summands) const;

    /// Decomposition of a module into uniserials, from ranks of paths.
    std::map<Uniserial, int> decompose(const Rep& x) const;

    /// dim Hom(L_a^s, X) = dim ker(alpha^s on X_a).
    int hom_dim(const Uniserial& u, const Rep& x) const;
    /// Dimension of Hom modulo maps factoring through a projective.
    int stable_hom_dim(const Uniserial& u, const Rep& x) const;

    struct Approximation {
        std::map<Uniserial, int> multiplicity; // middle term
        Rep kernel;
    };
    /// Minimal right add(M)-approximation of X, for M a basic module listed by
    /// its indecomposable summands (projectives must be included by the caller).
    Approximation approximate(const std::vector<Uniserial>& M, const Rep& x) const;

    /// Omega_M of an indecomposable, as a multiset of uniserials.
    std::map<Uniserial, int> omega(const std::vector<Uniserial>& M, const Uniserial& u) const;

    /// Ext^i(X, Y) between uniserials via stable Hom from the i-th syzygy.
    int ext_dim(int i, const Uniserial& x, const Uniserial& y) const;

    /// Length of the minimal add(M)-resolution; -1 for infinite.
    int m_dim(const std::vector<Uniserial>& M, const Uniserial& u) const;

    /// Projectives plus the given non-projective uniserials.
    std::vector<Uniserial> with_projectives(const std::vector<Uniserial>& stable) const;

private:
    int n_;
    int m_;
};

} // namespace oracle
