#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nakarig/quiver.hpp"

namespace nakarig {

/// A basic generator-cogenerator Lambda + pi(S), stored as the set S of
/// canonical stable vertices it contains. The projective layer t = m and the
/// zero layer t = 0 are members implicitly, so membership is tau^n-stable and
/// queries may use any lift on the cover.
class GenCogenSet {
public:
    /// The bare algebra Lambda.
    explicit GenCogenSet(AlgebraParams params);

    /// Lambda plus the given vertices; each is canonicalized and must be stable.
    GenCogenSet(AlgebraParams params, std::span<const Vertex> vertices);

    /// Lambda plus every indecomposable (the Auslander generator).
    static GenCogenSet auslander(AlgebraParams params);

    /// Lambda plus the vertices whose stable index bit is set in mask. Bit i
    /// stands for stable_vertex(i); requires n(m-1) <= 64.
    static GenCogenSet from_mask(AlgebraParams params, std::uint64_t mask);

    const AlgebraParams& params() const { return params_; }

    bool contains(const Vertex& v) const;
    bool contains_index(int index) const { return bits_[static_cast<std::size_t>(index)]; }

    /// Adds a stable vertex (any lift). Projective and zero layers are ignored.
    void insert(const Vertex& v);
    void erase(const Vertex& v);

    /// Stable members in canonical form, sorted by (x, t).
    std::vector<Vertex> members() const;
    int member_count() const;

    friend bool operator==(const GenCogenSet& a, const GenCogenSet& b) {
        return a.params_ == b.params_ && a.bits_ == b.bits_;
    }

private:
    AlgebraParams params_;
    std::vector<bool> bits_;
};

/// Index of a canonical stable vertex: (t - 1) * n + x.
int stable_index(const Vertex& canonical, const AlgebraParams& a);
Vertex stable_vertex(int index, const AlgebraParams& a);

/// {"n":N,"m":M,"members":[[x,t],...]} with members sorted by (x, t).
std::string to_json(const GenCogenSet& s);

/// Parses the document written by to_json. Members need not be sorted or
/// canonical on input; serializing the result gives the canonical form.
GenCogenSet gen_cogen_from_json(std::string_view text);

/// Parses "x:t,x:t,...". An empty string yields the bare algebra.
GenCogenSet parse_members(std::string_view spec, const AlgebraParams& a);

} // namespace nakarig
