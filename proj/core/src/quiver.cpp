#include "nakarig/quiver.hpp"

#include <numeric>
#include <sstream>

#include "nakarig/errors.hpp"

namespace nakarig {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

void require_stable(const Vertex& v, const AlgebraParams& a, const char* what) {
    if (!v.is_stable(a)) {
        std::ostringstream os;
        os << what << ": vertex " << to_string(v) << " is not stable (layer must be in [1, " << a.m - 1 << "])";
        throw DomainError(os.str());
    }
}

} // namespace

AlgebraParams AlgebraParams::make(int n, int m) {
    if (n < 1 || m < 1) {
        std::ostringstream os;
        os << "algebra parameters must be positive, got n=" << n << " m=" << m;
        throw DomainError(os.str());
    }
    return AlgebraParams{n, m};
}

void AlgebraParams::require_m_at_least_n() const {
    if (m < n) {
        std::ostringstream os;
        os << "closed forms need m >= n, got n=" << n << " m=" << m;
        throw UnsupportedParameters(os.str());
    }
}

std::string to_string(const Vertex& v) {
    std::ostringstream os;
    os << '(' << v.x << ',' << v.t << ')';
    return os.str();
}

Vertex canonicalize(const Vertex& v, const AlgebraParams& a) {
    if (v.t < 0 || v.t > a.m) {
        std::ostringstream os;
        os << "canonicalize: layer " << v.t << " outside [0, " << a.m << "]";
        throw DomainError(os.str());
    }
    return Vertex{floor_mod(v.x, a.n), v.t};
}

Vertex tau(const Vertex& v, std::int64_t k, const AlgebraParams& a) {
    require_stable(v, a, "tau");
    return Vertex{v.x + k, v.t};
}

Vertex omega(const Vertex& v, std::int64_t k, const AlgebraParams& a) {
    require_stable(v, a, "omega");
    // omega^2 = tau^m, so only the parity of k touches the layer.
    std::int64_t half = floor_div(k, 2);
    Vertex r{v.x + half * a.m, v.t};
    if (floor_mod(k, 2) == 1) {
        r = Vertex{r.x + r.t, a.m - r.t};
    }
    return r;
}

int omega_period(const AlgebraParams& a) { return 2 * a.n / std::gcd(a.m, a.n); }

bool region_contains(const Region& r, const Vertex& w, const AlgebraParams& a) {
    require_stable(r.anchor, a, "region_contains");
    require_stable(w, a, "region_contains");
    const std::int64_t x = r.anchor.x;
    const std::int64_t t = r.anchor.t;
    const std::int64_t m = a.m;
    const std::int64_t diag = w.x + w.t;
    switch (r.kind) {
    case RegionKind::HMinus:
        return x <= w.x && w.x <= x + t - 1 && x + t <= diag && diag <= x + m - 1;
    case RegionKind::HPlus:
        return x - (m - t) + 1 <= w.x && w.x <= x && x + 1 <= diag && diag <= x + t;
    }
    return false;
}

bool ext_nonzero(int i, std::span<const Vertex> xs, std::span<const Vertex> ys, const AlgebraParams& a) {
    if (i < 1) {
        throw DomainError("ext_nonzero: degree must be >= 1, got " + std::to_string(i));
    }
    for (const Vertex& y : ys) {
        require_stable(y, a, "ext_nonzero");
    }
    for (const Vertex& xv : xs) {
        const Vertex w = omega(xv, i, a);
        for (const Vertex& y : ys) {
            // tau^{jn} w can only land in H^-(y) when its column lies in [y.x, y.x + y.t - 1].
            const std::int64_t j_lo = -floor_div(w.x - y.x, a.n);
            const std::int64_t j_hi = floor_div(y.x + y.t - 1 - w.x, a.n);
            for (std::int64_t j = j_lo; j <= j_hi; ++j) {
                if (region_contains(Region{y, RegionKind::HMinus}, Vertex{w.x + j * a.n, w.t}, a)) {
                    return true;
                }
            }
        }
    }
    return false;
}

ExtNat rd_pair(std::span<const Vertex> xs, std::span<const Vertex> ys, const AlgebraParams& a) {
    if (xs.empty() || ys.empty()) {
        return ExtNat::infinity();
    }
    const int period = omega_period(a);
    for (int i = 1; i <= period; ++i) {
        if (ext_nonzero(i, xs, ys, a) || ext_nonzero(i, ys, xs, a)) {
            return ExtNat{i - 1};
        }
    }
    return ExtNat::infinity();
}

} // namespace nakarig
