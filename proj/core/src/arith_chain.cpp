#include "nakarig/arith_chain.hpp"

#include <algorithm>
#include <sstream>

#include "nakarig/errors.hpp"

namespace nakarig {

namespace {

template <typename T>
void write_list(std::ostream& os, const std::vector<T>& xs) {
    os << '(';
    for (std::size_t i = 0; i < xs.size(); ++i) {
        os << (i ? "," : "") << xs[i];
    }
    os << ')';
}

} // namespace

std::string to_string(const EuclidChain& c) {
    std::ostringstream os;
    os << "k=";
    write_list(os, c.k);
    os << " s=";
    write_list(os, c.s);
    os << " F=";
    write_list(os, c.fib);
    os << " d=" << c.d;
    return os.str();
}

EuclidChain euclid_chain(const AlgebraParams& a) {
    a.require_m_at_least_n();
    EuclidChain c;
    c.k.push_back(a.m / a.n);
    c.s.push_back(a.n);
    c.s.push_back(a.m % a.n);
    while (c.s.back() != 0) {
        const std::int64_t prev = c.s[c.s.size() - 2];
        const std::int64_t cur = c.s.back();
        c.k.push_back(prev / cur);
        c.s.push_back(prev % cur);
    }
    // s = (s_0, ..., s_{d+1}, 0) has d + 3 entries.
    c.d = static_cast<int>(c.s.size()) - 3;
    c.fib = {0, 1};
    for (int l = 1; l <= c.d + 1; ++l) {
        c.fib.push_back(c.quotient(l) * c.weighted_fib(l - 1) + c.weighted_fib(l - 2));
    }
    return c;
}

std::int64_t rd_closed_form(int t, const AlgebraParams& a) {
    a.require_m_at_least_n();
    if (t < 1 || t > a.m - 1) {
        std::ostringstream os;
        os << "rd_closed_form: layer " << t << " outside [1, " << a.m - 1 << "]";
        throw DomainError(os.str());
    }
    const std::int64_t u = std::min(t, a.m - t);
    if (u >= a.n) {
        // Ext^1 already hits: rem(0)_n = 0 >= n - u.
        return 0;
    }
    const EuclidChain c = euclid_chain(a);
    const int d = c.d;
    // Closed intervals with odd l < d + 1 take precedence on shared endpoints.
    for (int l = 1; l < d + 1; l += 2) {
        if (c.remainder(l + 1) <= u && u <= c.remainder(l)) {
            return 2 * c.weighted_fib(l);
        }
    }
    if (d >= 0 && d % 2 == 0 && u == c.remainder(d + 1)) {
        return 2 * (c.weighted_fib(d + 1) - c.weighted_fib(d));
    }
    for (int l = 0; l <= d + 1; ++l) {
        if ((l % 2 == 0 || l == d + 1) && c.remainder(l + 1) < u && u < c.remainder(l)) {
            return 2 * c.weighted_fib(l) - 1;
        }
    }
    // Every u in [1, n) falls in one of the branches above.
    throw ContractViolation("rd_closed_form: no branch matched for t=" + std::to_string(t));
}

ExtNat rigdim_formula(const AlgebraParams& a) {
    a.require_m_at_least_n();
    if (a.n == 1) {
        return a.m == 1 ? ExtNat::infinity() : ExtNat{2};
    }
    if (a.m == a.n) {
        return 3;
    }
    const EuclidChain c = euclid_chain(a);
    const std::int64_t k0 = c.quotient(0);
    if (k0 == 1) {
        const std::int64_t k1 = c.quotient(1);
        if (c.d == 0) {
            return c.remainder(1) == 1 ? 2 * k1 : 2 * k1 + 1;
        }
        if (c.quotient(2) == 1 && c.remainder(3) <= c.remainder(2) - 2) {
            return 2 * k1 + 3;
        }
        return 2 * k1 + 2;
    }
    if (k0 == 2) {
        return c.remainder(1) == a.n - 1 ? 2 : 3;
    }
    return 2;
}

std::string to_string(WitnessFamily f) {
    switch (f) {
    case WitnessFamily::S:
        return "S";
    case WitnessFamily::N:
        return "N";
    case WitnessFamily::Auslander:
        return "Auslander";
    }
    return "?";
}

WitnessParams witness_params(const AlgebraParams& a) {
    a.require_m_at_least_n();
    if (a.n == 1) {
        throw UnsupportedParameters("witness_params needs n > 1");
    }
    if (a.m == a.n) {
        return {WitnessFamily::S, a.n - 1, 0};
    }
    const EuclidChain c = euclid_chain(a);
    const auto s1 = static_cast<int>(c.remainder(1));
    if (c.quotient(0) == 1) {
        if (c.d == 0) {
            return {WitnessFamily::N, s1 > 1 ? s1 - 1 : 1, a.n};
        }
        if (c.quotient(2) == 1 && c.remainder(3) <= c.remainder(2) - 2) {
            return {WitnessFamily::N, static_cast<int>(c.remainder(3)) + 1, a.n};
        }
        return {WitnessFamily::N, s1 - 1, a.n};
    }
    if (c.quotient(0) == 2 && s1 < a.n - 1) {
        return {WitnessFamily::N, a.n - 1, a.n};
    }
    return {WitnessFamily::Auslander, 0, 0};
}

int standard_delta(const AlgebraParams& a) {
    a.require_m_at_least_n();
    const int k0 = a.m / a.n;
    return std::max(a.n, (k0 - 1) * a.n);
}

} // namespace nakarig
