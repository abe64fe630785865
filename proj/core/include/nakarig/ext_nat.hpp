#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "nakarig/errors.hpp"

namespace nakarig {

/// A non-negative integer or infinity. Infinity compares greater than every
/// finite value and absorbs addition.
class ExtNat {
public:
    constexpr ExtNat() = default;
    constexpr ExtNat(std::int64_t value) : value_{value} {} // NOLINT(implicit)

    static constexpr ExtNat infinity() {
        ExtNat r;
        r.infinite_ = true;
        return r;
    }

    constexpr bool is_infinite() const { return infinite_; }
    constexpr bool is_finite() const { return !infinite_; }

    std::int64_t value() const {
        if (infinite_) {
            throw ContractViolation("ExtNat::value() called on infinity");
        }
        return value_;
    }

    friend constexpr bool operator==(ExtNat a, ExtNat b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
    }
    friend constexpr std::strong_ordering operator<=>(ExtNat a, ExtNat b) {
        if (a.infinite_ || b.infinite_) {
            return a.infinite_ <=> b.infinite_;
        }
        return a.value_ <=> b.value_;
    }
    friend constexpr ExtNat operator+(ExtNat a, ExtNat b) {
        if (a.infinite_ || b.infinite_) {
            return infinity();
        }
        return ExtNat{a.value_ + b.value_};
    }

    /// "inf" for infinity, decimal digits otherwise.
    std::string to_string() const { return infinite_ ? std::string{"inf"} : std::to_string(value_); }

private:
    std::int64_t value_ = 0;
    bool infinite_ = false;
};

} // namespace nakarig
