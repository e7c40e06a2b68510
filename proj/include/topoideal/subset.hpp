#pragma once

/// \file
/// Subsets of a finite carrier {0, ..., n-1} encoded as bit vectors.

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace topoideal {

/// Largest carrier the library accepts.
inline constexpr int kMaxPoints = 16;

/// A subset of a carrier of at most kMaxPoints points. Bit i set means point i
/// is a member. The mask carries no carrier size; operations that need one
/// (complement, validation) take it explicitly.
class SubsetMask {
public:
    using word_type = std::uint32_t;

    constexpr SubsetMask() = default;
    constexpr explicit SubsetMask(word_type bits) : bits_(bits) {}

    static constexpr SubsetMask empty() { return SubsetMask{}; }
    static constexpr SubsetMask full(int n) {
        return SubsetMask{n >= 32 ? ~word_type{0} : (word_type{1} << n) - 1};
    }
    static constexpr SubsetMask singleton(int x) { return SubsetMask{word_type{1} << x}; }

    constexpr word_type bits() const { return bits_; }
    constexpr bool is_empty() const { return bits_ == 0; }
    constexpr bool contains(int x) const { return (bits_ >> x) & 1u; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr bool subset_of(SubsetMask other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool within(int n) const { return subset_of(full(n)); }
    constexpr SubsetMask complement(int n) const { return SubsetMask{~bits_ & full(n).bits_}; }

    constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask{bits_ | o.bits_}; }
    constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask{bits_ & o.bits_}; }
    /// Set difference.
    constexpr SubsetMask operator-(SubsetMask o) const { return SubsetMask{bits_ & ~o.bits_}; }
    constexpr SubsetMask& operator|=(SubsetMask o) { bits_ |= o.bits_; return *this; }
    constexpr SubsetMask& operator&=(SubsetMask o) { bits_ &= o.bits_; return *this; }

    constexpr auto operator<=>(const SubsetMask&) const = default;

    /// Indices of member points, ascending.
    std::vector<int> points() const {
        std::vector<int> out;
        for (word_type b = bits_; b != 0; b &= b - 1) {
            out.push_back(std::countr_zero(b));
        }
        return out;
    }

private:
    word_type bits_ = 0;
};

/// Default point names a, b, c, ... used when a structure has no file of origin.
std::string default_point_name(int index);

/// "{a,c}" style rendering with default point names.
std::string to_string(SubsetMask s);

/// "{a,c}" style rendering with caller-supplied point names.
std::string to_string(SubsetMask s, const std::vector<std::string>& names);

} // namespace topoideal
