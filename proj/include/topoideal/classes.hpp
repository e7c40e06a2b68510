#pragma once

/// \file
/// Classification of subsets of an ideal space into every set class the
/// library knows (open, preopen, pre-I-open, I-open, star-perfect, ...).

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "topoideal/core.hpp"

namespace topoideal {

enum class SetClass : std::uint8_t {
    open,
    closed,
    dense,
    preopen,
    semi_open,
    alpha_open,
    beta_open,
    regular_closed,
    locally_closed,
    a_set,
    i_open,
    i_closed,
    pre_i_open,
    pre_i_closed,
    star_dense_in_itself,
    star_perfect,
    tau_star_open,
    tau_star_closed,
    i_locally_closed,
};

inline constexpr int kSetClassCount = 19;

std::string_view name(SetClass c);
std::optional<SetClass> set_class_from_name(std::string_view name);

/// All set classes in declaration order.
const std::array<SetClass, kSetClassCount>& all_set_classes();

/// One flag per SetClass.
class ClassVector {
public:
    bool operator[](SetClass c) const { return (bits_ >> static_cast<int>(c)) & 1u; }
    void set(SetClass c, bool v) {
        const auto bit = std::uint32_t{1} << static_cast<int>(c);
        bits_ = v ? (bits_ | bit) : (bits_ & ~bit);
    }
    std::uint32_t bits() const { return bits_; }
    bool operator==(const ClassVector&) const = default;

private:
    std::uint32_t bits_ = 0;
};

bool is_pre_i_open(const IdealSpace& sp, SubsetMask a);
bool is_i_open(const IdealSpace& sp, SubsetMask a);

/// A = U & V with U open and V star-perfect.
bool is_i_locally_closed(const IdealSpace& sp, SubsetMask a);

ClassVector set_classes(const IdealSpace& sp, SubsetMask a);

/// Every pre-I-open subset, ascending.
std::vector<SubsetMask> pio_family(const IdealSpace& sp);

/// Every subset of the carrier that has class `c`, ascending.
std::vector<SubsetMask> class_family(const IdealSpace& sp, SetClass c);

/// Per-space data shared by repeated classification queries: the idealized
/// topology and the star-perfect and regular closed families.
class SpaceAnalysis {
public:
    explicit SpaceAnalysis(IdealSpace sp);

    const IdealSpace& space() const { return space_; }
    const FiniteTopology& star_topology() const { return star_; }
    const std::vector<SubsetMask>& star_perfect_sets() const { return star_perfect_; }
    const std::vector<SubsetMask>& regular_closed_sets() const { return regular_closed_; }

    ClassVector classify(SubsetMask a) const;

    /// classify() for every subset, indexed by mask bits.
    std::vector<ClassVector> class_table() const;

private:
    IdealSpace space_;
    FiniteTopology star_;
    std::vector<SubsetMask> star_perfect_;
    std::vector<SubsetMask> regular_closed_;
};

} // namespace topoideal
