#pragma once

/// \file
/// Point maps between finite spaces and their continuity classes.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "topoideal/classes.hpp"

namespace topoideal {

enum class MapClass : std::uint8_t {
    continuous,
    precontinuous,
    pre_i_continuous,
    i_continuous,
    star_i_continuous,
    lc_continuous,
    i_lc_continuous,
    a_continuous,
    beta_continuous,
    i_open_map,
    i_closed_map,
};

inline constexpr int kMapClassCount = 11;

std::string_view name(MapClass c);
std::optional<MapClass> map_class_from_name(std::string_view name);
const std::array<MapClass, kMapClassCount>& all_map_classes();

class MapClassVector {
public:
    bool operator[](MapClass c) const { return (bits_ >> static_cast<int>(c)) & 1u; }
    void set(MapClass c, bool v) {
        const auto bit = std::uint32_t{1} << static_cast<int>(c);
        bits_ = v ? (bits_ | bit) : (bits_ & ~bit);
    }
    std::uint32_t bits() const { return bits_; }
    bool operator==(const MapClassVector&) const = default;

private:
    std::uint32_t bits_ = 0;
};

/// A total map from an ideal space to a finite topological space. The
/// codomain ideal is optional and only consulted by the image-side classes.
class SpaceMap {
public:
    SpaceMap(IdealSpace dom, FiniteTopology cod, std::vector<int> table,
             std::optional<Ideal> cod_ideal = std::nullopt);

    const IdealSpace& dom() const { return dom_; }
    const FiniteTopology& cod() const { return cod_; }
    const std::optional<Ideal>& cod_ideal() const { return cod_ideal_; }
    const std::vector<int>& table() const { return table_; }
    int operator()(int x) const { return table_[static_cast<std::size_t>(x)]; }

private:
    IdealSpace dom_;
    FiniteTopology cod_;
    std::optional<Ideal> cod_ideal_;
    std::vector<int> table_;
};

SubsetMask preimage(std::span<const int> table, SubsetMask v);
SubsetMask preimage(const SpaceMap& f, SubsetMask v);
SubsetMask image(const SpaceMap& f, SubsetMask u);

/// How map_classes treats i_open_map / i_closed_map.
enum class ImageClasses {
    if_available, ///< computed when the map carries a codomain ideal, false otherwise
    required,     ///< throws MissingCodomainIdeal when there is none
};

MapClassVector map_classes(const SpaceMap& f, ImageClasses mode = ImageClasses::if_available);

/// Preimage classes from a precomputed domain class table (indexed by mask
/// bits). Image-side flags are left false.
MapClassVector map_classes_from_table(std::span<const ClassVector> dom_classes,
                                      const FiniteTopology& cod, std::span<const int> table);

/// Image-side classes under both readings of their definition: images tested
/// in the codomain ideal space, and images tested in the domain ideal space
/// (only meaningful when both carriers have the same size).
struct ImageReadings {
    bool i_open_map = false;
    bool i_closed_map = false;
    std::optional<bool> i_open_map_in_domain;
    std::optional<bool> i_closed_map_in_domain;

    bool readings_differ() const {
        return (i_open_map_in_domain && *i_open_map_in_domain != i_open_map) ||
               (i_closed_map_in_domain && *i_closed_map_in_domain != i_closed_map);
    }
};

ImageReadings image_class_readings(const SpaceMap& f);

/// The four characterisations of pre-I-continuity, each evaluated on its own.
struct EquivalenceReport {
    bool preimages_pre_i_open = false;       ///< preimage of every open set is pre-I-open
    bool pointwise_pre_i_open_witness = false; ///< x in W subset f^-1(V), W pre-I-open
    bool star_closure_neighbourhood = false; ///< Cl*(f^-1(V)) is a neighbourhood of x
    bool closed_preimages_pre_i_closed = false;

    bool all_agree() const {
        return preimages_pre_i_open == pointwise_pre_i_open_witness &&
               preimages_pre_i_open == star_closure_neighbourhood &&
               preimages_pre_i_open == closed_preimages_pre_i_closed;
    }
    bool operator==(const EquivalenceReport&) const = default;
};

EquivalenceReport check_pre_i_continuity_equivalences(const SpaceMap& f);

/// g after f. Throws CarrierMismatch when f's codomain is not g's domain carrier.
SpaceMap compose(const SpaceMap& f, const SpaceMap& g);

} // namespace topoideal
