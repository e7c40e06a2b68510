#pragma once

/// \file
/// Text format for ideal spaces and maps.
///
///     # comment
///     points: a b c d
///     open: {}; {a,c}; {d}; {a,c,d}; {a,b,c,d}
///     ideal: {c,d}
///
/// `open:` may repeat; the sets of all open lines form one family. The ideal
/// is either `ideal:` (a generator, the ideal being its power set) or
/// `ideal-family:` (every member, validated against the ideal axioms).
/// Points are indexed in lexicographic order of their names.
///
/// A map file is a codomain space file whose ideal line is optional, plus
///
///     map: a=x b=y c=x
///
/// assigning a codomain point to every domain point.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topoideal/core.hpp"
#include "topoideal/maps.hpp"

namespace topoideal {

class SpaceFileError : public Error {
public:
    enum class Kind {
        syntax,
        unknown_point,
        too_many_points,
        duplicate_point,
        missing_field,
        not_a_topology,
        not_an_ideal,
        bad_map,
    };

    SpaceFileError(Kind kind, const std::string& what, std::size_t line, std::size_t column);

    Kind kind() const { return kind_; }
    /// 1-based position of the offending token.
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    Kind kind_;
    std::size_t line_;
    std::size_t column_;
};

std::string_view name(SpaceFileError::Kind k);

/// An ideal space together with the names of its points.
struct NamedSpace {
    IdealSpace space;
    std::vector<std::string> names;

    bool operator==(const NamedSpace&) const = default;
};

/// Throws SpaceFileError.
NamedSpace parse_space_file(std::string_view text);

/// Canonical text: one `points:` line, one `open:` line listing every open set
/// in ascending mask order, one `ideal:` generator line.
std::string serialize(const NamedSpace& s);

/// Names taken from `default_point_name`.
std::string serialize(const IdealSpace& s);

/// Parses "{a,c}" against the point names; throws SpaceFileError.
SubsetMask parse_subset(std::string_view text, const std::vector<std::string>& names);

struct NamedMap {
    SpaceMap map;
    std::vector<std::string> cod_names;
};

/// Throws SpaceFileError.
NamedMap parse_map_file(std::string_view text, const NamedSpace& dom);

/// Canonical map file text.
std::string serialize(const NamedMap& m, const NamedSpace& dom);

} // namespace topoideal
