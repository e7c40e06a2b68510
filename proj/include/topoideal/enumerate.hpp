#pragma once

/// \file
/// Deterministic, index-addressable enumerations of every labeled topology,
/// ideal, subset and point map on small carriers. Object i of a stream is a
/// pure function of (kind, n, i), so any partition of the index range can be
/// swept independently.

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "topoideal/core.hpp"

namespace topoideal {

/// Largest carrier for which topologies() is available.
inline constexpr int kMaxTopologyPoints = 5;

/// Default cap on cod_n^dom_n for map streams.
inline constexpr std::uint64_t kDefaultMapBudget = std::uint64_t{1} << 20;

/// Every labeled topology on n points, 1 <= n <= 5, ordered by the ascending
/// list of open sets. Built once per n from the preorder of minimal
/// neighbourhoods and cached. Throws CarrierTooLarge outside 1..5.
const std::vector<FiniteTopology>& topologies(int n);

inline std::size_t topology_count(int n) { return topologies(n).size(); }
inline const FiniteTopology& topology_at(int n, std::size_t index) { return topologies(n).at(index); }

/// The 2^n ideals P(S), ordered by generator mask. Ideal i has generator i.
std::vector<Ideal> ideals(int n);
Ideal ideal_at(int n, std::size_t index);

/// All 2^n subsets ascending.
std::vector<SubsetMask> subsets(int n);

/// cod_n^dom_n, or BudgetExceeded when it exceeds `budget`.
std::uint64_t map_count(int dom_n, int cod_n, std::uint64_t budget = kDefaultMapBudget);

/// Map number `index` in mixed-radix order: point 0 is the most significant
/// digit, so for (2,2) the order is aa, ab, ba, bb.
std::vector<int> map_at(int dom_n, int cod_n, std::uint64_t index);

std::vector<std::vector<int>> maps(int dom_n, int cod_n, std::uint64_t budget = kDefaultMapBudget);

enum class EnumKind { topologies, ideals, maps, subsets };

/// Address of one enumerated object. `cod_n` is only used by maps.
struct EnumCursor {
    EnumKind kind = EnumKind::subsets;
    int n = 0;
    std::uint64_t index = 0;
    int cod_n = 0;
};

using EnumValue = std::variant<FiniteTopology, Ideal, std::vector<int>, SubsetMask>;

EnumValue resolve(const EnumCursor& cursor);

/// Enumeration cap from TOPOIDEAL_MAX_POINTS (default 4, clamped to 1..16).
int max_enumeration_points();

} // namespace topoideal
