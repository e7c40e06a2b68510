#include "topoideal/enumerate.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdlib>
#include <mutex>
#include <string>
#include <string_view>

namespace topoideal {

namespace {

void require_topology_carrier(int n) {
    if (n < 1 || n > kMaxTopologyPoints) {
        throw CarrierTooLarge("topologies are enumerated for 1.." +
                              std::to_string(kMaxTopologyPoints) + " points, not " + std::to_string(n));
    }
}

// Depth-first over minimal-neighbourhood tables: nbhd[x] ranges over the
// supersets of {x}; complete tables that are transitive are preorders, and
// preorders correspond one-to-one with topologies.
void extend(int n, int x, std::vector<SubsetMask>& nbhd, std::vector<FiniteTopology>& out) {
    if (x == n) {
        for (int p = 0; p < n; ++p) {
            for (int q : nbhd[static_cast<std::size_t>(p)].points()) {
                if (!nbhd[static_cast<std::size_t>(q)].subset_of(nbhd[static_cast<std::size_t>(p)])) return;
            }
        }
        out.push_back(topology_from_min_nbhds(n, nbhd));
        return;
    }
    const auto others = SubsetMask::full(n) - SubsetMask::singleton(x);
    const auto bits = others.bits();
    for (SubsetMask::word_type s = bits;; s = (s - 1) & bits) {
        nbhd[static_cast<std::size_t>(x)] = SubsetMask{s} | SubsetMask::singleton(x);
        extend(n, x + 1, nbhd, out);
        if (s == 0) break;
    }
}

std::vector<FiniteTopology> generate(int n) {
    std::vector<FiniteTopology> out;
    std::vector<SubsetMask> nbhd(static_cast<std::size_t>(n));
    extend(n, 0, nbhd, out);
    std::sort(out.begin(), out.end(), [](const FiniteTopology& a, const FiniteTopology& b) {
        return a.opens() < b.opens();
    });
    return out;
}

} // namespace

const std::vector<FiniteTopology>& topologies(int n) {
    require_topology_carrier(n);
    static std::array<std::vector<FiniteTopology>, kMaxTopologyPoints + 1> cache;
    static std::array<std::once_flag, kMaxTopologyPoints + 1> once;
    const auto i = static_cast<std::size_t>(n);
    std::call_once(once[i], [&] { cache[i] = generate(n); });
    return cache[i];
}

std::vector<Ideal> ideals(int n) {
    std::vector<Ideal> out;
    const auto count = std::size_t{1} << n;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(ideal_at(n, i));
    return out;
}

Ideal ideal_at(int n, std::size_t index) {
    return Ideal(n, SubsetMask{static_cast<SubsetMask::word_type>(index)});
}

std::vector<SubsetMask> subsets(int n) {
    if (n < 0 || n > kMaxPoints) throw CarrierTooLarge("subsets: carrier of " + std::to_string(n) + " points");
    std::vector<SubsetMask> out;
    const auto count = std::size_t{1} << n;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.emplace_back(static_cast<SubsetMask::word_type>(i));
    return out;
}

std::uint64_t map_count(int dom_n, int cod_n, std::uint64_t budget) {
    if (dom_n < 1 || cod_n < 1) throw CarrierTooLarge("maps need nonempty carriers");
    std::uint64_t count = 1;
    for (int i = 0; i < dom_n; ++i) {
        count *= static_cast<std::uint64_t>(cod_n);
        if (count > budget) {
            throw BudgetExceeded(std::to_string(cod_n) + "^" + std::to_string(dom_n) +
                                 " maps exceed the budget of " + std::to_string(budget));
        }
    }
    return count;
}

std::vector<int> map_at(int dom_n, int cod_n, std::uint64_t index) {
    std::vector<int> table(static_cast<std::size_t>(dom_n));
    for (int x = dom_n - 1; x >= 0; --x) {
        table[static_cast<std::size_t>(x)] = static_cast<int>(index % static_cast<std::uint64_t>(cod_n));
        index /= static_cast<std::uint64_t>(cod_n);
    }
    return table;
}

std::vector<std::vector<int>> maps(int dom_n, int cod_n, std::uint64_t budget) {
    const std::uint64_t count = map_count(dom_n, cod_n, budget);
    std::vector<std::vector<int>> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(map_at(dom_n, cod_n, i));
    return out;
}

EnumValue resolve(const EnumCursor& c) {
    switch (c.kind) {
    case EnumKind::topologies:
        return topology_at(c.n, c.index);
    case EnumKind::ideals:
        return ideal_at(c.n, c.index);
    case EnumKind::maps:
        map_count(c.n, c.cod_n);
        return map_at(c.n, c.cod_n, c.index);
    case EnumKind::subsets:
        if (c.n < 0 || c.n > kMaxPoints || c.index >= (std::uint64_t{1} << c.n)) {
            throw CarrierTooLarge("subset index " + std::to_string(c.index) + " out of range");
        }
        return SubsetMask{static_cast<SubsetMask::word_type>(c.index)};
    }
    return SubsetMask{};
}

int max_enumeration_points() {
    const char* env = std::getenv("TOPOIDEAL_MAX_POINTS");
    if (env == nullptr) return 4;
    const std::string_view s(env);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) return 4;
    return std::clamp(value, 1, kMaxPoints);
}

} // namespace topoideal
