#include "topoideal/maps.hpp"

#include <algorithm>
#include <string>

namespace topoideal {

namespace {

constexpr std::array<std::string_view, kMapClassCount> kNames = {
    "continuous",       "precontinuous",   "pre_i_continuous", "i_continuous",
    "star_i_continuous", "lc_continuous",  "i_lc_continuous",  "a_continuous",
    "beta_continuous",  "i_open_map",      "i_closed_map",
};

// Continuity class <- set class every open preimage must have.
constexpr std::array<std::pair<MapClass, SetClass>, 9> kPreimageClasses = {{
    {MapClass::continuous, SetClass::open},
    {MapClass::precontinuous, SetClass::preopen},
    {MapClass::pre_i_continuous, SetClass::pre_i_open},
    {MapClass::i_continuous, SetClass::i_open},
    {MapClass::star_i_continuous, SetClass::star_dense_in_itself},
    {MapClass::lc_continuous, SetClass::locally_closed},
    {MapClass::i_lc_continuous, SetClass::i_locally_closed},
    {MapClass::a_continuous, SetClass::a_set},
    {MapClass::beta_continuous, SetClass::beta_open},
}};

std::uint32_t preimage_requirement_mask() {
    std::uint32_t m = 0;
    for (auto [mc, sc] : kPreimageClasses) m |= std::uint32_t{1} << static_cast<int>(sc);
    return m;
}

MapClassVector from_meet(std::uint32_t meet) {
    MapClassVector out;
    for (auto [mc, sc] : kPreimageClasses) out.set(mc, (meet >> static_cast<int>(sc)) & 1u);
    return out;
}

struct ImageFlags {
    bool open_map = true;
    bool closed_map = true;
};

// Images of open sets I-open in `target`, images of closed sets I-closed in it.
ImageFlags image_flags(const SpaceMap& f, const IdealSpace& target) {
    const FiniteTopology& dom = f.dom().topology();
    const int m = target.n();
    ImageFlags flags;
    for (SubsetMask u : dom.opens()) {
        if (!is_i_open(target, image(f, u))) flags.open_map = false;
        const SubsetMask closed = u.complement(dom.n());
        if (!is_i_open(target, image(f, closed).complement(m))) flags.closed_map = false;
    }
    return flags;
}

} // namespace

std::string_view name(MapClass c) { return kNames[static_cast<std::size_t>(c)]; }

std::optional<MapClass> map_class_from_name(std::string_view s) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == s) return static_cast<MapClass>(i);
    }
    return std::nullopt;
}

const std::array<MapClass, kMapClassCount>& all_map_classes() {
    static const auto all = [] {
        std::array<MapClass, kMapClassCount> out{};
        for (int i = 0; i < kMapClassCount; ++i) out[static_cast<std::size_t>(i)] = static_cast<MapClass>(i);
        return out;
    }();
    return all;
}

SpaceMap::SpaceMap(IdealSpace dom, FiniteTopology cod, std::vector<int> table,
                   std::optional<Ideal> cod_ideal)
    : dom_(std::move(dom)), cod_(std::move(cod)), cod_ideal_(cod_ideal), table_(std::move(table)) {
    if (table_.size() != static_cast<std::size_t>(dom_.n())) {
        throw CarrierMismatch("map table has " + std::to_string(table_.size()) +
                              " entries for a domain of " + std::to_string(dom_.n()) + " points");
    }
    for (int y : table_) {
        if (y < 0 || y >= cod_.n()) {
            throw CarrierMismatch("map image " + std::to_string(y) + " is outside the codomain");
        }
    }
    if (cod_ideal_ && cod_ideal_->n() != cod_.n()) {
        throw CarrierMismatch("codomain ideal carrier differs from codomain topology");
    }
}

SubsetMask preimage(std::span<const int> table, SubsetMask v) {
    SubsetMask out;
    for (std::size_t x = 0; x < table.size(); ++x) {
        if (v.contains(table[x])) out |= SubsetMask::singleton(static_cast<int>(x));
    }
    return out;
}

SubsetMask preimage(const SpaceMap& f, SubsetMask v) { return preimage(f.table(), v); }

SubsetMask image(const SpaceMap& f, SubsetMask u) {
    SubsetMask out;
    for (int x : u.points()) out |= SubsetMask::singleton(f(x));
    return out;
}

MapClassVector map_classes(const SpaceMap& f, ImageClasses mode) {
    if (mode == ImageClasses::required && !f.cod_ideal()) {
        throw MissingCodomainIdeal("image-side classes need a codomain ideal");
    }
    const SpaceAnalysis analysis(f.dom());
    std::uint32_t meet = preimage_requirement_mask();
    for (SubsetMask v : f.cod().opens()) {
        meet &= analysis.classify(preimage(f, v)).bits();
    }
    MapClassVector out = from_meet(meet);
    if (f.cod_ideal()) {
        const ImageFlags flags = image_flags(f, IdealSpace(f.cod(), *f.cod_ideal()));
        out.set(MapClass::i_open_map, flags.open_map);
        out.set(MapClass::i_closed_map, flags.closed_map);
    }
    return out;
}

MapClassVector map_classes_from_table(std::span<const ClassVector> dom_classes,
                                      const FiniteTopology& cod, std::span<const int> table) {
    std::uint32_t meet = preimage_requirement_mask();
    for (SubsetMask v : cod.opens()) {
        meet &= dom_classes[preimage(table, v).bits()].bits();
    }
    return from_meet(meet);
}

ImageReadings image_class_readings(const SpaceMap& f) {
    if (!f.cod_ideal()) throw MissingCodomainIdeal("image-side classes need a codomain ideal");
    ImageReadings r;
    const ImageFlags cod = image_flags(f, IdealSpace(f.cod(), *f.cod_ideal()));
    r.i_open_map = cod.open_map;
    r.i_closed_map = cod.closed_map;
    if (f.dom().n() == f.cod().n()) {
        const ImageFlags dom = image_flags(f, f.dom());
        r.i_open_map_in_domain = dom.open_map;
        r.i_closed_map_in_domain = dom.closed_map;
    }
    return r;
}

EquivalenceReport check_pre_i_continuity_equivalences(const SpaceMap& f) {
    const IdealSpace& sp = f.dom();
    const FiniteTopology& topo = sp.topology();
    const int n = sp.n();
    const std::vector<SubsetMask> pio = pio_family(sp);

    EquivalenceReport r;
    r.preimages_pre_i_open = std::all_of(f.cod().opens().begin(), f.cod().opens().end(),
                                         [&](SubsetMask v) { return is_pre_i_open(sp, preimage(f, v)); });

    r.pointwise_pre_i_open_witness = true;
    r.star_closure_neighbourhood = true;
    for (int x = 0; x < n; ++x) {
        for (SubsetMask v : f.cod().opens()) {
            if (!v.contains(f(x))) continue;
            const SubsetMask pre = preimage(f, v);
            const bool witness = std::any_of(pio.begin(), pio.end(), [&](SubsetMask w) {
                return w.contains(x) && image(f, w).subset_of(v);
            });
            if (!witness) r.pointwise_pre_i_open_witness = false;
            if (!interior(topo, star_closure(sp, pre)).contains(x)) r.star_closure_neighbourhood = false;
        }
    }

    r.closed_preimages_pre_i_closed = true;
    for (SubsetMask v : f.cod().opens()) {
        const SubsetMask closed = v.complement(f.cod().n());
        if (!is_pre_i_open(sp, preimage(f, closed).complement(n))) {
            r.closed_preimages_pre_i_closed = false;
        }
    }
    return r;
}

SpaceMap compose(const SpaceMap& f, const SpaceMap& g) {
    if (f.cod().n() != g.dom().n()) {
        throw CarrierMismatch("cannot compose: inner codomain has " + std::to_string(f.cod().n()) +
                              " points, outer domain has " + std::to_string(g.dom().n()));
    }
    std::vector<int> table;
    table.reserve(f.table().size());
    for (int y : f.table()) table.push_back(g(y));
    return SpaceMap(f.dom(), g.cod(), std::move(table), g.cod_ideal());
}

} // namespace topoideal
