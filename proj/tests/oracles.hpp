#pragma once

// Brute-force reference implementations for tests. Everything here works from
// definitions over explicit families of open sets and never touches the
// minimal-neighbourhood table the library is built on.

#include <algorithm>
#include <random>
#include <vector>

#include "topoideal/classes.hpp"
#include "topoideal/core.hpp"
#include "topoideal/enumerate.hpp"
#include "topoideal/maps.hpp"

namespace oracle {

using topoideal::ClassVector;
using topoideal::FiniteTopology;
using topoideal::Ideal;
using topoideal::IdealSpace;
using topoideal::MapClass;
using topoideal::MapClassVector;
using topoideal::SetClass;
using topoideal::SubsetMask;

inline std::vector<SubsetMask> all_subsets(int n) {
    std::vector<SubsetMask> out;
    for (std::uint32_t b = 0; b < (1u << n); ++b) out.emplace_back(b);
    return out;
}

inline SubsetMask full(int n) { return SubsetMask::full(n); }

inline SubsetMask interior(const FiniteTopology& t, SubsetMask a) {
    SubsetMask out;
    for (SubsetMask u : t.opens()) {
        if (u.subset_of(a)) out |= u;
    }
    return out;
}

inline SubsetMask closure(const FiniteTopology& t, SubsetMask a) {
    SubsetMask out = full(t.n());
    for (SubsetMask u : t.opens()) {
        const SubsetMask closed = u.complement(t.n());
        if (a.subset_of(closed)) out &= closed;
    }
    return out;
}

// x in A* iff every open neighbourhood U of x has U & A outside the ideal.
inline SubsetMask local_function(const IdealSpace& sp, SubsetMask a) {
    SubsetMask out;
    for (int x = 0; x < sp.n(); ++x) {
        bool all = true;
        for (SubsetMask u : sp.topology().opens()) {
            if (u.contains(x) && sp.ideal().contains(u & a)) all = false;
        }
        if (all) out |= SubsetMask::singleton(x);
    }
    return out;
}

inline SubsetMask star_closure(const IdealSpace& sp, SubsetMask a) { return a | oracle::local_function(sp, a); }

// Every union of a subfamily of `base`, ascending.
inline std::vector<SubsetMask> unions_of(const std::vector<SubsetMask>& base) {
    std::vector<SubsetMask> out = {SubsetMask{}};
    for (SubsetMask b : base) {
        const std::size_t size = out.size();
        for (std::size_t i = 0; i < size; ++i) out.push_back(out[i] | b);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
    }
    return out;
}

inline std::vector<SubsetMask> tau_star_opens(const IdealSpace& sp) {
    std::vector<SubsetMask> base;
    for (SubsetMask u : sp.topology().opens()) {
        for (SubsetMask e : all_subsets(sp.n())) {
            if (sp.ideal().contains(e)) base.push_back(u - e);
        }
    }
    return unions_of(base);
}

inline std::vector<SubsetMask> alpha_opens(const FiniteTopology& t) {
    std::vector<SubsetMask> out;
    for (SubsetMask a : all_subsets(t.n())) {
        if (a.subset_of(oracle::interior(t, oracle::closure(t, oracle::interior(t, a))))) out.push_back(a);
    }
    return out;
}

inline Ideal nowhere_dense(const FiniteTopology& t) {
    SubsetMask gen;
    for (SubsetMask a : all_subsets(t.n())) {
        if (oracle::interior(t, oracle::closure(t, a)).is_empty()) gen |= a;
    }
    return Ideal(t.n(), gen);
}

inline bool is_meet(const FiniteTopology& t, SubsetMask a, const std::vector<SubsetMask>& family) {
    for (SubsetMask u : t.opens()) {
        for (SubsetMask f : family) {
            if ((u & f) == a) return true;
        }
    }
    return false;
}

inline bool pre_i_open(const IdealSpace& sp, SubsetMask a) {
    return a.subset_of(oracle::interior(sp.topology(), oracle::star_closure(sp, a)));
}

inline bool i_open(const IdealSpace& sp, SubsetMask a) {
    return a.subset_of(oracle::interior(sp.topology(), oracle::local_function(sp, a)));
}

inline ClassVector set_classes(const IdealSpace& sp, SubsetMask a) {
    const FiniteTopology& t = sp.topology();
    const int n = t.n();
    const SubsetMask co = a.complement(n);
    const SubsetMask star = oracle::local_function(sp, a);
    std::vector<SubsetMask> closed;
    std::vector<SubsetMask> regular_closed;
    std::vector<SubsetMask> perfect;
    for (SubsetMask s : all_subsets(n)) {
        if (t.is_closed(s)) closed.push_back(s);
        if (oracle::closure(t, oracle::interior(t, s)) == s) regular_closed.push_back(s);
        if (oracle::local_function(sp, s) == s) perfect.push_back(s);
    }
    const auto star_opens = tau_star_opens(sp);
    auto star_open = [&](SubsetMask s) { return std::binary_search(star_opens.begin(), star_opens.end(), s); };

    ClassVector v;
    v.set(SetClass::open, t.is_open(a));
    v.set(SetClass::closed, t.is_closed(a));
    v.set(SetClass::dense, oracle::closure(t, a) == full(n));
    v.set(SetClass::preopen, a.subset_of(oracle::interior(t, oracle::closure(t, a))));
    v.set(SetClass::semi_open, a.subset_of(oracle::closure(t, oracle::interior(t, a))));
    v.set(SetClass::alpha_open, a.subset_of(oracle::interior(t, oracle::closure(t, oracle::interior(t, a)))));
    v.set(SetClass::beta_open, a.subset_of(oracle::closure(t, oracle::interior(t, oracle::closure(t, a)))));
    v.set(SetClass::regular_closed, oracle::closure(t, oracle::interior(t, a)) == a);
    v.set(SetClass::locally_closed, is_meet(t, a, closed));
    v.set(SetClass::a_set, is_meet(t, a, regular_closed));
    v.set(SetClass::i_open, oracle::i_open(sp, a));
    v.set(SetClass::i_closed, oracle::i_open(sp, co));
    v.set(SetClass::pre_i_open, oracle::pre_i_open(sp, a));
    v.set(SetClass::pre_i_closed, oracle::pre_i_open(sp, co));
    v.set(SetClass::star_dense_in_itself, a.subset_of(star));
    v.set(SetClass::star_perfect, a == star);
    v.set(SetClass::tau_star_open, star_open(a));
    v.set(SetClass::tau_star_closed, star_open(co));
    v.set(SetClass::i_locally_closed, is_meet(t, a, perfect));
    return v;
}

inline SubsetMask preimage(const std::vector<int>& f, SubsetMask v) {
    SubsetMask out;
    for (std::size_t x = 0; x < f.size(); ++x) {
        if (v.contains(f[x])) out |= SubsetMask::singleton(static_cast<int>(x));
    }
    return out;
}

inline SubsetMask image(const std::vector<int>& f, SubsetMask u) {
    SubsetMask out;
    for (int x : u.points()) out |= SubsetMask::singleton(f[static_cast<std::size_t>(x)]);
    return out;
}

inline MapClassVector map_classes(const IdealSpace& dom, const FiniteTopology& cod, const std::vector<int>& f,
                                  const std::optional<Ideal>& cod_ideal = std::nullopt) {
    const std::pair<MapClass, SetClass> pairs[] = {
        {MapClass::continuous, SetClass::open},
        {MapClass::precontinuous, SetClass::preopen},
        {MapClass::pre_i_continuous, SetClass::pre_i_open},
        {MapClass::i_continuous, SetClass::i_open},
        {MapClass::star_i_continuous, SetClass::star_dense_in_itself},
        {MapClass::lc_continuous, SetClass::locally_closed},
        {MapClass::i_lc_continuous, SetClass::i_locally_closed},
        {MapClass::a_continuous, SetClass::a_set},
        {MapClass::beta_continuous, SetClass::beta_open},
    };
    MapClassVector out;
    for (auto [mc, sc] : pairs) {
        bool all = true;
        for (SubsetMask v : cod.opens()) {
            if (!oracle::set_classes(dom, oracle::preimage(f, v))[sc]) all = false;
        }
        out.set(mc, all);
    }
    if (cod_ideal) {
        const IdealSpace target(cod, *cod_ideal);
        bool open_map = true;
        bool closed_map = true;
        for (SubsetMask u : dom.topology().opens()) {
            if (!oracle::i_open(target, oracle::image(f, u))) open_map = false;
            const SubsetMask img = oracle::image(f, u.complement(dom.n()));
            if (!oracle::i_open(target, img.complement(cod.n()))) closed_map = false;
        }
        out.set(MapClass::i_open_map, open_map);
        out.set(MapClass::i_closed_map, closed_map);
    }
    return out;
}

// Every family of subsets containing {} and X and closed under pairwise
// unions and intersections, each as an ascending list.
inline std::vector<std::vector<SubsetMask>> topologies_naive(int n) {
    std::vector<SubsetMask> middle;
    for (SubsetMask s : all_subsets(n)) {
        if (!s.is_empty() && s != full(n)) middle.push_back(s);
    }
    std::vector<std::vector<SubsetMask>> out;
    const std::uint64_t families = std::uint64_t{1} << middle.size();
    for (std::uint64_t pick = 0; pick < families; ++pick) {
        std::vector<SubsetMask> fam = {SubsetMask{}, full(n)};
        for (std::size_t i = 0; i < middle.size(); ++i) {
            if ((pick >> i) & 1u) fam.push_back(middle[i]);
        }
        std::sort(fam.begin(), fam.end());
        fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
        auto has = [&](SubsetMask s) { return std::binary_search(fam.begin(), fam.end(), s); };
        bool ok = true;
        for (SubsetMask a : fam) {
            for (SubsetMask b : fam) {
                if (!has(a | b) || !has(a & b)) ok = false;
            }
        }
        if (ok) out.push_back(fam);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Every nonempty hereditary, finitely additive family of subsets.
inline std::vector<std::vector<SubsetMask>> ideals_naive(int n) {
    const auto subsets = all_subsets(n);
    std::vector<std::vector<SubsetMask>> out;
    const std::uint64_t families = std::uint64_t{1} << subsets.size();
    for (std::uint64_t pick = 1; pick < families; ++pick) {
        std::vector<SubsetMask> fam;
        for (std::size_t i = 0; i < subsets.size(); ++i) {
            if ((pick >> i) & 1u) fam.push_back(subsets[i]);
        }
        auto has = [&](SubsetMask s) { return std::find(fam.begin(), fam.end(), s) != fam.end(); };
        bool ok = true;
        for (SubsetMask a : fam) {
            for (SubsetMask b : subsets) {
                if (b.subset_of(a) && !has(b)) ok = false;
            }
            for (SubsetMask b : fam) {
                if (!has(a | b)) ok = false;
            }
        }
        if (ok) out.push_back(fam);
    }
    return out;
}

// Every labeled ideal space on n points.
inline std::vector<IdealSpace> all_spaces(int n) {
    std::vector<IdealSpace> out;
    for (const FiniteTopology& t : topoideal::topologies(n)) {
        for (std::uint32_t g = 0; g < (1u << n); ++g) out.emplace_back(t, Ideal(n, SubsetMask{g}));
    }
    return out;
}

// A uniformly drawn ideal space on n points.
inline IdealSpace random_space(int n, std::mt19937& rng) {
    const auto& topos = topoideal::topologies(n);
    std::uniform_int_distribution<std::size_t> pick_topo(0, topos.size() - 1);
    std::uniform_int_distribution<std::uint32_t> pick_gen(0, (1u << n) - 1);
    return IdealSpace(topos[pick_topo(rng)], Ideal(n, SubsetMask{pick_gen(rng)}));
}

inline std::vector<int> random_map(int n, int m, std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, m - 1);
    std::vector<int> f(static_cast<std::size_t>(n));
    for (int& y : f) y = pick(rng);
    return f;
}

} // namespace oracle
