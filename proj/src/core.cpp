#include "topoideal/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace topoideal {

namespace {

void require_carrier(int n) {
    if (n < 0 || n > kMaxPoints) {
        throw CarrierTooLarge("carrier of " + std::to_string(n) + " points is outside 0.." +
                              std::to_string(kMaxPoints));
    }
}

std::vector<SubsetMask> canonical(std::span<const SubsetMask> family) {
    std::vector<SubsetMask> out(family.begin(), family.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

bool FiniteTopology::is_open(SubsetMask a) const {
    for (int x : a.points()) {
        if (!min_nbhd(x).subset_of(a)) return false;
    }
    return true;
}

FiniteTopology make_topology(int n, std::span<const SubsetMask> family) {
    require_carrier(n);
    const SubsetMask full = SubsetMask::full(n);
    std::vector<SubsetMask> opens = canonical(family);
    for (SubsetMask u : opens) {
        if (!u.within(n)) {
            throw NotATopology("set " + to_string(u) + " is not within the carrier", u, u);
        }
    }
    auto has = [&](SubsetMask s) { return std::binary_search(opens.begin(), opens.end(), s); };
    if (!has(SubsetMask::empty())) {
        throw NotATopology("empty set is not open", SubsetMask::empty(), SubsetMask::empty());
    }
    if (!has(full)) {
        throw NotATopology("carrier " + to_string(full) + " is not open", full, full);
    }
    for (std::size_t i = 0; i < opens.size(); ++i) {
        for (std::size_t j = i + 1; j < opens.size(); ++j) {
            const SubsetMask u = opens[i];
            const SubsetMask v = opens[j];
            if (!has(u | v)) {
                throw NotATopology("union of " + to_string(u) + " and " + to_string(v) +
                                       " is not open", u, v);
            }
            if (!has(u & v)) {
                throw NotATopology("intersection of " + to_string(u) + " and " + to_string(v) +
                                       " is not open", u, v);
            }
        }
    }

    FiniteTopology t;
    t.n_ = n;
    for (int x = 0; x < n; ++x) {
        SubsetMask m = full;
        for (SubsetMask u : opens) {
            if (u.contains(x)) m &= u;
        }
        t.min_nbhd_[static_cast<std::size_t>(x)] = m;
    }
    t.opens_ = std::move(opens);
    return t;
}

FiniteTopology topology_from_min_nbhds(int n, std::span<const SubsetMask> nbhd) {
    require_carrier(n);
    if (nbhd.size() != static_cast<std::size_t>(n)) {
        throw std::invalid_argument("neighbourhood table size does not match carrier");
    }
    FiniteTopology t;
    t.n_ = n;
    for (int x = 0; x < n; ++x) {
        const SubsetMask m = nbhd[static_cast<std::size_t>(x)];
        if (!m.contains(x) || !m.within(n)) {
            throw NotATopology("neighbourhood of point " + default_point_name(x) +
                                   " does not contain it", m, m);
        }
        t.min_nbhd_[static_cast<std::size_t>(x)] = m;
    }
    for (int x = 0; x < n; ++x) {
        const SubsetMask m = t.min_nbhd(x);
        for (int y : m.points()) {
            if (!t.min_nbhd(y).subset_of(m)) {
                throw NotATopology("neighbourhood table is not transitive", m, t.min_nbhd(y));
            }
        }
    }
    const SubsetMask::word_type limit = SubsetMask::full(n).bits();
    for (SubsetMask::word_type b = 0;; ++b) {
        if (t.is_open(SubsetMask{b})) t.opens_.push_back(SubsetMask{b});
        if (b == limit) break;
    }
    return t;
}

FiniteTopology discrete_topology(int n) {
    std::vector<SubsetMask> nbhd;
    for (int x = 0; x < n; ++x) nbhd.push_back(SubsetMask::singleton(x));
    return topology_from_min_nbhds(n, nbhd);
}

FiniteTopology indiscrete_topology(int n) {
    std::vector<SubsetMask> nbhd(static_cast<std::size_t>(n), SubsetMask::full(n));
    return topology_from_min_nbhds(n, nbhd);
}

Ideal::Ideal(int n, SubsetMask gen) : n_(n), gen_(gen) {
    require_carrier(n);
    if (!gen.within(n)) {
        throw NotAnIdeal("generator " + to_string(gen) + " is not within the carrier",
                         NotAnIdeal::Axiom::carrier, gen, gen);
    }
}

std::vector<SubsetMask> Ideal::family() const {
    // Submasks of the generator, collected descending then reversed.
    std::vector<SubsetMask> out;
    const auto g = gen_.bits();
    for (SubsetMask::word_type s = g;; s = (s - 1) & g) {
        out.emplace_back(s);
        if (s == 0) break;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Ideal make_ideal(int n, std::span<const SubsetMask> family) {
    require_carrier(n);
    const std::vector<SubsetMask> members = canonical(family);
    if (members.empty()) {
        throw NotAnIdeal("an ideal must be nonempty", NotAnIdeal::Axiom::nonempty,
                         SubsetMask{}, SubsetMask{});
    }
    auto has = [&](SubsetMask s) { return std::binary_search(members.begin(), members.end(), s); };
    SubsetMask gen;
    for (SubsetMask a : members) {
        if (!a.within(n)) {
            throw NotAnIdeal("set " + to_string(a) + " is not within the carrier",
                             NotAnIdeal::Axiom::carrier, a, a);
        }
        gen |= a;
        // Heredity: every submask of a member is a member.
        const auto bits = a.bits();
        for (SubsetMask::word_type s = bits;; s = (s - 1) & bits) {
            if (!has(SubsetMask{s})) {
                throw NotAnIdeal("heredity fails: " + to_string(SubsetMask{s}) + " is a subset of " +
                                     to_string(a) + " but not a member",
                                 NotAnIdeal::Axiom::heredity, a, SubsetMask{s});
            }
            if (s == 0) break;
        }
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            if (!has(members[i] | members[j])) {
                throw NotAnIdeal("finite additivity fails: " + to_string(members[i]) + " | " +
                                     to_string(members[j]) + " is not a member",
                                 NotAnIdeal::Axiom::additivity, members[i], members[j]);
            }
        }
    }
    return Ideal(n, gen);
}

IdealSpace::IdealSpace(FiniteTopology topo, Ideal ideal)
    : topo_(std::move(topo)), ideal_(ideal) {
    if (topo_.n() != ideal_.n()) {
        throw CarrierMismatch("topology has " + std::to_string(topo_.n()) +
                              " points but ideal has " + std::to_string(ideal_.n()));
    }
}

SubsetMask interior(const FiniteTopology& topo, SubsetMask a) {
    SubsetMask out;
    for (int x = 0; x < topo.n(); ++x) {
        if (topo.min_nbhd(x).subset_of(a)) out |= SubsetMask::singleton(x);
    }
    return out;
}

SubsetMask closure(const FiniteTopology& topo, SubsetMask a) {
    const int n = topo.n();
    return interior(topo, a.complement(n)).complement(n);
}

SubsetMask consolidation(const FiniteTopology& topo, SubsetMask a) {
    return interior(topo, closure(topo, a));
}

SubsetMask open_hull(const FiniteTopology& topo, SubsetMask a) {
    SubsetMask out;
    for (int x : a.points()) out |= topo.min_nbhd(x);
    return out;
}

SubsetMask local_function(const IdealSpace& sp, SubsetMask a) {
    // Heredity: if the minimal neighbourhood meets A inside the ideal, so does
    // every smaller intersection, hence one test per point suffices.
    const FiniteTopology& topo = sp.topology();
    SubsetMask out;
    for (int x = 0; x < topo.n(); ++x) {
        if (!sp.ideal().contains(topo.min_nbhd(x) & a)) out |= SubsetMask::singleton(x);
    }
    return out;
}

SubsetMask star_closure(const IdealSpace& sp, SubsetMask a) {
    return a | local_function(sp, a);
}

FiniteTopology tau_star(const IdealSpace& sp) {
    // The base {U \ E} is closed under finite intersections, so the smallest
    // basic set around x is min_nbhd(x) minus every ideal point other than x.
    const FiniteTopology& topo = sp.topology();
    const SubsetMask gen = sp.ideal().generator();
    std::vector<SubsetMask> nbhd;
    for (int x = 0; x < topo.n(); ++x) {
        nbhd.push_back(topo.min_nbhd(x) - (gen - SubsetMask::singleton(x)));
    }
    return topology_from_min_nbhds(topo.n(), nbhd);
}

FiniteTopology alpha_topology(const FiniteTopology& topo) {
    const int n = topo.n();
    std::vector<SubsetMask> nbhd(static_cast<std::size_t>(n), SubsetMask::full(n));
    const SubsetMask::word_type limit = SubsetMask::full(n).bits();
    for (SubsetMask::word_type b = 0;; ++b) {
        const SubsetMask a{b};
        if (a.subset_of(interior(topo, closure(topo, interior(topo, a))))) {
            for (int x : a.points()) nbhd[static_cast<std::size_t>(x)] &= a;
        }
        if (b == limit) break;
    }
    return topology_from_min_nbhds(n, nbhd);
}

Ideal nowhere_dense_ideal(const FiniteTopology& topo) {
    const int n = topo.n();
    SubsetMask gen;
    const SubsetMask::word_type limit = SubsetMask::full(n).bits();
    for (SubsetMask::word_type b = 0;; ++b) {
        const SubsetMask a{b};
        if (consolidation(topo, a).is_empty()) gen |= a;
        if (b == limit) break;
    }
    if (!consolidation(topo, gen).is_empty()) {
        throw std::logic_error("union of nowhere dense sets is not nowhere dense");
    }
    return Ideal(n, gen);
}

SubsetMask Subspace::restrict(SubsetMask b) const {
    SubsetMask out;
    for (std::size_t i = 0; i < embedding.size(); ++i) {
        if (b.contains(embedding[i])) out |= SubsetMask::singleton(static_cast<int>(i));
    }
    return out;
}

SubsetMask Subspace::lift(SubsetMask b) const {
    SubsetMask out;
    for (int i : b.points()) out |= SubsetMask::singleton(embedding.at(static_cast<std::size_t>(i)));
    return out;
}

Subspace subspace(const FiniteTopology& topo, SubsetMask a) {
    a &= topo.carrier();
    if (a.is_empty()) throw EmptyCarrier("subspace of the empty set");
    Subspace sub;
    sub.embedding = a.points();
    std::vector<SubsetMask> nbhd;
    for (int x : sub.embedding) nbhd.push_back(sub.restrict(topo.min_nbhd(x) & a));
    sub.topo = topology_from_min_nbhds(a.size(), nbhd);
    return sub;
}

SpaceProps space_props(const IdealSpace& sp) {
    const FiniteTopology& topo = sp.topology();
    const int n = topo.n();
    const SubsetMask full = SubsetMask::full(n);
    SpaceProps p;

    bool open_meets_ideal = false;
    for (SubsetMask u : topo.opens()) {
        if (!u.is_empty() && sp.ideal().contains(u)) open_meets_ideal = true;
    }
    const bool carrier_perfect = local_function(sp, full) == full;
    if (open_meets_ideal == carrier_perfect) {
        throw std::logic_error("Hayashi-Samuels characterisations disagree");
    }
    p.hayashi_samuels = carrier_perfect;

    const FiniteTopology star = tau_star(sp);
    p.submaximal = true;
    p.i_strongly_irresolvable = true;
    for (SubsetMask::word_type b = 0;; ++b) {
        const SubsetMask a{b};
        if (closure(topo, a) == full && !topo.is_open(a)) p.submaximal = false;
        if (a.subset_of(interior(topo, star_closure(sp, a))) && !star.is_open(a)) {
            p.i_strongly_irresolvable = false;
        }
        if (b == full.bits()) break;
    }
    return p;
}

} // namespace topoideal
