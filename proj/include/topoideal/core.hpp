#pragma once

/// \file
/// Finite topologies, ideals on finite carriers, ideal topological spaces, and
/// the operator algebra over them: interior, closure, local function,
/// star-closure, the idealized topology, the alpha topology and subspaces.
///
/// Every operator is defined through the minimal-neighbourhood table: in a
/// finite space each point x has a smallest open set containing it, so
/// quantifiers over "all open neighbourhoods of x" collapse to one set.

#include <array>
#include <span>
#include <vector>

#include "topoideal/errors.hpp"
#include "topoideal/subset.hpp"

namespace topoideal {

/// A validated topology on {0, ..., n-1}. Immutable after construction.
class FiniteTopology {
public:
    int n() const { return n_; }
    SubsetMask carrier() const { return SubsetMask::full(n_); }

    /// Open sets in ascending mask order.
    const std::vector<SubsetMask>& opens() const { return opens_; }

    /// Intersection of all open sets containing x.
    SubsetMask min_nbhd(int x) const { return min_nbhd_[static_cast<std::size_t>(x)]; }

    bool is_open(SubsetMask a) const;
    bool is_closed(SubsetMask a) const { return is_open(a.complement(n_)); }

    bool operator==(const FiniteTopology& other) const {
        return n_ == other.n_ && opens_ == other.opens_;
    }

private:
    friend FiniteTopology make_topology(int, std::span<const SubsetMask>);
    friend FiniteTopology topology_from_min_nbhds(int, std::span<const SubsetMask>);

    int n_ = 0;
    std::vector<SubsetMask> opens_;
    std::array<SubsetMask, kMaxPoints> min_nbhd_{};
};

/// Validates `family` as a topology on n points. Order and duplicates in the
/// input are irrelevant. Throws NotATopology with the offending pair.
FiniteTopology make_topology(int n, std::span<const SubsetMask> family);

/// Builds the topology whose minimal neighbourhoods are `nbhd` (one per
/// point). The table must describe a preorder: x in nbhd[x], and
/// y in nbhd[x] implies nbhd[y] subset of nbhd[x]. Throws NotATopology otherwise.
FiniteTopology topology_from_min_nbhds(int n, std::span<const SubsetMask> nbhd);

FiniteTopology discrete_topology(int n);
FiniteTopology indiscrete_topology(int n);

/// An ideal on a finite carrier. Heredity and finite additivity force every
/// such ideal to be the power set of its largest member, so only that
/// generator is stored.
class Ideal {
public:
    Ideal() = default;
    /// The principal ideal P(gen). `gen` must lie within the carrier.
    Ideal(int n, SubsetMask gen);

    int n() const { return n_; }
    SubsetMask generator() const { return gen_; }
    bool contains(SubsetMask a) const { return a.subset_of(gen_); }

    bool is_minimal() const { return gen_.is_empty(); }
    bool is_maximal() const { return gen_ == SubsetMask::full(n_); }

    /// Every member, ascending.
    std::vector<SubsetMask> family() const;

    bool operator==(const Ideal&) const = default;

private:
    int n_ = 0;
    SubsetMask gen_;
};

/// Validates an explicit family against heredity and finite additivity, then
/// stores the union of its members as the generator.
Ideal make_ideal(int n, std::span<const SubsetMask> family);

inline Ideal minimal_ideal(int n) { return Ideal(n, SubsetMask::empty()); }
inline Ideal maximal_ideal(int n) { return Ideal(n, SubsetMask::full(n)); }

/// A topology paired with an ideal on the same carrier.
class IdealSpace {
public:
    IdealSpace(FiniteTopology topo, Ideal ideal);

    int n() const { return topo_.n(); }
    const FiniteTopology& topology() const { return topo_; }
    const Ideal& ideal() const { return ideal_; }

    bool operator==(const IdealSpace&) const = default;

private:
    FiniteTopology topo_;
    Ideal ideal_;
};

SubsetMask interior(const FiniteTopology& topo, SubsetMask a);
SubsetMask closure(const FiniteTopology& topo, SubsetMask a);

/// Int(Cl(A)).
SubsetMask consolidation(const FiniteTopology& topo, SubsetMask a);

/// Smallest open set containing A (union of the minimal neighbourhoods of its points).
SubsetMask open_hull(const FiniteTopology& topo, SubsetMask a);

/// A*: points every neighbourhood of which meets A outside the ideal.
SubsetMask local_function(const IdealSpace& sp, SubsetMask a);

/// Cl*(A) = A | A*.
SubsetMask star_closure(const IdealSpace& sp, SubsetMask a);

/// The idealized topology generated by {U \ E : U open, E in the ideal}.
FiniteTopology tau_star(const IdealSpace& sp);

/// The topology of alpha-sets, A subset of Int(Cl(Int(A))).
FiniteTopology alpha_topology(const FiniteTopology& topo);

/// The ideal of nowhere dense sets.
Ideal nowhere_dense_ideal(const FiniteTopology& topo);

/// Relative topology on a nonempty subset, re-indexed onto {0, ..., |A|-1}.
struct Subspace {
    FiniteTopology topo;
    /// embedding[i] is the ambient index of subspace point i.
    std::vector<int> embedding;

    /// Re-indexes B & carrier into subspace coordinates.
    SubsetMask restrict(SubsetMask b) const;
    /// Maps a subspace mask back to ambient coordinates.
    SubsetMask lift(SubsetMask b) const;
};

Subspace subspace(const FiniteTopology& topo, SubsetMask a);

struct SpaceProps {
    bool hayashi_samuels = false;
    bool submaximal = false;
    bool i_strongly_irresolvable = false;

    bool operator==(const SpaceProps&) const = default;
};

SpaceProps space_props(const IdealSpace& sp);

} // namespace topoideal
