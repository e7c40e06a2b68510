#pragma once

/// \file
/// Theorem registry, exhaustive sweeps and counterexample search.
///
/// Each registered check is an implication, a biconditional or a structural
/// property quantified over one scope (spaces, subsets, subset pairs, subset
/// families, maps, map pairs). A sweep visits every labeled ideal space on a
/// carrier of exactly `bound` points, applies each selected check to the
/// spaces that pass its hypothesis filter, and collects violations with
/// replayable witnesses.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "topoideal/claim.hpp"
#include "topoideal/core.hpp"
#include "topoideal/maps.hpp"

namespace topoideal {

enum class Scope : std::uint8_t { spaces, sets, set_pairs, set_families, maps, map_pairs };

enum class Hypothesis : std::uint8_t {
    none,
    hayashi_samuels,
    submaximal,
    minimal_ideal,
    maximal_ideal,
    nowhere_dense_ideal,
};

enum class Direction : std::uint8_t { both, fwd, bwd };

enum class CheckKind : std::uint8_t { implication, biconditional, structural };

std::string_view name(Scope s);
std::string_view name(Hypothesis h);
std::string_view name(Direction d);
std::optional<Hypothesis> hypothesis_from_name(std::string_view s);
std::optional<Direction> direction_from_name(std::string_view s);

/// True when the space satisfies the hypothesis.
bool satisfies(const IdealSpace& sp, Hypothesis h);

struct TheoremCheck {
    std::string_view id;
    /// lhs => rhs, lhs <=> rhs, or the structural property, in claim vocabulary.
    std::string_view statement;
    Scope scope;
    Hypothesis hypothesis;
    CheckKind kind;
    /// Largest carrier the check runs on; larger bounds report it as skipped.
    int max_points;
};

/// Every check, in registry order.
const std::vector<TheoremCheck>& theorem_registry();

/// Throws UnknownTheoremId.
const TheoremCheck& find_check(std::string_view id);

/// Statements deliberately left out of the registry, with the reason.
const std::vector<std::pair<std::string_view, std::string_view>>& out_of_scope_notes();

class UnsupportedDirection : public Error {
public:
    using Error::Error;
};

class ScopeError : public Error {
public:
    using Error::Error;
};

/// A structure on which a check (or a searched claim) holds the wrong way.
struct Witness {
    std::string check_id;
    Direction direction = Direction::both;
    IdealSpace space;
    /// maps: the codomain; map pairs: the final codomain.
    std::optional<FiniteTopology> codomain;
    /// map pairs: the intermediate space's topology.
    std::optional<FiniteTopology> middle;
    /// Intermediate or codomain ideal when the structure has one.
    std::optional<Ideal> second_ideal;
    std::vector<SubsetMask> sets;
    std::vector<int> map;
    std::vector<int> second_map;
    /// Named values that made the structure a witness (lhs, rhs, flags).
    std::vector<std::pair<std::string, bool>> trace;
    /// Enumeration position; witnesses sort by it.
    std::vector<std::uint64_t> key;
};

struct CheckResult {
    std::string id;
    Direction direction = Direction::both;
    Hypothesis hypothesis = Hypothesis::none;
    int bound = 0;
    bool skipped = false;
    std::uint64_t spaces = 0;    ///< spaces passing the hypothesis filter
    std::uint64_t instances = 0; ///< structures in scope that were evaluated
    std::uint64_t lhs_true = 0;
    std::uint64_t rhs_true = 0;
    std::uint64_t violations = 0;
    /// The first violations in enumeration order, at most SuiteOptions::max_witnesses.
    std::vector<Witness> witnesses;

    bool passed() const { return violations == 0; }
};

struct Report {
    std::string suite;
    int bound = 0;
    int jobs = 1;
    std::uint64_t spaces_visited = 0;
    std::vector<CheckResult> checks;
    double wall_ms = 0;

    std::uint64_t total_violations() const;
    bool passed() const { return total_violations() == 0; }
    const CheckResult& check(std::string_view id) const;
};

struct SuiteOptions {
    int jobs = 1;
    /// Run the serial reference sweep, which classifies every structure from
    /// scratch instead of through per-space tables.
    bool reference = false;
    Direction direction = Direction::both;
    /// Replaces every selected check's own hypothesis.
    std::optional<Hypothesis> hypothesis;
    std::size_t max_witnesses = 8;
    /// Carrier limits per scope family; checks in a family run at
    /// min(bound, limit).
    int max_set_points = 4;
    int max_map_points = 3;
};

/// Runs the selected checks (empty selection or {"all"} means every check)
/// over every ideal space on `bound` points. Checks whose scope limit is
/// below `bound` run at their limit instead and report the bound they used;
/// checks whose own max_points is below that are reported as skipped.
/// Throws UnknownTheoremId, UnsupportedDirection, CarrierTooLarge.
Report run_theorem_suite(int bound, const std::vector<std::string>& selection,
                         const SuiteOptions& options = {});

/// One direction of one check under a caller-chosen hypothesis.
Report check_direction(std::string_view id, Direction direction, Hypothesis hypothesis, int bound,
                       const SuiteOptions& options = {});

/// Re-evaluates a theorem witness from scratch; true when it is still a violation.
bool replay(const Witness& w);

enum class SearchScope : std::uint8_t { sets, maps };

/// First structure, in enumeration order with carriers growing from one
/// point, on which the claim evaluates true. Sets scope visits (space,
/// subset); maps scope visits (domain space, codomain topology, map), with
/// domain and codomain sizes ordered by (max, domain, codomain). Throws
/// ScopeError when the claim names atoms outside the scope.
std::optional<Witness> find_counterexample(const ClaimAST& claim, SearchScope scope, int bound,
                                           int jobs = 1);

/// True when the witness still satisfies the claim.
bool replay(const ClaimAST& claim, const Witness& w);

/// Smallest f: (X,t,I) -> (Y,s) and g: (Y,s,J) -> (Z,u), all carriers of the
/// same size up to `bound`, with f pre-I-continuous, g pre-J-continuous and
/// g after f not pre-I-continuous.
std::optional<Witness> find_composition_counterexample(int bound);

} // namespace topoideal
