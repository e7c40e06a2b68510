#include "topoideal/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "topoideal/classes.hpp"
#include "topoideal/enumerate.hpp"

namespace topoideal {

namespace {

// Registry order; index into theorem_registry().
enum class Id : std::uint8_t {
    t1, t2, t3, t4_i, t4_ii, t4_iii, tt6, tt42, submax, star_perfect_remark, ilc_min, ilc_nwd,
    star_closed,
    l1, t5_i, t5_ii, t5_iii, t5_iv, t5_v, c1_i, c1_ii,
    t5_i_all, c1_i_all,
    hs_equiv, isi, x_always_pio,
    tt1, tt2, tt3, tt4, tt7, tt41, tt43, grt1_min, grt1_nwd, star_min, nwd_pre, nwd_beta,
    tt5_i, tt5_ii,
};

using H = Hypothesis;
using K = CheckKind;

const std::vector<TheoremCheck> kRegistry = {
    {"t1", "i_open => pre_i_open", Scope::sets, H::none, K::implication, kMaxPoints},
    {"t2", "open => pre_i_open", Scope::sets, H::none, K::implication, kMaxPoints},
    {"t3", "pre_i_open => preopen", Scope::sets, H::none, K::implication, kMaxPoints},
    {"t4.i", "pre_i_open <=> preopen", Scope::sets, H::minimal_ideal, K::biconditional, kMaxPoints},
    {"t4.ii", "pre_i_open <=> open", Scope::sets, H::maximal_ideal, K::biconditional, kMaxPoints},
    {"t4.iii", "pre_i_open <=> preopen", Scope::sets, H::nowhere_dense_ideal, K::biconditional, kMaxPoints},
    {"tt6", "i_open <=> pre_i_open & star_dense_in_itself", Scope::sets, H::none, K::biconditional, kMaxPoints},
    {"tt42", "open <=> pre_i_open & i_locally_closed", Scope::sets, H::hayashi_samuels, K::biconditional,
     kMaxPoints},
    {"submax", "pre_i_open <=> open", Scope::sets, H::submaximal, K::biconditional, kMaxPoints},
    {"star_perfect_remark", "star_perfect => (open <=> i_open) & (i_open <=> pre_i_open)", Scope::sets,
     H::none, K::implication, kMaxPoints},
    {"ilc.min", "i_locally_closed <=> locally_closed", Scope::sets, H::minimal_ideal, K::biconditional,
     kMaxPoints},
    {"ilc.nwd", "i_locally_closed <=> a_set", Scope::sets, H::nowhere_dense_ideal, K::biconditional,
     kMaxPoints},
    {"star_closed", "tau_star_closed(A) <=> A* subset of A", Scope::sets, H::none, K::biconditional,
     kMaxPoints},
    {"l1", "open(U) => U & A* == U & (U & A)* and U & A* subset of (U & A)*", Scope::set_pairs, H::none,
     K::structural, kMaxPoints},
    {"t5.i", "pre_i_open(A) & pre_i_open(B) => pre_i_open(A | B)", Scope::set_pairs, H::none,
     K::implication, kMaxPoints},
    {"t5.ii", "pre_i_open(A) & open(U) => pre_i_open(A & U)", Scope::set_pairs, H::none, K::implication,
     kMaxPoints},
    {"t5.iii", "pre_i_open(A) & alpha_open(B) => preopen(A & B)", Scope::set_pairs, H::none,
     K::implication, kMaxPoints},
    {"t5.iv", "pre_i_open(A) & semi_open(B) => A & B semi-open in the subspace A", Scope::set_pairs,
     H::none, K::implication, kMaxPoints},
    {"t5.v", "pre_i_open(A) & semi_open(B) => A & B preopen in the subspace B", Scope::set_pairs, H::none,
     K::implication, kMaxPoints},
    {"c1.i", "pre_i_closed(A) & pre_i_closed(B) => pre_i_closed(A & B)", Scope::set_pairs, H::none,
     K::implication, kMaxPoints},
    {"c1.ii", "pre_i_closed(A) & closed(B) => pre_i_closed(A | B)", Scope::set_pairs, H::none,
     K::implication, kMaxPoints},
    {"t5.i.all", "the union of every subfamily of pre-I-open sets is pre-I-open", Scope::set_families,
     H::none, K::structural, 3},
    {"c1.i.all", "the intersection of every subfamily of pre-I-closed sets is pre-I-closed",
     Scope::set_families, H::none, K::structural, 3},
    {"hs_equiv", "no nonempty open set in the ideal <=> X* == X", Scope::spaces, H::none, K::biconditional,
     kMaxPoints},
    {"isi", "maximal ideal => i_strongly_irresolvable; minimal ideal => (i_strongly_irresolvable <=> "
            "every pre-I-open set is open)",
     Scope::spaces, H::none, K::structural, kMaxPoints},
    {"x_always_pio", "pre_i_open(X)", Scope::spaces, H::none, K::structural, kMaxPoints},
    {"tt1", "continuous => pre_i_continuous", Scope::maps, H::none, K::implication, kMaxPoints},
    {"tt2", "i_continuous => pre_i_continuous", Scope::maps, H::none, K::implication, kMaxPoints},
    {"tt3", "pre_i_continuous => precontinuous", Scope::maps, H::none, K::implication, kMaxPoints},
    {"tt4", "the four characterisations of pre_i_continuous agree", Scope::maps, H::none, K::structural,
     kMaxPoints},
    {"tt7", "i_continuous <=> pre_i_continuous & star_i_continuous", Scope::maps, H::none,
     K::biconditional, kMaxPoints},
    {"tt41", "continuous => i_lc_continuous", Scope::maps, H::hayashi_samuels, K::implication, kMaxPoints},
    {"tt43", "continuous <=> pre_i_continuous & i_lc_continuous", Scope::maps, H::hayashi_samuels,
     K::biconditional, kMaxPoints},
    {"grt1.min", "continuous <=> precontinuous & lc_continuous", Scope::maps, H::minimal_ideal,
     K::biconditional, kMaxPoints},
    {"grt1.nwd", "continuous <=> precontinuous & a_continuous", Scope::maps, H::nowhere_dense_ideal,
     K::biconditional, kMaxPoints},
    {"star_min", "star_i_continuous", Scope::maps, H::minimal_ideal, K::structural, kMaxPoints},
    {"nwd.pre", "pre_i_continuous <=> precontinuous", Scope::maps, H::nowhere_dense_ideal,
     K::biconditional, kMaxPoints},
    {"nwd.beta", "star_i_continuous <=> beta_continuous", Scope::maps, H::nowhere_dense_ideal,
     K::biconditional, kMaxPoints},
    {"tt5.i", "pre_i_continuous(f) & continuous(g) => pre_i_continuous(g after f)", Scope::map_pairs,
     H::none, K::structural, kMaxPoints},
    {"tt5.ii", "pre_i_continuous(f) & continuous(g) => precontinuous(g after f)", Scope::map_pairs,
     H::none, K::structural, kMaxPoints},
};

const std::vector<std::pair<std::string_view, std::string_view>> kOutOfScope = {
    {"e1", "fixture: open set {a,c,d} not I-open; covered by fixture tests"},
    {"e2", "real line with the finite ideal; no finite carrier"},
    {"e3", "indiscrete space with the maximal ideal; its finite instance is a search target"},
    {"e4", "fixture: intersection of two pre-I-open sets; covered by fixture tests"},
    {"ee1", "Dirichlet function on the real line; no finite carrier"},
    {"ee2", "fixture: identity onto {0,{a,c,d},X}; covered by fixture tests"},
    {"ee3", "real line with indiscrete and usual topologies; finite analogue is a search target"},
    {"ee4", "real line composition; finite analogue is find_composition_counterexample"},
    {"ee4a", "real line identity with the maximal ideal; finite analogue is a search target"},
    {"ee4b", "minimal ideal makes every map star-I-continuous; registered as star_min"},
    {"remark.s3", "fixture: identity maps on {a,b,c}; covered by fixture tests"},
    {"lemma.submax", "PO == open sets on submaximal spaces is submax under the minimal ideal"},
    {"omega_condensation", "accumulation and condensation point operators need infinite carriers"},
    {"sigma_ideal", "countable additivity coincides with finite additivity on finite carriers"},
    {"meager", "the meager ideal equals the nowhere dense ideal on finite carriers"},
};

constexpr std::array<std::string_view, 6> kScopeNames = {"spaces", "sets", "set_pairs", "set_families",
                                                         "maps", "map_pairs"};
constexpr std::array<std::string_view, 6> kHypothesisNames = {
    "none", "hs", "submaximal", "minimal_ideal", "maximal_ideal", "nowhere_dense_ideal"};
constexpr std::array<std::string_view, 3> kDirectionNames = {"both", "fwd", "bwd"};

Id id_of(const TheoremCheck& c) { return static_cast<Id>(&c - kRegistry.data()); }

template <class F>
void for_each_subset(int n, F&& f) {
    const auto limit = SubsetMask::full(n).bits();
    for (SubsetMask::word_type b = 0;; ++b) {
        f(SubsetMask{b});
        if (b == limit) break;
    }
}

bool has(ClassVector v, SetClass c) { return v[c]; }

// ---------------------------------------------------------------------------
// Classification providers. The kernels below are written once against this
// interface; TableProvider answers from per-space tables, ReferenceProvider
// recomputes every answer through the public single-query API.

class TableProvider {
public:
    explicit TableProvider(const IdealSpace& sp)
        : analysis_(sp), table_(analysis_.class_table()) {
        for_each_subset(sp.n(), [&](SubsetMask a) { stars_.push_back(local_function(sp, a)); });
        for_each_subset(sp.n(), [&](SubsetMask a) {
            if (table_[a.bits()][SetClass::pre_i_open]) pio_.push_back(a);
        });
    }

    const IdealSpace& space() const { return analysis_.space(); }
    ClassVector set(SubsetMask a) const { return table_[a.bits()]; }
    SubsetMask star(SubsetMask a) const { return stars_[a.bits()]; }
    const std::vector<ClassVector>& table() const { return table_; }

    bool strongly_irresolvable() const {
        return std::all_of(table_.begin(), table_.end(), [](ClassVector v) {
            return !v[SetClass::pre_i_open] || v[SetClass::tau_star_open];
        });
    }

    // Relative interior: points of Y whose neighbourhood, cut to Y, lies in C.
    SubsetMask rel_interior(SubsetMask c, SubsetMask y) const {
        SubsetMask out;
        for (int x : y.points()) {
            if ((space().topology().min_nbhd(x) & y).subset_of(c)) out |= SubsetMask::singleton(x);
        }
        return out;
    }
    SubsetMask rel_closure(SubsetMask d, SubsetMask y) const {
        return closure(space().topology(), d) & y;
    }
    bool semi_open_in(SubsetMask c, SubsetMask y) const {
        return c.subset_of(rel_closure(rel_interior(c, y), y));
    }
    bool preopen_in(SubsetMask c, SubsetMask y) const {
        return c.subset_of(rel_interior(rel_closure(c, y), y));
    }

    MapClassVector map(const FiniteTopology& cod, std::span<const int> t) const {
        return map_classes_from_table(table_, cod, t);
    }

    EquivalenceReport equivalences(const FiniteTopology& cod, std::span<const int> t) const {
        const FiniteTopology& topo = space().topology();
        const int n = space().n();
        EquivalenceReport r;
        r.preimages_pre_i_open = true;
        r.pointwise_pre_i_open_witness = true;
        r.star_closure_neighbourhood = true;
        r.closed_preimages_pre_i_closed = true;
        for (SubsetMask v : cod.opens()) {
            const SubsetMask pre = preimage(t, v);
            if (!set(pre)[SetClass::pre_i_open]) r.preimages_pre_i_open = false;
            const SubsetMask nbhd = interior(topo, pre | star(pre));
            for (int x : pre.points()) {
                if (!nbhd.contains(x)) r.star_closure_neighbourhood = false;
                const bool witness = std::any_of(pio_.begin(), pio_.end(), [&](SubsetMask w) {
                    return w.contains(x) && w.subset_of(pre);
                });
                if (!witness) r.pointwise_pre_i_open_witness = false;
            }
            const SubsetMask closed_pre = preimage(t, v.complement(cod.n()));
            if (!set(closed_pre)[SetClass::pre_i_closed]) r.closed_preimages_pre_i_closed = false;
        }
        (void)n;
        return r;
    }

private:
    SpaceAnalysis analysis_;
    std::vector<ClassVector> table_;
    std::vector<SubsetMask> stars_;
    std::vector<SubsetMask> pio_;
};

class ReferenceProvider {
public:
    explicit ReferenceProvider(const IdealSpace& sp) : space_(sp) {}

    const IdealSpace& space() const { return space_; }
    ClassVector set(SubsetMask a) const { return set_classes(space_, a); }
    SubsetMask star(SubsetMask a) const { return local_function(space_, a); }

    bool strongly_irresolvable() const { return space_props(space_).i_strongly_irresolvable; }

    bool semi_open_in(SubsetMask c, SubsetMask y) const { return in_subspace(c, y, SetClass::semi_open); }
    bool preopen_in(SubsetMask c, SubsetMask y) const { return in_subspace(c, y, SetClass::preopen); }

    MapClassVector map(const FiniteTopology& cod, std::span<const int> t) const {
        return map_classes(SpaceMap(space_, cod, std::vector<int>(t.begin(), t.end())));
    }
    EquivalenceReport equivalences(const FiniteTopology& cod, std::span<const int> t) const {
        return check_pre_i_continuity_equivalences(SpaceMap(space_, cod, std::vector<int>(t.begin(), t.end())));
    }

private:
    bool in_subspace(SubsetMask c, SubsetMask y, SetClass cls) const {
        if (y.is_empty()) return c.is_empty();
        const Subspace sub = subspace(space_.topology(), y);
        const IdealSpace rel(sub.topo, minimal_ideal(sub.topo.n()));
        return set_classes(rel, sub.restrict(c))[cls];
    }

    IdealSpace space_;
};

// ---------------------------------------------------------------------------
// Per-instance evaluation. Every check reduces to (lhs, rhs); the violation
// test depends on the kind and requested direction.

struct Outcome {
    bool lhs;
    bool rhs;
};

bool violates(CheckKind kind, Direction dir, Outcome o) {
    switch (dir) {
    case Direction::fwd: return o.lhs && !o.rhs;
    case Direction::bwd: return o.rhs && !o.lhs;
    case Direction::both: return kind == CheckKind::biconditional ? o.lhs != o.rhs : o.lhs && !o.rhs;
    }
    return false;
}

template <class P>
Outcome eval_set(Id id, const P& p, SubsetMask a) {
    const ClassVector v = p.set(a);
    using C = SetClass;
    switch (id) {
    case Id::t1: return {v[C::i_open], v[C::pre_i_open]};
    case Id::t2: return {v[C::open], v[C::pre_i_open]};
    case Id::t3: return {v[C::pre_i_open], v[C::preopen]};
    case Id::t4_i: return {v[C::pre_i_open], v[C::preopen]};
    case Id::t4_ii: return {v[C::pre_i_open], v[C::open]};
    case Id::t4_iii: return {v[C::pre_i_open], v[C::preopen]};
    case Id::tt6: return {v[C::i_open], v[C::pre_i_open] && v[C::star_dense_in_itself]};
    case Id::tt42: return {v[C::open], v[C::pre_i_open] && v[C::i_locally_closed]};
    case Id::submax: return {v[C::pre_i_open], v[C::open]};
    case Id::star_perfect_remark:
        return {v[C::star_perfect], v[C::open] == v[C::i_open] && v[C::i_open] == v[C::pre_i_open]};
    case Id::ilc_min: return {v[C::i_locally_closed], v[C::locally_closed]};
    case Id::ilc_nwd: return {v[C::i_locally_closed], v[C::a_set]};
    case Id::star_closed: return {v[C::tau_star_closed], p.star(a).subset_of(a)};
    default: break;
    }
    return {false, false};
}

template <class P>
Outcome eval_pair(Id id, const P& p, SubsetMask a, SubsetMask b) {
    using C = SetClass;
    const ClassVector va = p.set(a);
    const ClassVector vb = p.set(b);
    switch (id) {
    case Id::l1: {
        // b plays U.
        const SubsetMask lhs = b & p.star(a);
        const SubsetMask local = p.star(b & a);
        return {vb[C::open], lhs == (b & local) && lhs.subset_of(local)};
    }
    case Id::t5_i: return {va[C::pre_i_open] && vb[C::pre_i_open], has(p.set(a | b), C::pre_i_open)};
    case Id::t5_ii: return {va[C::pre_i_open] && vb[C::open], has(p.set(a & b), C::pre_i_open)};
    case Id::t5_iii: return {va[C::pre_i_open] && vb[C::alpha_open], has(p.set(a & b), C::preopen)};
    case Id::t5_iv: return {va[C::pre_i_open] && vb[C::semi_open], p.semi_open_in(a & b, a)};
    case Id::t5_v: return {va[C::pre_i_open] && vb[C::semi_open], p.preopen_in(a & b, b)};
    case Id::c1_i: return {va[C::pre_i_closed] && vb[C::pre_i_closed], has(p.set(a & b), C::pre_i_closed)};
    case Id::c1_ii: return {va[C::pre_i_closed] && vb[C::closed], has(p.set(a | b), C::pre_i_closed)};
    default: break;
    }
    return {false, false};
}

// One subfamily of the class family, given as its members.
template <class P>
Outcome eval_family(Id id, const P& p, std::span<const SubsetMask> members) {
    const int n = p.space().n();
    if (id == Id::t5_i_all) {
        SubsetMask u;
        for (SubsetMask m : members) u |= m;
        return {true, has(p.set(u), SetClass::pre_i_open)};
    }
    SubsetMask meet = SubsetMask::full(n);
    for (SubsetMask m : members) meet &= m;
    return {true, has(p.set(meet), SetClass::pre_i_closed)};
}

SetClass family_class(Id id) { return id == Id::t5_i_all ? SetClass::pre_i_open : SetClass::pre_i_closed; }

template <class P>
Outcome eval_space(Id id, const P& p) {
    const IdealSpace& sp = p.space();
    const int n = sp.n();
    const SubsetMask full = SubsetMask::full(n);
    switch (id) {
    case Id::hs_equiv: {
        const auto& opens = sp.topology().opens();
        const bool no_open_in_ideal = std::none_of(opens.begin(), opens.end(), [&](SubsetMask u) {
            return !u.is_empty() && sp.ideal().contains(u);
        });
        return {no_open_in_ideal, p.star(full) == full};
    }
    case Id::isi: {
        const bool isi = p.strongly_irresolvable();
        bool pio_open = true;
        for_each_subset(n, [&](SubsetMask a) {
            const ClassVector v = p.set(a);
            if (v[SetClass::pre_i_open] && !v[SetClass::open]) pio_open = false;
        });
        bool ok = true;
        if (sp.ideal().is_maximal() && !isi) ok = false;
        if (sp.ideal().is_minimal() && isi != pio_open) ok = false;
        return {true, ok};
    }
    case Id::x_always_pio: return {true, has(p.set(full), SetClass::pre_i_open)};
    default: break;
    }
    return {false, false};
}

Outcome eval_map(Id id, MapClassVector m, const EquivalenceReport* eq) {
    using M = MapClass;
    switch (id) {
    case Id::tt1: return {m[M::continuous], m[M::pre_i_continuous]};
    case Id::tt2: return {m[M::i_continuous], m[M::pre_i_continuous]};
    case Id::tt3: return {m[M::pre_i_continuous], m[M::precontinuous]};
    case Id::tt4:
        return {true, eq->all_agree() && eq->preimages_pre_i_open == m[M::pre_i_continuous]};
    case Id::tt7: return {m[M::i_continuous], m[M::pre_i_continuous] && m[M::star_i_continuous]};
    case Id::tt41: return {m[M::continuous], m[M::i_lc_continuous]};
    case Id::tt43: return {m[M::continuous], m[M::pre_i_continuous] && m[M::i_lc_continuous]};
    case Id::grt1_min: return {m[M::continuous], m[M::precontinuous] && m[M::lc_continuous]};
    case Id::grt1_nwd: return {m[M::continuous], m[M::precontinuous] && m[M::a_continuous]};
    case Id::star_min: return {true, m[M::star_i_continuous]};
    case Id::nwd_pre: return {m[M::pre_i_continuous], m[M::precontinuous]};
    case Id::nwd_beta: return {m[M::star_i_continuous], m[M::beta_continuous]};
    default: break;
    }
    return {false, false};
}

bool is_continuous(const FiniteTopology& dom, const FiniteTopology& cod, std::span<const int> t) {
    return std::all_of(cod.opens().begin(), cod.opens().end(),
                       [&](SubsetMask v) { return dom.is_open(preimage(t, v)); });
}

std::vector<int> composed(std::span<const int> f, std::span<const int> g) {
    std::vector<int> h;
    h.reserve(f.size());
    for (int y : f) h.push_back(g[static_cast<std::size_t>(y)]);
    return h;
}

template <class P>
Outcome eval_map_pair(Id id, const P& p, const FiniteTopology& middle, const FiniteTopology& cod,
                      std::span<const int> f, std::span<const int> g) {
    const bool premise = p.map(middle, f)[MapClass::pre_i_continuous] &&
                         is_continuous(middle, cod, g);
    const MapClassVector h = p.map(cod, composed(f, g));
    const MapClass target = id == Id::tt5_i ? MapClass::pre_i_continuous : MapClass::precontinuous;
    return {premise, h[target]};
}

// ---------------------------------------------------------------------------
// Sweep.

struct Selected {
    const TheoremCheck* check;
    Id id;
    Hypothesis hypothesis;
    Direction direction;
};

struct SpaceInfo {
    std::uint64_t index;
    IdealSpace space;
    SpaceProps props;
    bool nowhere_dense;
};

bool passes(const SpaceInfo& s, Hypothesis h) {
    switch (h) {
    case H::none: return true;
    case H::hayashi_samuels: return s.props.hayashi_samuels;
    case H::submaximal: return s.props.submaximal;
    case H::minimal_ideal: return s.space.ideal().is_minimal();
    case H::maximal_ideal: return s.space.ideal().is_maximal();
    case H::nowhere_dense_ideal: return s.nowhere_dense;
    }
    return false;
}

std::vector<std::pair<std::string, bool>> outcome_trace(Outcome o) {
    return {{"lhs", o.lhs}, {"rhs", o.rhs}};
}

class Collector {
public:
    Collector(std::size_t checks, std::size_t cap) : results_(checks), cap_(cap) {}

    CheckResult& at(std::size_t k) { return results_[k]; }

    void record(std::size_t k, CheckKind kind, Direction dir, Outcome o, auto&& make_witness) {
        CheckResult& r = results_[k];
        ++r.instances;
        r.lhs_true += o.lhs ? 1 : 0;
        r.rhs_true += o.rhs ? 1 : 0;
        if (!violates(kind, dir, o)) return;
        ++r.violations;
        if (cap_ == 0) return;
        r.witnesses.push_back(make_witness());
        if (r.witnesses.size() > 2 * cap_) trim(r.witnesses, cap_);
    }

    static void trim(std::vector<Witness>& ws, std::size_t cap) {
        std::sort(ws.begin(), ws.end(), [](const Witness& a, const Witness& b) { return a.key < b.key; });
        if (ws.size() > cap) ws.erase(ws.begin() + static_cast<std::ptrdiff_t>(cap), ws.end());
    }

    void merge_into(std::vector<CheckResult>& out) const {
        for (std::size_t k = 0; k < results_.size(); ++k) {
            CheckResult& o = out[k];
            const CheckResult& r = results_[k];
            o.spaces += r.spaces;
            o.instances += r.instances;
            o.lhs_true += r.lhs_true;
            o.rhs_true += r.rhs_true;
            o.violations += r.violations;
            o.witnesses.insert(o.witnesses.end(), r.witnesses.begin(), r.witnesses.end());
        }
    }

private:
    std::vector<CheckResult> results_;
    std::size_t cap_;
};

Witness base_witness(const Selected& s, const SpaceInfo& info, int n) {
    Witness w{std::string(s.check->id), s.direction, info.space, {}, {}, {}, {}, {}, {}, {}, {}};
    w.key = {static_cast<std::uint64_t>(n), info.index};
    return w;
}

// Continuous maps between every ordered pair of topologies on n points,
// listed by map index. Shared by all domain spaces of a map-pair sweep.
struct ContinuityTable {
    std::size_t topo_count = 0;
    std::vector<std::vector<std::uint64_t>> continuous; // [mid * topo_count + cod]
};

ContinuityTable continuity_table(int n) {
    const auto& topos = topologies(n);
    const std::uint64_t count = map_count(n, n);
    ContinuityTable t;
    t.topo_count = topos.size();
    t.continuous.resize(topos.size() * topos.size());
    for (std::size_t a = 0; a < topos.size(); ++a) {
        for (std::size_t b = 0; b < topos.size(); ++b) {
            for (std::uint64_t i = 0; i < count; ++i) {
                if (is_continuous(topos[a], topos[b], map_at(n, n, i))) {
                    t.continuous[a * topos.size() + b].push_back(i);
                }
            }
        }
    }
    return t;
}

template <class P>
void sweep_space(const std::vector<Selected>& sel, const SpaceInfo& info, int n,
                 const ContinuityTable* cont, Collector& out) {
    std::vector<std::size_t> active;
    for (std::size_t k = 0; k < sel.size(); ++k) {
        if (passes(info, sel[k].hypothesis)) {
            active.push_back(k);
            ++out.at(k).spaces;
        }
    }
    if (active.empty()) return;
    const P p(info.space);

    std::vector<std::size_t> map_checks;
    std::vector<std::size_t> pair_map_checks;
    bool need_equivalences = false;

    for (std::size_t k : active) {
        const Selected& s = sel[k];
        const CheckKind kind = s.check->kind;
        switch (s.check->scope) {
        case Scope::spaces: {
            const Outcome o = eval_space(s.id, p);
            out.record(k, kind, s.direction, o, [&] {
                Witness w = base_witness(s, info, n);
                w.trace = outcome_trace(o);
                return w;
            });
            break;
        }
        case Scope::sets:
            for_each_subset(n, [&](SubsetMask a) {
                const Outcome o = eval_set(s.id, p, a);
                out.record(k, kind, s.direction, o, [&] {
                    Witness w = base_witness(s, info, n);
                    w.sets = {a};
                    w.key.push_back(a.bits());
                    w.trace = outcome_trace(o);
                    const ClassVector v = p.set(a);
                    for (SetClass c : all_set_classes()) w.trace.emplace_back(std::string(name(c)), v[c]);
                    return w;
                });
            });
            break;
        case Scope::set_pairs:
            for_each_subset(n, [&](SubsetMask a) {
                for_each_subset(n, [&](SubsetMask b) {
                    const Outcome o = eval_pair(s.id, p, a, b);
                    out.record(k, kind, s.direction, o, [&] {
                        Witness w = base_witness(s, info, n);
                        w.sets = {a, b};
                        w.key.push_back(a.bits());
                        w.key.push_back(b.bits());
                        w.trace = outcome_trace(o);
                        return w;
                    });
                });
            });
            break;
        case Scope::set_families: {
            std::vector<SubsetMask> family;
            for_each_subset(n, [&](SubsetMask a) {
                if (p.set(a)[family_class(s.id)]) family.push_back(a);
            });
            const std::uint64_t subfamilies = std::uint64_t{1} << family.size();
            std::vector<SubsetMask> members;
            for (std::uint64_t pick = 0; pick < subfamilies; ++pick) {
                members.clear();
                for (std::size_t i = 0; i < family.size(); ++i) {
                    if ((pick >> i) & 1u) members.push_back(family[i]);
                }
                const Outcome o = eval_family(s.id, p, members);
                out.record(k, kind, s.direction, o, [&] {
                    Witness w = base_witness(s, info, n);
                    w.sets = members;
                    w.key.push_back(pick);
                    w.trace = outcome_trace(o);
                    return w;
                });
            }
            break;
        }
        case Scope::maps:
            map_checks.push_back(k);
            if (s.id == Id::tt4) need_equivalences = true;
            break;
        case Scope::map_pairs:
            pair_map_checks.push_back(k);
            break;
        }
    }

    if (!map_checks.empty()) {
        const auto& cods = topologies(n);
        const std::uint64_t count = map_count(n, n);
        for (std::size_t c = 0; c < cods.size(); ++c) {
            for (std::uint64_t i = 0; i < count; ++i) {
                const std::vector<int> t = map_at(n, n, i);
                const MapClassVector m = p.map(cods[c], t);
                EquivalenceReport eq;
                if (need_equivalences) eq = p.equivalences(cods[c], t);
                for (std::size_t k : map_checks) {
                    const Selected& s = sel[k];
                    const Outcome o = eval_map(s.id, m, &eq);
                    out.record(k, s.check->kind, s.direction, o, [&] {
                        Witness w = base_witness(s, info, n);
                        w.codomain = cods[c];
                        w.map = t;
                        w.key.push_back(c);
                        w.key.push_back(i);
                        w.trace = outcome_trace(o);
                        for (MapClass mc : all_map_classes()) {
                            if (mc == MapClass::i_open_map || mc == MapClass::i_closed_map) continue;
                            w.trace.emplace_back(std::string(name(mc)), m[mc]);
                        }
                        if (s.id == Id::tt4) {
                            w.trace.emplace_back("tt4.1", eq.preimages_pre_i_open);
                            w.trace.emplace_back("tt4.2", eq.pointwise_pre_i_open_witness);
                            w.trace.emplace_back("tt4.3", eq.star_closure_neighbourhood);
                            w.trace.emplace_back("tt4.4", eq.closed_preimages_pre_i_closed);
                        }
                        return w;
                    });
                }
            }
        }
    }

    if (!pair_map_checks.empty()) {
        // Only pairs meeting the premise are instances; the rest cannot violate.
        const auto& topos = topologies(n);
        const std::uint64_t count = map_count(n, n);
        for (std::size_t mid = 0; mid < topos.size(); ++mid) {
            for (std::uint64_t fi = 0; fi < count; ++fi) {
                const std::vector<int> f = map_at(n, n, fi);
                if (!p.map(topos[mid], f)[MapClass::pre_i_continuous]) continue;
                for (std::size_t cod = 0; cod < topos.size(); ++cod) {
                    for (std::uint64_t gi : cont->continuous[mid * cont->topo_count + cod]) {
                        const std::vector<int> g = map_at(n, n, gi);
                        const MapClassVector h = p.map(topos[cod], composed(f, g));
                        for (std::size_t k : pair_map_checks) {
                            const Selected& s = sel[k];
                            const MapClass target =
                                s.id == Id::tt5_i ? MapClass::pre_i_continuous : MapClass::precontinuous;
                            const Outcome o{true, h[target]};
                            out.record(k, s.check->kind, s.direction, o, [&] {
                                Witness w = base_witness(s, info, n);
                                w.middle = topos[mid];
                                w.codomain = topos[cod];
                                w.map = f;
                                w.second_map = g;
                                w.key.insert(w.key.end(), {mid, fi, cod, gi});
                                w.trace = outcome_trace(o);
                                return w;
                            });
                        }
                    }
                }
            }
        }
    }
}

SpaceInfo space_info(int n, std::uint64_t index) {
    const FiniteTopology& topo = topology_at(n, index >> n);
    const Ideal ideal(n, SubsetMask{static_cast<SubsetMask::word_type>(index & SubsetMask::full(n).bits())});
    IdealSpace sp(topo, ideal);
    const SpaceProps props = space_props(sp);
    const bool nwd = nowhere_dense_ideal(topo) == ideal;
    return SpaceInfo{index, std::move(sp), props, nwd};
}

std::vector<CheckResult> sweep(const std::vector<Selected>& sel, int n, const SuiteOptions& opt,
                               std::uint64_t& spaces_visited) {
    const std::uint64_t space_count = static_cast<std::uint64_t>(topologies(n).size()) << n;
    spaces_visited += space_count;

    std::optional<ContinuityTable> cont;
    if (std::any_of(sel.begin(), sel.end(), [](const Selected& s) { return s.check->scope == Scope::map_pairs; })) {
        cont = continuity_table(n);
    }
    const ContinuityTable* cont_ptr = cont ? &*cont : nullptr;

    std::vector<CheckResult> merged(sel.size());
    if (opt.reference) {
        Collector c(sel.size(), opt.max_witnesses);
        for (std::uint64_t s = 0; s < space_count; ++s) {
            sweep_space<ReferenceProvider>(sel, space_info(n, s), n, cont_ptr, c);
        }
        c.merge_into(merged);
    } else {
        const int jobs = std::max(1, opt.jobs);
        std::vector<Collector> partial(static_cast<std::size_t>(jobs), Collector(sel.size(), opt.max_witnesses));
        const auto count = static_cast<std::int64_t>(space_count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
        for (std::int64_t s = 0; s < count; ++s) {
#ifdef _OPENMP
            const auto t = static_cast<std::size_t>(omp_get_thread_num());
#else
            const std::size_t t = 0;
#endif
            sweep_space<TableProvider>(sel, space_info(n, static_cast<std::uint64_t>(s)), n, cont_ptr,
                                       partial[t]);
        }
        for (const Collector& c : partial) c.merge_into(merged);
    }
    for (std::size_t k = 0; k < sel.size(); ++k) {
        Collector::trim(merged[k].witnesses, opt.max_witnesses);
        merged[k].id = std::string(sel[k].check->id);
        merged[k].direction = sel[k].direction;
        merged[k].hypothesis = sel[k].hypothesis;
        merged[k].bound = n;
    }
    return merged;
}

int scope_limit(Scope s, const SuiteOptions& opt) {
    return (s == Scope::maps || s == Scope::map_pairs) ? opt.max_map_points : opt.max_set_points;
}

Report run_selected(std::string suite, int bound, const std::vector<Selected>& sel, const SuiteOptions& opt) {
    if (bound < 1 || bound > kMaxTopologyPoints) {
        throw CarrierTooLarge("sweeps run on 1.." + std::to_string(kMaxTopologyPoints) + " points, not " +
                              std::to_string(bound));
    }
    const auto start = std::chrono::steady_clock::now();
    Report report;
    report.suite = std::move(suite);
    report.bound = bound;
    report.jobs = opt.reference ? 1 : std::max(1, opt.jobs);
    report.checks.resize(sel.size());

    // Group checks by the carrier they actually run on.
    std::map<int, std::vector<std::size_t>> by_bound;
    for (std::size_t k = 0; k < sel.size(); ++k) {
        const int effective = std::min(bound, scope_limit(sel[k].check->scope, opt));
        if (effective > sel[k].check->max_points) {
            CheckResult& r = report.checks[k];
            r.id = std::string(sel[k].check->id);
            r.direction = sel[k].direction;
            r.hypothesis = sel[k].hypothesis;
            r.bound = bound;
            r.skipped = true;
            continue;
        }
        by_bound[effective].push_back(k);
    }
    for (const auto& [n, ks] : by_bound) {
        std::vector<Selected> group;
        for (std::size_t k : ks) group.push_back(sel[k]);
        std::vector<CheckResult> results = sweep(group, n, opt, report.spaces_visited);
        for (std::size_t j = 0; j < ks.size(); ++j) report.checks[ks[j]] = std::move(results[j]);
    }
    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

Selected select(const TheoremCheck& c, Direction dir, std::optional<Hypothesis> hyp) {
    if (c.kind == CheckKind::structural && dir == Direction::bwd) {
        throw UnsupportedDirection("check " + std::string(c.id) + " has no backward direction");
    }
    return Selected{&c, id_of(c), hyp.value_or(c.hypothesis), dir};
}

// ---------------------------------------------------------------------------
// Search.

template <class F>
std::optional<Witness> first_in_range(std::uint64_t count, int jobs, F&& f) {
    jobs = std::max(1, jobs);
    const std::uint64_t chunk = static_cast<std::uint64_t>(jobs) * 4;
    for (std::uint64_t start = 0; start < count; start += chunk) {
        const std::uint64_t end = std::min(count, start + chunk);
        std::vector<std::optional<Witness>> found(end - start);
        const auto len = static_cast<std::int64_t>(end - start);
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
        for (std::int64_t i = 0; i < len; ++i) {
            found[static_cast<std::size_t>(i)] = f(start + static_cast<std::uint64_t>(i));
        }
        for (auto& w : found) {
            if (w) return std::move(w);
        }
    }
    return std::nullopt;
}

void require_scope(const ClaimAST& claim, SearchScope scope) {
    for (const Atom& a : atoms(claim)) {
        if (scope == SearchScope::sets && a.kind() == Atom::Kind::map_class) {
            throw ScopeError("atom '" + std::string(a.name()) + "' is a map class; use the maps scope");
        }
        if (scope == SearchScope::maps && a.kind() == Atom::Kind::set_class) {
            throw ScopeError("atom '" + std::string(a.name()) + "' is a set class; use the sets scope");
        }
    }
}

bool needs_image_classes(const ClaimAST& claim) {
    const auto as = atoms(claim);
    return std::any_of(as.begin(), as.end(), [](const Atom& a) {
        return a.kind() == Atom::Kind::map_class &&
               (a.map_class() == MapClass::i_open_map || a.map_class() == MapClass::i_closed_map);
    });
}

std::vector<std::pair<std::string, bool>> claim_trace(const ClaimAST& claim, auto&& value_of) {
    std::vector<std::pair<std::string, bool>> trace;
    for (const Atom& a : atoms(claim)) trace.emplace_back(std::string(a.name()), value_of(a));
    return trace;
}

} // namespace

std::string_view name(Scope s) { return kScopeNames[static_cast<std::size_t>(s)]; }
std::string_view name(Hypothesis h) { return kHypothesisNames[static_cast<std::size_t>(h)]; }
std::string_view name(Direction d) { return kDirectionNames[static_cast<std::size_t>(d)]; }

std::optional<Hypothesis> hypothesis_from_name(std::string_view s) {
    for (std::size_t i = 0; i < kHypothesisNames.size(); ++i) {
        if (kHypothesisNames[i] == s) return static_cast<Hypothesis>(i);
    }
    if (s == "hayashi_samuels") return Hypothesis::hayashi_samuels;
    return std::nullopt;
}

std::optional<Direction> direction_from_name(std::string_view s) {
    for (std::size_t i = 0; i < kDirectionNames.size(); ++i) {
        if (kDirectionNames[i] == s) return static_cast<Direction>(i);
    }
    return std::nullopt;
}

bool satisfies(const IdealSpace& sp, Hypothesis h) {
    const SpaceInfo info{0, sp, space_props(sp), nowhere_dense_ideal(sp.topology()) == sp.ideal()};
    return passes(info, h);
}

const std::vector<TheoremCheck>& theorem_registry() { return kRegistry; }

const TheoremCheck& find_check(std::string_view id) {
    for (const TheoremCheck& c : kRegistry) {
        if (c.id == id) return c;
    }
    throw UnknownTheoremId("unknown theorem id '" + std::string(id) + "'");
}

const std::vector<std::pair<std::string_view, std::string_view>>& out_of_scope_notes() { return kOutOfScope; }

std::uint64_t Report::total_violations() const {
    std::uint64_t total = 0;
    for (const CheckResult& c : checks) total += c.violations;
    return total;
}

const CheckResult& Report::check(std::string_view id) const {
    for (const CheckResult& c : checks) {
        if (c.id == id) return c;
    }
    throw UnknownTheoremId("report has no check '" + std::string(id) + "'");
}

Report run_theorem_suite(int bound, const std::vector<std::string>& selection, const SuiteOptions& options) {
    std::vector<Selected> sel;
    std::string suite;
    const bool all = selection.empty() || (selection.size() == 1 && selection[0] == "all");
    if (all) {
        for (const TheoremCheck& c : kRegistry) {
            if (c.kind == CheckKind::structural && options.direction == Direction::bwd) continue;
            sel.push_back(select(c, options.direction, options.hypothesis));
        }
        suite = "all";
    } else {
        for (const std::string& id : selection) {
            sel.push_back(select(find_check(id), options.direction, options.hypothesis));
            if (!suite.empty()) suite += ',';
            suite += id;
        }
    }
    return run_selected(std::move(suite), bound, sel, options);
}

Report check_direction(std::string_view id, Direction direction, Hypothesis hypothesis, int bound,
                       const SuiteOptions& options) {
    const std::vector<Selected> sel = {select(find_check(id), direction, hypothesis)};
    return run_selected(std::string(id), bound, sel, options);
}

bool replay(const Witness& w) {
    const TheoremCheck& c = find_check(w.check_id);
    const Id id = id_of(c);
    const ReferenceProvider p(w.space);
    Outcome o{false, false};
    switch (c.scope) {
    case Scope::spaces: o = eval_space(id, p); break;
    case Scope::sets: o = eval_set(id, p, w.sets.at(0)); break;
    case Scope::set_pairs: o = eval_pair(id, p, w.sets.at(0), w.sets.at(1)); break;
    case Scope::set_families: {
        for (SubsetMask m : w.sets) {
            if (!p.set(m)[family_class(id)]) return false;
        }
        o = eval_family(id, p, w.sets);
        break;
    }
    case Scope::maps: {
        const FiniteTopology& cod = w.codomain.value();
        const EquivalenceReport eq = p.equivalences(cod, w.map);
        o = eval_map(id, p.map(cod, w.map), &eq);
        break;
    }
    case Scope::map_pairs:
        o = eval_map_pair(id, p, w.middle.value(), w.codomain.value(), w.map, w.second_map);
        break;
    }
    return violates(c.kind, w.direction, o);
}

std::optional<Witness> find_counterexample(const ClaimAST& claim, SearchScope scope, int bound, int jobs) {
    require_scope(claim, scope);
    if (bound < 1 || bound > kMaxTopologyPoints) {
        throw CarrierTooLarge("search runs on 1.." + std::to_string(kMaxTopologyPoints) + " points, not " +
                              std::to_string(bound));
    }

    if (scope == SearchScope::sets) {
        for (int n = 1; n <= bound; ++n) {
            const std::uint64_t count = static_cast<std::uint64_t>(topologies(n).size()) << n;
            auto found = first_in_range(count, jobs, [&](std::uint64_t s) -> std::optional<Witness> {
                const SpaceInfo info = space_info(n, s);
                const TableProvider p(info.space);
                std::optional<Witness> hit;
                for_each_subset(n, [&](SubsetMask a) {
                    if (hit) return;
                    const ClassVector v = p.set(a);
                    auto value_of = [&](const Atom& at) {
                        return at.kind() == Atom::Kind::set_class ? v[at.set_class()]
                                                                  : value(info.props, at.space_prop());
                    };
                    if (!claim.evaluate(value_of)) return;
                    Witness w{"search", Direction::both, info.space, {}, {}, {}, {a}, {}, {}, {}, {}};
                    w.trace = claim_trace(claim, value_of);
                    w.key = {static_cast<std::uint64_t>(n), s, a.bits()};
                    hit = std::move(w);
                });
                return hit;
            });
            if (found) return found;
        }
        return std::nullopt;
    }

    const bool image = needs_image_classes(claim);
    std::vector<std::pair<int, int>> sizes;
    for (int hi = 1; hi <= bound; ++hi) {
        for (int n = 1; n <= hi; ++n) {
            for (int m = 1; m <= hi; ++m) {
                if (std::max(n, m) == hi) sizes.emplace_back(n, m);
            }
        }
    }
    for (auto [n, m] : sizes) {
        const std::uint64_t count = static_cast<std::uint64_t>(topologies(n).size()) << n;
        const std::uint64_t map_total = map_count(n, m);
        const auto& cods = topologies(m);
        const std::uint64_t cod_ideals = image ? (std::uint64_t{1} << m) : 1;
        auto found = first_in_range(count, jobs, [&](std::uint64_t s) -> std::optional<Witness> {
            const SpaceInfo info = space_info(n, s);
            const TableProvider p(info.space);
            for (std::size_t c = 0; c < cods.size(); ++c) {
                for (std::uint64_t j = 0; j < cod_ideals; ++j) {
                    std::optional<Ideal> cod_ideal;
                    if (image) cod_ideal = ideal_at(m, j);
                    for (std::uint64_t i = 0; i < map_total; ++i) {
                        const std::vector<int> t = map_at(n, m, i);
                        MapClassVector mc = p.map(cods[c], t);
                        if (image) mc = map_classes(SpaceMap(info.space, cods[c], t, cod_ideal));
                        auto value_of = [&](const Atom& at) {
                            return at.kind() == Atom::Kind::map_class ? mc[at.map_class()]
                                                                      : value(info.props, at.space_prop());
                        };
                        if (!claim.evaluate(value_of)) continue;
                        Witness w{"search", Direction::both, info.space, cods[c], {}, cod_ideal, {}, t, {}, {}, {}};
                        w.trace = claim_trace(claim, value_of);
                        w.key = {static_cast<std::uint64_t>(std::max(n, m)), static_cast<std::uint64_t>(n),
                                 static_cast<std::uint64_t>(m), s, c, j, i};
                        return w;
                    }
                }
            }
            return std::nullopt;
        });
        if (found) return found;
    }
    return std::nullopt;
}

bool replay(const ClaimAST& claim, const Witness& w) {
    const SpaceProps props = space_props(w.space);
    std::function<bool(const Atom&)> value_of;
    std::optional<ClassVector> v;
    std::optional<MapClassVector> mc;
    if (w.codomain) {
        mc = map_classes(SpaceMap(w.space, *w.codomain, w.map, w.second_ideal));
    } else {
        v = set_classes(w.space, w.sets.at(0));
    }
    auto lookup = [&](const Atom& a) {
        switch (a.kind()) {
        case Atom::Kind::set_class: return (*v)[a.set_class()];
        case Atom::Kind::map_class: return (*mc)[a.map_class()];
        case Atom::Kind::space_prop: return value(props, a.space_prop());
        }
        return false;
    };
    return claim.evaluate(lookup) && claim_trace(claim, lookup) == w.trace;
}

std::optional<Witness> find_composition_counterexample(int bound) {
    if (bound < 1 || bound > kMaxTopologyPoints) {
        throw CarrierTooLarge("composition search runs on 1.." + std::to_string(kMaxTopologyPoints) + " points");
    }
    for (int n = 1; n <= bound; ++n) {
        const auto& topos = topologies(n);
        const std::uint64_t spaces = static_cast<std::uint64_t>(topos.size()) << n;
        const std::uint64_t count = map_count(n, n);
        // Class tables for every (topology, ideal) on n points, reused as the
        // intermediate space.
        std::vector<TableProvider> providers;
        providers.reserve(spaces);
        for (std::uint64_t s = 0; s < spaces; ++s) providers.emplace_back(space_info(n, s).space);

        for (std::uint64_t s = 0; s < spaces; ++s) {
            const TableProvider& dom = providers[s];
            for (std::size_t mid = 0; mid < topos.size(); ++mid) {
                for (std::uint64_t fi = 0; fi < count; ++fi) {
                    const std::vector<int> f = map_at(n, n, fi);
                    if (!dom.map(topos[mid], f)[MapClass::pre_i_continuous]) continue;
                    for (std::uint64_t j = 0; j < (std::uint64_t{1} << n); ++j) {
                        const TableProvider& midp = providers[(mid << n) | j];
                        for (std::size_t cod = 0; cod < topos.size(); ++cod) {
                            for (std::uint64_t gi = 0; gi < count; ++gi) {
                                const std::vector<int> g = map_at(n, n, gi);
                                if (!midp.map(topos[cod], g)[MapClass::pre_i_continuous]) continue;
                                if (dom.map(topos[cod], composed(f, g))[MapClass::pre_i_continuous]) continue;
                                Witness w{"composition", Direction::both, dom.space(), topos[cod], topos[mid],
                                          ideal_at(n, j), {}, f, g, {}, {}};
                                w.trace = {{"f.pre_i_continuous", true},
                                           {"g.pre_i_continuous", true},
                                           {"g_after_f.pre_i_continuous", false}};
                                w.key = {static_cast<std::uint64_t>(n), s, mid, fi, j, cod, gi};
                                return w;
                            }
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

} // namespace topoideal
