#include "topoideal/classes.hpp"

#include <algorithm>

namespace topoideal {

namespace {

constexpr std::array<std::string_view, kSetClassCount> kNames = {
    "open",           "closed",         "dense",
    "preopen",        "semi_open",      "alpha_open",
    "beta_open",      "regular_closed", "locally_closed",
    "a_set",          "i_open",         "i_closed",
    "pre_i_open",     "pre_i_closed",   "star_dense_in_itself",
    "star_perfect",   "tau_star_open",  "tau_star_closed",
    "i_locally_closed",
};

template <class F>
void for_each_subset(int n, F&& f) {
    const auto limit = SubsetMask::full(n).bits();
    for (SubsetMask::word_type b = 0;; ++b) {
        f(SubsetMask{b});
        if (b == limit) break;
    }
}

// A = U & F for some open U and some F in `candidates` exactly when the
// smallest possible U, the open hull of A, already works with some F above A.
bool is_open_meet_of(const FiniteTopology& topo, SubsetMask a,
                     const std::vector<SubsetMask>& candidates) {
    const SubsetMask hull = open_hull(topo, a);
    return std::any_of(candidates.begin(), candidates.end(), [&](SubsetMask f) {
        return a.subset_of(f) && (hull & f) == a;
    });
}

std::vector<SubsetMask> star_perfect_family(const IdealSpace& sp) {
    std::vector<SubsetMask> out;
    for_each_subset(sp.n(), [&](SubsetMask a) {
        if (local_function(sp, a) == a) out.push_back(a);
    });
    return out;
}

std::vector<SubsetMask> regular_closed_family(const FiniteTopology& topo) {
    std::vector<SubsetMask> out;
    for_each_subset(topo.n(), [&](SubsetMask a) {
        if (closure(topo, interior(topo, a)) == a) out.push_back(a);
    });
    return out;
}

} // namespace

std::string_view name(SetClass c) { return kNames[static_cast<std::size_t>(c)]; }

std::optional<SetClass> set_class_from_name(std::string_view s) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == s) return static_cast<SetClass>(i);
    }
    return std::nullopt;
}

const std::array<SetClass, kSetClassCount>& all_set_classes() {
    static const auto all = [] {
        std::array<SetClass, kSetClassCount> out{};
        for (int i = 0; i < kSetClassCount; ++i) out[static_cast<std::size_t>(i)] = static_cast<SetClass>(i);
        return out;
    }();
    return all;
}

bool is_pre_i_open(const IdealSpace& sp, SubsetMask a) {
    return a.subset_of(interior(sp.topology(), star_closure(sp, a)));
}

bool is_i_open(const IdealSpace& sp, SubsetMask a) {
    return a.subset_of(interior(sp.topology(), local_function(sp, a)));
}

bool is_i_locally_closed(const IdealSpace& sp, SubsetMask a) {
    return is_open_meet_of(sp.topology(), a, star_perfect_family(sp));
}

ClassVector set_classes(const IdealSpace& sp, SubsetMask a) {
    return SpaceAnalysis(sp).classify(a);
}

std::vector<SubsetMask> pio_family(const IdealSpace& sp) {
    std::vector<SubsetMask> out;
    for_each_subset(sp.n(), [&](SubsetMask a) {
        if (is_pre_i_open(sp, a)) out.push_back(a);
    });
    return out;
}

std::vector<SubsetMask> class_family(const IdealSpace& sp, SetClass c) {
    const SpaceAnalysis analysis(sp);
    std::vector<SubsetMask> out;
    for_each_subset(sp.n(), [&](SubsetMask a) {
        if (analysis.classify(a)[c]) out.push_back(a);
    });
    return out;
}

SpaceAnalysis::SpaceAnalysis(IdealSpace sp)
    : space_(std::move(sp)),
      star_(tau_star(space_)),
      star_perfect_(star_perfect_family(space_)),
      regular_closed_(regular_closed_family(space_.topology())) {}

ClassVector SpaceAnalysis::classify(SubsetMask a) const {
    const FiniteTopology& topo = space_.topology();
    const int n = topo.n();
    const SubsetMask full = SubsetMask::full(n);
    const SubsetMask co = a.complement(n);

    const SubsetMask in = interior(topo, a);
    const SubsetMask cl = closure(topo, a);
    const SubsetMask cl_in = closure(topo, in);
    const SubsetMask in_cl = interior(topo, cl);
    const SubsetMask star = local_function(space_, a);

    ClassVector v;
    v.set(SetClass::open, in == a);
    v.set(SetClass::closed, cl == a);
    v.set(SetClass::dense, cl == full);
    v.set(SetClass::preopen, a.subset_of(in_cl));
    v.set(SetClass::semi_open, a.subset_of(cl_in));
    v.set(SetClass::alpha_open, a.subset_of(interior(topo, cl_in)));
    v.set(SetClass::beta_open, a.subset_of(closure(topo, in_cl)));
    v.set(SetClass::regular_closed, cl_in == a);
    v.set(SetClass::locally_closed, (open_hull(topo, a) & cl) == a);
    v.set(SetClass::a_set, is_open_meet_of(topo, a, regular_closed_));
    v.set(SetClass::i_open, a.subset_of(interior(topo, star)));
    v.set(SetClass::i_closed, is_i_open(space_, co));
    v.set(SetClass::pre_i_open, a.subset_of(interior(topo, a | star)));
    v.set(SetClass::pre_i_closed, is_pre_i_open(space_, co));
    v.set(SetClass::star_dense_in_itself, a.subset_of(star));
    v.set(SetClass::star_perfect, star == a);
    v.set(SetClass::tau_star_open, star_.is_open(a));
    v.set(SetClass::tau_star_closed, star_.is_closed(a));
    v.set(SetClass::i_locally_closed, is_open_meet_of(topo, a, star_perfect_));
    return v;
}

std::vector<ClassVector> SpaceAnalysis::class_table() const {
    std::vector<ClassVector> table;
    table.reserve(std::size_t{1} << space_.n());
    for_each_subset(space_.n(), [&](SubsetMask a) { table.push_back(classify(a)); });
    return table;
}

} // namespace topoideal
