// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>

#include "../helpers.hpp"
#include "../oracles.hpp"
#include "topoideal/classes.hpp"
#include "topoideal/enumerate.hpp"
#include "topoideal/maps.hpp"
#include "topoideal/verify.hpp"

namespace {

using namespace topoideal;
using fixture::set;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

int failures = 0;

void report(int number, bool ok, const std::string& what, const std::string& detail) {
    std::printf("%s criterion %d: %s (%s)\n", ok ? "PASS" : "FAIL", number, what.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

void criterion1() {
    const IdealSpace s1 = fixture::s1();
    const SubsetMask a = set("acd");
    ClassVector v;
    // Best of several single classifications, each from scratch.
    double best = 1e9;
    for (int i = 0; i < 20; ++i) {
        const auto start = Clock::now();
        v = set_classes(s1, a);
        best = std::min(best, seconds_since(start));
    }
    const SubsetMask star = local_function(s1, a);
    const bool ok = v[SetClass::open] && v[SetClass::pre_i_open] && !v[SetClass::i_open] && star == set("abc") &&
                    best < 1e-3;
    report(1, ok, "S1 set {a,c,d}: open, pre_i_open, not i_open, A* = {a,b,c}",
           "A* = " + to_string(star) + ", classify " + std::to_string(best * 1e6) + " us");
}

void criterion2() {
    const IdealSpace s2 = fixture::s2();
    const SubsetMask a = set("ac");
    const SubsetMask b = set("bc");
    const SubsetMask x = SubsetMask::full(3);
    const bool ok = is_pre_i_open(s2, a) && is_pre_i_open(s2, b) && local_function(s2, a) == x &&
                    local_function(s2, b) == x && (a & b) == set("c") && !is_pre_i_open(s2, a & b);
    report(2, ok, "S2: {a,c} and {b,c} pre-I-open with A* = B* = X, {c} not pre-I-open", "exact");
}

void criterion3() {
    const MapClassVector nu = map_classes(SpaceMap(fixture::s3_tau(), fixture::nu3(), fixture::identity(3)));
    const MapClassVector sig = map_classes(SpaceMap(fixture::s3_sigma(), fixture::sigma3(), fixture::identity(3)));
    const bool ok = nu[MapClass::star_i_continuous] && !nu[MapClass::pre_i_continuous] &&
                    !nu[MapClass::i_continuous] && sig[MapClass::pre_i_continuous] &&
                    !sig[MapClass::i_continuous] && !sig[MapClass::star_i_continuous];
    report(3, ok, "identity maps on {a,b,c}: star-I-continuous only, then pre-I-continuous only", "exact");
}

void criterion4() {
    const MapClassVector v = map_classes(SpaceMap(fixture::s1(), fixture::sigma4(), fixture::identity(4)));
    report(4, v[MapClass::pre_i_continuous] && !v[MapClass::i_continuous],
           "identity (tau1, I1) -> sigma4 is pre-I-continuous and not I-continuous", "exact");
}

void criterion5() {
    const std::vector<std::string> ids = {"t1",    "t2",   "t3",    "t4.i",   "t4.ii",  "t4.iii",
                                          "t5.i",  "t5.ii", "t5.iii", "t5.iv",  "t5.v",   "c1.i",
                                          "c1.ii", "l1",   "tt6",   "tt42",   "submax", "star_perfect_remark"};
    SuiteOptions opt;
    opt.jobs = 1;
    const auto start = Clock::now();
    const Report r = run_theorem_suite(4, ids, opt);
    const double secs = seconds_since(start);
    const bool full = r.check("t1").instances == 355u * 16u * 16u && r.spaces_visited == 355u * 16u;
    report(5, r.passed() && full && secs < 60, "set-level suite at n=4, single-threaded",
           std::to_string(r.total_violations()) + " violations over " + std::to_string(r.check("t1").instances) +
               " (space, subset) pairs, " + std::to_string(secs) + " s");
}

void criterion6() {
    const std::vector<std::string> ids = {"tt1", "tt2",  "tt3",      "tt4",      "tt5.i", "tt5.ii",
                                          "tt7", "tt41", "tt43",     "grt1.min", "grt1.nwd"};
    SuiteOptions serial;
    serial.jobs = 1;
    auto start = Clock::now();
    const Report r = run_theorem_suite(3, ids, serial);
    const double secs = seconds_since(start);

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    SuiteOptions par;
    par.jobs = 4;
    start = Clock::now();
    const Report p = run_theorem_suite(3, ids, par);
    const double par_secs = seconds_since(start);
    bool same = p.checks.size() == r.checks.size();
    for (std::size_t i = 0; same && i < r.checks.size(); ++i) {
        same = r.checks[i].instances == p.checks[i].instances && r.checks[i].violations == p.checks[i].violations &&
               r.checks[i].lhs_true == p.checks[i].lhs_true && r.checks[i].rhs_true == p.checks[i].rhs_true;
    }
    const double speedup = secs / par_secs;
    std::string scaling;
    bool scaling_ok = true;
    if (hw >= 2) {
        const double ideal = std::min<double>(4, hw);
        scaling_ok = speedup >= 0.6 * ideal;
        scaling = "speedup " + std::to_string(speedup) + " with 4 jobs on " + std::to_string(hw) + " hardware threads";
    } else {
        scaling = "speedup not measurable on 1 hardware thread (4 jobs ran in " + std::to_string(par_secs) + " s)";
    }
    const bool full = r.check("tt1").instances == 29u * 8u * 29u * 27u;
    report(6, r.passed() && full && same && secs < 300 && scaling_ok, "map-level suite at n=3",
           std::to_string(r.total_violations()) + " violations over " + std::to_string(r.check("tt1").instances) +
               " (space, codomain, map) triples, " + std::to_string(secs) + " s single-threaded, " +
               (same ? "threaded counts identical, " : "threaded counts DIFFER, ") + scaling);
}

void criterion7() {
    std::size_t compared = 0;
    bool ok = true;
    for (int n = 1; n <= 3 && ok; ++n) {
        for (const FiniteTopology& t : topologies(n)) {
            if (tau_star(IdealSpace(t, minimal_ideal(n))) != t) ok = false;
            if (tau_star(IdealSpace(t, maximal_ideal(n))) != discrete_topology(n)) ok = false;
            if (tau_star(IdealSpace(t, nowhere_dense_ideal(t))).opens() != oracle::alpha_opens(t)) ok = false;
            for (int x = 0; x < n; ++x) {
                SubsetMask meet = SubsetMask::full(n);
                for (SubsetMask u : t.opens()) {
                    if (u.contains(x)) meet &= u;
                }
                if (t.min_nbhd(x) != meet) ok = false;
            }
        }
        for (const IdealSpace& sp : oracle::all_spaces(n)) {
            const FiniteTopology& t = sp.topology();
            const FiniteTopology star = tau_star(sp);
            if (star_closure(sp, SubsetMask{}) != SubsetMask{}) ok = false;
            for (SubsetMask a : oracle::all_subsets(n)) {
                ++compared;
                const SubsetMask la = local_function(sp, a);
                if (la != closure(t, a - sp.ideal().generator())) ok = false;
                if (la != oracle::local_function(sp, a)) ok = false;
                const SubsetMask c = star_closure(sp, a);
                if (!a.subset_of(c) || star_closure(sp, c) != c) ok = false;
                for (SubsetMask b : oracle::all_subsets(n)) {
                    if (star_closure(sp, a | b) != (c | star_closure(sp, b))) ok = false;
                }
                if (star.is_closed(a) != la.subset_of(a)) ok = false;
            }
        }
    }
    report(7, ok, "operator oracles at n <= 3", std::to_string(compared) + " (space, subset) pairs");
}

void criterion8() {
    const std::size_t expected[] = {0, 1, 4, 29, 355};
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 4; ++n) {
        std::vector<std::vector<SubsetMask>> got;
        for (const FiniteTopology& t : topologies(n)) got.push_back(t.opens());
        const auto naive = oracle::topologies_naive(n);
        ok = ok && got.size() == expected[n] && got == naive;
        detail += std::to_string(got.size()) + (n < 4 ? ", " : "");
    }
    for (int n = 1; n <= 3; ++n) {
        ok = ok && ideals(n).size() == (std::size_t{1} << n) && oracle::ideals_naive(n).size() == ideals(n).size();
    }
    report(8, ok, "topology counts match the naive family filter; 2^n ideals",
           "topologies " + detail + "; ideals 2, 4, 8");
}

void criterion9() {
    struct Case {
        const char* claim;
        SearchScope scope;
        int bound;
        int limit;
    };
    const Case cases[] = {
        {"preopen & !pre_i_open", SearchScope::sets, 2, 2},
        {"open & !i_open", SearchScope::sets, 4, 4},
        {"pre_i_continuous & !i_continuous", SearchScope::maps, 4, 4},
        {"star_i_continuous & !pre_i_continuous", SearchScope::maps, 3, 3},
    };
    bool ok = true;
    std::string detail;
    for (const Case& c : cases) {
        const ClaimAST claim = parse_claim(c.claim);
        const auto start = Clock::now();
        const auto w = find_counterexample(claim, c.scope, c.bound);
        const double secs = seconds_since(start);
        const auto again = find_counterexample(claim, c.scope, c.bound, 3);
        if (!w || !again || w->key != again->key || !replay(claim, *w) || secs >= 60) {
            ok = false;
            detail += std::string(c.claim) + ": missing or unstable; ";
            continue;
        }
        const int size = std::max(w->space.n(), w->codomain ? w->codomain->n() : 0);
        if (size > c.limit) ok = false;
        detail += std::string(c.claim) + " at " + std::to_string(size) + " points; ";
    }
    // The first separation must not exist on one point.
    if (find_counterexample(parse_claim("preopen & !pre_i_open"), SearchScope::sets, 1)) ok = false;
    const auto start = Clock::now();
    const auto comp = find_composition_counterexample(3);
    const double secs = seconds_since(start);
    const auto comp_again = find_composition_counterexample(3);
    bool comp_ok = comp && comp_again && comp->key == comp_again->key && secs < 60;
    if (comp_ok) {
        const SpaceMap f(comp->space, *comp->middle, comp->map);
        const SpaceMap g(IdealSpace(*comp->middle, *comp->second_ideal), *comp->codomain, comp->second_map);
        comp_ok = map_classes(f)[MapClass::pre_i_continuous] && map_classes(g)[MapClass::pre_i_continuous] &&
                  !map_classes(compose(f, g))[MapClass::pre_i_continuous];
        detail += "composition at " + std::to_string(comp->space.n()) + " points";
    } else {
        detail += "composition missing";
    }
    report(9, ok && comp_ok, "counterexample searches on minimal carriers", detail);
}

void criterion10() {
    SuiteOptions opt;
    opt.max_witnesses = 1000;
    bool ok = true;
    std::uint64_t total = 0;
    std::size_t replayed = 0;
    for (int n = 1; n <= 3; ++n) {
        const Report r = check_direction("tt43", Direction::both, Hypothesis::none, n, opt);
        const CheckResult& c = r.check("tt43");
        total += c.violations;
        for (const Witness& w : c.witnesses) {
            ++replayed;
            if (!replay(w) || satisfies(w.space, Hypothesis::hayashi_samuels)) ok = false;
        }
    }
    report(10, ok && total > 0, "tt43 without the HS filter is violated and every witness replays",
           std::to_string(total) + " violations at n <= 3, " + std::to_string(replayed) + " witnesses replayed");
}

} // namespace

int main() {
    const std::function<void()> criteria[] = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                              criterion6, criterion7, criterion8, criterion9, criterion10};
    for (const auto& c : criteria) {
        try {
            c();
        } catch (const std::exception& e) {
            std::printf("FAIL criterion: exception %s\n", e.what());
            ++failures;
        }
    }
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
