// Command-line front end: classify, verify, search, tabulate.
//
// Exit codes: 0 success, 1 violations found (verify) or no witness (search),
// 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "topoideal/claim.hpp"
#include "topoideal/classes.hpp"
#include "topoideal/enumerate.hpp"
#include "topoideal/report.hpp"
#include "topoideal/spacefile.hpp"
#include "topoideal/verify.hpp"

namespace {

using namespace topoideal;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

NamedSpace load_space(const std::string& path) {
    try {
        return parse_space_file(read_file(path));
    } catch (const SpaceFileError& e) {
        throw UsageError(path + ": " + e.what());
    }
}

void require_points(int n, std::string_view flag) {
    const int cap = std::min(max_enumeration_points(), kMaxTopologyPoints);
    if (n < 1 || n > cap) {
        throw UsageError(std::string(flag) + " must be in 1.." + std::to_string(cap) + " (TOPOIDEAL_MAX_POINTS caps it)");
    }
}

std::vector<std::string> split_ids(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string id;
    while (std::getline(in, id, ',')) {
        if (!id.empty()) out.push_back(id);
    }
    return out;
}

struct ClassifyArgs {
    std::string space;
    std::string set;
    std::string map;
    bool json = false;
};

int cmd_classify(const ClassifyArgs& a) {
    const NamedSpace s = load_space(a.space);
    if (a.set.empty() == a.map.empty()) throw UsageError("classify takes exactly one of --set and --map");
    if (!a.set.empty()) {
        SubsetMask m;
        try {
            m = parse_subset(a.set, s.names);
        } catch (const SpaceFileError& e) {
            throw UsageError("--set: " + std::string(e.what()));
        }
        const ClassVector v = set_classes(s.space, m);
        if (a.json) {
            std::cout << classes_json(s, m, v).dump(2) << "\n";
        } else {
            std::cout << "set " << to_string(m, s.names) << "\n" << classes_text(v);
            std::cout << "local_function=" << to_string(local_function(s.space, m), s.names) << "\n";
        }
        return kOk;
    }
    NamedMap m = [&] {
        try {
            return parse_map_file(read_file(a.map), s);
        } catch (const SpaceFileError& e) {
            throw UsageError(a.map + ": " + e.what());
        }
    }();
    const MapClassVector v = map_classes(m.map);
    if (a.json) {
        std::cout << map_classes_json(s, m, v).dump(2) << "\n";
    } else {
        std::cout << map_classes_text(m.map, v);
    }
    return kOk;
}

struct VerifyArgs {
    int points = 0;
    std::string suite = "all";
    std::string direction = "both";
    std::string hypothesis;
    int jobs = 1;
    int set_points = 4;
    int map_points = 3;
    std::size_t max_witnesses = 8;
    bool reference = false;
    bool json = false;
};

int cmd_verify(const VerifyArgs& a) {
    require_points(a.points, "--points");
    SuiteOptions opt;
    opt.jobs = a.jobs;
    opt.reference = a.reference;
    opt.max_witnesses = a.max_witnesses;
    opt.max_set_points = a.set_points;
    opt.max_map_points = a.map_points;
    const auto dir = direction_from_name(a.direction);
    if (!dir) throw UsageError("--direction must be both, fwd or bwd");
    opt.direction = *dir;
    if (!a.hypothesis.empty()) {
        const auto h = hypothesis_from_name(a.hypothesis);
        if (!h) throw UsageError("unknown hypothesis '" + a.hypothesis + "'");
        opt.hypothesis = *h;
    }
    Report r;
    try {
        r = run_theorem_suite(a.points, split_ids(a.suite), opt);
    } catch (const UnknownTheoremId& e) {
        throw UsageError(e.what());
    } catch (const UnsupportedDirection& e) {
        throw UsageError(e.what());
    }
    if (a.json) {
        std::cout << report_json(r).dump(2) << "\n";
    } else {
        std::cout << report_text(r);
    }
    return r.passed() ? kOk : kNegative;
}

struct SearchArgs {
    std::string claim;
    std::string scope = "sets";
    int max_points = 0;
    int jobs = 1;
    bool json = false;
};

int cmd_search(const SearchArgs& a) {
    ClaimAST claim = [&] {
        try {
            return parse_claim(a.claim);
        } catch (const ParseError& e) {
            throw UsageError("ParseError: " + std::string(e.what()));
        }
    }();
    require_points(a.max_points, "--max-points");
    SearchScope scope;
    if (a.scope == "sets") {
        scope = SearchScope::sets;
    } else if (a.scope == "maps") {
        scope = SearchScope::maps;
    } else {
        throw UsageError("--scope must be sets or maps");
    }
    std::optional<Witness> w;
    try {
        w = find_counterexample(claim, scope, a.max_points, a.jobs);
    } catch (const ScopeError& e) {
        throw UsageError(e.what());
    }
    if (a.json) {
        Json j;
        j["claim"] = to_string(claim);
        j["scope"] = a.scope;
        j["max_points"] = a.max_points;
        j["witness"] = w ? witness_json(*w) : Json(nullptr);
        std::cout << j.dump(2) << "\n";
    } else if (w) {
        std::cout << "claim: " << to_string(claim) << "\n" << witness_text(*w);
    } else {
        std::cout << "no witness\n";
    }
    return w ? kOk : kNegative;
}

int cmd_tabulate(const std::string& space, bool json) {
    const NamedSpace s = load_space(space);
    if (json) {
        std::cout << tabulate_json(s).dump(2) << "\n";
    } else {
        std::cout << tabulate_text(s);
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite ideal topological spaces: classification, theorem sweeps, counterexample search"};
    app.require_subcommand(1);

    ClassifyArgs ca;
    auto* classify = app.add_subcommand("classify", "Classify a subset or a map");
    classify->add_option("--space", ca.space, "Space file")->required();
    classify->add_option("--set", ca.set, "Subset such as \"{a,c}\"");
    classify->add_option("--map", ca.map, "Map file (codomain space plus map line)");
    classify->add_flag("--json", ca.json, "Structured output");

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run theorem checks over every space on N points");
    verify->add_option("--points", va.points, "Carrier size")->required();
    verify->add_option("--suite", va.suite, "all, or comma-separated check ids");
    verify->add_option("--direction", va.direction, "both, fwd or bwd");
    verify->add_option("--hypothesis", va.hypothesis, "Replace each check's hypothesis (none, hs, ...)");
    verify->add_option("--jobs", va.jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--set-points", va.set_points, "Largest carrier for set checks")->check(CLI::PositiveNumber);
    verify->add_option("--map-points", va.map_points, "Largest carrier for map checks")->check(CLI::PositiveNumber);
    verify->add_option("--max-witnesses", va.max_witnesses, "Witnesses kept per check");
    verify->add_flag("--reference", va.reference, "Serial sweep without class tables");
    verify->add_flag("--json", va.json, "Structured output");

    SearchArgs sa;
    auto* search = app.add_subcommand("search", "Find the first structure satisfying a claim");
    search->add_option("--claim", sa.claim, "Claim such as \"preopen & !pre_i_open\"")->required();
    search->add_option("--scope", sa.scope, "sets or maps");
    search->add_option("--max-points", sa.max_points, "Largest carrier")->required();
    search->add_option("--jobs", sa.jobs, "Worker threads")->check(CLI::PositiveNumber);
    search->add_flag("--json", sa.json, "Structured output");

    std::string tab_space;
    bool tab_json = false;
    auto* tabulate = app.add_subcommand("tabulate", "List the pre-I-open and I-open sets of a space");
    tabulate->add_option("--space", tab_space, "Space file")->required();
    tabulate->add_flag("--json", tab_json, "Structured output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*classify) return cmd_classify(ca);
        if (*verify) return cmd_verify(va);
        if (*search) return cmd_search(sa);
        if (*tabulate) return cmd_tabulate(tab_space, tab_json);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
