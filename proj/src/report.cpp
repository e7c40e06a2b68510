#include "topoideal/report.hpp"

#include <cstdio>
#include <sstream>

namespace topoideal {

namespace {

std::vector<std::string> default_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back(default_point_name(i));
    return names;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

bool has_image_classes(const SpaceMap& f) { return f.cod_ideal().has_value(); }

bool is_image_class(MapClass c) { return c == MapClass::i_open_map || c == MapClass::i_closed_map; }

std::string indent(const std::string& text) {
    std::string out;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t end = text.find('\n', start);
        out += "  " + text.substr(start, end - start) + "\n";
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

std::string topology_text(const FiniteTopology& t) {
    const auto names = default_names(t.n());
    std::string out = "points:";
    for (const auto& s : names) out += " " + s;
    out += "\nopen:";
    bool first = true;
    for (SubsetMask u : t.opens()) {
        out += first ? " " : "; ";
        out += to_string(u, names);
        first = false;
    }
    return out + "\n";
}

std::string map_text(const std::vector<int>& table) {
    std::string out;
    for (std::size_t x = 0; x < table.size(); ++x) {
        if (x != 0) out += ' ';
        out += default_point_name(static_cast<int>(x)) + "=" + default_point_name(table[x]);
    }
    return out;
}

Json families(const NamedSpace& s, SetClass c) {
    Json out = Json::array();
    for (SubsetMask a : class_family(s.space, c)) out.push_back(to_string(a, s.names));
    return out;
}

} // namespace

std::string classes_text(ClassVector v) {
    std::string out;
    for (SetClass c : all_set_classes()) out += std::string(name(c)) + "=" + bool_text(v[c]) + "\n";
    return out;
}

std::string map_classes_text(const SpaceMap& f, MapClassVector v) {
    std::string out;
    for (MapClass c : all_map_classes()) {
        if (is_image_class(c) && !has_image_classes(f)) continue;
        out += std::string(name(c)) + "=" + bool_text(v[c]) + "\n";
    }
    return out;
}

Json classes_json(const NamedSpace& s, SubsetMask a, ClassVector v) {
    Json j;
    j["space"] = serialize(s);
    j["set"] = to_string(a, s.names);
    j["local_function"] = to_string(local_function(s.space, a), s.names);
    Json classes;
    for (SetClass c : all_set_classes()) classes[std::string(name(c))] = v[c];
    j["classes"] = classes;
    return j;
}

Json map_classes_json(const NamedSpace& dom, const NamedMap& m, MapClassVector v) {
    Json j;
    j["space"] = serialize(dom);
    j["map"] = serialize(m, dom);
    Json classes;
    for (MapClass c : all_map_classes()) {
        if (is_image_class(c) && !has_image_classes(m.map)) continue;
        classes[std::string(name(c))] = v[c];
    }
    j["classes"] = classes;
    return j;
}

std::string witness_text(const Witness& w) {
    const auto names = default_names(w.space.n());
    std::string out = "witness for " + w.check_id + " (" + std::string(name(w.direction)) + ")\n";
    out += "space:\n" + indent(serialize(w.space));
    if (w.middle) {
        out += "middle:\n" + indent(topology_text(*w.middle));
        if (w.second_ideal) {
            out += "  ideal: " + to_string(w.second_ideal->generator(), default_names(w.middle->n())) + "\n";
        }
    }
    if (w.codomain) {
        out += "codomain:\n" + indent(topology_text(*w.codomain));
        if (w.second_ideal && !w.middle) {
            out += "  ideal: " + to_string(w.second_ideal->generator(), default_names(w.codomain->n())) + "\n";
        }
    }
    if (w.sets.size() == 1) {
        out += "set: " + to_string(w.sets[0], names) + "\n";
    } else if (!w.sets.empty()) {
        out += "sets:";
        for (std::size_t i = 0; i < w.sets.size(); ++i) out += (i == 0 ? " " : "; ") + to_string(w.sets[i], names);
        out += "\n";
    }
    if (!w.map.empty()) out += "map: " + map_text(w.map) + "\n";
    if (!w.second_map.empty()) out += "second map: " + map_text(w.second_map) + "\n";
    out += "trace:";
    for (const auto& [key, value] : w.trace) out += " " + key + "=" + bool_text(value);
    return out + "\n";
}

Json witness_json(const Witness& w) {
    const auto names = default_names(w.space.n());
    Json j;
    j["check"] = w.check_id;
    j["direction"] = std::string(name(w.direction));
    j["space"] = serialize(w.space);
    if (w.middle) j["middle"] = topology_text(*w.middle);
    if (w.codomain) j["codomain"] = topology_text(*w.codomain);
    if (w.second_ideal) {
        j["second_ideal"] = to_string(w.second_ideal->generator(), default_names(w.second_ideal->n()));
    }
    if (!w.sets.empty()) {
        Json sets = Json::array();
        for (SubsetMask s : w.sets) sets.push_back(to_string(s, names));
        j["sets"] = sets;
    }
    if (!w.map.empty()) j["map"] = map_text(w.map);
    if (!w.second_map.empty()) j["second_map"] = map_text(w.second_map);
    Json trace;
    for (const auto& [key, value] : w.trace) trace[key] = value;
    j["trace"] = trace;
    return j;
}

std::string report_text(const Report& r) {
    std::ostringstream out;
    out << "suite " << r.suite << ", " << r.bound << " points, " << r.spaces_visited << " spaces, " << r.jobs
        << (r.jobs == 1 ? " job" : " jobs") << "\n";
    char line[200];
    std::snprintf(line, sizeof line, "%-20s %-20s %-4s %2s %8s %12s %10s %10s %10s  %s\n", "check", "hypothesis",
                  "dir", "n", "spaces", "instances", "lhs", "rhs", "violations", "status");
    out << line;
    for (const CheckResult& c : r.checks) {
        const char* status = c.skipped ? "skipped" : (c.passed() ? "ok" : "FAIL");
        std::snprintf(line, sizeof line, "%-20s %-20s %-4s %2d %8llu %12llu %10llu %10llu %10llu  %s\n",
                      c.id.c_str(), std::string(name(c.hypothesis)).c_str(),
                      std::string(name(c.direction)).c_str(), c.bound,
                      static_cast<unsigned long long>(c.spaces), static_cast<unsigned long long>(c.instances),
                      static_cast<unsigned long long>(c.lhs_true), static_cast<unsigned long long>(c.rhs_true),
                      static_cast<unsigned long long>(c.violations), status);
        out << line;
    }
    out << "total violations: " << r.total_violations() << "\n";
    for (const CheckResult& c : r.checks) {
        for (const Witness& w : c.witnesses) out << "\n" << witness_text(w);
    }
    return out.str();
}

Json report_json(const Report& r) {
    Json j;
    j["suite"] = r.suite;
    j["points"] = r.bound;
    j["jobs"] = r.jobs;
    j["spaces_visited"] = r.spaces_visited;
    j["total_violations"] = r.total_violations();
    Json checks = Json::array();
    for (const CheckResult& c : r.checks) {
        Json cj;
        cj["id"] = c.id;
        cj["hypothesis"] = std::string(name(c.hypothesis));
        cj["direction"] = std::string(name(c.direction));
        cj["points"] = c.bound;
        cj["skipped"] = c.skipped;
        cj["spaces"] = c.spaces;
        cj["instances"] = c.instances;
        cj["lhs_true"] = c.lhs_true;
        cj["rhs_true"] = c.rhs_true;
        cj["violations"] = c.violations;
        Json ws = Json::array();
        for (const Witness& w : c.witnesses) ws.push_back(witness_json(w));
        cj["witnesses"] = ws;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    return j;
}

std::string tabulate_text(const NamedSpace& s) {
    std::string out;
    auto row = [&](std::string_view label, SetClass c) {
        const auto fam = class_family(s.space, c);
        out += std::string(label) + " (" + std::to_string(fam.size()) + "):";
        for (std::size_t i = 0; i < fam.size(); ++i) out += (i == 0 ? " " : "; ") + to_string(fam[i], s.names);
        out += "\n";
    };
    row("PIO", SetClass::pre_i_open);
    row("IO", SetClass::i_open);
    return out;
}

Json tabulate_json(const NamedSpace& s) {
    Json j;
    j["space"] = serialize(s);
    j["pre_i_open"] = families(s, SetClass::pre_i_open);
    j["i_open"] = families(s, SetClass::i_open);
    return j;
}

} // namespace topoideal
