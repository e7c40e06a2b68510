#include "topoideal/spacefile.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>

namespace topoideal {

namespace {

using Kind = SpaceFileError::Kind;

constexpr std::array<std::string_view, 8> kKindNames = {
    "syntax", "unknown_point", "too_many_points", "duplicate_point",
    "missing_field", "not_a_topology", "not_an_ideal", "bad_map"};

// One `key: payload` line; columns are 1-based offsets into the original line.
struct Field {
    std::string_view key;
    std::string_view payload;
    std::size_t line;
    std::size_t payload_column;
};

struct PositionedSet {
    SubsetMask mask;
    std::size_t line;
    std::size_t column;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_name_char(char c) {
    return !is_space(c) && c != '{' && c != '}' && c != ',' && c != ';' && c != '=' && c != '#' && c != ':';
}

std::vector<Field> split_fields(std::string_view text) {
    std::vector<Field> out;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        std::size_t i = 0;
        while (i < line.size() && is_space(line[i])) ++i;
        if (i < line.size()) {
            const auto colon = line.find(':', i);
            if (colon == std::string_view::npos) {
                throw SpaceFileError(Kind::syntax, "expected 'key: value'", line_no, i + 1);
            }
            std::string_view key = line.substr(i, colon - i);
            while (!key.empty() && is_space(key.back())) key.remove_suffix(1);
            out.push_back(Field{key, line.substr(colon + 1), line_no, colon + 2});
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    return out;
}

class SetReader {
public:
    SetReader(const Field& f, const std::vector<std::string>& names) : f_(f), names_(names) {}

    // `;`-separated list of sets; at least one.
    std::vector<PositionedSet> list() {
        std::vector<PositionedSet> out;
        for (;;) {
            out.push_back(set());
            skip_space();
            if (pos_ == f_.payload.size()) return out;
            expect(';');
        }
    }

    PositionedSet single() {
        PositionedSet s = set();
        skip_space();
        if (pos_ != f_.payload.size()) fail("unexpected text after set");
        return s;
    }

private:
    PositionedSet set() {
        skip_space();
        const std::size_t column = f_.payload_column + pos_;
        expect('{');
        SubsetMask mask;
        skip_space();
        if (peek() == '}') {
            ++pos_;
            return {mask, f_.line, column};
        }
        for (;;) {
            skip_space();
            const std::size_t start = pos_;
            while (pos_ < f_.payload.size() && is_name_char(f_.payload[pos_])) ++pos_;
            if (start == pos_) fail("expected a point name");
            const std::string_view word = f_.payload.substr(start, pos_ - start);
            const auto it = std::find(names_.begin(), names_.end(), word);
            if (it == names_.end()) {
                throw SpaceFileError(Kind::unknown_point, "unknown point '" + std::string(word) + "'", f_.line,
                                     f_.payload_column + start);
            }
            mask |= SubsetMask::singleton(static_cast<int>(it - names_.begin()));
            skip_space();
            if (peek() == '}') {
                ++pos_;
                return {mask, f_.line, column};
            }
            expect(',');
        }
    }

    char peek() const { return pos_ < f_.payload.size() ? f_.payload[pos_] : '\0'; }

    void skip_space() {
        while (pos_ < f_.payload.size() && is_space(f_.payload[pos_])) ++pos_;
    }

    void expect(char c) {
        skip_space();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw SpaceFileError(Kind::syntax, what, f_.line, f_.payload_column + pos_);
    }

    const Field& f_;
    const std::vector<std::string>& names_;
    std::size_t pos_ = 0;
};

struct ParsedHeader {
    std::vector<std::string> names;
    std::vector<PositionedSet> opens;
    const Field* points = nullptr;
    const Field* first_open = nullptr;
    const Field* ideal = nullptr;
    const Field* map = nullptr;
};

std::vector<std::string> parse_points(const Field& f) {
    std::vector<std::string> names;
    std::vector<std::size_t> columns;
    std::size_t i = 0;
    const std::string_view p = f.payload;
    while (i < p.size()) {
        if (is_space(p[i])) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < p.size() && is_name_char(p[i])) ++i;
        if (start == i) {
            throw SpaceFileError(Kind::syntax, std::string("unexpected '") + p[i] + "' in point list", f.line,
                                 f.payload_column + i);
        }
        std::string word(p.substr(start, i - start));
        if (std::find(names.begin(), names.end(), word) != names.end()) {
            throw SpaceFileError(Kind::duplicate_point, "point '" + word + "' listed twice", f.line,
                                 f.payload_column + start);
        }
        if (names.size() == static_cast<std::size_t>(kMaxPoints)) {
            throw SpaceFileError(Kind::too_many_points,
                                 "more than " + std::to_string(kMaxPoints) + " points", f.line,
                                 f.payload_column + start);
        }
        names.push_back(std::move(word));
    }
    if (names.empty()) throw SpaceFileError(Kind::syntax, "no points listed", f.line, f.payload_column);
    std::sort(names.begin(), names.end());
    return names;
}

const PositionedSet* find_set(const std::vector<PositionedSet>& sets, SubsetMask m) {
    for (const PositionedSet& s : sets) {
        if (s.mask == m) return &s;
    }
    return nullptr;
}

ParsedHeader parse_header(const std::vector<Field>& fields, bool allow_map) {
    ParsedHeader h;
    for (const Field& f : fields) {
        auto once = [&](const Field*& slot) {
            if (slot != nullptr) {
                throw SpaceFileError(Kind::syntax, "duplicate '" + std::string(f.key) + ":' line", f.line, 1);
            }
            slot = &f;
        };
        if (f.key == "points") {
            once(h.points);
        } else if (f.key == "open") {
            if (h.first_open == nullptr) h.first_open = &f;
        } else if (f.key == "ideal" || f.key == "ideal-family") {
            once(h.ideal);
        } else if (f.key == "map" && allow_map) {
            once(h.map);
        } else {
            throw SpaceFileError(Kind::syntax, "unknown key '" + std::string(f.key) + "'", f.line, 1);
        }
    }
    if (h.points == nullptr) throw SpaceFileError(Kind::missing_field, "missing 'points:' line", 1, 1);
    if (h.first_open == nullptr) throw SpaceFileError(Kind::missing_field, "missing 'open:' line", 1, 1);
    h.names = parse_points(*h.points);
    for (const Field& f : fields) {
        if (f.key != "open") continue;
        const auto sets = SetReader(f, h.names).list();
        h.opens.insert(h.opens.end(), sets.begin(), sets.end());
    }
    return h;
}

FiniteTopology build_topology(const ParsedHeader& h) {
    const int n = static_cast<int>(h.names.size());
    std::vector<SubsetMask> family;
    for (const PositionedSet& s : h.opens) family.push_back(s.mask);
    try {
        return make_topology(n, family);
    } catch (const NotATopology& e) {
        const SubsetMask full = SubsetMask::full(n);
        const SubsetMask a = e.first();
        const SubsetMask b = e.second();
        std::string what;
        const PositionedSet* at = find_set(h.opens, a);
        if (a == b && a.is_empty()) {
            what = "the empty set {} must be open";
            at = nullptr;
        } else if (a == b && a == full) {
            what = "the carrier " + to_string(full, h.names) + " must be open";
            at = nullptr;
        } else {
            const bool has_union = find_set(h.opens, a | b) != nullptr;
            what = "open sets " + to_string(a, h.names) + " and " + to_string(b, h.names) + " have " +
                   (has_union ? "intersection " + to_string(a & b, h.names)
                              : "union " + to_string(a | b, h.names)) +
                   " missing from the family";
        }
        const std::size_t line = at != nullptr ? at->line : h.first_open->line;
        const std::size_t column = at != nullptr ? at->column : h.first_open->payload_column;
        throw SpaceFileError(Kind::not_a_topology, what, line, column);
    }
}

std::optional<Ideal> build_ideal(const ParsedHeader& h) {
    if (h.ideal == nullptr) return std::nullopt;
    const Field& f = *h.ideal;
    const int n = static_cast<int>(h.names.size());
    if (f.key == "ideal") return Ideal(n, SetReader(f, h.names).single().mask);

    const auto members = SetReader(f, h.names).list();
    std::vector<SubsetMask> family;
    for (const PositionedSet& s : members) family.push_back(s.mask);
    try {
        return make_ideal(n, family);
    } catch (const NotAnIdeal& e) {
        std::string what;
        const PositionedSet* at = find_set(members, e.first());
        switch (e.axiom()) {
        case NotAnIdeal::Axiom::heredity:
            what = "member " + to_string(e.first(), h.names) + " has subset " + to_string(e.second(), h.names) +
                   " missing from the family";
            break;
        case NotAnIdeal::Axiom::additivity:
            what = "members " + to_string(e.first(), h.names) + " and " + to_string(e.second(), h.names) +
                   " have union " + to_string(e.first() | e.second(), h.names) + " missing from the family";
            break;
        default:
            what = e.what();
            break;
        }
        const std::size_t column = at != nullptr ? at->column : f.payload_column;
        throw SpaceFileError(Kind::not_an_ideal, what, f.line, column);
    }
}

std::string open_line(const FiniteTopology& topo, const std::vector<std::string>& names) {
    std::string out = "open:";
    bool first = true;
    for (SubsetMask u : topo.opens()) {
        out += first ? " " : "; ";
        out += to_string(u, names);
        first = false;
    }
    return out;
}

std::string points_line(const std::vector<std::string>& names) {
    std::string out = "points:";
    for (const std::string& s : names) out += " " + s;
    return out;
}

} // namespace

SpaceFileError::SpaceFileError(Kind kind, const std::string& what, std::size_t line, std::size_t column)
    : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      kind_(kind),
      line_(line),
      column_(column) {}

std::string_view name(SpaceFileError::Kind k) { return kKindNames[static_cast<std::size_t>(k)]; }

NamedSpace parse_space_file(std::string_view text) {
    const std::vector<Field> fields = split_fields(text);
    const ParsedHeader h = parse_header(fields, false);
    FiniteTopology topo = build_topology(h);
    std::optional<Ideal> ideal = build_ideal(h);
    if (!ideal) throw SpaceFileError(Kind::missing_field, "missing 'ideal:' line", h.points->line, 1);
    return NamedSpace{IdealSpace(std::move(topo), *ideal), h.names};
}

std::string serialize(const NamedSpace& s) {
    std::string out = points_line(s.names) + "\n";
    out += open_line(s.space.topology(), s.names) + "\n";
    out += "ideal: " + to_string(s.space.ideal().generator(), s.names) + "\n";
    return out;
}

std::string serialize(const IdealSpace& s) {
    std::vector<std::string> names;
    for (int i = 0; i < s.n(); ++i) names.push_back(default_point_name(i));
    return serialize(NamedSpace{s, names});
}

SubsetMask parse_subset(std::string_view text, const std::vector<std::string>& names) {
    const Field f{"set", text, 1, 1};
    return SetReader(f, names).single().mask;
}

NamedMap parse_map_file(std::string_view text, const NamedSpace& dom) {
    const std::vector<Field> fields = split_fields(text);
    const ParsedHeader h = parse_header(fields, true);
    FiniteTopology cod = build_topology(h);
    std::optional<Ideal> cod_ideal = build_ideal(h);
    if (h.map == nullptr) throw SpaceFileError(Kind::missing_field, "missing 'map:' line", h.points->line, 1);

    const Field& f = *h.map;
    std::vector<int> table(dom.names.size(), -1);
    const std::string_view p = f.payload;
    std::size_t i = 0;
    auto word_at = [&](std::size_t& pos) {
        const std::size_t start = pos;
        while (pos < p.size() && is_name_char(p[pos])) ++pos;
        return p.substr(start, pos - start);
    };
    while (i < p.size()) {
        if (is_space(p[i])) {
            ++i;
            continue;
        }
        const std::size_t from_col = f.payload_column + i;
        const std::string_view from = word_at(i);
        if (from.empty() || i >= p.size() || p[i] != '=') {
            throw SpaceFileError(Kind::syntax, "expected 'point=point'", f.line, from_col);
        }
        ++i;
        const std::size_t to_col = f.payload_column + i;
        const std::string_view to = word_at(i);
        if (to.empty()) throw SpaceFileError(Kind::syntax, "expected a codomain point", f.line, to_col);

        const auto d = std::find(dom.names.begin(), dom.names.end(), from);
        if (d == dom.names.end()) {
            throw SpaceFileError(Kind::unknown_point, "unknown domain point '" + std::string(from) + "'", f.line,
                                 from_col);
        }
        const auto c = std::find(h.names.begin(), h.names.end(), to);
        if (c == h.names.end()) {
            throw SpaceFileError(Kind::unknown_point, "unknown codomain point '" + std::string(to) + "'", f.line,
                                 to_col);
        }
        int& slot = table[static_cast<std::size_t>(d - dom.names.begin())];
        if (slot != -1) {
            throw SpaceFileError(Kind::bad_map, "point '" + std::string(from) + "' mapped twice", f.line, from_col);
        }
        slot = static_cast<int>(c - h.names.begin());
    }
    for (std::size_t x = 0; x < table.size(); ++x) {
        if (table[x] == -1) {
            throw SpaceFileError(Kind::bad_map, "point '" + dom.names[x] + "' has no image", f.line,
                                 f.payload_column);
        }
    }
    return NamedMap{SpaceMap(dom.space, std::move(cod), std::move(table), cod_ideal), h.names};
}

std::string serialize(const NamedMap& m, const NamedSpace& dom) {
    std::string out = points_line(m.cod_names) + "\n";
    out += open_line(m.map.cod(), m.cod_names) + "\n";
    if (m.map.cod_ideal()) out += "ideal: " + to_string(m.map.cod_ideal()->generator(), m.cod_names) + "\n";
    out += "map:";
    for (std::size_t x = 0; x < dom.names.size(); ++x) {
        out += " " + dom.names[x] + "=" + m.cod_names[static_cast<std::size_t>(m.map.table()[x])];
    }
    out += "\n";
    return out;
}

} // namespace topoideal
