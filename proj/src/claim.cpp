#include "topoideal/claim.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace topoideal {

namespace {

constexpr std::array<std::string_view, 3> kPropNames = {
    "hayashi_samuels", "submaximal", "i_strongly_irresolvable"};

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ClaimAST parse() {
        ClaimAST c = implication();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return c;
    }

private:
    ClaimAST implication() {
        ClaimAST lhs = disjunction();
        if (accept("=>")) return ClaimAST::binary(ClaimAST::Op::implication, lhs, implication());
        return lhs;
    }

    ClaimAST disjunction() {
        ClaimAST lhs = conjunction();
        while (accept("|")) lhs = ClaimAST::binary(ClaimAST::Op::disjunction, lhs, conjunction());
        return lhs;
    }

    ClaimAST conjunction() {
        ClaimAST lhs = unary();
        while (accept("&")) lhs = ClaimAST::binary(ClaimAST::Op::conjunction, lhs, unary());
        return lhs;
    }

    ClaimAST unary() {
        if (accept("!")) return ClaimAST::negation(unary());
        if (accept("(")) {
            ClaimAST inner = implication();
            if (!accept(")")) fail("expected ')'");
            return inner;
        }
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && is_atom_char(text_[pos_])) ++pos_;
        if (start == pos_) {
            if (pos_ == text_.size()) fail("unexpected end of input");
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        }
        const std::string_view word = text_.substr(start, pos_ - start);
        const auto a = Atom::from_name(word);
        if (!a) throw UnknownAtom(std::string(word), start);
        return ClaimAST::leaf(*a);
    }

    static bool is_atom_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
    }

    bool accept(std::string_view token) {
        skip_space();
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at position " + std::to_string(pos_), pos_);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

int precedence(ClaimAST::Op op) {
    switch (op) {
    case ClaimAST::Op::implication: return 1;
    case ClaimAST::Op::disjunction: return 2;
    case ClaimAST::Op::conjunction: return 3;
    case ClaimAST::Op::negation: return 4;
    case ClaimAST::Op::atom: return 5;
    }
    return 0;
}

void print(const ClaimAST& c, std::string& out);

void print_operand(const ClaimAST& c, bool parens, std::string& out) {
    if (parens) out += '(';
    print(c, out);
    if (parens) out += ')';
}

void print(const ClaimAST& c, std::string& out) {
    const int p = precedence(c.op());
    switch (c.op()) {
    case ClaimAST::Op::atom:
        out += c.atom().name();
        return;
    case ClaimAST::Op::negation:
        out += '!';
        print_operand(c.lhs(), precedence(c.lhs().op()) < p, out);
        return;
    default:
        break;
    }
    const bool right_assoc = c.op() == ClaimAST::Op::implication;
    const int lp = precedence(c.lhs().op());
    const int rp = precedence(c.rhs().op());
    print_operand(c.lhs(), right_assoc ? lp <= p : lp < p, out);
    switch (c.op()) {
    case ClaimAST::Op::conjunction: out += " & "; break;
    case ClaimAST::Op::disjunction: out += " | "; break;
    default: out += " => "; break;
    }
    print_operand(c.rhs(), right_assoc ? rp < p : rp <= p, out);
}

void collect(const ClaimAST& c, std::vector<Atom>& out) {
    if (c.op() == ClaimAST::Op::atom) {
        if (std::find(out.begin(), out.end(), c.atom()) == out.end()) out.push_back(c.atom());
        return;
    }
    collect(c.lhs(), out);
    if (c.op() != ClaimAST::Op::negation) collect(c.rhs(), out);
}

} // namespace

std::string_view name(SpaceProp p) { return kPropNames[static_cast<std::size_t>(p)]; }

bool value(const SpaceProps& props, SpaceProp p) {
    switch (p) {
    case SpaceProp::hayashi_samuels: return props.hayashi_samuels;
    case SpaceProp::submaximal: return props.submaximal;
    case SpaceProp::i_strongly_irresolvable: return props.i_strongly_irresolvable;
    }
    return false;
}

std::optional<Atom> Atom::from_name(std::string_view s) {
    if (auto c = set_class_from_name(s)) return Atom(*c);
    if (auto c = map_class_from_name(s)) return Atom(*c);
    for (std::size_t i = 0; i < kPropNames.size(); ++i) {
        if (kPropNames[i] == s) return Atom(static_cast<SpaceProp>(i));
    }
    return std::nullopt;
}

std::string_view Atom::name() const {
    switch (kind_) {
    case Kind::set_class: return topoideal::name(set_class());
    case Kind::map_class: return topoideal::name(map_class());
    case Kind::space_prop: return topoideal::name(space_prop());
    }
    return {};
}

std::vector<std::string_view> atom_vocabulary() {
    std::vector<std::string_view> out;
    for (SetClass c : all_set_classes()) out.push_back(name(c));
    for (MapClass c : all_map_classes()) out.push_back(name(c));
    for (std::string_view p : kPropNames) out.push_back(p);
    return out;
}

ClaimAST ClaimAST::leaf(Atom a) {
    return ClaimAST(std::make_shared<const Node>(Node{Op::atom, a, nullptr, nullptr}));
}

ClaimAST ClaimAST::negation(ClaimAST operand) {
    return ClaimAST(std::make_shared<const Node>(
        Node{Op::negation, std::nullopt, std::make_shared<const ClaimAST>(std::move(operand)), nullptr}));
}

ClaimAST ClaimAST::binary(Op op, ClaimAST lhs, ClaimAST rhs) {
    return ClaimAST(std::make_shared<const Node>(Node{op, std::nullopt,
                                                      std::make_shared<const ClaimAST>(std::move(lhs)),
                                                      std::make_shared<const ClaimAST>(std::move(rhs))}));
}

bool ClaimAST::operator==(const ClaimAST& other) const {
    if (node_ == other.node_) return true;
    if (op() != other.op()) return false;
    switch (op()) {
    case Op::atom: return atom() == other.atom();
    case Op::negation: return lhs() == other.lhs();
    default: return lhs() == other.lhs() && rhs() == other.rhs();
    }
}

ClaimAST parse_claim(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const ClaimAST& claim) {
    std::string out;
    print(claim, out);
    return out;
}

std::vector<Atom> atoms(const ClaimAST& claim) {
    std::vector<Atom> out;
    collect(claim, out);
    return out;
}

} // namespace topoideal
