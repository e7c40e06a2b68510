#pragma once

/// \file
/// Boolean claims over class flags, e.g. "preopen & !pre_i_open".
///
/// Grammar (whitespace insensitive, precedence ! > & > | > =>, '=>' right
/// associative, '&' and '|' left associative):
///
///     claim   := disj ( '=>' claim )?
///     disj    := conj ( '|' conj )*
///     conj    := unary ( '&' unary )*
///     unary   := '!' unary | '(' claim ')' | atom
///
/// Atoms are set class names, map class names or space property names.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "topoideal/classes.hpp"
#include "topoideal/maps.hpp"

namespace topoideal {

enum class SpaceProp : std::uint8_t { hayashi_samuels, submaximal, i_strongly_irresolvable };

std::string_view name(SpaceProp p);
bool value(const SpaceProps& props, SpaceProp p);

class Atom {
public:
    enum class Kind : std::uint8_t { set_class, map_class, space_prop };

    explicit Atom(SetClass c) : kind_(Kind::set_class), id_(static_cast<std::uint8_t>(c)) {}
    explicit Atom(MapClass c) : kind_(Kind::map_class), id_(static_cast<std::uint8_t>(c)) {}
    explicit Atom(SpaceProp p) : kind_(Kind::space_prop), id_(static_cast<std::uint8_t>(p)) {}

    /// Looks a name up in the set, map and space vocabularies.
    static std::optional<Atom> from_name(std::string_view s);

    Kind kind() const { return kind_; }
    SetClass set_class() const { return static_cast<SetClass>(id_); }
    MapClass map_class() const { return static_cast<MapClass>(id_); }
    SpaceProp space_prop() const { return static_cast<SpaceProp>(id_); }
    std::string_view name() const;

    bool operator==(const Atom&) const = default;

private:
    Kind kind_;
    std::uint8_t id_;
};

/// Every atom name, set classes first, then map classes, then space properties.
std::vector<std::string_view> atom_vocabulary();

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position) : Error(what), position_(position) {}
    /// Byte offset into the claim text.
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

class UnknownAtom : public ParseError {
public:
    UnknownAtom(const std::string& atom, std::size_t position)
        : ParseError("unknown atom '" + atom + "'", position), atom_(atom) {}
    const std::string& atom() const { return atom_; }

private:
    std::string atom_;
};

/// Immutable expression tree; copies share structure.
class ClaimAST {
public:
    enum class Op : std::uint8_t { atom, negation, conjunction, disjunction, implication };

    static ClaimAST leaf(Atom a);
    static ClaimAST negation(ClaimAST operand);
    static ClaimAST binary(Op op, ClaimAST lhs, ClaimAST rhs);

    Op op() const { return node_->op; }
    const Atom& atom() const { return *node_->atom; }
    /// Operand of a negation, or left side of a binary node.
    const ClaimAST& lhs() const { return *node_->lhs; }
    const ClaimAST& rhs() const { return *node_->rhs; }

    bool operator==(const ClaimAST& other) const;

    /// `atom_value` maps an Atom to bool.
    template <class F>
    bool evaluate(F&& atom_value) const {
        switch (op()) {
        case Op::atom: return atom_value(atom());
        case Op::negation: return !lhs().evaluate(atom_value);
        case Op::conjunction: return lhs().evaluate(atom_value) && rhs().evaluate(atom_value);
        case Op::disjunction: return lhs().evaluate(atom_value) || rhs().evaluate(atom_value);
        case Op::implication: return !lhs().evaluate(atom_value) || rhs().evaluate(atom_value);
        }
        return false;
    }

private:
    struct Node {
        Op op;
        std::optional<Atom> atom;
        std::shared_ptr<const ClaimAST> lhs;
        std::shared_ptr<const ClaimAST> rhs;
    };
    explicit ClaimAST(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

ClaimAST parse_claim(std::string_view text);

/// Canonical text with minimal parentheses; parse_claim(to_string(c)) == c.
std::string to_string(const ClaimAST& claim);

/// Distinct atoms in order of first appearance.
std::vector<Atom> atoms(const ClaimAST& claim);

} // namespace topoideal
