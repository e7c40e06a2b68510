#include <gtest/gtest.h>

#include <random>

#include "topoideal/claim.hpp"

namespace {

using namespace topoideal;
using Op = ClaimAST::Op;

ClaimAST atom(std::string_view s) { return ClaimAST::leaf(*Atom::from_name(s)); }

TEST(Claim, Precedence) {
    const ClaimAST c = parse_claim("open & !preopen | dense => closed");
    ASSERT_EQ(c.op(), Op::implication);
    ASSERT_EQ(c.lhs().op(), Op::disjunction);
    ASSERT_EQ(c.lhs().lhs().op(), Op::conjunction);
    EXPECT_EQ(c.lhs().lhs().rhs().op(), Op::negation);
    EXPECT_EQ(c.rhs(), atom("closed"));
}

TEST(Claim, ImplicationIsRightAssociative) {
    const ClaimAST c = parse_claim("open => dense => closed");
    EXPECT_EQ(c, ClaimAST::binary(Op::implication, atom("open"),
                                  ClaimAST::binary(Op::implication, atom("dense"), atom("closed"))));
}

TEST(Claim, ConjunctionIsLeftAssociative) {
    const ClaimAST c = parse_claim("open&dense&closed");
    EXPECT_EQ(c, ClaimAST::binary(Op::conjunction, ClaimAST::binary(Op::conjunction, atom("open"), atom("dense")),
                                  atom("closed")));
}

TEST(Claim, Parentheses) {
    const ClaimAST c = parse_claim("!(open | dense)");
    ASSERT_EQ(c.op(), Op::negation);
    EXPECT_EQ(c.lhs().op(), Op::disjunction);
    EXPECT_EQ(to_string(c), "!(open | dense)");
}

TEST(Claim, Errors) {
    try {
        parse_claim("preopen &");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 9u);
    }
    try {
        parse_claim("preopen & bogus");
        FAIL();
    } catch (const UnknownAtom& e) {
        EXPECT_EQ(e.atom(), "bogus");
        EXPECT_EQ(e.position(), 10u);
    }
    EXPECT_THROW(parse_claim("(open"), ParseError);
    EXPECT_THROW(parse_claim("open)"), ParseError);
    EXPECT_THROW(parse_claim(""), ParseError);
    EXPECT_THROW(parse_claim("open dense"), ParseError);
}

TEST(Claim, Vocabulary) {
    EXPECT_EQ(Atom::from_name("pre_i_open")->kind(), Atom::Kind::set_class);
    EXPECT_EQ(Atom::from_name("pre_i_continuous")->kind(), Atom::Kind::map_class);
    EXPECT_EQ(Atom::from_name("hayashi_samuels")->kind(), Atom::Kind::space_prop);
    const auto vocab = atom_vocabulary();
    EXPECT_EQ(vocab.size(), std::size_t{kSetClassCount + kMapClassCount + 3});
    for (std::string_view w : vocab) EXPECT_EQ(Atom::from_name(w)->name(), w);
}

TEST(Claim, AtomsInOrderOfAppearance) {
    const auto as = atoms(parse_claim("dense & open | !dense => closed"));
    ASSERT_EQ(as.size(), 3u);
    EXPECT_EQ(as[0].name(), "dense");
    EXPECT_EQ(as[1].name(), "open");
    EXPECT_EQ(as[2].name(), "closed");
}

TEST(Claim, EvaluateTruthTable) {
    const ClaimAST c = parse_claim("open => dense");
    for (int bits = 0; bits < 4; ++bits) {
        const bool open = bits & 1;
        const bool dense = bits & 2;
        const bool got = c.evaluate([&](const Atom& a) { return a.name() == "open" ? open : dense; });
        EXPECT_EQ(got, !open || dense);
    }
}

ClaimAST random_claim(std::mt19937& rng, int depth) {
    static const char* names[] = {"open", "dense", "pre_i_open", "continuous", "submaximal"};
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 4);
    switch (pick(rng)) {
    case 0: return atom(names[std::uniform_int_distribution<int>(0, 4)(rng)]);
    case 1: return ClaimAST::negation(random_claim(rng, depth - 1));
    case 2: return ClaimAST::binary(Op::conjunction, random_claim(rng, depth - 1), random_claim(rng, depth - 1));
    case 3: return ClaimAST::binary(Op::disjunction, random_claim(rng, depth - 1), random_claim(rng, depth - 1));
    default: return ClaimAST::binary(Op::implication, random_claim(rng, depth - 1), random_claim(rng, depth - 1));
    }
}

TEST(Claim, PrintParseRoundTrip) {
    std::mt19937 rng(3);
    for (int i = 0; i < 2000; ++i) {
        const ClaimAST c = random_claim(rng, 5);
        const std::string text = to_string(c);
        ASSERT_EQ(parse_claim(text), c) << text;
        ASSERT_EQ(to_string(parse_claim(text)), text);
    }
}

} // namespace
