#include "namelens/abbrev.hpp"
#include "namelens/error.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace namelens;
using namelens::testing::bundled_gold;
using namelens::testing::bundled_lexicon;

namespace {

const std::vector<GoldPair> kNoGold;

std::string join_phrase(const std::vector<std::string>& p)
{
    std::string out;
    for (const auto& w : p)
        out += (out.empty() ? "" : " ") + w;
    return out;
}

} // namespace

TEST(IsAbbreviation, Examples)
{
    const auto& lex = bundled_lexicon();
    EXPECT_TRUE(is_abbreviation("msg", lex));
    EXPECT_FALSE(is_abbreviation("message", lex));
    EXPECT_FALSE(is_abbreviation("messages", lex));
    EXPECT_TRUE(is_abbreviation("x", lex));
    EXPECT_TRUE(is_abbreviation("a", lex));
    EXPECT_FALSE(is_abbreviation("42", lex));
}

TEST(ConsonantSkeleton, Examples)
{
    EXPECT_EQ(consonant_skeleton("message"), "msg");
    EXPECT_EQ(consonant_skeleton("user"), "usr");
    EXPECT_EQ(consonant_skeleton("count"), "cnt");
    EXPECT_EQ(consonant_skeleton("button"), "btn");
    EXPECT_EQ(initials({"graphical", "user", "interface"}), "gui");
}

TEST(Expand, Examples)
{
    const auto& lex = bundled_lexicon();
    EXPECT_EQ(expand("msg", ContextBag{"message"}, kNoGold, lex), "message");
    const std::vector<GoldPair> gold{{"num", "number", "test"}};
    EXPECT_EQ(expand("num", ContextBag{}, gold, lex), "number");
    EXPECT_EQ(expand("xyz", ContextBag{}, kNoGold, lex), std::nullopt);
}

TEST(Expand, TechniqueReported)
{
    const auto& lex = bundled_lexicon();
    auto m = expand_detailed("msg", ContextBag{"message"}, kNoGold, lex);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->technique, ExpansionTechnique::Context);
    EXPECT_EQ(m->pattern, ExpansionPattern::Skeleton);

    m = expand_detailed("gui", ContextBag{"graphicalUserInterface"}, kNoGold, lex);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->expansion, "graphical user interface");
    EXPECT_EQ(m->pattern, ExpansionPattern::Acronym);

    m = expand_detailed("calc", ContextBag{}, kNoGold, lex);
    ASSERT_TRUE(m);
    EXPECT_EQ(m->technique, ExpansionTechnique::Dictionary);
    EXPECT_EQ(m->pattern, ExpansionPattern::Prefix);
    EXPECT_TRUE(m->expansion.starts_with("calc"));
}

TEST(Expand, DictionaryNeedsThreeLetters)
{
    const auto& lex = bundled_lexicon();
    EXPECT_EQ(expand("ca", ContextBag{}, kNoGold, lex), std::nullopt);
    EXPECT_EQ(expand("q", ContextBag{}, kNoGold, lex), std::nullopt);
}

TEST(Expand, TieBreakShortestThenLexicographic)
{
    const auto& lex = bundled_lexicon();
    EXPECT_EQ(expand("val", ContextBag{"validate", "value", "valve"}, kNoGold, lex), "value");
    EXPECT_EQ(expand("ab", ContextBag{"abcd", "abce", "abcdef"}, kNoGold, lex), "abcd");
}

TEST(ExpandIdentifier, Examples)
{
    const auto& lex = bundled_lexicon();
    auto id = expand_identifier(make_identifier("usrCnt"), ContextBag{"user", "count"}, kNoGold, lex);
    ASSERT_EQ(id.terms.size(), 2u);
    EXPECT_TRUE(id.terms[0].is_abbreviation);
    EXPECT_EQ(id.terms[0].expansion, "user");
    EXPECT_TRUE(id.terms[1].is_abbreviation);
    EXPECT_EQ(id.terms[1].expansion, "count");

    id = expand_identifier(make_identifier("userCount"), ContextBag{}, kNoGold, lex);
    for (const auto& t : id.terms)
        EXPECT_FALSE(t.is_abbreviation);

    id = expand_identifier(make_identifier("msgQ"), ContextBag{}, kNoGold, lex);
    ASSERT_EQ(id.terms.size(), 2u);
    for (const auto& t : id.terms) {
        EXPECT_TRUE(t.is_abbreviation);
        EXPECT_FALSE(t.expansion);
    }
}

TEST(Gold, BundledTableLoads)
{
    const auto& gold = bundled_gold();
    EXPECT_EQ(gold.size(), 30u);
    for (const auto& p : gold) {
        EXPECT_LT(p.abbreviation.size(), p.expansion.size());
        EXPECT_EQ(p.abbreviation, fold_case(p.abbreviation));
        EXPECT_FALSE(p.source.empty());
    }
}

TEST(Gold, ParseErrors)
{
    EXPECT_THROW(parse_gold("number\tnum\tx\n"), ParseError);
    EXPECT_THROW(parse_gold("onlyone\n"), ParseError);
    EXPECT_THROW(parse_gold("\tnumber\tx\n"), ParseError);
    EXPECT_EQ(parse_gold("# c\n\nNUM\tNumber\thand\n").front().abbreviation, "num");
    EXPECT_THROW(load_gold("/nonexistent/gold.tsv"), Error);
}

TEST(ContextBagTest, HarvestsIdentifiersAndWords)
{
    auto bag = ContextBag::from_text("int userCount = 0; // the Message queue");
    EXPECT_TRUE(bag.contains("user"));
    EXPECT_TRUE(bag.contains("count"));
    EXPECT_TRUE(bag.contains("message"));
    EXPECT_FALSE(bag.contains(""));
    ASSERT_EQ(bag.phrases().size(), 1u);
    EXPECT_EQ(bag.phrases()[0], (std::vector<std::string>{"user", "count"}));
}

TEST(AbbrevProperties, GoldPriority)
{
    const auto& lex = bundled_lexicon();
    for (const auto& p : bundled_gold()) {
        // A context word that would otherwise win by prefix or skeleton.
        ContextBag ctx{p.abbreviation + "zz", consonant_skeleton(p.expansion) == p.abbreviation ? "x" : p.abbreviation + "q"};
        auto m = expand_detailed(p.abbreviation, ctx, bundled_gold(), lex);
        ASSERT_TRUE(m) << p.abbreviation;
        EXPECT_EQ(m->expansion, p.expansion);
        EXPECT_EQ(m->technique, ExpansionTechnique::Gold);
    }
}

TEST(AbbrevProperties, ContextSoundnessAndDeterminism)
{
    const auto& lex = bundled_lexicon();
    std::mt19937 rng(3);
    std::vector<std::string> dict(lex.dictionary().begin(), lex.dictionary().end());
    std::uniform_int_distribution<std::size_t> pick(0, dict.size() - 1);
    std::uniform_int_distribution<int> coin(0, 2);
    std::size_t context_hits = 0;
    for (int round = 0; round < 400; ++round) {
        ContextBag ctx;
        for (int i = 0; i < 6; ++i)
            ctx.add_word(dict[pick(rng)]);
        const std::string a = dict[pick(rng)], b = dict[pick(rng)];
        ctx.add_identifier(a + "_" + b);
        const std::string source = dict[pick(rng)];
        std::string term;
        switch (coin(rng)) {
        case 0:
            term = source.substr(0, std::min<std::size_t>(source.size(), 3));
            break;
        case 1:
            term = consonant_skeleton(source);
            break;
        default:
            term = std::string{a.front(), b.front()};
        }
        auto m = expand_detailed(term, ctx, {}, lex);
        EXPECT_EQ(m.has_value(), expand_detailed(term, ctx, {}, lex).has_value());
        if (!m)
            continue;
        EXPECT_NE(m->expansion, term);
        if (m->technique != ExpansionTechnique::Context)
            continue;
        ++context_hits;
        switch (m->pattern) {
        case ExpansionPattern::Prefix:
            EXPECT_TRUE(ctx.contains(m->expansion));
            EXPECT_TRUE(m->expansion.starts_with(term));
            break;
        case ExpansionPattern::Skeleton:
            EXPECT_TRUE(ctx.contains(m->expansion));
            EXPECT_EQ(consonant_skeleton(m->expansion), term);
            break;
        case ExpansionPattern::Acronym: {
            bool found = false;
            for (const auto& p : ctx.phrases())
                if (join_phrase(p) == m->expansion && initials(p) == term)
                    found = true;
            EXPECT_TRUE(found) << term << " -> " << m->expansion;
            break;
        }
        case ExpansionPattern::Lookup:
            ADD_FAILURE() << "context match reported as lookup";
        }
    }
    EXPECT_GT(context_hits, 50u);
}
