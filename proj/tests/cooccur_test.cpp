#include "namelens/cooccur.hpp"
#include "namelens/error.hpp"

#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace namelens;
using namelens::testing::make_refactoring;
using namelens::testing::make_rename;

TEST(Correlate, PrecedingWithinWindow)
{
    auto records = correlate({make_rename("E", 10)}, {make_refactoring("E", "MoveClass", 9)}, 5);
    ASSERT_EQ(records.size(), 1u);
    ASSERT_EQ(records[0].preceding.size(), 1u);
    EXPECT_EQ(records[0].preceding[0].event.refactoring_type, "MoveClass");
    EXPECT_EQ(records[0].preceding[0].gap, 1u);
    EXPECT_TRUE(records[0].following.empty());
    EXPECT_EQ(records[0].window, 5u);
}

TEST(Correlate, OutsideWindow)
{
    auto records = correlate({make_rename("E", 10)}, {make_refactoring("E", "MoveClass", 3)}, 5);
    ASSERT_EQ(records.size(), 1u);
    EXPECT_FALSE(records[0].any());
}

TEST(Correlate, DifferentElement)
{
    auto records = correlate({make_rename("E", 10)}, {make_refactoring("F", "MoveClass", 12)}, 5);
    ASSERT_EQ(records.size(), 1u);
    EXPECT_FALSE(records[0].any());
}

TEST(Correlate, FollowingAndSameCommit)
{
    auto records = correlate({make_rename("E", 10)},
                             {make_refactoring("E", "ExtractMethod", 15), make_refactoring("E", "MoveClass", 10),
                              make_refactoring("E", "InlineMethod", 16), make_refactoring("E", "RenameClass", 12)},
                             5);
    ASSERT_EQ(records.size(), 1u);
    ASSERT_EQ(records[0].preceding.size(), 1u);
    EXPECT_EQ(records[0].preceding[0].gap, 0u);
    ASSERT_EQ(records[0].following.size(), 2u);
    EXPECT_EQ(records[0].following[0].gap, 2u);
    EXPECT_EQ(records[0].following[1].gap, 5u);
}

TEST(Correlate, RenameAtStartOfHistory)
{
    auto records = correlate({make_rename("E", 1)}, {make_refactoring("E", "MoveClass", 0)}, 5);
    ASSERT_EQ(records[0].preceding.size(), 1u);
    EXPECT_EQ(records[0].preceding[0].gap, 1u);
}

TEST(Correlate, WindowMustBePositive)
{
    EXPECT_THROW(correlate({}, {}, 0), Error);
    EXPECT_TRUE(correlate({}, {}, 1).empty());
}

TEST(Summarize, SingleRecord)
{
    auto s = summarize(correlate({make_rename("E", 10)}, {make_refactoring("E", "MoveClass", 9)}, 5));
    EXPECT_EQ(s.renames, 1u);
    EXPECT_EQ(s.renames_with_cooccurrence, 1u);
    ASSERT_EQ(s.by_type.size(), 1u);
    EXPECT_EQ(s.by_type.at("MoveClass").preceding, 1u);
    EXPECT_EQ(s.by_type.at("MoveClass").following, 0u);
    EXPECT_EQ(s.preceding_gaps.at(1), 1u);
    EXPECT_DOUBLE_EQ(s.cooccurrence_fraction, 1.0);
}

TEST(Summarize, Empty)
{
    auto s = summarize({});
    EXPECT_EQ(s.renames, 0u);
    EXPECT_EQ(s.renames_with_cooccurrence, 0u);
    EXPECT_EQ(s.cooccurrence_fraction, 0.0);
    EXPECT_TRUE(s.by_type.empty());
    EXPECT_TRUE(s.preceding_gaps.empty());
    EXPECT_TRUE(s.following_gaps.empty());
}

TEST(Summarize, PlantedStream)
{
    auto fixture = namelens::testing::build_cooccur_fixture();
    auto s = summarize(correlate(fixture.renames, fixture.refactorings, 5));
    EXPECT_EQ(s.renames, 10u);
    EXPECT_EQ(s.renames_with_cooccurrence, 4u);
    EXPECT_DOUBLE_EQ(s.cooccurrence_fraction, 0.4);
    EXPECT_EQ(s.by_type.at("MoveClass").preceding, 2u);
    EXPECT_EQ(s.by_type.at("ExtractMethod").preceding, 1u);
    EXPECT_EQ(s.by_type.at("InlineMethod").preceding, 1u);
}

TEST(Summarize, TableListsTypesInOrder)
{
    auto fixture = namelens::testing::build_cooccur_fixture();
    auto table = format_table(summarize(correlate(fixture.renames, fixture.refactorings, 5)));
    auto extract = table.find("ExtractMethod");
    auto inl = table.find("InlineMethod");
    auto move = table.find("MoveClass");
    ASSERT_NE(extract, std::string::npos);
    EXPECT_LT(extract, inl);
    EXPECT_LT(inl, move);
}

namespace {

struct RandomStream {
    std::vector<RenameEvent> renames;
    std::vector<RefactoringEvent> refs;
};

RandomStream random_stream(std::mt19937& rng)
{
    RandomStream s;
    std::uniform_int_distribution<std::size_t> element(0, 4), index(0, 40), type(0, 2);
    const char* types[] = {"MoveClass", "ExtractMethod", "InlineMethod"};
    for (int i = 0; i < 12; ++i)
        s.renames.push_back(make_rename("E" + std::to_string(element(rng)), index(rng)));
    for (int i = 0; i < 30; ++i)
        s.refs.push_back(make_refactoring("E" + std::to_string(element(rng)), types[type(rng)], index(rng)));
    return s;
}

} // namespace

TEST(CooccurProperties, WindowMonotonicity)
{
    std::mt19937 rng(17);
    for (int round = 0; round < 50; ++round) {
        auto s = random_stream(rng);
        auto previous = correlate(s.renames, s.refs, 1);
        for (std::size_t w = 2; w <= 10; ++w) {
            auto current = correlate(s.renames, s.refs, w);
            ASSERT_EQ(current.size(), previous.size());
            for (std::size_t i = 0; i < current.size(); ++i) {
                EXPECT_GE(current[i].preceding.size(), previous[i].preceding.size());
                EXPECT_GE(current[i].following.size(), previous[i].following.size());
            }
            previous = std::move(current);
        }
    }
}

TEST(CooccurProperties, MembershipAndOrdering)
{
    std::mt19937 rng(19);
    for (int round = 0; round < 50; ++round) {
        auto s = random_stream(rng);
        const std::size_t window = 1 + round % 8;
        auto records = correlate(s.renames, s.refs, window);
        for (const auto& r : records) {
            const std::size_t at = r.rename.commit_index;
            std::size_t expected_pre = 0, expected_post = 0;
            for (const auto& e : s.refs) {
                if (e.element_id != r.rename.element_id)
                    continue;
                if (e.commit_index <= at && at - e.commit_index <= window)
                    ++expected_pre;
                if (e.commit_index > at && e.commit_index - at <= window)
                    ++expected_post;
            }
            EXPECT_EQ(r.preceding.size(), expected_pre);
            EXPECT_EQ(r.following.size(), expected_post);
            for (std::size_t i = 0; i < r.preceding.size(); ++i) {
                const auto& g = r.preceding[i];
                EXPECT_EQ(g.event.element_id, r.rename.element_id);
                EXPECT_EQ(g.gap, at - g.event.commit_index);
                EXPECT_LE(g.gap, window);
                if (i)
                    EXPECT_LE(r.preceding[i - 1].gap, g.gap);
            }
            for (std::size_t i = 0; i < r.following.size(); ++i) {
                const auto& g = r.following[i];
                EXPECT_EQ(g.event.element_id, r.rename.element_id);
                EXPECT_EQ(g.gap, g.event.commit_index - at);
                EXPECT_GE(g.gap, 1u);
                EXPECT_LE(g.gap, window);
                if (i)
                    EXPECT_LE(r.following[i - 1].gap, g.gap);
            }
        }
    }
}

TEST(CooccurProperties, SummaryConservesCounts)
{
    std::mt19937 rng(23);
    for (int round = 0; round < 50; ++round) {
        auto s = random_stream(rng);
        auto records = correlate(s.renames, s.refs, 5);
        auto summary = summarize(records);
        std::size_t pre = 0, post = 0, with = 0;
        for (const auto& r : records) {
            pre += r.preceding.size();
            post += r.following.size();
            with += r.any() ? 1 : 0;
        }
        std::size_t type_pre = 0, type_post = 0, hist_pre = 0, hist_post = 0;
        for (const auto& [type, c] : summary.by_type) {
            type_pre += c.preceding;
            type_post += c.following;
        }
        for (const auto& [gap, c] : summary.preceding_gaps)
            hist_pre += c;
        for (const auto& [gap, c] : summary.following_gaps)
            hist_post += c;
        EXPECT_EQ(summary.renames, records.size());
        EXPECT_EQ(summary.renames_with_cooccurrence, with);
        EXPECT_EQ(type_pre, pre);
        EXPECT_EQ(type_post, post);
        EXPECT_EQ(hist_pre, pre);
        EXPECT_EQ(hist_post, post);
    }
}
