#include "stancewalk/error.hpp"
#include "stancewalk/ingest.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

using namespace stancewalk;

namespace {

PostRecord post(std::string user, std::vector<std::string> tags, std::optional<Timestamp> ts = std::nullopt) {
    return {std::move(user), std::move(tags), ts};
}

std::uint64_t cell(const SharingMatrix& m, std::string_view user, std::string_view tag) {
    return m.count(*m.user_index(user), *m.hashtag_index(tag));
}

} // namespace

TEST(Normalize, LowercasesAndStripsHash) {
    EXPECT_EQ(normalize_hashtag("#VoteLabour"), "votelabour");
    EXPECT_EQ(normalize_hashtag("GE2019"), "ge2019");
    EXPECT_EQ(normalize_hashtag("##Brexit"), "brexit");
}

TEST(ParsePosts, NormalizesTagsAndKeepsTimestamp) {
    std::istringstream in(R"({"user":"u1","tags":["#VoteLabour","GE2019"],"ts":1573900000})"
                          "\n");
    const auto result = parse_posts(in);
    ASSERT_EQ(result.records.size(), 1u);
    EXPECT_TRUE(result.diagnostics.empty());
    EXPECT_EQ(result.records[0], post("u1", {"votelabour", "ge2019"}, 1573900000));
}

TEST(ParsePosts, EmptyTagListIsSkippedWithDiagnostic) {
    std::istringstream in(R"({"user":"u1","tags":[]})"
                          "\n");
    const auto result = parse_posts(in);
    EXPECT_TRUE(result.records.empty());
    ASSERT_EQ(result.diagnostics.size(), 1u);
    EXPECT_EQ(result.diagnostics[0].line, 1u);
}

TEST(ParsePosts, LenientModeCountsMalformedLines) {
    std::istringstream in("{\"user\":\"a\",\"tags\":[\"x\"]}\n"
                          "{not json\n"
                          "{\"user\":\"b\",\"tags\":[\"y\"],\"ts\":5}\n");
    const auto result = parse_posts(in);
    EXPECT_EQ(result.records.size(), 2u);
    ASSERT_EQ(result.diagnostics.size(), 1u);
    EXPECT_EQ(result.diagnostics[0].line, 2u);
}

TEST(ParsePosts, StrictModeThrowsOnMalformedLine) {
    std::istringstream in("{\"user\":\"a\",\"tags\":[\"x\"]}\n{\"user\":3,\"tags\":[\"x\"]}\n");
    EXPECT_THROW(parse_posts(in, Strictness::Strict), DomainError);
}

TEST(ParsePosts, RoundTripsThroughFormat) {
    const auto p = post("user \"q\"", {"a", "b"}, 42);
    std::istringstream in(format_post(p) + "\n");
    const auto result = parse_posts(in);
    ASSERT_EQ(result.records.size(), 1u);
    EXPECT_EQ(result.records[0], p);
}

TEST(ParseTriples, SkipsHeaderAndReportsBadCounts) {
    std::istringstream in("user,hashtag,count\nu1,#A,3\nu2,b,x\nu2,b,2\n");
    const auto result = parse_triples(in);
    ASSERT_EQ(result.records.size(), 2u);
    EXPECT_EQ(result.records[0].hashtag, "a");
    EXPECT_EQ(result.records[0].count, 3u);
    EXPECT_EQ(result.diagnostics.size(), 1u);
}

TEST(Aggregate, CountsRepeatedSharing) {
    const std::vector<PostRecord> records{post("u1", {"a", "b"}), post("u1", {"a"})};
    const auto m = aggregate(records);
    EXPECT_EQ(cell(m, "u1", "a"), 2u);
    EXPECT_EQ(cell(m, "u1", "b"), 1u);
    EXPECT_EQ(m.hashtag_total(*m.hashtag_index("a")), 2u);
    EXPECT_EQ(m.user_total(*m.user_index("u1")), 3u);
}

TEST(Aggregate, RepeatInsidePostCountsTwice) {
    const std::vector<PostRecord> records{post("u1", {"a", "a"})};
    EXPECT_EQ(cell(aggregate(records), "u1", "a"), 2u);
}

TEST(Aggregate, DisjointUsersGiveBlockStructure) {
    const std::vector<PostRecord> records{post("u1", {"a"}), post("u2", {"b"})};
    const auto m = aggregate(records);
    EXPECT_EQ(cell(m, "u1", "b"), 0u);
    EXPECT_EQ(cell(m, "u2", "a"), 0u);
    EXPECT_EQ(m.num_entries(), 2u);
}

TEST(Aggregate, EmptyInputIsAnError) { EXPECT_THROW(aggregate({}), DomainError); }

TEST(Aggregate, PermutationInvariantAndMarginsConsistent) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> pick(0, 5);
    std::vector<PostRecord> records;
    std::uint64_t multiplicity = 0;
    for (int p = 0; p < 200; ++p) {
        PostRecord r;
        r.user = "u" + std::to_string(pick(rng));
        const int tags = 1 + pick(rng) % 3;
        for (int j = 0; j < tags; ++j)
            r.hashtags.push_back("t" + std::to_string(pick(rng)));
        multiplicity += r.hashtags.size();
        records.push_back(std::move(r));
    }
    const auto base = aggregate(records);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(records.begin(), records.end(), rng);
        EXPECT_EQ(aggregate(records), base);
    }
    std::uint64_t by_tag = 0;
    std::uint64_t by_user = 0;
    for (std::size_t i = 0; i < base.num_hashtags(); ++i) {
        std::uint64_t col = 0;
        for (const auto& e : base.hashtag_column(i))
            col += e.count;
        EXPECT_EQ(col, base.hashtag_total(i));
        by_tag += base.hashtag_total(i);
    }
    for (std::size_t k = 0; k < base.num_users(); ++k) {
        std::uint64_t row = 0;
        for (const auto& e : base.user_row(k))
            row += e.count;
        EXPECT_EQ(row, base.user_total(k));
        by_user += base.user_total(k);
    }
    EXPECT_EQ(by_tag, multiplicity);
    EXPECT_EQ(by_user, multiplicity);
}

TEST(SharingMatrix, TriplesMergeDuplicatesAndDropZeros) {
    const std::vector<ShareTriple> triples{{"u", "a", 2}, {"u", "a", 3}, {"v", "b", 0}, {"v", "a", 1}};
    const auto m = SharingMatrix::from_triples(triples);
    EXPECT_EQ(m.count(*m.user_index("u"), *m.hashtag_index("a")), 5u);
    EXPECT_FALSE(m.hashtag_index("b").has_value());
    EXPECT_EQ(m.total(), 6u);
}

TEST(SeedSet, Validation) {
    EXPECT_THROW(SeedSet({"only"}), DomainError);
    EXPECT_THROW(SeedSet({"a", "#A"}), DomainError);
    const SeedSet seeds({"#Remain", "leave"}, {"remain", "leave"});
    EXPECT_EQ(seeds.seed(0), "remain");
    EXPECT_EQ(seeds.class_of_name("leave"), 1u);
    const SeedSet defaults({"a", "b"});
    EXPECT_EQ(defaults.class_name(1), "b");
}

TEST(SeedSet, ResolveNamesMissingSeed) {
    const SeedSet seeds({"a", "zz"});
    try {
        (void)seeds.resolve({"a", "b"});
        FAIL() << "expected DomainError";
    } catch (const DomainError& e) {
        EXPECT_NE(std::string(e.what()).find("zz"), std::string::npos);
    }
}

namespace {

// One user sharing hashtag h<i> totals[i] times.
SharingMatrix matrix_with_hashtag_totals(const std::vector<std::uint64_t>& totals) {
    std::vector<ShareTriple> triples;
    for (std::size_t i = 0; i < totals.size(); ++i)
        triples.push_back({"u", "h" + std::to_string(i), totals[i]});
    return SharingMatrix::from_triples(triples);
}

} // namespace

TEST(Filter, DropsHashtagsBelowMean) {
    const auto m = matrix_with_hashtag_totals({10, 2, 3});
    const auto f = filter_low_engagement(m);
    EXPECT_EQ(f.hashtags(), std::vector<std::string>{"h0"});
}

TEST(Filter, EqualTotalsKeepEverything) {
    const auto m = matrix_with_hashtag_totals({4, 4, 4});
    EXPECT_EQ(filter_low_engagement(m).num_hashtags(), 3u);
}

TEST(Filter, SeedBelowMeanSurvives) {
    const auto m = matrix_with_hashtag_totals({10, 2, 3});
    const std::vector<std::string> exempt{"h2"};
    FilterStats stats;
    const auto f = filter_low_engagement(m, exempt, &stats);
    EXPECT_EQ(f.hashtags(), (std::vector<std::string>{"h0", "h2"}));
    EXPECT_EQ(stats.hashtags_before, 3u);
    EXPECT_EQ(stats.hashtags_after, 2u);
}

TEST(Filter, UsersUsePreFilterMean) {
    // user totals: a=10, b=4, c=1 (mean 5) -> only a survives the user pass.
    const std::vector<ShareTriple> triples{{"a", "x", 10}, {"b", "x", 4}, {"c", "x", 1}};
    const auto f = filter_low_engagement(SharingMatrix::from_triples(triples));
    EXPECT_EQ(f.users(), std::vector<std::string>{"a"});
    EXPECT_EQ(f.hashtag_total(0), 10u);
}

TEST(Filter, RemovingEverythingIsAnError) {
    // Hashtag mean 1.1 keeps only x; user mean 5.5 then drops its only sharer a, and b is left
    // with nothing.
    std::vector<ShareTriple> triples{{"a", "x", 2}};
    for (int j = 0; j < 9; ++j)
        triples.push_back({"b", "y" + std::to_string(j), 1});
    EXPECT_THROW(filter_low_engagement(SharingMatrix::from_triples(triples)), DomainError);
}

TEST(Filter, RestrictRecordsDropsFilteredEntities) {
    const std::vector<PostRecord> records{post("a", {"x", "y"}), post("b", {"y"}), post("a", {"z"})};
    const std::vector<ShareTriple> kept{{"a", "x", 1}};
    const auto restricted = restrict_records(records, SharingMatrix::from_triples(kept));
    ASSERT_EQ(restricted.size(), 1u);
    EXPECT_EQ(restricted[0].hashtags, std::vector<std::string>{"x"});
}

TEST(Window, HalfOpenBoundaries) {
    EXPECT_EQ(window_index(604800, 0, 604800), 1);
    EXPECT_EQ(window_index(604799, 0, 604800), 0);
    EXPECT_EQ(window_index(-1, 0, 604800), -1);
}

TEST(Window, FourWeeksGiveFourWindows) {
    std::vector<PostRecord> records;
    for (Timestamp day = 0; day < 28; ++day)
        records.push_back(post("u", {"a"}, day * 86400 + 3600));
    const auto windows = window(records, 7 * 86400, 0);
    ASSERT_EQ(windows.size(), 4u);
    std::size_t seen = 0;
    for (std::size_t w = 0; w < windows.size(); ++w) {
        EXPECT_EQ(windows[w].first, static_cast<std::int64_t>(w));
        seen += windows[w].second.size();
    }
    EXPECT_EQ(seen, records.size());
}

TEST(Window, MissingTimestampIsFatal) {
    const std::vector<PostRecord> records{post("u", {"a"}, 1), post("u", {"b"})};
    EXPECT_THROW(window(records, 10, 0), DomainError);
    EXPECT_THROW(window(records, 0, 0), DomainError);
}

TEST(Corpus, AggregateOnlyInputRejectsPostOperations) {
    const std::vector<ShareTriple> triples{{"u", "a", 1}};
    const auto corpus = Corpus::from_triples(triples);
    EXPECT_FALSE(corpus.has_posts());
    EXPECT_THROW((void)corpus.require_posts("co-occurrence"), UnsupportedInputError);
}
