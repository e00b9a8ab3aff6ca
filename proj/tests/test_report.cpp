#include "stancewalk/error.hpp"
#include "stancewalk/manifest.hpp"
#include "stancewalk/report.hpp"
#include "stancewalk/table.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace stancewalk;

TEST(Table, DoublesRoundTrip) {
    for (const double v : {0.1, 1.0 / 3.0, 2.5e-300, 123456789.125, 0.0}) {
        const auto text = format_double(v);
        EXPECT_EQ(std::stod(text), v) << text;
    }
    EXPECT_EQ(format_double(0.5), "0.5");
}

TEST(Table, EscapeAndSplit) {
    EXPECT_EQ(csv_escape("plain"), "plain");
    EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(csv_split("x,\"a,b\",\"q\"\"\""), (std::vector<std::string>{"x", "a,b", "q\""}));
    EXPECT_EQ(csv_split("a,,"), (std::vector<std::string>{"a", "", ""}));
}

TEST(Table, WriterAndReader) {
    std::ostringstream out;
    {
        TableWriter t(out, {"name", "value", "n"});
        t.row("a,b", 0.25, 3);
        t.row(std::string("c"), 1.0, std::size_t{4});
    }
    EXPECT_EQ(out.str(), "name,value,n\n\"a,b\",0.25,3\nc,1,4\n");
    std::istringstream in(out.str());
    const auto table = Table::read(in, "test");
    EXPECT_EQ(table.rows().size(), 2u);
    EXPECT_EQ(table.rows()[0][table.require_column("name")], "a,b");
    EXPECT_FALSE(table.column("missing").has_value());
    EXPECT_THROW((void)table.require_column("missing"), DomainError);

    std::istringstream ragged("a,b\n1\n");
    EXPECT_THROW(Table::read(ragged, "ragged"), DomainError);
}

TEST(Manifest, DigestsAreStable) {
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    RunManifest a("classify");
    a.set("rho", 10);
    RunManifest b("classify");
    b.set("rho", 10);
    EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
    EXPECT_EQ(a.to_json()["version"], std::string(kToolVersion));
    EXPECT_THROW(a.add_input("input", "/nonexistent/file"), IoError);
}

namespace {

SharingMatrix two_by_two() {
    const std::vector<ShareTriple> triples{{"u1", "a", 2}, {"u2", "b", 1}};
    return SharingMatrix::from_triples(triples);
}

Classification sample() {
    Classification c;
    c.hashtags = {{0, 0.75, TieFlag::None}, {kUnclassified, std::nullopt, TieFlag::None}};
    c.users = {{0, {0.75, 0.0}, TieFlag::None}, {1, {0.5, 0.5}, TieFlag::Exact}};
    return c;
}

} // namespace

TEST(Report, AssignmentTables) {
    const SeedSet seeds({"a", "b"}, {"left", "right"});
    std::ostringstream hashtags;
    write_hashtag_table(hashtags, two_by_two(), sample(), seeds);
    EXPECT_EQ(hashtags.str(), "hashtag,class,intensity,tie\na,left,0.75,none\nb,unclassified,,none\n");

    std::ostringstream users;
    write_user_table(users, two_by_two(), sample(), seeds, Method::Srm);
    EXPECT_EQ(users.str(), "method,user,class,l_1,l_2,tie\nsrm,u1,left,0.75,0,none\nsrm,u2,right,0.5,0.5,exact\n");
}

TEST(Report, PredictionsRoundTrip) {
    const SeedSet seeds({"a", "b"}, {"left", "right"});
    std::ostringstream out;
    write_hashtag_table(out, two_by_two(), sample(), seeds);
    std::istringstream in(out.str());
    const auto predictions = read_predictions(in, "hashtag", seeds, "hashtags.csv");
    ASSERT_EQ(predictions.count("lrm"), 1u);
    EXPECT_EQ(predictions.at("lrm").at("a"), 0);
    EXPECT_EQ(predictions.at("lrm").at("b"), kUnclassified);
    EXPECT_THROW(parse_class_label("centre", seeds), DomainError);
}

TEST(Report, EvalTableHasMacroRows) {
    const SeedSet seeds({"a", "b"});
    EvalReport r;
    r.classes = {class_score(2, 0, 0), class_score(1, 0, 1)};
    r.macro_f1 = (r.classes[0].f1 + r.classes[1].f1) / 2;
    std::ostringstream out;
    write_eval_table(out, {{"lrm", r, std::nullopt}}, seeds);
    std::istringstream in(out.str());
    const auto table = Table::read(in, "eval");
    ASSERT_EQ(table.rows().size(), 3u);
    EXPECT_EQ(table.rows()[2][2], "macro");
    EXPECT_EQ(std::stod(table.rows()[2][5]), r.macro_f1);
    EXPECT_EQ(table.rows()[2][6], "4");
}
