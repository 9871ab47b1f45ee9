#include <gtest/gtest.h>

#include "support.hpp"

namespace corelex {
namespace {

TablePair fixture_tables() {
  return match_corpus(testing::matcher_corpus(), testing::matcher_tags(), testing::shipped_types());
}

TEST(Matcher, FixtureMatchesGoldenTable) {
  EXPECT_EQ(serialize_tables(fixture_tables()), testing::slurp(testing::fixture_path("matcher_golden.tsv")));
}

TEST(Matcher, PassiveNormalization) {
  auto t = fixture_tables();
  EXPECT_EQ(t.all.joint("book", Attribute::make(Relation::VERB_HEAD, "write")), 3u);
  EXPECT_EQ(t.all.joint("door", Attribute::make(Relation::VERB_HEAD, "open")), 1u);
  EXPECT_EQ(t.all.joint("book", Attribute::make(Relation::HEAD_VERB, "write")), 0u);
}

TEST(Matcher, AdverbWindow) {
  auto c = testing::matcher_corpus();
  const auto& very = c.sentences[6];  // "the lobster was very quickly eaten ."
  EXPECT_FALSE(normalize_passive(very, 1, 1));
  auto wide = normalize_passive(very, 1, 2);
  ASSERT_TRUE(wide);
  EXPECT_EQ(wide->first, "eat");
  EXPECT_EQ(wide->second, "lobster");
}

TEST(Matcher, PartWholeGate) {
  const auto& ts = testing::shipped_types();
  EXPECT_TRUE(partwhole_gate("com", "inf.phys", ts));
  EXPECT_FALSE(partwhole_gate("com", "anm.fod", ts));
  EXPECT_TRUE(partwhole_gate("com", "com", ts));
  EXPECT_FALSE(partwhole_gate("com", "art", ts));
  auto t = fixture_tables();
  auto of_journal = Attribute::make(Relation::HEAD_PREP_HEAD, "journal", "of");
  auto of_lobster = Attribute::make(Relation::HEAD_PREP_HEAD, "lobster", "of");
  EXPECT_EQ(t.corelex.joint("paragraph", of_journal), 1u);
  EXPECT_EQ(t.corelex.joint("paragraph", of_lobster), 0u);
  EXPECT_EQ(t.all.joint("paragraph", of_lobster), 1u);
}

TEST(Matcher, CorelexTableIsContainedInAll) {
  auto t = fixture_tables();
  for (const auto& [noun, attrs] : t.corelex.joint()) {
    for (const auto& [a, c] : attrs) EXPECT_LE(c, t.all.joint(noun, a));
  }
  for (const auto& [noun, f] : t.corelex.noun_frequencies()) EXPECT_EQ(f, t.all.noun_frequency(noun));
}

TEST(Matcher, Deterministic) {
  EXPECT_EQ(serialize_tables(fixture_tables()), serialize_tables(fixture_tables()));
}

TEST(Matcher, MergeIsAssociativeAndCommutative) {
  auto c = testing::matcher_corpus();
  auto tags = testing::matcher_tags();
  const auto& ts = testing::shipped_types();
  std::vector<TablePair> parts;
  for (const auto& s : c.sentences) parts.push_back(match_sentence(s, tags, ts));
  std::mt19937 rng(41);
  auto expected = serialize_tables(fixture_tables());
  for (int round = 0; round < 20; ++round) {
    std::shuffle(parts.begin(), parts.end(), rng);
    TablePair left;
    for (const auto& p : parts) left.merge(p);
    EXPECT_EQ(serialize_tables(left), expected);

    TablePair a, b;
    for (std::size_t i = 0; i < parts.size(); ++i) (i % 2 ? a : b).merge(parts[i]);
    a.merge(b);
    EXPECT_EQ(serialize_tables(a), expected);
  }
}

TEST(Matcher, SerializeParseRoundTrip) {
  auto t = fixture_tables();
  auto text = serialize_tables(t);
  auto back = parse_tables(text);
  EXPECT_EQ(back.all, t.all);
  EXPECT_EQ(back.corelex, t.corelex);
  EXPECT_EQ(serialize_tables(back), text);
}

TEST(Matcher, ParseRejectsBadRows) {
  EXPECT_THROW(parse_tables(std::string("ALL\tbook\tVERB_HEAD\t-\tread\n")), Error);
  EXPECT_THROW(parse_tables(std::string("SOME\tbook\tVERB_HEAD\t-\tread\t1\n")), Error);
  EXPECT_THROW(parse_tables(std::string("ALL\tbook\tVERB_HEAD\t-\tread\tmany\n")), Error);
  EXPECT_THROW(parse_tables(std::string("ALL\tbook\tHEAD_PREP_HEAD\t-\tread\t1\n")), Error);
}

TEST(Matcher, PatternRecallHandCount) {
  // 18 distinct noun stems, 14 of them head at least one attribute.
  EXPECT_NEAR(pattern_recall(testing::matcher_corpus(), fixture_tables()), 14.0 / 18.0, 1e-9);
}

}  // namespace
}  // namespace corelex
