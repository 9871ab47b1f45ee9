#include <gtest/gtest.h>

#include <cmath>

#include "synthetic.hpp"

namespace corelex {
namespace {

TEST(Mi, ClosedForm) {
  EXPECT_NEAR(mi(2, 2, 4, 8), 1.0, 1e-12);
  EXPECT_NEAR(mi(1, 2, 4, 8), 0.0, 1e-12);
  EXPECT_NEAR(mi(1, 4, 4, 8), -1.0, 1e-12);
}

TEST(Mi, DomainErrors) {
  EXPECT_THROW(mi(0, 2, 4, 8), Error);
  EXPECT_THROW(mi(1, 0, 4, 8), Error);
  EXPECT_THROW(mi(1, 9, 4, 8), Error);
}

TEST(Mi, SymmetricInMarginals) {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 1000; ++i) {
    std::uniform_int_distribution<Count> nd(1, 1000000);
    Count n = nd(rng);
    std::uniform_int_distribution<Count> md(1, n);
    Count a = md(rng), b = md(rng);
    std::uniform_int_distribution<Count> fd(1, std::min(a, b));
    Count f = fd(rng);
    EXPECT_EQ(mi(f, a, b, n), mi(f, b, a, n));
    EXPECT_NEAR(mi(f, a, b, n), std::log2(static_cast<double>(f) * n / (static_cast<double>(a) * b)), 1e-9);
  }
}

AttributeSet random_set(std::mt19937& rng) {
  std::uniform_int_distribution<int> size(0, 12), word(0, 20), rel(0, 3);
  AttributeSet s;
  int n = size(rng);
  const Relation rels[] = {Relation::VERB_HEAD, Relation::HEAD_VERB, Relation::ADJ_HEAD, Relation::MOD_HEAD};
  for (int i = 0; i < n; ++i) s.insert(Attribute::make(rels[rel(rng)], "w" + std::to_string(word(rng))));
  return s;
}

TEST(Jaccard, Properties) {
  std::mt19937 rng(103);
  for (int i = 0; i < 1000; ++i) {
    auto a = random_set(rng);
    auto b = random_set(rng);
    double j = jaccard(a, b);
    EXPECT_GE(j, 0.0);
    EXPECT_LE(j, 1.0);
    EXPECT_EQ(j, jaccard(b, a));
    if (!a.empty()) {
      EXPECT_EQ(jaccard(a, a), 1.0);
    }
    AttributeSet inter, uni;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(inter, inter.end()));
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::inserter(uni, uni.end()));
    double expected = uni.empty() ? 0.0 : static_cast<double>(inter.size()) / uni.size();
    EXPECT_EQ(j, expected);
    if (inter.empty()) {
      EXPECT_EQ(j, 0.0);
    }
  }
}

TEST(Jaccard, HalfOverlap) {
  auto x = Attribute::make(Relation::VERB_HEAD, "x");
  auto y = Attribute::make(Relation::VERB_HEAD, "y");
  auto z = Attribute::make(Relation::VERB_HEAD, "z");
  auto w = Attribute::make(Relation::VERB_HEAD, "w");
  EXPECT_EQ(jaccard({x, y, z}, {x, y, w}), 0.5);
  EXPECT_EQ(jaccard({}, {}), 0.0);
}

TEST(Classify, TieGoesToSmallestName) {
  auto p = testing::two_way_tie();
  for (int run = 0; run < 10; ++run) {
    auto c = classify(p.nouns.at("hatch"), p.classes);
    ASSERT_TRUE(c.assigned);
    EXPECT_EQ(*c.assigned, "frm.art");
    EXPECT_EQ(c.score, 0.5);
  }
  std::vector<std::pair<std::string, Profile>> reversed(p.classes.rbegin(), p.classes.rend());
  EXPECT_EQ(*classify(p.nouns.at("hatch"), reversed).assigned, "frm.art");
}

TEST(Classify, ZeroScoreAssignsNothing) {
  auto p = testing::two_way_tie();
  Profile lonely{"rock", {}, {Attribute::make(Relation::VERB_HEAD, "throw")}};
  auto c = classify(lonely, p.classes);
  EXPECT_FALSE(c.assigned);
  EXPECT_EQ(c.score, 0.0);
}

TEST(Classify, MatchesBruteForceArgmax) {
  std::mt19937 rng(107);
  for (int round = 0; round < 200; ++round) {
    std::map<std::string, Profile> classes;
    for (int k = 0; k < 5; ++k) {
      auto name = "c" + std::to_string(k);
      classes[name] = {name, {}, random_set(rng)};
    }
    Profile noun{"n", {}, random_set(rng)};
    std::optional<std::string> best;
    double best_score = 0.0;
    for (const auto& [name, cls] : classes) {
      double s = jaccard(noun.attributes, cls.attributes);
      if (s > best_score) {
        best = name;
        best_score = s;
      }
    }
    auto c = classify(noun, classes);
    EXPECT_EQ(c.assigned, best);
    EXPECT_EQ(c.score, best_score);
  }
}

TEST(Classify, RenderParseRoundTrip) {
  std::vector<Classification> cs{{"b", std::string("inf.phys"), 0.25}, {"a", std::nullopt, 0.0}};
  auto text = render_classifications(cs);
  EXPECT_EQ(text, "a\t-\t0.000000\nb\tinf.phys\t0.250000\n");
  auto back = parse_classifications(text);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].assigned, std::optional<std::string>("inf.phys"));
}

TEST(Holdout, SyntheticClassesRecoverPerfectly) {
  auto ev = evaluate_holdout(testing::synthetic_tables(), testing::synthetic_tags(), testing::shipped_types());
  EXPECT_EQ(ev.attempted, 12u);
  EXPECT_EQ(ev.precision, 1.0);
  EXPECT_EQ(ev.recall, 1.0);
  EXPECT_EQ(ev.recall_all, 1.0);
}

TEST(Holdout, MatcherFixtureHandFractions) {
  auto tables = match_corpus(testing::matcher_corpus(), testing::matcher_tags(), testing::shipped_types());
  auto ev = evaluate_holdout(tables, testing::matcher_tags(), testing::shipped_types());
  // 12 unambiguous tagged nouns; book -> frm.art and door -> inf.phys are the
  // only assignments once their own evidence is withdrawn.
  EXPECT_EQ(ev.attempted, 12u);
  EXPECT_EQ(ev.assigned, 2u);
  EXPECT_EQ(ev.correct, 0u);
  EXPECT_NEAR(ev.precision, 0.0, 1e-9);
  EXPECT_NEAR(ev.recall, 2.0 / 12.0, 1e-9);
  EXPECT_NEAR(ev.recall_all, 10.0 / 18.0, 1e-9);
}

// Withdrawing a member's counts never adds attributes to its class.
TEST(Holdout, WithdrawalOnlyShrinksClassProfile) {
  auto tables = match_corpus(testing::matcher_corpus(), testing::matcher_tags(), testing::shipped_types());
  auto tags = testing::matcher_tags();
  auto pooled = detail::pool_classes(tables.corelex, tags);
  for (double threshold : {-2.0, 0.0, 2.0, 4.0}) {
    ProfileOptions opt{threshold, 1};
    for (const auto& [noun, tag] : tags) {
      if (tag.homonym()) continue;
      const auto& cls = tag.types.front();
      const auto& p = pooled.at(cls);
      auto joint = p.joint;
      for (const auto& [a, c] : tables.corelex.attributes_of(noun)) joint[a] -= c;
      auto before = detail::score(cls, p.joint, p.marginal, tables.corelex, opt).attributes;
      auto after = detail::score(cls, joint, p.marginal, tables.corelex, opt).attributes;
      EXPECT_TRUE(std::includes(before.begin(), before.end(), after.begin(), after.end())) << noun;
    }
  }
}

TEST(Holdout, NoKnownNounsIsAnError) {
  TablePair empty;
  try {
    evaluate_holdout(empty, {}, testing::shipped_types());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::evaluation);
  }
}

}  // namespace
}  // namespace corelex
