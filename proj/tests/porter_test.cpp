#include <gtest/gtest.h>

#include "support.hpp"

namespace corelex {
namespace {

struct Vocabulary {
  std::vector<std::string> words, expected;
};

const Vocabulary& vocabulary() {
  static const Vocabulary v = [] {
    Vocabulary out;
    out.words = text::split(testing::slurp(testing::data_path("porter/voc.txt")), '\n');
    out.expected = text::split(testing::slurp(testing::data_path("porter/output.txt")), '\n');
    while (!out.words.empty() && out.words.back().empty()) out.words.pop_back();
    while (!out.expected.empty() && out.expected.back().empty()) out.expected.pop_back();
    return out;
  }();
  return v;
}

TEST(Porter, ReferenceVocabulary) {
  const auto& v = vocabulary();
  ASSERT_EQ(v.words.size(), v.expected.size());
  ASSERT_EQ(v.words.size(), 23531u);
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < v.words.size(); ++i) {
    if (porter_stem(v.words[i]) != v.expected[i]) {
      if (++mismatches <= 10) ADD_FAILURE() << v.words[i] << " -> " << porter_stem(v.words[i]) << ", want " << v.expected[i];
    }
  }
  EXPECT_EQ(mismatches, 0u);
}

TEST(Porter, KnownStems) {
  EXPECT_EQ(porter_stem("caresses"), "caress");
  EXPECT_EQ(porter_stem("ponies"), "poni");
  EXPECT_EQ(porter_stem("relational"), "relat");
  EXPECT_EQ(porter_stem("hopping"), "hop");
  EXPECT_EQ(porter_stem("generalizations"), "gener");
  EXPECT_EQ(porter_stem("as"), "as");
}

// Porter is not a projection: some stems stem again. The count over the
// reference vocabulary is pinned so a behavior change shows up here.
TEST(Porter, RestemmingCountIsPinned) {
  std::size_t changed = 0;
  for (const auto& w : vocabulary().expected) {
    if (porter_stem(w) != w) ++changed;
  }
  EXPECT_EQ(changed, 785u);
  EXPECT_EQ(porter_stem(porter_stem("abuse")), "abu");
}

TEST(Stemmer, ExceptionsBypassRules) {
  auto s = testing::shipped_stemmer();
  EXPECT_EQ(s("Written"), "write");
  EXPECT_EQ(s("evidence"), "evidence");
  EXPECT_EQ(porter_stem("evidence"), "evid");
  EXPECT_EQ(s("Lobsters"), "lobster");
  EXPECT_EQ(s("don't"), "don't");
}

TEST(Stemmer, DeterministicAndIdempotentOnExceptionTargets) {
  auto s = testing::shipped_stemmer();
  for (auto w : {"written", "ate", "fishermen", "structures", "provided"}) {
    auto once = s(w);
    EXPECT_EQ(s(once), once) << w;
  }
}

TEST(Stemmer, MalformedExceptionLine) {
  EXPECT_THROW(parse_stem_exceptions(std::string("written\n")), Error);
  EXPECT_THROW(parse_stem_exceptions(std::string("a\tb\tc\n")), Error);
}

}  // namespace
}  // namespace corelex
