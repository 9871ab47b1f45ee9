#include <gtest/gtest.h>

#include "support.hpp"

namespace corelex {
namespace {

struct Demo {
  TablePair tables;
  TagMap tags;
  std::vector<Classification> classes;
  Lexicon lexicon;
};

const Demo& demo() {
  static const Demo d = [] {
    Demo out;
    const auto& ts = testing::shipped_types();
    auto inv = parse_inventory(testing::slurp(testing::data_path("inventory.tsv")));
    out.tags = assign_tags(all_profiles(inv), ts);
    auto stemmer = testing::shipped_stemmer();
    auto corpus = parse_corpus(testing::slurp(testing::data_path("corpus.vrt")),
                               parse_penn_mapping(testing::slurp(testing::data_path("penn_mapping.tsv"))));
    stem_corpus(corpus, stemmer);
    out.tables = match_corpus(corpus, out.tags, ts);
    out.classes = classify_unknown(build_profiles(out.tables, out.tags), out.tags);
    LexiconOptions opt;
    for (const auto& v : default_creation_verbs()) opt.creation_verbs.insert(stemmer(v));
    out.lexicon = generate_lexicon(out.tables, out.tags, out.classes, ts, opt);
    return out;
  }();
  return d;
}

TEST(Lexicon, EvidenceEntryShape) {
  const auto& e = demo().lexicon.entries.at("evidence");
  EXPECT_EQ(e.source, "corelex");
  ASSERT_EQ(e.formal.size(), 1u);
  EXPECT_EQ(e.formal[0].type, "com.psy");
  EXPECT_EQ(e.formal[0].constructor, Constructor::closed);
  EXPECT_EQ(e.formal[0].args, (std::vector<std::string>{"communication", "psychological"}));
  ASSERT_FALSE(e.telic.empty());
  EXPECT_EQ(e.telic[0].verb, "provide");
  EXPECT_EQ(e.telic[0].role, "obj");
  ASSERT_EQ(e.has_part.size(), 1u);
  EXPECT_EQ(e.has_part[0].lemma, "structure");
}

TEST(Lexicon, LobsterIsAnimalFood) {
  const auto& e = demo().lexicon.entries.at("lobster");
  ASSERT_EQ(e.formal.size(), 1u);
  EXPECT_EQ(e.formal[0].type, "anm.fod");
  EXPECT_EQ(e.formal[0].constructor, Constructor::open);
}

TEST(Lexicon, HomonymHasOneFormalPerType) {
  const auto& e = demo().lexicon.entries.at("bank");
  ASSERT_EQ(e.formal.size(), 2u);
  EXPECT_EQ(e.formal[0].type, "grs");
  EXPECT_EQ(e.formal[1].type, "log");
}

TEST(Lexicon, ClassifiedNounsCarryTheirClass) {
  for (const auto& c : demo().classes) {
    auto it = demo().lexicon.entries.find(c.noun);
    if (!c.assigned) {
      EXPECT_EQ(it, demo().lexicon.entries.end()) << c.noun;
      continue;
    }
    ASSERT_NE(it, demo().lexicon.entries.end());
    EXPECT_EQ(it->second.source, "classified");
    EXPECT_EQ(it->second.formal[0].type, *c.assigned);
  }
}

TEST(Lexicon, PartWholeIsSymmetric) {
  const auto& entries = demo().lexicon.entries;
  std::size_t links = 0;
  for (const auto& [lemma, e] : entries) {
    for (const auto& p : e.has_part) {
      ++links;
      const auto& part = entries.at(p.lemma);
      auto back = std::find(part.part_of.begin(), part.part_of.end(), PartRelation{lemma, p.count});
      EXPECT_NE(back, part.part_of.end()) << lemma << " has " << p.lemma;
    }
    for (const auto& p : e.part_of) {
      const auto& whole = entries.at(p.lemma);
      auto back = std::find(whole.has_part.begin(), whole.has_part.end(), PartRelation{lemma, p.count});
      EXPECT_NE(back, whole.has_part.end());
    }
  }
  EXPECT_GE(links, 3u);
}

TEST(Lexicon, AgentiveOnlyFromCreationVerbs) {
  for (const auto& [lemma, e] : demo().lexicon.entries) {
    for (const auto& a : e.agentive) EXPECT_EQ(a.verb, "write") << lemma;
  }
  const auto& book = demo().lexicon.entries.at("book");
  ASSERT_EQ(book.agentive.size(), 1u);
  EXPECT_EQ(book.agentive[0].count, 2u);
}

TEST(Lexicon, JsonRoundTrip) {
  auto text = to_json_text(demo().lexicon);
  auto back = parse_structured(text);
  EXPECT_EQ(back, demo().lexicon);
  EXPECT_EQ(to_json_text(back), text);
}

TEST(Lexicon, HtmlIndex) {
  auto html = to_html_text(demo().lexicon);
  EXPECT_NE(html.find("id=\"type-anm.fod\""), std::string::npos);
  EXPECT_NE(html.find("id=\"type-com.psy\""), std::string::npos);
  EXPECT_NE(html.find("id=\"entry-evidence\""), std::string::npos);
  EXPECT_NE(html.find("href=\"#entry-lobster\""), std::string::npos);
  EXPECT_EQ(html.find("<script"), std::string::npos);
  for (const auto& [lemma, e] : demo().lexicon.entries) {
    EXPECT_NE(html.find("id=\"entry-" + lemma + "\""), std::string::npos) << lemma;
  }
}

TEST(Lexicon, EmitWritesSameBytes) {
  std::ostringstream json, html;
  emit_structured(demo().lexicon, json);
  emit_html_index(demo().lexicon, html);
  EXPECT_EQ(json.str(), to_json_text(demo().lexicon));
  EXPECT_EQ(html.str(), to_html_text(demo().lexicon));
}

TEST(Lexicon, MinCountDropsWeakEvidence) {
  LexiconOptions opt;
  opt.min_count = 2;
  auto lex = generate_lexicon(demo().tables, demo().tags, demo().classes, testing::shipped_types(), opt);
  for (const auto& [lemma, e] : lex.entries) {
    for (const auto& t : e.telic) EXPECT_GE(t.count, 2u);
    EXPECT_TRUE(e.has_part.empty());
  }
}

}  // namespace
}  // namespace corelex
