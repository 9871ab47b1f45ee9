#pragma once

// POS-tagged corpora in vertical format, the Penn-to-internal tag mapping,
// stemming pass and NP chunking.

#include <array>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "corelex/error.hpp"
#include "corelex/porter.hpp"
#include "corelex/text.hpp"

namespace corelex {

enum class Pos { PREDET, DET, NUM, ADJ, NAME, NOUN, VERB, BE, HAVE, ADV, PREP, OTHER };

namespace detail {
inline constexpr std::array<std::string_view, 12> kPosNames{
    "PREDET", "DET", "NUM", "ADJ", "NAME", "NOUN", "VERB", "BE", "HAVE", "ADV", "PREP", "OTHER"};
}

inline std::string_view to_string(Pos p) { return detail::kPosNames[static_cast<std::size_t>(p)]; }

inline std::optional<Pos> parse_pos(std::string_view s) {
  for (std::size_t i = 0; i < detail::kPosNames.size(); ++i) {
    if (detail::kPosNames[i] == s) return static_cast<Pos>(i);
  }
  return std::nullopt;
}

struct Token {
  std::string surface;
  Pos pos = Pos::OTHER;
  std::string tag;   // tag as read from the corpus
  std::string stem;  // empty until stemmed

  /// Whether a VERB token can close a passive. Penn VBN/VBD qualify;
  /// tokens tagged with the internal VERB tag qualify unless they end in
  /// "-ing".
  bool participle() const {
    if (pos != Pos::VERB) return false;
    if (tag == "VBN" || tag == "VBD") return true;
    if (tag.size() >= 2 && tag.compare(0, 2, "VB") == 0) return false;
    return !(surface.size() > 3 && text::lower(surface).ends_with("ing"));
  }
};

using Sentence = std::vector<Token>;

struct Corpus {
  std::vector<Sentence> sentences;

  /// Corpus size N: the number of stems (tokens).
  std::size_t size() const {
    std::size_t n = 0;
    for (const auto& s : sentences) n += s.size();
    return n;
  }
};

/// Penn Treebank -> internal tag table. VB* tags on forms of "be" and
/// "have" resolve to BE and HAVE.
class PennMapping {
 public:
  static PennMapping defaults() {
    PennMapping m;
    for (auto t : {"NN", "NNS"}) m.set(t, Pos::NOUN);
    for (auto t : {"NNP", "NNPS"}) m.set(t, Pos::NAME);
    for (auto t : {"JJ", "JJR", "JJS"}) m.set(t, Pos::ADJ);
    m.set("PDT", Pos::PREDET);
    m.set("DT", Pos::DET);
    m.set("CD", Pos::NUM);
    for (auto t : {"VB", "VBD", "VBG", "VBN", "VBP", "VBZ"}) m.set(t, Pos::VERB);
    for (auto t : {"RB", "RBR", "RBS"}) m.set(t, Pos::ADV);
    for (auto t : {"IN", "TO"}) m.set(t, Pos::PREP);
    return m;
  }

  void set(std::string tag, Pos pos) { table_[std::move(tag)] = pos; }
  std::size_t size() const { return table_.size(); }

  Pos map(std::string_view tag, std::string_view surface) const {
    if (auto internal = parse_pos(tag)) return *internal;
    auto it = table_.find(std::string(tag));
    if (it == table_.end()) return Pos::OTHER;
    if (it->second == Pos::VERB) {
      static const std::set<std::string, std::less<>> kBe{"be", "am", "is", "are", "was", "were", "been", "being"};
      static const std::set<std::string, std::less<>> kHave{"have", "has", "had", "having"};
      auto w = text::lower(surface);
      if (kBe.count(w)) return Pos::BE;
      if (kHave.count(w)) return Pos::HAVE;
    }
    return it->second;
  }

 private:
  std::map<std::string, Pos, std::less<>> table_;
};

/// `penn<TAB>INTERNAL` lines replacing the default table.
inline PennMapping parse_penn_mapping(std::istream& in) {
  PennMapping m;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    text::chomp(line);
    if (text::is_skippable(line)) continue;
    auto fields = text::split(line, '\t');
    if (fields.size() != 2) {
      throw Error(ErrorKind::parse, "malformed mapping line " + std::to_string(lineno), lineno);
    }
    auto pos = parse_pos(fields[1]);
    if (!pos) {
      throw Error(ErrorKind::parse,
                  "unknown internal tag '" + fields[1] + "' at line " + std::to_string(lineno), lineno);
    }
    m.set(fields[0], *pos);
  }
  return m;
}

inline PennMapping parse_penn_mapping(const std::string& source) {
  std::istringstream in(source);
  return parse_penn_mapping(in);
}

/// Vertical format: `surface<TAB>TAG[<TAB>stem]` per token, blank line
/// between sentences.
inline Corpus parse_corpus(std::istream& in, const PennMapping& mapping = PennMapping::defaults()) {
  Corpus c;
  Sentence current;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    text::chomp(line);
    if (text::trim(line).empty()) {
      if (!current.empty()) c.sentences.push_back(std::move(current));
      current.clear();
      continue;
    }
    auto fields = text::split(line, '\t');
    if (fields.size() != 2 && fields.size() != 3) {
      throw Error(ErrorKind::parse,
                  "malformed corpus line " + std::to_string(lineno) + ": expected 2 or 3 tab-separated fields",
                  lineno);
    }
    if (fields[0].empty()) {
      throw Error(ErrorKind::parse, "empty token at line " + std::to_string(lineno), lineno);
    }
    Token t;
    t.pos = mapping.map(fields[1], fields[0]);
    t.tag = fields[1];
    t.surface = std::move(fields[0]);
    if (fields.size() == 3) t.stem = text::lower(fields[2]);
    current.push_back(std::move(t));
  }
  if (!current.empty()) c.sentences.push_back(std::move(current));
  return c;
}

inline Corpus parse_corpus(const std::string& source, const PennMapping& mapping = PennMapping::defaults()) {
  std::istringstream in(source);
  return parse_corpus(in, mapping);
}

/// Fills every token's stem that the corpus did not supply.
inline void stem_corpus(Corpus& corpus, const Stemmer& stemmer) {
  for (auto& s : corpus.sentences) {
    for (auto& t : s) {
      if (t.stem.empty()) t.stem = stemmer(t.surface);
    }
  }
}

struct NounPhrase {
  std::size_t begin = 0;  // first token
  std::size_t end = 0;    // one past the head
  std::size_t head() const { return end - 1; }

  friend bool operator==(const NounPhrase&, const NounPhrase&) = default;
};

/// Longest match of `PreDet* Det* Num* (Adj|Name|Noun)* Noun` starting at
/// `start`, as the end index; nullopt when nothing matches there.
inline std::optional<std::size_t> match_np(const Sentence& s, std::size_t start) {
  std::size_t i = start;
  while (i < s.size() && s[i].pos == Pos::PREDET) ++i;
  while (i < s.size() && s[i].pos == Pos::DET) ++i;
  while (i < s.size() && s[i].pos == Pos::NUM) ++i;
  std::optional<std::size_t> end;
  while (i < s.size() && (s[i].pos == Pos::ADJ || s[i].pos == Pos::NAME || s[i].pos == Pos::NOUN)) {
    if (s[i].pos == Pos::NOUN) end = i + 1;
    ++i;
  }
  return end;
}

/// Maximal, non-overlapping NPs, left to right. The head is the rightmost
/// noun of each span.
inline std::vector<NounPhrase> chunk_nps(const Sentence& s) {
  std::vector<NounPhrase> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (auto end = match_np(s, i)) {
      out.push_back({i, *end});
      i = *end;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace corelex
