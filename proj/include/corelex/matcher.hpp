#pragma once

// Class-sensitive pattern matching around NP head nouns. Produces two
// co-occurrence tables: one restricted to tagged (known) heads and one over
// all heads.
//
// Concrete patterns, with W the ADV tolerance (default 1):
//   ADJ_HEAD        Adj inside the NP                       (adj, head)
//   MOD_HEAD        non-head Noun inside the NP             (noun, head)
//   MOD_HEAD        Name inside the NP                      (name, head)
//   VERB_HEAD       Verb Adv{0,W} [NP]                      (verb, head)
//   VERB_HEAD       [NP] Be Adv{0,W} Verb(participle)       passive
//   VERB_HEAD       [NP] Have Be Adv{0,W} Verb(participle)  passive, perfect
//   HEAD_VERB       [NP] Adv{0,W} Verb                      active
//   HEAD_VERB       [NP] Have Adv{0,W} Verb(participle)     active, perfect
//   HEAD_VERB       [NP] Be Adv{0,W} Verb(-ing)             active, progressive
//   HEAD_PREP_HEAD  [NP] of [NP]                            part-whole, gated
//   HEAD_PREP_HEAD  [NP] Prep [NP]                          other prepositions
// A head occurrence contributes each distinct attribute at most once.

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "corelex/corpus.hpp"
#include "corelex/error.hpp"
#include "corelex/semtypes.hpp"
#include "corelex/text.hpp"

namespace corelex {

enum class Relation { VERB_HEAD, HEAD_VERB, ADJ_HEAD, MOD_HEAD, HEAD_PREP_HEAD };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::VERB_HEAD: return "VERB_HEAD";
    case Relation::HEAD_VERB: return "HEAD_VERB";
    case Relation::ADJ_HEAD: return "ADJ_HEAD";
    case Relation::MOD_HEAD: return "MOD_HEAD";
    case Relation::HEAD_PREP_HEAD: return "HEAD_PREP_HEAD";
  }
  return "?";
}

inline std::optional<Relation> parse_relation(std::string_view s) {
  for (auto r : {Relation::VERB_HEAD, Relation::HEAD_VERB, Relation::ADJ_HEAD, Relation::MOD_HEAD,
                 Relation::HEAD_PREP_HEAD}) {
    if (s == to_string(r)) return r;
  }
  return std::nullopt;
}

/// A linguistic context a noun occurs in. `prep` is set only for
/// HEAD_PREP_HEAD.
struct Attribute {
  Relation relation = Relation::VERB_HEAD;
  std::string prep;
  std::string coword;

  static Attribute make(Relation r, std::string coword, std::string prep = {}) {
    if (coword.empty()) throw Error(ErrorKind::validation, "attribute with empty co-word");
    if ((r == Relation::HEAD_PREP_HEAD) == prep.empty()) {
      throw Error(ErrorKind::validation, "preposition must be given exactly for HEAD_PREP_HEAD");
    }
    return {r, std::move(prep), std::move(coword)};
  }

  std::string render() const {
    std::string out = to_string(relation);
    out += '(';
    if (!prep.empty()) out += prep + ", ";
    out += coword + ')';
    return out;
  }

  // Orders by relation name so iteration matches the serialized order.
  friend std::strong_ordering operator<=>(const Attribute& a, const Attribute& b) {
    if (auto c = std::string_view(to_string(a.relation)) <=> std::string_view(to_string(b.relation)); c != 0) {
      return c;
    }
    if (auto c = a.prep <=> b.prep; c != 0) return c;
    return a.coword <=> b.coword;
  }
  friend bool operator==(const Attribute&, const Attribute&) = default;
};

enum class Scope { CORELEX_ONLY, ALL };

inline const char* to_string(Scope s) { return s == Scope::ALL ? "ALL" : "CORELEX_ONLY"; }

using Count = std::uint64_t;

class CooccurrenceTable {
 public:
  using AttributeCounts = std::map<Attribute, Count>;

  explicit CooccurrenceTable(Scope scope = Scope::ALL, Count corpus_size = 0)
      : scope_(scope), size_(corpus_size) {}

  Scope scope() const { return scope_; }
  Count corpus_size() const { return size_; }
  void set_corpus_size(Count n) { size_ = n; }

  void add(const std::string& noun, const Attribute& attr, Count c = 1) {
    if (c == 0) return;
    joint_[noun][attr] += c;
    attr_freq_[attr] += c;
  }

  void add_occurrence(const std::string& noun, Count c = 1) {
    if (c == 0) return;
    noun_freq_[noun] += c;
  }

  /// Key-wise addition; associative and commutative.
  void merge(const CooccurrenceTable& other) {
    size_ += other.size_;
    for (const auto& [n, attrs] : other.joint_) {
      for (const auto& [a, c] : attrs) add(n, a, c);
    }
    for (const auto& [n, c] : other.noun_freq_) noun_freq_[n] += c;
  }

  Count joint(const std::string& noun, const Attribute& attr) const {
    auto it = joint_.find(noun);
    if (it == joint_.end()) return 0;
    auto jt = it->second.find(attr);
    return jt == it->second.end() ? 0 : jt->second;
  }

  Count noun_frequency(const std::string& noun) const {
    auto it = noun_freq_.find(noun);
    return it == noun_freq_.end() ? 0 : it->second;
  }

  Count attribute_frequency(const Attribute& attr) const {
    auto it = attr_freq_.find(attr);
    return it == attr_freq_.end() ? 0 : it->second;
  }

  const AttributeCounts& attributes_of(const std::string& noun) const {
    static const AttributeCounts kEmpty;
    auto it = joint_.find(noun);
    return it == joint_.end() ? kEmpty : it->second;
  }

  const std::map<std::string, AttributeCounts>& joint() const { return joint_; }
  const std::map<std::string, Count>& noun_frequencies() const { return noun_freq_; }
  const std::map<Attribute, Count>& attribute_frequencies() const { return attr_freq_; }

  friend bool operator==(const CooccurrenceTable& a, const CooccurrenceTable& b) {
    return a.scope_ == b.scope_ && a.size_ == b.size_ && a.joint_ == b.joint_ && a.noun_freq_ == b.noun_freq_;
  }

 private:
  Scope scope_;
  Count size_;
  std::map<std::string, AttributeCounts> joint_;
  std::map<std::string, Count> noun_freq_;
  std::map<Attribute, Count> attr_freq_;
};

struct TablePair {
  CooccurrenceTable corelex{Scope::CORELEX_ONLY};
  CooccurrenceTable all{Scope::ALL};

  void merge(const TablePair& other) {
    corelex.merge(other.corelex);
    all.merge(other.all);
  }

  friend bool operator==(const TablePair&, const TablePair&) = default;
};

struct MatchOptions {
  std::size_t adv_window = 1;
};

namespace detail {

inline std::size_t skip_adverbs(const Sentence& s, std::size_t i, std::size_t window) {
  std::size_t skipped = 0;
  while (i < s.size() && skipped < window && s[i].pos == Pos::ADV) {
    ++i;
    ++skipped;
  }
  return i;
}

}  // namespace detail

/// Passive normalization: `Noun Have? Be Adv? Verb` => `Verb Noun`.
/// `head` indexes the NP head; returns (verb stem, noun stem).
inline std::optional<std::pair<std::string, std::string>> normalize_passive(const Sentence& s, std::size_t head,
                                                                            std::size_t adv_window = 1) {
  if (head >= s.size() || s[head].pos != Pos::NOUN) return std::nullopt;
  std::size_t i = head + 1;
  if (i < s.size() && s[i].pos == Pos::HAVE) ++i;
  if (i >= s.size() || s[i].pos != Pos::BE) return std::nullopt;
  i = detail::skip_adverbs(s, i + 1, adv_window);
  if (i >= s.size() || !s[i].participle()) return std::nullopt;
  return std::make_pair(s[i].stem, s[head].stem);
}

/// The part-whole gate for `X of Y`: the tags are equal, or Y's tag is a
/// dotted type and X's tag is one of its components.
inline bool partwhole_gate(const std::string& part_tag, const std::string& whole_tag, const TypeSystem& ts) {
  if (part_tag == whole_tag) return true;
  return ts.at(whole_tag).type.dotted() && subsumes(part_tag, whole_tag, ts);
}

/// Gate over every tag pair of two (possibly homonymous) heads.
inline bool partwhole_gate(const TagAssignment* part, const TagAssignment* whole, const TypeSystem& ts) {
  if (part == nullptr || whole == nullptr) return false;
  for (const auto& a : part->types) {
    for (const auto& b : whole->types) {
      if (partwhole_gate(a, b, ts)) return true;
    }
  }
  return false;
}

/// Matches one stemmed sentence. The returned tables have corpus size equal
/// to the sentence length, so per-sentence results merge into corpus totals.
inline TablePair match_sentence(const Sentence& s, const TagMap& tags, const TypeSystem& ts,
                                const MatchOptions& opt = {}) {
  TablePair out;
  out.corelex.set_corpus_size(s.size());
  out.all.set_corpus_size(s.size());

  auto tag_of = [&](const std::string& stem) -> const TagAssignment* {
    auto it = tags.find(stem);
    return it == tags.end() ? nullptr : &it->second;
  };

  for (const auto& t : s) {
    if (t.pos != Pos::NOUN) continue;
    out.all.add_occurrence(t.stem);
    if (tag_of(t.stem)) out.corelex.add_occurrence(t.stem);
  }

  const auto nps = chunk_nps(s);
  for (std::size_t q = 0; q < nps.size(); ++q) {
    const auto& np = nps[q];
    const auto head = np.head();
    const auto& noun = s[head].stem;
    std::set<Attribute> attrs;
    std::optional<Attribute> partwhole;

    for (std::size_t i = np.begin; i < head; ++i) {
      if (s[i].pos == Pos::ADJ) attrs.insert(Attribute::make(Relation::ADJ_HEAD, s[i].stem));
      if (s[i].pos == Pos::NOUN || s[i].pos == Pos::NAME) {
        attrs.insert(Attribute::make(Relation::MOD_HEAD, s[i].stem));
      }
    }

    // Verb before the NP, with up to W adverbs in between.
    if (np.begin > 0) {
      std::size_t i = np.begin;
      std::size_t skipped = 0;
      while (i > 0 && skipped < opt.adv_window && s[i - 1].pos == Pos::ADV) {
        --i;
        ++skipped;
      }
      if (i > 0 && s[i - 1].pos == Pos::VERB) attrs.insert(Attribute::make(Relation::VERB_HEAD, s[i - 1].stem));
    }

    // Verb group after the NP.
    if (auto passive = normalize_passive(s, head, opt.adv_window)) {
      attrs.insert(Attribute::make(Relation::VERB_HEAD, passive->first));
    } else {
      std::size_t i = head + 1;
      std::optional<Pos> aux;
      if (i < s.size() && (s[i].pos == Pos::HAVE || s[i].pos == Pos::BE)) aux = s[i++].pos;
      i = detail::skip_adverbs(s, i, opt.adv_window);
      if (i < s.size() && s[i].pos == Pos::VERB) {
        bool ok = !aux || (*aux == Pos::HAVE && s[i].participle()) || (*aux == Pos::BE && !s[i].participle());
        if (ok) attrs.insert(Attribute::make(Relation::HEAD_VERB, s[i].stem));
      }
    }

    // NP Prep NP.
    if (q + 1 < nps.size() && head + 1 < s.size() && s[head + 1].pos == Pos::PREP &&
        nps[q + 1].begin == head + 2) {
      auto prep = text::lower(s[head + 1].stem);
      auto attr = Attribute::make(Relation::HEAD_PREP_HEAD, s[nps[q + 1].head()].stem, prep);
      if (prep == "of") partwhole = attr;
      attrs.insert(std::move(attr));
    }

    const auto* tag = tag_of(noun);
    for (const auto& a : attrs) {
      out.all.add(noun, a);
      if (tag == nullptr) continue;
      if (partwhole && a == *partwhole && !partwhole_gate(tag, tag_of(a.coword), ts)) continue;
      out.corelex.add(noun, a);
    }
  }
  return out;
}

/// Runs every pattern over a stemmed corpus.
inline TablePair match_corpus(const Corpus& corpus, const TagMap& tags, const TypeSystem& ts,
                              const MatchOptions& opt = {}) {
  TablePair out;
  for (const auto& s : corpus.sentences) out.merge(match_sentence(s, tags, ts, opt));
  return out;
}

/// Share of distinct corpus noun stems that head at least one attribute.
inline double pattern_recall(const Corpus& corpus, const TablePair& tables) {
  std::set<std::string> nouns;
  for (const auto& s : corpus.sentences) {
    for (const auto& t : s) {
      if (t.pos == Pos::NOUN) nouns.insert(t.stem);
    }
  }
  if (nouns.empty()) return 0.0;
  std::size_t covered = 0;
  for (const auto& n : nouns) {
    if (!tables.all.attributes_of(n).empty()) ++covered;
  }
  return static_cast<double>(covered) / static_cast<double>(nouns.size());
}

/// Relation column value for noun-occurrence rows.
inline constexpr const char* kFrequencyRow = "FREQ";

/// Canonical TSV: `scope noun relation prep_or_- coword count`, rows sorted
/// lexicographically. Noun occurrence counts are FREQ rows with `-` in the
/// prep and co-word columns.
inline std::string serialize_tables(const TablePair& tables) {
  using Row = std::tuple<std::string, std::string, std::string, std::string, std::string, Count>;
  std::vector<Row> rows;
  for (const auto* t : {&tables.corelex, &tables.all}) {
    const std::string scope = to_string(t->scope());
    for (const auto& [noun, attrs] : t->joint()) {
      for (const auto& [a, c] : attrs) {
        rows.emplace_back(scope, noun, to_string(a.relation), a.prep.empty() ? "-" : a.prep, a.coword, c);
      }
    }
    for (const auto& [noun, c] : t->noun_frequencies()) rows.emplace_back(scope, noun, kFrequencyRow, "-", "-", c);
  }
  std::sort(rows.begin(), rows.end());
  std::string out = "# corpus-size\t" + std::to_string(tables.all.corpus_size()) + "\n";
  for (const auto& [scope, noun, rel, prep, coword, c] : rows) {
    out += scope + '\t' + noun + '\t' + rel + '\t' + prep + '\t' + coword + '\t' + std::to_string(c) + '\n';
  }
  return out;
}

inline TablePair parse_tables(std::istream& in) {
  TablePair out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    text::chomp(line);
    if (line.rfind("# corpus-size\t", 0) == 0) {
      auto n = std::stoull(line.substr(14));
      out.corelex.set_corpus_size(n);
      out.all.set_corpus_size(n);
      continue;
    }
    if (text::is_skippable(line)) continue;
    auto f = text::split(line, '\t');
    if (f.size() != 6) {
      throw Error(ErrorKind::parse, "malformed table row at line " + std::to_string(lineno), lineno);
    }
    CooccurrenceTable* table = nullptr;
    if (f[0] == "ALL") table = &out.all;
    if (f[0] == "CORELEX_ONLY") table = &out.corelex;
    if (table == nullptr) {
      throw Error(ErrorKind::parse, "unknown scope '" + f[0] + "' at line " + std::to_string(lineno), lineno);
    }
    Count c = 0;
    try {
      c = std::stoull(f[5]);
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse, "bad count at line " + std::to_string(lineno), lineno);
    }
    if (f[2] == kFrequencyRow) {
      table->add_occurrence(f[1], c);
      continue;
    }
    auto rel = parse_relation(f[2]);
    if (!rel) {
      throw Error(ErrorKind::parse, "unknown relation '" + f[2] + "' at line " + std::to_string(lineno), lineno);
    }
    try {
      table->add(f[1], Attribute::make(*rel, f[4], f[3] == "-" ? std::string() : f[3]), c);
    } catch (const Error& e) {
      throw Error(ErrorKind::parse, std::string(e.what()) + " at line " + std::to_string(lineno), lineno);
    }
  }
  return out;
}

inline TablePair parse_tables(const std::string& source) {
  std::istringstream in(source);
  return parse_tables(in);
}

}  // namespace corelex
