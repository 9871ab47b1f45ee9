#pragma once

// Mutual-information profiles for nouns and classes, Jaccard
// classification of nouns, and leave-one-out evaluation on known nouns.

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corelex/error.hpp"
#include "corelex/matcher.hpp"
#include "corelex/semtypes.hpp"
#include "corelex/text.hpp"

namespace corelex {

/// log2( (f_xy/N) / ((f_x/N)(f_y/N)) ), in bits.
inline double mi(Count f_xy, Count f_x, Count f_y, Count n) {
  if (f_xy == 0 || f_x == 0 || f_y == 0 || n == 0) {
    throw Error(ErrorKind::domain, "mutual information needs non-zero counts");
  }
  if (n < f_x || n < f_y || n < f_xy) {
    throw Error(ErrorKind::domain, "mutual information: a count exceeds the corpus size");
  }
  const double joint = static_cast<double>(f_xy) * static_cast<double>(n);
  const double marginals = static_cast<double>(f_x) * static_cast<double>(f_y);
  return std::log2(joint / marginals);
}

using AttributeSet = std::set<Attribute>;

/// |a ∩ b| / |a ∪ b|, and 0 when both are empty.
inline double jaccard(const AttributeSet& a, const AttributeSet& b) {
  std::size_t shared = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++shared;
      ++i;
      ++j;
    }
  }
  const std::size_t total = a.size() + b.size() - shared;
  return total == 0 ? 0.0 : static_cast<double>(shared) / static_cast<double>(total);
}

struct ProfileOptions {
  double mi_threshold = 0.0;  // attribute enters the set when MI > threshold
  Count count_floor = 1;      // minimum joint count for any MI entry
};

/// MI scores of one owner (noun or class) and the thresholded set used for
/// Jaccard.
struct Profile {
  std::string owner;
  std::map<Attribute, double> mi;
  AttributeSet attributes;
};

struct Profiles {
  std::map<std::string, Profile> classes;
  std::map<std::string, Profile> nouns;
};

namespace detail {

struct PooledCounts {
  std::map<Attribute, Count> joint;
  Count marginal = 0;
};

inline Profile score(const std::string& owner, const std::map<Attribute, Count>& joint, Count marginal,
                     const CooccurrenceTable& table, const ProfileOptions& opt) {
  Profile p{owner, {}, {}};
  if (marginal == 0) return p;
  for (const auto& [a, c] : joint) {
    if (c == 0 || c < opt.count_floor) continue;
    double v = mi(c, marginal, table.attribute_frequency(a), table.corpus_size());
    p.mi.emplace(a, v);
    if (v > opt.mi_threshold) p.attributes.insert(a);
  }
  return p;
}

// Per-class pooled counts over unambiguously tagged members.
inline std::map<std::string, PooledCounts> pool_classes(const CooccurrenceTable& corelex, const TagMap& tags) {
  std::map<std::string, PooledCounts> pooled;
  for (const auto& [lemma, tag] : tags) {
    if (tag.homonym()) continue;
    auto& slot = pooled[tag.types.front()];
    slot.marginal += corelex.noun_frequency(lemma);
    for (const auto& [a, c] : corelex.attributes_of(lemma)) slot.joint[a] += c;
  }
  return pooled;
}

}  // namespace detail

/// Class profiles pool member counts from the CORELEX_ONLY table (class
/// marginal = sum of member frequencies); noun profiles come from the ALL
/// table. Homonyms do not contribute to class profiles.
inline Profiles build_profiles(const TablePair& tables, const TagMap& tags, const ProfileOptions& opt = {}) {
  Profiles out;
  for (const auto& [name, pooled] : detail::pool_classes(tables.corelex, tags)) {
    out.classes.emplace(name, detail::score(name, pooled.joint, pooled.marginal, tables.corelex, opt));
  }
  for (const auto& [noun, f] : tables.all.noun_frequencies()) {
    out.nouns.emplace(noun, detail::score(noun, tables.all.attributes_of(noun), f, tables.all, opt));
  }
  return out;
}

struct Classification {
  std::string noun;
  std::optional<std::string> assigned;
  double score = 0.0;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Argmax Jaccard over the class profiles. Ties go to the lexicographically
/// smallest class name; a best score of 0 assigns nothing.
template <typename ClassRange>
Classification classify(const Profile& noun, const ClassRange& classes) {
  Classification c{noun.owner, std::nullopt, 0.0};
  for (const auto& entry : classes) {
    const Profile& cls = entry.second;
    double s = jaccard(noun.attributes, cls.attributes);
    if (s <= 0.0) continue;
    if (!c.assigned || s > c.score || (s == c.score && cls.owner < *c.assigned)) {
      c.assigned = cls.owner;
      c.score = s;
    }
  }
  return c;
}

/// Classifies every noun in the ALL table that carries no tag.
inline std::vector<Classification> classify_unknown(const Profiles& profiles, const TagMap& tags) {
  std::vector<Classification> out;
  for (const auto& [noun, p] : profiles.nouns) {
    if (tags.count(noun)) continue;
    out.push_back(classify(p, profiles.classes));
  }
  return out;
}

/// `noun<TAB>class_or_-<TAB>score`, sorted by noun.
inline std::string render_classifications(std::vector<Classification> cs) {
  std::sort(cs.begin(), cs.end(), [](const auto& a, const auto& b) { return a.noun < b.noun; });
  std::string out;
  for (const auto& c : cs) {
    out += c.noun + '\t' + c.assigned.value_or("-") + '\t' + text::format_real(c.score) + '\n';
  }
  return out;
}

inline std::vector<Classification> parse_classifications(std::istream& in) {
  std::vector<Classification> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    text::chomp(line);
    if (text::is_skippable(line)) continue;
    auto f = text::split(line, '\t');
    if (f.size() != 3) {
      throw Error(ErrorKind::parse, "malformed classification at line " + std::to_string(lineno), lineno);
    }
    Classification c;
    c.noun = f[0];
    if (f[1] != "-") c.assigned = f[1];
    try {
      c.score = std::stod(f[2]);
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse, "bad score at line " + std::to_string(lineno), lineno);
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<Classification> parse_classifications(const std::string& source) {
  std::istringstream in(source);
  return parse_classifications(in);
}

struct HoldoutRow {
  std::string noun;
  std::string truth;
  Classification result;
  bool correct = false;
};

struct Evaluation {
  std::size_t attempted = 0;   // known nouns evaluated
  std::size_t assigned = 0;    // ... that received a class
  std::size_t correct = 0;     // ... that received their own class
  std::size_t all_nouns = 0;   // distinct nouns in the corpus
  std::size_t all_assigned = 0;
  double precision = 0.0;
  double recall = 0.0;
  double recall_all = 0.0;
  bool precision_defined = false;
  std::vector<HoldoutRow> rows;
};

/// Leave-one-out over known nouns. Each noun's joint counts are subtracted
/// from its own class before it is classified; the class marginal and the
/// other classes stay as built. recall_all classifies every corpus noun
/// against the full class profiles.
inline Evaluation evaluate_holdout(const TablePair& tables, const TagMap& tags, const TypeSystem& ts,
                                   const ProfileOptions& opt = {}) {
  for (const auto& [lemma, tag] : tags) {
    for (const auto& t : tag.types) ts.at(t);
  }
  const auto pooled = detail::pool_classes(tables.corelex, tags);
  const auto profiles = build_profiles(tables, tags, opt);

  Evaluation ev;
  for (const auto& [noun, np] : profiles.nouns) {
    auto it = tags.find(noun);
    if (it == tags.end() || it->second.homonym()) continue;
    const auto& truth = it->second.types.front();

    auto classes = profiles.classes;
    if (auto pit = pooled.find(truth); pit != pooled.end()) {
      auto joint = pit->second.joint;
      for (const auto& [a, c] : tables.corelex.attributes_of(noun)) joint[a] -= c;
      classes[truth] = detail::score(truth, joint, pit->second.marginal, tables.corelex, opt);
    }

    HoldoutRow row{noun, truth, classify(np, classes), false};
    ++ev.attempted;
    if (row.result.assigned) {
      ++ev.assigned;
      row.correct = *row.result.assigned == truth;
      if (row.correct) ++ev.correct;
    }
    ev.rows.push_back(std::move(row));
  }
  if (ev.attempted == 0) throw Error(ErrorKind::evaluation, "no known nouns to evaluate");

  ev.precision_defined = ev.assigned > 0;
  ev.precision = ev.precision_defined ? static_cast<double>(ev.correct) / static_cast<double>(ev.assigned) : 0.0;
  ev.recall = static_cast<double>(ev.assigned) / static_cast<double>(ev.attempted);
  for (const auto& [noun, np] : profiles.nouns) {
    ++ev.all_nouns;
    if (classify(np, profiles.classes).assigned) ++ev.all_assigned;
  }
  ev.recall_all = ev.all_nouns == 0 ? 0.0 : static_cast<double>(ev.all_assigned) / static_cast<double>(ev.all_nouns);
  return ev;
}

inline std::string render_evaluation_summary(const Evaluation& ev) {
  std::string out;
  out += "known nouns evaluated\t" + std::to_string(ev.attempted) + "\n";
  out += "known nouns assigned\t" + std::to_string(ev.assigned) + "\n";
  out += "known nouns correct\t" + std::to_string(ev.correct) + "\n";
  out += "precision\t" + text::format_real(ev.precision) + (ev.precision_defined ? "" : "\t(undefined)") + "\n";
  out += "recall\t" + text::format_real(ev.recall) + "\n";
  out += "corpus nouns\t" + std::to_string(ev.all_nouns) + "\n";
  out += "corpus nouns assigned\t" + std::to_string(ev.all_assigned) + "\n";
  out += "recall_all\t" + text::format_real(ev.recall_all) + "\n";
  return out;
}

/// `noun<TAB>true_class<TAB>assigned_or_-<TAB>score<TAB>correct`
inline std::string render_evaluation_rows(const Evaluation& ev) {
  std::string out;
  for (const auto& r : ev.rows) {
    out += r.noun + '\t' + r.truth + '\t' + r.result.assigned.value_or("-") + '\t' +
           text::format_real(r.result.score) + '\t' + (r.correct ? "1" : "0") + '\n';
  }
  return out;
}

}  // namespace corelex
