#pragma once

// Lemma -> basic-sense inventory: parsing, rendering and profile reduction.

#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "corelex/basic_sense.hpp"
#include "corelex/error.hpp"
#include "corelex/text.hpp"

namespace corelex {

struct SenseRecord {
  std::string lemma;
  std::string sense_id;
  BasicSense basic;

  friend bool operator==(const SenseRecord&, const SenseRecord&) = default;
};

/// Immutable after parsing. Records are keyed by lemma, then sense id.
class Inventory {
 public:
  using RecordMap = std::map<std::string, BasicSense>;  // sense_id -> basic

  /// Adds a record. Re-adding an identical record is a no-op; re-adding a
  /// sense id with a different tag throws a conflict error.
  void add(const SenseRecord& rec, std::size_t line = 0) {
    auto& senses = entries_[rec.lemma];
    auto [it, inserted] = senses.emplace(rec.sense_id, rec.basic);
    if (!inserted && it->second != rec.basic) {
      std::string msg = "conflicting tags for (" + rec.lemma + ", " + rec.sense_id + "): '" +
                        std::string(code(it->second)) + "' vs '" +
                        std::string(code(rec.basic)) + "'";
      if (line != 0) msg += " at line " + std::to_string(line);
      throw Error(ErrorKind::conflict, msg, line);
    }
  }

  bool contains(const std::string& lemma) const { return entries_.count(lemma) != 0; }
  bool empty() const { return entries_.empty(); }
  std::size_t lemma_count() const { return entries_.size(); }

  const std::map<std::string, RecordMap>& entries() const { return entries_; }

  std::vector<SenseRecord> records(const std::string& lemma) const {
    std::vector<SenseRecord> out;
    auto it = entries_.find(lemma);
    if (it == entries_.end()) return out;
    for (const auto& [id, basic] : it->second) out.push_back({lemma, id, basic});
    return out;
  }

  friend bool operator==(const Inventory&, const Inventory&) = default;

 private:
  std::map<std::string, RecordMap> entries_;
};

/// Reads `lemma<TAB>sense_id<TAB>tag` lines. Blank and '#' lines are skipped;
/// lemmas are lowercased.
inline Inventory parse_inventory(std::istream& in) {
  Inventory inv;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    text::chomp(line);
    if (text::is_skippable(line)) continue;
    auto fields = text::split(line, '\t');
    if (fields.size() != 3) {
      throw Error(ErrorKind::parse,
                  "malformed line " + std::to_string(lineno) + ": expected 3 tab-separated fields, got " +
                      std::to_string(fields.size()),
                  lineno);
    }
    std::string lemma = text::lower(fields[0]);
    if (lemma.empty() || text::has_whitespace(lemma)) {
      throw Error(ErrorKind::parse, "invalid lemma '" + fields[0] + "' at line " + std::to_string(lineno),
                  lineno);
    }
    if (fields[1].empty()) {
      throw Error(ErrorKind::parse, "empty sense id at line " + std::to_string(lineno), lineno);
    }
    inv.add({std::move(lemma), fields[1], basic_sense_or_throw(fields[2], lineno)}, lineno);
  }
  return inv;
}

inline Inventory parse_inventory(const std::string& source) {
  std::istringstream in(source);
  return parse_inventory(in);
}

inline std::string render_inventory(const Inventory& inv) {
  std::string out;
  for (const auto& [lemma, senses] : inv.entries()) {
    for (const auto& [id, basic] : senses) {
      out += lemma;
      out += '\t';
      out += id;
      out += '\t';
      out += code(basic);
      out += '\n';
    }
  }
  return out;
}

inline SenseProfile profile_of(const Inventory& inv, const std::string& lemma) {
  auto it = inv.entries().find(lemma);
  if (it == inv.entries().end()) {
    throw Error(ErrorKind::not_found, "lemma '" + lemma + "' not in inventory");
  }
  SenseProfile p;
  for (const auto& [id, basic] : it->second) p.insert(basic);
  return p;
}

inline std::map<std::string, SenseProfile> all_profiles(const Inventory& inv) {
  std::map<std::string, SenseProfile> out;
  for (const auto& [lemma, senses] : inv.entries()) {
    SenseProfile p;
    for (const auto& [id, basic] : senses) p.insert(basic);
    out.emplace(lemma, p);
  }
  return out;
}

struct HistogramRow {
  std::size_t senses = 0;    // profile size k
  std::size_t profiles = 0;  // distinct profiles of size k
  std::size_t lemmas = 0;    // lemmas carrying them

  friend bool operator==(const HistogramRow&, const HistogramRow&) = default;
};

struct PolysemyHistogram {
  std::vector<HistogramRow> rows;  // k >= 2, ascending
  std::size_t monosemous = 0;      // lemmas with k = 1

  friend bool operator==(const PolysemyHistogram&, const PolysemyHistogram&) = default;
};

inline PolysemyHistogram polysemy_histogram(const Inventory& inv) {
  std::map<std::size_t, std::pair<std::set<SenseProfile>, std::size_t>> by_size;
  PolysemyHistogram h;
  for (const auto& [lemma, profile] : all_profiles(inv)) {
    if (profile.size() == 1) {
      ++h.monosemous;
      continue;
    }
    auto& slot = by_size[profile.size()];
    slot.first.insert(profile);
    ++slot.second;
  }
  for (const auto& [k, slot] : by_size) h.rows.push_back({k, slot.first.size(), slot.second});
  return h;
}

}  // namespace corelex
