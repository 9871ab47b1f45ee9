#pragma once

// Systematic polysemous classes: grouping lemmas by sense profile, curated
// exclusion of ambiguous classes and members, and the homonym census.

#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "corelex/basic_sense.hpp"
#include "corelex/error.hpp"
#include "corelex/semtypes.hpp"
#include "corelex/sense_inventory.hpp"
#include "corelex/text.hpp"

namespace corelex {

struct PolyClass {
  SenseProfile profile;
  std::set<std::string> members;

  friend bool operator==(const PolyClass&, const PolyClass&) = default;
};

/// Classes keyed by profile; iteration is in canonical profile order.
using ClassSet = std::map<SenseProfile, std::set<std::string>>;

struct ExclusionList {
  std::set<SenseProfile> excluded_profiles;
  std::set<std::pair<SenseProfile, std::string>> excluded_members;

  bool empty() const { return excluded_profiles.empty() && excluded_members.empty(); }
};

/// Lines are `profile` (drop the whole class) or `profile<TAB>lemma`
/// (drop one member).
inline ExclusionList parse_exclusions(std::istream& in) {
  ExclusionList ex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    text::chomp(line);
    if (text::is_skippable(line)) continue;
    auto fields = text::split(line, '\t');
    if (fields.size() > 2) {
      throw Error(ErrorKind::parse, "malformed exclusion at line " + std::to_string(lineno), lineno);
    }
    auto profile = SenseProfile::parse(fields[0], lineno);
    if (fields.size() == 1) {
      ex.excluded_profiles.insert(profile);
      continue;
    }
    auto lemma = text::lower(text::trim(fields[1]));
    if (lemma.empty() || text::has_whitespace(lemma)) {
      throw Error(ErrorKind::parse, "invalid lemma in exclusion at line " + std::to_string(lineno), lineno);
    }
    ex.excluded_members.emplace(profile, std::move(lemma));
  }
  return ex;
}

inline ExclusionList parse_exclusions(const std::string& source) {
  std::istringstream in(source);
  return parse_exclusions(in);
}

/// One class per profile of size >= 2 shared by >= 2 lemmas.
inline ClassSet derive_classes(const Inventory& inv) {
  ClassSet grouped;
  for (const auto& [lemma, profile] : all_profiles(inv)) {
    if (profile.size() < 2) continue;
    grouped[profile].insert(lemma);
  }
  std::erase_if(grouped, [](const auto& kv) { return kv.second.size() < 2; });
  return grouped;
}

inline ClassSet apply_exclusions(const ClassSet& classes, const ExclusionList& ex) {
  ClassSet out;
  for (const auto& [profile, members] : classes) {
    if (ex.excluded_profiles.count(profile)) continue;
    std::set<std::string> kept;
    for (const auto& m : members) {
      if (!ex.excluded_members.count({profile, m})) kept.insert(m);
    }
    if (kept.size() >= 2) out.emplace(profile, std::move(kept));
  }
  return out;
}

inline std::vector<PolyClass> to_vector(const ClassSet& classes) {
  std::vector<PolyClass> out;
  for (const auto& [p, m] : classes) out.push_back({p, m});
  return out;
}

/// `profile<TAB>member member ...`, one class per line in profile order.
inline std::string render_classes(const ClassSet& classes) {
  std::string out;
  for (const auto& [profile, members] : classes) {
    out += profile.render();
    out += '\t';
    bool first = true;
    for (const auto& m : members) {
      if (!first) out += ' ';
      out += m;
      first = false;
    }
    out += '\n';
  }
  return out;
}

inline ClassSet parse_classes(std::istream& in) {
  ClassSet out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    text::chomp(line);
    if (text::is_skippable(line)) continue;
    auto fields = text::split(line, '\t');
    if (fields.size() != 2) {
      throw Error(ErrorKind::parse, "malformed class line " + std::to_string(lineno), lineno);
    }
    auto members = text::split_ws(fields[1]);
    out[SenseProfile::parse(fields[0], lineno)].insert(members.begin(), members.end());
  }
  return out;
}

inline ClassSet parse_classes(const std::string& source) {
  std::istringstream in(source);
  return parse_classes(in);
}

struct HomonymCensus {
  std::vector<std::string> lemmas;  // sorted
  std::size_t count = 0;
};

/// Lemmas whose profile maps onto two or more underspecified types.
inline HomonymCensus homonym_census(const Inventory& inv, const TypeSystem& ts) {
  HomonymCensus c;
  for (const auto& [lemma, tag] : assign_tags(all_profiles(inv), ts)) {
    if (tag.homonym()) c.lemmas.push_back(lemma);
  }
  c.count = c.lemmas.size();
  return c;
}

}  // namespace corelex
