#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "support.hpp"

namespace corelex::testing {

struct RandomInventory {
  std::vector<std::pair<std::string, std::string>> rows;  // lemma, tag
  std::string text;
  std::vector<std::string> excluded_profiles;                       // rendered
  std::vector<std::pair<std::string, std::string>> excluded_members;  // rendered profile, lemma
  std::string exclusions_text;
};

/// Inventory of at most `max_lemmas` lemmas. Profiles are drawn from a small
/// pool so that classes form; a few exclusions are sampled from the result.
inline RandomInventory random_inventory(std::mt19937& rng, int max_lemmas) {
  RandomInventory r;
  std::vector<SenseProfile> pool;
  for (int i = 0; i < 8; ++i) pool.push_back(random_profile(rng, 4));
  std::uniform_int_distribution<int> lemmas(2, max_lemmas);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::bernoulli_distribution coin(0.25);
  int n = lemmas(rng);
  for (int i = 0; i < n; ++i) {
    auto lemma = "l" + std::to_string(i);
    const auto& p = pool[pick(rng)];
    int sense = 0;
    for (auto s : p.senses()) {
      r.rows.emplace_back(lemma, std::string(code(s)));
      r.text += lemma + "\t" + lemma + ".n." + std::to_string(sense++) + "\t" + std::string(code(s)) + "\n";
    }
    if (coin(rng) && i % 3 == 0) r.excluded_members.emplace_back(p.render(), lemma);
  }
  for (const auto& p : pool) {
    if (coin(rng)) r.excluded_profiles.push_back(p.render());
  }
  for (const auto& p : r.excluded_profiles) r.exclusions_text += p + "\n";
  for (const auto& [p, l] : r.excluded_members) r.exclusions_text += p + "\t" + l + "\n";
  return r;
}

/// Brute force: string profiles, pairwise grouping, then filters.
inline std::set<std::pair<std::string, std::set<std::string>>> oracle_classes(const RandomInventory& r) {
  std::map<std::string, std::set<std::string>> tags;
  for (const auto& [lemma, tag] : r.rows) tags[lemma].insert(tag);
  std::vector<std::pair<std::string, std::string>> keyed;
  for (const auto& [lemma, ts] : tags) {
    std::string key;
    for (const auto& t : ts) key += (key.empty() ? "" : " ") + t;
    keyed.emplace_back(lemma, key);
  }
  std::set<std::pair<std::string, std::set<std::string>>> out;
  for (const auto& [lemma, key] : keyed) {
    if (tags[lemma].size() < 2) continue;
    if (std::find(r.excluded_profiles.begin(), r.excluded_profiles.end(), key) != r.excluded_profiles.end()) continue;
    std::set<std::string> members;
    std::size_t before = 0;
    for (const auto& [other, other_key] : keyed) {
      if (other_key != key) continue;
      ++before;
      auto excluded = std::find(r.excluded_members.begin(), r.excluded_members.end(), std::make_pair(key, other));
      if (excluded == r.excluded_members.end()) members.insert(other);
    }
    if (before >= 2 && members.size() >= 2) out.emplace(key, members);
  }
  return out;
}

inline std::set<std::pair<std::string, std::set<std::string>>> as_pairs(const ClassSet& classes) {
  std::set<std::pair<std::string, std::set<std::string>>> out;
  for (const auto& [p, m] : classes) out.emplace(p.render(), m);
  return out;
}

}  // namespace corelex::testing
