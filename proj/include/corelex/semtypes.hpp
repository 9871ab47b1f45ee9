#pragma once

// Underspecified semantic types: simple and dotted types with qualia
// skeletons, the profile -> type mapping, and tag assignment.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "corelex/basic_sense.hpp"
#include "corelex/error.hpp"
#include "corelex/text.hpp"

namespace corelex {

enum class Constructor { simple, closed, open };

inline const char* to_string(Constructor c) {
  switch (c) {
    case Constructor::simple: return "simple";
    case Constructor::closed: return "closed";
    case Constructor::open: return "open";
  }
  return "simple";
}

inline Constructor parse_constructor(const std::string& s) {
  if (s == "simple") return Constructor::simple;
  if (s == "closed") return Constructor::closed;
  if (s == "open") return Constructor::open;
  throw Error(ErrorKind::validation, "unknown type constructor '" + s + "'");
}

struct DottedType {
  std::string name;
  Constructor constructor = Constructor::simple;
  std::vector<BasicSense> components;

  bool dotted() const { return constructor != Constructor::simple; }

  bool has_component(BasicSense s) const {
    return std::find(components.begin(), components.end(), s) != components.end();
  }

  /// Human-readable label such as "act•relation" or "animal◦food".
  std::string label() const {
    const char* dot = constructor == Constructor::open ? "\xe2\x97\xa6" : "\xe2\x80\xa2";
    std::string out;
    for (auto s : components) {
      if (!out.empty()) out += dot;
      out += long_name(s);
    }
    return out;
  }

  friend bool operator==(const DottedType&, const DottedType&) = default;
};

/// Marks an argument slot that carries no type restriction.
inline constexpr const char* kUntypedSlot = "*";

struct ConstitutiveSlot {
  std::string slot;  // X, Y, Z, ...
  std::string type;  // component code or the owning type's name

  friend bool operator==(const ConstitutiveSlot&, const ConstitutiveSlot&) = default;
};

struct PredicateTemplate {
  std::string predicate_slot;  // P, P1, ...
  std::string predicate;       // e.g. "event", "act"
  std::vector<std::string> arg_types;

  friend bool operator==(const PredicateTemplate&, const PredicateTemplate&) = default;
};

enum class Connective { alternation, conjunction };

struct QualiaSkeleton {
  std::string formal_slot = "Q";
  std::vector<ConstitutiveSlot> constitutive;
  Connective constitutive_connective = Connective::alternation;
  std::vector<PredicateTemplate> telic;
  Connective telic_connective = Connective::alternation;
  std::vector<PredicateTemplate> agentive;
  Connective agentive_connective = Connective::alternation;

  friend bool operator==(const QualiaSkeleton&, const QualiaSkeleton&) = default;
};

struct Coverage {
  SenseProfile profile;
  bool homonym = false;

  friend bool operator==(const Coverage&, const Coverage&) = default;
};

struct UnderspecifiedType {
  DottedType type;
  QualiaSkeleton qualia;
  std::vector<Coverage> covers;

  const std::string& name() const { return type.name; }

  friend bool operator==(const UnderspecifiedType&, const UnderspecifiedType&) = default;
};

struct TagAssignment {
  std::string lemma;
  std::vector<std::string> types;  // sorted, unique, non-empty

  bool homonym() const { return types.size() >= 2; }

  friend bool operator==(const TagAssignment&, const TagAssignment&) = default;
};

using TagMap = std::map<std::string, TagAssignment>;

class TypeSystem {
 public:
  TypeSystem() = default;

  /// Validates and indexes `types`. Throws on arity, slot-typing and
  /// coverage violations.
  explicit TypeSystem(std::string id, std::vector<UnderspecifiedType> types) : id_(std::move(id)) {
    for (auto& t : types) {
      validate(t);
      auto name = t.name();
      if (!types_.emplace(name, std::move(t)).second) {
        throw Error(ErrorKind::conflict, "duplicate type name '" + name + "'");
      }
    }
    index();
  }

  const std::string& id() const { return id_; }
  const std::map<std::string, UnderspecifiedType>& types() const { return types_; }

  const UnderspecifiedType* find(const std::string& name) const {
    auto it = types_.find(name);
    return it == types_.end() ? nullptr : &it->second;
  }

  const UnderspecifiedType& at(const std::string& name) const {
    if (const auto* t = find(name)) return *t;
    throw Error(ErrorKind::not_found, "unknown type '" + name + "'");
  }

  /// Types covering `profile`, sorted by name; empty when uncovered.
  const std::vector<std::string>& types_for(const SenseProfile& profile) const {
    static const std::vector<std::string> kNone;
    auto it = by_profile_.find(profile);
    return it == by_profile_.end() ? kNone : it->second;
  }

  const std::map<SenseProfile, std::vector<std::string>>& profile_index() const { return by_profile_; }

  friend bool operator==(const TypeSystem& a, const TypeSystem& b) {
    return a.id_ == b.id_ && a.types_ == b.types_;
  }

 private:
  static bool slot_type_ok(const UnderspecifiedType& t, const std::string& type) {
    if (type == t.name()) return true;
    auto s = parse_basic_sense(type);
    return s && t.type.has_component(*s);
  }

  static void validate(const UnderspecifiedType& t) {
    const auto& name = t.name();
    if (name.empty() || text::has_whitespace(name)) {
      throw Error(ErrorKind::validation, "invalid type name '" + name + "'");
    }
    const auto n = t.type.components.size();
    if (t.type.constructor == Constructor::simple && n != 1) {
      throw Error(ErrorKind::validation, "simple type '" + name + "' must have exactly 1 component");
    }
    if (t.type.constructor != Constructor::simple && n < 2) {
      throw Error(ErrorKind::validation,
                  std::string(to_string(t.type.constructor)) + " type '" + name +
                      "' must have at least 2 components");
    }
    std::set<BasicSense> seen(t.type.components.begin(), t.type.components.end());
    if (seen.size() != n) {
      throw Error(ErrorKind::validation, "type '" + name + "' repeats a component");
    }
    for (const auto& c : t.qualia.constitutive) {
      if (!slot_type_ok(t, c.type)) {
        throw Error(ErrorKind::validation, "constitutive slot " + c.slot + " of '" + name +
                                               "' typed outside its components: '" + c.type + "'");
      }
    }
    auto check_templates = [&](const std::vector<PredicateTemplate>& ts, const char* role) {
      for (const auto& p : ts) {
        std::size_t typed = 0;
        for (const auto& a : p.arg_types) {
          if (a == kUntypedSlot) continue;
          if (!slot_type_ok(t, a)) {
            throw Error(ErrorKind::validation, std::string(role) + " slot " + p.predicate_slot + " of '" +
                                                   name + "' typed outside its components: '" + a + "'");
          }
          ++typed;
        }
        if (typed == 0) {
          throw Error(ErrorKind::validation, std::string(role) + " slot " + p.predicate_slot + " of '" +
                                                 name + "' has no typed argument");
        }
      }
    };
    check_templates(t.qualia.telic, "telic");
    check_templates(t.qualia.agentive, "agentive");
  }

  void index() {
    std::map<SenseProfile, std::vector<std::pair<std::string, bool>>> claims;
    for (const auto& [name, t] : types_) {
      std::set<SenseProfile> own;
      for (const auto& c : t.covers) {
        if (!own.insert(c.profile).second) {
          throw Error(ErrorKind::validation,
                      "type '" + name + "' covers profile '" + c.profile.render() + "' twice");
        }
        claims[c.profile].emplace_back(name, c.homonym);
      }
    }
    for (auto& [profile, owners] : claims) {
      bool all_homonym = std::all_of(owners.begin(), owners.end(), [](const auto& o) { return o.second; });
      if (owners.size() >= 2 && !all_homonym) {
        throw Error(ErrorKind::conflict, "profile '" + profile.render() + "' claimed by '" + owners[0].first +
                                             "' and '" + owners[1].first + "' without a homonym marker");
      }
      if (owners.size() == 1 && owners[0].second) {
        throw Error(ErrorKind::validation, "homonym profile '" + profile.render() +
                                               "' is covered by only one type ('" + owners[0].first + "')");
      }
      auto& names = by_profile_[profile];
      for (const auto& o : owners) names.push_back(o.first);
      std::sort(names.begin(), names.end());
    }
  }

  std::string id_;
  std::map<std::string, UnderspecifiedType> types_;
  std::map<SenseProfile, std::vector<std::string>> by_profile_;
};

namespace detail {

inline const char* connective_name(Connective c) {
  return c == Connective::conjunction ? "and" : "or";
}

inline Connective parse_connective(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) return Connective::alternation;
  auto s = j.at(key).get<std::string>();
  if (s == "or") return Connective::alternation;
  if (s == "and") return Connective::conjunction;
  throw Error(ErrorKind::validation, std::string("connective '") + key + "' must be \"or\" or \"and\"");
}

inline std::vector<PredicateTemplate> parse_templates(const nlohmann::json& q, const char* key) {
  std::vector<PredicateTemplate> out;
  if (!q.contains(key)) return out;
  for (const auto& e : q.at(key)) {
    PredicateTemplate p;
    p.predicate_slot = e.at("predicate_slot").get<std::string>();
    p.predicate = e.value("predicate", std::string("act"));
    p.arg_types = e.at("arg_types").get<std::vector<std::string>>();
    out.push_back(std::move(p));
  }
  return out;
}

inline nlohmann::json templates_json(const std::vector<PredicateTemplate>& ts) {
  auto arr = nlohmann::json::array();
  for (const auto& p : ts) {
    arr.push_back({{"predicate_slot", p.predicate_slot}, {"predicate", p.predicate}, {"arg_types", p.arg_types}});
  }
  return arr;
}

}  // namespace detail

/// Parses the JSON type-definition format. See data/types.json for a
/// complete example.
inline TypeSystem parse_type_system(const std::string& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(source);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::parse, std::string("type system: ") + e.what());
  }
  std::vector<UnderspecifiedType> types;
  try {
    for (const auto& jt : doc.at("types")) {
      UnderspecifiedType t;
      t.type.name = jt.at("name").get<std::string>();
      t.type.constructor = parse_constructor(jt.at("constructor").get<std::string>());
      for (const auto& c : jt.at("components")) {
        t.type.components.push_back(basic_sense_or_throw(c.get<std::string>()));
      }
      if (jt.contains("covers")) {
        for (const auto& c : jt.at("covers")) {
          t.covers.push_back({SenseProfile::parse(c.at("profile").get<std::string>()), c.value("homonym", false)});
        }
      }
      if (jt.contains("qualia")) {
        const auto& q = jt.at("qualia");
        t.qualia.formal_slot = q.value("formal", std::string("Q"));
        if (q.contains("constitutive")) {
          for (const auto& c : q.at("constitutive")) {
            t.qualia.constitutive.push_back({c.at("slot").get<std::string>(), c.at("type").get<std::string>()});
          }
        }
        t.qualia.constitutive_connective = detail::parse_connective(q, "constitutive_connective");
        t.qualia.telic = detail::parse_templates(q, "telic");
        t.qualia.telic_connective = detail::parse_connective(q, "telic_connective");
        t.qualia.agentive = detail::parse_templates(q, "agentive");
        t.qualia.agentive_connective = detail::parse_connective(q, "agentive_connective");
      }
      types.push_back(std::move(t));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("type system: ") + e.what());
  }
  return TypeSystem(doc.value("id", std::string()), std::move(types));
}

inline std::string render_type_system(const TypeSystem& ts) {
  nlohmann::json doc;
  doc["id"] = ts.id();
  doc["types"] = nlohmann::json::array();
  for (const auto& [name, t] : ts.types()) {
    nlohmann::json jt;
    jt["name"] = name;
    jt["constructor"] = to_string(t.type.constructor);
    auto comps = nlohmann::json::array();
    for (auto s : t.type.components) comps.push_back(std::string(code(s)));
    jt["components"] = comps;
    auto covers = nlohmann::json::array();
    for (const auto& c : t.covers) covers.push_back({{"profile", c.profile.render()}, {"homonym", c.homonym}});
    jt["covers"] = covers;
    nlohmann::json q;
    q["formal"] = t.qualia.formal_slot;
    auto cons = nlohmann::json::array();
    for (const auto& c : t.qualia.constitutive) cons.push_back({{"slot", c.slot}, {"type", c.type}});
    q["constitutive"] = cons;
    q["constitutive_connective"] = detail::connective_name(t.qualia.constitutive_connective);
    q["telic"] = detail::templates_json(t.qualia.telic);
    q["telic_connective"] = detail::connective_name(t.qualia.telic_connective);
    q["agentive"] = detail::templates_json(t.qualia.agentive);
    q["agentive_connective"] = detail::connective_name(t.qualia.agentive_connective);
    jt["qualia"] = q;
    doc["types"].push_back(std::move(jt));
  }
  return doc.dump(2) + "\n";
}

/// Tags every lemma whose profile is covered. Uncovered lemmas are left out;
/// they are the unknown nouns for classification.
inline TagMap assign_tags(const std::map<std::string, SenseProfile>& profiles, const TypeSystem& ts) {
  TagMap out;
  for (const auto& [lemma, profile] : profiles) {
    const auto& types = ts.types_for(profile);
    if (types.empty()) continue;
    out.emplace(lemma, TagAssignment{lemma, types});
  }
  return out;
}

/// `lemma<TAB>type[ type...]`, sorted by lemma.
inline std::string render_tags(const TagMap& tags) {
  std::string out;
  for (const auto& [lemma, tag] : tags) {
    out += lemma + '\t';
    for (std::size_t i = 0; i < tag.types.size(); ++i) {
      if (i) out += ' ';
      out += tag.types[i];
    }
    out += '\n';
  }
  return out;
}

inline TagMap parse_tags(std::istream& in) {
  TagMap out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    text::chomp(line);
    if (text::is_skippable(line)) continue;
    auto f = text::split(line, '\t');
    auto types = f.size() == 2 ? text::split_ws(f[1]) : std::vector<std::string>{};
    if (f.size() != 2 || f[0].empty() || types.empty()) {
      throw Error(ErrorKind::parse, "malformed tag line " + std::to_string(lineno), lineno);
    }
    std::sort(types.begin(), types.end());
    if (std::adjacent_find(types.begin(), types.end()) != types.end()) {
      throw Error(ErrorKind::parse, "duplicate type in tag line " + std::to_string(lineno), lineno);
    }
    out[f[0]] = TagAssignment{f[0], std::move(types)};
  }
  return out;
}

inline TagMap parse_tags(const std::string& source) {
  std::istringstream in(source);
  return parse_tags(in);
}

/// True iff `candidate` equals `dotted`, or `candidate` is simple and its
/// component is one of `dotted`'s components.
inline bool subsumes(const std::string& candidate, const std::string& dotted, const TypeSystem& ts) {
  const auto& c = ts.at(candidate);
  const auto& d = ts.at(dotted);
  if (candidate == dotted) return true;
  return c.type.constructor == Constructor::simple && d.type.has_component(c.type.components.front());
}

}  // namespace corelex
