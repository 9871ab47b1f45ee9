#pragma once

// Lexicon generation: corpus evidence mapped onto qualia roles
// (type -> formal, part-whole -> constitutive, predicate-argument -> telic
// and agentive), with JSON and HTML writers.

#include <algorithm>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "corelex/classifier.hpp"
#include "corelex/error.hpp"
#include "corelex/matcher.hpp"
#include "corelex/semtypes.hpp"

namespace corelex {

struct FormalRole {
  std::string type;
  Constructor constructor = Constructor::simple;
  std::vector<std::string> args;  // long names of the components, in order

  friend bool operator==(const FormalRole&, const FormalRole&) = default;
};

struct PartRelation {
  std::string lemma;
  Count count = 0;

  friend bool operator==(const PartRelation&, const PartRelation&) = default;
};

struct TelicItem {
  std::string verb;
  std::string role;  // "obj" (verb-headnoun) or "subj" (headnoun-verb)
  Count count = 0;

  friend bool operator==(const TelicItem&, const TelicItem&) = default;
};

struct AgentiveItem {
  std::string verb;
  Count count = 0;

  friend bool operator==(const AgentiveItem&, const AgentiveItem&) = default;
};

struct LexiconEntry {
  std::string lemma;
  std::string source;  // "corelex" (tagged) or "classified"
  std::vector<FormalRole> formal;  // one per assigned type; homonyms have several
  std::vector<PartRelation> has_part;
  std::vector<PartRelation> part_of;
  std::vector<TelicItem> telic;
  std::vector<AgentiveItem> agentive;

  friend bool operator==(const LexiconEntry&, const LexiconEntry&) = default;
};

struct Provenance {
  std::string corpus;
  std::string type_system;
  std::string tool_version;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct Lexicon {
  std::map<std::string, LexiconEntry> entries;
  Provenance provenance;

  friend bool operator==(const Lexicon&, const Lexicon&) = default;
};

inline const std::vector<std::string>& default_creation_verbs() {
  static const std::vector<std::string> kVerbs{"write", "build", "make", "create", "produce", "construct"};
  return kVerbs;
}

struct LexiconOptions {
  /// Verb stems whose object-role telic evidence is copied to agentive.
  /// Empty disables the agentive role.
  std::set<std::string> creation_verbs;
  Count min_count = 1;
};

inline FormalRole formal_role(const UnderspecifiedType& t) {
  FormalRole f{t.name(), t.type.constructor, {}};
  for (auto s : t.type.components) f.args.emplace_back(long_name(s));
  return f;
}

namespace detail {

template <typename T>
void sort_by_count(std::vector<T>& v, auto key) {
  std::sort(v.begin(), v.end(), [&](const T& a, const T& b) {
    if (a.count != b.count) return a.count > b.count;
    return key(a) < key(b);
  });
}

}  // namespace detail

/// Builds one entry per corpus noun that is tagged or was classified.
/// Constitutive relations come from gated `X of Y` rows of the CORELEX_ONLY
/// table and are recorded in both directions.
inline Lexicon generate_lexicon(const TablePair& tables, const TagMap& tags,
                                const std::vector<Classification>& classifications, const TypeSystem& ts,
                                const LexiconOptions& opt = {}) {
  Lexicon lex;
  std::map<std::string, std::string> classified;
  for (const auto& c : classifications) {
    if (c.assigned) classified[c.noun] = *c.assigned;
  }

  for (const auto& [noun, freq] : tables.all.noun_frequencies()) {
    LexiconEntry e;
    e.lemma = noun;
    if (auto it = tags.find(noun); it != tags.end()) {
      e.source = "corelex";
      for (const auto& t : it->second.types) e.formal.push_back(formal_role(ts.at(t)));
    } else if (auto ct = classified.find(noun); ct != classified.end()) {
      e.source = "classified";
      e.formal.push_back(formal_role(ts.at(ct->second)));
    } else {
      continue;
    }
    for (const auto& [a, c] : tables.all.attributes_of(noun)) {
      if (c < opt.min_count) continue;
      if (a.relation == Relation::VERB_HEAD) {
        e.telic.push_back({a.coword, "obj", c});
        if (opt.creation_verbs.count(a.coword)) e.agentive.push_back({a.coword, c});
      } else if (a.relation == Relation::HEAD_VERB) {
        e.telic.push_back({a.coword, "subj", c});
      }
    }
    lex.entries.emplace(noun, std::move(e));
  }

  for (const auto& [part, attrs] : tables.corelex.joint()) {
    for (const auto& [a, c] : attrs) {
      if (a.relation != Relation::HEAD_PREP_HEAD || a.prep != "of" || c < opt.min_count) continue;
      auto pit = lex.entries.find(part);
      auto wit = lex.entries.find(a.coword);
      if (pit == lex.entries.end() || wit == lex.entries.end()) continue;
      pit->second.part_of.push_back({a.coword, c});
      wit->second.has_part.push_back({part, c});
    }
  }

  for (auto& [lemma, e] : lex.entries) {
    detail::sort_by_count(e.has_part, [](const PartRelation& p) { return p.lemma; });
    detail::sort_by_count(e.part_of, [](const PartRelation& p) { return p.lemma; });
    detail::sort_by_count(e.telic, [](const TelicItem& t) { return t.verb + '\t' + t.role; });
    detail::sort_by_count(e.agentive, [](const AgentiveItem& t) { return t.verb; });
  }
  return lex;
}

namespace detail {

inline nlohmann::json parts_json(const std::vector<PartRelation>& v) {
  auto arr = nlohmann::json::array();
  for (const auto& p : v) arr.push_back({{"lemma", p.lemma}, {"count", p.count}});
  return arr;
}

inline std::vector<PartRelation> parts_from(const nlohmann::json& arr) {
  std::vector<PartRelation> out;
  for (const auto& p : arr) out.push_back({p.at("lemma").get<std::string>(), p.at("count").get<Count>()});
  return out;
}

inline void write_or_throw(std::ostream& sink, const std::string& s) {
  sink << s;
  sink.flush();
  if (!sink) throw Error(ErrorKind::io, "failed writing lexicon output");
}

inline std::string html_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out += c;
    }
  }
  return out;
}

inline std::string formal_label(const FormalRole& f) {
  const char* dot = f.constructor == Constructor::open ? "\xe2\x97\xa6" : "\xe2\x80\xa2";
  std::string out;
  for (const auto& a : f.args) {
    if (!out.empty()) out += dot;
    out += a;
  }
  return out;
}

}  // namespace detail

inline std::string to_json_text(const Lexicon& lex) {
  nlohmann::json doc;
  doc["provenance"] = {{"corpus", lex.provenance.corpus},
                       {"type_system", lex.provenance.type_system},
                       {"tool_version", lex.provenance.tool_version}};
  doc["entries"] = nlohmann::json::object();
  for (const auto& [lemma, e] : lex.entries) {
    nlohmann::json je;
    je["source"] = e.source;
    auto formal = nlohmann::json::array();
    for (const auto& f : e.formal) {
      formal.push_back({{"type", f.type}, {"constructor", to_string(f.constructor)}, {"args", f.args}});
    }
    je["formal"] = formal;
    je["constitutive"] = {{"has_part", detail::parts_json(e.has_part)}, {"part_of", detail::parts_json(e.part_of)}};
    auto telic = nlohmann::json::array();
    for (const auto& t : e.telic) telic.push_back({{"verb", t.verb}, {"role", t.role}, {"count", t.count}});
    je["telic"] = telic;
    auto agentive = nlohmann::json::array();
    for (const auto& a : e.agentive) agentive.push_back({{"verb", a.verb}, {"count", a.count}});
    je["agentive"] = agentive;
    doc["entries"][lemma] = std::move(je);
  }
  return doc.dump(2) + "\n";
}

/// Deterministic JSON with sorted keys.
inline void emit_structured(const Lexicon& lex, std::ostream& sink) { detail::write_or_throw(sink, to_json_text(lex)); }

inline Lexicon parse_structured(const std::string& source) {
  Lexicon lex;
  try {
    auto doc = nlohmann::json::parse(source);
    const auto& p = doc.at("provenance");
    lex.provenance = {p.at("corpus").get<std::string>(), p.at("type_system").get<std::string>(),
                      p.at("tool_version").get<std::string>()};
    for (const auto& [lemma, je] : doc.at("entries").items()) {
      LexiconEntry e;
      e.lemma = lemma;
      e.source = je.at("source").get<std::string>();
      for (const auto& f : je.at("formal")) {
        e.formal.push_back({f.at("type").get<std::string>(), parse_constructor(f.at("constructor").get<std::string>()),
                            f.at("args").get<std::vector<std::string>>()});
      }
      e.has_part = detail::parts_from(je.at("constitutive").at("has_part"));
      e.part_of = detail::parts_from(je.at("constitutive").at("part_of"));
      for (const auto& t : je.at("telic")) {
        e.telic.push_back({t.at("verb").get<std::string>(), t.at("role").get<std::string>(), t.at("count").get<Count>()});
      }
      for (const auto& a : je.at("agentive")) {
        e.agentive.push_back({a.at("verb").get<std::string>(), a.at("count").get<Count>()});
      }
      lex.entries.emplace(lemma, std::move(e));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse, std::string("lexicon: ") + e.what());
  }
  return lex;
}

inline std::string to_html_text(const Lexicon& lex) {
  using detail::html_escape;
  std::map<std::string, std::pair<FormalRole, std::vector<std::string>>> sections;
  for (const auto& [lemma, e] : lex.entries) {
    for (const auto& f : e.formal) {
      auto& s = sections[f.type];
      s.first = f;
      s.second.push_back(lemma);
    }
  }

  std::string out;
  out += "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n";
  out += "<title>Semantic lexicon</title>\n</head>\n<body>\n<h1>Semantic lexicon</h1>\n";
  out += "<p class=\"provenance\">corpus " + html_escape(lex.provenance.corpus) + ", type system " +
         html_escape(lex.provenance.type_system) + ", version " + html_escape(lex.provenance.tool_version) +
         "</p>\n";
  for (const auto& [type, sec] : sections) {
    out += "<section class=\"type\" id=\"type-" + html_escape(type) + "\">\n";
    out += "<h2>" + html_escape(detail::formal_label(sec.first)) + " (" + html_escape(type) + ", " +
           to_string(sec.first.constructor) + ")</h2>\n<ul>\n";
    for (const auto& lemma : sec.second) {
      out += "<li><a href=\"#entry-" + html_escape(lemma) + "\">" + html_escape(lemma) + "</a></li>\n";
    }
    out += "</ul>\n</section>\n";
  }
  out += "<div class=\"entries\">\n";
  for (const auto& [lemma, e] : lex.entries) {
    out += "<div class=\"entry\" id=\"entry-" + html_escape(lemma) + "\">\n<h3>" + html_escape(lemma) + "</h3>\n<dl>\n";
    for (const auto& f : e.formal) {
      out += "<dt>formal</dt><dd>" + std::string(to_string(f.constructor)) + " " +
             html_escape(detail::formal_label(f)) + "</dd>\n";
    }
    for (const auto& p : e.has_part) {
      out += "<dt>constitutive has-part</dt><dd><a href=\"#entry-" + html_escape(p.lemma) + "\">" +
             html_escape(p.lemma) + "</a> (" + std::to_string(p.count) + ")</dd>\n";
    }
    for (const auto& p : e.part_of) {
      out += "<dt>constitutive part-of</dt><dd><a href=\"#entry-" + html_escape(p.lemma) + "\">" +
             html_escape(p.lemma) + "</a> (" + std::to_string(p.count) + ")</dd>\n";
    }
    for (const auto& t : e.telic) {
      out += "<dt>telic</dt><dd>" + html_escape(t.verb) + " [" + t.role + "] (" + std::to_string(t.count) + ")</dd>\n";
    }
    for (const auto& a : e.agentive) {
      out += "<dt>agentive</dt><dd>" + html_escape(a.verb) + " (" + std::to_string(a.count) + ")</dd>\n";
    }
    out += "</dl>\n</div>\n";
  }
  out += "</div>\n</body>\n</html>\n";
  return out;
}

/// Static, script-free HTML index: one section per type, each lemma linked
/// to its entry.
inline void emit_html_index(const Lexicon& lex, std::ostream& sink) { detail::write_or_throw(sink, to_html_text(lex)); }

}  // namespace corelex
