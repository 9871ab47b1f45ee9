#pragma once

// File-to-file pipeline stages. Every stage reads its inputs from disk and
// writes self-describing artifacts, so any stage can be rerun on its own.

#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "corelex/classifier.hpp"
#include "corelex/corpus.hpp"
#include "corelex/error.hpp"
#include "corelex/lexgen.hpp"
#include "corelex/matcher.hpp"
#include "corelex/polyclass.hpp"
#include "corelex/porter.hpp"
#include "corelex/semtypes.hpp"
#include "corelex/sense_inventory.hpp"
#include "corelex/text.hpp"
#include "corelex/version.hpp"

namespace corelex {

struct PipelineConfig {
  std::string inventory;
  std::string exclusions;       // optional
  std::string type_system;
  std::string penn_mapping;     // optional; built-in table otherwise
  std::string stem_exceptions;  // optional
  std::string corpus;
  std::string output_dir = "out";
  double mi_threshold = 0.0;
  Count count_floor = 1;
  Count min_evidence = 1;
  std::size_t adv_window = 1;
  std::vector<std::string> creation_verbs = default_creation_verbs();
};

/// Raised for missing or unreadable inputs; the CLI maps it to exit code 2.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& msg) : Error(ErrorKind::io, msg) {}
};

/// Reads a JSON config. Relative paths resolve against the config file's
/// directory. Unknown keys are rejected.
inline PipelineConfig load_config(const std::string& path) {
  PipelineConfig cfg;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text::read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  const auto base = std::filesystem::path(path).parent_path();
  auto resolve = [&](const std::string& p) {
    if (p.empty()) return p;
    auto fp = std::filesystem::path(p);
    return (fp.is_absolute() ? fp : base / fp).lexically_normal().string();
  };
  static const std::set<std::string> kKeys{"inventory",    "exclusions",   "type_system", "penn_mapping",
                                           "stem_exceptions", "corpus",     "output_dir",  "mi_threshold",
                                           "count_floor",  "min_evidence", "adv_window",  "creation_verbs"};
  try {
    for (const auto& [k, v] : j.items()) {
      if (!kKeys.count(k)) throw ConfigError("config '" + path + "': unknown key '" + k + "'");
    }
    cfg.inventory = resolve(j.value("inventory", std::string()));
    cfg.exclusions = resolve(j.value("exclusions", std::string()));
    cfg.type_system = resolve(j.value("type_system", std::string()));
    cfg.penn_mapping = resolve(j.value("penn_mapping", std::string()));
    cfg.stem_exceptions = resolve(j.value("stem_exceptions", std::string()));
    cfg.corpus = resolve(j.value("corpus", std::string()));
    if (j.contains("output_dir")) cfg.output_dir = resolve(j.at("output_dir").get<std::string>());
    cfg.mi_threshold = j.value("mi_threshold", cfg.mi_threshold);
    cfg.count_floor = j.value("count_floor", cfg.count_floor);
    cfg.min_evidence = j.value("min_evidence", cfg.min_evidence);
    cfg.adv_window = j.value("adv_window", cfg.adv_window);
    if (j.contains("creation_verbs")) cfg.creation_verbs = j.at("creation_verbs").get<std::vector<std::string>>();
  } catch (const nlohmann::json::type_error& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  return cfg;
}

inline void require_file(const std::string& what, const std::string& path) {
  if (path.empty()) throw ConfigError("missing " + what + " path");
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) throw ConfigError(what + " '" + path + "' does not exist");
}

struct InputFile {
  std::string role;
  std::string path;
  std::string content;
};

/// Reads an input and fingerprints it. CRLF is normalized before hashing
/// so digests agree across platforms.
inline InputFile read_input(const std::string& role, const std::string& path) {
  InputFile f{role, path, text::read_file(path)};
  std::erase(f.content, '\r');
  return f;
}

/// `# corelex <version> <stage>` followed by one `# input` line per input.
inline std::string artifact_header(const std::string& stage, const std::vector<const InputFile*>& inputs) {
  std::string out = "# corelex " + std::string(kVersion) + " " + stage + "\n";
  for (const auto* in : inputs) {
    out += "# input\t" + in->role + "\t" + std::filesystem::path(in->path).filename().string() + "\t" +
           text::digest(in->content) + "\n";
  }
  return out;
}

// Parse errors name the offending file.
template <typename F>
auto parse_input(const InputFile& f, F&& parse) -> decltype(parse(f.content)) {
  try {
    return parse(f.content);
  } catch (const Error& e) {
    throw Error(e.kind(), f.path + ": " + e.what(), e.line());
  }
}

inline Inventory load_inventory(const InputFile& f) {
  return parse_input(f, [](const std::string& s) { return parse_inventory(s); });
}
inline TypeSystem load_type_system(const InputFile& f) {
  return parse_input(f, [](const std::string& s) { return parse_type_system(s); });
}
inline TagMap load_tags(const InputFile& f) {
  return parse_input(f, [](const std::string& s) { return parse_tags(s); });
}
inline TablePair load_tables(const InputFile& f) {
  return parse_input(f, [](const std::string& s) { return parse_tables(s); });
}

inline Stemmer make_stemmer(const std::string& exceptions_path) {
  if (exceptions_path.empty()) return Stemmer{};
  auto f = read_input("stem_exceptions", exceptions_path);
  return Stemmer(parse_input(f, [](const std::string& s) { return parse_stem_exceptions(s); }));
}

inline PennMapping make_penn_mapping(const std::string& path) {
  if (path.empty()) return PennMapping::defaults();
  auto f = read_input("penn_mapping", path);
  return parse_input(f, [](const std::string& s) { return parse_penn_mapping(s); });
}

inline std::set<std::string> stem_all(const std::vector<std::string>& words, const Stemmer& stemmer) {
  std::set<std::string> out;
  for (const auto& w : words) out.insert(stemmer(w));
  return out;
}

struct DeriveResult {
  std::size_t candidate_classes = 0;
  std::size_t classes = 0;
};

inline std::string derive_classes_artifact(const std::string& inventory_path, const std::string& exclusions_path,
                                           DeriveResult* result = nullptr) {
  auto inv_f = read_input("inventory", inventory_path);
  auto inv = load_inventory(inv_f);
  std::vector<const InputFile*> inputs{&inv_f};
  ExclusionList ex;
  std::optional<InputFile> ex_f;
  if (!exclusions_path.empty()) {
    ex_f = read_input("exclusions", exclusions_path);
    ex = parse_input(*ex_f, [](const std::string& s) { return parse_exclusions(s); });
    inputs.push_back(&*ex_f);
  }
  auto candidates = derive_classes(inv);
  auto classes = apply_exclusions(candidates, ex);
  if (result) *result = {candidates.size(), classes.size()};
  return artifact_header("derive-classes", inputs) + render_classes(classes);
}

inline std::string tag_artifact(const std::string& inventory_path, const std::string& types_path,
                                std::size_t* tagged = nullptr) {
  auto inv_f = read_input("inventory", inventory_path);
  auto ts_f = read_input("type_system", types_path);
  auto tags = assign_tags(all_profiles(load_inventory(inv_f)), load_type_system(ts_f));
  if (tagged) *tagged = tags.size();
  return artifact_header("tag", {&inv_f, &ts_f}) + render_tags(tags);
}

struct MatchInputs {
  std::string corpus;
  std::string tags;
  std::string type_system;
  std::string penn_mapping;
  std::string stem_exceptions;
  std::size_t adv_window = 1;
};

struct MatchResult {
  std::size_t sentences = 0;
  std::size_t tokens = 0;
  double pattern_recall = 0.0;
  TablePair tables;
};

inline std::string match_artifact(const MatchInputs& in, MatchResult* result = nullptr) {
  auto corpus_f = read_input("corpus", in.corpus);
  auto tags_f = read_input("tags", in.tags);
  auto ts_f = read_input("type_system", in.type_system);
  auto mapping = make_penn_mapping(in.penn_mapping);
  auto stemmer = make_stemmer(in.stem_exceptions);
  auto corpus = parse_input(corpus_f, [&](const std::string& s) { return parse_corpus(s, mapping); });
  stem_corpus(corpus, stemmer);
  auto tables = match_corpus(corpus, load_tags(tags_f), load_type_system(ts_f), MatchOptions{in.adv_window});
  if (result) {
    result->sentences = corpus.sentences.size();
    result->tokens = corpus.size();
    result->pattern_recall = pattern_recall(corpus, tables);
    result->tables = tables;
  }
  return artifact_header("match", {&corpus_f, &tags_f, &ts_f}) + serialize_tables(tables);
}

inline ProfileOptions profile_options(const PipelineConfig& cfg) { return {cfg.mi_threshold, cfg.count_floor}; }

inline std::string classify_artifact(const std::string& tables_path, const std::string& tags_path,
                                     const ProfileOptions& opt, std::vector<Classification>* result = nullptr) {
  auto tables_f = read_input("tables", tables_path);
  auto tags_f = read_input("tags", tags_path);
  auto tags = load_tags(tags_f);
  auto cs = classify_unknown(build_profiles(load_tables(tables_f), tags, opt), tags);
  if (result) *result = cs;
  return artifact_header("classify", {&tables_f, &tags_f}) + render_classifications(std::move(cs));
}

struct EvaluateArtifacts {
  std::string summary;
  std::string rows;
  Evaluation evaluation;
};

inline EvaluateArtifacts evaluate_artifacts(const std::string& tables_path, const std::string& tags_path,
                                            const std::string& types_path, const ProfileOptions& opt) {
  auto tables_f = read_input("tables", tables_path);
  auto tags_f = read_input("tags", tags_path);
  auto ts_f = read_input("type_system", types_path);
  auto ev = evaluate_holdout(load_tables(tables_f), load_tags(tags_f), load_type_system(ts_f), opt);
  auto header = artifact_header("evaluate", {&tables_f, &tags_f, &ts_f});
  return {header + render_evaluation_summary(ev), header + render_evaluation_rows(ev), ev};
}

struct LexiconInputs {
  std::string tables;
  std::string tags;
  std::string classifications;
  std::string type_system;
  std::string corpus_id;  // recorded in provenance
  LexiconOptions options;
};

struct LexiconArtifacts {
  std::string json;
  std::string html;
  Lexicon lexicon;
};

inline LexiconArtifacts lexicon_artifacts(const LexiconInputs& in) {
  auto tables_f = read_input("tables", in.tables);
  auto tags_f = read_input("tags", in.tags);
  auto cls_f = read_input("classifications", in.classifications);
  auto ts_f = read_input("type_system", in.type_system);
  auto cs = parse_input(cls_f, [](const std::string& s) { return parse_classifications(s); });
  auto lex = generate_lexicon(load_tables(tables_f), load_tags(tags_f), cs, load_type_system(ts_f), in.options);
  lex.provenance = {in.corpus_id.empty() ? "tables:" + text::digest(tables_f.content) : in.corpus_id,
                    std::filesystem::path(in.type_system).filename().string() + ":" + text::digest(ts_f.content),
                    kVersion};
  return {to_json_text(lex), to_html_text(lex), lex};
}

struct PipelineSummary {
  std::vector<std::string> lines;
  std::vector<std::string> warnings;
  std::vector<std::string> artifacts;
};

/// Runs every stage in order. On failure the artifacts written so far are
/// removed and the error names the failing stage.
inline PipelineSummary run_pipeline(const PipelineConfig& cfg) {
  require_file("inventory", cfg.inventory);
  require_file("type system", cfg.type_system);
  require_file("corpus", cfg.corpus);
  if (!cfg.exclusions.empty()) require_file("exclusions", cfg.exclusions);
  if (!cfg.penn_mapping.empty()) require_file("penn mapping", cfg.penn_mapping);
  if (!cfg.stem_exceptions.empty()) require_file("stem exceptions", cfg.stem_exceptions);

  // Every input must parse before any stage runs.
  auto validate = [](const char* stage, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      throw Error(e.kind(), std::string("config: ") + stage + ": " + e.what(), e.line());
    }
  };
  validate("inventory", [&] { load_inventory(read_input("inventory", cfg.inventory)); });
  validate("type system", [&] { load_type_system(read_input("type_system", cfg.type_system)); });
  if (!cfg.exclusions.empty()) {
    validate("exclusions", [&] {
      parse_input(read_input("exclusions", cfg.exclusions), [](const std::string& s) { return parse_exclusions(s); });
    });
  }
  validate("penn mapping", [&] { make_penn_mapping(cfg.penn_mapping); });
  auto stemmer = make_stemmer(cfg.stem_exceptions);

  namespace fs = std::filesystem;
  fs::create_directories(cfg.output_dir);
  const fs::path dir(cfg.output_dir);
  PipelineSummary summary;
  std::vector<std::string> written;

  auto write = [&](const std::string& name, const std::string& content) {
    auto p = (dir / name).string();
    text::write_file(p, content);
    written.push_back(p);
    summary.artifacts.push_back(name);
    return p;
  };
  auto stage = [&](const char* name, auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      for (const auto& p : written) fs::remove(p);
      throw Error(e.kind(), std::string("stage '") + name + "': " + e.what(), e.line());
    }
  };

  stage("derive-classes", [&] {
    DeriveResult r;
    write("classes.tsv", derive_classes_artifact(cfg.inventory, cfg.exclusions, &r));
    summary.lines.push_back("derive-classes: " + std::to_string(r.candidate_classes) + " candidate classes, " +
                            std::to_string(r.classes) + " after exclusions");
  });

  std::string tags_path;
  stage("tag", [&] {
    std::size_t n = 0;
    tags_path = write("tags.tsv", tag_artifact(cfg.inventory, cfg.type_system, &n));
    summary.lines.push_back("tag: " + std::to_string(n) + " lemmas tagged");
  });

  std::string tables_path;
  stage("match", [&] {
    MatchResult r;
    tables_path = write("tables.tsv", match_artifact({cfg.corpus, tags_path, cfg.type_system, cfg.penn_mapping,
                                                      cfg.stem_exceptions, cfg.adv_window},
                                                     &r));
    summary.lines.push_back("match: " + std::to_string(r.sentences) + " sentences, " + std::to_string(r.tokens) +
                            " tokens, " + std::to_string(r.tables.all.noun_frequencies().size()) + " nouns, " +
                            std::to_string(r.tables.all.joint().size()) + " heads with attributes, pattern recall " +
                            text::format_real(r.pattern_recall));
    if (r.tables.all.noun_frequencies().empty()) summary.warnings.push_back("corpus contains no nouns");
  });

  const auto popt = profile_options(cfg);
  std::string cls_path;
  stage("classify", [&] {
    std::vector<Classification> cs;
    cls_path = write("classifications.tsv", classify_artifact(tables_path, tags_path, popt, &cs));
    std::size_t assigned = 0;
    for (const auto& c : cs) assigned += c.assigned ? 1 : 0;
    summary.lines.push_back("classify: " + std::to_string(cs.size()) + " unknown nouns, " + std::to_string(assigned) +
                            " assigned");
  });

  stage("evaluate", [&] {
    try {
      auto ev = evaluate_artifacts(tables_path, tags_path, cfg.type_system, popt);
      write("evaluation.txt", ev.summary);
      write("evaluation.tsv", ev.rows);
      summary.lines.push_back("evaluate: precision " + text::format_real(ev.evaluation.precision) + ", recall " +
                              text::format_real(ev.evaluation.recall) + ", recall_all " +
                              text::format_real(ev.evaluation.recall_all));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::evaluation) throw;
      write("evaluation.txt", "# corelex " + std::string(kVersion) + " evaluate\nnot evaluated\t" + e.what() + "\n");
      summary.warnings.push_back(std::string("evaluation skipped: ") + e.what());
      summary.lines.push_back("evaluate: skipped");
    }
  });

  stage("generate-lexicon", [&] {
    auto corpus_f = read_input("corpus", cfg.corpus);
    LexiconInputs in{tables_path, tags_path, cls_path, cfg.type_system,
                     fs::path(cfg.corpus).filename().string() + ":" + text::digest(corpus_f.content),
                     {stem_all(cfg.creation_verbs, stemmer), cfg.min_evidence}};
    auto lex = lexicon_artifacts(in);
    write("lexicon.json", lex.json);
    write("lexicon.html", lex.html);
    summary.lines.push_back("generate-lexicon: " + std::to_string(lex.lexicon.entries.size()) + " entries");
  });
  return summary;
}

}  // namespace corelex
