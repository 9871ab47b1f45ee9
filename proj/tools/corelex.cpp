// corelex: command-line driver for the lexicon pipeline.
//
// Exit codes: 0 success, 1 pipeline error, 2 usage or configuration error.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "corelex/corelex.hpp"

namespace {

using namespace corelex;
namespace fs = std::filesystem;

constexpr int kOk = 0;
constexpr int kPipelineError = 1;
constexpr int kUsageError = 2;

// Flag values; unset flags fall back to the config file, then defaults.
struct Overrides {
  std::string config;
  std::optional<std::string> inventory, exclusions, type_system, penn_mapping, stem_exceptions, corpus, output_dir;
  std::optional<double> mi_threshold;
  std::optional<Count> count_floor, min_evidence;
  std::optional<std::size_t> adv_window;
  std::optional<std::string> tags, tables, classifications;
  std::optional<std::string> out, out_rows, out_html;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "JSON config file; flags override its values");
  cmd->add_option("--inventory", o.inventory, "sense inventory TSV");
  cmd->add_option("--exclusions", o.exclusions, "ambiguous-class exclusion file");
  cmd->add_option("--type-system", o.type_system, "type definition JSON");
  cmd->add_option("--penn-map", o.penn_mapping, "Penn -> internal tag mapping TSV");
  cmd->add_option("--stem-exceptions", o.stem_exceptions, "stem exception TSV");
  cmd->add_option("--corpus", o.corpus, "vertical-format corpus");
  cmd->add_option("--output-dir", o.output_dir, "directory for artifacts");
  cmd->add_option("--mi-threshold", o.mi_threshold, "MI above which an attribute enters a profile");
  cmd->add_option("--count-floor", o.count_floor, "minimum joint count for profile attributes");
  cmd->add_option("--min-evidence", o.min_evidence, "minimum count for lexicon entry items");
  cmd->add_option("--adv-window", o.adv_window, "adverbs tolerated between verb and noun");
}

PipelineConfig resolve(const Overrides& o) {
  PipelineConfig cfg;
  if (!o.config.empty()) {
    require_file("config", o.config);
    cfg = load_config(o.config);
  }
  auto set = [](std::string& dst, const std::optional<std::string>& v) {
    if (v) dst = *v;
  };
  set(cfg.inventory, o.inventory);
  set(cfg.exclusions, o.exclusions);
  set(cfg.type_system, o.type_system);
  set(cfg.penn_mapping, o.penn_mapping);
  set(cfg.stem_exceptions, o.stem_exceptions);
  set(cfg.corpus, o.corpus);
  set(cfg.output_dir, o.output_dir);
  if (o.mi_threshold) cfg.mi_threshold = *o.mi_threshold;
  if (o.count_floor) cfg.count_floor = *o.count_floor;
  if (o.min_evidence) cfg.min_evidence = *o.min_evidence;
  if (o.adv_window) cfg.adv_window = *o.adv_window;
  return cfg;
}

std::string in_dir(const PipelineConfig& cfg, const std::optional<std::string>& given, const char* name) {
  return given ? *given : (fs::path(cfg.output_dir) / name).string();
}

std::string out_path(const PipelineConfig& cfg, const std::optional<std::string>& given, const char* name) {
  auto p = in_dir(cfg, given, name);
  auto parent = fs::path(p).parent_path();
  if (!parent.empty()) fs::create_directories(parent);
  return p;
}

int run(CLI::App& app, const std::string& command, const Overrides& o) {
  auto cfg = resolve(o);
  if (command == "derive-classes") {
    require_file("inventory", cfg.inventory);
    if (!cfg.exclusions.empty()) require_file("exclusions", cfg.exclusions);
    DeriveResult r;
    auto classes = derive_classes_artifact(cfg.inventory, cfg.exclusions, &r);
    text::write_file(out_path(cfg, o.out, "classes.tsv"), classes);
    std::cout << "derive-classes: " << r.candidate_classes << " candidate classes, " << r.classes
              << " after exclusions\n";
  } else if (command == "tag") {
    require_file("inventory", cfg.inventory);
    require_file("type system", cfg.type_system);
    std::size_t n = 0;
    text::write_file(out_path(cfg, o.out, "tags.tsv"), tag_artifact(cfg.inventory, cfg.type_system, &n));
    std::cout << "tag: " << n << " lemmas tagged\n";
  } else if (command == "match") {
    MatchInputs in{cfg.corpus, in_dir(cfg, o.tags, "tags.tsv"), cfg.type_system, cfg.penn_mapping,
                   cfg.stem_exceptions, cfg.adv_window};
    require_file("corpus", in.corpus);
    require_file("tags", in.tags);
    require_file("type system", in.type_system);
    if (!in.penn_mapping.empty()) require_file("penn mapping", in.penn_mapping);
    if (!in.stem_exceptions.empty()) require_file("stem exceptions", in.stem_exceptions);
    MatchResult r;
    text::write_file(out_path(cfg, o.out, "tables.tsv"), match_artifact(in, &r));
    std::cout << "match: " << r.sentences << " sentences, " << r.tokens << " tokens, pattern recall "
              << text::format_real(r.pattern_recall) << "\n";
  } else if (command == "classify") {
    auto tables = in_dir(cfg, o.tables, "tables.tsv");
    auto tags = in_dir(cfg, o.tags, "tags.tsv");
    require_file("tables", tables);
    require_file("tags", tags);
    std::vector<Classification> cs;
    text::write_file(out_path(cfg, o.out, "classifications.tsv"),
                     classify_artifact(tables, tags, profile_options(cfg), &cs));
    std::cout << "classify: " << cs.size() << " unknown nouns\n";
  } else if (command == "evaluate") {
    auto tables = in_dir(cfg, o.tables, "tables.tsv");
    auto tags = in_dir(cfg, o.tags, "tags.tsv");
    require_file("tables", tables);
    require_file("tags", tags);
    require_file("type system", cfg.type_system);
    auto ev = evaluate_artifacts(tables, tags, cfg.type_system, profile_options(cfg));
    text::write_file(out_path(cfg, o.out, "evaluation.txt"), ev.summary);
    text::write_file(out_path(cfg, o.out_rows, "evaluation.tsv"), ev.rows);
    std::cout << render_evaluation_summary(ev.evaluation);
  } else if (command == "generate-lexicon") {
    LexiconInputs in{in_dir(cfg, o.tables, "tables.tsv"), in_dir(cfg, o.tags, "tags.tsv"),
                     in_dir(cfg, o.classifications, "classifications.tsv"), cfg.type_system, {}, {}};
    require_file("tables", in.tables);
    require_file("tags", in.tags);
    require_file("classifications", in.classifications);
    require_file("type system", in.type_system);
    if (!cfg.corpus.empty()) {
      require_file("corpus", cfg.corpus);
      in.corpus_id = fs::path(cfg.corpus).filename().string() + ":" + text::digest(read_input("corpus", cfg.corpus).content);
    }
    in.options = {stem_all(cfg.creation_verbs, make_stemmer(cfg.stem_exceptions)), cfg.min_evidence};
    auto lex = lexicon_artifacts(in);
    text::write_file(out_path(cfg, o.out, "lexicon.json"), lex.json);
    text::write_file(out_path(cfg, o.out_html, "lexicon.html"), lex.html);
    std::cout << "generate-lexicon: " << lex.lexicon.entries.size() << " entries\n";
  } else if (command == "pipeline") {
    auto summary = run_pipeline(cfg);
    for (const auto& l : summary.lines) std::cout << l << "\n";
    for (const auto& w : summary.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << "artifacts in " << cfg.output_dir << ":";
    for (const auto& a : summary.artifacts) std::cout << " " << a;
    std::cout << "\n";
  } else {
    std::cerr << app.help();
    return kUsageError;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Underspecified semantic lexicon builder"};
  app.require_subcommand(1);
  Overrides o;

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"derive-classes", "group lemmas into polysemous classes and apply exclusions"},
      {"tag", "assign underspecified types to inventory lemmas"},
      {"match", "run the pattern matcher and write co-occurrence tables"},
      {"classify", "classify unknown nouns by Jaccard similarity"},
      {"evaluate", "leave-one-out precision and recall on known nouns"},
      {"generate-lexicon", "write the qualia lexicon as JSON and HTML"},
      {"pipeline", "run every stage in order"},
  };
  for (const auto& c : commands) {
    auto* cmd = app.add_subcommand(c.name, c.help);
    add_common(cmd, o);
    std::string name = c.name;
    if (name == "match" || name == "classify" || name == "evaluate" || name == "generate-lexicon") {
      cmd->add_option("--tags", o.tags, "tag assignments TSV");
    }
    if (name == "classify" || name == "evaluate" || name == "generate-lexicon") {
      cmd->add_option("--tables", o.tables, "co-occurrence tables TSV");
    }
    if (name == "generate-lexicon") {
      cmd->add_option("--classifications", o.classifications, "classification TSV");
      cmd->add_option("--out-html", o.out_html, "HTML index path");
    }
    if (name == "evaluate") cmd->add_option("--out-rows", o.out_rows, "per-noun evaluation TSV path");
    if (name != "pipeline") cmd->add_option("--out", o.out, "output path");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsageError;
  }

  std::string command = app.get_subcommands().front()->get_name();
  try {
    return run(app, command, o);
  } catch (const ConfigError& e) {
    std::cerr << "corelex " << command << ": " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    std::cerr << "corelex " << command << ": " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kPipelineError;
  } catch (const std::exception& e) {
    std::cerr << "corelex " << command << ": " << e.what() << "\n";
    return kPipelineError;
  }
}
