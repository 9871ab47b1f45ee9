#pragma once

#include <filesystem>
#include <random>
#include <string>

#include <unistd.h>

#include "corelex/corelex.hpp"

namespace corelex::testing {

inline std::string data_path(const std::string& name) { return std::string(CORELEX_DATA_DIR) + "/" + name; }
inline std::string fixture_path(const std::string& name) { return std::string(CORELEX_FIXTURE_DIR) + "/" + name; }
inline std::string golden_path(const std::string& name) { return std::string(CORELEX_GOLDEN_DIR) + "/" + name; }

inline std::string slurp(const std::string& path) { return text::read_file(path); }

inline const TypeSystem& shipped_types() {
  static const TypeSystem ts = parse_type_system(slurp(data_path("types.json")));
  return ts;
}

inline Stemmer shipped_stemmer() { return Stemmer(parse_stem_exceptions(slurp(data_path("stem_exceptions.tsv")))); }

/// Drops the `# corelex` and `# input` provenance lines of an artifact.
inline std::string strip_header(const std::string& artifact) {
  std::string out;
  std::size_t pos = 0;
  while (pos < artifact.size()) {
    auto nl = artifact.find('\n', pos);
    auto end = nl == std::string::npos ? artifact.size() : nl + 1;
    auto line = artifact.substr(pos, end - pos);
    if (line.rfind("# corelex ", 0) != 0 && line.rfind("# input\t", 0) != 0) out += line;
    pos = end;
  }
  return out;
}

/// Corpus from the matcher fixture, stemmed with the shipped exceptions.
inline Corpus matcher_corpus() {
  auto c = parse_corpus(slurp(fixture_path("matcher_corpus.vrt")));
  stem_corpus(c, shipped_stemmer());
  return c;
}

inline TagMap matcher_tags() { return parse_tags(slurp(fixture_path("matcher_tags.tsv"))); }

inline BasicSense sense_at(std::size_t i) { return static_cast<BasicSense>(i); }

/// Random profile of 1..max_size distinct tags.
inline SenseProfile random_profile(std::mt19937& rng, std::size_t max_size) {
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::uniform_int_distribution<std::size_t> tag(0, kBasicSenseCount - 1);
  SenseProfile p;
  auto n = size(rng);
  while (p.size() < n) p.insert(sense_at(tag(rng)));
  return p;
}

struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& stem) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() /
           (stem + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    std::filesystem::remove_all(path);
    std::filesystem::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace corelex::testing
