#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corelex/error.hpp"
#include "corelex/text.hpp"

namespace corelex {

/// One of the 32 coarse sense tags. Enumerator order is the canonical
/// (alphabetical) tag order used for every profile rendering.
enum class BasicSense : std::uint8_t {
  act, agt, anm, art, atr, bln, cel, chm, com, evt, fod, frm, grb, grp, grs, hum,
  lme, loc, log, mea, nat, phm, plt, pos, prt, psy, qud, qui, rel, spc, sta, tme,
};

inline constexpr std::size_t kBasicSenseCount = 32;

namespace detail {

struct SenseName {
  std::string_view code;
  std::string_view name;
};

inline constexpr std::array<SenseName, kBasicSenseCount> kSenseNames{{
    {"act", "act"},
    {"agt", "agent"},
    {"anm", "animal"},
    {"art", "artifact"},
    {"atr", "attribute"},
    {"bln", "blunder"},
    {"cel", "cell"},
    {"chm", "chemical"},
    {"com", "communication"},
    {"evt", "event"},
    {"fod", "food"},
    {"frm", "form"},
    {"grb", "group_biological"},
    {"grp", "group"},
    {"grs", "group_social"},
    {"hum", "human"},
    {"lme", "linear_measure"},
    {"loc", "location"},
    {"log", "location_geographical"},
    {"mea", "measure"},
    {"nat", "natural_object"},
    {"phm", "phenomenon"},
    {"plt", "plant"},
    {"pos", "possession"},
    {"prt", "part"},
    {"psy", "psychological"},
    {"qud", "quantity_definite"},
    {"qui", "quantity_indefinite"},
    {"rel", "relation"},
    {"spc", "space"},
    {"sta", "state"},
    {"tme", "time"},
}};

}  // namespace detail

inline std::string_view code(BasicSense s) {
  return detail::kSenseNames[static_cast<std::size_t>(s)].code;
}

/// Long name, e.g. "communication" for com.
inline std::string_view long_name(BasicSense s) {
  return detail::kSenseNames[static_cast<std::size_t>(s)].name;
}

inline std::optional<BasicSense> parse_basic_sense(std::string_view tag) {
  for (std::size_t i = 0; i < kBasicSenseCount; ++i) {
    if (detail::kSenseNames[i].code == tag) return static_cast<BasicSense>(i);
  }
  return std::nullopt;
}

inline BasicSense basic_sense_or_throw(std::string_view tag, std::size_t line = 0) {
  if (auto s = parse_basic_sense(tag)) return *s;
  std::string msg = "unknown basic sense '" + std::string(tag) + "'";
  if (line != 0) msg += " at line " + std::to_string(line);
  throw Error(ErrorKind::unknown_tag, msg, line);
}

/// A set of basic senses, always iterated in canonical order.
class SenseProfile {
 public:
  SenseProfile() = default;
  SenseProfile(std::initializer_list<BasicSense> senses) {
    for (auto s : senses) insert(s);
  }

  void insert(BasicSense s) { bits_ |= bit(s); }
  bool contains(BasicSense s) const { return (bits_ & bit(s)) != 0; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }
  std::uint32_t bits() const { return bits_; }

  std::vector<BasicSense> senses() const {
    std::vector<BasicSense> out;
    for (std::size_t i = 0; i < kBasicSenseCount; ++i) {
      if (bits_ & (std::uint32_t{1} << i)) out.push_back(static_cast<BasicSense>(i));
    }
    return out;
  }

  /// Space-joined tags, e.g. "art com".
  std::string render() const {
    std::string out;
    for (auto s : senses()) {
      if (!out.empty()) out += ' ';
      out += code(s);
    }
    return out;
  }

  /// Parses a whitespace-separated tag list. Empty input and duplicate tags
  /// are rejected.
  static SenseProfile parse(std::string_view text, std::size_t line = 0) {
    SenseProfile p;
    for (const auto& tok : text::split_ws(text)) {
      auto s = basic_sense_or_throw(tok, line);
      if (p.contains(s)) {
        throw Error(ErrorKind::validation,
                    "duplicate tag '" + tok + "' in profile '" + std::string(text) + "'", line);
      }
      p.insert(s);
    }
    if (p.empty()) throw Error(ErrorKind::validation, "empty sense profile", line);
    return p;
  }

  friend bool operator==(const SenseProfile&, const SenseProfile&) = default;

  // Lexicographic over the canonical tag sequence, which is also the order
  // of the rendered strings.
  friend std::strong_ordering operator<=>(const SenseProfile& a, const SenseProfile& b) {
    auto x = a.senses();
    auto y = b.senses();
    return std::lexicographical_compare_three_way(x.begin(), x.end(), y.begin(), y.end());
  }

 private:
  static std::uint32_t bit(BasicSense s) {
    return std::uint32_t{1} << static_cast<std::uint32_t>(s);
  }

  std::uint32_t bits_ = 0;
};

}  // namespace corelex
