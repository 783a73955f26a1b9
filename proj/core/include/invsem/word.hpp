#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace invsem {

struct WordLetter {
  std::uint32_t gen = 0;
  bool starred = false;
  bool operator==(const WordLetter&) const = default;
  auto operator<=>(const WordLetter&) const = default;
};

/// Product of generators and their stars; the empty word is the unit. The
/// leftmost letter is the outermost factor, so evaluation applies letters
/// right to left.
struct Word {
  std::vector<WordLetter> letters;

  static Word unit() { return {}; }
  static Word gen(std::uint32_t g, bool starred = false) { return {{{g, starred}}}; }

  bool is_unit() const { return letters.empty(); }
  std::size_t length() const { return letters.size(); }
  Word starred() const;
  Word concat(const Word& right) const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;
};

/// "d0* d1" with the declared generator names; "1" (or "") is the unit word.
std::string word_to_string(const Word& w, const std::vector<std::string>& gen_names);
std::optional<Word> parse_word(const std::string& text, const std::vector<std::string>& gen_names);

}  // namespace invsem
