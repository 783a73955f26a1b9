#include "invsem/word.hpp"

#include <algorithm>
#include <sstream>

namespace invsem {

Word Word::starred() const {
  Word out;
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    out.letters.push_back({it->gen, !it->starred});
  return out;
}

Word Word::concat(const Word& right) const {
  Word out = *this;
  out.letters.insert(out.letters.end(), right.letters.begin(), right.letters.end());
  return out;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& gen_names) {
  if (w.is_unit()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) s += " ";
    s += gen_names.at(w.letters[i].gen);
    if (w.letters[i].starred) s += "*";
  }
  return s;
}

std::optional<Word> parse_word(const std::string& text,
                               const std::vector<std::string>& gen_names) {
  Word w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    bool starred = false;
    if (!tok.empty() && tok.back() == '*') {
      starred = true;
      tok.pop_back();
    }
    auto it = std::find(gen_names.begin(), gen_names.end(), tok);
    if (it == gen_names.end()) return std::nullopt;
    w.letters.push_back(
        {static_cast<std::uint32_t>(it - gen_names.begin()), starred});
  }
  return w;
}

}  // namespace invsem
