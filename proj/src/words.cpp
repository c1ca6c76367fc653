#include "altsurf/words.hpp"

#include <algorithm>
#include <stdexcept>

namespace altsurf {

std::int64_t Quarters::to_integer() const {
  if (!is_integer()) throw std::domain_error("value " + to_string() + " is not an integer");
  return q_ / 4;
}

std::string Quarters::to_string() const {
  std::int64_t num = q_;
  std::int64_t den = 4;
  while (den > 1 && num % 2 == 0) {
    num /= 2;
    den /= 2;
  }
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

BSWord::BSWord(std::string_view letters) : letters_(letters) {
  for (char c : letters_) {
    if (c != 'B' && c != 'S') throw std::invalid_argument("word letter must be B or S: " + letters_);
  }
}

int BSWord::b_count() const noexcept {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'B'));
}

int BSWord::s_count() const noexcept {
  return static_cast<int>(std::count(letters_.begin(), letters_.end(), 'S'));
}

BSWord BSWord::rotated(std::size_t k) const {
  BSWord out = *this;
  if (!out.letters_.empty())
    std::rotate(out.letters_.begin(), out.letters_.begin() + static_cast<std::ptrdiff_t>(k % size()),
                out.letters_.end());
  return out;
}

WordCheck check_word(const BSWord& w) {
  if (w.empty()) return {WordFault::empty, "word is empty"};
  const int b = w.b_count();
  if (b == 0) return {WordFault::only_s, "word consists only of S"};

  // Every maximal cyclic run of B's must have even length.
  const std::string& s = w.str();
  const std::size_t n = s.size();
  if (b % 2 != 0) return {WordFault::unpaired_b, "odd number of B's"};
  if (b != static_cast<int>(n)) {
    const std::size_t start = s.find('S');
    int run = 0;
    for (std::size_t i = 1; i <= n; ++i) {
      if (s[(start + i) % n] == 'B') {
        ++run;
      } else {
        if (run % 2 != 0) return {WordFault::unpaired_b, "B's not in consecutive pairs"};
        run = 0;
      }
    }
  }
  if (n < 4) return {WordFault::too_short, "word shorter than four letters"};
  return {};
}

Quarters contribution(const BSWord& w) {
  if (const auto c = check_word(w); !c.ok())
    throw std::invalid_argument("contribution of invalid word " + w.str() + ": " + c.reason);
  return Quarters::from_quarters(4 - static_cast<std::int64_t>(w.size()));
}

std::string_view to_string(WordClass c) noexcept {
  switch (c) {
    case WordClass::ignorable_bbbb: return "BBBB";
    case WordClass::c2_bbss: return "C2";
    case WordClass::c1: return "C1";
  }
  return "?";
}

WordClass classify(const BSWord& w) {
  if (const auto c = check_word(w); !c.ok())
    throw std::invalid_argument("classify of invalid word " + w.str() + ": " + c.reason);
  if (w.size() == 4) return w.s_count() == 0 ? WordClass::ignorable_bbbb : WordClass::c2_bbss;
  return WordClass::c1;
}

BSWord canonical(const BSWord& w) {
  BSWord best = w;
  for (std::size_t k = 1; k < w.size(); ++k) {
    BSWord r = w.rotated(k);
    if (r.str() < best.str()) best = std::move(r);
  }
  return best;
}

}  // namespace altsurf
