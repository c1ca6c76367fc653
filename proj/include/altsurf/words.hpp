#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace altsurf {

/// Exact multiple of 1/4. Every Euler-characteristic quantity in the
/// library is kept in this form.
class Quarters {
 public:
  constexpr Quarters() = default;

  static constexpr Quarters from_quarters(std::int64_t q) noexcept { return Quarters(q); }
  static constexpr Quarters whole(std::int64_t v) noexcept { return Quarters(4 * v); }

  constexpr std::int64_t quarters() const noexcept { return q_; }
  constexpr bool is_integer() const noexcept { return q_ % 4 == 0; }
  std::int64_t to_integer() const;

  /// "-1/4", "-1", "3/2", "0".
  std::string to_string() const;

  constexpr Quarters& operator+=(Quarters o) noexcept {
    q_ += o.q_;
    return *this;
  }
  constexpr Quarters& operator-=(Quarters o) noexcept {
    q_ -= o.q_;
    return *this;
  }
  friend constexpr Quarters operator+(Quarters a, Quarters b) noexcept { return a += b; }
  friend constexpr Quarters operator-(Quarters a, Quarters b) noexcept { return a -= b; }
  friend constexpr Quarters operator-(Quarters a) noexcept { return Quarters(-a.q_); }
  friend constexpr auto operator<=>(const Quarters&, const Quarters&) = default;

 private:
  constexpr explicit Quarters(std::int64_t q) noexcept : q_(q) {}
  std::int64_t q_ = 0;
};

/// A cyclic word over {B, S}. Any text is accepted; validity is a separate
/// predicate.
class BSWord {
 public:
  BSWord() = default;
  /// Throws std::invalid_argument on letters other than B and S.
  explicit BSWord(std::string_view letters);

  const std::string& str() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  int b_count() const noexcept;
  int s_count() const noexcept;

  BSWord rotated(std::size_t k) const;

  friend bool operator==(const BSWord&, const BSWord&) = default;

 private:
  std::string letters_;
};

/// Word-level conditions from the standard-position property list. The
/// numeric value is the item number in that list.
enum class WordFault : int {
  none = 0,
  empty = 7,
  unpaired_b = 8,
  only_s = 9,
  too_short = 10,
};

struct WordCheck {
  WordFault fault = WordFault::none;
  std::string reason;

  bool ok() const noexcept { return fault == WordFault::none; }
  int item() const noexcept { return static_cast<int>(fault); }
};

/// Checks, in order: empty (7), only S (9), B's not in consecutive pairs
/// under cyclic reading (8), length below four (10).
WordCheck check_word(const BSWord& w);
inline bool is_valid(const BSWord& w) { return check_word(w).ok(); }

/// 1 - s0/4 - b0/4. Throws std::invalid_argument on an invalid word.
Quarters contribution(const BSWord& w);

enum class WordClass { ignorable_bbbb, c2_bbss, c1 };

std::string_view to_string(WordClass c) noexcept;

/// Throws std::invalid_argument on an invalid word.
WordClass classify(const BSWord& w);

/// Least rotation with B < S.
BSWord canonical(const BSWord& w);

}  // namespace altsurf
