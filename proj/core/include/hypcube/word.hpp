#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hypcube {

/// A letter of a free group: generator index `gen` (0-based) or its inverse.
struct Letter {
  int gen = 0;
  bool inverse = false;

  Letter inverted() const { return {gen, !inverse}; }
  int signed_index() const { return inverse ? -(gen + 1) : gen + 1; }
  static Letter from_signed(int s);

  auto operator<=>(const Letter&) const = default;
};

/// Word in the free generators x1, x2, ... (printed 1-based).
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  static Word from_signed(std::span<const int> signed_letters);
  /// Parses "x1 x2^-1 x3" (whitespace separated; inverse marked by ^-1 or a capital X).
  static Word parse(const std::string& text);

  std::span<const Letter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  /// Free reduction.
  Word reduced() const;
  /// Free reduction followed by removal of cancelling first/last letters.
  Word cyclically_reduced() const;
  bool is_reduced() const;
  bool is_cyclically_reduced() const;
  /// Shortest u with this == u^k (for a cyclically reduced word).
  Word primitive_root() const;
  Word power(int k) const;
  Word rotated(std::size_t shift) const;

  std::vector<int> to_signed() const;
  std::string to_string() const;
  int max_generator() const;

  friend Word operator*(const Word& a, const Word& b);
  auto operator<=>(const Word&) const = default;
  bool operator==(const Word&) const = default;

 private:
  std::vector<Letter> letters_;
};

/// Shortlex order, used to pick canonical representatives.
bool shortlex_less(const Word& a, const Word& b);

/// All reduced words of length <= radius over `rank` generators, in shortlex order.
std::vector<Word> reduced_ball(int rank, int radius);

/// All cyclically reduced nontrivial words of length <= max_length, every
/// rotation included.
std::vector<Word> cyclically_reduced_words(int rank, int max_length);

}  // namespace hypcube
