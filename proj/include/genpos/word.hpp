#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace genpos {

/// Finite multiindex over the alphabet {1..m}. The empty word denotes the
/// identity composition.
struct Word {
  std::vector<int> letters;

  Word() = default;
  explicit Word(std::vector<int> l) : letters(std::move(l)) {}

  static Word single(int letter) { return Word{{letter}}; }
  /// Word of `count` repetitions of `letter`.
  static Word repeated(int letter, int count);
  /// Parses a comma-separated list such as "1,2,1". Empty string -> empty word.
  static Word parse(const std::string& text);

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  int at(size_t i) const { return letters[i]; }

  Word concat(const Word& tail) const;
  Word appended(int letter) const;
  bool is_prefix_of(const Word& other) const;

  std::string to_string() const;
};

bool operator==(const Word& a, const Word& b);
bool lex_less(const Word& a, const Word& b);

struct MeetResult {
  Word meet;
  bool incomparable = false;
};

/// Longest common prefix of a and b; incomparable is true iff neither word is
/// a prefix of the other.
MeetResult word_meet(const Word& a, const Word& b);

/// Point of the coding space, represented as a finite prefix followed by one
/// letter repeated forever.
struct Address {
  Word prefix;
  int tail = 1;

  static Address constant(int letter) { return Address{Word{}, letter}; }

  /// Letter at position i (0-based) of the infinite expansion.
  int letter_at(size_t i) const {
    return i < prefix.size() ? prefix.at(i) : tail;
  }

  /// Canonical form: trailing prefix letters equal to the tail are dropped,
  /// so equal expansions compare equal structurally.
  Address normalized() const;

  /// First `depth` letters as a word.
  Word truncated(int depth) const;
};

bool same_address(const Address& a, const Address& b);

}  // namespace genpos
