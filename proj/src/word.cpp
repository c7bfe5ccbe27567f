#include "genpos/word.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace genpos {

Word Word::repeated(int letter, int count) {
  if (count < 0) throw std::invalid_argument("repetition count must be >= 0");
  return Word{std::vector<int>(static_cast<size_t>(count), letter)};
}

Word Word::parse(const std::string& text) {
  Word w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t pos = 0;
    int letter = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad word letter: " + item);
    w.letters.push_back(letter);
  }
  return w;
}

Word Word::concat(const Word& tail) const {
  Word w = *this;
  w.letters.insert(w.letters.end(), tail.letters.begin(), tail.letters.end());
  return w;
}

Word Word::appended(int letter) const {
  Word w = *this;
  w.letters.push_back(letter);
  return w;
}

bool Word::is_prefix_of(const Word& other) const {
  if (size() > other.size()) return false;
  return std::equal(letters.begin(), letters.end(), other.letters.begin());
}

std::string Word::to_string() const {
  std::string s;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(letters[i]);
  }
  return s;
}

bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }

bool lex_less(const Word& a, const Word& b) {
  return std::lexicographical_compare(a.letters.begin(), a.letters.end(),
                                      b.letters.begin(), b.letters.end());
}

MeetResult word_meet(const Word& a, const Word& b) {
  size_t n = std::min(a.size(), b.size());
  size_t i = 0;
  while (i < n && a.at(i) == b.at(i)) ++i;
  MeetResult r;
  r.meet.letters.assign(a.letters.begin(), a.letters.begin() + static_cast<long>(i));
  r.incomparable = (i < a.size() && i < b.size());
  return r;
}

Address Address::normalized() const {
  Address a = *this;
  while (!a.prefix.empty() && a.prefix.letters.back() == a.tail)
    a.prefix.letters.pop_back();
  return a;
}

Word Address::truncated(int depth) const {
  Word w;
  w.letters.reserve(static_cast<size_t>(depth));
  for (int i = 0; i < depth; ++i) w.letters.push_back(letter_at(static_cast<size_t>(i)));
  return w;
}

bool same_address(const Address& a, const Address& b) {
  Address na = a.normalized(), nb = b.normalized();
  return na.prefix == nb.prefix && na.tail == nb.tail;
}

}  // namespace genpos
