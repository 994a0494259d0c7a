#include "hypcube/word.hpp"

#include <algorithm>
#include <sstream>

#include "hypcube/error.hpp"

namespace hypcube {

Letter Letter::from_signed(int s) {
  if (s == 0) fail(ErrorCode::InvalidParameter, "letter index 0 is not a generator");
  return s > 0 ? Letter{s - 1, false} : Letter{-s - 1, true};
}

Word Word::from_signed(std::span<const int> signed_letters) {
  std::vector<Letter> out;
  out.reserve(signed_letters.size());
  for (int s : signed_letters) out.push_back(Letter::from_signed(s));
  return Word(std::move(out));
}

Word Word::parse(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::vector<Letter> out;
  while (in >> tok) {
    bool inv = false;
    if (tok.size() >= 3 && tok.compare(tok.size() - 3, 3, "^-1") == 0) {
      inv = true;
      tok.resize(tok.size() - 3);
    }
    if (tok.size() < 2 || (tok[0] != 'x' && tok[0] != 'X'))
      fail(ErrorCode::InvalidParameter, "bad letter '" + tok + "'");
    if (tok[0] == 'X') inv = !inv;
    int idx = 0;
    try {
      idx = std::stoi(tok.substr(1));
    } catch (...) {
      fail(ErrorCode::InvalidParameter, "bad letter '" + tok + "'");
    }
    if (idx < 1) fail(ErrorCode::InvalidParameter, "generator indices start at 1");
    out.push_back({idx - 1, inv});
  }
  return Word(std::move(out));
}

Word Word::inverse() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverted());
  return Word(std::move(out));
}

Word Word::reduced() const {
  std::vector<Letter> out;
  out.reserve(letters_.size());
  for (const Letter& l : letters_) {
    if (!out.empty() && out.back() == l.inverted())
      out.pop_back();
    else
      out.push_back(l);
  }
  return Word(std::move(out));
}

Word Word::cyclically_reduced() const {
  Word w = reduced();
  std::size_t lo = 0, hi = w.letters_.size();
  while (hi - lo >= 2 && w.letters_[lo] == w.letters_[hi - 1].inverted()) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(w.letters_.begin() + static_cast<long>(lo),
                                  w.letters_.begin() + static_cast<long>(hi)));
}

bool Word::is_reduced() const {
  for (std::size_t i = 1; i < letters_.size(); ++i)
    if (letters_[i] == letters_[i - 1].inverted()) return false;
  return true;
}

bool Word::is_cyclically_reduced() const {
  if (!is_reduced()) return false;
  return letters_.size() < 2 || letters_.front() != letters_.back().inverted();
}

Word Word::primitive_root() const {
  const std::size_t n = letters_.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = letters_[i] == letters_[i - p];
    if (periodic)
      return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + static_cast<long>(p)));
  }
  return *this;
}

Word Word::power(int k) const {
  if (k < 0) return inverse().power(-k);
  std::vector<Letter> out;
  out.reserve(letters_.size() * static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return Word(std::move(out)).reduced();
}

Word Word::rotated(std::size_t shift) const {
  if (letters_.empty()) return *this;
  std::vector<Letter> out(letters_);
  std::rotate(out.begin(), out.begin() + static_cast<long>(shift % out.size()), out.end());
  return Word(std::move(out));
}

std::vector<int> Word::to_signed() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const Letter& l : letters_) out.push_back(l.signed_index());
  return out;
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ' ';
    s += 'x' + std::to_string(letters_[i].gen + 1);
    if (letters_[i].inverse) s += "^-1";
  }
  return s;
}

int Word::max_generator() const {
  int m = -1;
  for (const Letter& l : letters_) m = std::max(m, l.gen);
  return m;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Letter> out(a.letters_);
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return Word(std::move(out)).reduced();
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

namespace {

std::vector<Letter> alphabet(int rank) {
  std::vector<Letter> out;
  for (int g = 0; g < rank; ++g) {
    out.push_back({g, false});
    out.push_back({g, true});
  }
  return out;
}

}  // namespace

std::vector<Word> reduced_ball(int rank, int radius) {
  std::vector<Word> all{Word()};
  if (rank <= 0) return all;
  const auto letters = alphabet(rank);
  std::vector<std::vector<Letter>> frontier{{}};
  for (int r = 0; r < radius; ++r) {
    std::vector<std::vector<Letter>> next;
    for (const auto& w : frontier) {
      for (const Letter& l : letters) {
        if (!w.empty() && w.back() == l.inverted()) continue;
        auto v = w;
        v.push_back(l);
        next.push_back(std::move(v));
      }
    }
    for (const auto& w : next) all.emplace_back(w);
    frontier = std::move(next);
  }
  return all;
}

std::vector<Word> cyclically_reduced_words(int rank, int max_length) {
  std::vector<Word> out;
  for (Word& w : reduced_ball(rank, max_length))
    if (!w.empty() && w.is_cyclically_reduced()) out.push_back(std::move(w));
  return out;
}

}  // namespace hypcube
