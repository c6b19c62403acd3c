#pragma once

// Generator alphabet of Map_{g,1}: the Dehn twists a_0..a_{2g} along the
// Humphries curves and the separating twists s_1..s_{floor(g/2)}.  Words in
// these letters are reduced freely (no relations applied).

#include <compare>
#include <cstdlib>
#include <string>
#include <vector>

#include "mcg/error.hpp"

namespace mcg {

struct GenId {
  bool sep = false;  // false: a_idx, true: s_idx
  int idx = 0;

  static GenId a(int i) { return GenId{false, i}; }
  static GenId s(int h) { return GenId{true, h}; }
  friend auto operator<=>(const GenId&, const GenId&) = default;
};

inline std::string to_string(GenId g) {
  return (g.sep ? "s" : "a") + std::to_string(g.idx);
}

inline bool valid_for_genus(GenId g, int genus) {
  if (g.sep) return g.idx >= 1 && g.idx <= genus / 2;
  return g.idx >= 0 && g.idx <= 2 * genus;
}

struct McgLetter {
  GenId gen;
  int sign = 1;  // +1 or -1
  friend bool operator==(const McgLetter&, const McgLetter&) = default;
};

// A word in the twist generators, freely reduced on push.
class McgWord {
 public:
  McgWord() = default;
  McgWord(std::initializer_list<McgLetter> ls) {
    for (auto& l : ls) push(l);
  }

  bool empty() const { return ls_.empty(); }
  std::size_t size() const { return ls_.size(); }
  const std::vector<McgLetter>& letters() const { return ls_; }
  const McgLetter& operator[](std::size_t i) const { return ls_[i]; }

  void push(McgLetter l) {
    if (!ls_.empty() && ls_.back().gen == l.gen && ls_.back().sign == -l.sign)
      ls_.pop_back();
    else
      ls_.push_back(l);
  }
  void push(GenId g, int sign = 1) { push(McgLetter{g, sign}); }

  void append(const McgWord& o) {
    for (auto& l : o.ls_) push(l);
  }
  void append_inverse(const McgWord& o) {
    for (auto it = o.ls_.rbegin(); it != o.ls_.rend(); ++it)
      push(McgLetter{it->gen, -it->sign});
  }

  McgWord inverse() const {
    McgWord r;
    for (auto it = ls_.rbegin(); it != ls_.rend(); ++it)
      r.ls_.push_back(McgLetter{it->gen, -it->sign});
    return r;
  }

  friend McgWord operator*(const McgWord& a, const McgWord& b) {
    McgWord r = a;
    r.append(b);
    return r;
  }

  McgWord pow(long k) const {
    McgWord r;
    McgWord invw = k < 0 ? inverse() : McgWord{};
    for (long t = 0, a = std::abs(k); t < a; ++t) r.append(k >= 0 ? *this : invw);
    return r;
  }

  bool operator==(const McgWord&) const = default;

 private:
  std::vector<McgLetter> ls_;
};

inline McgWord word_of(GenId g, int sign = 1) {
  McgWord w;
  w.push(g, sign);
  return w;
}

// Builds a word from plain a-generator indices, e.g. {0,2,3,4} repeated.
inline McgWord a_word(const std::vector<int>& idxs, long repeat = 1) {
  McgWord w;
  for (long t = 0; t < repeat; ++t)
    for (int i : idxs) w.push(GenId::a(i));
  return w;
}

// Token syntax: a<k> or s<h>, optionally ^<exponent> (e.g. "a3^-1", "a1^4").
// Appends the expanded letters to w.
inline void append_token(McgWord& w, const std::string& tok, int genus,
                         std::size_t line = 0) {
  if (tok.size() < 2 || (tok[0] != 'a' && tok[0] != 's'))
    throw parse_error(line, "bad generator token '" + tok + "'");
  bool sep = tok[0] == 's';
  std::size_t p = 1;
  while (p < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p]))) ++p;
  if (p == 1) throw parse_error(line, "bad generator token '" + tok + "'");
  int idx = std::atoi(tok.substr(1, p - 1).c_str());
  long exp = 1;
  if (p < tok.size()) {
    if (tok[p] != '^') throw parse_error(line, "bad token suffix in '" + tok + "'");
    exp = std::atol(tok.substr(p + 1).c_str());
    if (exp == 0 && tok.substr(p + 1) != "0")
      throw parse_error(line, "bad exponent in '" + tok + "'");
  }
  GenId g{sep, idx};
  if (genus > 0 && !valid_for_genus(g, genus))
    throw parse_error(line, "generator " + to_string(g) + " out of range for genus " +
                                std::to_string(genus));
  int sign = exp >= 0 ? 1 : -1;
  for (long t = 0, a = std::labs(exp); t < a; ++t) w.push(g, sign);
}

// Comma-separated tokens, as used for conjugators in factorization files.
inline McgWord parse_conjugator(const std::string& text, int genus,
                                std::size_t line = 0) {
  McgWord w;
  std::string cur;
  for (char c : text + ",") {
    if (c == ',') {
      if (!cur.empty()) append_token(w, cur, genus, line);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  return w;
}

inline std::string to_string(const McgWord& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ",";
    s += to_string(w[i].gen);
    if (w[i].sign < 0) s += "^-1";
  }
  return s;
}

}  // namespace mcg
