#pragma once

// Freely reduced words in a finite-rank free group.  A letter is a nonzero
// int: +i stands for the generator x_i, -i for its inverse.  Every FreeWord
// is reduced by construction; reduction happens on push.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <span>
#include <vector>

#include "mcg/error.hpp"

namespace mcg {

using Letter = std::int32_t;

class FreeWord {
 public:
  FreeWord() = default;
  FreeWord(std::initializer_list<Letter> ls) {
    for (Letter l : ls) push(l);
  }

  static FreeWord reduce(std::span<const Letter> raw) {
    FreeWord w;
    w.ls_.reserve(raw.size());
    for (Letter l : raw) w.push(l);
    return w;
  }

  static FreeWord generator(int i, int sign = 1) {
    FreeWord w;
    w.ls_.push_back(sign >= 0 ? i : -i);
    return w;
  }

  bool empty() const { return ls_.empty(); }
  std::size_t size() const { return ls_.size(); }
  const std::vector<Letter>& letters() const { return ls_; }
  Letter operator[](std::size_t i) const { return ls_[i]; }

  void push(Letter l) {
    if (!ls_.empty() && ls_.back() == -l)
      ls_.pop_back();
    else
      ls_.push_back(l);
  }

  void append(const FreeWord& o) {
    for (Letter l : o.ls_) push(l);
  }
  void append_inverse(const FreeWord& o) {
    for (auto it = o.ls_.rbegin(); it != o.ls_.rend(); ++it) push(-*it);
  }

  FreeWord inverse() const {
    FreeWord r;
    r.ls_.reserve(ls_.size());
    for (auto it = ls_.rbegin(); it != ls_.rend(); ++it) r.ls_.push_back(-*it);
    return r;
  }

  FreeWord pow(long k) const {
    FreeWord r;
    const FreeWord& base = *this;
    FreeWord invw = k < 0 ? inverse() : FreeWord{};
    long a = std::abs(k);
    for (long t = 0; t < a; ++t) r.append(k >= 0 ? base : invw);
    return r;
  }

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b) {
    FreeWord r = a;
    r.append(b);
    return r;
  }

  // w^-1 * x * w, reduced
  FreeWord conjugated_by(const FreeWord& w) const {
    FreeWord r = w.inverse();
    r.append(*this);
    r.append(w);
    return r;
  }

  bool operator==(const FreeWord&) const = default;

  // Strips matched ends: *this == wing * core * wing^-1 with core cyclically
  // reduced.
  void cyclic_reduce(FreeWord* wing = nullptr) {
    std::size_t a = 0, b = ls_.size();
    while (b - a >= 2 && ls_[a] == -ls_[b - 1]) {
      ++a;
      --b;
    }
    if (wing) {
      wing->ls_.assign(ls_.begin(), ls_.begin() + a);
    }
    ls_.erase(ls_.begin() + b, ls_.end());
    ls_.erase(ls_.begin(), ls_.begin() + a);
  }

  // Canonical representative of the conjugacy class of *this together with
  // its inverse: least cyclic rotation of the reduced cyclic word, over the
  // word and its inverse.  Used to decide whether two simple closed curves
  // are freely homotopic up to orientation.
  FreeWord canonical_cyclic_unoriented() const {
    FreeWord c = *this;
    c.cyclic_reduce();
    FreeWord a = least_rotation(c.ls_);
    FreeWord b = least_rotation(c.inverse().ls_);
    return std::lexicographical_compare(a.ls_.begin(), a.ls_.end(),
                                        b.ls_.begin(), b.ls_.end())
               ? a
               : b;
  }

 private:
  static FreeWord least_rotation(const std::vector<Letter>& v) {
    FreeWord r;
    std::size_t n = v.size();
    if (n == 0) return r;
    // Booth's algorithm on the doubled sequence.
    std::size_t best = 0;
    for (std::size_t cand = 1; cand < n; ++cand) {
      for (std::size_t k = 0; k < n; ++k) {
        Letter x = v[(best + k) % n], y = v[(cand + k) % n];
        if (x != y) {
          if (y < x) best = cand;
          break;
        }
      }
    }
    r.ls_.reserve(n);
    for (std::size_t k = 0; k < n; ++k) r.ls_.push_back(v[(best + k) % n]);
    return r;
  }

  std::vector<Letter> ls_;
};

}  // namespace mcg
