#pragma once

// Endomorphisms of a free group given by generator images.  All the
// automorphisms handled here come from mapping classes or braids, so they are
// invertible; invertibility is witnessed by composing with an explicitly
// constructed candidate inverse rather than enforced per object.

#include <vector>

#include "mcg/error.hpp"
#include "mcg/free_word.hpp"

namespace mcg {

class Automorphism {
 public:
  Automorphism() : rank_(0) {}
  Automorphism(int rank, std::vector<FreeWord> images)
      : rank_(rank), im_(std::move(images)) {
    require(static_cast<int>(im_.size()) == rank_, "image count != rank");
  }

  static Automorphism identity(int rank) {
    std::vector<FreeWord> im;
    im.reserve(rank);
    for (int i = 1; i <= rank; ++i) im.push_back(FreeWord::generator(i));
    return Automorphism(rank, std::move(im));
  }

  int rank() const { return rank_; }
  const FreeWord& image(int i) const { return im_[i - 1]; }
  void set_image(int i, FreeWord w) { im_[i - 1] = std::move(w); }
  const std::vector<FreeWord>& images() const { return im_; }

  bool is_identity() const {
    for (int i = 1; i <= rank_; ++i) {
      const auto& w = im_[i - 1];
      if (w.size() != 1 || w[0] != i) return false;
    }
    return true;
  }

  // Substitutes generator images into w, reducing as it goes.
  FreeWord apply(const FreeWord& w) const {
    FreeWord r;
    const std::size_t cap = word_cap();
    for (Letter l : w.letters()) {
      require(l != 0 && std::abs(l) <= rank_, "letter index out of range");
      const FreeWord& g = im_[std::abs(l) - 1];
      if (l > 0) {
        r.append(g);
      } else {
        r.append_inverse(g);
      }
      if (r.size() > cap) throw word_cap_error(cap);
    }
    return r;
  }

  bool operator==(const Automorphism&) const = default;

 private:
  int rank_;
  std::vector<FreeWord> im_;
};

// f followed by g (f acts first).  As maps: x |-> g(f(x)).
inline Automorphism compose(const Automorphism& f, const Automorphism& g) {
  require(f.rank() == g.rank(), "compose: rank mismatch");
  std::vector<FreeWord> im;
  im.reserve(f.rank());
  for (int i = 1; i <= f.rank(); ++i) im.push_back(g.apply(f.image(i)));
  return Automorphism(f.rank(), std::move(im));
}

// The automorphism x |-> w^-1 x w when on_right, else x |-> w x w^-1.
inline Automorphism conjugation_by(int rank, const FreeWord& w, bool on_right) {
  std::vector<FreeWord> im;
  im.reserve(rank);
  for (int i = 1; i <= rank; ++i) {
    FreeWord x = FreeWord::generator(i);
    im.push_back(on_right ? x.conjugated_by(w) : x.conjugated_by(w.inverse()));
  }
  return Automorphism(rank, std::move(im));
}

inline bool verify_inverse(const Automorphism& f, const Automorphism& g) {
  return compose(f, g).is_identity() && compose(g, f).is_identity();
}

}  // namespace mcg
