#pragma once

// Positive factorizations: ordered tuples of positive Dehn twists, each
// stored as a base generator plus a conjugating mapping-class word.  The
// factor (b)_w is the twist along w(curve(b)); its word is w^-1 b w.

#include <vector>

#include "mcg/twist_table.hpp"

namespace mcg {

struct Factor {
  GenId base;
  McgWord conj;

  bool bare() const { return conj.empty(); }
  friend bool operator==(const Factor&, const Factor&) = default;
};

// w^-1 * base * w
McgWord word_of_factor(const Factor& f);

struct Factorization {
  int genus = 3;
  std::vector<Factor> factors;

  std::size_t size() const { return factors.size(); }
  const Factor& operator[](std::size_t i) const { return factors[i]; }
  Factor& operator[](std::size_t i) { return factors[i]; }

  McgWord word() const {
    McgWord w;
    for (auto& f : factors) w.append(word_of_factor(f));
    return w;
  }

  void push(GenId g) { factors.push_back(Factor{g, {}}); }
  void append(const Factorization& o) {
    require(genus == o.genus, "append: genus mismatch");
    factors.insert(factors.end(), o.factors.begin(), o.factors.end());
  }
};

Factorization bare_factorization(int genus, const std::vector<int>& a_indices);

// Product of the factor twists, first factor acting first.
Automorphism product(const TwistTable& t, const Factorization& F);
// Same value computed by chunked parallel reduction; the serial version is
// the reference implementation.
Automorphism product_parallel(const TwistTable& t, const Factorization& F);

// The twist automorphism of one factor.
Automorphism twist_of(const TwistTable& t, const Factor& f);

// The factor's curve as a based word: conj applied to the base curve.
FreeWord curve_of(const TwistTable& t, const Factor& f);

// Two factors are equal iff their curves are freely homotopic up to
// orientation; decided on canonical cyclic words.
bool factor_equal(const TwistTable& t, const Factor& a, const Factor& b);

bool factorization_equal(const TwistTable& t, const Factorization& a,
                         const Factorization& b);

// tau_i . tau_{i+1}  ->  tau_{i+1} . (tau_i)_{tau_{i+1}}     (0-based i)
Factorization hurwitz_right(const Factorization& F, std::size_t i);
// tau_i . tau_{i+1}  ->  (tau_{i+1})_{tau_i^-1} . tau_i
Factorization hurwitz_left(const Factorization& F, std::size_t i);

Factorization global_conjugate(const Factorization& F, const McgWord& phi);

// F1 then F2 (the fiber sum of the corresponding fibrations).
Factorization fiber_sum(const Factorization& F1, const Factorization& F2);

}  // namespace mcg
