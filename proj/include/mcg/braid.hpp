#pragma once

// Word problem in B_n via the (faithful) Artin action on the free group F_n,
// plus the specific full-twist decompositions used by the R_n factorization.

#include <vector>

#include "mcg/automorphism.hpp"
#include "mcg/gens.hpp"

namespace mcg {

struct BraidWord {
  int strands = 2;
  std::vector<std::pair<int, int>> letters;  // (index 1..strands-1, sign)

  void push(int i, int sign = 1) { letters.emplace_back(i, sign); }
  void append(const BraidWord& o) {
    for (auto& l : o.letters) letters.push_back(l);
  }
  BraidWord operator*(const BraidWord& o) const {
    BraidWord r = *this;
    r.append(o);
    return r;
  }
  BraidWord pow(long k) const;
  std::size_t size() const { return letters.size(); }
};

// sigma_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i, extended left-to-right.
Automorphism artin_auto(const BraidWord& b);

bool braid_equal(const BraidWord& a, const BraidWord& b);

// (x_1 ... x_{n-1})^n, the full twist Delta^2 of B_n.
BraidWord full_twist(int n);

struct RnBraidParts {
  BraidWord a1;  // (x_1...x_{n-1})^n
  BraidWord a2;  // (x_{n+1}...x_{2g})^{2g-n+1}
  BraidWord b1;  // prod_{i=n..1} (x_i...x_{i+2g-n})
  BraidWord b2;  // prod_{i=2g-n+1..1} (x_i...x_{i+n-1})
};

// Requires g >= 3 and 1 < n < 2g; the products are taken with the outer
// index descending, ascending runs inside each block.
RnBraidParts build_rn_braid_parts(int g, int n);

// Strand-to-twist substitution x_i -> a_i.
McgWord lift_to_mcg(const BraidWord& b);

}  // namespace mcg
