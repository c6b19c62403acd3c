#pragma once

// Exact integer/rational matrices for the homology and signature work.
// Scalars are GMP; no floating point is used anywhere in this project.

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "mcg/automorphism.hpp"
#include "mcg/error.hpp"

namespace mcg {

using Int = mpz_class;
using Rat = mpq_class;
using IVec = std::vector<Int>;

struct IMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c) {}

  Int& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  const Int& operator()(int i, int j) const {
    return a[static_cast<std::size_t>(i) * cols + j];
  }

  static IMat identity(int n) {
    IMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  bool operator==(const IMat&) const = default;
};

IMat mul(const IMat& A, const IMat& B);
IMat transpose(const IMat& A);
IVec mul(const IMat& A, const IVec& v);

// v^t A w
Int bilinear(const IVec& v, const IMat& A, const IVec& w);

// Columns of the returned matrix form a primitive integer basis of
// { v : A v = 0 }.
IMat kernel_basis(const IMat& A);

// K^t Q K
IMat restrict_form(const IMat& Q, const IMat& K);

struct SymDiag {
  long positives = 0;
  long negatives = 0;
  long rank() const { return positives + negatives; }
  long signature() const { return positives - negatives; }
};

// Signature of a symmetric integer matrix by congruence diagonalization over
// the rationals.  A zero diagonal with a nonzero off-diagonal entry is split
// as a hyperbolic pair (+1, -1).
SymDiag symmetric_diagonalize(const IMat& S);

// Column j is the exponent vector of the image of generator j+1, so
// abelianize(compose(f,g)) == mul(abelianize(g), abelianize(f)).
IMat abelianize(const Automorphism& f);

long rank_rational(const IMat& A);

}  // namespace mcg
