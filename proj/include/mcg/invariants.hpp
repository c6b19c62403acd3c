#pragma once

// Topological invariants of the Lefschetz fibration encoded by a positive
// factorization: Euler characteristic, section square, fiber census, and the
// signature of the total space from the triangular intersection matrix of
// Lefschetz thimbles.  All arithmetic exact.

#include <map>

#include "mcg/factorization.hpp"
#include "mcg/linalg.hpp"

namespace mcg {

struct FiberCensus {
  long total = 0;
  long irreducible = 0;
  std::map<int, long> separating;  // type h -> count

  friend bool operator==(const FiberCensus&, const FiberCensus&) = default;
};

struct SignatureReport {
  long r = 0;
  long ker_rank = 0;   // dim Ker(A)
  long signature = 0;  // |signature| <= ker_rank
  FiberCensus census;
  // The kernel recipe is derived for irreducible vanishing cycles; outputs
  // for factorizations with separating cycles are marked extrapolated.
  bool recipe_extrapolated = false;
};

long euler_characteristic(const Factorization& F);
inline long euler_characteristic(long r, int genus) { return 4 - 4 * genus + r; }

// -m for product(F) = T_delta^m; error when the product is no boundary power.
long section_square(const TwistTable& t, const Factorization& F);

FiberCensus census(const Factorization& F);

// Homology class of the factor's vanishing cycle, abelianize(conj) applied
// to the base class (zero for separating bases).
IVec curve_class(const TwistTable& t, const Factor& f);

// The r x r upper-triangular matrix with q_ii = -1 and q_ij = delta_i.delta_j
// for i < j; its antisymmetrization is the intersection pairing of the
// vanishing cycles.
IMat q_matrix(const TwistTable& t, const Factorization& F);

// Signature by the recipe alone, without the boundary-power precondition;
// used by the move-invariance property suites.
SignatureReport signature_recipe(const TwistTable& t, const Factorization& F);

// Checked variant: requires product(F) to be a boundary power.
SignatureReport signature(const TwistTable& t, const Factorization& F);

// -((g+1)/(2g+1)) s_0 + sum_h (4h(g-h)/(2g+1) - 1) s_h; errors unless the
// result is an integer (which signals misuse on non-hyperelliptic input).
long endo_signature(const FiberCensus& c, int genus);

// 2g - rank of the span of the vanishing-cycle classes (b_1 of the total
// space of a fibration over the sphere with a section).
long first_betti(const TwistTable& t, const Factorization& F);

}  // namespace mcg
