#pragma once

// The faithful pi1 model of Map_{g,1}.
//
// The surface of genus g with one boundary circle is realized as the double
// cover of a disc branched at 2g+1 collinear points.  pi1 of the surface is
// the kernel of the map from the free product of 2g+1 copies of Z/2 (one
// reflection u_i per branch point) onto Z/2; that kernel is free of rank 2g
// on y_j = u_{j+1} u_1.  The chain twists a_1..a_{2g} are the lifts of the
// Artin half twists, the extra generator a_0 is the twist along one lift of
// a round curve enclosing the first four branch points, and the separating
// twist of type (h, g-h) is the lift of the squared disc twist about the
// first 2h+1 points.
//
// Everything is then rewritten in a geometric basis x_1..x_{2g} in which the
// boundary word is prod_h [x_{2h-1}, x_{2h}]  (commutator convention
// [a,b] = a^-1 b a b^-1) and the type-(h,g-h) separating twist is
// conjugation by the prefix word prod_{i<=h}[x_{2i-1}, x_{2i}] on
// x_1..x_{2h} and the identity on the rest.
//
// The defining relations of the presentation, the hyperelliptic relation
// (a_1...a_{2g})^{4g+2} = T_delta, and the homology transvection laws are
// all verified over this table by the test suite; the table itself only
// asserts a cheap structural subset at build time.

#include <optional>
#include <vector>

#include "mcg/automorphism.hpp"
#include "mcg/gens.hpp"
#include "mcg/linalg.hpp"

namespace mcg {

class TwistTable {
 public:
  explicit TwistTable(int genus);

  int genus() const { return genus_; }
  int rank() const { return 2 * genus_; }
  int num_a() const { return 2 * genus_ + 1; }
  int num_s() const { return genus_ / 2; }

  const Automorphism& twist(GenId g) const { return fwd_[slot(g)]; }
  const Automorphism& twist_inverse(GenId g) const { return inv_[slot(g)]; }
  const Automorphism& gen_auto(McgLetter l) const {
    return l.sign > 0 ? fwd_[slot(l.gen)] : inv_[slot(l.gen)];
  }

  // Curve of the twist, as a free-homotopy representative based word.
  const FreeWord& curve(GenId g) const { return curve_[slot(g)]; }

  // Homology class of c_i for nonseparating generators (zero for s_h),
  // read off the abelianized twist, sign fixed by a first-nonzero-positive
  // normalization.
  const IVec& homology_class(GenId g) const { return cls_[slot(g)]; }

  // Skew intersection pairing on H_1 in the x basis.
  const IMat& pairing() const { return pairing_; }
  Int pair(const IVec& a, const IVec& b) const { return bilinear(a, pairing_, b); }

  const FreeWord& boundary_word() const { return boundary_; }

  // x |-> d^m x d^-m, the m-th boundary twist.
  Automorphism boundary_conjugation(long m) const;

  // Left-to-right evaluation: the first letter acts first.
  Automorphism eval(const McgWord& w) const;
  // Same action applied to a single word (cheaper than building the
  // automorphism when only one image is needed).
  FreeWord apply_word(const McgWord& w, FreeWord v) const;

  bool words_equal(const McgWord& a, const McgWord& b) const {
    return eval(a) == eval(b);
  }

  // m with f == boundary_conjugation(m), if any.
  std::optional<long> detect_boundary_power(const Automorphism& f) const;

  bool fixes_boundary(const Automorphism& f) const {
    return f.apply(boundary_) == boundary_;
  }

  void validate_word(const McgWord& w) const;

 private:
  int slot(GenId g) const;

  int genus_;
  std::vector<Automorphism> fwd_, inv_;
  std::vector<FreeWord> curve_;
  std::vector<IVec> cls_;
  IMat pairing_;
  FreeWord boundary_;
};

}  // namespace mcg
