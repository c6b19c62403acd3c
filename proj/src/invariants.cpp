#include "mcg/invariants.hpp"

#include "mcg/parallel.hpp"

namespace mcg {

long euler_characteristic(const Factorization& F) {
  return euler_characteristic(static_cast<long>(F.size()), F.genus);
}

long section_square(const TwistTable& t, const Factorization& F) {
  auto m = t.detect_boundary_power(product(t, F));
  require(m.has_value(),
          "section_square: product is not a power of the boundary twist");
  return -*m;
}

FiberCensus census(const Factorization& F) {
  FiberCensus c;
  c.total = static_cast<long>(F.size());
  for (auto& f : F.factors) {
    if (f.base.sep)
      ++c.separating[f.base.idx];
    else
      ++c.irreducible;
  }
  return c;
}

IVec curve_class(const TwistTable& t, const Factor& f) {
  IVec base = t.homology_class(f.base);
  if (f.conj.empty()) return base;
  IMat M = IMat::identity(t.rank());
  for (auto& l : f.conj.letters()) M = mul(abelianize(t.gen_auto(l)), M);
  return mul(M, base);
}

IMat q_matrix(const TwistTable& t, const Factorization& F) {
  const int r = static_cast<int>(F.size());
  std::vector<IVec> cls(r);
  par::for_index(
      r, [&](std::size_t i) { cls[i] = curve_class(t, F[i]); }, 4);
  IMat Q(r, r);
  par::for_index(
      r,
      [&](std::size_t i) {
        Q(i, i) = -1;
        for (int j = static_cast<int>(i) + 1; j < r; ++j)
          Q(i, j) = t.pair(cls[i], cls[j]);
      },
      8);
  return Q;
}

SignatureReport signature_recipe(const TwistTable& t, const Factorization& F) {
  SignatureReport rep;
  rep.r = static_cast<long>(F.size());
  rep.census = census(F);
  rep.recipe_extrapolated = !rep.census.separating.empty();
  if (F.size() == 0) return rep;

  IMat Q = q_matrix(t, F);
  IMat A(Q.rows, Q.cols);
  for (int i = 0; i < Q.rows; ++i)
    for (int j = 0; j < Q.cols; ++j) A(i, j) = Q(i, j) - Q(j, i);
  IMat K = kernel_basis(A);
  rep.ker_rank = K.cols;
  if (K.cols == 0) return rep;
  IMat Qk = restrict_form(Q, K);
  // the restriction to Ker A is symmetric; symmetrize explicitly so the
  // diagonalization sees exact symmetric input
  for (int i = 0; i < Qk.rows; ++i)
    for (int j = i + 1; j < Qk.cols; ++j) {
      require(Qk(i, j) == Qk(j, i), "Q restricted to Ker A must be symmetric");
    }
  SymDiag d = symmetric_diagonalize(Qk);
  rep.signature = d.signature();
  return rep;
}

SignatureReport signature(const TwistTable& t, const Factorization& F) {
  auto m = t.detect_boundary_power(product(t, F));
  require(m.has_value(),
          "signature: product is not a boundary power (no section)");
  return signature_recipe(t, F);
}

long endo_signature(const FiberCensus& c, int genus) {
  const long den = 2 * genus + 1;
  Rat s = Rat(-(genus + 1), den) * c.irreducible;
  for (auto& [h, cnt] : c.separating) {
    require(h >= 1 && 2 * h <= genus, "endo_signature: bad separating type");
    s += (Rat(4L * h * (genus - h), den) - 1) * cnt;
  }
  require(s.get_den() == 1,
          "endo_signature: non-integral value (input not hyperelliptic?)");
  require(s.get_num().fits_slong_p(), "endo_signature: overflow");
  return s.get_num().get_si();
}

long first_betti(const TwistTable& t, const Factorization& F) {
  const int n = t.rank();
  IMat M(n, static_cast<int>(F.size()));
  for (std::size_t j = 0; j < F.size(); ++j) {
    IVec c = curve_class(t, F[j]);
    for (int i = 0; i < n; ++i) M(i, static_cast<int>(j)) = c[i];
  }
  return n - rank_rational(M);
}

}  // namespace mcg
