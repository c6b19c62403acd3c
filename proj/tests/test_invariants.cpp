#include <doctest.h>

#include "mcg/invariants.hpp"
#include "mcg/rng.hpp"
#include "mcg/universal.hpp"

using namespace mcg;

namespace {
const TwistTable& T3() {
  static TwistTable t(3);
  return t;
}
}  // namespace

TEST_CASE("euler characteristic") {
  Factorization A = build_universal(UniversalKind::A, 3);
  CHECK(euler_characteristic(A) == 76);
  CHECK(euler_characteristic(20, 2) == 16);
  Factorization B = build_universal(UniversalKind::B, 3);
  CHECK(euler_characteristic(fiber_sum(A, B)) - euler_characteristic(A) -
            euler_characteristic(B) ==
        -(4 - 4 * 3));
}

TEST_CASE("section squares") {
  const TwistTable& t = T3();
  Factorization A = build_universal(UniversalKind::A, 3);
  CHECK(section_square(t, A) == -1);
  CHECK(section_square(t, build_universal(UniversalKind::F0, 3)) == -4);
  CHECK(section_square(t, fiber_sum(A, A)) == -2);
  CHECK_THROWS_AS(section_square(t, bare_factorization(3, {1})), error);
}

TEST_CASE("census") {
  Factorization A = build_universal(UniversalKind::A, 3);
  FiberCensus c = census(A);
  CHECK(c.total == 84);
  CHECK(c.irreducible == 84);
  CHECK(c.separating.empty());
  Factorization F = A;
  F.factors.push_back(Factor{GenId::s(1), word_of(GenId::a(4))});
  FiberCensus c2 = census(F);
  CHECK(c2.separating.at(1) == 1);
  CHECK(c2.irreducible == 84);
  // census is invariant under hurwitz moves
  CHECK(census(hurwitz_right(F, 10)) == c2);
  CHECK(census(hurwitz_left(F, 83)) == c2);
}

TEST_CASE("curve classes") {
  const TwistTable& t = T3();
  CHECK(curve_class(t, Factor{GenId::a(1), {}}) == t.homology_class(GenId::a(1)));
  CHECK(curve_class(t, Factor{GenId::s(1), word_of(GenId::a(4))}) ==
        IVec(6, 0));
  // conjugated class is the transvection image
  IVec moved = curve_class(t, Factor{GenId::a(1), word_of(GenId::a(2))});
  IVec base = t.homology_class(GenId::a(1));
  IVec expect = mul(abelianize(t.twist(GenId::a(2))), base);
  CHECK(moved == expect);
}

TEST_CASE("golden signatures at genus 3") {
  const TwistTable& t = T3();
  CHECK(signature(t, build_universal(UniversalKind::A, 3)).signature == -48);
  CHECK(signature(t, build_universal(UniversalKind::B, 3)).signature == -42);
  CHECK(signature(t, build_universal(UniversalKind::C, 3)).signature == -35);
  CHECK(signature(t, build_universal(UniversalKind::D, 3)).signature == -40);
}

TEST_CASE("signature report structure") {
  const TwistTable& t = T3();
  SignatureReport rep = signature(t, build_universal(UniversalKind::A, 3));
  CHECK(rep.r == 84);
  CHECK(std::abs(rep.signature) <= rep.ker_rank);
  CHECK_FALSE(rep.recipe_extrapolated);
  CHECK(signature_recipe(t, Factorization{3, {}}).signature == 0);
  // the kernel restriction has rank b_2 - 2 = (chi - 2) - 2 with b_1 = 0
  CHECK(first_betti(t, build_universal(UniversalKind::A, 3)) == 0);
  SymDiag d;
  {
    Factorization A = build_universal(UniversalKind::A, 3);
    IMat Q = q_matrix(t, A);
    IMat Am(Q.rows, Q.cols);
    for (int i = 0; i < Q.rows; ++i)
      for (int j = 0; j < Q.cols; ++j) Am(i, j) = Q(i, j) - Q(j, i);
    IMat K = kernel_basis(Am);
    d = symmetric_diagonalize(restrict_form(Q, K));
  }
  CHECK(d.rank() == 76 - 4);
  CHECK(d.signature() == -48);
}

TEST_CASE("hyperelliptic cross-check via the census formula") {
  const TwistTable& t = T3();
  Factorization H = build_universal(UniversalKind::Hyperelliptic, 3);
  SignatureReport rep = signature(t, H);
  CHECK(rep.signature == -48);
  CHECK(endo_signature(census(H), 3) == -48);
  CHECK(endo_signature(census(H), 3) == -4 * 3 * (3 + 1));
}

TEST_CASE("census formula arithmetic") {
  FiberCensus c;
  c.total = c.irreducible = 84;
  CHECK(endo_signature(c, 3) == -48);
  FiberCensus z;
  CHECK(endo_signature(z, 3) == 0);
  FiberCensus c4;
  c4.total = c4.irreducible = 144;
  CHECK(endo_signature(c4, 4) == -80);
  FiberCensus bad;
  bad.total = bad.irreducible = 1;
  CHECK_THROWS_AS(endo_signature(bad, 3), error);
  FiberCensus sep;
  sep.irreducible = 7;
  sep.separating[1] = 7;
  sep.total = 14;
  CHECK(endo_signature(sep, 3) == -4 + 7 * (8 - 7) / 7 * 1);  // = -4 + 1 = -3
}

TEST_CASE("signature invariance under moves and conjugation") {
  const TwistTable& t = T3();
  Factorization A = build_universal(UniversalKind::A, 3);
  long base = signature(t, A).signature;
  Rng rng(17);
  Factorization cur = A;
  for (int step = 0; step < 6; ++step) {
    std::size_t i = rng.below(cur.size() - 1);
    cur = rng.coin() ? hurwitz_right(cur, i) : hurwitz_left(cur, i);
    CHECK(signature(t, cur).signature == base);
  }
  McgWord phi = word_of(GenId::a(3)) * word_of(GenId::a(0), -1);
  CHECK(signature(t, global_conjugate(A, phi)).signature == base);
}

TEST_CASE("re-signing a vanishing cycle leaves the signature unchanged") {
  const TwistTable& t = T3();
  Factorization A = build_universal(UniversalKind::A, 3);
  const int r = static_cast<int>(A.size());
  std::vector<IVec> cls(r);
  for (int i = 0; i < r; ++i) cls[i] = curve_class(t, A[i]);
  auto sig_from = [&](const std::vector<IVec>& c) {
    IMat Q(r, r);
    for (int i = 0; i < r; ++i) {
      Q(i, i) = -1;
      for (int j = i + 1; j < r; ++j) Q(i, j) = t.pair(c[i], c[j]);
    }
    IMat Am(r, r);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) Am(i, j) = Q(i, j) - Q(j, i);
    return symmetric_diagonalize(restrict_form(Q, kernel_basis(Am))).signature();
  };
  long ref = sig_from(cls);
  CHECK(ref == -48);
  Rng rng(23);
  for (int trial = 0; trial < 3; ++trial) {
    auto flipped = cls;
    for (auto& x : flipped[rng.below(r)]) x = -x;
    CHECK(sig_from(flipped) == ref);
  }
}

TEST_CASE("novikov additivity on a sample pair") {
  const TwistTable& t = T3();
  Factorization A = build_universal(UniversalKind::A, 3);
  Factorization B = build_universal(UniversalKind::B, 3);
  CHECK(signature(t, fiber_sum(A, B)).signature == -48 + -42);
}

TEST_CASE("separating cycles flag the recipe as extrapolated") {
  const TwistTable& t = T3();
  Factorization F = bare_factorization(3, {1, 2});
  F.factors.push_back(Factor{GenId::s(1), {}});
  SignatureReport rep = signature_recipe(t, F);
  CHECK(rep.recipe_extrapolated);
}
