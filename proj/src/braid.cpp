#include "mcg/braid.hpp"

namespace mcg {

BraidWord BraidWord::pow(long k) const {
  require(k >= 0, "braid pow: negative exponent unsupported");
  BraidWord r;
  r.strands = strands;
  for (long t = 0; t < k; ++t) r.append(*this);
  return r;
}

Automorphism artin_auto(const BraidWord& b) {
  const int n = b.strands;
  require(n >= 2, "braid needs at least 2 strands");
  Automorphism cur = Automorphism::identity(n);
  for (auto [i, sign] : b.letters) {
    require(i >= 1 && i < n, "braid letter index out of range");
    Automorphism g = Automorphism::identity(n);
    if (sign > 0) {
      g.set_image(i, FreeWord{i, i + 1, -i});
      g.set_image(i + 1, FreeWord{i});
    } else {
      g.set_image(i, FreeWord{i + 1});
      g.set_image(i + 1, FreeWord{-(i + 1), i, i + 1});
    }
    cur = compose(cur, g);
  }
  return cur;
}

bool braid_equal(const BraidWord& a, const BraidWord& b) {
  require(a.strands == b.strands, "braid_equal: strand count mismatch");
  return artin_auto(a) == artin_auto(b);
}

BraidWord full_twist(int n) {
  BraidWord w;
  w.strands = n;
  for (int t = 0; t < n; ++t)
    for (int i = 1; i < n; ++i) w.push(i);
  return w;
}

RnBraidParts build_rn_braid_parts(int g, int n) {
  require(g >= 3, "build_rn_braid_parts: genus must be >= 3");
  require(n > 1 && n < 2 * g, "build_rn_braid_parts: need 1 < n < 2g");
  const int strands = 2 * g + 1;
  RnBraidParts p;
  p.a1.strands = p.a2.strands = p.b1.strands = p.b2.strands = strands;

  for (int t = 0; t < n; ++t)
    for (int i = 1; i <= n - 1; ++i) p.a1.push(i);
  for (int t = 0; t < 2 * g - n + 1; ++t)
    for (int i = n + 1; i <= 2 * g; ++i) p.a2.push(i);
  for (int i = n; i >= 1; --i)
    for (int j = i; j <= i + 2 * g - n; ++j) p.b1.push(j);
  for (int i = 2 * g - n + 1; i >= 1; --i)
    for (int j = i; j <= i + n - 1; ++j) p.b2.push(j);
  return p;
}

McgWord lift_to_mcg(const BraidWord& b) {
  McgWord w;
  for (auto [i, sign] : b.letters) w.push(GenId::a(i), sign);
  return w;
}

}  // namespace mcg
