#include "mcg/universal.hpp"

#include "mcg/relations.hpp"

namespace mcg {

Factorization build_Rn(int g, int n) {
  require(g >= 3, "build_Rn: genus must be >= 3");
  require(n > 1 && n < 2 * g, "build_Rn: need 1 < n < 2g");
  Factorization F;
  F.genus = g;
  for (int t = 0; t < 2 * g - n + 1; ++t)
    for (int i = n + 1; i <= 2 * g; ++i) F.push(GenId::a(i));
  for (int i = n; i >= 1; --i)
    for (int j = i; j <= i + 2 * g - n; ++j) F.push(GenId::a(j));
  for (int i = 2 * g - n + 1; i >= 1; --i)
    for (int j = i; j <= i + n - 1; ++j) F.push(GenId::a(j));
  require(F.size() ==
              static_cast<std::size_t>((2 * g - n + 1) * (2 * g + n)),
          "build_Rn: length formula violated");
  return F;
}

Factorization build_Rn_padded(int g, int n) {
  Factorization F;
  F.genus = g;
  for (int t = 0; t < 2 * n; ++t)
    for (int i = 1; i <= n - 1; ++i) F.push(GenId::a(i));
  Factorization R = build_Rn(g, n);
  F.append(R);
  F.append(R);
  return F;
}

Factorization build_universal(UniversalKind kind, int g) {
  require(g >= 3, "build_universal: genus must be >= 3");
  Factorization F;
  F.genus = g;
  auto rep = [&](const std::vector<int>& blk, int k) {
    for (int t = 0; t < k; ++t)
      for (int i : blk) F.push(GenId::a(i));
  };
  auto r2 = [&](int n) {
    if (n >= 2 * g) return;  // empty R_7 at g = 3
    Factorization R = build_Rn(g, n);
    F.append(R);
    F.append(R);
  };
  switch (kind) {
    case UniversalKind::A:
      rep({0, 2, 3, 4}, 10);
      r2(5);
      break;
    case UniversalKind::B:
      rep({0, 1, 2, 3, 4}, 6);
      r2(5);
      break;
    case UniversalKind::C:
      rep({0, 1, 2, 3, 4, 5, 6}, 9);
      r2(7);
      break;
    case UniversalKind::D:
      rep({0, 2, 3, 4, 5, 6}, 12);
      r2(7);
      break;
    case UniversalKind::F0:
      F = build_universal(UniversalKind::A, g);
      F.append(build_universal(UniversalKind::B, g));
      F.append(build_universal(UniversalKind::C, g));
      F.append(build_universal(UniversalKind::D, g));
      break;
    case UniversalKind::Hyperelliptic: {
      std::vector<int> blk;
      for (int i = 1; i <= 2 * g; ++i) blk.push_back(i);
      rep(blk, 4 * g + 2);
      break;
    }
  }
  return F;
}

AiResult build_Ai(int i, int g) {
  require(i >= 0 && i <= 2 * g, "build_Ai: generator index out of range");
  Factorization A = build_universal(UniversalKind::A, g);
  std::size_t pos = A.size();
  for (std::size_t p = 0; p < A.size(); ++p)
    if (!A[p].base.sep && A[p].base.idx == i) {
      pos = p;
      break;
    }
  require(pos < A.size(), "build_Ai: a_" + std::to_string(i) +
                              " does not occur in the factorization");

  AiResult out;
  out.Ai.genus = g;
  for (std::size_t p = pos + 1; p < A.size(); ++p) out.Ai.factors.push_back(A[p]);
  for (std::size_t p = 0; p < pos; ++p) out.Ai.factors.push_back(A[p]);

  auto rotations = [&](std::size_t k) {
    MoveCertificate c;
    for (std::size_t t = 0; t < k; ++t)
      for (std::size_t j = 0; j + 1 < A.size(); ++j) c.push(Move::r(j));
    return c;
  };
  out.to_front = rotations(pos);
  out.to_back = rotations(pos + 1);
  return out;
}

}  // namespace mcg
