#include "mcg/factorization.hpp"

#include <atomic>

#include "mcg/parallel.hpp"

namespace mcg {

McgWord word_of_factor(const Factor& f) {
  McgWord w = f.conj.inverse();
  w.push(f.base, 1);
  w.append(f.conj);
  return w;
}

Factorization bare_factorization(int genus, const std::vector<int>& a_indices) {
  Factorization F;
  F.genus = genus;
  for (int i : a_indices) F.push(GenId::a(i));
  return F;
}

Automorphism product(const TwistTable& t, const Factorization& F) {
  require(F.genus == t.genus(), "product: genus mismatch");
  return t.eval(F.word());
}

Automorphism product_parallel(const TwistTable& t, const Factorization& F) {
  require(F.genus == t.genus(), "product: genus mismatch");
  const std::size_t r = F.size();
  const std::size_t chunks =
      std::min<std::size_t>(static_cast<std::size_t>(par::max_threads()) * 2,
                            std::max<std::size_t>(r, 1));
  if (chunks <= 1 || r < 8) return product(t, F);
  std::vector<Automorphism> part(chunks);
  par::for_index(chunks, [&](std::size_t c) {
    std::size_t lo = r * c / chunks, hi = r * (c + 1) / chunks;
    McgWord w;
    for (std::size_t i = lo; i < hi; ++i) w.append(word_of_factor(F[i]));
    part[c] = t.eval(w);
  });
  Automorphism acc = part[0];
  for (std::size_t c = 1; c < chunks; ++c) acc = compose(acc, part[c]);
  return acc;
}

Automorphism twist_of(const TwistTable& t, const Factor& f) {
  return t.eval(word_of_factor(f));
}

FreeWord curve_of(const TwistTable& t, const Factor& f) {
  return t.apply_word(f.conj, t.curve(f.base));
}

bool factor_equal(const TwistTable& t, const Factor& a, const Factor& b) {
  if (a.base == b.base && a.conj == b.conj) return true;
  return curve_of(t, a).canonical_cyclic_unoriented() ==
         curve_of(t, b).canonical_cyclic_unoriented();
}

bool factorization_equal(const TwistTable& t, const Factorization& a,
                         const Factorization& b) {
  if (a.genus != b.genus || a.size() != b.size()) return false;
  std::atomic<bool> ok{true};
  par::for_index(
      a.size(),
      [&](std::size_t i) {
        if (ok.load(std::memory_order_relaxed) && !factor_equal(t, a[i], b[i]))
          ok.store(false, std::memory_order_relaxed);
      },
      16);
  return ok.load();
}

Factorization hurwitz_right(const Factorization& F, std::size_t i) {
  require(i + 1 < F.size(), "hurwitz_right: index out of range");
  Factorization R = F;
  Factor moved = F[i];
  moved.conj.append(word_of_factor(F[i + 1]));
  R[i] = F[i + 1];
  R[i + 1] = moved;
  return R;
}

Factorization hurwitz_left(const Factorization& F, std::size_t i) {
  require(i + 1 < F.size(), "hurwitz_left: index out of range");
  Factorization R = F;
  Factor moved = F[i + 1];
  moved.conj.append_inverse(word_of_factor(F[i]));
  R[i] = moved;
  R[i + 1] = F[i];
  return R;
}

Factorization global_conjugate(const Factorization& F, const McgWord& phi) {
  Factorization R = F;
  for (auto& f : R.factors) f.conj.append(phi);
  return R;
}

Factorization fiber_sum(const Factorization& F1, const Factorization& F2) {
  require(F1.genus == F2.genus, "fiber_sum: genus mismatch");
  Factorization R = F1;
  R.append(F2);
  return R;
}

}  // namespace mcg
