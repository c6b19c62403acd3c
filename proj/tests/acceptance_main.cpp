// Acceptance suite: one pass/fail line per criterion, exit code equals the
// number of failures.  Randomized parts run from fixed seeds and are
// independent of the thread count.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <map>
#include <memory>
#include <vector>

#include "mcg/braid.hpp"
#include "mcg/invariants.hpp"
#include "mcg/parallel.hpp"
#include "mcg/rng.hpp"
#include "mcg/stabilize.hpp"

using namespace mcg;
using clk = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int no, const char* name, bool ok, double secs) {
  std::printf("%s  criterion %2d: %-52s (%.1fs)\n", ok ? "PASS" : "FAIL", no,
              name, secs);
  std::fflush(stdout);
  if (!ok) ++failures;
}

const TwistTable& table(int g) {
  static std::map<int, std::unique_ptr<TwistTable>> cache;
  auto it = cache.find(g);
  if (it == cache.end()) it = cache.emplace(g, std::make_unique<TwistTable>(g)).first;
  return *it->second;
}

template <class Fn>
void criterion(int no, const char* name, Fn&& fn) {
  auto t0 = clk::now();
  bool ok = false;
  try {
    ok = fn();
  } catch (const std::exception& e) {
    std::printf("      exception: %s\n", e.what());
    ok = false;
  }
  report(no, name, ok, std::chrono::duration<double>(clk::now() - t0).count());
}

Factorization random_factorization(Rng& rng, int g, std::size_t r,
                                   int max_conj = 0) {
  Factorization F;
  F.genus = g;
  for (std::size_t i = 0; i < r; ++i) {
    Factor f{GenId::a(rng.range(0, 2 * g)), {}};
    for (int c = 0, m = static_cast<int>(rng.below(max_conj + 1)); c < m; ++c)
      f.conj.push(GenId::a(rng.range(0, 2 * g)), rng.coin() ? 1 : -1);
    F.factors.push_back(std::move(f));
  }
  return F;
}

DerivationCertificate to_derivation(const MoveCertificate& c) {
  DerivationCertificate d;
  for (auto& m : c.moves) {
    require(m.kind == Move::R || m.kind == Move::L,
            "only Hurwitz moves translate to derivations");
    d.push(m.kind == Move::R ? DerivationStep::hr(m.index)
                             : DerivationStep::hl(m.index));
  }
  return d;
}

}  // namespace

int main() {
  std::printf("acceptance suite (threads: %d)\n", par::max_threads());

  criterion(1, "relator suite, g in {3,4,5}", [] {
    for (int g : {3, 4, 5}) {
      const TwistTable& t = table(g);
      const int n = 2 * g;
      for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          bool ok = curves_meet(i, j)
                        ? t.words_equal(a_word({i, j, i}), a_word({j, i, j}))
                        : t.words_equal(a_word({i, j}), a_word({j, i}));
          if (!ok) return false;
        }
      if (!t.words_equal(a_word({0, 2, 3, 4}, 10), a_word({0, 1, 2, 3, 4}, 6)))
        return false;
      if (!t.words_equal(a_word({0, 1, 2, 3, 4, 5, 6}, 9),
                         a_word({0, 2, 3, 4, 5, 6}, 12)))
        return false;
      std::vector<int> chain;
      for (int i = 1; i <= n; ++i) chain.push_back(i);
      if (!(t.eval(a_word(chain, 4 * g + 2)) == t.boundary_conjugation(1)))
        return false;
    }
    return true;
  });

  criterion(2, "universal products equal boundary twist powers", [] {
    for (int g : {3, 4, 5}) {
      const TwistTable& t = table(g);
      std::atomic<bool> ok{true};
      par::for_index(5, [&](std::size_t i) {
        if (i < 4) {
          UniversalKind kinds[4] = {UniversalKind::A, UniversalKind::B,
                                    UniversalKind::C, UniversalKind::D};
          Factorization F = build_universal(kinds[i], g);
          if (t.detect_boundary_power(product(t, F)) != 1) ok = false;
        } else {
          Factorization F = build_universal(UniversalKind::F0, g);
          if (t.detect_boundary_power(product(t, F)) != 4) ok = false;
        }
      });
      if (!ok.load()) return false;
    }
    const TwistTable& t3 = table(3);
    for (int n : {2, 3, 4, 5})
      if (t3.detect_boundary_power(product(t3, build_Rn_padded(3, n))) != 1)
        return false;
    return true;
  });

  criterion(3, "golden signatures and g-independent differences", [] {
    std::map<std::pair<int, int>, long> sig;
    std::vector<std::pair<int, UniversalKind>> jobs;
    for (int g : {3, 4, 5})
      for (auto k : {UniversalKind::A, UniversalKind::B, UniversalKind::C,
                     UniversalKind::D})
        jobs.push_back({g, k});
    std::vector<long> out(jobs.size());
    for (int g : {3, 4, 5}) table(g);  // build tables before going parallel
    par::for_index(jobs.size(), [&](std::size_t i) {
      out[i] = signature(table(jobs[i].first),
                         build_universal(jobs[i].second, jobs[i].first))
                   .signature;
    });
    for (std::size_t i = 0; i < jobs.size(); ++i)
      sig[{jobs[i].first, static_cast<int>(jobs[i].second)}] = out[i];
    auto S = [&](int g, UniversalKind k) { return sig[{g, static_cast<int>(k)}]; };
    if (S(3, UniversalKind::A) != -48 || S(3, UniversalKind::B) != -42 ||
        S(3, UniversalKind::C) != -35 || S(3, UniversalKind::D) != -40)
      return false;
    for (int g : {3, 4, 5}) {
      if (S(g, UniversalKind::A) - S(g, UniversalKind::B) != -6) return false;
      if (S(g, UniversalKind::C) - S(g, UniversalKind::D) != 5) return false;
    }
    return true;
  });

  criterion(4, "count identities", [] {
    for (int g = 3; g <= 6; ++g) {
      long A = static_cast<long>(build_universal(UniversalKind::A, g).size());
      long B = static_cast<long>(build_universal(UniversalKind::B, g).size());
      long C = static_cast<long>(build_universal(UniversalKind::C, g).size());
      long D = static_cast<long>(build_universal(UniversalKind::D, g).size());
      if (A - B != 10 || D - C != 9) return false;
      for (int n = 2; n < 2 * g; ++n)
        if (static_cast<long>(build_Rn_padded(g, n).size()) !=
            2L * g * (4 * g + 2))
          return false;
    }
    return true;
  });

  criterion(5, "hyperelliptic signatures match the census formula", [] {
    for (int g : {3, 4}) {
      Factorization H = build_universal(UniversalKind::Hyperelliptic, g);
      long s = signature(table(g), H).signature;
      if (s != endo_signature(census(H), g)) return false;
      if (s != -4L * g * (g + 1)) return false;
    }
    return true;
  });

  criterion(6, "braid-group full twist decompositions in B_7", [] {
    BraidWord delta2 = full_twist(7);
    for (int n : {3, 4, 5}) {
      RnBraidParts p = build_rn_braid_parts(3, n);
      if (!braid_equal(p.a1 * p.a2 * p.b1 * p.b2, delta2)) return false;
      if (!braid_equal(p.a2 * p.b1 * p.b2 * p.a1, delta2)) return false;
    }
    return true;
  });

  criterion(7, "move-system properties, 10^4 randomized trials", [] {
    const TwistTable& t = table(3);
    std::atomic<bool> ok{true};
    par::for_index(
        10000,
        [&](std::size_t i) {
          if (!ok) return;
          Rng rng = Rng::stream(0xACCE7501, i);
          Factorization F =
              random_factorization(rng, 3, 2 + rng.below(11), 2);
          std::size_t p = rng.below(F.size() - 1);
          Automorphism prod = product(t, F);
          Factorization R = hurwitz_right(F, p);
          Factorization L = hurwitz_left(F, p);
          // product preserved
          if (!(product(t, R) == prod) || !(product(t, L) == prod)) {
            ok = false;
            return;
          }
          // L(R(F)) = F up to factor equality
          if (!factorization_equal(t, hurwitz_left(R, p), F)) {
            ok = false;
            return;
          }
          // chi / census / boundary-power status invariant
          if (euler_characteristic(R) != euler_characteristic(F) ||
              !(census(R) == census(F)) || !(census(L) == census(F))) {
            ok = false;
            return;
          }
          McgWord phi;
          phi.push(GenId::a(rng.range(0, 6)), rng.coin() ? 1 : -1);
          Factorization C = global_conjugate(F, phi);
          if (!(census(C) == census(F))) {
            ok = false;
            return;
          }
          // the signature recipe is invariant under the moves
          long s0 = signature_recipe(t, F).signature;
          if (signature_recipe(t, R).signature != s0 ||
              signature_recipe(t, L).signature != s0 ||
              signature_recipe(t, C).signature != s0) {
            ok = false;
            return;
          }
        },
        64);
    if (!ok.load()) return false;
    // genuine boundary-power signatures along rolling move chains
    Factorization A = build_universal(UniversalKind::A, 3);
    long base = signature(t, A).signature;
    const int chains = 8, steps = 25;
    par::for_index(chains, [&](std::size_t c) {
      if (!ok) return;
      Rng rng = Rng::stream(0xACCE7502, c);
      Factorization cur = A;
      for (int s = 0; s < steps && ok; ++s) {
        std::size_t p = rng.below(cur.size() - 1);
        switch (rng.below(3)) {
          case 0:
            cur = hurwitz_right(cur, p);
            break;
          case 1:
            cur = hurwitz_left(cur, p);
            break;
          default: {
            McgWord phi;
            phi.push(GenId::a(rng.range(0, 6)), rng.coin() ? 1 : -1);
            cur = global_conjugate(cur, phi);
          }
        }
        if (section_square(t, cur) != -1) ok = false;
        if (signature(t, cur).signature != base) ok = false;
      }
    });
    return ok.load();
  });

  // No positive factorization of a boundary-twist power has r <= 12, so the
  // random inputs here are Hurwitz scrambles of genuine ones; the r <= 12
  // factorizations appear as the arbitrary block of the commuting macro.
  criterion(8, "certificate macros on A and 100 random factorizations", [] {
    const TwistTable& t = table(3);
    Factorization A = build_universal(UniversalKind::A, 3);
    {
      auto [end, cert] = rotate_certificate(t, A);
      if (!check_certificate(t, A, cert, end).ok) return false;
      McgWord phi = word_of(GenId::a(5));
      if (!check_certificate(t, A, conjugation_certificate(t, A, phi),
                             global_conjugate(A, phi))
               .ok)
        return false;
    }
    std::atomic<bool> ok{true};
    par::for_index(100, [&](std::size_t i) {
      if (!ok) return;
      Rng rng = Rng::stream(0xACCE7503, i);
      UniversalKind kinds[5] = {UniversalKind::A, UniversalKind::B,
                                UniversalKind::C, UniversalKind::D,
                                UniversalKind::Hyperelliptic};
      Factorization F = build_universal(kinds[rng.below(5)], 3);
      for (int s = 0, moves = static_cast<int>(rng.below(10)); s < moves; ++s) {
        std::size_t p = rng.below(F.size() - 1);
        F = rng.coin() ? hurwitz_right(F, p) : hurwitz_left(F, p);
      }
      // rotation macro on the scrambled boundary-twist factorization
      auto [end, cert] = rotate_certificate(t, F);
      if (!check_certificate(t, F, cert, end).ok) {
        ok = false;
        return;
      }
      // block commute macro: an arbitrary short factorization past F
      Factorization Fp = random_factorization(rng, 3, 1 + rng.below(12), 2);
      MoveCertificate bc = block_commute_certificate(t, Fp, F);
      if (!check_certificate(t, fiber_sum(Fp, F), bc, fiber_sum(F, Fp)).ok) {
        ok = false;
        return;
      }
      // conjugation macro by the twist of a factor that is still bare
      GenId g = GenId::a(0);
      for (auto& f : F.factors)
        if (f.bare()) {
          g = f.base;
          break;
        }
      McgWord phi;
      phi.push(g, rng.coin() ? 1 : -1);
      MoveCertificate cc = conjugation_certificate(t, F, phi);
      if (!check_certificate(t, F, cc, global_conjugate(F, phi)).ok) {
        ok = false;
        return;
      }
    });
    return ok.load();
  });

  criterion(9, "stabilization pipeline end-to-end", [] {
    const TwistTable& t = table(3);
    Factorization A = build_universal(UniversalKind::A, 3);
    Factorization B = build_universal(UniversalKind::B, 3);
    // (a) A.B vs B.A via the block-commute derivation
    {
      Factorization F = fiber_sum(A, B), Fp = fiber_sum(B, A);
      DerivationCertificate d =
          to_derivation(block_commute_certificate(t, A, B));
      StableResult r = stable_equivalence(t, F, Fp, d);
      if (!r.verified || r.ledger.k != 0 || r.ledger.l != 0) return false;
    }
    // (b) A vs (A)_{a5} via the conjugation derivation
    {
      McgWord phi = word_of(GenId::a(5));
      Factorization Fp = global_conjugate(A, phi);
      DerivationCertificate d = to_derivation(conjugation_certificate(t, A, phi));
      StableResult r = stable_equivalence(t, A, Fp, d);
      if (!r.verified || r.ledger.k != 0 || r.ledger.l != 0) return false;
    }
    // (c) one chain-relation application: the ledger reports the trade and
    // the Euler/signature bookkeeping balances to zero
    {
      DerivationCertificate d;
      d.push(DerivationStep::rel(RelKind::chain, true, 0));
      StableResult r = stable_equivalence(t, A, B, d);
      if (!r.verified) return false;
      if (r.ledger.l != 1 || r.ledger.k != 0) return false;
      long dchi = euler_characteristic(B) - euler_characteristic(A);
      long dsig = signature(t, B).signature - signature(t, A).signature;
      if (dchi + 10 * r.ledger.l - 9 * r.ledger.k != 0) return false;
      if (dsig - 6 * r.ledger.l + 5 * r.ledger.k != 0) return false;
    }
    return true;
  });

  criterion(10, "Novikov additivity on 20 sampled pairs", [] {
    const TwistTable& t = table(3);
    std::vector<Factorization> pool;
    std::vector<long> sigs;
    for (auto k : {UniversalKind::A, UniversalKind::B, UniversalKind::C,
                   UniversalKind::D, UniversalKind::Hyperelliptic}) {
      pool.push_back(build_universal(k, 3));
      sigs.push_back(signature(t, pool.back()).signature);
    }
    std::atomic<bool> ok{true};
    Rng rng(0xACCE7510);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 20; ++i)
      pairs.push_back({static_cast<int>(rng.below(pool.size())),
                       static_cast<int>(rng.below(pool.size()))});
    par::for_index(pairs.size(), [&](std::size_t i) {
      if (!ok) return;
      auto [a, b] = pairs[i];
      long s = signature(t, fiber_sum(pool[a], pool[b])).signature;
      if (s != sigs[a] + sigs[b]) ok = false;
    });
    return ok.load();
  });

  std::printf("%d criteria failed\n", failures);
  return failures;
}
