// Compares the serial reference kernels with their OpenMP variants:
// factorization products (chunked associative reduction), the Q-matrix fill,
// and batched relator verification.  Run with OMP_NUM_THREADS to vary the
// thread count.

#include <chrono>
#include <cstdio>

#include "mcg/invariants.hpp"
#include "mcg/parallel.hpp"
#include "mcg/rng.hpp"
#include "mcg/universal.hpp"

using namespace mcg;
using clk = std::chrono::steady_clock;

static double secs(clk::time_point a, clk::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <class Fn>
static double time_best_of(int reps, Fn&& fn) {
  double best = 1e100;
  for (int r = 0; r < reps; ++r) {
    auto t0 = clk::now();
    fn();
    auto t1 = clk::now();
    best = std::min(best, secs(t0, t1));
  }
  return best;
}

int main() {
  std::printf("threads available: %d\n\n", par::max_threads());
  std::printf("%-44s %10s %10s %8s\n", "kernel", "serial[s]", "parallel", "speedup");

  {
    const int g = 5;
    TwistTable t(g);
    Factorization H = build_universal(UniversalKind::Hyperelliptic, g);
    volatile bool sink = false;
    double ts = time_best_of(3, [&] { sink = product(t, H).is_identity(); });
    double tp = time_best_of(3, [&] { sink = product_parallel(t, H).is_identity(); });
    std::printf("%-44s %10.4f %10.4f %7.2fx\n",
                "product, hyperelliptic g=5 (220 factors)", ts, tp, ts / tp);
  }

  {
    const int g = 4;
    TwistTable t(g);
    Factorization A = build_universal(UniversalKind::A, g);
    // decorate so the curve classes are nontrivial work
    Rng rng(7);
    for (int i = 0; i < 400; ++i) {
      std::size_t p = rng.below(A.size() - 1);
      A = rng.coin() ? hurwitz_right(A, p) : hurwitz_left(A, p);
    }
    volatile long sink = 0;
    double ts, tp;
    {
      // serial path: force one thread through the helper by building rows
      // directly
      double t0 = time_best_of(1, [&] {
        IMat Q(static_cast<int>(A.size()), static_cast<int>(A.size()));
        std::vector<IVec> cls(A.size());
        for (std::size_t i = 0; i < A.size(); ++i) cls[i] = curve_class(t, A[i]);
        for (std::size_t i = 0; i < A.size(); ++i) {
          Q(i, i) = -1;
          for (std::size_t j = i + 1; j < A.size(); ++j)
            Q(i, j) = t.pair(cls[i], cls[j]);
        }
        sink += Q(0, 1).get_si();
      });
      ts = t0;
      tp = time_best_of(1, [&] {
        IMat Q = q_matrix(t, A);
        sink += Q(0, 1).get_si();
      });
    }
    std::printf("%-44s %10.4f %10.4f %7.2fx\n",
                "Q-matrix fill, scrambled A g=4 (132 factors)", ts, tp, ts / tp);
  }

  {
    const int g = 4;
    TwistTable t(g);
    const int n = 2 * g;
    const std::size_t trials = 2000;
    auto one = [&](std::size_t i) {
      Rng rng = Rng::stream(99, i);
      McgWord w;
      for (int j = 0; j < 12; ++j)
        w.push(GenId::a(rng.range(0, n)), rng.coin() ? 1 : -1);
      McgWord wr = w;
      int a = rng.range(1, n - 1);
      wr.append(a_word({a, a + 1, a}));
      wr.append(a_word({a + 1, a, a + 1}).inverse());
      return t.words_equal(w, wr);
    };
    volatile bool sink = true;
    double ts = time_best_of(1, [&] {
      for (std::size_t i = 0; i < trials; ++i) sink = sink && one(i);
    });
    double tp = time_best_of(1, [&] {
      par::for_index(trials, [&](std::size_t i) {
        if (!one(i)) std::abort();
      });
    });
    std::printf("%-44s %10.4f %10.4f %7.2fx\n",
                "relator batch, 2000 word checks g=4", ts, tp, ts / tp);
  }

  return 0;
}
