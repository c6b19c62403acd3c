#include <doctest.h>

#include "mcg/free_word.hpp"
#include "mcg/rng.hpp"

using namespace mcg;

TEST_CASE("free reduction") {
  CHECK(FreeWord::reduce(std::vector<Letter>{1, 2, -2}) == FreeWord{1});
  CHECK(FreeWord::reduce(std::vector<Letter>{}) == FreeWord{});
  CHECK(FreeWord::reduce(std::vector<Letter>{1, 1}).size() == 2);
  // nested cancellation
  CHECK(FreeWord::reduce(std::vector<Letter>{1, 2, -2, -1}).empty());
}

TEST_CASE("reduction is idempotent on random raw sequences") {
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Letter> raw;
    for (int i = 0; i < 40; ++i) {
      int g = static_cast<int>(rng.below(4)) + 1;
      raw.push_back(rng.coin() ? g : -g);
    }
    FreeWord w = FreeWord::reduce(raw);
    CHECK(FreeWord::reduce(w.letters()) == w);
  }
}

TEST_CASE("inverse and append") {
  FreeWord w{1, 2, -3};
  FreeWord wi = w.inverse();
  FreeWord prod = w;
  prod.append(wi);
  CHECK(prod.empty());
  CHECK(w.pow(3).size() == 9);
  CHECK(w.pow(-2) == wi * wi);
}

TEST_CASE("canonical cyclic words identify conjugates up to inversion") {
  FreeWord w{1, 2, 1, -2};
  FreeWord conj = w.conjugated_by(FreeWord{3, 1, 2});
  CHECK(w.canonical_cyclic_unoriented() == conj.canonical_cyclic_unoriented());
  CHECK(w.canonical_cyclic_unoriented() ==
        w.inverse().canonical_cyclic_unoriented());
  FreeWord other{1, 2, 2, -1};
  CHECK(w.canonical_cyclic_unoriented() != other.canonical_cyclic_unoriented());
}

TEST_CASE("cyclic reduction extracts the wing") {
  FreeWord w{3, -2, 1, 1, 2, -3};
  FreeWord wing;
  w.cyclic_reduce(&wing);
  CHECK(w == FreeWord{1, 1});
  CHECK(wing == FreeWord{3, -2});
}
