#pragma once

// The defining relation patterns of the presentation, as bare generator
// index sequences, plus the curve intersection predicate of the Humphries
// configuration (chain pairs (i,i+1) and the pair (0,4)).

#include <vector>

namespace mcg {

enum class RelKind { commute, braid, chain, lantern };

inline bool curves_meet(int i, int j) {
  if (i > j) std::swap(i, j);
  if (i == 0) return j == 4;
  return j == i + 1 && i >= 1;
}

inline std::vector<int> chain_lhs() {
  std::vector<int> v;
  for (int t = 0; t < 10; ++t)
    for (int i : {0, 2, 3, 4}) v.push_back(i);
  return v;
}
inline std::vector<int> chain_rhs() {
  std::vector<int> v;
  for (int t = 0; t < 6; ++t)
    for (int i : {0, 1, 2, 3, 4}) v.push_back(i);
  return v;
}
inline std::vector<int> lantern_lhs() {
  std::vector<int> v;
  for (int t = 0; t < 9; ++t)
    for (int i : {0, 1, 2, 3, 4, 5, 6}) v.push_back(i);
  return v;
}
inline std::vector<int> lantern_rhs() {
  std::vector<int> v;
  for (int t = 0; t < 12; ++t)
    for (int i : {0, 2, 3, 4, 5, 6}) v.push_back(i);
  return v;
}

// Source/target patterns of a chain or lantern substitution.
inline std::vector<int> subst_source(RelKind k, bool forward) {
  if (k == RelKind::chain) return forward ? chain_lhs() : chain_rhs();
  return forward ? lantern_lhs() : lantern_rhs();
}
inline std::vector<int> subst_target(RelKind k, bool forward) {
  if (k == RelKind::chain) return forward ? chain_rhs() : chain_lhs();
  return forward ? lantern_rhs() : lantern_lhs();
}

}  // namespace mcg
