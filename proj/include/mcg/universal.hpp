#pragma once

// The universal positive factorizations of T_delta and the rotation
// factorizations A_i with their witnessing certificates.

#include "mcg/certificate.hpp"

namespace mcg {

enum class UniversalKind { A, B, C, D, F0, Hyperelliptic };

// R_n = (a_{n+1}...a_{2g})^{2g-n+1} . prod_{i=n..1}(a_i...a_{i+2g-n})
//       . prod_{i=2g-n+1..1}(a_i...a_{i+n-1}),  length (2g-n+1)(2g+n).
// Requires g >= 3 and 1 < n < 2g.
Factorization build_Rn(int g, int n);

// All factors bare generators.  C and D use the empty R_7 when g == 3.
Factorization build_universal(UniversalKind kind, int g);

// (a_1...a_{n-1})^{2n} . (R_n)^2, the padded factorization of T_delta.
Factorization build_Rn_padded(int g, int n);

struct AiResult {
  Factorization Ai;            // 83 bare factors (for any g: |A|-1)
  MoveCertificate to_front;    // A  ->  a_i . A_i
  MoveCertificate to_back;     // A  ->  A_i . a_i
};

// Cyclic rotation of A at the first occurrence of a_i.
AiResult build_Ai(int i, int g);

}  // namespace mcg
