#pragma once

// Signed factorizations, the two move systems on them, and the compiler
// turning a derivation (a replayable path through the monoid presentation)
// into a positive stabilized Hurwitz-equivalence certificate.  Negative
// factors are always bare generator inverses; the compiler realizes each of
// them as the rotation factorization A_i, so pair cancellations become pure
// factor juggling plus one extra universal copy.

#include <optional>

#include "mcg/certificate.hpp"
#include "mcg/invariants.hpp"
#include "mcg/universal.hpp"

namespace mcg {

struct SignedFactor {
  Factor f;
  int sign = 1;  // -1 only for bare nonseparating generator inverses
};

struct SignedFactorization {
  int genus = 3;
  std::vector<SignedFactor> factors;

  std::size_t size() const { return factors.size(); }
  long negatives() const {
    long n = 0;
    for (auto& s : factors) n += s.sign < 0;
    return n;
  }
  static SignedFactorization of(const Factorization& F) {
    SignedFactorization S;
    S.genus = F.genus;
    for (auto& f : F.factors) S.factors.push_back({f, 1});
    return S;
  }
};

struct DerivationStep {
  enum Kind { HR, HL, PCreate, PCancel, Rel } kind;
  std::size_t index = 0;
  GenId gen;              // PCreate; filled on PCancel replay
  bool neg_first = false; // PCreate: insert g^-1 . g instead of g . g^-1
  bool pair_known = false;
  RelKind relkind = RelKind::commute;
  bool forward = true;

  static DerivationStep hr(std::size_t i) {
    return {HR, i, {}, false, false, RelKind::commute, true};
  }
  static DerivationStep hl(std::size_t i) {
    return {HL, i, {}, false, false, RelKind::commute, true};
  }
  static DerivationStep pcreate(std::size_t i, GenId g, bool neg_first_) {
    return {PCreate, i, g, neg_first_, true, RelKind::commute, true};
  }
  static DerivationStep pcancel(std::size_t i) {
    return {PCancel, i, {}, false, false, RelKind::commute, true};
  }
  static DerivationStep rel(RelKind k, bool fwd, std::size_t pos) {
    return {Rel, pos, {}, false, false, k, fwd};
  }
};

struct DerivationCertificate {
  std::vector<DerivationStep> steps;

  std::size_t size() const { return steps.size(); }
  void push(DerivationStep s) { steps.push_back(s); }
  void append(const DerivationCertificate& o) {
    steps.insert(steps.end(), o.steps.begin(), o.steps.end());
  }
  DerivationCertificate reversed() const;
};

// Applies the steps, validating each one; throws illegal_move_error.
SignedFactorization replay_derivation(const TwistTable& t,
                                      SignedFactorization S,
                                      const DerivationCertificate& d);

// Replaces each conjugated factor by its expansion into bare signed
// generators; requires nonseparating bases and a-letter conjugators
// (use normalize_conjugators first).
struct SimplifyResult {
  SignedFactorization simplified;
  DerivationCertificate cert;  // from SignedFactorization::of(F)
};
SimplifyResult simplify(const TwistTable& t, const Factorization& F);

// Rewrites s_h^± conjugator letters as hyperelliptic a-words; twists are
// unchanged.
Factorization normalize_conjugators(const TwistTable& t, const Factorization& F);

struct StabilizationLedger {
  long n = 0;                         // universal copies in the padding
  long a = 0, b = 0, c = 0, d = 0;    // padding copies of A, B, C, D
  long k = 0, l = 0;                  // net lantern / chain trades
};

// Counts the substitutions of a compiled certificate into l and k.
StabilizationLedger trade_ledger(const MoveCertificate& cert);

struct CompileResult {
  long n = 0;  // A-copies appended to both sides
  MoveCertificate cert;
  Factorization start, end;  // F . A^n  and  F' . A^n
  long l = 0, k = 0;
};

// Compiles a derivation from signed(F) to signed(F') into a positive
// certificate between the padded factorizations.
CompileResult compile_positive(const TwistTable& t, const Factorization& F,
                               const Factorization& Fp,
                               const DerivationCertificate& d);

struct ReducibleResult {
  long N = 0;
  Factorization prefix;        // the common separating factors, sorted by type
  Factorization tail_F, tail_Fp;  // nonseparating remainders
  MoveCertificate cert_F;   // F  . A^N -> prefix . tail_F
  MoveCertificate cert_Fp;  // F' . A^N -> prefix . tail_Fp
};

ReducibleResult reducible_normalize(const TwistTable& t, const Factorization& F,
                                    const Factorization& Fp);

struct StableResult {
  StabilizationLedger ledger;
  MoveCertificate cert;
  Factorization start, end;
  bool verified = false;
};

// Full pipeline: hypothesis checks, reducible normalization, compilation,
// ledger bookkeeping (the Euler and signature consistency identities), and
// certificate verification.
StableResult stable_equivalence(const TwistTable& t, const Factorization& F,
                                const Factorization& Fp,
                                const DerivationCertificate& d);

// Breadth-first toy search for a derivation between two small
// factorizations; states are kept literal, so it is only useful at the
// advertised scale (r <= 6 or so).
std::optional<DerivationCertificate> bounded_search(const TwistTable& t,
                                                    const Factorization& F,
                                                    const Factorization& Fp,
                                                    std::size_t budget);

}  // namespace mcg
