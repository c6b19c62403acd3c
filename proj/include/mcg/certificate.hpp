#pragma once

// Replayable move certificates witnessing Hurwitz equivalence.  A replayed
// Hurwitz move depends only on the twists of the factors involved, so
// replaying any move list from factor-wise equal states yields factor-wise
// equal states; endpoints are therefore compared with factor_equal.

#include <string>
#include <vector>

#include "mcg/factorization.hpp"
#include "mcg/relations.hpp"

namespace mcg {

struct Move {
  enum Kind { R, L, Conj, Subst } kind;
  std::size_t index = 0;  // R/L position, or Subst block start (0-based)
  McgWord conj;           // Conj only
  RelKind rel = RelKind::chain;  // Subst only: chain or lantern
  bool forward = true;           // Subst only

  static Move r(std::size_t i) { return Move{R, i, {}, RelKind::chain, true}; }
  static Move l(std::size_t i) { return Move{L, i, {}, RelKind::chain, true}; }
  static Move conj_by(McgWord w) {
    return Move{Conj, 0, std::move(w), RelKind::chain, true};
  }
  static Move subst(RelKind k, bool fwd, std::size_t at) {
    return Move{Subst, at, {}, k, fwd};
  }
};

struct MoveCertificate {
  std::vector<Move> moves;

  std::size_t size() const { return moves.size(); }
  void push(Move m) { moves.push_back(std::move(m)); }
  void append(const MoveCertificate& o) {
    moves.insert(moves.end(), o.moves.begin(), o.moves.end());
  }
  // Same moves re-addressed further right.
  MoveCertificate offset(std::size_t by) const;
  // Undoes *this: inverse moves in reverse order.
  MoveCertificate reversed() const;
};

// Applies the moves; throws illegal_move_error with the failing step.
Factorization replay(const TwistTable& t, Factorization F,
                     const MoveCertificate& cert);

struct CheckResult {
  bool ok = false;
  std::size_t step = 0;  // failing step when a move was illegal
  std::string reason;
};

CheckResult check_certificate(const TwistTable& t, const Factorization& start,
                              const MoveCertificate& cert,
                              const Factorization& end);

// --- certificate macros for factorizations of central elements ------------

// Moves the first factor to the end (one cyclic rotation); requires the
// product to be a boundary power.
std::pair<Factorization, MoveCertificate> rotate_certificate(
    const TwistTable& t, const Factorization& F);

// Certificate from F to (F)_phi, phi given as a word whose letters are
// twists occurring among the factors of F.  Requires a central product.
MoveCertificate conjugation_certificate(const TwistTable& t,
                                        const Factorization& F,
                                        const McgWord& phi);

// Certificate from F1 . F2 to F2 . F1; requires product(F2) central.
MoveCertificate block_commute_certificate(const TwistTable& t,
                                          const Factorization& F1,
                                          const Factorization& F2);

// Raw move emitters (always-legal Hurwitz juggling; no centrality needed).
// Moves the length-`len` block starting at `from` so it starts at `to`
// (to < from), passing over the factors in between, which become conjugated
// by the block.  Appends to cert.
void emit_block_left(MoveCertificate& cert, std::size_t from, std::size_t len,
                     std::size_t to);
// Mirror image: block moves right, passed factors get conjugated.
void emit_block_right(MoveCertificate& cert, std::size_t from, std::size_t len,
                      std::size_t to);

}  // namespace mcg
