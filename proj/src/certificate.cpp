#include "mcg/certificate.hpp"

#include "mcg/parallel.hpp"

namespace mcg {

MoveCertificate MoveCertificate::offset(std::size_t by) const {
  MoveCertificate r;
  r.moves.reserve(moves.size());
  for (Move m : moves) {
    if (m.kind != Move::Conj) m.index += by;
    r.moves.push_back(std::move(m));
  }
  return r;
}

MoveCertificate MoveCertificate::reversed() const {
  MoveCertificate r;
  r.moves.reserve(moves.size());
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
    Move m = *it;
    switch (m.kind) {
      case Move::R:
        m.kind = Move::L;
        break;
      case Move::L:
        m.kind = Move::R;
        break;
      case Move::Conj:
        m.conj = m.conj.inverse();
        break;
      case Move::Subst:
        m.forward = !m.forward;
        break;
    }
    r.moves.push_back(std::move(m));
  }
  return r;
}

namespace {

// in-place variants used by replay; the public hurwitz_* return copies
void hurwitz_right_inplace(Factorization& F, std::size_t i) {
  require(i + 1 < F.size(), "hurwitz_right: index out of range");
  Factor moved = std::move(F.factors[i]);
  moved.conj.append(word_of_factor(F.factors[i + 1]));
  F.factors[i] = std::move(F.factors[i + 1]);
  F.factors[i + 1] = std::move(moved);
}

void hurwitz_left_inplace(Factorization& F, std::size_t i) {
  require(i + 1 < F.size(), "hurwitz_left: index out of range");
  Factor moved = std::move(F.factors[i + 1]);
  moved.conj.append_inverse(word_of_factor(F.factors[i]));
  F.factors[i + 1] = std::move(F.factors[i]);
  F.factors[i] = std::move(moved);
}

}  // namespace

Factorization replay(const TwistTable& t, Factorization F,
                     const MoveCertificate& cert) {
  for (std::size_t s = 0; s < cert.size(); ++s) {
    const Move& m = cert.moves[s];
    try {
      switch (m.kind) {
        case Move::R:
          hurwitz_right_inplace(F, m.index);
          break;
        case Move::L:
          hurwitz_left_inplace(F, m.index);
          break;
        case Move::Conj:
          F = global_conjugate(F, m.conj);
          break;
        case Move::Subst: {
          auto src = subst_source(m.rel, m.forward);
          auto tgt = subst_target(m.rel, m.forward);
          require(m.index + src.size() <= F.size(),
                  "substitution block exceeds factorization");
          McgWord block;
          for (std::size_t i = 0; i < src.size(); ++i)
            block.append(word_of_factor(F[m.index + i]));
          McgWord repl;
          for (int g : tgt) repl.push(GenId::a(g));
          require(t.words_equal(block, repl),
                  "substitution block product does not match the relation");
          std::vector<Factor> out;
          out.reserve(F.size() - src.size() + tgt.size());
          out.insert(out.end(), F.factors.begin(), F.factors.begin() + m.index);
          for (int g : tgt) out.push_back(Factor{GenId::a(g), {}});
          out.insert(out.end(), F.factors.begin() + m.index + src.size(),
                     F.factors.end());
          F.factors = std::move(out);
          break;
        }
      }
    } catch (const error& e) {
      throw illegal_move_error(s, e.what());
    }
  }
  return F;
}

CheckResult check_certificate(const TwistTable& t, const Factorization& start,
                              const MoveCertificate& cert,
                              const Factorization& end) {
  Factorization got;
  try {
    got = replay(t, start, cert);
  } catch (const illegal_move_error& e) {
    return {false, e.step, e.what()};
  }
  if (got.genus != end.genus || got.size() != end.size())
    return {false, cert.size(), "endpoint size mismatch"};
  for (std::size_t i = 0; i < got.size(); ++i)
    if (!factor_equal(t, got[i], end[i]))
      return {false, cert.size(),
              "endpoint factor " + std::to_string(i + 1) + " differs"};
  return {true, 0, ""};
}

void emit_block_left(MoveCertificate& cert, std::size_t from, std::size_t len,
                     std::size_t to) {
  require(to <= from, "emit_block_left: target right of source");
  for (std::size_t q = from; q-- > to;)
    for (std::size_t i = q; i < q + len; ++i) cert.push(Move::r(i));
}

void emit_block_right(MoveCertificate& cert, std::size_t from, std::size_t len,
                      std::size_t to) {
  require(from <= to, "emit_block_right: target left of source");
  for (std::size_t q = from; q < to; ++q)
    for (std::size_t i = q + len; i-- > q;) cert.push(Move::l(i));
}

namespace {

void require_central(const TwistTable& t, const Factorization& F,
                     const char* who) {
  auto m = t.detect_boundary_power(product(t, F));
  require(m.has_value(), std::string(who) + ": product is not a boundary power");
}

// one full rotation's moves for a factorization of size r
void emit_rotation(MoveCertificate& cert, std::size_t r) {
  for (std::size_t i = 0; i + 1 < r; ++i) cert.push(Move::r(i));
}

}  // namespace

std::pair<Factorization, MoveCertificate> rotate_certificate(
    const TwistTable& t, const Factorization& F) {
  require_central(t, F, "rotate_certificate");
  MoveCertificate cert;
  Factorization end = F;
  if (F.size() >= 2) {
    emit_rotation(cert, F.size());
    end.factors.erase(end.factors.begin());
    end.factors.push_back(F[0]);
  }
  return {end, cert};
}

MoveCertificate conjugation_certificate(const TwistTable& t,
                                        const Factorization& F,
                                        const McgWord& phi) {
  require_central(t, F, "conjugation_certificate");
  MoveCertificate cert;
  Factorization cur = F;
  const std::size_t r = F.size();

  // one positive letter: F ~ (F)_tau for a factor twist tau
  auto single = [&](const Factorization& base, GenId g) {
    Factor bare{g, {}};
    std::size_t p = base.size();
    for (std::size_t i = 0; i < base.size(); ++i)
      if (factor_equal(t, base[i], bare)) {
        p = i;
        break;
      }
    require(p < base.size(),
            "conjugation_certificate: " + to_string(g) +
                " is not a factor of the factorization");
    MoveCertificate c;
    for (std::size_t k = 0; k < p + 1; ++k) emit_rotation(c, r);
    for (std::size_t i = r - 1; i-- > 0;) c.push(Move::r(i));
    for (std::size_t k = 0; k < r - p; ++k) emit_rotation(c, r);
    return c;
  };

  for (auto& l : phi.letters()) {
    if (l.sign > 0) {
      cert.append(single(cur, l.gen));
      cur = global_conjugate(cur, word_of(l.gen, 1));
    } else {
      Factorization pre = global_conjugate(cur, word_of(l.gen, -1));
      cert.append(single(pre, l.gen).reversed());
      cur = pre;
    }
  }
  return cert;
}

MoveCertificate block_commute_certificate(const TwistTable& t,
                                          const Factorization& F1,
                                          const Factorization& F2) {
  require_central(t, F2, "block_commute_certificate");
  MoveCertificate cert;
  if (!F1.size() || !F2.size()) return cert;
  emit_block_left(cert, F1.size(), F2.size(), 0);
  return cert;
}

}  // namespace mcg
