#include "mcg/stabilize.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace mcg {

namespace {

std::string step_text(const DerivationStep& s) {
  switch (s.kind) {
    case DerivationStep::HR:
      return "R " + std::to_string(s.index + 1);
    case DerivationStep::HL:
      return "L " + std::to_string(s.index + 1);
    case DerivationStep::PCreate:
      return "PCREATE " + std::to_string(s.index + 1);
    case DerivationStep::PCancel:
      return "PCANCEL " + std::to_string(s.index + 1);
    case DerivationStep::Rel:
      return "REL";
  }
  return "?";
}

bool is_bare_a(const SignedFactor& f, int idx) {
  return !f.f.base.sep && f.f.base.idx == idx && f.f.conj.empty();
}

// Applies one derivation step in place, validating its preconditions.
// PCancel steps get their pair information filled in, which makes the
// resulting certificate reversible.
void apply_step(const TwistTable& t, SignedFactorization& S, DerivationStep& s,
                std::size_t step_no) {
  auto fail = [&](const std::string& why) {
    throw illegal_move_error(step_no, step_text(s) + ": " + why);
  };
  auto& fs = S.factors;
  switch (s.kind) {
    case DerivationStep::HR:
    case DerivationStep::HL: {
      if (s.index + 1 >= fs.size()) fail("index out of range");
      if (fs[s.index].sign < 0 || fs[s.index + 1].sign < 0)
        fail("Hurwitz moves may only involve positive factors");
      Factorization tmp;
      tmp.genus = S.genus;
      tmp.factors = {fs[s.index].f, fs[s.index + 1].f};
      tmp = s.kind == DerivationStep::HR ? hurwitz_right(tmp, 0)
                                         : hurwitz_left(tmp, 0);
      fs[s.index].f = tmp[0];
      fs[s.index + 1].f = tmp[1];
      break;
    }
    case DerivationStep::PCreate: {
      if (s.index > fs.size()) fail("index out of range");
      if (s.gen.sep) fail("pair creation needs a nonseparating generator");
      if (!valid_for_genus(s.gen, S.genus)) fail("generator out of range");
      SignedFactor pos{Factor{s.gen, {}}, 1}, neg{Factor{s.gen, {}}, -1};
      if (s.neg_first) {
        fs.insert(fs.begin() + s.index, {neg, pos});
      } else {
        fs.insert(fs.begin() + s.index, {pos, neg});
      }
      break;
    }
    case DerivationStep::PCancel: {
      if (s.index + 1 >= fs.size()) fail("index out of range");
      const auto &x = fs[s.index], &y = fs[s.index + 1];
      if (!x.f.conj.empty() || !y.f.conj.empty())
        fail("cancellation needs bare factors");
      if (x.f.base.sep || x.f.base != y.f.base || x.sign != -y.sign)
        fail("factors are not an inverse pair");
      s.gen = x.f.base;
      s.neg_first = x.sign < 0;
      s.pair_known = true;
      fs.erase(fs.begin() + s.index, fs.begin() + s.index + 2);
      break;
    }
    case DerivationStep::Rel: {
      if (s.relkind == RelKind::commute || s.relkind == RelKind::braid) {
        std::size_t len = s.relkind == RelKind::commute ? 2 : 3;
        if (s.index + len > fs.size()) fail("index out of range");
        for (std::size_t i = 0; i < len; ++i) {
          if (fs[s.index + i].sign < 0 || !fs[s.index + i].f.conj.empty() ||
              fs[s.index + i].f.base.sep)
            fail("relation needs bare positive generator factors");
        }
        int i0 = fs[s.index].f.base.idx, j0 = fs[s.index + 1].f.base.idx;
        if (s.relkind == RelKind::commute) {
          if (i0 == j0 || curves_meet(i0, j0))
            fail("generators do not commute");
          std::swap(fs[s.index], fs[s.index + 1]);
        } else {
          if (!curves_meet(i0, j0)) fail("curves are disjoint, no braid relation");
          if (fs[s.index + 2].f.base.idx != i0)
            fail("pattern is not a_i a_j a_i");
          fs[s.index].f.base.idx = j0;
          fs[s.index + 1].f.base.idx = i0;
          fs[s.index + 2].f.base.idx = j0;
        }
      } else {
        auto src = subst_source(s.relkind, s.forward);
        auto tgt = subst_target(s.relkind, s.forward);
        if (s.index + src.size() > fs.size()) fail("block exceeds factorization");
        for (std::size_t i = 0; i < src.size(); ++i)
          if (!is_bare_a(fs[s.index + i], src[i]) || fs[s.index + i].sign < 0)
            fail("block does not literally match the relation pattern");
        std::vector<SignedFactor> repl;
        for (int gidx : tgt) repl.push_back({Factor{GenId::a(gidx), {}}, 1});
        fs.erase(fs.begin() + s.index, fs.begin() + s.index + src.size());
        fs.insert(fs.begin() + s.index, repl.begin(), repl.end());
      }
      break;
    }
  }
}

}  // namespace

DerivationCertificate DerivationCertificate::reversed() const {
  DerivationCertificate r;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    DerivationStep s = *it;
    switch (s.kind) {
      case DerivationStep::HR:
        s.kind = DerivationStep::HL;
        break;
      case DerivationStep::HL:
        s.kind = DerivationStep::HR;
        break;
      case DerivationStep::PCreate:
        s.kind = DerivationStep::PCancel;
        break;
      case DerivationStep::PCancel:
        require(s.pair_known,
                "cannot reverse a PCANCEL whose pair is unknown; replay the "
                "derivation first");
        s.kind = DerivationStep::PCreate;
        break;
      case DerivationStep::Rel:
        if (s.relkind == RelKind::chain || s.relkind == RelKind::lantern ||
            s.relkind == RelKind::braid)
          s.forward = !s.forward;
        break;
    }
    r.steps.push_back(s);
  }
  return r;
}

SignedFactorization replay_derivation(const TwistTable& t,
                                      SignedFactorization S,
                                      const DerivationCertificate& d) {
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    DerivationStep s = d.steps[i];
    apply_step(t, S, s, i);
  }
  return S;
}

Factorization normalize_conjugators(const TwistTable& t, const Factorization& F) {
  Factorization R = F;
  for (auto& f : R.factors) {
    bool has_sep = false;
    for (auto& l : f.conj.letters())
      if (l.gen.sep) has_sep = true;
    if (!has_sep) continue;
    McgWord w;
    for (auto& l : f.conj.letters()) {
      if (!l.gen.sep) {
        w.push(l);
        continue;
      }
      int h = l.gen.idx;
      McgWord hyp;
      for (int r2 = 0; r2 < 4 * h + 2; ++r2)
        for (int i = 1; i <= 2 * h; ++i) hyp.push(GenId::a(i));
      if (l.sign > 0)
        w.append(hyp);
      else
        w.append_inverse(hyp);
    }
    f.conj = w;
  }
  (void)t;
  return R;
}

SimplifyResult simplify(const TwistTable& t, const Factorization& F) {
  for (auto& f : F.factors) {
    require(!f.base.sep, "simplify: separating factor present");
    for (auto& l : f.conj.letters())
      require(!l.gen.sep,
              "simplify: conjugator contains separating letters; apply "
              "normalize_conjugators first");
  }
  SimplifyResult out;
  out.simplified = SignedFactorization::of(F);
  std::size_t pos = 0;
  std::size_t step_no = 0;
  for (auto& f : F.factors) {
    const auto& letters = f.conj.letters();
    std::size_t k = letters.size();
    std::size_t cur = pos;
    for (std::size_t jj = k; jj-- > 0;) {
      const McgLetter& l = letters[jj];
      DerivationStep c1 =
          l.sign > 0 ? DerivationStep::pcreate(cur, l.gen, true)
                     : DerivationStep::pcreate(cur + 1, l.gen, false);
      DerivationStep c2 = l.sign > 0 ? DerivationStep::hl(cur + 1)
                                     : DerivationStep::hr(cur);
      apply_step(t, out.simplified, c1, step_no++);
      apply_step(t, out.simplified, c2, step_no++);
      out.cert.push(c1);
      out.cert.push(c2);
      cur += 1;
    }
    require(out.simplified.factors[cur].f.conj.empty(),
            "simplify: expansion did not terminate in a bare factor");
    pos += 2 * k + 1;
  }
  return out;
}

StabilizationLedger trade_ledger(const MoveCertificate& cert) {
  StabilizationLedger led;
  for (auto& m : cert.moves) {
    if (m.kind != Move::Subst) continue;
    if (m.rel == RelKind::chain)
      led.l += m.forward ? 1 : -1;
    else if (m.rel == RelKind::lantern)
      led.k += m.forward ? 1 : -1;
  }
  return led;
}

CompileResult compile_positive(const TwistTable& t, const Factorization& F,
                               const Factorization& Fp,
                               const DerivationCertificate& d) {
  require(F.genus == Fp.genus, "compile_positive: genus mismatch");
  const int g = F.genus;

  // pass 1: validate the derivation and find the negative-count supremum
  long n = 0;
  {
    SignedFactorization S = SignedFactorization::of(F);
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
      DerivationStep s = d.steps[i];
      apply_step(t, S, s, i);
      n = std::max(n, S.negatives());
    }
    bool ok = S.size() == Fp.size();
    if (ok)
      for (std::size_t i = 0; i < S.size(); ++i)
        if (S.factors[i].sign < 0 || !factor_equal(t, S.factors[i].f, Fp[i])) {
          ok = false;
          break;
        }
    require(ok, "compile_positive: derivation endpoints mismatch");
  }

  const Factorization Auni = build_universal(UniversalKind::A, g);
  const std::size_t alen = Auni.size();

  CompileResult out;
  out.n = n;
  out.start = F;
  out.end = Fp;
  for (long c = 0; c < n; ++c) {
    out.start.append(Auni);
    out.end.append(Auni);
  }

  // pass 2: emit moves, tracking the block length of every signed factor
  SignedFactorization S = SignedFactorization::of(F);
  std::vector<std::size_t> blocks(S.size(), 1);
  std::size_t total = F.size();  // sum of blocks; the pad zone starts here
  long tail = n;
  std::map<int, AiResult> ai_cache;
  auto ai = [&](int idx) -> const AiResult& {
    auto it = ai_cache.find(idx);
    if (it == ai_cache.end()) it = ai_cache.emplace(idx, build_Ai(idx, g)).first;
    return it->second;
  };
  auto pos_of = [&](std::size_t i) {
    std::size_t p = 0;
    for (std::size_t j = 0; j < i; ++j) p += blocks[j];
    return p;
  };

  for (std::size_t sn = 0; sn < d.steps.size(); ++sn) {
    DerivationStep s = d.steps[sn];
    const std::size_t q = pos_of(std::min<std::size_t>(s.index, S.size()));
    switch (s.kind) {
      case DerivationStep::HR:
        out.cert.push(Move::r(q));
        break;
      case DerivationStep::HL:
        out.cert.push(Move::l(q));
        break;
      case DerivationStep::Rel:
        if (s.relkind == RelKind::commute) {
          out.cert.push(Move::r(q));
        } else if (s.relkind == RelKind::braid) {
          out.cert.push(Move::r(q));
          out.cert.push(Move::r(q + 1));
        } else {
          out.cert.push(Move::subst(s.relkind, s.forward, q));
          auto src = subst_source(s.relkind, s.forward);
          auto tgt = subst_target(s.relkind, s.forward);
          blocks.erase(blocks.begin() + s.index, blocks.begin() + s.index + src.size());
          blocks.insert(blocks.begin() + s.index, tgt.size(), 1);
          total += tgt.size() - src.size();
          if (s.relkind == RelKind::chain)
            out.l += s.forward ? 1 : -1;
          else
            out.k += s.forward ? 1 : -1;
        }
        break;
      case DerivationStep::PCancel: {
        // window [q, q+alen) holds the pair (bare generator + expansion)
        bool pos_first = S.factors[s.index].sign > 0;
        int gi = S.factors[s.index].f.base.idx;
        const AiResult& A = ai(gi);
        out.cert.append((pos_first ? A.to_front : A.to_back).reversed().offset(q));
        std::size_t suffix = total - (q + alen);
        emit_block_right(out.cert, q, alen, q + suffix);
        blocks.erase(blocks.begin() + s.index, blocks.begin() + s.index + 2);
        total -= alen;
        ++tail;
        break;
      }
      case DerivationStep::PCreate: {
        require(tail >= 1, "compile_positive: no padding copy left");
        int gi = s.gen.idx;
        const AiResult& A = ai(gi);
        emit_block_left(out.cert, total, alen, q);
        total += alen;
        --tail;
        out.cert.append((s.neg_first ? A.to_back : A.to_front).offset(q));
        if (s.neg_first) {
          blocks.insert(blocks.begin() + s.index, {alen - 1, 1});
        } else {
          blocks.insert(blocks.begin() + s.index, {1, alen - 1});
        }
        break;
      }
    }
    apply_step(t, S, s, sn);
    // negative factors are represented by expansion blocks
    if (s.kind == DerivationStep::PCancel || s.kind == DerivationStep::PCreate) {
      require(blocks.size() == S.size(), "compile_positive: block bookkeeping");
    }
  }
  require(tail == n, "compile_positive: pad accounting mismatch");
  return out;
}

ReducibleResult reducible_normalize(const TwistTable& t, const Factorization& F,
                                    const Factorization& Fp) {
  require(F.genus == Fp.genus, "reducible_normalize: genus mismatch");
  FiberCensus cF = census(F), cFp = census(Fp);
  require(cF.separating == cFp.separating, "reducible_normalize: census mismatch");
  const int g = F.genus;

  ReducibleResult out;
  out.prefix.genus = g;
  out.tail_F.genus = g;
  out.tail_Fp.genus = g;

  // target order of separating factors: by type, then by position
  auto sep_order = [&](const Factorization& X) {
    std::vector<std::size_t> ord;
    for (int h = 1; h <= g / 2; ++h)
      for (std::size_t i = 0; i < X.size(); ++i)
        if (X[i].base.sep && X[i].base.idx == h) ord.push_back(i);
    return ord;
  };
  auto ordF = sep_order(F), ordFp = sep_order(Fp);
  const std::size_t s = ordF.size();

  // sorting certificate: bubble each separating factor to its slot (the
  // mover keeps its conjugator; passed factors pick the mover's word up)
  auto sort_cert = [&](const Factorization& X, std::vector<std::size_t> ord) {
    MoveCertificate c;
    std::vector<int> id(X.size());
    for (std::size_t i = 0; i < X.size(); ++i) id[i] = static_cast<int>(i);
    for (std::size_t slot = 0; slot < ord.size(); ++slot) {
      std::size_t p = 0;
      while (id[p] != static_cast<int>(ord[slot])) ++p;
      for (std::size_t i = p; i-- > slot;) {
        c.push(Move::r(i));
        std::swap(id[i], id[i + 1]);
      }
    }
    return c;
  };
  out.cert_F = sort_cert(F, ordF);
  out.cert_Fp = sort_cert(Fp, ordFp);

  // conjugating words, with separating letters expanded to a-words
  auto expand = [&](const McgWord& w) {
    McgWord r;
    for (auto& l : w.letters()) {
      if (!l.gen.sep) {
        r.push(l);
        continue;
      }
      McgWord hyp;
      for (int rr = 0; rr < 4 * l.gen.idx + 2; ++rr)
        for (int i = 1; i <= 2 * l.gen.idx; ++i) hyp.push(GenId::a(i));
      if (l.sign > 0)
        r.append(hyp);
      else
        r.append_inverse(hyp);
    }
    return r;
  };
  std::vector<McgWord> words(s);
  for (std::size_t j = 0; j < s; ++j) {
    const Factor& tau = F[ordF[j]];
    const Factor& taup = Fp[ordFp[j]];
    require(tau.base == taup.base, "reducible_normalize: type mismatch");
    McgWord w = tau.conj.inverse();
    w.append(taup.conj);
    words[j] = expand(w);
    out.N += static_cast<long>(words[j].size());
  }

  // F side: per conjugator letter, pull one A copy next to the separating
  // factor, open it at the letter's generator, and exchange.
  std::map<int, AiResult> ai_cache;
  auto ai = [&](int idx) -> const AiResult& {
    auto it = ai_cache.find(idx);
    if (it == ai_cache.end())
      it = ai_cache.emplace(idx, build_Ai(idx, g)).first;
    return it->second;
  };
  const std::size_t alen = build_universal(UniversalKind::A, g).size();
  std::size_t W = F.size();  // working length; the pad zone starts here
  for (std::size_t j = 0; j < s; ++j) {
    for (auto& l : words[j].letters()) {
      emit_block_left(out.cert_F, W, alen, j + 1);
      W += alen;
      const AiResult& A = ai(l.gen.idx);
      if (l.sign > 0) {
        out.cert_F.append(A.to_front.offset(j + 1));
        out.cert_F.push(Move::r(j));
        out.cert_F.push(Move::r(j));
      } else {
        emit_block_left(out.cert_F, j + 1, alen, j);
        out.cert_F.append(A.to_back.offset(j));
        out.cert_F.push(Move::l(j + alen - 1));
        for (std::size_t i2 = j + alen - 1; i2-- > j;)
          out.cert_F.push(Move::r(i2));
      }
    }
  }

  // realize both sides to extract prefix and tails
  Factorization padF = F;
  for (long c = 0; c < out.N; ++c) padF.append(build_universal(UniversalKind::A, g));
  Factorization padFp = Fp;
  for (long c = 0; c < out.N; ++c) padFp.append(build_universal(UniversalKind::A, g));
  Factorization doneF = replay(t, padF, out.cert_F);
  Factorization doneFp = replay(t, padFp, out.cert_Fp);
  for (std::size_t j = 0; j < s; ++j) {
    require(factor_equal(t, doneF[j], doneFp[j]),
            "reducible_normalize: prefixes disagree");
    out.prefix.factors.push_back(doneFp[j]);
  }
  out.tail_F.factors.assign(doneF.factors.begin() + s, doneF.factors.end());
  out.tail_Fp.factors.assign(doneFp.factors.begin() + s, doneFp.factors.end());
  for (auto& f : out.tail_F.factors)
    require(!f.base.sep, "reducible_normalize: separating factor left in tail");
  return out;
}

StableResult stable_equivalence(const TwistTable& t, const Factorization& F,
                                const Factorization& Fp,
                                const DerivationCertificate& d) {
  require(F.genus == Fp.genus, "stable_equivalence: genus mismatch");
  auto mF = t.detect_boundary_power(product(t, F));
  auto mFp = t.detect_boundary_power(product(t, Fp));
  require(mF.has_value() && mFp.has_value(),
          "stable_equivalence: hypothesis (ii) fails, product is not a "
          "boundary power");
  require(*mF == *mFp,
          "stable_equivalence: hypothesis (ii) fails, section squares differ");
  require(census(F).separating == census(Fp).separating,
          "stable_equivalence: hypothesis (iii) fails, censuses differ");

  const int g = F.genus;
  const bool has_sep = !census(F).separating.empty();

  Factorization midF = normalize_conjugators(t, F);
  Factorization midFp = normalize_conjugators(t, Fp);
  ReducibleResult red;
  std::size_t prefix_len = 0;
  if (has_sep) {
    red = reducible_normalize(t, midF, midFp);
    midF = normalize_conjugators(t, red.tail_F);
    midFp = normalize_conjugators(t, red.tail_Fp);
    prefix_len = red.prefix.size();
  }

  CompileResult comp = compile_positive(t, midF, midFp, d);

  StableResult res;
  res.ledger.l = comp.l;
  res.ledger.k = comp.k;
  const long EA = red.N + comp.n;
  res.ledger.n = EA;

  const Factorization Auni = build_universal(UniversalKind::A, g);
  res.start = F;
  res.end = Fp;
  for (long c = 0; c < EA; ++c) {
    res.start.append(Auni);
    res.end.append(Auni);
  }
  if (has_sep) {
    res.cert.append(red.cert_F);
    res.cert.append(comp.cert.offset(prefix_len));
    res.cert.append(red.cert_Fp.reversed());
  } else {
    res.cert = comp.cert;
  }

  // Euler bookkeeping: r' - r must equal -10 l + 9 k.
  long dr = static_cast<long>(Fp.size()) - static_cast<long>(F.size());
  require(dr == -10 * res.ledger.l + 9 * res.ledger.k,
          "stable_equivalence: ledger contradiction (Euler characteristic)");

  // Signature bookkeeping on the padded endpoints.
  long sig_start = signature(t, res.start).signature;
  long sig_end = signature(t, res.end).signature;
  require(sig_end - sig_start == 6 * res.ledger.l - 5 * res.ledger.k,
          "stable_equivalence: ledger contradiction (signature)");
  if (dr == 0 && sig_end == sig_start)
    require(res.ledger.l == 0 && res.ledger.k == 0,
            "stable_equivalence: trades did not cancel");

  // Presentation padding: with balanced trades the padding is a power of
  // the fiber-sum universal factorization.
  if (res.ledger.l == 0 && res.ledger.k == 0) {
    res.ledger.a = res.ledger.b = res.ledger.c = res.ledger.d = EA;
    if (EA > 0) {
      Factorization tailBCD;
      tailBCD.genus = g;
      for (auto kind :
           {UniversalKind::B, UniversalKind::C, UniversalKind::D}) {
        Factorization U = build_universal(kind, g);
        for (long c = 0; c < EA; ++c) tailBCD.append(U);
      }
      // endpoints presented as X . (F0)^EA; bubble the copies apart so the
      // working certificate only ever sees the A-copies
      Factorization f0 = build_universal(UniversalKind::F0, g);
      Factorization startP = F, endP = Fp;
      for (long c = 0; c < EA; ++c) {
        startP.append(f0);
        endP.append(f0);
      }
      MoveCertificate bubble;
      {
        // blocks: (A B C D)^EA -> A^EA B^EA C^EA D^EA by selection moves
        std::vector<std::pair<int, std::size_t>> blks;  // kind 0..3, len
        std::size_t lens[4] = {build_universal(UniversalKind::A, g).size(),
                               build_universal(UniversalKind::B, g).size(),
                               build_universal(UniversalKind::C, g).size(),
                               build_universal(UniversalKind::D, g).size()};
        for (long c = 0; c < EA; ++c)
          for (int kk = 0; kk < 4; ++kk) blks.push_back({kk, lens[kk]});
        std::size_t base = F.size();
        for (int want = 0; want < 4; ++want) {
          for (long c = 0; c < EA; ++c) {
            // next block of kind `want` moves to the write position
            std::size_t at = base;
            std::size_t bi = 0;
            // skip already-sorted prefix
            std::size_t sorted = 0;
            for (int w2 = 0; w2 < want; ++w2) sorted += EA * lens[w2];
            sorted += static_cast<std::size_t>(c) * lens[want];
            at = base;
            for (bi = 0; bi < blks.size(); ++bi) {
              if (at >= base + sorted && blks[bi].first == want) break;
              at += blks[bi].second;
            }
            emit_block_left(bubble, at, blks[bi].second, base + sorted);
            auto moved = blks[bi];
            blks.erase(blks.begin() + bi);
            std::size_t ins = 0, acc = base;
            while (acc < base + sorted) acc += blks[ins++].second;
            blks.insert(blks.begin() + ins, moved);
          }
        }
      }
      MoveCertificate full = bubble;
      full.append(res.cert);
      full.append(bubble.reversed());
      res.cert = full;
      res.start = startP;
      res.end = endP;
    }
  } else {
    res.ledger.a = EA;
  }

  CheckResult chk = check_certificate(t, res.start, res.cert, res.end);
  require(chk.ok, "stable_equivalence: certificate verification failed at step " +
                      std::to_string(chk.step) + ": " + chk.reason);
  res.verified = true;
  return res;
}

std::optional<DerivationCertificate> bounded_search(const TwistTable& t,
                                                    const Factorization& F,
                                                    const Factorization& Fp,
                                                    std::size_t budget) {
  require(F.genus == Fp.genus, "bounded_search: genus mismatch");
  using Key = std::vector<long>;
  auto key_of = [](const SignedFactorization& S) {
    Key k;
    k.push_back(static_cast<long>(S.size()));
    for (auto& f : S.factors) {
      k.push_back(f.sign);
      k.push_back(f.f.base.sep ? 1 : 0);
      k.push_back(f.f.base.idx);
      k.push_back(static_cast<long>(f.f.conj.size()));
      for (auto& l : f.f.conj.letters()) {
        k.push_back(l.gen.sep ? 1 : 0);
        k.push_back(l.gen.idx);
        k.push_back(l.sign);
      }
    }
    return k;
  };

  SignedFactorization start = SignedFactorization::of(F);
  Key target = key_of(SignedFactorization::of(Fp));
  if (key_of(start) == target) return DerivationCertificate{};

  std::map<Key, std::pair<Key, DerivationStep>> parent;
  std::queue<SignedFactorization> q;
  q.push(start);
  parent[key_of(start)] = {Key{}, DerivationStep::hr(0)};
  std::size_t expanded = 0;

  auto candidates = [&](const SignedFactorization& S) {
    std::vector<DerivationStep> cs;
    const auto& fs = S.factors;
    for (std::size_t i = 0; i + 1 < fs.size(); ++i) {
      if (fs[i].sign > 0 && fs[i + 1].sign > 0) {
        cs.push_back(DerivationStep::hr(i));
        cs.push_back(DerivationStep::hl(i));
      }
      if (fs[i].f.conj.empty() && fs[i + 1].f.conj.empty() &&
          !fs[i].f.base.sep && fs[i].f.base == fs[i + 1].f.base &&
          fs[i].sign == -fs[i + 1].sign)
        cs.push_back(DerivationStep::pcancel(i));
      bool both_bare = fs[i].sign > 0 && fs[i + 1].sign > 0 &&
                       fs[i].f.bare() && fs[i + 1].f.bare() &&
                       !fs[i].f.base.sep && !fs[i + 1].f.base.sep;
      if (both_bare) {
        int a = fs[i].f.base.idx, b = fs[i + 1].f.base.idx;
        if (a != b && !curves_meet(a, b))
          cs.push_back(DerivationStep::rel(RelKind::commute, true, i));
        if (i + 2 < fs.size() && fs[i + 2].sign > 0 && fs[i + 2].f.bare() &&
            !fs[i + 2].f.base.sep && fs[i + 2].f.base.idx == a &&
            curves_meet(a, b))
          cs.push_back(DerivationStep::rel(RelKind::braid, true, i));
      }
    }
    for (RelKind rk : {RelKind::chain, RelKind::lantern})
      for (bool fwd : {true, false}) {
        auto src = subst_source(rk, fwd);
        if (src.size() > fs.size()) continue;
        for (std::size_t at = 0; at + src.size() <= fs.size(); ++at) {
          bool m = true;
          for (std::size_t i = 0; i < src.size() && m; ++i)
            m = fs[at + i].sign > 0 && is_bare_a(fs[at + i], src[i]);
          if (m) cs.push_back(DerivationStep::rel(rk, fwd, at));
        }
      }
    if (S.negatives() < 1 && fs.size() <= 8) {
      for (int gi = 0; gi <= 2 * S.genus; ++gi)
        for (bool nf : {false, true})
          for (std::size_t at = 0; at <= fs.size(); ++at)
            cs.push_back(DerivationStep::pcreate(at, GenId::a(gi), nf));
    }
    return cs;
  };

  while (!q.empty() && expanded < budget) {
    SignedFactorization S = q.front();
    q.pop();
    ++expanded;
    Key sk = key_of(S);
    for (DerivationStep s : candidates(S)) {
      SignedFactorization T2 = S;
      try {
        apply_step(t, T2, s, 0);
      } catch (const error&) {
        continue;
      }
      Key tk = key_of(T2);
      if (parent.count(tk)) continue;
      parent[tk] = {sk, s};
      if (tk == target) {
        DerivationCertificate path;
        Key cur = tk;
        std::vector<DerivationStep> rev;
        while (!(cur == key_of(start))) {
          auto& pr = parent[cur];
          rev.push_back(pr.second);
          cur = pr.first;
        }
        for (auto it = rev.rbegin(); it != rev.rend(); ++it) path.push(*it);
        return path;
      }
      q.push(T2);
    }
  }
  return std::nullopt;
}

}  // namespace mcg
