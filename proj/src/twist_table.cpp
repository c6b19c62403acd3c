#include "mcg/twist_table.hpp"

#include <algorithm>

namespace mcg {

namespace {

// Expands an even-length word in the branch reflections u_1..u_{2g+1} into
// the kernel basis y_j = u_{j+1} u_1:  u_a u_b == y_{a-1} y_{b-1}^-1, with
// y_0 the empty word.
FreeWord u_to_y(const std::vector<int>& us) {
  require(us.size() % 2 == 0, "u word must have even length");
  FreeWord r;
  for (std::size_t t = 0; t < us.size(); t += 2) {
    if (us[t] >= 2) r.push(us[t] - 1);
    if (us[t + 1] >= 2) r.push(-(us[t + 1] - 1));
  }
  return r;
}

FreeWord conj(const FreeWord& core, const FreeWord& x) {
  // core * x * core^-1
  FreeWord r = core;
  r.append(x);
  r.append_inverse(core);
  return r;
}

}  // namespace

TwistTable::TwistTable(int genus) : genus_(genus) {
  require(genus >= 3, "genus must be >= 3");
  const int n = 2 * genus;

  // --- twists in the y basis -------------------------------------------
  std::vector<Automorphism> yfwd(num_a() + num_s()), yinv(num_a() + num_s());
  for (int i = 1; i <= n; ++i) {
    Automorphism a = Automorphism::identity(n), ai = Automorphism::identity(n);
    if (i == 1) {
      for (int j = 2; j <= n; ++j) {
        a.set_image(j, FreeWord{j, 1});
        ai.set_image(j, FreeWord{j, -1});
      }
    } else {
      a.set_image(i - 1, FreeWord{i - 1, -i, i - 1});
      a.set_image(i, FreeWord{i - 1});
      ai.set_image(i - 1, FreeWord{i});
      ai.set_image(i, FreeWord{i, -(i - 1), i});
    }
    yfwd[i] = a;
    yinv[i] = ai;
  }
  // a_0: inserts the core of one lift of the round curve about p_1..p_4.
  // Loops through the enclosed region are conjugated, loops exiting past it
  // pick the core up once.
  const FreeWord core0 = u_to_y({1, 2, 3, 4});
  {
    Automorphism a = Automorphism::identity(n), ai = Automorphism::identity(n);
    for (int j = 1; j <= n; ++j) {
      FreeWord x = FreeWord::generator(j);
      if (j <= 3) {
        a.set_image(j, conj(core0, x));
        ai.set_image(j, conj(core0.inverse(), x));
      } else {
        FreeWord w = x, wi = x;
        w.append_inverse(core0);
        wi.append(core0);
        a.set_image(j, w);
        ai.set_image(j, wi);
      }
    }
    yfwd[0] = a;
    yinv[0] = ai;
  }

  // --- change of basis x <-> y ------------------------------------------
  // x_{2h-1} = y_{2h-1} W_h, x_{2h} = y_{2h} W_h with
  // W_h = (y_1 y_2^-1)...(y_{2h-3} y_{2h-2}^-1); the same product shape
  // inverts it letter-for-letter in the x alphabet.
  Automorphism to_y = Automorphism::identity(n);   // x written in y
  Automorphism to_x = Automorphism::identity(n);   // y written in x
  {
    FreeWord W, V;
    for (int h = 1; h <= genus; ++h) {
      if (h > 1) {
        W.append(FreeWord{2 * h - 3, -(2 * h - 2)});
        V.append(FreeWord{2 * h - 3, -(2 * h - 2)});
      }
      FreeWord w1 = FreeWord::generator(2 * h - 1), w2 = FreeWord::generator(2 * h);
      w1.append(W);
      w2.append(W);
      to_y.set_image(2 * h - 1, w1);
      to_y.set_image(2 * h, w2);
      FreeWord v1 = FreeWord::generator(2 * h - 1), v2 = FreeWord::generator(2 * h);
      v1.append_inverse(V);
      v2.append_inverse(V);
      to_x.set_image(2 * h - 1, v1);
      to_x.set_image(2 * h, v2);
    }
  }
  require(verify_inverse(to_y, to_x), "basis change must be invertible");

  auto rebase = [&](const Automorphism& f) {
    return compose(compose(to_y, f), to_x);
  };

  fwd_.resize(num_a() + num_s());
  inv_.resize(num_a() + num_s());
  curve_.resize(num_a() + num_s());
  for (int i = 0; i < num_a(); ++i) {
    fwd_[i] = rebase(yfwd[i]);
    inv_[i] = rebase(yinv[i]);
  }

  // curve words: c_i is a lift of the arc p_i -- p_{i+1}; c_0 is the a_0 core.
  curve_[0] = to_x.apply(core0);
  for (int i = 1; i <= n; ++i) curve_[i] = to_x.apply(u_to_y({i, i + 1}));

  // boundary word and separating twists
  auto partial_boundary = [&](int h) {
    FreeWord d;
    for (int t = 1; t <= h; ++t) {
      d.push(-(2 * t - 1));
      d.push(2 * t);
      d.push(2 * t - 1);
      d.push(-(2 * t));
    }
    return d;
  };
  boundary_ = partial_boundary(genus);

  for (int h = 1; h <= num_s(); ++h) {
    FreeWord dh = partial_boundary(h);
    Automorphism s = Automorphism::identity(n), si = Automorphism::identity(n);
    for (int j = 1; j <= 2 * h; ++j) {
      FreeWord x = FreeWord::generator(j);
      s.set_image(j, conj(dh, x));
      si.set_image(j, conj(dh.inverse(), x));
    }
    int sl = num_a() + h - 1;
    fwd_[sl] = s;
    inv_[sl] = si;
    curve_[sl] = dh;
    // the template must agree with the hyperelliptic expression in the
    // subsurface; checked cheaply here for h = 1, fully in the tests
    if (h == 1) {
      McgWord w;
      for (int t = 0; t < 6; ++t) {
        w.push(GenId::a(1));
        w.push(GenId::a(2));
      }
      require(eval(w) == s, "separating twist template mismatch");
    }
  }

  // --- homology ----------------------------------------------------------
  // pairing in the x basis comes from the y-basis form <e_a,e_b> = sgn(a-b)
  // by the change of basis.
  {
    IMat P = abelianize(to_y);
    IMat Jy(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) Jy(a, b) = (a > b) - (a < b);
    pairing_ = mul(transpose(P), mul(Jy, P));
  }

  cls_.assign(num_a() + num_s(), IVec(n, 0));
  for (int i = 0; i < num_a(); ++i) {
    IMat M = abelianize(fwd_[i]);
    IVec v(n, 0);
    bool found = false;
    for (int j = 0; j < n && !found; ++j) {
      for (int a = 0; a < n; ++a) {
        v[a] = M(a, j) - (a == j ? 1 : 0);
        if (v[a] != 0) found = true;
      }
    }
    require(found, "twist abelianization is the identity");
    Int g = 0;
    for (auto& x : v) g = gcd(g, x);
    for (auto& x : v)
      if (g > 1) x /= g;
    for (auto& x : v) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : v) y = -y;
      break;
    }
    cls_[i] = v;
  }
}

int TwistTable::slot(GenId g) const {
  require(valid_for_genus(g, genus_),
          "generator " + to_string(g) + " invalid for genus " + std::to_string(genus_));
  return g.sep ? num_a() + g.idx - 1 : g.idx;
}

void TwistTable::validate_word(const McgWord& w) const {
  for (auto& l : w.letters()) (void)slot(l.gen);
}

Automorphism TwistTable::eval(const McgWord& w) const {
  Automorphism cur = Automorphism::identity(rank());
  for (auto& l : w.letters()) cur = compose(cur, gen_auto(l));
  return cur;
}

FreeWord TwistTable::apply_word(const McgWord& w, FreeWord v) const {
  for (auto& l : w.letters()) v = gen_auto(l).apply(v);
  return v;
}

Automorphism TwistTable::boundary_conjugation(long m) const {
  FreeWord dm = boundary_.pow(m);
  Automorphism r = Automorphism::identity(rank());
  for (int j = 1; j <= rank(); ++j) r.set_image(j, conj(dm, FreeWord::generator(j)));
  return r;
}

std::optional<long> TwistTable::detect_boundary_power(const Automorphism& f) const {
  if (f.rank() != rank()) return std::nullopt;
  if (f.is_identity()) return 0;
  // f(x_1) must be freely conjugate to x_1, and |d^m x_1 d^-m| grows like
  // 2 m |d| up to a bounded junction cancellation, so the candidate range
  // for m is small; scan it and compare exactly.
  FreeWord v = f.apply(FreeWord::generator(1));
  FreeWord wing;
  v.cyclic_reduce(&wing);
  if (!(v == FreeWord::generator(1) || v == FreeWord::generator(1).inverse()))
    return std::nullopt;
  long bound = static_cast<long>(wing.size() / boundary_.size()) + 2;
  for (long a = 1; a <= bound; ++a)
    for (long m : {a, -a})
      if (f == boundary_conjugation(m)) return m;
  return std::nullopt;
}

}  // namespace mcg
