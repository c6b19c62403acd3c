// Command-line workbench: builds the universal factorizations, computes
// fibration invariants, decides word equality, replays certificates, runs
// the stabilization pipeline, and self-tests.  Exit codes: 0 pass, 1 a check
// failed, 2 usage or parse error.

#include <atomic>
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "mcg/braid.hpp"
#include "mcg/io.hpp"
#include "mcg/parallel.hpp"
#include "mcg/rng.hpp"
#include "mcg/stabilize.hpp"

using namespace mcg;

namespace {

const TwistTable& table(int genus) {
  static std::map<int, std::unique_ptr<TwistTable>> cache;
  auto it = cache.find(genus);
  if (it == cache.end())
    it = cache.emplace(genus, std::make_unique<TwistTable>(genus)).first;
  return *it->second;
}

Factorization load_factorization(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error(0, "cannot open '" + path + "'");
  return parse_factorization(in);
}

UniversalKind kind_of(const std::string& name) {
  if (name == "A") return UniversalKind::A;
  if (name == "B") return UniversalKind::B;
  if (name == "C") return UniversalKind::C;
  if (name == "D") return UniversalKind::D;
  if (name == "F0") return UniversalKind::F0;
  if (name == "H" || name == "hyperelliptic") return UniversalKind::Hyperelliptic;
  throw error("unknown factorization name '" + name +
              "' (expected A, B, C, D, F0, H, or Rn)");
}

void print_invariants(const TwistTable& t, const Factorization& F) {
  SignatureReport rep = signature(t, F);
  std::cout << "chi: " << euler_characteristic(F) << "\n";
  std::cout << "sigma: " << rep.signature << "\n";
  std::cout << "section: " << section_square(t, F) << "\n";
  std::cout << "irreducible: " << rep.census.irreducible << "\n";
  for (auto& [h, cnt] : rep.census.separating)
    std::cout << "separating[" << h << "]: " << cnt << "\n";
  if (rep.recipe_extrapolated) std::cout << "recipe-extrapolated: yes\n";
}

int run_selftest(int genus, bool quick);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for positive factorizations in Map_{g,1}"};
  app.require_subcommand(1);

  // build
  auto* cmd_build = app.add_subcommand("build", "write a universal factorization");
  std::string build_name;
  int genus = 3, rn = 5;
  std::string out_path;
  cmd_build->add_option("name", build_name,
                        "A, B, C, D, F0, H (hyperelliptic), or Rn")->required();
  cmd_build->add_option("--genus", genus, "fiber genus (>= 3)");
  cmd_build->add_option("--n", rn, "n for Rn (padded R_n factorization)");
  cmd_build->add_option("--out", out_path, "output file (default stdout)");

  // invariants
  auto* cmd_inv = app.add_subcommand("invariants", "chi, sigma, census, section");
  std::string inv_path;
  cmd_inv->add_option("file", inv_path, "factorization file")->required();

  // equal
  auto* cmd_eq = app.add_subcommand("equal", "decide word equality in Map_{g,1}");
  std::string word1, word2;
  cmd_eq->add_option("w1", word1)->required();
  cmd_eq->add_option("w2", word2)->required();
  cmd_eq->add_option("--genus", genus, "fiber genus (>= 3)");

  // check-cert
  auto* cmd_chk = app.add_subcommand("check-cert", "replay a move certificate");
  std::string chk_start, chk_cert, chk_end;
  cmd_chk->add_option("start", chk_start)->required();
  cmd_chk->add_option("cert", chk_cert)->required();
  cmd_chk->add_option("end", chk_end)->required();

  // stabilize
  auto* cmd_stab = app.add_subcommand(
      "stabilize", "compile a derivation into a stabilized certificate");
  std::string stab_f, stab_fp, stab_d, stab_out;
  cmd_stab->add_option("F", stab_f)->required();
  cmd_stab->add_option("Fprime", stab_fp)->required();
  cmd_stab->add_option("--derivation", stab_d, "derivation file")->required();
  cmd_stab->add_option("--certificate", stab_out, "write the certificate here");

  // selftest
  auto* cmd_self = app.add_subcommand("selftest", "relator and golden-number suites");
  bool quick = false;
  cmd_self->add_option("--genus", genus, "fiber genus (>= 3)");
  cmd_self->add_flag("--quick", quick, "skip the slower signature checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*cmd_build) {
      Factorization F;
      if (build_name.size() >= 2 && build_name[0] == 'R' &&
          std::isdigit(static_cast<unsigned char>(build_name[1]))) {
        F = build_Rn_padded(genus, std::atoi(build_name.c_str() + 1));
      } else if (build_name == "Rn") {
        F = build_Rn_padded(genus, rn);
      } else {
        F = build_universal(kind_of(build_name), genus);
      }
      std::string text = serialize(F);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) throw error("cannot write '" + out_path + "'");
        out << text;
      }
    } else if (*cmd_inv) {
      Factorization F = load_factorization(inv_path);
      print_invariants(table(F.genus), F);
    } else if (*cmd_eq) {
      const TwistTable& t = table(genus);
      McgWord w1 = parse_word(word1, genus), w2 = parse_word(word2, genus);
      bool eq = t.words_equal(w1, w2);
      std::cout << (eq ? "equal" : "not-equal") << "\n";
      return eq ? 0 : 1;
    } else if (*cmd_chk) {
      Factorization S = load_factorization(chk_start);
      Factorization E = load_factorization(chk_end);
      require(S.genus == E.genus, "endpoint genera differ");
      std::ifstream in(chk_cert);
      if (!in) throw error("cannot open '" + chk_cert + "'");
      MoveCertificate cert = parse_move_certificate(in, S.genus);
      CheckResult res = check_certificate(table(S.genus), S, cert, E);
      if (res.ok) {
        std::cout << "certificate: ok (" << cert.size() << " moves)\n";
      } else {
        std::cout << "certificate: FAILED at step " << res.step + 1 << ": "
                  << res.reason << "\n";
        return 1;
      }
    } else if (*cmd_stab) {
      Factorization F = load_factorization(stab_f);
      Factorization Fp = load_factorization(stab_fp);
      require(F.genus == Fp.genus, "genus mismatch");
      std::ifstream in(stab_d);
      if (!in) throw error("cannot open '" + stab_d + "'");
      DerivationCertificate d = parse_derivation(in, F.genus);
      StableResult res = stable_equivalence(table(F.genus), F, Fp, d);
      std::cout << "n: " << res.ledger.n << "\n";
      std::cout << "a: " << res.ledger.a << "  b: " << res.ledger.b
                << "  c: " << res.ledger.c << "  d: " << res.ledger.d << "\n";
      std::cout << "k: " << res.ledger.k << "  l: " << res.ledger.l << "\n";
      std::cout << "moves: " << res.cert.size() << "\n";
      std::cout << "verified: " << (res.verified ? "yes" : "no") << "\n";
      if (!stab_out.empty()) {
        std::ofstream out(stab_out);
        if (!out) throw error("cannot write '" + stab_out + "'");
        out << serialize(res.cert);
      }
      if (!res.verified) return 1;
    } else if (*cmd_self) {
      return run_selftest(genus, quick);
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

namespace {

int run_selftest(int genus, bool quick) {
  int fails = 0;
  auto check = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "pass" : "FAIL") << "  " << what << "\n";
    if (!ok) ++fails;
  };
  const TwistTable& t = table(genus);
  const int n = 2 * genus;

  // relators
  bool rel_ok = true;
  for (int i = 0; i <= n && rel_ok; ++i)
    for (int j = i + 1; j <= n && rel_ok; ++j) {
      McgWord lhs, rhs;
      if (curves_meet(i, j)) {
        lhs = a_word({i, j, i});
        rhs = a_word({j, i, j});
      } else {
        lhs = a_word({i, j});
        rhs = a_word({j, i});
      }
      rel_ok = t.words_equal(lhs, rhs);
    }
  check(rel_ok, "braid relations");
  check(t.words_equal(a_word({0, 2, 3, 4}, 10), a_word({0, 1, 2, 3, 4}, 6)),
        "chain relation");
  check(t.words_equal(a_word({0, 1, 2, 3, 4, 5, 6}, 9),
                      a_word({0, 2, 3, 4, 5, 6}, 12)),
        "lantern relation");
  std::vector<int> chain;
  for (int i = 1; i <= n; ++i) chain.push_back(i);
  check(t.eval(a_word(chain, 4 * genus + 2)) == t.boundary_conjugation(1),
        "hyperelliptic factorization is the boundary twist");

  // universal counts and products
  Factorization A = build_universal(UniversalKind::A, genus);
  Factorization B = build_universal(UniversalKind::B, genus);
  Factorization C = build_universal(UniversalKind::C, genus);
  Factorization D = build_universal(UniversalKind::D, genus);
  check(static_cast<long>(A.size()) - static_cast<long>(B.size()) == 10,
        "|A| - |B| = 10");
  check(static_cast<long>(D.size()) - static_cast<long>(C.size()) == 9,
        "|D| - |C| = 9");
  bool prod_ok = true;
  for (auto* F : {&A, &B, &C, &D})
    prod_ok = prod_ok && t.detect_boundary_power(product(t, *F)) == 1;
  check(prod_ok, "A, B, C, D are factorizations of the boundary twist");

  if (!quick && genus == 3) {
    check(signature(t, A).signature == -48, "sigma(A) = -48");
    check(signature(t, B).signature == -42, "sigma(B) = -42");
    check(signature(t, C).signature == -35, "sigma(C) = -35");
    check(signature(t, D).signature == -40, "sigma(D) = -40");
  }
  if (!quick) {
    Factorization H = build_universal(UniversalKind::Hyperelliptic, genus);
    long sig = signature(t, H).signature;
    check(sig == endo_signature(census(H), genus) &&
              sig == -4L * genus * (genus + 1),
          "hyperelliptic signature matches the census formula");
  }

  // deterministic randomized sample: Hurwitz moves preserve the product
  std::atomic<bool> hur_ok{true};
  par::for_index(200, [&](std::size_t i) {
    Rng rng = Rng::stream(20240311, i);
    Factorization F;
    F.genus = genus;
    std::size_t r = 2 + rng.below(8);
    for (std::size_t j = 0; j < r; ++j) F.push(GenId::a(rng.range(0, n)));
    std::size_t p = rng.below(r - 1);
    Factorization G = rng.coin() ? hurwitz_right(F, p) : hurwitz_left(F, p);
    if (!(product(t, F) == product(t, G))) hur_ok = false;
  });
  check(hur_ok.load(), "Hurwitz moves preserve the product (200 samples)");

  std::cout << (fails ? "selftest: FAILED\n" : "selftest: ok\n");
  return fails ? 1 : 0;
}

}  // namespace
