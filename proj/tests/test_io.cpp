#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "mcg/io.hpp"

using namespace mcg;

TEST_CASE("factorization parsing") {
  Factorization F = parse_factorization_text("genus 3\nfactor a0\n");
  CHECK(F.genus == 3);
  REQUIRE(F.size() == 1);
  CHECK(F[0].base == GenId::a(0));
  CHECK(F[0].bare());

  F = parse_factorization_text("genus 3\nfactor a1 @ a2,a3^-1\n");
  REQUIRE(F.size() == 1);
  CHECK(F[0].conj.size() == 2);
  CHECK(F[0].conj[1].sign == -1);

  F = parse_factorization_text("# comment\ngenus 3\nfactor s1 @ a4\n");
  CHECK(F[0].base == GenId::s(1));
}

TEST_CASE("factorization parse errors carry line numbers") {
  auto expect_line = [](const std::string& text, std::size_t line) {
    try {
      parse_factorization_text(text);
      FAIL("expected a parse error");
    } catch (const parse_error& e) {
      CHECK(e.line == line);
    }
  };
  expect_line("genus 3\nfactor a9\n", 2);
  expect_line("genus 3\nfactor s2\n", 2);   // s2 needs genus >= 4
  expect_line("factor a1\n", 1);            // genus must come first
  expect_line("genus 2\n", 1);
  expect_line("genus 3\nfactor a1 @@ a2\n", 2);
}

TEST_CASE("factorization round trip") {
  const std::string text =
      "genus 4\nfactor a0\nfactor a5 @ a2,a3^-1,s1\nfactor s2\n";
  Factorization F = parse_factorization_text(text);
  CHECK(serialize(F) == text);
  CHECK(serialize(parse_factorization_text(serialize(F))) == text);
}

TEST_CASE("move certificate round trip and validation") {
  const std::string text = "R 3\nL 1\nCONJ a2,a5^-1\nSUBST chain fwd 17\n";
  MoveCertificate c = parse_move_certificate_text(text, 3);
  REQUIRE(c.size() == 4);
  CHECK(c.moves[0].kind == Move::R);
  CHECK(c.moves[0].index == 2);
  CHECK(c.moves[2].conj.size() == 2);
  CHECK(c.moves[3].rel == RelKind::chain);
  CHECK(c.moves[3].index == 16);
  CHECK(serialize(c) == text);
  CHECK_THROWS_AS(parse_move_certificate_text("R 0\n", 3), parse_error);
  CHECK_THROWS_AS(parse_move_certificate_text("SUBST braid fwd 1\n", 3),
                  parse_error);
}

TEST_CASE("derivation round trip") {
  const std::string text =
      "R 2\nPCREATE 1 a3\nPCANCEL 1\nREL braid fwd 4\nREL chain bwd 1\n";
  DerivationCertificate d = parse_derivation_text(text, 3);
  REQUIRE(d.size() == 5);
  CHECK(d.steps[1].kind == DerivationStep::PCreate);
  CHECK_FALSE(d.steps[1].neg_first);
  CHECK(serialize(d) == text);
  DerivationCertificate neg = parse_derivation_text("PCREATE 2 a3^-1\n", 3);
  CHECK(neg.steps[0].neg_first);
  CHECK(serialize(neg) == "PCREATE 2 a3^-1\n");
}

TEST_CASE("word parsing") {
  McgWord w = parse_word("(a1 a2 a1)", 3);
  CHECK(w.size() == 3);
  w = parse_word("a0^-2 s1", 3);
  REQUIRE(w.size() == 3);
  CHECK(w[0].sign == -1);
  CHECK(w[2].gen == GenId::s(1));
  CHECK_THROWS_AS(parse_word("b2", 3), parse_error);
}

TEST_CASE("shipped fixtures round-trip after normalization") {
  namespace fs = std::filesystem;
  int seen = 0;
  for (auto& entry : fs::directory_iterator(MCG_FIXTURE_DIR)) {
    std::ifstream in(entry.path());
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    auto ext = entry.path().extension().string();
    ++seen;
    if (ext == ".fact") {
      std::string norm = serialize(parse_factorization_text(text));
      CHECK(serialize(parse_factorization_text(norm)) == norm);
    } else if (ext == ".mcert") {
      std::string norm = serialize(parse_move_certificate_text(text, 3));
      CHECK(serialize(parse_move_certificate_text(norm, 3)) == norm);
    } else if (ext == ".drv") {
      std::string norm = serialize(parse_derivation_text(text, 3));
      CHECK(serialize(parse_derivation_text(norm, 3)) == norm);
    } else {
      FAIL("unexpected fixture file");
    }
  }
  CHECK(seen == 3);
}
