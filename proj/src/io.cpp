#include "mcg/io.hpp"

#include <istream>
#include <sstream>
#include <vector>

namespace mcg {

namespace {

// strips comments, splits into (line number, tokens)
std::vector<std::pair<std::size_t, std::vector<std::string>>> tokenize(
    std::istream& in) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) out.push_back({no, toks});
  }
  return out;
}

long parse_int(const std::string& s, std::size_t line) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw parse_error(line, "expected an integer, got '" + s + "'");
  }
}

GenId parse_base(const std::string& tok, int genus, std::size_t line) {
  McgWord w;
  append_token(w, tok, genus, line);
  if (w.size() != 1 || w[0].sign != 1)
    throw parse_error(line, "factor base must be a single positive generator");
  return w[0].gen;
}

}  // namespace

Factorization parse_factorization(std::istream& in) {
  Factorization F;
  bool have_genus = false;
  for (auto& [no, toks] : tokenize(in)) {
    if (toks[0] == "genus") {
      if (have_genus) throw parse_error(no, "duplicate genus line");
      if (toks.size() != 2) throw parse_error(no, "usage: genus <int>");
      long g = parse_int(toks[1], no);
      if (g < 3) throw parse_error(no, "genus must be >= 3");
      F.genus = static_cast<int>(g);
      have_genus = true;
    } else if (toks[0] == "factor") {
      if (!have_genus) throw parse_error(no, "genus line must come first");
      if (toks.size() != 2 && !(toks.size() == 4 && toks[2] == "@"))
        throw parse_error(no, "usage: factor <base>[ @ <conj>]");
      Factor f;
      f.base = parse_base(toks[1], F.genus, no);
      if (toks.size() == 4) f.conj = parse_conjugator(toks[3], F.genus, no);
      F.factors.push_back(std::move(f));
    } else {
      throw parse_error(no, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!have_genus) throw parse_error(0, "missing genus line");
  return F;
}

Factorization parse_factorization_text(const std::string& text) {
  std::istringstream in(text);
  return parse_factorization(in);
}

std::string serialize(const Factorization& F) {
  std::ostringstream out;
  out << "genus " << F.genus << "\n";
  for (auto& f : F.factors) {
    out << "factor " << to_string(f.base);
    if (!f.conj.empty()) out << " @ " << to_string(f.conj);
    out << "\n";
  }
  return out.str();
}

MoveCertificate parse_move_certificate(std::istream& in, int genus) {
  MoveCertificate c;
  for (auto& [no, toks] : tokenize(in)) {
    const std::string& op = toks[0];
    if (op == "R" || op == "L") {
      if (toks.size() != 2) throw parse_error(no, "usage: " + op + " <i>");
      long i = parse_int(toks[1], no);
      if (i < 1) throw parse_error(no, "indices are 1-based");
      c.push(op == "R" ? Move::r(i - 1) : Move::l(i - 1));
    } else if (op == "CONJ") {
      if (toks.size() != 2) throw parse_error(no, "usage: CONJ <conj>");
      c.push(Move::conj_by(parse_conjugator(toks[1], genus, no)));
    } else if (op == "SUBST") {
      if (toks.size() != 4)
        throw parse_error(no, "usage: SUBST <chain|lantern> <fwd|bwd> <start>");
      RelKind k;
      if (toks[1] == "chain")
        k = RelKind::chain;
      else if (toks[1] == "lantern")
        k = RelKind::lantern;
      else
        throw parse_error(no, "unknown substitution kind '" + toks[1] + "'");
      bool fwd = toks[2] == "fwd";
      if (!fwd && toks[2] != "bwd") throw parse_error(no, "expected fwd or bwd");
      long at = parse_int(toks[3], no);
      if (at < 1) throw parse_error(no, "indices are 1-based");
      c.push(Move::subst(k, fwd, at - 1));
    } else {
      throw parse_error(no, "unknown move '" + op + "'");
    }
  }
  return c;
}

MoveCertificate parse_move_certificate_text(const std::string& text, int genus) {
  std::istringstream in(text);
  return parse_move_certificate(in, genus);
}

std::string serialize(const MoveCertificate& c) {
  std::ostringstream out;
  for (auto& m : c.moves) {
    switch (m.kind) {
      case Move::R:
        out << "R " << m.index + 1 << "\n";
        break;
      case Move::L:
        out << "L " << m.index + 1 << "\n";
        break;
      case Move::Conj:
        out << "CONJ " << to_string(m.conj) << "\n";
        break;
      case Move::Subst:
        out << "SUBST " << (m.rel == RelKind::chain ? "chain" : "lantern") << " "
            << (m.forward ? "fwd" : "bwd") << " " << m.index + 1 << "\n";
        break;
    }
  }
  return out.str();
}

DerivationCertificate parse_derivation(std::istream& in, int genus) {
  DerivationCertificate d;
  for (auto& [no, toks] : tokenize(in)) {
    const std::string& op = toks[0];
    if (op == "R" || op == "L") {
      if (toks.size() != 2) throw parse_error(no, "usage: " + op + " <i>");
      long i = parse_int(toks[1], no);
      if (i < 1) throw parse_error(no, "indices are 1-based");
      d.push(op == "R" ? DerivationStep::hr(i - 1) : DerivationStep::hl(i - 1));
    } else if (op == "PCREATE") {
      if (toks.size() != 3) throw parse_error(no, "usage: PCREATE <i> <gen>");
      long i = parse_int(toks[1], no);
      if (i < 1) throw parse_error(no, "indices are 1-based");
      McgWord w;
      append_token(w, toks[2], genus, no);
      if (w.size() != 1) throw parse_error(no, "PCREATE expects one generator");
      d.push(DerivationStep::pcreate(i - 1, w[0].gen, w[0].sign < 0));
    } else if (op == "PCANCEL") {
      if (toks.size() != 2) throw parse_error(no, "usage: PCANCEL <i>");
      long i = parse_int(toks[1], no);
      if (i < 1) throw parse_error(no, "indices are 1-based");
      d.push(DerivationStep::pcancel(i - 1));
    } else if (op == "REL") {
      if (toks.size() != 4)
        throw parse_error(no, "usage: REL <kind> <fwd|bwd> <pos>");
      RelKind k;
      if (toks[1] == "commute")
        k = RelKind::commute;
      else if (toks[1] == "braid")
        k = RelKind::braid;
      else if (toks[1] == "chain")
        k = RelKind::chain;
      else if (toks[1] == "lantern")
        k = RelKind::lantern;
      else
        throw parse_error(no, "unknown relation kind '" + toks[1] + "'");
      bool fwd = toks[2] == "fwd";
      if (!fwd && toks[2] != "bwd") throw parse_error(no, "expected fwd or bwd");
      long at = parse_int(toks[3], no);
      if (at < 1) throw parse_error(no, "indices are 1-based");
      d.push(DerivationStep::rel(k, fwd, at - 1));
    } else {
      throw parse_error(no, "unknown derivation step '" + op + "'");
    }
  }
  return d;
}

DerivationCertificate parse_derivation_text(const std::string& text, int genus) {
  std::istringstream in(text);
  return parse_derivation(in, genus);
}

std::string serialize(const DerivationCertificate& d) {
  std::ostringstream out;
  for (auto& s : d.steps) {
    switch (s.kind) {
      case DerivationStep::HR:
        out << "R " << s.index + 1 << "\n";
        break;
      case DerivationStep::HL:
        out << "L " << s.index + 1 << "\n";
        break;
      case DerivationStep::PCreate:
        out << "PCREATE " << s.index + 1 << " " << to_string(s.gen)
            << (s.neg_first ? "^-1" : "") << "\n";
        break;
      case DerivationStep::PCancel:
        out << "PCANCEL " << s.index + 1 << "\n";
        break;
      case DerivationStep::Rel: {
        const char* k = s.relkind == RelKind::commute  ? "commute"
                        : s.relkind == RelKind::braid  ? "braid"
                        : s.relkind == RelKind::chain  ? "chain"
                                                   : "lantern";
        out << "REL " << k << " " << (s.forward ? "fwd" : "bwd") << " "
            << s.index + 1 << "\n";
        break;
      }
    }
  }
  return out.str();
}

McgWord parse_word(const std::string& text, int genus) {
  std::string cleaned;
  for (char c : text) cleaned += (c == '(' || c == ')' || c == '*') ? ' ' : c;
  std::istringstream in(cleaned);
  McgWord w;
  std::string tok;
  while (in >> tok) append_token(w, tok, genus);
  return w;
}

}  // namespace mcg
