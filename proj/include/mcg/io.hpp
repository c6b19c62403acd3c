#pragma once

// Line-based file formats.  '#' starts a comment, blank lines are ignored.
//
// factorization:   genus <int>
//                  factor <base>[ @ <conj>]        base: a0..a2g, s1..s(g/2)
//                                                  conj: comma-separated
//                                                  tokens gen or gen^-1
// move cert:       R <i> | L <i> | CONJ <conj> | SUBST <chain|lantern>
//                  <fwd|bwd> <start>               (1-based indices)
// derivation:      R/L as above, plus PCREATE <i> <gen>, PCANCEL <i>,
//                  REL <commute|braid|chain|lantern> <fwd|bwd> <pos>

#include <iosfwd>
#include <string>

#include "mcg/certificate.hpp"
#include "mcg/stabilize.hpp"

namespace mcg {

Factorization parse_factorization(std::istream& in);
Factorization parse_factorization_text(const std::string& text);
std::string serialize(const Factorization& F);

MoveCertificate parse_move_certificate(std::istream& in, int genus);
MoveCertificate parse_move_certificate_text(const std::string& text, int genus);
std::string serialize(const MoveCertificate& c);

DerivationCertificate parse_derivation(std::istream& in, int genus);
DerivationCertificate parse_derivation_text(const std::string& text, int genus);
std::string serialize(const DerivationCertificate& d);

// Whitespace/paren separated generator tokens, e.g. "(a1 a2 a1)" or
// "a0^-1 a2".
McgWord parse_word(const std::string& text, int genus);

}  // namespace mcg
