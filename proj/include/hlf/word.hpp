#pragma once

// Generator alphabet and words for the hyperelliptic mapping class group of a
// closed oriented surface of genus g.  The alphabet has two families:
//
//   zeta_1 .. zeta_{2g+1}   right-handed Dehn twists along a chain of curves,
//   sigma_1 .. sigma_{g/2}  right-handed Dehn twists along separating curves
//                           (sigma_h splits off a genus-h piece).
//
// Words are finite sequences of signed letters and compose left to right:
// the word (u, v) means "apply u, then v".  All derived representations and
// invariants in this library follow that convention.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hlf {

// Genus context.  Fixes the alphabet bounds and the sizes of the derived
// structures (permutation degree, homology rank).
struct Genus {
  int g = 1;

  explicit Genus(int genus) : g(genus) {
    if (g < 1) throw std::invalid_argument("genus must be at least 1");
  }

  int zeta_count() const { return 2 * g + 1; }
  int sigma_count() const { return g / 2; }
  // Degree of the permutation action (branch points of the double cover).
  int point_count() const { return 2 * g + 2; }
  // Rank of the first homology of the surface.
  int homology_rank() const { return 2 * g; }
};

enum class LetterKind : std::uint8_t { Zeta, Sigma };

// An unsigned generator name: zeta_i (1 <= i <= 2g+1) or sigma_h (1 <= h <= g/2).
struct Letter {
  LetterKind kind = LetterKind::Zeta;
  int index = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

// A generator or its inverse; sign is +1 or -1.
struct SignedLetter {
  Letter base;
  int sign = +1;

  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
};

using Word = std::vector<SignedLetter>;

// Convenience constructors.
inline Letter zeta(int i) { return Letter{LetterKind::Zeta, i}; }
inline Letter sigma(int h) { return Letter{LetterKind::Sigma, h}; }
inline SignedLetter pos(Letter l) { return SignedLetter{l, +1}; }
inline SignedLetter neg(Letter l) { return SignedLetter{l, -1}; }

// Validation against a genus context; throws std::invalid_argument.
void validate_letter(const Genus& genus, const Letter& letter);
void validate_signed_letter(const Genus& genus, const SignedLetter& letter);
void validate_word(const Genus& genus, const Word& word);

// Concatenation uv ("u then v").
Word concat(const Word& u, const Word& v);

// Formal inverse: reversed order, flipped signs.
Word inverse(const Word& w);

// Free reduction: repeatedly cancel adjacent pairs x x^{-1}.
Word free_reduce(const Word& w);

// Ascending run zeta_1 zeta_2 .. zeta_{2g+1}.
Word ascending_run(const Genus& genus);

// Descending run zeta_{2g+1} .. zeta_2 zeta_1.
Word descending_run(const Genus& genus);

// The hyperelliptic involution word
//   iota = zeta_1 .. zeta_{2g} zeta_{2g+1} zeta_{2g+1} zeta_{2g} .. zeta_1,
// which equals the concatenation of the ascending and descending runs.
Word involution_word(const Genus& genus);

// The separating-twist word (zeta_1 .. zeta_{2h})^{4h+2}, equal to sigma_h in
// the group.  Length 4h(2h+1).
Word chain_word(const Genus& genus, int h);

// Compact rendering such as "z1 z3^-1 s2" for diagnostics.
std::string to_string(const Word& w);
std::string to_string(const SignedLetter& l);

}  // namespace hlf
