#pragma once

// Positive-factorization systems and the elementary moves between them.
//
// A system is an ordered sequence of entries, each a conjugate of a signed
// generator: the entry (c, x, e) stands for the group element with word
// c x^e c^{-1} (read left to right).  The product of a system is the
// composite of its entries in order.  Conjugators are always stored freely
// reduced, which makes the two slide moves exact inverses of each other.
//
// The distinguished systems built here are the standard fiber models:
//   type I         -- (ascending descending)^2, all positive chain twists;
//   type I big     -- ascending^{2g+2};
//   type II_h      -- descending, staircase up, sigma_h, staircase down,
//                     ascending;
//   cancelling pairs -- (z_1, z_1^{-1}) and (sigma_h, sigma_h^{-1});
//   type II_h expanded -- type II_h with sigma_h replaced by its chain word.

#include <optional>
#include <vector>

#include "hlf/reps.hpp"
#include "hlf/word.hpp"

namespace hlf {

// One conjugated signed generator.
struct FactorEntry {
  Word conjugator;  // stored freely reduced
  Letter base;
  int sign = +1;

  friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

struct HurwitzSystem {
  int g = 1;
  std::vector<FactorEntry> entries;

  Genus genus() const { return Genus(g); }
  friend bool operator==(const HurwitzSystem&, const HurwitzSystem&) = default;
};

// Throws std::invalid_argument if an index is out of range for the genus or a
// conjugator is not freely reduced.
void validate_system(const HurwitzSystem& sys);

// The word c x^e c^{-1} of a single entry.
Word entry_word(const FactorEntry& entry);

// Concatenation of all entry words: the word of the product.
Word system_word(const HurwitzSystem& sys);

// Signed tallies of entry kinds: n0 counts zeta entries, nh[h-1] counts
// sigma_h entries, split by sign.
struct FiberCounts {
  long long n0_pos = 0;
  long long n0_neg = 0;
  std::vector<long long> nh_pos;
  std::vector<long long> nh_neg;

  friend bool operator==(const FiberCounts&, const FiberCounts&) = default;
};

FiberCounts count_entries(const HurwitzSystem& sys);

// All signs positive.
bool is_chiral(const HurwitzSystem& sys);
// No separating (sigma) entries.
bool is_irreducible(const HurwitzSystem& sys);

// Total monodromy in each representation.
Perm perm_total(const HurwitzSystem& sys);
IntMat symp_total(const HurwitzSystem& sys);

// Whether the product is trivial in both representations (the closure test
// used throughout: permutation image and homology image both the identity).
bool is_closed(const HurwitzSystem& sys);

// Standard systems.  All entries have trivial conjugators.
HurwitzSystem basic_type1(const Genus& genus);               // (AD)^2
HurwitzSystem basic_type1_big(const Genus& genus);           // A^{2g+2}
HurwitzSystem basic_type2(const Genus& genus, int h);        // D R1 sigma_h R2 A
HurwitzSystem basic_pair_zeta(const Genus& genus);           // (z1, z1^{-1})
HurwitzSystem basic_pair_sigma(const Genus& genus, int h);   // (sigma_h, sigma_h^{-1})
HurwitzSystem basic_type2_expanded(const Genus& genus, int h);  // sigma_h spelled out

// Staircase runs used by the type II systems: ascending windows of width
// 2h+1 sliding down, then descending windows sliding up.
Word staircase_down(const Genus& genus, int h);  // (z_s .. z_{s+2h}) for s = 2g+1-2h .. 1
Word staircase_up(const Genus& genus, int h);    // (z_{s+2h} .. z_s) for s = 1 .. 2g+1-2h

// Concatenation of two systems over the same genus.
HurwitzSystem fiber_sum(const HurwitzSystem& a, const HurwitzSystem& b);

// ---------------------------------------------------------------------------
// Elementary moves.

enum class MoveKind {
  H1, H1inv,          // swap two distant positive chain twists
  H2, H2inv,          // braid three alternating positive chain twists
  H3, H3inv,          // pass a chain twist across the block (AD)
  SlideRight, SlideLeft,
  CyclicLeft, CyclicRight,
  ExpandSigma, ContractSigma
};

struct Move {
  MoveKind kind = MoveKind::H1;
  int pos = 0;  // leftmost entry of the affected window (ignored by cyclic moves)
  int i = 0;    // recorded generator indices for H1/H2 kinds
  int j = 0;
  int h = 0;    // chain index for ContractSigma

  friend bool operator==(const Move&, const Move&) = default;
};

// Apply one move; throws std::invalid_argument when the precondition at the
// given position does not hold.
HurwitzSystem apply_move(const HurwitzSystem& sys, const Move& move);

// Non-throwing variant: nullopt when the move is inadmissible.
std::optional<HurwitzSystem> try_apply_move(const HurwitzSystem& sys, const Move& move);

// The move that undoes `move` when applied to apply_move(sys, move).
Move inverse_move(const HurwitzSystem& sys_before, const Move& move);

// All moves admissible on sys, in (kind, position) lexicographic order.
std::vector<Move> admissible_moves(const HurwitzSystem& sys, bool allow_cyclic);

// ---------------------------------------------------------------------------
// Signature invariant.
//
// For counts (n0+, n0-, nh+, nh-) the combination
//   E = n0+ - n0- - 4 * sum_h (nh+ - nh-) * (2h(g-h) + 2g + 1)
// is preserved by every count-preserving move and additive under fiber sum;
// expanding a separating twist shifts it by 4h(2h+1) + 4(2h(g-h) + 2g + 1).
long long euler_invariant(const Genus& genus, const FiberCounts& counts);
long long euler_invariant(const HurwitzSystem& sys);

// Divisibility constraint satisfied by all closed systems:
// 2(2g+1) | E for even g, 4(2g+1) | E for odd g.
bool euler_divisibility_ok(const Genus& genus, long long e);

// ---------------------------------------------------------------------------
// Move certificates: a start system, a move list, and the claimed end system.

struct MoveCertificate {
  HurwitzSystem start;
  std::vector<Move> moves;
  HurwitzSystem end;

  friend bool operator==(const MoveCertificate&, const MoveCertificate&) = default;
};

struct VerifyResult {
  bool ok = false;
  // Index of the first failing move, or -1 when the failure is the final
  // endpoint comparison (or -2 when verification succeeded).
  int failing_step = -2;
  std::string message;
};

// Replay the moves from the start system and compare with the end system.
VerifyResult verify_certificate(const MoveCertificate& cert);

std::string to_string(MoveKind kind);
std::string to_string(const Move& move);

}  // namespace hlf
