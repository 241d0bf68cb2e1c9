#pragma once

// Stable structure of factorization systems: the signature normal form, the
// section-count bound, constructive move certificates deriving the type II
// systems from copies of type I, and bounded breadth-first search for move
// equivalence.

#include <optional>

#include "hlf/hurwitz.hpp"

namespace hlf {

// One solution (a, b) of 4(2g+1) a + 2(g+1)(2g+1) b = E with b in {0, 1}.
// a may be negative.
struct NormalFormOption {
  long long a = 0;
  long long b = 0;

  friend bool operator==(const NormalFormOption&, const NormalFormOption&) = default;
};

// Decomposition of a count vector into the standard summands: a copies of
// type I, b copies of type I big, c_h type II_h, d cancelling zeta pairs,
// e_h cancelling sigma_h pairs.
struct NormalFormResult {
  long long e_invariant = 0;
  std::vector<NormalFormOption> options;  // one entry for even g, two for odd g
  bool b_underdetermined = false;         // true when both b = 0 and b = 1 solve
  std::vector<long long> c;               // c_h = nh+ - nh-
  long long d = 0;                        // n0-
  std::vector<long long> e_pairs;         // e_h = nh-
  std::optional<long long> m0;            // section bound; absent when some nh- > 0
};

// Requires nh+ >= nh- for every h and E to satisfy the divisibility
// constraint; throws std::invalid_argument otherwise.
NormalFormResult normal_form(const Genus& genus, const FiberCounts& counts);

// The bound n0- + sum_h (h+1) nh+ + 1 on disjoint section count.  Asserted
// only when every nh- vanishes; returns nullopt otherwise.
std::optional<long long> section_bound(const Genus& genus, const FiberCounts& counts);

// ---------------------------------------------------------------------------
// Constructive certificates.  Default budget for the rewrite engine.
inline constexpr long long kDefaultRewriteBudget = 200'000'000;

// Default budget for the equivalence search, in expanded states.
inline constexpr long long kDefaultSearchBudget = 1'000'000;

// Half chains over the sub-alphabet z_1 .. z_{2h}:
//   forward (z_1 .. z_{2h})^{2h+1}, reversed (z_{2h} .. z_1)^{2h+1}.
// Their concatenation in either order equals the chain word of sigma_h.
Word half_chain(const Genus& genus, int h);
Word half_chain_reversed(const Genus& genus, int h);

// The intermediate positive systems of the derivation:
//   D^{2h+2} A^{2h+2}  and  D R1 (reversed half chain) (half chain) R2 A.
HurwitzSystem block_power_system(const Genus& genus, int h);
HurwitzSystem split_chain_system(const Genus& genus, int h);

// Swap/braid-only certificate from the block power system to the split chain
// system.
MoveCertificate block_pass_certificate(const Genus& genus, int h,
                                       long long budget = kDefaultRewriteBudget);

// Swap/braid-only certificate from the split chain system to type II_h
// expanded (reverses the reversed half chain in place).
MoveCertificate chain_reversal_certificate(const Genus& genus, int h,
                                           long long budget = kDefaultRewriteBudget);

// Full derivation: h+1 copies of type I to type II_h expanded.  Composes a
// block-shuffle stage (inverse block moves), a cyclic rotation stage, and the
// two certificates above.
MoveCertificate derive_type2_certificate(const Genus& genus, int h,
                                         long long budget = kDefaultRewriteBudget);

// ---------------------------------------------------------------------------
// Bounded bidirectional search over the elementary moves H1, H2, H3, H3inv
// (plus the cyclic rotations when allowed).  Deterministic: single threaded,
// children generated in (kind, position) order, the smaller frontier is
// expanded first.

struct SearchOutcome {
  bool found = false;
  MoveCertificate certificate;  // meaningful only when found
  long long expanded = 0;       // states expanded across both frontiers
};

SearchOutcome search_equivalence(const HurwitzSystem& a, const HurwitzSystem& b,
                                 long long max_expanded, bool allow_cyclic);

}  // namespace hlf
