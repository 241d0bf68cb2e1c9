#pragma once

// Rewriting engine for positive words in the braid monoid on a fixed number
// of strands.  Letters are the standard generators 1 .. strands-1; words
// compose left to right.
//
// Two layers:
//
//  * left_normal_form / monoid_equal: the classical left-greedy normal form
//    as a sequence of permutation factors, used as the equality oracle;
//
//  * canonicalize / transform: the same normal form computed by elementary
//    adjacent rewrites (distant-swap and braid-triple), with every rewrite
//    recorded.  transform(u, v) yields an explicit rewrite path u -> v
//    whenever u and v are equal in the monoid.
//
// All tracked work happens inside permutation-braid (square-free) subwords,
// so the recursion depth is bounded by the factor length.  A budget counter
// guards against pathological inputs; exhaustion raises std::runtime_error.

#include <optional>
#include <vector>

namespace hlf::braid {

using PosWord = std::vector<int>;     // letters 1 .. strands-1
using PermTable = std::vector<int>;   // image table: start position -> end position

// Position map of a positive word (composition left to right).
PermTable word_permutation(const PosWord& w, int strands);

// Left-greedy normal form as the sequence of factor permutations.
std::vector<PermTable> left_normal_form(const PosWord& w, int strands);

bool monoid_equal(const PosWord& u, const PosWord& v, int strands);

// The fixed reduced spelling used for canonical output: repeatedly emit the
// smallest descent of the remaining permutation.
PosWord canonical_spelling(const PermTable& perm);

// One recorded elementary rewrite at letter offset pos:
//   braid == false: (i, j) -> (j, i) with |i - j| >= 2;
//   braid == true:  (i, j, i) -> (j, i, j) with |i - j| == 1.
// The fields i, j are the letter values before the rewrite.
struct RewriteStep {
  bool braid = false;
  int pos = 0;
  int i = 0;
  int j = 0;
};

struct RewritePlan {
  std::vector<RewriteStep> steps;
  PosWord result;
};

// Rewrite u into the canonical spelling of its normal form, recording steps.
RewritePlan canonicalize(const PosWord& u, int strands, long long budget);

// Rewrite steps carrying u into v, or nullopt when the words differ in the
// monoid.  Built as (u -> canonical) followed by the reverse of
// (v -> canonical).
std::optional<RewritePlan> transform(const PosWord& u, const PosWord& v, int strands,
                                     long long budget);

}  // namespace hlf::braid
