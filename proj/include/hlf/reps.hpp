#pragma once

// Two faithful-enough shadows of the group:
//
//  * a permutation action on the 2g+2 branch points of the hyperelliptic
//    double cover, where zeta_i acts as the transposition (i, i+1) and each
//    sigma_h acts trivially;
//
//  * the integral symplectic action on first homology, where each generator
//    acts as the transvection along its curve's homology class.
//
// Composition follows the word convention: for a word (u, v) the permutation
// image is "u then v", and the matrix image is M(v) * M(u) acting on column
// vectors.  Matrix entries grow exponentially with word length, so they are
// stored as arbitrary-precision integers.

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

#include "hlf/word.hpp"

namespace hlf {

using BigInt = boost::multiprecision::cpp_int;

// Permutation of {0, .., n-1}, stored as the image table.
struct Perm {
  std::vector<int> image;

  static Perm identity(int n);
  int degree() const { return static_cast<int>(image.size()); }
  int apply(int p) const { return image.at(static_cast<std::size_t>(p)); }
  // Composite "this then next".
  Perm then(const Perm& next) const;
  Perm inverse() const;
  bool is_identity() const;

  friend bool operator==(const Perm&, const Perm&) = default;
};

// The transposition (i-1, i) in 0-based points, i.e. (i, i+1) in 1-based.
Perm adjacent_transposition(int n, int i);

// Image of a word under the permutation action on 2g+2 points.
Perm perm_image(const Genus& genus, const Word& word);

// Whether the subgroup generated by the given permutations acts transitively.
bool generates_transitive_action(int n, const std::vector<Perm>& gens);

// Dense square matrix over arbitrary-precision integers, row-major.
struct IntMat {
  int n = 0;
  std::vector<BigInt> a;

  IntMat() = default;
  explicit IntMat(int size) : n(size), a(static_cast<std::size_t>(size) * size, 0) {}

  BigInt& at(int r, int c) { return a[static_cast<std::size_t>(r) * n + c]; }
  const BigInt& at(int r, int c) const { return a[static_cast<std::size_t>(r) * n + c]; }

  static IntMat identity(int size);
  IntMat mul(const IntMat& rhs) const;
  IntMat transpose() const;
  bool is_identity() const;
  bool is_negated_identity() const;

  friend bool operator==(const IntMat&, const IntMat&) = default;
};

// Integer column vector.
using IntVec = std::vector<BigInt>;

// The standard symplectic form on homology in the basis
// (a_1, b_1, a_2, b_2, .., a_g, b_g): block diagonal with blocks [[0,1],[-1,0]].
IntMat symplectic_form(const Genus& genus);

// <u, v> with respect to the form J.
BigInt pairing(const IntMat& J, const IntVec& u, const IntVec& v);

// The homology class of the curve underlying each generator, in the chain
// arrangement:
//   zeta_{2k-1} -> b_k       (k = 1..g),
//   zeta_{2k}   -> a_k - a_{k+1}   (k = 1..g-1),
//   zeta_{2g}   -> a_g,
//   zeta_{2g+1} -> b_1 + .. + b_g,
//   sigma_h     -> 0  (separating curves are null-homologous).
IntVec generator_class(const Genus& genus, const Letter& letter);

// Transvection along class x: v -> v + <v, x> x.  For sign -1 the inverse
// v -> v - <v, x> x is returned.  (These are exact inverses of each other.)
IntMat transvection(const Genus& genus, const Letter& letter, int sign);

// Image of a word under the symplectic representation.
IntMat symp_image(const Genus& genus, const Word& word);

// Whether M preserves the symplectic form: M^T J M == J.
bool is_symplectic(const Genus& genus, const IntMat& m);

// One defining relation of the presentation, checked in both representations.
struct RelationCheck {
  std::string name;
  bool perm_ok = false;
  bool symp_ok = false;
};

// Evaluate every defining relation at the given genus:
// commutation, braid, sigma/chain identities, involution relations,
// (zeta_1 .. zeta_{2g+1})^{2g+2} = 1, and centrality of the involution.
std::vector<RelationCheck> check_relations(const Genus& genus);

bool all_relations_hold(const std::vector<RelationCheck>& checks);

}  // namespace hlf
