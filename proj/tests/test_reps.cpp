#include "doctest.h"

#include "hlf/reps.hpp"

using namespace hlf;

TEST_CASE("permutation composition follows word order") {
  // (1 2) then (2 3) sends 1 -> 2 -> 3 read left to right.
  Perm a = adjacent_transposition(3, 1);
  Perm b = adjacent_transposition(3, 2);
  Perm ab = a.then(b);
  CHECK(ab.apply(0) == 2);
  CHECK(ab.apply(1) == 0);
  CHECK(ab.apply(2) == 1);
  CHECK(ab.then(ab.inverse()).is_identity());
}

TEST_CASE("permutation image of distinguished words") {
  for (int g : {1, 2, 3, 4}) {
    Genus genus(g);
    const int n = genus.point_count();
    // The descending run is the full cycle p -> p + 1 (0-based), the
    // ascending run its inverse.
    Perm down = perm_image(genus, descending_run(genus));
    Perm up = perm_image(genus, ascending_run(genus));
    for (int p = 0; p < n; ++p) {
      CHECK(down.apply(p) == (p + 1) % n);
      CHECK(up.apply((p + 1) % n) == p);
    }
    CHECK(perm_image(genus, involution_word(genus)).is_identity());
    if (genus.sigma_count() >= 1) {
      CHECK(perm_image(genus, Word{pos(sigma(1))}).is_identity());
      CHECK(perm_image(genus, chain_word(genus, 1)).is_identity());
    }
  }
}

TEST_CASE("transitivity of generated actions") {
  const int n = 6;
  std::vector<Perm> chain;
  for (int i = 1; i < n; ++i) chain.push_back(adjacent_transposition(n, i));
  CHECK(generates_transitive_action(n, chain));
  // A single adjacent transposition only connects two points.
  CHECK_FALSE(generates_transitive_action(n, {adjacent_transposition(n, 1)}));
  CHECK_FALSE(generates_transitive_action(n, {}));
  CHECK(generates_transitive_action(1, {}));
}

TEST_CASE("generator classes pair like a chain") {
  // Adjacent classes pair to +-1, distant classes to 0.
  for (int g : {1, 2, 3, 4, 5}) {
    Genus genus(g);
    const IntMat J = symplectic_form(genus);
    const int nz = genus.zeta_count();
    for (int i = 1; i <= nz; ++i) {
      const IntVec xi = generator_class(genus, zeta(i));
      CHECK(pairing(J, xi, xi) == 0);
      for (int j = i + 1; j <= nz; ++j) {
        const IntVec xj = generator_class(genus, zeta(j));
        const BigInt p = pairing(J, xi, xj);
        if (j == i + 1)
          CHECK((p == 1 || p == -1));
        else
          CHECK(p == 0);
      }
    }
  }
}

TEST_CASE("transvections are symplectic and invert exactly") {
  Genus g3(3);
  for (int i = 1; i <= g3.zeta_count(); ++i) {
    const IntMat t = transvection(g3, zeta(i), +1);
    const IntMat tinv = transvection(g3, zeta(i), -1);
    CHECK(is_symplectic(g3, t));
    CHECK(t.mul(tinv).is_identity());
    CHECK(tinv.mul(t).is_identity());
  }
  CHECK(transvection(g3, sigma(1), +1).is_identity());
}

TEST_CASE("homology image of distinguished words") {
  for (int g : {1, 2, 3, 4}) {
    Genus genus(g);
    // The involution acts as -1 on homology.
    CHECK(symp_image(genus, involution_word(genus)).is_negated_identity());
    // The (2g+2)-nd power of the ascending run is trivial.
    Word power;
    for (int rep = 0; rep < genus.point_count(); ++rep)
      power = concat(power, ascending_run(genus));
    CHECK(symp_image(genus, power).is_identity());
    // Chain words act trivially (their curves separate).
    for (int h = 1; h <= genus.sigma_count(); ++h)
      CHECK(symp_image(genus, chain_word(genus, h)).is_identity());
  }
}

TEST_CASE("homology image respects inverses and stays symplectic") {
  Genus g2(2);
  Word w{pos(zeta(1)), pos(zeta(2)), neg(zeta(3)), pos(zeta(4)), neg(zeta(5)), pos(zeta(2))};
  const IntMat m = symp_image(g2, w);
  CHECK(is_symplectic(g2, m));
  CHECK(m.mul(symp_image(g2, inverse(w))).is_identity());
}

TEST_CASE("full relation suite holds at small genus") {
  for (int g : {1, 2, 3, 4}) {
    const auto checks = check_relations(Genus(g));
    CHECK(!checks.empty());
    for (const RelationCheck& c : checks) {
      INFO("relation ", c.name, " at genus ", g);
      CHECK(c.perm_ok);
      CHECK(c.symp_ok);
    }
    CHECK(all_relations_hold(checks));
  }
}
