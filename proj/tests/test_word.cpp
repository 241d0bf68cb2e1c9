#include "doctest.h"

#include "hlf/word.hpp"

using namespace hlf;

TEST_CASE("genus context derived sizes") {
  CHECK_THROWS_AS(Genus(0), std::invalid_argument);
  Genus g2(2);
  CHECK(g2.zeta_count() == 5);
  CHECK(g2.sigma_count() == 1);
  CHECK(g2.point_count() == 6);
  CHECK(g2.homology_rank() == 4);
  Genus g5(5);
  CHECK(g5.zeta_count() == 11);
  CHECK(g5.sigma_count() == 2);
}

TEST_CASE("letter validation bounds") {
  Genus g2(2);
  CHECK_NOTHROW(validate_letter(g2, zeta(5)));
  CHECK_THROWS_AS(validate_letter(g2, zeta(6)), std::invalid_argument);
  CHECK_THROWS_AS(validate_letter(g2, zeta(0)), std::invalid_argument);
  CHECK_NOTHROW(validate_letter(g2, sigma(1)));
  CHECK_THROWS_AS(validate_letter(g2, sigma(2)), std::invalid_argument);
  // Genus 1 has no separating generators at all.
  CHECK_THROWS_AS(validate_letter(Genus(1), sigma(1)), std::invalid_argument);
  CHECK_THROWS_AS(validate_signed_letter(g2, SignedLetter{zeta(1), 0}), std::invalid_argument);
}

TEST_CASE("concat, inverse and free reduction") {
  Word u{pos(zeta(1)), neg(zeta(2))};
  Word v{pos(sigma(1))};
  CHECK(concat(u, v) == Word{pos(zeta(1)), neg(zeta(2)), pos(sigma(1))});
  CHECK(inverse(u) == Word{pos(zeta(2)), neg(zeta(1))});
  CHECK(free_reduce(concat(u, inverse(u))).empty());
  // Reduction cancels through newly adjacent pairs.
  Word w{pos(zeta(1)), pos(zeta(2)), neg(zeta(2)), neg(zeta(1)), pos(zeta(3))};
  CHECK(free_reduce(w) == Word{pos(zeta(3))});
  CHECK(free_reduce(Word{}) == Word{});
}

TEST_CASE("distinguished words have the expected shapes") {
  Genus g2(2);
  CHECK(ascending_run(g2) ==
        Word{pos(zeta(1)), pos(zeta(2)), pos(zeta(3)), pos(zeta(4)), pos(zeta(5))});
  CHECK(descending_run(g2) ==
        Word{pos(zeta(5)), pos(zeta(4)), pos(zeta(3)), pos(zeta(2)), pos(zeta(1))});
  const Word iota = involution_word(g2);
  CHECK(iota.size() == 10);
  CHECK(iota == concat(ascending_run(g2), descending_run(g2)));
  // z_{2g+1} appears twice in the middle.
  CHECK(iota[4] == pos(zeta(5)));
  CHECK(iota[5] == pos(zeta(5)));
}

TEST_CASE("chain word length is 4h(2h+1)") {
  for (int g : {2, 3, 4, 5}) {
    Genus genus(g);
    for (int h = 1; h <= genus.sigma_count(); ++h) {
      const Word c = chain_word(genus, h);
      CHECK(static_cast<int>(c.size()) == 4 * h * (2 * h + 1));
      // The word is (z_1 .. z_{2h})^{4h+2}.
      for (std::size_t k = 0; k < c.size(); ++k)
        CHECK(c[k] == pos(zeta(1 + static_cast<int>(k) % (2 * h))));
    }
  }
  CHECK_THROWS_AS(chain_word(Genus(2), 2), std::invalid_argument);
  CHECK_THROWS_AS(chain_word(Genus(1), 1), std::invalid_argument);
}

TEST_CASE("word rendering") {
  CHECK(to_string(Word{pos(zeta(1)), neg(zeta(3)), pos(sigma(2))}) == "z1 z3^-1 s2");
  CHECK(to_string(Word{}) == "(empty)");
}
