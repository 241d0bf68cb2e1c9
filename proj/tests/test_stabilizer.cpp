#include "doctest.h"

#include "hlf/stabilizer.hpp"

using namespace hlf;

TEST_CASE("normal form decomposes the basic systems as units") {
  // Each basic system decomposes with exactly one unit in its own slot.
  for (int g : {2, 3, 4, 5}) {
    Genus genus(g);

    {
      const auto nf = normal_form(genus, count_entries(basic_type1(genus)));
      REQUIRE(!nf.options.empty());
      // Some option must read (a, b) = (1, 0).
      bool unit = false;
      for (const auto& opt : nf.options) unit = unit || (opt.a == 1 && opt.b == 0);
      CHECK(unit);
      CHECK(nf.d == 0);
      for (long long ch : nf.c) CHECK(ch == 0);
      REQUIRE(nf.m0.has_value());
      CHECK(*nf.m0 == 1);
    }
    {
      const auto nf = normal_form(genus, count_entries(basic_type1_big(genus)));
      bool unit = false;
      for (const auto& opt : nf.options) unit = unit || (opt.a == 0 && opt.b == 1);
      CHECK(unit);
    }
    for (int h = 1; h <= genus.sigma_count(); ++h) {
      const auto nf = normal_form(genus, count_entries(basic_type2(genus, h)));
      CHECK(nf.e_invariant == 0);
      CHECK(nf.c[static_cast<std::size_t>(h - 1)] == 1);
      CHECK(nf.d == 0);
      REQUIRE(nf.m0.has_value());
      CHECK(*nf.m0 == h + 2);
    }
    {
      const auto nf = normal_form(genus, count_entries(basic_pair_zeta(genus)));
      CHECK(nf.e_invariant == 0);
      CHECK(nf.d == 1);
      REQUIRE(nf.m0.has_value());
      CHECK(*nf.m0 == 2);
    }
    for (int h = 1; h <= genus.sigma_count(); ++h) {
      const auto nf = normal_form(genus, count_entries(basic_pair_sigma(genus, h)));
      CHECK(nf.e_invariant == 0);
      CHECK(nf.e_pairs[static_cast<std::size_t>(h - 1)] == 1);
      CHECK_FALSE(nf.m0.has_value());
    }
  }
}

TEST_CASE("normal form option count tracks genus parity") {
  // Even genus pins b uniquely; odd genus leaves both b values integral.
  Genus g2(2), g3(3);
  const auto nf_even = normal_form(g2, count_entries(basic_type1(g2)));
  CHECK(nf_even.options.size() == 1);
  CHECK_FALSE(nf_even.b_underdetermined);
  const auto nf_odd = normal_form(g3, count_entries(basic_type1(g3)));
  CHECK(nf_odd.options.size() == 2);
  CHECK(nf_odd.b_underdetermined);
  // Both options solve the same linear equation.
  const long long ua = 4 * (2 * 3 + 1), ub = 2 * (3 + 1) * (2 * 3 + 1);
  for (const auto& opt : nf_odd.options)
    CHECK(ua * opt.a + ub * opt.b == nf_odd.e_invariant);
}

TEST_CASE("section bound is absent for negative separating twists") {
  Genus g2(2);
  CHECK_FALSE(section_bound(g2, count_entries(basic_pair_sigma(g2, 1))).has_value());
  CHECK(section_bound(g2, count_entries(basic_type1(g2))) == 1);
  // All-zero counts still give the baseline bound of one.
  FiberCounts zero;
  zero.nh_pos.assign(1, 0);
  zero.nh_neg.assign(1, 0);
  CHECK(section_bound(g2, zero) == 1);
}

TEST_CASE("normal form rejects bad hypotheses and bad invariants") {
  Genus g2(2);
  // More negative than positive separating twists violates the hypothesis.
  FiberCounts bad;
  bad.nh_pos.assign(1, 0);
  bad.nh_neg.assign(1, 1);
  CHECK_THROWS_AS(normal_form(g2, bad), std::invalid_argument);
  // A lone positive chain twist fails divisibility (E = 1).
  FiberCounts lone;
  lone.n0_pos = 1;
  lone.nh_pos.assign(1, 0);
  lone.nh_neg.assign(1, 0);
  CHECK_THROWS_AS(normal_form(g2, lone), std::invalid_argument);
}

TEST_CASE("intermediate systems have consistent shapes") {
  for (int g : {2, 3, 4}) {
    Genus genus(g);
    for (int h = 1; h <= genus.sigma_count(); ++h) {
      const auto blockpow = block_power_system(genus, h);
      const auto split = split_chain_system(genus, h);
      const auto expanded = basic_type2_expanded(genus, h);
      const int expect = 2 * (2 * g + 1) * (2 * h + 2);
      CHECK(static_cast<int>(blockpow.entries.size()) == expect);
      CHECK(static_cast<int>(split.entries.size()) == expect);
      CHECK(static_cast<int>(expanded.entries.size()) == expect);
      // All three are closed and share counts.
      CHECK(is_closed(blockpow));
      CHECK(count_entries(blockpow) == count_entries(split));
      CHECK(count_entries(split) == count_entries(expanded));
      // Two forward half chains spell the chain word literally; with the
      // first half reversed the letters differ even though the lengths agree.
      CHECK(concat(half_chain(genus, h), half_chain(genus, h)) == chain_word(genus, h));
      const Word mixed = concat(half_chain_reversed(genus, h), half_chain(genus, h));
      CHECK(mixed.size() == chain_word(genus, h).size());
      CHECK(mixed != chain_word(genus, h));
    }
  }
}

TEST_CASE("derivation certificate verifies end to end" * doctest::timeout(300)) {
  struct Case {
    int g, h;
  };
  for (Case c : {Case{2, 1}, Case{3, 1}, Case{4, 1}, Case{4, 2}}) {
    Genus genus(c.g);
    const MoveCertificate cert = derive_type2_certificate(genus, c.h);
    // Endpoints are literally the named systems.
    HurwitzSystem copies = basic_type1(genus);
    for (int rep = 1; rep < c.h + 1; ++rep) copies = fiber_sum(copies, basic_type1(genus));
    CHECK(cert.start == copies);
    CHECK(cert.end == basic_type2_expanded(genus, c.h));
    const VerifyResult vr = verify_certificate(cert);
    INFO(vr.message);
    CHECK(vr.ok);
  }
}

TEST_CASE("stage certificates verify individually") {
  Genus g2(2);
  for (const MoveCertificate& cert :
       {block_pass_certificate(g2, 1), chain_reversal_certificate(g2, 1)}) {
    const VerifyResult vr = verify_certificate(cert);
    INFO(vr.message);
    CHECK(vr.ok);
  }
}

TEST_CASE("verification reports failures honestly") {
  Genus g2(2);
  MoveCertificate cert = chain_reversal_certificate(g2, 1);
  SUBCASE("corrupted move") {
    REQUIRE(!cert.moves.empty());
    cert.moves[0].pos += 1;
    const VerifyResult vr = verify_certificate(cert);
    CHECK_FALSE(vr.ok);
    CHECK(vr.failing_step >= 0);
  }
  SUBCASE("wrong endpoint") {
    cert.end = basic_type1(g2);
    const VerifyResult vr = verify_certificate(cert);
    CHECK_FALSE(vr.ok);
    CHECK(vr.failing_step == -1);
  }
}

TEST_CASE("search finds short equivalences and respects its budget") {
  Genus g1(1);
  const HurwitzSystem w0 = basic_type1(g1);
  // One admissible block move away.  (The run words admit no distant swaps
  // or braid triples at the start, but the leading (AD) window can absorb
  // the letter after it.)
  std::vector<Move> adm;
  for (const Move& m : admissible_moves(w0, false))
    if (m.kind == MoveKind::H3 || m.kind == MoveKind::H3inv) adm.push_back(m);
  REQUIRE(!adm.empty());
  const HurwitzSystem moved = apply_move(w0, adm.front());
  const SearchOutcome hit = search_equivalence(w0, moved, 10'000, false);
  CHECK(hit.found);
  CHECK(verify_certificate(hit.certificate).ok);

  // Identical systems meet immediately.
  const SearchOutcome trivial = search_equivalence(w0, w0, 10, false);
  CHECK(trivial.found);
  CHECK(trivial.certificate.moves.empty());

  // A tiny budget on distinct closed systems reports failure.
  const SearchOutcome miss =
      search_equivalence(fiber_sum(w0, w0), basic_type1_big(g1), 5, false);
  CHECK_FALSE(miss.found);
  CHECK(miss.expanded <= 5);

  // Length mismatch is an immediate not-found, not an error.
  const SearchOutcome skew = search_equivalence(w0, fiber_sum(w0, w0), 100, false);
  CHECK_FALSE(skew.found);
  CHECK(skew.expanded == 0);
}
