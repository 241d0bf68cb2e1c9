#include "hlf/stabilizer.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "hlf/braid.hpp"

namespace hlf {

NormalFormResult normal_form(const Genus& genus, const FiberCounts& counts) {
  for (std::size_t h = 0; h < counts.nh_pos.size(); ++h)
    if (counts.nh_pos[h] < counts.nh_neg[h])
      throw std::invalid_argument(
          "normal form hypothesis violated: more negative than positive separating twists");
  NormalFormResult out;
  out.e_invariant = euler_invariant(genus, counts);
  if (!euler_divisibility_ok(genus, out.e_invariant))
    throw std::invalid_argument("invariant fails its divisibility constraint");
  const long long unit_a = 4LL * (2 * genus.g + 1);
  const long long unit_b = 2LL * (genus.g + 1) * (2 * genus.g + 1);
  for (long long b = 0; b <= 1; ++b) {
    const long long rest = out.e_invariant - unit_b * b;
    if (rest % unit_a == 0) out.options.push_back(NormalFormOption{rest / unit_a, b});
  }
  out.b_underdetermined = out.options.size() == 2;
  out.c.assign(counts.nh_pos.size(), 0);
  for (std::size_t h = 0; h < counts.nh_pos.size(); ++h)
    out.c[h] = counts.nh_pos[h] - counts.nh_neg[h];
  out.d = counts.n0_neg;
  out.e_pairs = counts.nh_neg;
  out.m0 = section_bound(genus, counts);
  return out;
}

std::optional<long long> section_bound(const Genus& genus, const FiberCounts& counts) {
  (void)genus;
  for (long long v : counts.nh_neg)
    if (v != 0) return std::nullopt;  // the bound is only asserted without them
  long long m0 = counts.n0_neg + 1;
  for (std::size_t h = 0; h < counts.nh_pos.size(); ++h)
    m0 += (static_cast<long long>(h) + 2) * counts.nh_pos[h];  // (h+1) with 1-based h
  return m0;
}

Word half_chain(const Genus& genus, int h) {
  if (h < 1 || h > genus.sigma_count()) throw std::invalid_argument("sigma index out of range");
  Word out;
  for (int rep = 0; rep < 2 * h + 1; ++rep)
    for (int i = 1; i <= 2 * h; ++i) out.push_back(pos(zeta(i)));
  return out;
}

Word half_chain_reversed(const Genus& genus, int h) {
  if (h < 1 || h > genus.sigma_count()) throw std::invalid_argument("sigma index out of range");
  Word out;
  for (int rep = 0; rep < 2 * h + 1; ++rep)
    for (int i = 2 * h; i >= 1; --i) out.push_back(pos(zeta(i)));
  return out;
}

namespace {

HurwitzSystem positive_system(const Genus& genus, const Word& word) {
  HurwitzSystem sys;
  sys.g = genus.g;
  for (const SignedLetter& l : word) sys.entries.push_back(FactorEntry{{}, l.base, l.sign});
  return sys;
}

// Zeta indices of a plain positive system (used to hand words to the braid
// engine); throws if any entry is conjugated, negative, or separating.
braid::PosWord zeta_indices(const HurwitzSystem& sys) {
  braid::PosWord out;
  for (const FactorEntry& e : sys.entries) {
    if (!e.conjugator.empty() || e.sign <= 0 || e.base.kind != LetterKind::Zeta)
      throw std::invalid_argument("expected a plain positive chain-twist system");
    out.push_back(e.base.index);
  }
  return out;
}

Move as_move(const braid::RewriteStep& step, int base) {
  return Move{step.braid ? MoveKind::H2 : MoveKind::H1, base + step.pos, step.i, step.j, 0};
}

}  // namespace

HurwitzSystem block_power_system(const Genus& genus, int h) {
  if (h < 1 || h > genus.sigma_count()) throw std::invalid_argument("sigma index out of range");
  Word w;
  for (int rep = 0; rep < 2 * h + 2; ++rep) w = concat(w, descending_run(genus));
  for (int rep = 0; rep < 2 * h + 2; ++rep) w = concat(w, ascending_run(genus));
  return positive_system(genus, w);
}

HurwitzSystem split_chain_system(const Genus& genus, int h) {
  Word w = descending_run(genus);
  w = concat(w, staircase_down(genus, h));
  w = concat(w, half_chain_reversed(genus, h));
  w = concat(w, half_chain(genus, h));
  w = concat(w, staircase_up(genus, h));
  w = concat(w, ascending_run(genus));
  return positive_system(genus, w);
}

MoveCertificate block_pass_certificate(const Genus& genus, int h, long long budget) {
  const HurwitzSystem start = block_power_system(genus, h);
  const HurwitzSystem end = split_chain_system(genus, h);
  const int strands = genus.point_count();
  auto plan = braid::transform(zeta_indices(start), zeta_indices(end), strands, budget);
  if (!plan)
    throw std::runtime_error("block power and split chain words are not equal in the braid monoid");
  MoveCertificate cert;
  cert.start = start;
  cert.end = end;
  for (const braid::RewriteStep& step : plan->steps) cert.moves.push_back(as_move(step, 0));
  return cert;
}

MoveCertificate chain_reversal_certificate(const Genus& genus, int h, long long budget) {
  const HurwitzSystem start = split_chain_system(genus, h);
  const HurwitzSystem end = basic_type2_expanded(genus, h);
  const int nz = genus.zeta_count();
  // Offset of the reversed half chain inside the split chain system.
  const int offset = nz + (nz - 2 * h) * (2 * h + 1);
  const Word rev = half_chain_reversed(genus, h);
  const Word fwd = half_chain(genus, h);
  braid::PosWord u, v;
  for (const SignedLetter& l : rev) u.push_back(l.base.index);
  for (const SignedLetter& l : fwd) v.push_back(l.base.index);
  // The half chains only involve z_1 .. z_{2h}.
  auto plan = braid::transform(u, v, 2 * h + 1, budget);
  if (!plan)
    throw std::runtime_error("half chain and its reverse are not equal in the braid monoid");
  MoveCertificate cert;
  cert.start = start;
  cert.end = end;
  for (const braid::RewriteStep& step : plan->steps) cert.moves.push_back(as_move(step, offset));
  return cert;
}

MoveCertificate derive_type2_certificate(const Genus& genus, int h, long long budget) {
  if (h < 1 || h > genus.sigma_count()) throw std::invalid_argument("sigma index out of range");
  const int nz = genus.zeta_count();
  const int k = 2 * h + 2;  // number of copies of each run block

  MoveCertificate cert;
  cert.start = basic_type1(genus);
  for (int copy = 1; copy < h + 1; ++copy) cert.start = fiber_sum(cert.start, basic_type1(genus));

  // Stage 1: (AD)^k -> A^k D^k by passing descending blocks rightward across
  // (AD) windows, one letter per inverse block move.  The schedule repeatedly
  // takes the leftmost descending block that directly precedes an (AD) pair.
  std::vector<char> blocks;
  for (int rep = 0; rep < k; ++rep) {
    blocks.push_back('A');
    blocks.push_back('D');
  }
  HurwitzSystem cur = cert.start;
  auto emit = [&](const Move& m) {
    cur = apply_move(cur, m);
    cert.moves.push_back(m);
  };
  for (;;) {
    int b = -1;
    for (int q = 0; q + 2 < static_cast<int>(blocks.size()); ++q) {
      if (blocks[static_cast<std::size_t>(q)] == 'D' && blocks[static_cast<std::size_t>(q + 1)] == 'A' &&
          blocks[static_cast<std::size_t>(q + 2)] == 'D') {
        b = q;
        break;
      }
    }
    if (b < 0) break;
    const int o = b * nz;  // letter offset of the moving block
    for (int p = o + nz - 1; p >= o; --p) emit(Move{MoveKind::H3inv, p, 0, 0, 0});
    blocks.erase(blocks.begin() + b);
    blocks.insert(blocks.begin() + b + 2, 'D');
  }
  {
    Word sorted;
    for (int rep = 0; rep < k; ++rep) sorted = concat(sorted, ascending_run(genus));
    for (int rep = 0; rep < k; ++rep) sorted = concat(sorted, descending_run(genus));
    if (cur != positive_system(genus, sorted))
      throw std::logic_error("block shuffle stage did not reach the sorted block word");
  }

  // Stage 2: rotate the ascending half to the back: A^k D^k -> D^k A^k.
  for (int step = 0; step < nz * k; ++step) emit(Move{MoveKind::CyclicLeft, 0, 0, 0, 0});
  if (cur != block_power_system(genus, h))
    throw std::logic_error("rotation stage did not reach the block power system");

  // Stage 3: swap/braid rewriting into the split chain system.
  for (const Move& m : block_pass_certificate(genus, h, budget).moves) emit(m);
  if (cur != split_chain_system(genus, h))
    throw std::logic_error("block pass stage did not reach the split chain system");

  // Stage 4: reverse the reversed half chain in place.
  for (const Move& m : chain_reversal_certificate(genus, h, budget).moves) emit(m);
  cert.end = basic_type2_expanded(genus, h);
  if (cur != cert.end)
    throw std::logic_error("chain reversal stage did not reach the expanded type II system");
  return cert;
}

// ---------------------------------------------------------------------------
// Bidirectional search.

namespace {

std::string state_key(const HurwitzSystem& sys) {
  std::string s;
  for (const FactorEntry& e : sys.entries) {
    s += e.sign > 0 ? '+' : '-';
    s += e.base.kind == LetterKind::Zeta ? 'z' : 's';
    s += std::to_string(e.base.index);
    if (!e.conjugator.empty()) {
      s += '[';
      for (const SignedLetter& l : e.conjugator) s += to_string(l) + ' ';
      s += ']';
    }
    s += ';';
  }
  return s;
}

// Children in deterministic (kind, position) order over the search move set.
std::vector<std::pair<Move, HurwitzSystem>> search_children(const HurwitzSystem& sys,
                                                            bool allow_cyclic) {
  std::vector<std::pair<Move, HurwitzSystem>> out;
  const int n = static_cast<int>(sys.entries.size());
  const MoveKind kinds[] = {MoveKind::H1, MoveKind::H2, MoveKind::H3, MoveKind::H3inv};
  for (MoveKind kind : kinds) {
    for (int p = 0; p < n; ++p) {
      Move m{kind, p, 0, 0, 0};
      if (auto next = try_apply_move(sys, m)) {
        if (kind == MoveKind::H1 || kind == MoveKind::H2) {
          m.i = sys.entries[static_cast<std::size_t>(p)].base.index;
          m.j = sys.entries[static_cast<std::size_t>(p + 1)].base.index;
        }
        out.emplace_back(m, std::move(*next));
      }
    }
  }
  if (allow_cyclic && n > 0) {
    for (MoveKind kind : {MoveKind::CyclicLeft, MoveKind::CyclicRight}) {
      Move m{kind, 0, 0, 0, 0};
      if (auto next = try_apply_move(sys, m)) out.emplace_back(m, std::move(*next));
    }
  }
  return out;
}

struct Link {
  std::string parent;
  Move move;
};

using LinkMap = std::unordered_map<std::string, Link>;

// Moves along the stored parent chain from the root to `key`, in forward
// (root-to-key) order.
std::vector<Move> chain_moves(const LinkMap& links, const std::string& root_key, std::string key) {
  std::vector<Move> moves;
  while (key != root_key) {
    const Link& link = links.at(key);
    moves.push_back(link.move);
    key = link.parent;
  }
  std::reverse(moves.begin(), moves.end());
  return moves;
}

MoveCertificate splice_paths(const HurwitzSystem& a, const HurwitzSystem& b,
                             const LinkMap& links_a, const LinkMap& links_b,
                             const std::string& meet_key) {
  MoveCertificate cert;
  cert.start = a;
  cert.end = b;
  cert.moves = chain_moves(links_a, state_key(a), meet_key);
  // The b-side chain runs b -> meet; append its inverse, meet -> b.
  const std::vector<Move> toward_meet = chain_moves(links_b, state_key(b), meet_key);
  std::vector<HurwitzSystem> states{b};
  for (const Move& m : toward_meet) states.push_back(apply_move(states.back(), m));
  for (std::size_t k = toward_meet.size(); k > 0; --k)
    cert.moves.push_back(inverse_move(states[k - 1], toward_meet[k - 1]));
  return cert;
}

}  // namespace

SearchOutcome search_equivalence(const HurwitzSystem& a, const HurwitzSystem& b,
                                 long long max_expanded, bool allow_cyclic) {
  SearchOutcome out;
  // The search moves preserve genus and entry count, so mismatches cannot be
  // connected; report not-found immediately rather than erroring.
  if (a.g != b.g || a.entries.size() != b.entries.size()) return out;
  if (a == b) {
    out.found = true;
    out.certificate = MoveCertificate{a, {}, b};
    return out;
  }

  using Frontier = std::vector<std::pair<std::string, HurwitzSystem>>;
  LinkMap links_a, links_b;
  const std::string root_a = state_key(a), root_b = state_key(b);
  links_a.emplace(root_a, Link{});
  links_b.emplace(root_b, Link{});
  Frontier frontier_a{{root_a, a}}, frontier_b{{root_b, b}};

  while (!frontier_a.empty() && !frontier_b.empty()) {
    const bool expand_a = frontier_a.size() <= frontier_b.size();
    Frontier& frontier = expand_a ? frontier_a : frontier_b;
    LinkMap& mine = expand_a ? links_a : links_b;
    const LinkMap& other = expand_a ? links_b : links_a;

    Frontier next;
    for (const auto& [key, sys] : frontier) {
      if (out.expanded >= max_expanded) return out;  // budget exhausted, not found
      ++out.expanded;
      for (auto& [move, child] : search_children(sys, allow_cyclic)) {
        std::string child_key = state_key(child);
        if (mine.find(child_key) == mine.end()) {
          mine.emplace(child_key, Link{key, move});
          if (other.find(child_key) != other.end()) {
            out.found = true;
            out.certificate = splice_paths(a, b, links_a, links_b, child_key);
            return out;
          }
          next.emplace_back(std::move(child_key), std::move(child));
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace hlf
