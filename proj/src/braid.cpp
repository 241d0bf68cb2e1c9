#include "hlf/braid.hpp"

#include <cstdlib>
#include <stdexcept>

namespace hlf::braid {

namespace {

PermTable identity_table(int n) {
  PermTable p(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) p[static_cast<std::size_t>(k)] = k;
  return p;
}

// "a then b" on position maps.
PermTable compose(const PermTable& a, const PermTable& b) {
  PermTable out(a.size());
  for (std::size_t p = 0; p < a.size(); ++p)
    out[p] = b[static_cast<std::size_t>(a[p])];
  return out;
}

PermTable swap_positions(int n, int i) {  // 0-based positions i, i+1
  PermTable p = identity_table(n);
  std::swap(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i + 1)]);
  return p;
}

bool is_identity(const PermTable& p) {
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != static_cast<int>(k)) return false;
  return true;
}

// Generator i+1 left-divides the permutation braid of p iff the strands
// starting at positions i, i+1 cross, i.e. i is a descent.
bool is_descent(const PermTable& p, int i) {
  return p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(i + 1)];
}

int smallest_descent(const PermTable& p) {
  for (int i = 0; i + 1 < static_cast<int>(p.size()); ++i)
    if (is_descent(p, i)) return i;
  return -1;
}

// p * generator(i+1) remains a permutation braid iff the strands ending at
// positions i, i+1 have not crossed, i.e. their start positions are ordered.
bool can_append(const PermTable& p, int i) {
  int start_i = -1, start_j = -1;
  for (int s = 0; s < static_cast<int>(p.size()); ++s) {
    if (p[static_cast<std::size_t>(s)] == i) start_i = s;
    if (p[static_cast<std::size_t>(s)] == i + 1) start_j = s;
  }
  return start_i < start_j;
}

void check_letters(const PosWord& w, int strands) {
  for (int x : w)
    if (x < 1 || x > strands - 1) throw std::invalid_argument("braid letter out of range");
}

}  // namespace

PermTable word_permutation(const PosWord& w, int strands) {
  check_letters(w, strands);
  PermTable acc = identity_table(strands);
  for (int x : w) acc = compose(acc, swap_positions(strands, x - 1));
  return acc;
}

std::vector<PermTable> left_normal_form(const PosWord& w, int strands) {
  check_letters(w, strands);
  std::vector<PermTable> factors;
  for (int x : w) {
    factors.push_back(swap_positions(strands, x - 1));
    // Settle the suffix: move divisors leftward across boundaries until every
    // adjacent pair is left-weighted, then drop trivial factors.
    bool changed = true;
    while (changed) {
      changed = false;
      for (int f = static_cast<int>(factors.size()) - 1; f >= 1; --f) {
        bool moved = true;
        while (moved) {
          moved = false;
          for (int i = 0; i + 1 < strands; ++i) {
            if (is_descent(factors[static_cast<std::size_t>(f)], i) &&
                can_append(factors[static_cast<std::size_t>(f - 1)], i)) {
              factors[static_cast<std::size_t>(f - 1)] =
                  compose(factors[static_cast<std::size_t>(f - 1)], swap_positions(strands, i));
              factors[static_cast<std::size_t>(f)] =
                  compose(swap_positions(strands, i), factors[static_cast<std::size_t>(f)]);
              moved = true;
              changed = true;
              break;
            }
          }
        }
      }
      for (std::size_t f = 0; f < factors.size();) {
        if (is_identity(factors[f])) {
          factors.erase(factors.begin() + static_cast<std::ptrdiff_t>(f));
          changed = true;
        } else {
          ++f;
        }
      }
    }
  }
  return factors;
}

bool monoid_equal(const PosWord& u, const PosWord& v, int strands) {
  return left_normal_form(u, strands) == left_normal_form(v, strands);
}

PosWord canonical_spelling(const PermTable& perm) {
  PosWord out;
  PermTable rest = perm;
  for (int i = smallest_descent(rest); i >= 0; i = smallest_descent(rest)) {
    out.push_back(i + 1);
    // Strip the left divisor: if rest = t_i then r, then r = t_i then rest.
    rest = compose(swap_positions(static_cast<int>(rest.size()), i), rest);
  }
  return out;
}

namespace {

// Letter array plus recorded rewrites.  All mutation goes through the two
// elementary operations so the step log is always faithful.
struct Tracker {
  PosWord letters;
  std::vector<RewriteStep> steps;
  long long budget = 0;
  long long used = 0;

  void tick() {
    if (++used > budget) throw std::runtime_error("rewrite budget exhausted");
  }

  void swap_step(int p) {
    const int a = letters[static_cast<std::size_t>(p)];
    const int b = letters[static_cast<std::size_t>(p + 1)];
    if (std::abs(a - b) < 2) throw std::logic_error("invalid distant swap");
    steps.push_back(RewriteStep{false, p, a, b});
    letters[static_cast<std::size_t>(p)] = b;
    letters[static_cast<std::size_t>(p + 1)] = a;
  }

  void braid_step(int p) {
    const int a = letters[static_cast<std::size_t>(p)];
    const int b = letters[static_cast<std::size_t>(p + 1)];
    if (std::abs(a - b) != 1 || letters[static_cast<std::size_t>(p + 2)] != a)
      throw std::logic_error("invalid braid triple");
    steps.push_back(RewriteStep{true, p, a, b});
    letters[static_cast<std::size_t>(p)] = b;
    letters[static_cast<std::size_t>(p + 1)] = a;
    letters[static_cast<std::size_t>(p + 2)] = b;
  }

  // Rewrite the permutation-braid subword [lo, hi) to begin with letter i.
  // Precondition: generator i left-divides that subword.  The recursion is
  // justified by divisor/lcm reasoning: if the word starts with x != i then
  // the lcm of x and i divides it, so i divides the tail (and, in the
  // adjacent case, x divides the tail of the tail).
  void pull_front(int lo, int hi, int i) {
    tick();
    if (lo >= hi) throw std::logic_error("pull target does not divide the subword");
    const int x = letters[static_cast<std::size_t>(lo)];
    if (x == i) return;
    if (std::abs(x - i) >= 2) {
      pull_front(lo + 1, hi, i);
      swap_step(lo);
    } else {
      pull_front(lo + 1, hi, i);
      pull_front(lo + 2, hi, x);
      braid_step(lo);
    }
  }
};

struct Block {
  int s = 0;  // letter range [s, e) inside the tracker
  int e = 0;
  PermTable perm;
};

}  // namespace

RewritePlan canonicalize(const PosWord& u, int strands, long long budget) {
  check_letters(u, strands);
  Tracker tracker;
  tracker.letters = u;
  tracker.budget = budget;

  // Insertion cascade: maintain a left-weighted factorization of the prefix
  // as contiguous letter ranges, transferring divisors across boundaries via
  // tracked pulls.
  std::vector<Block> blocks;
  for (int pos = 0; pos < static_cast<int>(u.size()); ++pos) {
    const int letter = tracker.letters[static_cast<std::size_t>(pos)];
    blocks.push_back(Block{pos, pos + 1, swap_positions(strands, letter - 1)});
    bool changed = true;
    while (changed) {
      changed = false;
      for (int f = static_cast<int>(blocks.size()) - 1; f >= 1; --f) {
        bool moved = true;
        while (moved) {
          moved = false;
          for (int i = 0; i + 1 < strands; ++i) {
            Block& right = blocks[static_cast<std::size_t>(f)];
            Block& left = blocks[static_cast<std::size_t>(f - 1)];
            if (is_descent(right.perm, i) && can_append(left.perm, i)) {
              tracker.pull_front(right.s, right.e, i + 1);
              left.e += 1;
              right.s += 1;
              left.perm = compose(left.perm, swap_positions(strands, i));
              right.perm = compose(swap_positions(strands, i), right.perm);
              moved = true;
              changed = true;
              break;
            }
          }
        }
      }
      for (std::size_t f = 0; f < blocks.size();) {
        if (blocks[f].s == blocks[f].e) {
          blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(f));
          changed = true;
        } else {
          ++f;
        }
      }
    }
  }

  // Respell each factor canonically with guided pulls.
  for (const Block& b : blocks) {
    const PosWord target = canonical_spelling(b.perm);
    if (static_cast<int>(target.size()) != b.e - b.s)
      throw std::logic_error("factor length does not match its permutation");
    for (int k = 0; k < static_cast<int>(target.size()); ++k)
      tracker.pull_front(b.s + k, b.e, target[static_cast<std::size_t>(k)]);
  }

  return RewritePlan{std::move(tracker.steps), std::move(tracker.letters)};
}

std::optional<RewritePlan> transform(const PosWord& u, const PosWord& v, int strands,
                                     long long budget) {
  if (!monoid_equal(u, v, strands)) return std::nullopt;
  RewritePlan forward = canonicalize(u, strands, budget);
  RewritePlan backward = canonicalize(v, strands, budget);
  if (forward.result != backward.result)
    throw std::logic_error("canonical spellings of equal words disagree");
  RewritePlan out;
  out.steps = std::move(forward.steps);
  // Undo v's canonicalization in reverse.  Each elementary rewrite is its own
  // inverse up to swapping the recorded letter values.
  for (auto it = backward.steps.rbegin(); it != backward.steps.rend(); ++it)
    out.steps.push_back(RewriteStep{it->braid, it->pos, it->j, it->i});
  out.result = v;
  return out;
}

}  // namespace hlf::braid
