#include "hlf/hurwitz.hpp"

#include <algorithm>

namespace hlf {

void validate_system(const HurwitzSystem& sys) {
  const Genus genus = sys.genus();
  for (const FactorEntry& e : sys.entries) {
    validate_word(genus, e.conjugator);
    if (free_reduce(e.conjugator) != e.conjugator)
      throw std::invalid_argument("conjugator is not freely reduced");
    validate_signed_letter(genus, SignedLetter{e.base, e.sign});
  }
}

Word entry_word(const FactorEntry& entry) {
  Word out = entry.conjugator;
  out.push_back(SignedLetter{entry.base, entry.sign});
  Word inv = inverse(entry.conjugator);
  out.insert(out.end(), inv.begin(), inv.end());
  return out;
}

Word system_word(const HurwitzSystem& sys) {
  Word out;
  for (const FactorEntry& e : sys.entries) {
    Word w = entry_word(e);
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

FiberCounts count_entries(const HurwitzSystem& sys) {
  const Genus genus = sys.genus();
  FiberCounts c;
  c.nh_pos.assign(static_cast<std::size_t>(genus.sigma_count()), 0);
  c.nh_neg.assign(static_cast<std::size_t>(genus.sigma_count()), 0);
  for (const FactorEntry& e : sys.entries) {
    if (e.base.kind == LetterKind::Zeta) {
      (e.sign > 0 ? c.n0_pos : c.n0_neg) += 1;
    } else {
      auto& slot = e.sign > 0 ? c.nh_pos : c.nh_neg;
      slot[static_cast<std::size_t>(e.base.index - 1)] += 1;
    }
  }
  return c;
}

bool is_chiral(const HurwitzSystem& sys) {
  return std::all_of(sys.entries.begin(), sys.entries.end(),
                     [](const FactorEntry& e) { return e.sign > 0; });
}

bool is_irreducible(const HurwitzSystem& sys) {
  return std::all_of(sys.entries.begin(), sys.entries.end(),
                     [](const FactorEntry& e) { return e.base.kind == LetterKind::Zeta; });
}

Perm perm_total(const HurwitzSystem& sys) { return perm_image(sys.genus(), system_word(sys)); }

IntMat symp_total(const HurwitzSystem& sys) { return symp_image(sys.genus(), system_word(sys)); }

bool is_closed(const HurwitzSystem& sys) {
  return perm_total(sys).is_identity() && symp_total(sys).is_identity();
}

namespace {

HurwitzSystem from_positive_word(const Genus& genus, const Word& word) {
  HurwitzSystem sys;
  sys.g = genus.g;
  sys.entries.reserve(word.size());
  for (const SignedLetter& l : word) sys.entries.push_back(FactorEntry{{}, l.base, l.sign});
  return sys;
}

}  // namespace

HurwitzSystem basic_type1(const Genus& genus) {
  const Word block = involution_word(genus);
  return from_positive_word(genus, concat(block, block));
}

HurwitzSystem basic_type1_big(const Genus& genus) {
  Word w;
  for (int rep = 0; rep < genus.point_count(); ++rep) w = concat(w, ascending_run(genus));
  return from_positive_word(genus, w);
}

Word staircase_down(const Genus& genus, int h) {
  if (h < 1 || h > genus.sigma_count()) throw std::invalid_argument("sigma index out of range");
  Word out;
  for (int s = genus.zeta_count() - 2 * h; s >= 1; --s)
    for (int i = s; i <= s + 2 * h; ++i) out.push_back(pos(zeta(i)));
  return out;
}

Word staircase_up(const Genus& genus, int h) {
  if (h < 1 || h > genus.sigma_count()) throw std::invalid_argument("sigma index out of range");
  Word out;
  for (int s = 1; s <= genus.zeta_count() - 2 * h; ++s)
    for (int i = s + 2 * h; i >= s; --i) out.push_back(pos(zeta(i)));
  return out;
}

HurwitzSystem basic_type2(const Genus& genus, int h) {
  Word w = descending_run(genus);
  w = concat(w, staircase_down(genus, h));
  w.push_back(pos(sigma(h)));
  w = concat(w, staircase_up(genus, h));
  w = concat(w, ascending_run(genus));
  return from_positive_word(genus, w);
}

HurwitzSystem basic_pair_zeta(const Genus& genus) {
  return from_positive_word(genus, Word{pos(zeta(1)), neg(zeta(1))});
}

HurwitzSystem basic_pair_sigma(const Genus& genus, int h) {
  if (h < 1 || h > genus.sigma_count()) throw std::invalid_argument("sigma index out of range");
  return from_positive_word(genus, Word{pos(sigma(h)), neg(sigma(h))});
}

HurwitzSystem basic_type2_expanded(const Genus& genus, int h) {
  Word w = descending_run(genus);
  w = concat(w, staircase_down(genus, h));
  w = concat(w, chain_word(genus, h));
  w = concat(w, staircase_up(genus, h));
  w = concat(w, ascending_run(genus));
  return from_positive_word(genus, w);
}

HurwitzSystem fiber_sum(const HurwitzSystem& a, const HurwitzSystem& b) {
  if (a.g != b.g) throw std::invalid_argument("fiber sum requires equal genus");
  HurwitzSystem out = a;
  out.entries.insert(out.entries.end(), b.entries.begin(), b.entries.end());
  return out;
}

namespace {

bool plain_positive_zeta(const FactorEntry& e) {
  return e.conjugator.empty() && e.sign > 0 && e.base.kind == LetterKind::Zeta;
}

bool fail(std::string* err, const std::string& msg) {
  if (err) *err = msg;
  return false;
}

// Core of apply_move: checks the precondition and produces the result.
// Returns false (with a message if err is non-null) when inadmissible.
bool apply_impl(const HurwitzSystem& sys, const Move& move, HurwitzSystem* out, std::string* err) {
  const Genus genus = sys.genus();
  const int n = static_cast<int>(sys.entries.size());
  const int p = move.pos;
  auto need_window = [&](int width) {
    if (p < 0 || p + width > n) return fail(err, "move window out of range");
    return true;
  };

  switch (move.kind) {
    case MoveKind::H1:
    case MoveKind::H1inv: {
      if (!need_window(2)) return false;
      const FactorEntry& a = sys.entries[static_cast<std::size_t>(p)];
      const FactorEntry& b = sys.entries[static_cast<std::size_t>(p + 1)];
      if (!plain_positive_zeta(a) || !plain_positive_zeta(b))
        return fail(err, "swap move needs two plain positive chain twists");
      if (std::abs(a.base.index - b.base.index) < 2)
        return fail(err, "swap move needs distant indices");
      if ((move.i || move.j) && (move.i != a.base.index || move.j != b.base.index))
        return fail(err, "recorded indices do not match the entries");
      if (out) {
        *out = sys;
        std::swap(out->entries[static_cast<std::size_t>(p)],
                  out->entries[static_cast<std::size_t>(p + 1)]);
      }
      return true;
    }
    case MoveKind::H2:
    case MoveKind::H2inv: {
      if (!need_window(3)) return false;
      const FactorEntry& a = sys.entries[static_cast<std::size_t>(p)];
      const FactorEntry& b = sys.entries[static_cast<std::size_t>(p + 1)];
      const FactorEntry& c = sys.entries[static_cast<std::size_t>(p + 2)];
      if (!plain_positive_zeta(a) || !plain_positive_zeta(b) || !plain_positive_zeta(c))
        return fail(err, "braid move needs three plain positive chain twists");
      const int x = a.base.index, y = b.base.index;
      if (c.base.index != x || std::abs(x - y) != 1)
        return fail(err, "braid move needs the pattern (i, j, i) with adjacent indices");
      if ((move.i || move.j) && (move.i != x || move.j != y))
        return fail(err, "recorded indices do not match the entries");
      if (out) {
        *out = sys;
        out->entries[static_cast<std::size_t>(p)].base = zeta(y);
        out->entries[static_cast<std::size_t>(p + 1)].base = zeta(x);
        out->entries[static_cast<std::size_t>(p + 2)].base = zeta(y);
      }
      return true;
    }
    case MoveKind::H3:
    case MoveKind::H3inv: {
      const int block = 2 * genus.zeta_count();  // letters of (AD)
      if (!need_window(block + 1)) return false;
      for (int k = 0; k < block + 1; ++k)
        if (!plain_positive_zeta(sys.entries[static_cast<std::size_t>(p + k)]))
          return fail(err, "block move needs plain positive chain twists");
      const Word t = involution_word(genus);
      const bool forward = move.kind == MoveKind::H3;
      // Forward: (AD, z_i) -> (z_i, AD).  Inverse: (z_i, AD) -> (AD, z_i).
      const int block_start = forward ? 0 : 1;
      for (int k = 0; k < block; ++k)
        if (sys.entries[static_cast<std::size_t>(p + block_start + k)].base != t[static_cast<std::size_t>(k)].base)
          return fail(err, "block move window does not contain the block (AD)");
      if (out) {
        *out = sys;
        if (forward) {
          const FactorEntry moved = sys.entries[static_cast<std::size_t>(p + block)];
          for (int k = block; k >= 1; --k)
            out->entries[static_cast<std::size_t>(p + k)] = sys.entries[static_cast<std::size_t>(p + k - 1)];
          out->entries[static_cast<std::size_t>(p)] = moved;
        } else {
          const FactorEntry moved = sys.entries[static_cast<std::size_t>(p)];
          for (int k = 0; k < block; ++k)
            out->entries[static_cast<std::size_t>(p + k)] = sys.entries[static_cast<std::size_t>(p + k + 1)];
          out->entries[static_cast<std::size_t>(p + block)] = moved;
        }
      }
      return true;
    }
    case MoveKind::SlideRight: {
      if (!need_window(2)) return false;
      const FactorEntry a = sys.entries[static_cast<std::size_t>(p)];
      const FactorEntry b = sys.entries[static_cast<std::size_t>(p + 1)];
      if (out) {
        *out = sys;
        out->entries[static_cast<std::size_t>(p)] =
            FactorEntry{free_reduce(concat(entry_word(a), b.conjugator)), b.base, b.sign};
        out->entries[static_cast<std::size_t>(p + 1)] = a;
      }
      return true;
    }
    case MoveKind::SlideLeft: {
      if (!need_window(2)) return false;
      const FactorEntry a = sys.entries[static_cast<std::size_t>(p)];
      const FactorEntry b = sys.entries[static_cast<std::size_t>(p + 1)];
      if (out) {
        *out = sys;
        out->entries[static_cast<std::size_t>(p)] = b;
        out->entries[static_cast<std::size_t>(p + 1)] =
            FactorEntry{free_reduce(concat(inverse(entry_word(b)), a.conjugator)), a.base, a.sign};
      }
      return true;
    }
    case MoveKind::CyclicLeft:
    case MoveKind::CyclicRight: {
      if (n == 0) return fail(err, "cyclic move on an empty system");
      if (out) {
        *out = sys;
        if (move.kind == MoveKind::CyclicLeft)
          std::rotate(out->entries.begin(), out->entries.begin() + 1, out->entries.end());
        else
          std::rotate(out->entries.begin(), out->entries.end() - 1, out->entries.end());
      }
      return true;
    }
    case MoveKind::ExpandSigma: {
      if (!need_window(1)) return false;
      const FactorEntry e = sys.entries[static_cast<std::size_t>(p)];
      if (e.base.kind != LetterKind::Sigma || e.sign <= 0)
        return fail(err, "expand move needs a positive separating twist");
      if (out) {
        *out = sys;
        std::vector<FactorEntry> spelled;
        for (const SignedLetter& l : chain_word(genus, e.base.index))
          spelled.push_back(FactorEntry{e.conjugator, l.base, l.sign});
        out->entries.erase(out->entries.begin() + p);
        out->entries.insert(out->entries.begin() + p, spelled.begin(), spelled.end());
      }
      return true;
    }
    case MoveKind::ContractSigma: {
      const int h = move.h;
      if (h < 1 || h > genus.sigma_count()) return fail(err, "contract move needs a valid chain index");
      const Word chain = chain_word(genus, h);
      const int len = static_cast<int>(chain.size());
      if (!need_window(len)) return false;
      const Word& conj = sys.entries[static_cast<std::size_t>(p)].conjugator;
      for (int k = 0; k < len; ++k) {
        const FactorEntry& e = sys.entries[static_cast<std::size_t>(p + k)];
        if (e.base != chain[static_cast<std::size_t>(k)].base || e.sign <= 0 ||
            e.base.kind != LetterKind::Zeta)
          return fail(err, "contract move window does not spell the chain word");
        if (e.conjugator != conj)
          return fail(err, "contract move needs a common conjugator across the window");
      }
      if (out) {
        *out = sys;
        out->entries.erase(out->entries.begin() + p, out->entries.begin() + p + len);
        out->entries.insert(out->entries.begin() + p, FactorEntry{conj, sigma(h), +1});
      }
      return true;
    }
  }
  return fail(err, "unknown move kind");
}

}  // namespace

HurwitzSystem apply_move(const HurwitzSystem& sys, const Move& move) {
  HurwitzSystem out;
  std::string err;
  if (!apply_impl(sys, move, &out, &err))
    throw std::invalid_argument("inadmissible " + to_string(move.kind) + " at position " +
                                std::to_string(move.pos) + ": " + err);
  return out;
}

std::optional<HurwitzSystem> try_apply_move(const HurwitzSystem& sys, const Move& move) {
  HurwitzSystem out;
  if (!apply_impl(sys, move, &out, nullptr)) return std::nullopt;
  return out;
}

Move inverse_move(const HurwitzSystem& sys_before, const Move& move) {
  switch (move.kind) {
    case MoveKind::H1:
      return Move{MoveKind::H1inv, move.pos, move.j, move.i, 0};
    case MoveKind::H1inv:
      return Move{MoveKind::H1, move.pos, move.j, move.i, 0};
    case MoveKind::H2:
      return Move{MoveKind::H2inv, move.pos, move.j, move.i, 0};
    case MoveKind::H2inv:
      return Move{MoveKind::H2, move.pos, move.j, move.i, 0};
    case MoveKind::H3:
      return Move{MoveKind::H3inv, move.pos, 0, 0, 0};
    case MoveKind::H3inv:
      return Move{MoveKind::H3, move.pos, 0, 0, 0};
    case MoveKind::SlideRight:
      return Move{MoveKind::SlideLeft, move.pos, 0, 0, 0};
    case MoveKind::SlideLeft:
      return Move{MoveKind::SlideRight, move.pos, 0, 0, 0};
    case MoveKind::CyclicLeft:
      return Move{MoveKind::CyclicRight, 0, 0, 0, 0};
    case MoveKind::CyclicRight:
      return Move{MoveKind::CyclicLeft, 0, 0, 0, 0};
    case MoveKind::ExpandSigma: {
      const auto& e = sys_before.entries.at(static_cast<std::size_t>(move.pos));
      if (e.base.kind != LetterKind::Sigma)
        throw std::invalid_argument("expand move position does not hold a separating twist");
      return Move{MoveKind::ContractSigma, move.pos, 0, 0, e.base.index};
    }
    case MoveKind::ContractSigma:
      return Move{MoveKind::ExpandSigma, move.pos, 0, 0, 0};
  }
  throw std::invalid_argument("unknown move kind");
}

std::vector<Move> admissible_moves(const HurwitzSystem& sys, bool allow_cyclic) {
  std::vector<Move> out;
  const int n = static_cast<int>(sys.entries.size());
  static const MoveKind kinds[] = {MoveKind::H1,         MoveKind::H1inv,    MoveKind::H2,
                                   MoveKind::H2inv,      MoveKind::H3,       MoveKind::H3inv,
                                   MoveKind::SlideRight, MoveKind::SlideLeft, MoveKind::CyclicLeft,
                                   MoveKind::CyclicRight, MoveKind::ExpandSigma,
                                   MoveKind::ContractSigma};
  for (MoveKind kind : kinds) {
    if (!allow_cyclic && (kind == MoveKind::CyclicLeft || kind == MoveKind::CyclicRight)) continue;
    if (kind == MoveKind::CyclicLeft || kind == MoveKind::CyclicRight) {
      Move m{kind, 0, 0, 0, 0};
      if (apply_impl(sys, m, nullptr, nullptr)) out.push_back(m);
      continue;
    }
    for (int p = 0; p < n; ++p) {
      if (kind == MoveKind::ContractSigma) {
        for (int h = 1; h <= sys.genus().sigma_count(); ++h) {
          Move m{kind, p, 0, 0, h};
          if (apply_impl(sys, m, nullptr, nullptr)) out.push_back(m);
        }
        continue;
      }
      Move m{kind, p, 0, 0, 0};
      if (apply_impl(sys, m, nullptr, nullptr)) {
        // Record the generator indices for the index-carrying kinds.
        if (kind == MoveKind::H1 || kind == MoveKind::H1inv || kind == MoveKind::H2 ||
            kind == MoveKind::H2inv) {
          m.i = sys.entries[static_cast<std::size_t>(p)].base.index;
          m.j = sys.entries[static_cast<std::size_t>(p + 1)].base.index;
        }
        out.push_back(m);
      }
    }
  }
  return out;
}

long long euler_invariant(const Genus& genus, const FiberCounts& counts) {
  long long e = counts.n0_pos - counts.n0_neg;
  for (int h = 1; h <= genus.sigma_count(); ++h) {
    const long long diff =
        counts.nh_pos[static_cast<std::size_t>(h - 1)] - counts.nh_neg[static_cast<std::size_t>(h - 1)];
    e -= 4 * diff * (2LL * h * (genus.g - h) + 2 * genus.g + 1);
  }
  return e;
}

long long euler_invariant(const HurwitzSystem& sys) {
  return euler_invariant(sys.genus(), count_entries(sys));
}

bool euler_divisibility_ok(const Genus& genus, long long e) {
  const long long unit = (genus.g % 2 == 0 ? 2LL : 4LL) * (2 * genus.g + 1);
  return e % unit == 0;
}

VerifyResult verify_certificate(const MoveCertificate& cert) {
  VerifyResult out;
  if (cert.start.g != cert.end.g) {
    out.ok = false;
    out.failing_step = -1;
    out.message = "start and end genus differ";
    return out;
  }
  HurwitzSystem cur = cert.start;
  for (std::size_t k = 0; k < cert.moves.size(); ++k) {
    try {
      cur = apply_move(cur, cert.moves[k]);
    } catch (const std::invalid_argument& ex) {
      out.ok = false;
      out.failing_step = static_cast<int>(k);
      out.message = ex.what();
      return out;
    }
  }
  if (cur == cert.end) {
    out.ok = true;
    out.failing_step = -2;
    out.message = "verified";
  } else {
    out.ok = false;
    out.failing_step = -1;
    out.message = "replayed end state does not match the claimed end system";
  }
  return out;
}

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::H1: return "H1";
    case MoveKind::H1inv: return "H1inv";
    case MoveKind::H2: return "H2";
    case MoveKind::H2inv: return "H2inv";
    case MoveKind::H3: return "H3";
    case MoveKind::H3inv: return "H3inv";
    case MoveKind::SlideRight: return "SlideRight";
    case MoveKind::SlideLeft: return "SlideLeft";
    case MoveKind::CyclicLeft: return "CyclicLeft";
    case MoveKind::CyclicRight: return "CyclicRight";
    case MoveKind::ExpandSigma: return "ExpandSigma";
    case MoveKind::ContractSigma: return "ContractSigma";
  }
  return "?";
}

std::string to_string(const Move& move) {
  std::string s = to_string(move.kind) + "@" + std::to_string(move.pos);
  if (move.i || move.j) s += "(" + std::to_string(move.i) + "," + std::to_string(move.j) + ")";
  if (move.h) s += "[h=" + std::to_string(move.h) + "]";
  return s;
}

}  // namespace hlf
