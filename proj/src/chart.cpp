#include "hlf/chart.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace hlf {

namespace {

// One rotation slot seen abstractly: the label carried by the edge and
// whether the edge points away from the vertex (outward) at this end.
struct SlotView {
  Letter label;
  bool outward = false;

  friend bool operator==(const SlotView&, const SlotView&) = default;
};

// Cyclic sequence match: does `seq` equal `pattern` up to rotation?
bool cyclic_equal(const std::vector<SlotView>& seq,
                  const std::vector<SlotView>& pattern) {
  const std::size_t n = pattern.size();
  if (seq.size() != n) return false;
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool all = true;
    for (std::size_t t = 0; t < n && all; ++t) {
      all = seq[(shift + t) % n] == pattern[t];
    }
    if (all) return true;
  }
  return false;
}

// Match up to rotation and mirror image.  The mirror (reversed cyclic
// order) is accepted for every kind: the self-paired kinds are insensitive
// to it, the two big fan kinds admit it explicitly, and the block-passing
// vertex needs it for the inverse-direction junctions.
bool template_match(const std::vector<SlotView>& seq,
                    const std::vector<SlotView>& pattern) {
  if (cyclic_equal(seq, pattern)) return true;
  std::vector<SlotView> mirrored(seq.rbegin(), seq.rend());
  return cyclic_equal(mirrored, pattern);
}

std::vector<SlotView> word_slots(const Word& word, bool outward) {
  std::vector<SlotView> slots;
  slots.reserve(word.size());
  for (const SignedLetter& l : word) slots.push_back({l.base, outward});
  return slots;
}

std::vector<SlotView> concat_slots(std::vector<SlotView> a,
                                   const std::vector<SlotView>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

long long expected_degree(VertexKind kind, const Genus& genus, int h) {
  switch (kind) {
    case VertexKind::Black:
      return 1;
    case VertexKind::Crossing:
      return 4;
    case VertexKind::Braiding:
      return 6;
    case VertexKind::NucleonOut:
    case VertexKind::NucleonIn:
      return 4LL * genus.zeta_count();
    case VertexKind::BigNucleonOut:
    case VertexKind::BigNucleonIn:
      return 2LL * (genus.g + 1) * genus.zeta_count();
    case VertexKind::Transition:
      return 2LL * (2 * genus.zeta_count() + 1);
    case VertexKind::SigmaBurstOut:
    case VertexKind::SigmaBurstIn:
      return 4LL * h * (2 * h + 1) + 1;
  }
  return -1;
}

}  // namespace

ChartReport validate_chart(const Chart& chart) {
  ChartReport report;
  report.notes = {
      "boundary avoidance holds vacuously: abstract charts carry no boundary",
      "base point avoidance holds vacuously: abstract charts carry no base "
      "point",
  };
  auto problem = [&report](std::string text) {
    report.problems.push_back(std::move(text));
  };

  if (chart.g < 1) {
    problem("genus must be at least 1");
    return report;
  }
  const Genus genus = chart.genus();

  std::map<int, const ChartVertex*> verts;
  for (const ChartVertex& v : chart.vertices) {
    if (!verts.emplace(v.id, &v).second) {
      problem("duplicate vertex id " + std::to_string(v.id));
    }
  }
  std::map<int, const ChartEdge*> edges;
  for (const ChartEdge& e : chart.edges) {
    if (!edges.emplace(e.id, &e).second) {
      problem("duplicate edge id " + std::to_string(e.id));
    }
  }

  for (const ChartEdge& e : chart.edges) {
    const std::string tag = "edge " + std::to_string(e.id) + ": ";
    try {
      validate_letter(genus, e.label);
    } catch (const std::invalid_argument& ex) {
      problem(tag + ex.what());
    }
    if (e.from.has_value() != e.to.has_value()) {
      problem(tag + "a hoop must drop both endpoints, not one");
    }
    for (std::optional<int> endpoint : {e.from, e.to}) {
      if (endpoint && !verts.count(*endpoint)) {
        problem(tag + "endpoint references missing vertex " +
                std::to_string(*endpoint));
      }
    }
  }

  // Cross-check the rotation system against the declared endpoints: every
  // attached edge end must appear exactly once, at its own vertex.
  bool incidence_ok = true;
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> spots;
  for (const ChartVertex& v : chart.vertices) {
    for (std::size_t s = 0; s < v.rotation.size(); ++s) {
      const EdgeEnd& ee = v.rotation[s];
      const std::string tag = "vertex " + std::to_string(v.id) + " slot " +
                              std::to_string(s) + ": ";
      if (!edges.count(ee.edge)) {
        problem(tag + "references missing edge " + std::to_string(ee.edge));
        incidence_ok = false;
      } else if (ee.end != 0 && ee.end != 1) {
        problem(tag + "edge end must be 0 or 1");
        incidence_ok = false;
      } else {
        spots[{ee.edge, ee.end}].push_back({v.id, static_cast<int>(s)});
      }
    }
  }
  for (const ChartEdge& e : chart.edges) {
    for (int end = 0; end < 2; ++end) {
      const std::optional<int>& at = end == 0 ? e.from : e.to;
      const auto it = spots.find({e.id, end});
      const std::size_t found = it == spots.end() ? 0 : it->second.size();
      const std::string tag = "edge " + std::to_string(e.id) +
                              (end == 0 ? " tail: " : " head: ");
      if (at) {
        if (found != 1) {
          problem(tag + "must appear in exactly one rotation, found " +
                  std::to_string(found));
          incidence_ok = false;
        } else if (it->second.front().first != *at) {
          problem(tag + "declared at vertex " + std::to_string(*at) +
                  " but placed in the rotation of vertex " +
                  std::to_string(it->second.front().first));
          incidence_ok = false;
        }
      } else if (found != 0) {
        problem(tag + "a hoop end may not appear in any rotation");
        incidence_ok = false;
      }
    }
  }

  // Per-vertex templates.
  for (const ChartVertex& v : chart.vertices) {
    const std::string tag = "vertex " + std::to_string(v.id) + ": ";
    std::vector<SlotView> seq;
    bool readable = true;
    for (const EdgeEnd& ee : v.rotation) {
      const auto it = edges.find(ee.edge);
      if (it == edges.end() || (ee.end != 0 && ee.end != 1)) {
        readable = false;
        break;
      }
      seq.push_back({it->second->label, ee.end == 0});
    }
    if (!readable) continue;  // already reported above

    int burst_h = 0;
    if (v.kind == VertexKind::SigmaBurstOut ||
        v.kind == VertexKind::SigmaBurstIn) {
      int sigma_slots = 0;
      for (const SlotView& s : seq) {
        if (s.label.kind == LetterKind::Sigma) {
          ++sigma_slots;
          burst_h = s.label.index;
        }
      }
      if (sigma_slots != 1) {
        problem(tag + "a sigma burst needs exactly one sigma-labeled edge");
        continue;
      }
    }
    const long long want = expected_degree(v.kind, genus, burst_h);
    if (static_cast<long long>(seq.size()) != want) {
      problem(tag + to_string(v.kind) + " expects degree " +
              std::to_string(want) + ", found " + std::to_string(seq.size()));
      continue;
    }

    switch (v.kind) {
      case VertexKind::Black:
        break;  // any label, either direction
      case VertexKind::Crossing: {
        bool all_zeta = true;
        for (const SlotView& s : seq) {
          all_zeta = all_zeta && s.label.kind == LetterKind::Zeta;
        }
        if (!all_zeta || seq[0].label != seq[2].label ||
            seq[1].label != seq[3].label ||
            std::abs(seq[0].label.index - seq[1].label.index) < 2) {
          problem(tag + "diagonals must carry equal chain labels at distance "
                        "at least two");
          break;
        }
        if (seq[0].outward == seq[2].outward ||
            seq[1].outward == seq[3].outward) {
          problem(tag + "each diagonal must be oriented coherently");
        }
        break;
      }
      case VertexKind::Braiding: {
        bool all_zeta = true;
        for (const SlotView& s : seq) {
          all_zeta = all_zeta && s.label.kind == LetterKind::Zeta;
        }
        const bool alternating =
            all_zeta && seq[0].label == seq[2].label &&
            seq[2].label == seq[4].label && seq[1].label == seq[3].label &&
            seq[3].label == seq[5].label &&
            std::abs(seq[0].label.index - seq[1].label.index) == 1;
        if (!alternating) {
          problem(tag + "labels must alternate between adjacent chain "
                        "indices");
          break;
        }
        bool runs_ok = false;
        for (int k = 0; k < 6 && !runs_ok; ++k) {
          runs_ok = seq[k].outward && seq[(k + 1) % 6].outward &&
                    seq[(k + 2) % 6].outward && !seq[(k + 3) % 6].outward &&
                    !seq[(k + 4) % 6].outward && !seq[(k + 5) % 6].outward;
        }
        if (!runs_ok) {
          problem(tag + "three consecutive edges must point out and the "
                        "other three in");
        }
        break;
      }
      case VertexKind::NucleonOut:
      case VertexKind::NucleonIn: {
        const bool outward = v.kind == VertexKind::NucleonOut;
        const Word half = involution_word(genus);
        const std::vector<SlotView> pattern =
            concat_slots(word_slots(half, outward), word_slots(half, outward));
        if (!template_match(seq, pattern)) {
          problem(tag + "rotation does not match the nucleon template");
        }
        break;
      }
      case VertexKind::BigNucleonOut:
      case VertexKind::BigNucleonIn: {
        const bool outward = v.kind == VertexKind::BigNucleonOut;
        Word runs;
        for (int r = 0; r < genus.point_count(); ++r) {
          runs = concat(runs, ascending_run(genus));
        }
        if (!template_match(seq, word_slots(runs, outward))) {
          problem(tag + "rotation does not match the big nucleon template");
        }
        break;
      }
      case VertexKind::Transition: {
        bool any = false;
        for (int i = 1; i <= genus.zeta_count() && !any; ++i) {
          Word block = involution_word(genus);
          block.push_back(pos(zeta(i)));
          any = template_match(seq, concat_slots(word_slots(block, true),
                                                 word_slots(block, false)));
        }
        if (!any) {
          problem(tag + "rotation does not match the block-passing template "
                        "for any chain index");
        }
        break;
      }
      case VertexKind::SigmaBurstOut:
      case VertexKind::SigmaBurstIn: {
        const bool zetas_out = v.kind == VertexKind::SigmaBurstOut;
        std::vector<SlotView> pattern =
            word_slots(chain_word(genus, burst_h), zetas_out);
        pattern.push_back({sigma(burst_h), !zetas_out});
        if (!template_match(seq, pattern)) {
          problem(tag + "rotation does not match the sigma burst template");
        }
        break;
      }
    }
  }

  // Planarity, component by component.  Hoops carry no vertices and sit in
  // faces of their own; they are always embeddable and are skipped here.
  if (incidence_ok) {
    std::map<int, int> component;  // vertex id -> component root
    for (const ChartVertex& v : chart.vertices) component[v.id] = v.id;
    std::function<int(int)> find = [&](int x) {
      while (component[x] != x) x = component[x] = component[component[x]];
      return x;
    };
    for (const ChartEdge& e : chart.edges) {
      if (e.from && e.to && verts.count(*e.from) && verts.count(*e.to)) {
        component[find(*e.from)] = find(*e.to);
      }
    }

    std::map<int, long long> comp_v, comp_e, comp_f;
    for (const ChartVertex& v : chart.vertices) ++comp_v[find(v.id)];
    for (const ChartEdge& e : chart.edges) {
      if (e.from && e.to) ++comp_e[find(*e.from)];
    }

    // Face tracing: a dart traverses an edge with (0) or against (1) its
    // orientation; the next dart leaves from the rotation slot after the
    // arrival end.
    std::map<int, std::pair<int, int>> slot_of;  // (edge,end) key -> (vertex, slot)
    for (const auto& [key, where] : spots) {
      slot_of[key.first * 2 + key.second] = where.front();
    }
    std::set<std::pair<int, int>> seen;
    for (const ChartEdge& e : chart.edges) {
      if (!e.from || !e.to) continue;
      for (int dir = 0; dir < 2; ++dir) {
        if (!seen.insert({e.id, dir}).second) continue;
        ++comp_f[find(*e.from)];
        int cur_edge = e.id;
        int cur_dir = dir;
        while (true) {
          const int arrive_end = cur_dir == 0 ? 1 : 0;
          const auto [w, s] = slot_of.at(cur_edge * 2 + arrive_end);
          const ChartVertex& wv = *verts.at(w);
          const EdgeEnd& next =
              wv.rotation[(s + 1) % wv.rotation.size()];
          cur_edge = next.edge;
          cur_dir = next.end;  // leave forward off a tail, backward off a head
          if (cur_edge == e.id && cur_dir == dir) break;
          seen.insert({cur_edge, cur_dir});
        }
      }
    }
    for (const auto& [root, nv] : comp_v) {
      const long long ne = comp_e.count(root) ? comp_e.at(root) : 0;
      const long long nf = comp_f.count(root) ? comp_f.at(root) : 0;
      if (ne == 0 && nf == 0) {
        // An isolated vertex only arises from structural damage reported
        // above (every valid kind has positive degree).
        continue;
      }
      if (nv - ne + nf != 2) {
        problem("component containing vertex " + std::to_string(root) +
                " does not embed in the plane (V - E + F = " +
                std::to_string(nv - ne + nf) + ", expected 2)");
      }
    }
  }

  report.ok = report.problems.empty();
  return report;
}

FiberCounts chart_census(const Chart& chart) {
  FiberCounts counts;
  if (chart.g < 1) return counts;
  const Genus genus = chart.genus();
  counts.nh_pos.assign(genus.sigma_count(), 0);
  counts.nh_neg.assign(genus.sigma_count(), 0);

  std::map<int, const ChartEdge*> edges;
  for (const ChartEdge& e : chart.edges) edges.emplace(e.id, &e);

  for (const ChartVertex& v : chart.vertices) {
    if (v.kind != VertexKind::Black || v.rotation.size() != 1) continue;
    const auto it = edges.find(v.rotation.front().edge);
    if (it == edges.end()) continue;
    const Letter label = it->second->label;
    const bool positive = v.rotation.front().end == 1;  // edge points at it
    if (label.kind == LetterKind::Zeta) {
      ++(positive ? counts.n0_pos : counts.n0_neg);
    } else if (label.index >= 1 && label.index <= genus.sigma_count()) {
      auto& bucket = positive ? counts.nh_pos : counts.nh_neg;
      ++bucket[label.index - 1];
    }
  }
  return counts;
}

Chart chart_product(const Chart& a, const Chart& b) {
  if (a.g != b.g) {
    throw std::invalid_argument("chart product requires equal genus");
  }
  int vshift = 0;
  for (const ChartVertex& v : a.vertices) vshift = std::max(vshift, v.id + 1);
  int eshift = 0;
  for (const ChartEdge& e : a.edges) eshift = std::max(eshift, e.id + 1);

  Chart out = a;
  for (ChartVertex v : b.vertices) {
    v.id += vshift;
    for (EdgeEnd& ee : v.rotation) ee.edge += eshift;
    out.vertices.push_back(std::move(v));
  }
  for (ChartEdge e : b.edges) {
    e.id += eshift;
    if (e.from) *e.from += vshift;
    if (e.to) *e.to += vshift;
    out.edges.push_back(std::move(e));
  }
  return out;
}

namespace {

// A fan chart: one center vertex whose edges all point at black caps,
// spelling `word` counterclockwise when read right to left.
Chart fan_chart(const Genus& genus, VertexKind center_kind, const Word& word) {
  Chart chart;
  chart.g = genus.g;
  ChartVertex center{0, center_kind, {}};
  for (std::size_t t = 0; t < word.size(); ++t) {
    const int edge_id = static_cast<int>(t);
    const int black_id = static_cast<int>(t) + 1;
    chart.edges.push_back(
        {edge_id, word[t].base, std::optional<int>(0),
         std::optional<int>(black_id)});
    chart.vertices.push_back(
        {black_id, VertexKind::Black, {EdgeEnd{edge_id, 1}}});
    center.rotation.push_back(EdgeEnd{edge_id, 0});
  }
  // Counterclockwise order around an upward fan runs right to left.
  std::reverse(center.rotation.begin(), center.rotation.end());
  chart.vertices.insert(chart.vertices.begin(), std::move(center));
  std::sort(chart.vertices.begin(), chart.vertices.end(),
            [](const ChartVertex& x, const ChartVertex& y) {
              return x.id < y.id;
            });
  return chart;
}

Chart free_edge(const Genus& genus, Letter label) {
  validate_letter(genus, label);
  Chart chart;
  chart.g = genus.g;
  chart.vertices.push_back({0, VertexKind::Black, {EdgeEnd{0, 0}}});
  chart.vertices.push_back({1, VertexKind::Black, {EdgeEnd{0, 1}}});
  chart.edges.push_back(
      {0, label, std::optional<int>(0), std::optional<int>(1)});
  return chart;
}

}  // namespace

Chart build_n0(const Genus& genus) {
  const Word half = involution_word(genus);
  return fan_chart(genus, VertexKind::NucleonOut, concat(half, half));
}

Chart build_n1(const Genus& genus) {
  Word runs;
  for (int r = 0; r < genus.point_count(); ++r) {
    runs = concat(runs, ascending_run(genus));
  }
  return fan_chart(genus, VertexKind::BigNucleonOut, runs);
}

Chart build_f1(const Genus& genus) { return free_edge(genus, zeta(1)); }

Chart build_f2h(const Genus& genus, int h) {
  return free_edge(genus, sigma(h));
}

namespace {

// Growing movie state: the chart under construction plus the open top end
// of each live strand, aligned with the replayed system's entries.
struct Movie {
  Chart chart;
  std::vector<int> open;

  int add_vertex(VertexKind kind) {
    const int id = static_cast<int>(chart.vertices.size());
    chart.vertices.push_back({id, kind, {}});
    return id;
  }
  int add_edge(Letter label, int tail_vertex) {
    const int id = static_cast<int>(chart.edges.size());
    chart.edges.push_back(
        {id, label, std::optional<int>(tail_vertex), std::nullopt});
    return id;
  }
  void land(int edge_id, int head_vertex) {
    chart.edges[edge_id].to = head_vertex;
  }

  // Replace the window [pos, pos+width) of strands by a junction vertex:
  // the old strands end on it, one new strand per top label leaves it.
  void junction(VertexKind kind, int pos, int width,
                const std::vector<Letter>& top) {
    const int v = add_vertex(kind);
    std::vector<EdgeEnd> rotation;
    std::vector<int> fresh;
    fresh.reserve(top.size());
    for (const Letter& label : top) fresh.push_back(add_edge(label, v));
    for (auto it = fresh.rbegin(); it != fresh.rend(); ++it) {
      rotation.push_back(EdgeEnd{*it, 0});  // upper slots, right to left
    }
    for (int t = 0; t < width; ++t) {
      land(open[pos + t], v);
      rotation.push_back(EdgeEnd{open[pos + t], 1});  // lower, left to right
    }
    chart.vertices[v].rotation = std::move(rotation);
    open.erase(open.begin() + pos, open.begin() + pos + width);
    open.insert(open.begin() + pos, fresh.begin(), fresh.end());
  }
};

bool plain_positive(const FactorEntry& entry) {
  return entry.conjugator.empty() && entry.sign == +1;
}

}  // namespace

Chart compile_certificate(const MoveCertificate& cert, StartCapping capping) {
  const VerifyResult checked = verify_certificate(cert);
  if (!checked.ok) {
    throw std::invalid_argument("cannot compile: certificate does not verify (" +
                                checked.message + ")");
  }
  const Genus genus = cert.start.genus();
  for (const FactorEntry& entry : cert.start.entries) {
    if (!plain_positive(entry)) {
      throw std::invalid_argument(
          "cannot compile: start entries must be plain positive generators");
    }
  }
  for (const Move& move : cert.moves) {
    if (move.kind == MoveKind::SlideRight || move.kind == MoveKind::SlideLeft) {
      throw std::invalid_argument("cannot compile: slide moves have no vertex");
    }
  }

  Movie movie;
  movie.chart.g = cert.start.g;
  HurwitzSystem sys = cert.start;

  if (capping == StartCapping::BlackBoth) {
    for (const FactorEntry& entry : sys.entries) {
      const int b = movie.add_vertex(VertexKind::Black);
      const int e = movie.add_edge(entry.base, b);
      movie.chart.vertices[b].rotation = {EdgeEnd{e, 0}};
      movie.open.push_back(e);
    }
  } else {
    const Word half = involution_word(genus);
    const Word type1 = concat(half, half);
    const std::size_t block = type1.size();
    if (sys.entries.empty() || sys.entries.size() % block != 0) {
      throw std::invalid_argument(
          "cannot compile: start is not a sequence of type I words");
    }
    for (std::size_t t = 0; t < sys.entries.size(); ++t) {
      if (sys.entries[t].base != type1[t % block].base) {
        throw std::invalid_argument(
            "cannot compile: start is not a sequence of type I words");
      }
    }
    for (std::size_t b0 = 0; b0 < sys.entries.size(); b0 += block) {
      const int v = movie.add_vertex(VertexKind::NucleonOut);
      std::vector<EdgeEnd> rotation;
      for (std::size_t t = 0; t < block; ++t) {
        const int e = movie.add_edge(sys.entries[b0 + t].base, v);
        movie.open.push_back(e);
        rotation.push_back(EdgeEnd{e, 0});
      }
      std::reverse(rotation.begin(), rotation.end());
      movie.chart.vertices[v].rotation = std::move(rotation);
    }
  }

  for (const Move& move : cert.moves) {
    const auto base_at = [&sys](int t) { return sys.entries[t].base; };
    switch (move.kind) {
      case MoveKind::CyclicLeft:
        std::rotate(movie.open.begin(), movie.open.begin() + 1,
                    movie.open.end());
        break;
      case MoveKind::CyclicRight:
        std::rotate(movie.open.begin(), movie.open.end() - 1,
                    movie.open.end());
        break;
      case MoveKind::H1:
      case MoveKind::H1inv:
        movie.junction(VertexKind::Crossing, move.pos, 2,
                       {base_at(move.pos + 1), base_at(move.pos)});
        break;
      case MoveKind::H2:
      case MoveKind::H2inv:
        movie.junction(VertexKind::Braiding, move.pos, 3,
                       {base_at(move.pos + 1), base_at(move.pos),
                        base_at(move.pos + 1)});
        break;
      case MoveKind::H3:
      case MoveKind::H3inv: {
        const int width = 2 * genus.zeta_count() + 1;
        std::vector<Letter> top;
        top.reserve(width);
        if (move.kind == MoveKind::H3) {
          top.push_back(base_at(move.pos + width - 1));
          for (int t = 0; t + 1 < width; ++t) top.push_back(base_at(move.pos + t));
        } else {
          for (int t = 1; t < width; ++t) top.push_back(base_at(move.pos + t));
          top.push_back(base_at(move.pos));
        }
        movie.junction(VertexKind::Transition, move.pos, width, top);
        break;
      }
      case MoveKind::ExpandSigma: {
        const int h = base_at(move.pos).index;
        std::vector<Letter> top;
        for (const SignedLetter& l : chain_word(genus, h)) {
          top.push_back(l.base);
        }
        movie.junction(VertexKind::SigmaBurstOut, move.pos, 1, top);
        break;
      }
      case MoveKind::ContractSigma: {
        const int width = 4 * move.h * (2 * move.h + 1);
        movie.junction(VertexKind::SigmaBurstIn, move.pos, width,
                       {sigma(move.h)});
        break;
      }
      case MoveKind::SlideRight:
      case MoveKind::SlideLeft:
        break;  // rejected above
    }
    sys = apply_move(sys, move);
    if (movie.open.size() != sys.entries.size()) {
      throw std::logic_error("movie strand registry out of step");
    }
  }

  for (std::size_t t = 0; t < movie.open.size(); ++t) {
    const int b = movie.add_vertex(VertexKind::Black);
    movie.land(movie.open[t], b);
    movie.chart.vertices[b].rotation = {EdgeEnd{movie.open[t], 1}};
  }

  const ChartReport report = validate_chart(movie.chart);
  if (!report.ok) {
    throw std::logic_error("compiled chart failed validation: " +
                           report.problems.front());
  }
  return movie.chart;
}

Chart build_n2h(const Genus& genus, int h, long long budget) {
  MoveCertificate cert = derive_type2_certificate(genus, h, budget);
  const int nz = genus.zeta_count();
  const int chain_offset = nz + (nz - 2 * h) * (2 * h + 1);
  const Move contract{MoveKind::ContractSigma, chain_offset, 0, 0, h};
  cert.end = apply_move(cert.end, contract);
  cert.moves.push_back(contract);
  return compile_certificate(cert, StartCapping::NucleonsAtStart);
}

namespace {

int vertex_index(const Chart& chart, int id) {
  for (std::size_t t = 0; t < chart.vertices.size(); ++t) {
    if (chart.vertices[t].id == id) return static_cast<int>(t);
  }
  return -1;
}

int edge_index(const Chart& chart, int id) {
  for (std::size_t t = 0; t < chart.edges.size(); ++t) {
    if (chart.edges[t].id == id) return static_cast<int>(t);
  }
  return -1;
}

std::optional<int>& endpoint(ChartEdge& edge, int end) {
  return end == 0 ? edge.from : edge.to;
}

VertexKind interior_kind(ChartMoveKind kind) {
  switch (kind) {
    case ChartMoveKind::C2:
    case ChartMoveKind::C2inv:
      return VertexKind::Crossing;
    case ChartMoveKind::C3:
    case ChartMoveKind::C3inv:
      return VertexKind::Braiding;
    default:
      return VertexKind::Transition;
  }
}

int interior_half_degree(ChartMoveKind kind, const Genus& genus) {
  switch (kind) {
    case ChartMoveKind::C2:
    case ChartMoveKind::C2inv:
      return 2;
    case ChartMoveKind::C3:
    case ChartMoveKind::C3inv:
      return 3;
    default:
      return 2 * genus.zeta_count() + 1;
  }
}

LocalMoveResult forward_local_move(const Chart& chart, ChartMoveKind kind,
                                   const ChartSite& site) {
  Chart out = chart;
  const int ei = edge_index(out, site.edge);
  if (ei < 0) throw std::invalid_argument("site edge not found");
  ChartEdge capped = out.edges[ei];
  if (!capped.from || !capped.to) {
    throw std::invalid_argument("site edge must join two vertices");
  }

  const VertexKind want = interior_kind(kind);
  int black_id = -1;
  int interior_id = -1;
  for (int end = 0; end < 2; ++end) {
    const int vid = end == 0 ? *capped.from : *capped.to;
    const int vi = vertex_index(out, vid);
    if (vi < 0) throw std::invalid_argument("site edge endpoint missing");
    if (out.vertices[vi].kind == VertexKind::Black) black_id = vid;
    if (out.vertices[vi].kind == want) interior_id = vid;
  }
  if (black_id < 0 || interior_id < 0 || black_id == interior_id) {
    throw std::invalid_argument("site edge must join a black vertex and a " +
                                to_string(want) + " vertex");
  }

  const int vi = vertex_index(out, interior_id);
  const ChartVertex vertex = out.vertices[vi];
  const int m2 = static_cast<int>(vertex.rotation.size());
  const int m = m2 / 2;
  const int cap_end = *capped.from == interior_id ? 0 : 1;
  int k = -1;
  for (int s = 0; s < m2; ++s) {
    if (vertex.rotation[s] == EdgeEnd{capped.id, cap_end}) k = s;
  }
  if (k < 0 || m2 != 2 * interior_half_degree(kind, out.genus())) {
    throw std::invalid_argument("site does not match the move pattern");
  }

  // An edge may visit the vertex twice only across one nested fusion pair.
  const auto pair_of = [&](int slot) {
    const int d = ((slot - k) % m2 + m2) % m2;
    if (d == 0 || d == m) return -1;
    return d < m ? d - 1 : m2 - d - 1;  // near side: d-1; far side symmetric
  };
  std::map<int, std::vector<int>> visits;
  for (int s = 0; s < m2; ++s) visits[vertex.rotation[s].edge].push_back(s);
  for (const auto& [edge_id, at] : visits) {
    if (at.size() == 1) continue;
    if (at.size() != 2 || pair_of(at[0]) < 0 || pair_of(at[0]) != pair_of(at[1])) {
      throw std::invalid_argument(
          "unsupported site: an edge threads the vertex at unpaired slots");
    }
  }

  std::map<int, const ChartEdge*> edges;
  for (const ChartEdge& e : out.edges) edges.emplace(e.id, &e);

  // Check every nested pair fuses coherently before touching anything.
  for (int t = 0; t + 1 < m; ++t) {
    const EdgeEnd near = vertex.rotation[(k + 1 + t) % m2];
    const EdgeEnd far = vertex.rotation[((k - 1 - t) % m2 + m2) % m2];
    if (edges.at(near.edge)->label != edges.at(far.edge)->label) {
      if (kind == ChartMoveKind::C4) {
        throw std::invalid_argument(
            "the capped edge must be one of the two repeated-label edges");
      }
      throw std::invalid_argument("local pattern mismatch: fused labels differ");
    }
    if (near.end == far.end) {
      if (kind == ChartMoveKind::C3) {
        throw std::invalid_argument(
            "the capped edge is the middle of an orientation run");
      }
      throw std::invalid_argument(
          "local pattern mismatch: fused ends point the same way");
    }
  }

  ChartSite reverse;
  const EdgeEnd anchor = vertex.rotation[(k + m) % m2];
  reverse.edge = anchor.edge;
  reverse.new_vertex = vertex.id;
  reverse.new_edge = capped.id;
  reverse.cap_label = capped.label;
  reverse.phase = k;
  reverse.black = black_id;

  std::set<int> dropped_edges = {capped.id};
  for (int t = 0; t + 1 < m; ++t) {
    const EdgeEnd near = vertex.rotation[(k + 1 + t) % m2];
    const EdgeEnd far = vertex.rotation[((k - 1 - t) % m2 + m2) % m2];
    reverse.threads.push_back({near, far.edge});
    if (near.edge == far.edge) {
      // Both ends were on the vertex: the fused edge closes into a hoop.
      ChartEdge& fused = out.edges[edge_index(out, near.edge)];
      fused.from.reset();
      fused.to.reset();
      continue;
    }
    dropped_edges.insert(far.edge);
    ChartEdge& fused = out.edges[edge_index(out, near.edge)];
    ChartEdge& gone = out.edges[edge_index(out, far.edge)];
    const int far_vertex = *endpoint(gone, 1 - far.end);
    endpoint(fused, near.end) = far_vertex;
    // The surviving end takes the deleted edge's slot at its far vertex.
    ChartVertex& fv = out.vertices[vertex_index(out, far_vertex)];
    for (EdgeEnd& ee : fv.rotation) {
      if (ee == EdgeEnd{gone.id, 1 - far.end}) ee = near;
    }
  }

  // Re-anchor the opposite edge onto the black vertex.
  ChartEdge& kept = out.edges[edge_index(out, anchor.edge)];
  endpoint(kept, anchor.end) = black_id;
  out.vertices[vertex_index(out, black_id)].rotation = {anchor};

  out.vertices.erase(out.vertices.begin() + vertex_index(out, interior_id));
  std::erase_if(out.edges, [&dropped_edges](const ChartEdge& e) {
    return dropped_edges.count(e.id) > 0;
  });

  const ChartReport report = validate_chart(out);
  if (!report.ok) {
    throw std::invalid_argument("local move result invalid: " +
                                report.problems.front());
  }
  return {std::move(out), std::move(reverse)};
}

LocalMoveResult inverse_local_move(const Chart& chart, ChartMoveKind kind,
                                   const ChartSite& site) {
  Chart out = chart;
  const Genus genus = out.genus();
  const int m = interior_half_degree(kind, genus);
  const int m2 = 2 * m;
  if (static_cast<int>(site.threads.size()) != m - 1) {
    throw std::invalid_argument("inverse site needs " + std::to_string(m - 1) +
                                " threads");
  }
  if (site.phase < 0 || site.phase >= m2) {
    throw std::invalid_argument("inverse site phase out of range");
  }
  const int fi = edge_index(out, site.edge);
  if (fi < 0) throw std::invalid_argument("site edge not found");
  if (vertex_index(out, site.new_vertex) >= 0 ||
      edge_index(out, site.new_edge) >= 0) {
    throw std::invalid_argument("inverse site ids already in use");
  }

  int black_id = -1;
  for (const std::optional<int>& at :
       {out.edges[fi].from, out.edges[fi].to}) {
    if (!at) continue;
    const int vi = vertex_index(out, *at);
    if (vi < 0 || out.vertices[vi].kind != VertexKind::Black) continue;
    if (site.black >= 0 && *at != site.black) continue;
    black_id = *at;
  }
  if (black_id < 0) {
    throw std::invalid_argument("inverse site edge must end at a black vertex");
  }
  // y is the parity of the anchored end held by the black vertex.
  const int y = out.edges[fi].from && *out.edges[fi].from == black_id ? 0 : 1;

  const int k = site.phase;
  std::vector<EdgeEnd> rotation(m2);
  rotation[k] = EdgeEnd{site.new_edge, 1 - y};
  rotation[(k + m) % m2] = EdgeEnd{site.edge, y};

  for (int t = 0; t + 1 < m; ++t) {
    const ChartThread& thread = site.threads[t];
    const int near_slot = (k + 1 + t) % m2;
    const int far_slot = ((k - 1 - t) % m2 + m2) % m2;
    const int pi = edge_index(out, thread.keep.edge);
    if (pi < 0) throw std::invalid_argument("thread edge not found");
    if (thread.keep.end != 0 && thread.keep.end != 1) {
      throw std::invalid_argument("thread end must be 0 or 1");
    }
    ChartEdge& p = out.edges[pi];
    if (thread.restored_edge == thread.keep.edge) {
      // Reopen a hoop onto the vertex.
      if (p.from || p.to) {
        throw std::invalid_argument("thread edge is not a hoop");
      }
      endpoint(p, thread.keep.end) = site.new_vertex;
      endpoint(p, 1 - thread.keep.end) = site.new_vertex;
      rotation[near_slot] = EdgeEnd{p.id, thread.keep.end};
      rotation[far_slot] = EdgeEnd{p.id, 1 - thread.keep.end};
      continue;
    }
    if (edge_index(out, thread.restored_edge) >= 0) {
      throw std::invalid_argument("inverse site ids already in use");
    }
    if (!endpoint(p, thread.keep.end)) {
      throw std::invalid_argument("thread edge end is not attached");
    }
    const int far_vertex = *endpoint(p, thread.keep.end);
    ChartEdge restored{thread.restored_edge, p.label, std::nullopt,
                       std::nullopt};
    endpoint(restored, thread.keep.end) = far_vertex;
    endpoint(restored, 1 - thread.keep.end) = site.new_vertex;
    ChartVertex& fv = out.vertices[vertex_index(out, far_vertex)];
    bool replaced = false;
    for (EdgeEnd& ee : fv.rotation) {
      if (ee == EdgeEnd{p.id, thread.keep.end} && !replaced) {
        ee = EdgeEnd{restored.id, thread.keep.end};
        replaced = true;
      }
    }
    if (!replaced) {
      throw std::invalid_argument("thread edge end not found in any rotation");
    }
    endpoint(p, thread.keep.end) = site.new_vertex;
    rotation[near_slot] = EdgeEnd{p.id, thread.keep.end};
    rotation[far_slot] = EdgeEnd{restored.id, 1 - thread.keep.end};
    auto where = std::lower_bound(
        out.edges.begin(), out.edges.end(), restored.id,
        [](const ChartEdge& e, int id) { return e.id < id; });
    out.edges.insert(where, std::move(restored));
  }

  // The new capped edge keeps the black vertex's census class.
  ChartEdge cap{site.new_edge, site.cap_label, std::nullopt, std::nullopt};
  endpoint(cap, y) = black_id;
  endpoint(cap, 1 - y) = site.new_vertex;
  out.vertices[vertex_index(out, black_id)].rotation = {EdgeEnd{cap.id, y}};
  // Re-anchor the formerly capped edge onto the new vertex.
  ChartEdge& f0 = out.edges[edge_index(out, site.edge)];
  endpoint(f0, y) = site.new_vertex;

  auto ewhere = std::lower_bound(
      out.edges.begin(), out.edges.end(), cap.id,
      [](const ChartEdge& e, int id) { return e.id < id; });
  out.edges.insert(ewhere, std::move(cap));

  ChartVertex fresh{site.new_vertex, interior_kind(kind), std::move(rotation)};
  auto vwhere = std::lower_bound(
      out.vertices.begin(), out.vertices.end(), fresh.id,
      [](const ChartVertex& v, int id) { return v.id < id; });
  out.vertices.insert(vwhere, std::move(fresh));

  const ChartReport report = validate_chart(out);
  if (!report.ok) {
    throw std::invalid_argument("inverse site does not bound a disk: " +
                                report.problems.front());
  }
  ChartSite reverse;
  reverse.edge = site.new_edge;
  return {std::move(out), std::move(reverse)};
}

}  // namespace

LocalMoveResult local_move(const Chart& chart, ChartMoveKind kind,
                           const ChartSite& site) {
  switch (kind) {
    case ChartMoveKind::C2:
    case ChartMoveKind::C3:
    case ChartMoveKind::C4:
      return forward_local_move(chart, kind, site);
    default:
      return inverse_local_move(chart, kind, site);
  }
}

namespace {

std::string letter_text(const Letter& label) {
  return (label.kind == LetterKind::Zeta ? "z" : "s") +
         std::to_string(label.index);
}

std::string dot_shape(VertexKind kind) {
  switch (kind) {
    case VertexKind::Black:
      return "point";
    case VertexKind::Crossing:
      return "diamond";
    case VertexKind::Braiding:
      return "hexagon";
    case VertexKind::NucleonOut:
    case VertexKind::NucleonIn:
      return "doublecircle";
    case VertexKind::BigNucleonOut:
    case VertexKind::BigNucleonIn:
      return "doubleoctagon";
    case VertexKind::Transition:
      return "box";
    case VertexKind::SigmaBurstOut:
      return "house";
    case VertexKind::SigmaBurstIn:
      return "invhouse";
  }
  return "ellipse";
}

}  // namespace

std::string to_dot(const Chart& chart) {
  std::ostringstream out;
  out << "digraph chart {\n";
  out << "  rankdir=BT;\n";
  for (const ChartVertex& v : chart.vertices) {
    out << "  v" << v.id << " [shape=" << dot_shape(v.kind) << ", label=\""
        << to_string(v.kind) << " " << v.id << "\"];\n";
  }
  for (const ChartEdge& e : chart.edges) {
    if (e.from && e.to) {
      out << "  v" << *e.from << " -> v" << *e.to << " [label=\""
          << letter_text(e.label) << "\"];\n";
    } else {
      out << "  hoop" << e.id << " [shape=circle, label=\"hoop "
          << letter_text(e.label) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_string(VertexKind kind) {
  switch (kind) {
    case VertexKind::Black:
      return "black";
    case VertexKind::Crossing:
      return "crossing";
    case VertexKind::Braiding:
      return "braiding";
    case VertexKind::NucleonOut:
      return "nucleon-out";
    case VertexKind::NucleonIn:
      return "nucleon-in";
    case VertexKind::BigNucleonOut:
      return "big-nucleon-out";
    case VertexKind::BigNucleonIn:
      return "big-nucleon-in";
    case VertexKind::Transition:
      return "transition";
    case VertexKind::SigmaBurstOut:
      return "sigma-burst-out";
    case VertexKind::SigmaBurstIn:
      return "sigma-burst-in";
  }
  return "unknown";
}

std::string to_string(ChartMoveKind kind) {
  switch (kind) {
    case ChartMoveKind::C2:
      return "C2";
    case ChartMoveKind::C3:
      return "C3";
    case ChartMoveKind::C4:
      return "C4";
    case ChartMoveKind::C2inv:
      return "C2inv";
    case ChartMoveKind::C3inv:
      return "C3inv";
    case ChartMoveKind::C4inv:
      return "C4inv";
  }
  return "unknown";
}

}  // namespace hlf
