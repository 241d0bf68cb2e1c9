#include "hlf/reps.hpp"

#include <queue>

namespace hlf {

Perm Perm::identity(int n) {
  Perm p;
  p.image.resize(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) p.image[static_cast<std::size_t>(k)] = k;
  return p;
}

Perm Perm::then(const Perm& next) const {
  if (degree() != next.degree()) throw std::invalid_argument("permutation degree mismatch");
  Perm out;
  out.image.resize(image.size());
  for (int p = 0; p < degree(); ++p) out.image[static_cast<std::size_t>(p)] = next.apply(apply(p));
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.image.resize(image.size());
  for (int p = 0; p < degree(); ++p) out.image[static_cast<std::size_t>(apply(p))] = p;
  return out;
}

bool Perm::is_identity() const {
  for (int p = 0; p < degree(); ++p)
    if (apply(p) != p) return false;
  return true;
}

Perm adjacent_transposition(int n, int i) {
  if (i < 1 || i + 1 > n) throw std::invalid_argument("transposition index out of range");
  Perm p = Perm::identity(n);
  std::swap(p.image[static_cast<std::size_t>(i - 1)], p.image[static_cast<std::size_t>(i)]);
  return p;
}

Perm perm_image(const Genus& genus, const Word& word) {
  validate_word(genus, word);
  const int n = genus.point_count();
  Perm acc = Perm::identity(n);
  for (const SignedLetter& l : word) {
    if (l.base.kind == LetterKind::Sigma) continue;  // separating twists fix the points
    // A transposition is its own inverse, so the sign does not matter here.
    acc = acc.then(adjacent_transposition(n, l.base.index));
  }
  return acc;
}

bool generates_transitive_action(int n, const std::vector<Perm>& gens) {
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const int p = frontier.front();
    frontier.pop();
    for (const Perm& gen : gens) {
      if (gen.degree() != n) throw std::invalid_argument("permutation degree mismatch");
      // Orbits of the generated subgroup are the components of the undirected
      // graph p -- gen(p), so following each generator one way suffices.
      for (int q : {gen.apply(p), gen.inverse().apply(p)}) {
        if (!seen[static_cast<std::size_t>(q)]) {
          seen[static_cast<std::size_t>(q)] = 1;
          ++reached;
          frontier.push(q);
        }
      }
    }
  }
  return reached == n;
}

IntMat IntMat::identity(int size) {
  IntMat m(size);
  for (int k = 0; k < size; ++k) m.at(k, k) = 1;
  return m;
}

IntMat IntMat::mul(const IntMat& rhs) const {
  if (n != rhs.n) throw std::invalid_argument("matrix size mismatch");
  IntMat out(n);
  for (int r = 0; r < n; ++r)
    for (int k = 0; k < n; ++k) {
      const BigInt& x = at(r, k);
      if (x == 0) continue;
      for (int c = 0; c < n; ++c) out.at(r, c) += x * rhs.at(k, c);
    }
  return out;
}

IntMat IntMat::transpose() const {
  IntMat out(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.at(c, r) = at(r, c);
  return out;
}

bool IntMat::is_identity() const {
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

bool IntMat::is_negated_identity() const {
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (at(r, c) != (r == c ? -1 : 0)) return false;
  return true;
}

IntMat symplectic_form(const Genus& genus) {
  IntMat j(genus.homology_rank());
  for (int k = 0; k < genus.g; ++k) {
    j.at(2 * k, 2 * k + 1) = 1;
    j.at(2 * k + 1, 2 * k) = -1;
  }
  return j;
}

BigInt pairing(const IntMat& J, const IntVec& u, const IntVec& v) {
  if (static_cast<int>(u.size()) != J.n || static_cast<int>(v.size()) != J.n)
    throw std::invalid_argument("vector size mismatch");
  BigInt acc = 0;
  for (int r = 0; r < J.n; ++r)
    for (int c = 0; c < J.n; ++c) acc += u[static_cast<std::size_t>(r)] * J.at(r, c) * v[static_cast<std::size_t>(c)];
  return acc;
}

IntVec generator_class(const Genus& genus, const Letter& letter) {
  validate_letter(genus, letter);
  IntVec x(static_cast<std::size_t>(genus.homology_rank()), 0);
  if (letter.kind == LetterKind::Sigma) return x;  // null-homologous
  const int i = letter.index;
  // Basis order (a_1, b_1, .., a_g, b_g): a_k at 2(k-1), b_k at 2(k-1)+1.
  auto a = [&](int k) -> BigInt& { return x[static_cast<std::size_t>(2 * (k - 1))]; };
  auto b = [&](int k) -> BigInt& { return x[static_cast<std::size_t>(2 * (k - 1) + 1)]; };
  if (i == 2 * genus.g + 1) {
    for (int k = 1; k <= genus.g; ++k) b(k) = 1;
  } else if (i % 2 == 1) {
    b((i + 1) / 2) = 1;
  } else if (i == 2 * genus.g) {
    a(genus.g) = 1;
  } else {
    a(i / 2) = 1;
    a(i / 2 + 1) = -1;
  }
  return x;
}

IntMat transvection(const Genus& genus, const Letter& letter, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("transvection sign must be +1 or -1");
  const IntVec x = generator_class(genus, letter);
  const IntMat J = symplectic_form(genus);
  const int n = J.n;
  // <e_c, x> = (J x)_c.
  IntVec jx(static_cast<std::size_t>(n), 0);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) jx[static_cast<std::size_t>(r)] += J.at(r, c) * x[static_cast<std::size_t>(c)];
  IntMat m = IntMat::identity(n);
  // v -> v + sign * <v, x> x; the sign -1 case is the exact inverse because
  // the difference from the identity squares to zero.
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) += sign * jx[static_cast<std::size_t>(c)] * x[static_cast<std::size_t>(r)];
  return m;
}

IntMat symp_image(const Genus& genus, const Word& word) {
  validate_word(genus, word);
  IntMat acc = IntMat::identity(genus.homology_rank());
  // Column-vector convention: the image of "u then v" is M(v) M(u).
  for (const SignedLetter& l : word) acc = transvection(genus, l.base, l.sign).mul(acc);
  return acc;
}

bool is_symplectic(const Genus& genus, const IntMat& m) {
  const IntMat J = symplectic_form(genus);
  if (m.n != J.n) return false;
  return m.transpose().mul(J).mul(m) == J;
}

namespace {

RelationCheck check_pair(const Genus& genus, std::string name, const Word& u, const Word& v) {
  RelationCheck out;
  out.name = std::move(name);
  out.perm_ok = perm_image(genus, u) == perm_image(genus, v);
  out.symp_ok = symp_image(genus, u) == symp_image(genus, v);
  return out;
}

}  // namespace

std::vector<RelationCheck> check_relations(const Genus& genus) {
  std::vector<RelationCheck> out;
  const int nz = genus.zeta_count();
  // Distant zeta twists commute.
  for (int i = 1; i <= nz; ++i)
    for (int j = i + 2; j <= nz; ++j)
      out.push_back(check_pair(genus, "commute(z" + std::to_string(i) + ",z" + std::to_string(j) + ")",
                               Word{pos(zeta(i)), pos(zeta(j))}, Word{pos(zeta(j)), pos(zeta(i))}));
  // Adjacent zeta twists braid.
  for (int i = 1; i + 1 <= nz; ++i)
    out.push_back(check_pair(genus, "braid(z" + std::to_string(i) + ",z" + std::to_string(i + 1) + ")",
                             Word{pos(zeta(i)), pos(zeta(i + 1)), pos(zeta(i))},
                             Word{pos(zeta(i + 1)), pos(zeta(i)), pos(zeta(i + 1))}));
  // Each separating twist equals its chain word.
  for (int h = 1; h <= genus.sigma_count(); ++h)
    out.push_back(check_pair(genus, "chain(s" + std::to_string(h) + ")", Word{pos(sigma(h))},
                             chain_word(genus, h)));
  // The involution squares to the identity.
  const Word iota = involution_word(genus);
  out.push_back(check_pair(genus, "involution^2", concat(iota, iota), Word{}));
  // The full ascending run has order 2g+2.
  Word power;
  for (int rep = 0; rep < genus.point_count(); ++rep) power = concat(power, ascending_run(genus));
  out.push_back(check_pair(genus, "ascending^(2g+2)", power, Word{}));
  // The involution is central: it commutes with every generator.
  for (int i = 1; i <= nz; ++i)
    out.push_back(check_pair(genus, "central(iota,z" + std::to_string(i) + ")",
                             concat(iota, Word{pos(zeta(i))}), concat(Word{pos(zeta(i))}, iota)));
  for (int h = 1; h <= genus.sigma_count(); ++h)
    out.push_back(check_pair(genus, "central(iota,s" + std::to_string(h) + ")",
                             concat(iota, Word{pos(sigma(h))}), concat(Word{pos(sigma(h))}, iota)));
  return out;
}

bool all_relations_hold(const std::vector<RelationCheck>& checks) {
  for (const RelationCheck& c : checks)
    if (!c.perm_ok || !c.symp_ok) return false;
  return true;
}

}  // namespace hlf
