#include "hlf/word.hpp"

namespace hlf {

void validate_letter(const Genus& genus, const Letter& letter) {
  if (letter.kind == LetterKind::Zeta) {
    if (letter.index < 1 || letter.index > genus.zeta_count())
      throw std::invalid_argument("zeta index " + std::to_string(letter.index) +
                                  " out of range for genus " + std::to_string(genus.g));
  } else {
    if (letter.index < 1 || letter.index > genus.sigma_count())
      throw std::invalid_argument("sigma index " + std::to_string(letter.index) +
                                  " out of range for genus " + std::to_string(genus.g));
  }
}

void validate_signed_letter(const Genus& genus, const SignedLetter& letter) {
  if (letter.sign != 1 && letter.sign != -1)
    throw std::invalid_argument("letter sign must be +1 or -1");
  validate_letter(genus, letter.base);
}

void validate_word(const Genus& genus, const Word& word) {
  for (const SignedLetter& l : word) validate_signed_letter(genus, l);
}

Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(SignedLetter{it->base, -it->sign});
  return out;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const SignedLetter& l : w) {
    if (!out.empty() && out.back().base == l.base && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word ascending_run(const Genus& genus) {
  Word out;
  for (int i = 1; i <= genus.zeta_count(); ++i) out.push_back(pos(zeta(i)));
  return out;
}

Word descending_run(const Genus& genus) {
  Word out;
  for (int i = genus.zeta_count(); i >= 1; --i) out.push_back(pos(zeta(i)));
  return out;
}

Word involution_word(const Genus& genus) {
  return concat(ascending_run(genus), descending_run(genus));
}

Word chain_word(const Genus& genus, int h) {
  if (h < 1 || h > genus.sigma_count())
    throw std::invalid_argument("sigma index " + std::to_string(h) +
                                " out of range for genus " + std::to_string(genus.g));
  Word out;
  out.reserve(static_cast<std::size_t>(4 * h) * (2 * h + 1));
  for (int rep = 0; rep < 4 * h + 2; ++rep)
    for (int i = 1; i <= 2 * h; ++i) out.push_back(pos(zeta(i)));
  return out;
}

std::string to_string(const SignedLetter& l) {
  std::string s = (l.base.kind == LetterKind::Zeta ? "z" : "s") + std::to_string(l.base.index);
  if (l.sign < 0) s += "^-1";
  return s;
}

std::string to_string(const Word& w) {
  if (w.empty()) return "(empty)";
  std::string s;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) s += ' ';
    s += to_string(w[k]);
  }
  return s;
}

}  // namespace hlf
