#include "braidrep/braid.hpp"

#include "braidrep/errors.hpp"
#include "braidrep/linalg.hpp"
#include "braidrep/zoo.hpp"

#include <charconv>
#include <sstream>

namespace braidrep {

BraidWord::BraidWord(std::size_t n, std::vector<BraidLetter> letters) : n_(n), letters_(std::move(letters)) {
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index + 1 > n_)
      throw InputError("braid letter s" + std::to_string(l.index) + " out of range for B_" + std::to_string(n_));
    if (l.exponent != 1 && l.exponent != -1) throw InputError("braid letter exponent must be +1 or -1");
  }
}

BraidWord BraidWord::parse(std::size_t n, std::string_view text) {
  std::vector<BraidLetter> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    std::string_view t = tok;
    if (t.size() < 2 || t.front() != 's') throw ParseError("bad braid letter '" + tok + "'");
    t.remove_prefix(1);
    int exponent = 1;
    if (const auto hat = t.find('^'); hat != std::string_view::npos) {
      if (t.substr(hat) != "^-1") throw ParseError("bad exponent in braid letter '" + tok + "'");
      exponent = -1;
      t = t.substr(0, hat);
    }
    std::size_t idx = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), idx);
    if (ec != std::errc{} || ptr != t.data() + t.size()) throw ParseError("bad generator index in '" + tok + "'");
    letters.push_back({idx, exponent});
  }
  return BraidWord(n, std::move(letters));
}

std::string BraidWord::to_string() const {
  std::string out;
  for (const auto& l : letters_) {
    if (!out.empty()) out += ' ';
    out += 's' + std::to_string(l.index);
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

RelationReport verify_braid_relations(const Representation& rep) {
  RelationReport report;
  const std::size_t n = rep.strands();
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const Matrix& a = rep.generator(i);
    const Matrix& b = rep.generator(i + 1);
    if (a * b * a != b * a * b) {
      report.braid_relations_ok = false;
      report.failures.push_back({"braid", i, i + 1});
    }
  }
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      const Matrix& a = rep.generator(i);
      const Matrix& b = rep.generator(j);
      if (a * b != b * a) {
        report.far_commutation_ok = false;
        report.failures.push_back({"far-commutation", i, j});
      }
    }
  }
  return report;
}

Matrix tau_image(const Representation& rep) { return rep.tau(); }

Matrix sigma0_image(const Representation& rep) { return rep.extended_generator(0); }

bool verify_cyclic_conjugation(const Representation& rep) {
  const std::size_t n = rep.strands();
  const Matrix& t = rep.tau();
  const Matrix& tinv = rep.tau_inverse();
  for (std::size_t i = 0; i < n; ++i) {
    if (t * deformation(rep, i) * tinv != deformation(rep, i + 1)) return false;
  }
  return true;
}

bool verify_deformed_relations(const Representation& rep) {
  const std::size_t n = rep.strands();
  std::vector<Matrix> a;
  a.reserve(n);
  for (std::size_t i = 0; i < n; ++i) a.push_back(deformation(rep, i));

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (are_neighbors(i, j, n)) continue;
      if (a[i] * a[j] != a[j] * a[i]) return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix& x = a[i];
    const Matrix& y = a[(i + 1) % n];
    if (x + x * x + x * y * x != y + y * y + y * x * y) return false;
  }
  return true;
}

Matrix evaluate_word(const Representation& rep, const BraidWord& w) {
  if (w.strands() != rep.strands())
    throw InputError("word in B_" + std::to_string(w.strands()) + " evaluated on a representation of B_" +
                     std::to_string(rep.strands()));
  Matrix acc = Matrix::identity(rep.dim());
  for (const auto& l : w.letters()) {
    const Matrix& g = rep.generator(l.index);
    acc = acc * (l.exponent > 0 ? g : inverse(g));
  }
  return acc;
}

std::size_t circular_distance(std::size_t i, std::size_t j, std::size_t n) {
  i %= n;
  j %= n;
  const std::size_t d = i > j ? i - j : j - i;
  return std::min(d, n - d);
}

}  // namespace braidrep
