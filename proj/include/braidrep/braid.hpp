#pragma once

#include "braidrep/representation.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace braidrep {

struct BraidLetter {
  std::size_t index;  // 1..n-1
  int exponent;       // +1 or -1
  friend bool operator==(const BraidLetter&, const BraidLetter&) = default;
};

class BraidWord {
 public:
  BraidWord(std::size_t n, std::vector<BraidLetter> letters = {});

  /// Whitespace-separated letters such as "s1 s2 s1^-1".
  static BraidWord parse(std::size_t n, std::string_view text);

  std::size_t strands() const { return n_; }
  const std::vector<BraidLetter>& letters() const { return letters_; }
  std::string to_string() const;

 private:
  std::size_t n_;
  std::vector<BraidLetter> letters_;
};

struct RelationFailure {
  std::string relation;  // "braid" or "far-commutation"
  std::size_t i;
  std::size_t j;
};

struct RelationReport {
  bool braid_relations_ok = true;
  bool far_commutation_ok = true;
  std::vector<RelationFailure> failures;

  bool ok() const { return braid_relations_ok && far_commutation_ok; }
};

/// Checks the defining relations of B_n on the generator images, exactly.
RelationReport verify_braid_relations(const Representation& rep);

/// T = rho(sigma_1) ... rho(sigma_{n-1}).
Matrix tau_image(const Representation& rep);

/// T rho(sigma_{n-1}) T^{-1}.
Matrix sigma0_image(const Representation& rep);

/// T A_i T^{-1} = A_{i+1} for every i mod n.
bool verify_cyclic_conjugation(const Representation& rep);

/// A_i A_j = A_j A_i for non-neighbours and
/// A_i + A_i^2 + A_i A_{i+1} A_i = A_{i+1} + A_{i+1}^2 + A_{i+1} A_i A_{i+1},
/// all indices mod n.
bool verify_deformed_relations(const Representation& rep);

Matrix evaluate_word(const Representation& rep, const BraidWord& w);

/// Circular distance between generator indices mod n.
std::size_t circular_distance(std::size_t i, std::size_t j, std::size_t n);
inline bool are_neighbors(std::size_t i, std::size_t j, std::size_t n) { return circular_distance(i, j, n) == 1; }

}  // namespace braidrep
