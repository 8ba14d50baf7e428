#pragma once

#include "braidrep/matrix.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace braidrep {

/// Candidate representation of the braid group B_n: the images of the
/// standard generators sigma_1..sigma_{n-1} as invertible r x r matrices.
///
/// Construction only checks shapes and invertibility; whether the braid
/// relations hold is the business of verify_braid_relations. The
/// redundant generator sigma_0 = tau sigma_{n-1} tau^{-1} is never
/// stored; it is derived on first use and shared between copies.
class Representation {
 public:
  Representation(std::size_t n, std::vector<Matrix> generators, std::string label = {});

  std::size_t strands() const { return n_; }
  std::size_t dim() const { return r_; }
  const std::string& label() const { return label_; }

  /// Image of sigma_i for i in 1..n-1.
  const Matrix& generator(std::size_t i) const;
  const std::vector<Matrix>& generators() const { return generators_; }

  /// Image of sigma_{i mod n}; index 0 is the derived sigma_0.
  const Matrix& extended_generator(std::size_t i) const;

  /// rho(tau) = rho(sigma_1) ... rho(sigma_{n-1}).
  const Matrix& tau() const;
  const Matrix& tau_inverse() const;

  Representation with_label(std::string label) const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.n_ == b.n_ && a.generators_ == b.generators_;
  }

 private:
  struct Derived;
  const Derived& derived() const;

  std::size_t n_;
  std::size_t r_;
  std::vector<Matrix> generators_;
  std::string label_;
  std::shared_ptr<Derived> derived_;
};

}  // namespace braidrep
