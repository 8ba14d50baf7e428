#include "braidrep/representation.hpp"

#include "braidrep/errors.hpp"
#include "braidrep/linalg.hpp"

#include <mutex>

namespace braidrep {

struct Representation::Derived {
  std::once_flag once;
  Matrix tau;
  Matrix tau_inverse;
  Matrix sigma0;
};

Representation::Representation(std::size_t n, std::vector<Matrix> generators, std::string label)
    : n_(n), r_(0), generators_(std::move(generators)), label_(std::move(label)),
      derived_(std::make_shared<Derived>()) {
  if (n_ < 2) throw InputError("braid group needs at least 2 strands");
  if (generators_.size() != n_ - 1)
    throw InputError("expected " + std::to_string(n_ - 1) + " generator images, got " +
                     std::to_string(generators_.size()));
  r_ = generators_.front().rows();
  if (r_ == 0) throw InputError("zero-dimensional representation");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const Matrix& g = generators_[i];
    if (g.rows() != r_ || g.cols() != r_)
      throw InputError("generator " + std::to_string(i + 1) + " is not " + std::to_string(r_) + "x" +
                       std::to_string(r_));
    if (!is_invertible(g)) throw InputError("generator " + std::to_string(i + 1) + " is not invertible");
  }
}

const Matrix& Representation::generator(std::size_t i) const {
  if (i < 1 || i >= n_) throw InputError("generator index " + std::to_string(i) + " out of range 1.." + std::to_string(n_ - 1));
  return generators_[i - 1];
}

const Representation::Derived& Representation::derived() const {
  std::call_once(derived_->once, [this] {
    Matrix t = Matrix::identity(r_);
    for (const auto& g : generators_) t = t * g;
    derived_->tau_inverse = inverse(t);
    derived_->sigma0 = t * generators_.back() * derived_->tau_inverse;
    derived_->tau = std::move(t);
  });
  return *derived_;
}

const Matrix& Representation::extended_generator(std::size_t i) const {
  const std::size_t k = i % n_;
  return k == 0 ? derived().sigma0 : generators_[k - 1];
}

const Matrix& Representation::tau() const { return derived().tau; }
const Matrix& Representation::tau_inverse() const { return derived().tau_inverse; }

Representation Representation::with_label(std::string label) const {
  Representation copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

}  // namespace braidrep
