#pragma once

#include <span>
#include <string>
#include <vector>

#include "steinberg/polyalg/poly.hpp"

namespace steinberg::polyalg {

// Matrix over the polynomial ring, representing a map of free modules
// R^cols -> R^rows (columns are images of basis vectors).
class ModMatrix {
public:
  ModMatrix() = default;
  ModMatrix(RingPtr ring, size_t rows, size_t cols);
  static ModMatrix from_strings(const RingPtr& ring,
                                const std::vector<std::vector<std::string>>& entries);

  const RingPtr& ring() const { return ring_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  Poly& at(size_t r, size_t c) { return e_[r * cols_ + c]; }
  const Poly& at(size_t r, size_t c) const { return e_[r * cols_ + c]; }

  std::vector<Poly> column(size_t c) const;
  void set_column(size_t c, std::span<const Poly> v);

  ModMatrix mul(const ModMatrix& rhs) const;
  ModMatrix transpose() const;
  bool is_zero() const;

  // Matrix with the given rows / columns removed (order preserved).
  ModMatrix drop(const std::vector<size_t>& rows_gone,
                 const std::vector<size_t>& cols_gone) const;

  std::vector<std::vector<Rat>> eval(std::span<const Rat> point) const;
  std::vector<std::vector<std::string>> to_strings() const;

private:
  RingPtr ring_;
  size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> e_;
};

// Cokernel presentation of a module: R^cols --relations--> R^rank -> M -> 0.
struct Presentation {
  size_t rank = 0;        // number of module generators
  ModMatrix relations;    // rank x k matrix of relations

  // dim_k of the fiber M ⊗ k(point) = rank - rank(relations(point)).
  long fiber_dim(std::span<const Rat> point) const;
};

}  // namespace steinberg::polyalg
