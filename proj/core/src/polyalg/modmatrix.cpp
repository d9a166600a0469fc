#include "steinberg/polyalg/modmatrix.hpp"

#include "steinberg/errors.hpp"
#include "steinberg/polyalg/ideal.hpp"

namespace steinberg::polyalg {

ModMatrix::ModMatrix(RingPtr ring, size_t rows, size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols), e_(rows * cols, Poly(ring_)) {}

ModMatrix ModMatrix::from_strings(const RingPtr& ring,
                                  const std::vector<std::vector<std::string>>& entries) {
  const size_t rows = entries.size();
  const size_t cols = rows ? entries.front().size() : 0;
  ModMatrix m(ring, rows, cols);
  for (size_t r = 0; r < rows; ++r) {
    if (entries[r].size() != cols) throw ShapeMismatchError("ragged matrix literal");
    for (size_t c = 0; c < cols; ++c) m.at(r, c) = parse_poly(ring, entries[r][c]);
  }
  return m;
}

std::vector<Poly> ModMatrix::column(size_t c) const {
  std::vector<Poly> v;
  v.reserve(rows_);
  for (size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

void ModMatrix::set_column(size_t c, std::span<const Poly> v) {
  for (size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

ModMatrix ModMatrix::mul(const ModMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw ShapeMismatchError("matrix product shape mismatch");
  ModMatrix out(ring_, rows_, rhs.cols_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < rhs.cols_; ++c) {
      Poly acc(ring_);
      for (size_t k = 0; k < cols_; ++k) acc = acc + at(r, k) * rhs.at(k, c);
      out.at(r, c) = acc;
    }
  return out;
}

ModMatrix ModMatrix::transpose() const {
  ModMatrix out(ring_, cols_, rows_);
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  return out;
}

bool ModMatrix::is_zero() const {
  for (const Poly& p : e_)
    if (!p.is_zero()) return false;
  return true;
}

ModMatrix ModMatrix::drop(const std::vector<size_t>& rows_gone,
                          const std::vector<size_t>& cols_gone) const {
  std::vector<bool> rg(rows_, false), cg(cols_, false);
  for (size_t r : rows_gone) rg.at(r) = true;
  for (size_t c : cols_gone) cg.at(c) = true;
  size_t nr = 0, nc = 0;
  for (size_t r = 0; r < rows_; ++r)
    if (!rg[r]) ++nr;
  for (size_t c = 0; c < cols_; ++c)
    if (!cg[c]) ++nc;
  ModMatrix out(ring_, nr, nc);
  size_t rr = 0;
  for (size_t r = 0; r < rows_; ++r) {
    if (rg[r]) continue;
    size_t cc = 0;
    for (size_t c = 0; c < cols_; ++c) {
      if (cg[c]) continue;
      out.at(rr, cc) = at(r, c);
      ++cc;
    }
    ++rr;
  }
  return out;
}

std::vector<std::vector<Rat>> ModMatrix::eval(std::span<const Rat> point) const {
  std::vector<std::vector<Rat>> out(rows_, std::vector<Rat>(cols_, Rat(0)));
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) out[r][c] = at(r, c).eval(point);
  return out;
}

std::vector<std::vector<std::string>> ModMatrix::to_strings() const {
  std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_));
  for (size_t r = 0; r < rows_; ++r)
    for (size_t c = 0; c < cols_; ++c) out[r][c] = at(r, c).to_string();
  return out;
}

long Presentation::fiber_dim(std::span<const Rat> point) const {
  return static_cast<long>(rank) - static_cast<long>(rat_matrix_rank(relations.eval(point)));
}

}  // namespace steinberg::polyalg
