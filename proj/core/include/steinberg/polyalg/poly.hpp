#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "steinberg/polyalg/monomial.hpp"
#include "steinberg/polyalg/order.hpp"
#include "steinberg/polyalg/rat.hpp"
#include "steinberg/polyalg/ring.hpp"

namespace steinberg::polyalg {

// Sparse multivariate polynomial over the rationals. Terms are stored in a
// structural map; semantic monomial orders are supplied per operation.
class Poly {
public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, const Rat& c);
  static Poly variable(RingPtr ring, size_t i, uint32_t k = 1);
  static Poly term(RingPtr ring, const Rat& c, Monomial m);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rat, MonomialStructLess>& terms() const { return terms_; }

  Rat coeff(const Monomial& m) const;
  Rat constant_term() const;
  long total_degree() const;  // -1 for the zero polynomial
  bool is_constant() const;

  void add_term(const Monomial& m, const Rat& c);  // accumulate, drop zeros

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rat& c) const;
  Poly mul_term(const Rat& c, const Monomial& m) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Leading data w.r.t. an order (poly must be nonzero).
  const Monomial& leading_monomial(const MonomialOrder& ord) const;
  Rat leading_coeff(const MonomialOrder& ord) const;
  Poly monic(const MonomialOrder& ord) const;

  Poly derivative(size_t var) const;
  Rat eval(std::span<const Rat> point) const;
  bool involves(size_t var) const;

  // Map into another ring by variable name; missing variables are an error.
  Poly mapped(const RingPtr& target) const;

  // Deterministic text form: terms in decreasing grevlex order,
  // "c*x^2*y - z + 1/2" style. parse() round-trips this exactly.
  std::string to_string() const;

private:
  RingPtr ring_;
  std::map<Monomial, Rat, MonomialStructLess> terms_;
};

// Grammar: poly := ['-'] term (('+'|'-') term)*;
//          term := coef ('*' factor)* | factor ('*' factor)*;
//          factor := var ['^' uint]; coef := int ['/' uint].
// Whitespace around operators is accepted; the printer's output parses back
// bit-exactly.
Poly parse_poly(const RingPtr& ring, const std::string& text);

std::vector<Poly> parse_polys(const RingPtr& ring, const std::vector<std::string>& texts);
std::vector<std::string> polys_to_strings(std::span<const Poly> ps);

}  // namespace steinberg::polyalg
