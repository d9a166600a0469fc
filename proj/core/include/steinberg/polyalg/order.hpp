#pragma once

#include <cstddef>
#include <string>

#include "steinberg/polyalg/monomial.hpp"

namespace steinberg::polyalg {

// Monomial orders. Variable 0 (first listed in the ring) is always the most
// significant. block(k) is the elimination order for the first k variables:
// grevlex on the leading block, ties broken by grevlex on the rest.
class MonomialOrder {
public:
  enum class Kind { Lex, Grevlex, Block };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static MonomialOrder block(size_t split) { return MonomialOrder(Kind::Block, split); }

  Kind kind() const { return kind_; }
  size_t split() const { return split_; }

  // Negative / zero / positive for a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string key() const;  // stable cache key
  bool operator==(const MonomialOrder&) const = default;

private:
  MonomialOrder(Kind k, size_t s) : kind_(k), split_(s) {}
  Kind kind_;
  size_t split_;
};

}  // namespace steinberg::polyalg
