#include "steinberg/polyalg/order.hpp"

namespace steinberg::polyalg {

namespace {

// Compare two exponent ranges [lo, hi) by grevlex: higher total degree wins;
// on ties, the monomial whose exponent is smaller at the last differing
// position (scanning from the least significant variable backwards) wins.
int grevlex_range(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
  long da = 0, db = 0;
  for (size_t i = lo; i < hi; ++i) {
    da += a.e[i];
    db += b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = hi; i > lo; --i) {
    const uint32_t xa = a.e[i - 1], xb = b.e[i - 1];
    if (xa != xb) return xa > xb ? -1 : 1;
  }
  return 0;
}

int lex_range(const Monomial& a, const Monomial& b, size_t lo, size_t hi) {
  for (size_t i = lo; i < hi; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const size_t n = a.arity();
  switch (kind_) {
    case Kind::Lex:
      return lex_range(a, b, 0, n);
    case Kind::Grevlex:
      return grevlex_range(a, b, 0, n);
    case Kind::Block: {
      const int c = grevlex_range(a, b, 0, split_);
      if (c) return c;
      return grevlex_range(a, b, split_, n);
    }
  }
  return 0;
}

std::string MonomialOrder::key() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Block:
      return "block:" + std::to_string(split_);
  }
  return "?";
}

}  // namespace steinberg::polyalg
