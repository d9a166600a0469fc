#pragma once

#include <gmpxx.h>

#include <string>

namespace steinberg::polyalg {

// Exact rational scalar. GMP's canonicalization maintains the invariants
// (lowest terms, positive denominator).
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q);
Rat rat_parse(const std::string& s);

}  // namespace steinberg::polyalg
