#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace steinberg::numtheory {

// Univariate integer polynomial, coefficient of x^i at index i, normalized
// (no stored leading zeros; the zero polynomial has an empty list).
struct ZPoly {
  std::vector<mpz_class> c;

  static ZPoly zero() { return {}; }
  static ZPoly from_coeffs(std::vector<long> low_to_high);
  // "x^3 - x^2 - 4x - 1", "2*x^2+3", constants allowed.
  static ZPoly parse(const std::string& text);

  long degree() const { return static_cast<long>(c.size()) - 1; }  // -1 for 0
  bool is_zero() const { return c.empty(); }
  const mpz_class& lead() const;
  void normalize();

  bool operator==(const ZPoly&) const = default;
  std::string to_string() const;
};

ZPoly derivative(const ZPoly& f);

bool is_prime(long p);

// Residue of x^p in F_p[x]/(f), square-and-multiply; coefficients in [0, p).
// BadPrimeError if p is not prime or divides the leading coefficient.
ZPoly frobenius_power(const ZPoly& f, long p);

// Naive oracle for the same residue: p-fold repeated multiplication by x.
ZPoly frobenius_power_naive(const ZPoly& f, long p);

// Exact split test: f mod p squarefree and x^p = x in F_p[x]/(f).
bool is_totally_split(const ZPoly& f, long p);

// A set of defining polynomials (one per field factor). Builtin specs carry
// the modulus their congruence search uses; each polynomial is certified
// irreducible over Q at construction time (rational-root test plus, for
// quartics, exclusion of integer quadratic splittings).
struct FieldSpec {
  std::string name;
  std::vector<ZPoly> polys;
  long default_modulus = 0;
  bool builtin = false;

  // Known names: Qi_cubic13, Qsqrtm3_zeta7, Qi_sqrt3_zeta7, Qsqrtm5_zeta9,
  // Qi_sqrt7_cubic43.
  static FieldSpec builtin_by_name(const std::string& name);
  static std::vector<std::string> builtin_names();
  // "x^2+1;x^3-x^2-4x-1" -> custom spec (polynomials verified irreducible).
  static FieldSpec from_polys(const std::string& semicolon_list);
};

// Certified irreducibility over Q for degree <= 4 monic-or-not inputs used
// here; InvalidSpecError when reducibility is detected or the degree is
// unsupported.
void verify_irreducible(const ZPoly& f);

struct SplitReport {
  long prime = 0;
  std::vector<std::string> verdicts;  // per factor: split | inert-pattern | ramified
  bool totally_split = false;
};
SplitReport is_totally_split_set(const FieldSpec& spec, long p);

// Minimal polynomial of alpha + k*beta by resultants, smallest shift
// k in 1..20 whose result is squarefree over Q; NoShiftFoundError otherwise.
ZPoly compositum_poly(const ZPoly& f, const ZPoly& g);

struct CongruenceReport {
  long modulus = 0;
  std::vector<long> classes;                 // residues, increasing
  std::map<long, std::vector<long>> witnesses;  // class -> first k split primes
  bool exact = false;          // certified by abelianity of the builtin spec
  bool subgroup_closed = false;  // classes closed under multiplication mod M
  long subgroup_index = 0;       // phi(M) / #classes when closed
};

// Residues r in (Z/M)^x whose first `primes_per_class` primes = r (mod M)
// are all totally split for every factor. Builtin specs are abelian over Q,
// making the congruence description exact; custom specs need
// allow_heuristic = true (NonAbelianSpecError otherwise) and come back with
// exact = false.
CongruenceReport congruence_classes(const FieldSpec& spec, long modulus,
                                    int primes_per_class = 3,
                                    bool allow_heuristic = false);

struct TWItem {
  std::string name;
  bool pass = false;
  std::string detail;
};
struct TWReport {
  long prime = 0;
  std::string role;  // "p" or "ell"
  std::vector<TWItem> items;
  bool overall = false;
};

// Prime-side constraints: role "p" checks p > 8, p - 1 > [E:Q] (forcing
// zeta_p outside E, with E the first factor), and total splitness; role
// "ell" checks splitness only.
TWReport taylor_wiles_prime_check(long p, const FieldSpec& spec, const std::string& role);

struct DensityCount {
  long split = 0;
  long tested = 0;  // unramified primes examined
};
// Totally-split counts over all primes < bound (ramified primes excluded).
DensityCount split_density(const ZPoly& f, long bound);

long euler_phi(long m);

}  // namespace steinberg::numtheory
