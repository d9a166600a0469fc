#pragma once

#include <map>
#include <string>
#include <vector>

#include "steinberg/weyl.hpp"

namespace steinberg::cato {

using weyl::WeylElem;

enum class Basis { simple, verma };

// Element of the Grothendieck group of the principal block for a product of
// gl3 factors: integer coefficients over the simple basis {L(w.lambda)} or
// the Verma basis {M(w.lambda)}, tagged with which basis is in use. Zero
// coefficients are never stored.
struct KClass {
  Basis basis = Basis::simple;
  std::map<WeylElem, long> coeff;

  long at(const WeylElem& w) const;
  long total() const;  // sum of all coefficients
  bool operator==(const KClass&) const = default;
  std::string to_string() const;
};

// Basis changes. Multiplicities [M(w) : L(v)] are 1 exactly when v >= w
// componentwise (all Jordan–Hölder multiplicities of Vermas are 1 for gl3
// factors), a unitriangular system inverted exactly over the integers.
KClass to_simple_basis(const KClass& c);
KClass to_verma_basis(const KClass& c);

// Integer combination of cycle symbols indexed by W; the basis symbol keeps
// the two geometric bases ("Xqtri" and "Z") apart. Sheaf classes have
// nonnegative coefficients.
struct CycleClass {
  std::string basis_symbol;
  std::map<WeylElem, long> coeff;
  bool operator==(const CycleClass&) const = default;
  std::string to_string() const;
};

// A refinement position: the per-factor Weyl parameter w_xR and the generic
// multiplicity m >= 1.
struct RefinementPosition {
  WeylElem w_xR;
  long m = 1;

  // Factor words comma-separated, e.g. "1,s1,w0".
  static RefinementPosition parse(const std::string& words, long m = 1, int n = 3);
};

// Jordan–Hölder class of the Verma M(w.lambda): coefficient 1 on every
// w' >= w componentwise, in the simple basis. Factors must have n = 3.
KClass verma_jh(const WeylElem& w);

// Jordan–Hölder class of N(lambda) = M(lambda)/(M(s1s2.lambda)+M(s2s1.lambda))
// for a single gl3 factor: {e, s1, s2}, each once.
KClass n_lambda_jh();

// Decomposition of S(lambda, w_R) = boxtensor of per-factor sums: for a
// factor with w_R != 1 the simples L(w.lambda) over w <= w_R*w0; for a
// critical factor (w_R = 1) the simples with Coxeter length != 1 plus
// N(lambda). Returns the class in the simple basis together with the list of
// indecomposable summand labels (per-factor tokens joined by '*').
struct SummandDecomposition {
  KClass kclass;
  std::vector<std::string> summands;
  size_t count() const { return summands.size(); }
};
SummandDecomposition s_lambda_wR(const RefinementPosition& pos);

// Does the patched sheaf attached to L(w.lambda) survive at the position?
// True iff w_xR <= w*w0 componentwise in Bruhat order.
bool support_nonzero(const WeylElem& w, const RefinementPosition& pos);

// Cycle classes of the patched sheaves: m.[X^{qtri, w*w0}] for the Verma,
// m.[Z_{w*w0}] for the simple (a single term: the off-diagonal coefficients
// vanish for gl3 products). ZeroSheafError when the support is empty.
CycleClass cycle_of_verma(const WeylElem& w, const RefinementPosition& pos);
CycleClass cycle_of_simple(const WeylElem& w, const RefinementPosition& pos);

// 2^r with r = #{factors of w_xR equal to the identity}: the ratio between
// the overconvergent and classical eigenspace dimensions at the position.
long classical_dim_ratio(const RefinementPosition& pos);

// 2^{i2} * m, the Hom-space dimension over a critical set of size i2, and
// the inclusion-exclusion reduction 2^{i2}m - sum_{0<j<=i2} (-1)^{j+1}
// C(i2,j) 2^{i2-j} m, which must collapse to m.
long hom_dim_count(unsigned i2_size, long m);
long inclusion_exclusion_check(unsigned i2_size, long m);

}  // namespace steinberg::cato
