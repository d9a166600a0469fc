#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace steinberg::weyl {

// One permutation in S_n, stored in one-line notation: perm()[i] is the image
// of i (0-based internally; the text encoding is 1-based as usual).
// Composition convention: (a * b)(i) = a(b(i)) — the right factor acts first.
class Perm {
public:
  Perm() = default;
  static Perm identity(int n);
  static Perm simple(int n, int i);  // s_i swaps i, i+1 (1-based i, 1 <= i < n)
  static Perm longest(int n);        // w0: i -> n+1-i
  explicit Perm(std::vector<int> one_line_0based);

  int n() const { return static_cast<int>(img_.size()); }
  int apply(int i) const { return img_[i]; }  // 0-based
  const std::vector<int>& images() const { return img_; }

  Perm operator*(const Perm& rhs) const;  // rhs first
  Perm inverse() const;
  bool operator==(const Perm&) const = default;
  bool operator<(const Perm& rhs) const { return img_ < rhs.img_; }
  bool is_identity() const;

  int coxeter_length() const;     // number of inversions
  int reflection_length() const;  // n - number of cycles
  int cycle_count() const;

  // Greedy reduced word (indices of simple reflections, 1-based).
  std::vector<int> reduced_word() const;

  std::string to_string() const;  // one-line digits, e.g. "231"
  static Perm parse(const std::string& digits);

private:
  std::vector<int> img_;
};

std::vector<Perm> all_perms(int n);

// Bruhat order on S_n, two independent routes (they are verified to agree):
bool bruhat_leq_subword(const Perm& u, const Perm& v);
bool bruhat_leq_rank_matrix(const Perm& u, const Perm& v);

// An element of a product Weyl group W = prod_tau S_n (same n for every
// factor; n = 3 is the default of interest).
class WeylElem {
public:
  WeylElem() = default;
  explicit WeylElem(std::vector<Perm> factors);
  static WeylElem identity(int ntau, int n);

  int ntau() const { return static_cast<int>(f_.size()); }
  int n() const;
  const Perm& factor(int t) const { return f_[t]; }
  const std::vector<Perm>& factors() const { return f_; }

  WeylElem operator*(const WeylElem& rhs) const;  // factorwise, rhs first
  WeylElem inverse() const;
  bool operator==(const WeylElem&) const = default;
  bool operator<(const WeylElem& rhs) const { return f_ < rhs.f_; }

  // Text encoding: one-line digit strings per factor, comma-separated
  // ("231,132"). parse() checks every factor is a permutation of 1..n.
  std::string to_string() const;
  static WeylElem parse(const std::string& text);

  // Word encoding used by command-line flags: per-factor words over
  // {1, e, s<i>, w0} with juxtaposition meaning composition in reading order
  // (leftmost applied last), e.g. "s1s2" = s1 ∘ s2. Factors comma-separated.
  static WeylElem parse_word(const std::string& text, int n = 3);

private:
  std::vector<Perm> f_;
};

// Integer weight for W = prod_tau S_n: one integer n-tuple per factor.
// Text encoding: entries comma-separated, factors semicolon-separated
// ("2,2,2;5,3,2").
class Weight {
public:
  Weight() = default;
  explicit Weight(std::vector<std::vector<long>> comps);

  int ntau() const { return static_cast<int>(c_.size()); }
  int n() const;
  const std::vector<std::vector<long>>& comps() const { return c_; }
  bool operator==(const Weight&) const = default;

  bool is_dominant() const;      // weakly decreasing in every factor
  bool is_antidominant() const;  // weakly increasing in every factor

  std::string to_string() const;
  static Weight parse(const std::string& text);

private:
  std::vector<std::vector<long>> c_;
};

// --- group-theoretic quantities (factorwise sums) ------------------------

int coxeter_length(const WeylElem& w);
int reflection_length(const WeylElem& w);
// Dimension of the fixed space of w acting on the direct sum of the
// permutation representations (one copy of k^n per factor).
int fixed_space_dim(const WeylElem& w);

// Componentwise Bruhat order; every factor is checked through both the
// subword route and the rank-matrix route, which must agree.
bool bruhat_leq(const WeylElem& a, const WeylElem& b);

// True iff every factor is a product of pairwise-distinct simple
// reflections. Exhaustive search over injective simple sequences; refuses
// factors with n > 5 (SearchBoundError).
bool is_product_of_distinct_simples(const WeylElem& w);

// Shifted ("dot") action w·λ = w(λ+δ) − δ with δ = (n-1, n-2, ..., 0) per
// factor (any constant shift of δ gives the same action). ShapeMismatchError
// if shapes differ.
Weight dot_action(const WeylElem& w, const Weight& lambda);

// Minimal and maximal length representatives of the left coset W_I·w, where
// I selects simple reflections per factor (1-based indices).
struct CosetReps {
  WeylElem wmin;
  WeylElem wmax;
};
CosetReps coset_reps(const WeylElem& w, const std::vector<std::set<int>>& I);

// Dominant weight attached to a strictly increasing tuple of integer labels
// h per factor: λ = w0(h) − (0, -1, ..., 1-n). NotRegularError unless h is
// strictly increasing in every factor.
Weight hodge_to_lambda(const Weight& h);

}  // namespace steinberg::weyl
