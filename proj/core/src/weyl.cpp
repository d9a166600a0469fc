#include "steinberg/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "steinberg/errors.hpp"

namespace steinberg::weyl {

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return Perm(std::move(v));
}

Perm Perm::simple(int n, int i) {
  if (i < 1 || i >= n) throw ShapeMismatchError("simple reflection index out of range");
  Perm p = identity(n);
  std::swap(p.img_[i - 1], p.img_[i]);
  return p;
}

Perm Perm::longest(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - 1 - i;
  return Perm(std::move(v));
}

Perm::Perm(std::vector<int> one_line_0based) : img_(std::move(one_line_0based)) {
  std::vector<bool> seen(img_.size(), false);
  for (int x : img_) {
    if (x < 0 || x >= static_cast<int>(img_.size()) || seen[x])
      throw ShapeMismatchError("not a permutation");
    seen[x] = true;
  }
}

Perm Perm::operator*(const Perm& rhs) const {
  if (n() != rhs.n()) throw ShapeMismatchError("permutation size mismatch");
  std::vector<int> v(img_.size());
  for (int i = 0; i < n(); ++i) v[i] = img_[rhs.img_[i]];
  return Perm(std::move(v));
}

Perm Perm::inverse() const {
  std::vector<int> v(img_.size());
  for (int i = 0; i < n(); ++i) v[img_[i]] = i;
  return Perm(std::move(v));
}

bool Perm::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Perm::coxeter_length() const {
  int inv = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = i + 1; j < n(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

int Perm::cycle_count() const {
  int cycles = 0;
  std::vector<bool> seen(img_.size(), false);
  for (int i = 0; i < n(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = img_[j]) seen[j] = true;
  }
  return cycles;
}

int Perm::reflection_length() const { return n() - cycle_count(); }

std::vector<int> Perm::reduced_word() const {
  // Repeatedly strip a descent: if w(i) > w(i+1) then lg(w * s_i) < lg(w),
  // and w = (w * s_i) * s_i. Collecting the stripped letters right-to-left
  // yields a reduced word for w.
  std::vector<int> word;
  Perm w = *this;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < n(); ++i) {
      if (w.img_[i] > w.img_[i + 1]) {
        std::swap(w.img_[i], w.img_[i + 1]);
        word.push_back(i + 1);
        changed = true;
        break;
      }
    }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::string Perm::to_string() const {
  std::string s;
  for (int x : img_) {
    if (n() > 9) {
      if (!s.empty()) s += '.';
      s += std::to_string(x + 1);
    } else {
      s += static_cast<char>('1' + x);
    }
  }
  return s;
}

Perm Perm::parse(const std::string& digits) {
  std::vector<int> v;
  for (char c : digits) {
    if (c < '1' || c > '9') throw ShapeMismatchError("bad permutation digit: " + digits);
    v.push_back(c - '1');
  }
  if (v.empty()) throw ShapeMismatchError("empty permutation");
  return Perm(std::move(v));
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Perm> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

bool bruhat_leq_subword(const Perm& u, const Perm& v) {
  if (u.n() != v.n()) throw ShapeMismatchError("Bruhat comparison across different S_n");
  // u <= v iff u is the product of some subword of one fixed reduced word of v.
  std::vector<int> word = v.reduced_word();
  const int L = static_cast<int>(word.size());
  if (u.coxeter_length() > L) return false;
  std::set<Perm> reachable{Perm::identity(u.n())};
  for (int k = 0; k < L; ++k) {
    const Perm s = Perm::simple(u.n(), word[k]);
    std::set<Perm> next = reachable;  // skip letter k
    for (const Perm& p : reachable) next.insert(p * s);
    reachable.swap(next);
  }
  return reachable.count(u) > 0;
}

bool bruhat_leq_rank_matrix(const Perm& u, const Perm& v) {
  if (u.n() != v.n()) throw ShapeMismatchError("Bruhat comparison across different S_n");
  // Ehresmann: u <= v iff for all i, j: #{k <= i : u(k) <= j} >= #{k <= i : v(k) <= j}.
  const int n = u.n();
  for (int i = 0; i < n; ++i) {
    int cu = 0, cv = 0;
    for (int j = 0; j < n; ++j) {
      // counts with k <= i fixed, sweeping j
      cu = 0;
      cv = 0;
      for (int k = 0; k <= i; ++k) {
        if (u.apply(k) <= j) ++cu;
        if (v.apply(k) <= j) ++cv;
      }
      if (cu < cv) return false;
    }
  }
  return true;
}

WeylElem::WeylElem(std::vector<Perm> factors) : f_(std::move(factors)) {
  for (const Perm& p : f_)
    if (p.n() != f_.front().n())
      throw ShapeMismatchError("all factors of a Weyl element must share n");
}

WeylElem WeylElem::identity(int ntau, int n) {
  return WeylElem(std::vector<Perm>(ntau, Perm::identity(n)));
}

int WeylElem::n() const { return f_.empty() ? 0 : f_.front().n(); }

WeylElem WeylElem::operator*(const WeylElem& rhs) const {
  if (ntau() != rhs.ntau() || n() != rhs.n())
    throw ShapeMismatchError("Weyl element shape mismatch");
  std::vector<Perm> v;
  v.reserve(f_.size());
  for (int t = 0; t < ntau(); ++t) v.push_back(f_[t] * rhs.f_[t]);
  return WeylElem(std::move(v));
}

WeylElem WeylElem::inverse() const {
  std::vector<Perm> v;
  v.reserve(f_.size());
  for (const Perm& p : f_) v.push_back(p.inverse());
  return WeylElem(std::move(v));
}

std::string WeylElem::to_string() const {
  std::string s;
  for (int t = 0; t < ntau(); ++t) {
    if (t) s += ',';
    s += f_[t].to_string();
  }
  return s;
}

WeylElem WeylElem::parse(const std::string& text) {
  std::vector<Perm> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) v.push_back(Perm::parse(tok));
  if (v.empty()) throw ShapeMismatchError("empty Weyl element");
  return WeylElem(std::move(v));
}

WeylElem WeylElem::parse_word(const std::string& text, int n) {
  std::vector<Perm> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    Perm p = Perm::identity(n);
    size_t i = 0;
    if (tok.empty()) throw ShapeMismatchError("empty word factor");
    while (i < tok.size()) {
      if (tok[i] == '1' || tok[i] == 'e') {
        ++i;
      } else if (tok[i] == 'w' && i + 1 < tok.size() && tok[i + 1] == '0') {
        p = p * Perm::longest(n);
        i += 2;
      } else if (tok[i] == 's' && i + 1 < tok.size() && isdigit(tok[i + 1])) {
        p = p * Perm::simple(n, tok[i + 1] - '0');
        i += 2;
      } else {
        throw ShapeMismatchError("cannot parse word: " + tok);
      }
    }
    v.push_back(p);
  }
  if (v.empty()) throw ShapeMismatchError("empty word");
  return WeylElem(std::move(v));
}

Weight::Weight(std::vector<std::vector<long>> comps) : c_(std::move(comps)) {
  for (const auto& t : c_)
    if (t.size() != c_.front().size())
      throw ShapeMismatchError("all factors of a weight must share n");
}

int Weight::n() const { return c_.empty() ? 0 : static_cast<int>(c_.front().size()); }

bool Weight::is_dominant() const {
  for (const auto& t : c_)
    for (size_t i = 0; i + 1 < t.size(); ++i)
      if (t[i] < t[i + 1]) return false;
  return true;
}

bool Weight::is_antidominant() const {
  for (const auto& t : c_)
    for (size_t i = 0; i + 1 < t.size(); ++i)
      if (t[i] > t[i + 1]) return false;
  return true;
}

std::string Weight::to_string() const {
  std::string s;
  for (size_t t = 0; t < c_.size(); ++t) {
    if (t) s += ';';
    for (size_t i = 0; i < c_[t].size(); ++i) {
      if (i) s += ',';
      s += std::to_string(c_[t][i]);
    }
  }
  return s;
}

Weight Weight::parse(const std::string& text) {
  std::vector<std::vector<long>> comps;
  std::stringstream ss(text);
  std::string factor;
  while (std::getline(ss, factor, ';')) {
    std::vector<long> t;
    std::stringstream fs(factor);
    std::string entry;
    while (std::getline(fs, entry, ',')) {
      size_t pos = 0;
      long v = std::stol(entry, &pos);
      if (pos != entry.size()) throw ShapeMismatchError("bad weight entry: " + entry);
      t.push_back(v);
    }
    if (t.empty()) throw ShapeMismatchError("empty weight factor");
    comps.push_back(std::move(t));
  }
  if (comps.empty()) throw ShapeMismatchError("empty weight");
  return Weight(std::move(comps));
}

int coxeter_length(const WeylElem& w) {
  int s = 0;
  for (const Perm& p : w.factors()) s += p.coxeter_length();
  return s;
}

int reflection_length(const WeylElem& w) {
  int s = 0;
  for (const Perm& p : w.factors()) s += p.reflection_length();
  return s;
}

int fixed_space_dim(const WeylElem& w) {
  int s = 0;
  for (const Perm& p : w.factors()) s += p.cycle_count();
  return s;
}

bool bruhat_leq(const WeylElem& a, const WeylElem& b) {
  if (a.ntau() != b.ntau() || a.n() != b.n())
    throw ShapeMismatchError("Bruhat comparison shape mismatch");
  bool leq = true;
  for (int t = 0; t < a.ntau(); ++t) {
    const bool via_subword = bruhat_leq_subword(a.factor(t), b.factor(t));
    const bool via_ranks = bruhat_leq_rank_matrix(a.factor(t), b.factor(t));
    if (via_subword != via_ranks)
      throw Error("Bruhat routes disagree for " + a.factor(t).to_string() + " vs " +
                  b.factor(t).to_string());
    leq = leq && via_subword;
  }
  return leq;
}

namespace {

bool distinct_simples_search(const Perm& target, const Perm& acc, std::vector<bool>& used,
                             int remaining) {
  if (remaining == 0) return acc == target;
  const int n = target.n();
  for (int i = 1; i < n; ++i) {
    if (used[i]) continue;
    used[i] = true;
    if (distinct_simples_search(target, acc * Perm::simple(n, i), used, remaining - 1))
      return true;
    used[i] = false;
  }
  return false;
}

}  // namespace

bool is_product_of_distinct_simples(const WeylElem& w) {
  for (const Perm& p : w.factors()) {
    if (p.n() > 5)
      throw SearchBoundError("distinct-simples search limited to n <= 5");
    const int len = p.coxeter_length();
    if (len >= p.n()) return false;  // only n-1 distinct simples exist
    std::vector<bool> used(p.n(), false);
    if (!distinct_simples_search(p, Perm::identity(p.n()), used, len)) return false;
  }
  return true;
}

Weight dot_action(const WeylElem& w, const Weight& lambda) {
  if (w.ntau() != lambda.ntau() || w.n() != lambda.n())
    throw ShapeMismatchError("dot action shape mismatch");
  const int n = w.n();
  std::vector<std::vector<long>> out(lambda.comps());
  for (int t = 0; t < w.ntau(); ++t) {
    const Perm inv = w.factor(t).inverse();
    std::vector<long> shifted(n);
    for (int i = 0; i < n; ++i) shifted[i] = lambda.comps()[t][i] + (n - 1 - i);
    for (int i = 0; i < n; ++i) out[t][i] = shifted[inv.apply(i)] - (n - 1 - i);
  }
  return Weight(std::move(out));
}

CosetReps coset_reps(const WeylElem& w, const std::vector<std::set<int>>& I) {
  if (static_cast<int>(I.size()) != w.ntau())
    throw ShapeMismatchError("coset generator sets must match the number of factors");
  std::vector<Perm> mins, maxs;
  for (int t = 0; t < w.ntau(); ++t) {
    // Enumerate the subgroup W_I of this factor by closure, then the coset.
    std::set<Perm> sub{Perm::identity(w.n())};
    bool grew = true;
    while (grew) {
      grew = false;
      std::set<Perm> next = sub;
      for (const Perm& p : sub)
        for (int i : I[t]) {
          Perm q = p * Perm::simple(w.n(), i);
          if (next.insert(q).second) grew = true;
        }
      sub.swap(next);
    }
    const Perm* best_min = nullptr;
    const Perm* best_max = nullptr;
    std::set<Perm> coset;
    for (const Perm& u : sub) coset.insert(u * w.factor(t));
    for (const Perm& c : coset) {
      if (!best_min || c.coxeter_length() < best_min->coxeter_length()) best_min = &c;
      if (!best_max || c.coxeter_length() > best_max->coxeter_length()) best_max = &c;
    }
    mins.push_back(*best_min);
    maxs.push_back(*best_max);
  }
  return CosetReps{WeylElem(std::move(mins)), WeylElem(std::move(maxs))};
}

Weight hodge_to_lambda(const Weight& h) {
  const int n = h.n();
  std::vector<std::vector<long>> out(h.comps());
  for (int t = 0; t < h.ntau(); ++t) {
    const auto& ht = h.comps()[t];
    for (int i = 0; i + 1 < n; ++i)
      if (ht[i] >= ht[i + 1])
        throw NotRegularError("labels must be strictly increasing per factor");
    for (int i = 0; i < n; ++i) out[t][i] = ht[n - 1 - i] + i;  // w0(h) - (0,-1,...,1-n)
  }
  return Weight(std::move(out));
}

}  // namespace steinberg::weyl
