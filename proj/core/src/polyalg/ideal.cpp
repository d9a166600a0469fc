#include "steinberg/polyalg/ideal.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "steinberg/errors.hpp"

namespace steinberg::polyalg {

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens) : ring_(std::move(ring)), gens_(std::move(gens)) {
  for (const Poly& g : gens_)
    if (!same_ring(g.ring(), ring_)) throw RingMismatchError("ideal generator from a different ring");
}

// ---- optional on-disk basis cache (STEINBERG_CACHE_DIR) --------------------

namespace {

uint64_t fnv1a_line(uint64_t h, const std::string& s) {
  for (const unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  h ^= static_cast<unsigned char>('\n');
  h *= 0x100000001b3ULL;
  return h;
}

std::optional<std::filesystem::path> cache_file_for(const RingPtr& ring,
                                                    const std::vector<Poly>& gens,
                                                    const MonomialOrder& ord) {
  const char* dir = std::getenv("STEINBERG_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& v : ring->vars()) h = fnv1a_line(h, v);
  h = fnv1a_line(h, ord.key());
  for (const auto& g : gens) h = fnv1a_line(h, g.to_string());
  std::ostringstream name;
  name << std::hex << h << ".gb";
  return std::filesystem::path(dir) / name.str();
}

std::string joined_vars(const RingPtr& ring) {
  std::string s;
  for (const auto& v : ring->vars()) {
    if (!s.empty()) s += ',';
    s += v;
  }
  return s;
}

// Parse a stored basis and recertify it before use: the header must match
// this exact computation, every current generator must reduce to zero
// against the stored basis, and the stored basis must be Buchberger-stable
// (recomputing its reduced basis returns it unchanged). A failure of any of
// these discards the entry; membership of the stored elements in the ideal
// itself is trusted (certifying it would require the basis being loaded).
std::optional<std::vector<Poly>> load_certified(const std::filesystem::path& file,
                                                const RingPtr& ring,
                                                const std::vector<Poly>& gens,
                                                const MonomialOrder& ord,
                                                const GroebnerOptions& opts) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  try {
    std::string line;
    if (!std::getline(in, line) || line != "steinberg-gb 1") return std::nullopt;
    if (!std::getline(in, line) || line != "vars " + joined_vars(ring)) return std::nullopt;
    if (!std::getline(in, line) || line != "order " + ord.key()) return std::nullopt;
    if (!std::getline(in, line) || line != "gens " + std::to_string(gens.size()))
      return std::nullopt;
    for (const auto& g : gens)
      if (!std::getline(in, line) || line != g.to_string()) return std::nullopt;
    if (!std::getline(in, line) || line.rfind("basis ", 0) != 0) return std::nullopt;
    const size_t count = std::stoul(line.substr(6));
    std::vector<Poly> basis;
    basis.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (!std::getline(in, line)) return std::nullopt;
      basis.push_back(parse_poly(ring, line));
    }
    for (const auto& g : gens)
      if (!normal_form(g, basis, ord).is_zero()) return std::nullopt;
    if (groebner_basis(basis, ord, opts) != basis) return std::nullopt;
    return basis;
  } catch (const Error&) {
    return std::nullopt;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void store_basis(const std::filesystem::path& file, const RingPtr& ring,
                 const std::vector<Poly>& gens, const MonomialOrder& ord,
                 const std::vector<Poly>& basis) {
  try {
    std::filesystem::create_directories(file.parent_path());
    const std::filesystem::path tmp = file.string() + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) return;
      out << "steinberg-gb 1\n";
      out << "vars " << joined_vars(ring) << "\n";
      out << "order " << ord.key() << "\n";
      out << "gens " << gens.size() << "\n";
      for (const auto& g : gens) out << g.to_string() << "\n";
      out << "basis " << basis.size() << "\n";
      for (const auto& b : basis) out << b.to_string() << "\n";
      if (!out) return;
    }
    std::error_code ec;
    std::filesystem::rename(tmp, file, ec);
  } catch (const std::exception&) {
    // The cache is best-effort; failures fall back to recomputation.
  }
}

}  // namespace

const std::vector<Poly>& Ideal::groebner(const MonomialOrder& ord,
                                         const GroebnerOptions& opts) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = gb_cache_.find(ord.key());
  if (it != gb_cache_.end()) return it->second;
  const auto file = cache_file_for(ring_, gens_, ord);
  if (file) {
    if (auto cached = load_certified(*file, ring_, gens_, ord, opts))
      return gb_cache_.emplace(ord.key(), std::move(*cached)).first->second;
  }
  auto gb = groebner_basis(gens_, ord, opts);
  if (file) store_basis(*file, ring_, gens_, ord, gb);
  return gb_cache_.emplace(ord.key(), std::move(gb)).first->second;
}

bool Ideal::contains(const Poly& f) const {
  if (f.is_zero()) return true;
  const auto& gb = groebner();
  return normal_form(f, gb, MonomialOrder::grevlex()).is_zero();
}

bool Ideal::is_unit_ideal() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb.front().is_constant() && !gb.front().is_zero();
}

bool Ideal::is_zero_ideal() const { return groebner().empty(); }

long Ideal::dim() const {
  if (is_unit_ideal()) return -1;
  const auto& gb = groebner();
  const size_t n = ring_->arity();
  std::vector<Monomial> leads;
  for (const Poly& g : gb) leads.push_back(g.leading_monomial(MonomialOrder::grevlex()));

  // dim R/I = size of the largest variable subset S such that no leading
  // monomial is supported entirely inside S.
  long best = 0;
  for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
    const int size = __builtin_popcountll(mask);
    if (size <= best) continue;
    bool independent = true;
    for (const Monomial& m : leads) {
      bool inside = true;
      for (size_t i = 0; i < n && inside; ++i)
        if (m.e[i] && !(mask >> i & 1)) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

bool Ideal::same_ideal(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) return false;
  return groebner() == other.groebner();
}

std::vector<std::string> Ideal::gens_strings() const { return polys_to_strings(gens_); }

namespace {

// Rebuild polys of `I` inside a ring that has extra variables in front.
RingPtr extended_ring(const RingPtr& base, const std::vector<std::string>& fresh) {
  std::vector<std::string> vars = fresh;
  for (const auto& v : base->vars()) vars.push_back(v);
  return make_ring(std::move(vars));
}

std::string fresh_var_name(const RingPtr& ring, const std::string& stem) {
  std::string name = stem;
  while (ring->index_of(name)) name += "_";
  return name;
}

// Generators of I mapped into ext (which contains all of I's variables).
std::vector<Poly> lift_all(const Ideal& I, const RingPtr& ext) {
  std::vector<Poly> out;
  out.reserve(I.gens().size());
  for (const Poly& g : I.gens()) out.push_back(g.mapped(ext));
  return out;
}

// Keep Groebner elements free of the first `count` variables of `ext`, mapped
// back to `base`.
std::vector<Poly> keep_tail(const std::vector<Poly>& gb, size_t count, const RingPtr& base) {
  std::vector<Poly> out;
  for (const Poly& g : gb) {
    bool uses_front = false;
    for (size_t i = 0; i < count && !uses_front; ++i)
      if (g.involves(i)) uses_front = true;
    if (!uses_front) out.push_back(g.mapped(base));
  }
  return out;
}

}  // namespace

Ideal saturate(const Ideal& I, const Poly& f, const GroebnerOptions& opts) {
  if (f.is_zero()) throw Error("saturation by zero");
  const RingPtr base = I.ring();
  const std::string t = fresh_var_name(base, "t@");
  const RingPtr ext = extended_ring(base, {t});
  std::vector<Poly> gens = lift_all(I, ext);
  // 1 - t*f
  Poly tf = Poly::variable(ext, 0) * f.mapped(ext);
  gens.push_back(Poly::constant(ext, Rat(1)) - tf);
  auto gb = groebner_basis(std::move(gens), MonomialOrder::block(1), opts);
  return Ideal(base, keep_tail(gb, 1, base));
}

Ideal intersect(const Ideal& I, const Ideal& J, const GroebnerOptions& opts) {
  if (!same_ring(I.ring(), J.ring())) throw RingMismatchError("intersect across rings");
  const RingPtr base = I.ring();
  const std::string t = fresh_var_name(base, "t@");
  const RingPtr ext = extended_ring(base, {t});
  const Poly tv = Poly::variable(ext, 0);
  const Poly one_minus_t = Poly::constant(ext, Rat(1)) - tv;
  std::vector<Poly> gens;
  for (const Poly& g : I.gens()) gens.push_back(tv * g.mapped(ext));
  for (const Poly& g : J.gens()) gens.push_back(one_minus_t * g.mapped(ext));
  auto gb = groebner_basis(std::move(gens), MonomialOrder::block(1), opts);
  return Ideal(base, keep_tail(gb, 1, base));
}

Ideal eliminate(const Ideal& I, const std::vector<size_t>& elim_vars,
                const GroebnerOptions& opts) {
  const RingPtr base = I.ring();
  std::vector<bool> is_elim(base->arity(), false);
  for (size_t v : elim_vars) is_elim.at(v) = true;

  // Permuted ring with the eliminated variables in front.
  std::vector<std::string> vars;
  for (size_t i = 0; i < base->arity(); ++i)
    if (is_elim[i]) vars.push_back(base->var(i));
  const size_t count = vars.size();
  for (size_t i = 0; i < base->arity(); ++i)
    if (!is_elim[i]) vars.push_back(base->var(i));
  const RingPtr perm = make_ring(std::move(vars));

  std::vector<Poly> gens;
  for (const Poly& g : I.gens()) gens.push_back(g.mapped(perm));
  auto gb = groebner_basis(std::move(gens), MonomialOrder::block(count), opts);
  return Ideal(base, keep_tail(gb, count, base));
}

Ideal restrict_to_subring(const Ideal& I, const RingPtr& target) {
  std::vector<Poly> gens;
  gens.reserve(I.gens().size());
  for (const Poly& g : I.gens()) gens.push_back(g.mapped(target));
  return Ideal(target, std::move(gens));
}

size_t rat_matrix_rank(std::vector<std::vector<Rat>> m) {
  if (m.empty() || m.front().empty()) return 0;
  const size_t rows = m.size(), cols = m.front().size();
  size_t rank = 0;
  for (size_t c = 0; c < cols && rank < rows; ++c) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rat f = m[r][c] / m[rank][c];
      for (size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool point_on_variety(const Ideal& I, std::span<const Rat> point) {
  for (const Poly& g : I.gens())
    if (g.eval(point) != 0) return false;
  return true;
}

long tangent_dim(const Ideal& I, std::span<const Rat> point) {
  if (!point_on_variety(I, point))
    throw PointNotOnVarietyError("tangent space requested at a point off the variety");
  const auto& gb = I.groebner();
  const size_t n = I.ring()->arity();
  std::vector<std::vector<Rat>> jac;
  jac.reserve(gb.size());
  for (const Poly& g : gb) {
    std::vector<Rat> row;
    row.reserve(n);
    for (size_t v = 0; v < n; ++v) row.push_back(g.derivative(v).eval(point));
    jac.push_back(std::move(row));
  }
  return static_cast<long>(n) - static_cast<long>(rat_matrix_rank(std::move(jac)));
}

}  // namespace steinberg::polyalg
