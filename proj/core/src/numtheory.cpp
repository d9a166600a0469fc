#include "steinberg/numtheory.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "steinberg/errors.hpp"

namespace steinberg::numtheory {

// ---------------------------------------------------------------- ZPoly ----

void ZPoly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

const mpz_class& ZPoly::lead() const {
  if (c.empty()) throw InvalidSpecError("zero polynomial has no leading coefficient");
  return c.back();
}

ZPoly ZPoly::from_coeffs(std::vector<long> low_to_high) {
  ZPoly f;
  f.c.assign(low_to_high.begin(), low_to_high.end());
  f.normalize();
  return f;
}

ZPoly ZPoly::parse(const std::string& text) {
  ZPoly f;
  size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  const auto read_int = [&]() -> mpz_class {
    const size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) throw ParseError("expected digits in polynomial at offset " +
                                     std::to_string(start) + ": " + text);
    return mpz_class(text.substr(start, i - start));
  };
  bool first = true;
  skip_ws();
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw ParseError("expected + or - between polynomial terms: " + text);
    }
    first = false;
    mpz_class coef = 1;
    bool saw_coef = false;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coef = read_int();
      saw_coef = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip_ws();
      }
    }
    long exp = 0;
    if (i < text.size() && text[i] == 'x') {
      ++i;
      exp = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        exp = mpz_class(read_int()).get_si();
        skip_ws();
      }
    } else if (!saw_coef) {
      throw ParseError("empty polynomial term: " + text);
    }
    if (static_cast<long>(f.c.size()) <= exp) f.c.resize(exp + 1, 0);
    f.c[exp] += sign * coef;
    skip_ws();
  }
  f.normalize();
  return f;
}

std::string ZPoly::to_string() const {
  if (c.empty()) return "0";
  std::string s;
  for (long i = degree(); i >= 0; --i) {
    if (c[i] == 0) continue;
    const bool neg = c[i] < 0;
    mpz_class a = abs(c[i]);
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (a != 1 || i == 0) {
      s += a.get_str();
      if (i > 0) s += "*";
    }
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

ZPoly derivative(const ZPoly& f) {
  ZPoly d;
  if (f.c.size() <= 1) return d;
  d.c.resize(f.c.size() - 1);
  for (size_t i = 1; i < f.c.size(); ++i) d.c[i - 1] = mpz_class(f.c[i] * static_cast<long>(i));
  d.normalize();
  return d;
}

// ------------------------------------------------------------- primality ---

bool is_prime(long p) {
  if (p < 2) return false;
  for (long q : {2L, 3L, 5L, 7L}) {
    if (p == q) return true;
    if (p % q == 0) return false;
  }
  for (long d = 11; d * d <= p; d += 6) {
    if (p % d == 0 || p % (d + 2) == 0) return false;
  }
  return true;
}

// --------------------------------------------------- F_p[x] arithmetic -----

namespace {

using FpV = std::vector<long>;  // coefficients in [0, p), no leading zeros

void fp_trim(FpV& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

FpV fp_reduce(const ZPoly& f, long p) {
  FpV v(f.c.size());
  for (size_t i = 0; i < f.c.size(); ++i)
    v[i] = static_cast<long>(mpz_fdiv_ui(f.c[i].get_mpz_t(), static_cast<unsigned long>(p)));
  fp_trim(v);
  return v;
}

long fp_pow_scalar(long a, long e, long p) {
  long r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

long fp_inv(long a, long p) { return fp_pow_scalar((a % p + p) % p, p - 2, p); }

FpV fp_mul(const FpV& a, const FpV& b, long p) {
  if (a.empty() || b.empty()) return {};
  FpV r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  fp_trim(r);
  return r;
}

// Remainder of a modulo b (b nonzero).
FpV fp_mod(FpV a, const FpV& b, long p) {
  const long invlead = fp_inv(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    const long q = a.back() * invlead % p;
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      a[i + shift] = ((a[i + shift] - q * b[i]) % p + p) % p;
    }
    fp_trim(a);
  }
  return a;
}

FpV fp_monic(FpV a, long p) {
  if (a.empty()) return a;
  const long inv = fp_inv(a.back(), p);
  for (long& x : a) x = x * inv % p;
  return a;
}

FpV fp_gcd(FpV a, FpV b, long p) {
  while (!b.empty()) {
    FpV r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(std::move(a), p);
}

FpV fp_derivative(const FpV& a, long p) {
  if (a.size() <= 1) return {};
  FpV d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * static_cast<long>(i % p) % p;
  fp_trim(d);
  return d;
}

ZPoly fp_to_zpoly(const FpV& v) {
  ZPoly f;
  f.c.assign(v.begin(), v.end());
  f.normalize();
  return f;
}

void check_frobenius_input(const ZPoly& f, long p) {
  if (f.degree() < 1) throw InvalidSpecError("frobenius needs a polynomial of degree >= 1");
  if (!is_prime(p)) throw BadPrimeError(std::to_string(p) + " is not prime");
  if (mpz_fdiv_ui(f.lead().get_mpz_t(), static_cast<unsigned long>(p)) == 0)
    throw BadPrimeError(std::to_string(p) + " divides the leading coefficient");
}

}  // namespace

ZPoly frobenius_power(const ZPoly& f, long p) {
  check_frobenius_input(f, p);
  const FpV fbar = fp_reduce(f, p);
  const FpV x = fp_mod(FpV{0, 1}, fbar, p);
  FpV result{1};
  FpV base = x;
  for (long e = p; e > 0; e >>= 1) {
    if (e & 1) result = fp_mod(fp_mul(result, base, p), fbar, p);
    base = fp_mod(fp_mul(base, base, p), fbar, p);
  }
  return fp_to_zpoly(result);
}

ZPoly frobenius_power_naive(const ZPoly& f, long p) {
  check_frobenius_input(f, p);
  const FpV fbar = fp_reduce(f, p);
  const FpV x = fp_mod(FpV{0, 1}, fbar, p);
  FpV result = fp_mod(FpV{1}, fbar, p);
  for (long i = 0; i < p; ++i) result = fp_mod(fp_mul(result, x, p), fbar, p);
  return fp_to_zpoly(result);
}

bool is_totally_split(const ZPoly& f, long p) {
  check_frobenius_input(f, p);
  const FpV fbar = fp_reduce(f, p);
  if (fp_gcd(fbar, fp_derivative(fbar, p), p).size() != 1) return false;  // not squarefree
  const FpV x = fp_mod(FpV{0, 1}, fbar, p);
  return frobenius_power(f, p) == fp_to_zpoly(x);
}

// ------------------------------------------------------------ FieldSpec ----

namespace {

struct BuiltinDef {
  const char* name;
  std::vector<std::vector<long>> coeff_lists;  // low-to-high
  long modulus;
};

const std::vector<BuiltinDef>& builtin_table() {
  static const std::vector<BuiltinDef> table = {
      // E = Q(i), F' the cyclic cubic of discriminant 13^2.
      {"Qi_cubic13", {{1, 0, 1}, {-1, -4, -1, 1}}, 52},
      // E = Q(sqrt(-3)), F' the real subfield of the 7th cyclotomic field.
      {"Qsqrtm3_zeta7", {{3, 0, 1}, {-1, -2, 1, 1}}, 21},
      // E = Q(i, sqrt(3)) (= 12th cyclotomic field), same F'.
      {"Qi_sqrt3_zeta7", {{1, 0, -1, 0, 1}, {-1, -2, 1, 1}}, 84},
      // E = Q(sqrt(-5)), F' the real subfield of the 9th cyclotomic field.
      {"Qsqrtm5_zeta9", {{5, 0, 1}, {1, -3, 0, 1}}, 180},
      // E = Q(i, sqrt(7)), F' the cyclic cubic inside the 43rd cyclotomic.
      {"Qi_sqrt7_cubic43", {{64, 0, -12, 0, 1}, {-8, -14, -1, 1}}, 1204},
  };
  return table;
}

// No root among the candidate rationals p/q, p | a0, q | lead.
bool has_rational_root(const ZPoly& f) {
  if (f.c.front() == 0) return true;  // root 0
  std::vector<mpz_class> ps, qs;
  const auto divisors = [](const mpz_class& n0) {
    std::vector<mpz_class> out;
    const mpz_class n = abs(n0);
    for (mpz_class d = 1; d * d <= n; ++d)
      if (n % d == 0) {
        out.push_back(d);
        out.push_back(n / d);
      }
    return out;
  };
  for (const mpz_class& pnum : divisors(f.c.front()))
    for (const mpz_class& qden : divisors(f.lead()))
      for (int sign : {1, -1}) {
        // f(p/q) * q^deg = sum c_i p^i q^{deg-i}
        mpz_class acc = 0, ppow = 1;
        const mpz_class p = sign * pnum;
        for (long i = 0; i <= f.degree(); ++i) {
          mpz_class qpow;
          mpz_pow_ui(qpow.get_mpz_t(), qden.get_mpz_t(),
                     static_cast<unsigned long>(f.degree() - i));
          acc += f.c[i] * ppow * qpow;
          ppow *= p;
        }
        if (acc == 0) return true;
      }
  return false;
}

// Monic integer quartic: detect (x^2+ax+b)(x^2+cx+d) over Z.
bool monic_quartic_splits_in_quadratics(const ZPoly& f) {
  const mpz_class &e3 = f.c[3], &e2 = f.c[2], &e1 = f.c[1], &e0 = f.c[0];
  std::vector<mpz_class> bs;
  const mpz_class n = abs(e0);
  for (mpz_class d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      for (const mpz_class& v : {mpz_class(d), mpz_class(n / d)}) {
        bs.push_back(v);
        bs.push_back(-v);
      }
    }
  for (const mpz_class& b : bs) {
    if (b == 0) continue;
    if (e0 % b != 0) continue;
    const mpz_class d = e0 / b;
    // a + c = e3, b + d + a c = e2, a d + b c = e1
    // Solve a from the linear system: a d + (e3 - a) b = e1.
    const mpz_class db = d - b;
    mpz_class a;
    if (db == 0) {
      // a d + c b = b (a + c) = b e3 must equal e1; a free: use e2 row.
      if (b * e3 != e1) continue;
      // a c = e2 - b - d with a + c = e3: integer roots of t^2 - e3 t + (e2-b-d)
      const mpz_class prod = e2 - b - d, disc = e3 * e3 - 4 * prod;
      if (disc < 0) continue;
      mpz_class s;
      mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
      if (s * s != disc) continue;
      if ((e3 + s) % 2 != 0) continue;
      return true;  // a = (e3 + s)/2 integral
    }
    const mpz_class num = e1 - b * e3;
    if (num % db != 0) continue;
    a = num / db;
    const mpz_class c = e3 - a;
    if (b + d + a * c == e2) return true;
  }
  return false;
}

}  // namespace

void verify_irreducible(const ZPoly& f) {
  const long deg = f.degree();
  if (deg < 1) throw InvalidSpecError("field polynomial must have degree >= 1: " + f.to_string());
  if (deg == 1) return;
  if (has_rational_root(f))
    throw InvalidSpecError("reducible (rational root): " + f.to_string());
  if (deg <= 3) return;  // no rational root certifies irreducibility
  if (deg == 4) {
    if (f.lead() != 1)
      throw InvalidSpecError("quartic certification implemented for monic inputs only: " +
                             f.to_string());
    if (monic_quartic_splits_in_quadratics(f))
      throw InvalidSpecError("reducible (quadratic factors): " + f.to_string());
    return;
  }
  throw InvalidSpecError("irreducibility certification limited to degree <= 4: " +
                         f.to_string());
}

FieldSpec FieldSpec::builtin_by_name(const std::string& name) {
  for (const BuiltinDef& def : builtin_table()) {
    if (name != def.name) continue;
    FieldSpec spec;
    spec.name = def.name;
    for (const auto& coeffs : def.coeff_lists) {
      ZPoly f = ZPoly::from_coeffs(coeffs);
      verify_irreducible(f);
      spec.polys.push_back(std::move(f));
    }
    spec.default_modulus = def.modulus;
    spec.builtin = true;
    return spec;
  }
  throw InvalidSpecError("unknown builtin field set: " + name);
}

std::vector<std::string> FieldSpec::builtin_names() {
  std::vector<std::string> names;
  for (const BuiltinDef& def : builtin_table()) names.emplace_back(def.name);
  return names;
}

FieldSpec FieldSpec::from_polys(const std::string& semicolon_list) {
  FieldSpec spec;
  spec.name = "custom";
  size_t start = 0;
  while (start <= semicolon_list.size()) {
    const size_t stop = semicolon_list.find(';', start);
    const std::string piece =
        semicolon_list.substr(start, stop == std::string::npos ? stop : stop - start);
    if (!piece.empty()) {
      ZPoly f = ZPoly::parse(piece);
      verify_irreducible(f);
      spec.polys.push_back(std::move(f));
    }
    if (stop == std::string::npos) break;
    start = stop + 1;
  }
  if (spec.polys.empty()) throw InvalidSpecError("no polynomials in field spec");
  return spec;
}

SplitReport is_totally_split_set(const FieldSpec& spec, long p) {
  if (!is_prime(p)) throw BadPrimeError(std::to_string(p) + " is not prime");
  SplitReport report;
  report.prime = p;
  report.totally_split = true;
  for (const ZPoly& f : spec.polys) {
    std::string verdict;
    if (f.degree() < 1 ||
        mpz_fdiv_ui(f.lead().get_mpz_t(), static_cast<unsigned long>(p)) == 0) {
      verdict = "ramified";
    } else {
      const FpV fbar = fp_reduce(f, p);
      if (fp_gcd(fbar, fp_derivative(fbar, p), p).size() != 1)
        verdict = "ramified";
      else
        verdict = is_totally_split(f, p) ? "split" : "inert-pattern";
    }
    if (verdict != "split") report.totally_split = false;
    report.verdicts.push_back(std::move(verdict));
  }
  return report;
}

// ------------------------------------------------------------ compositum ---

namespace {

using QPoly = std::vector<mpq_class>;  // no leading zeros

void qp_trim(QPoly& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

bool qp_is_zero(const QPoly& v) { return v.empty(); }

QPoly qp_add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  qp_trim(r);
  return r;
}

QPoly qp_scale(QPoly a, const mpq_class& s) {
  for (auto& x : a) x *= s;
  qp_trim(a);
  return a;
}

QPoly qp_sub(const QPoly& a, const QPoly& b) { return qp_add(a, qp_scale(b, -1)); }

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  qp_trim(r);
  return r;
}

// Division with remainder; exact = true asserts remainder 0 (Bareiss).
QPoly qp_divmod(QPoly a, const QPoly& b, QPoly* remainder) {
  QPoly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
  while (a.size() >= b.size() && !a.empty()) {
    const mpq_class factor = a.back() / b.back();
    const size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    qp_trim(a);
  }
  if (remainder) *remainder = a;
  qp_trim(q);
  return q;
}

QPoly qp_div_exact(const QPoly& a, const QPoly& b) {
  QPoly rem;
  QPoly q = qp_divmod(a, b, &rem);
  if (!qp_is_zero(rem))
    throw InvalidSpecError("internal: inexact polynomial division in resultant");
  return q;
}

QPoly qp_gcd(QPoly a, QPoly b) {
  while (!qp_is_zero(b)) {
    QPoly r;
    qp_divmod(a, b, &r);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

QPoly qp_derivative(const QPoly& a) {
  if (a.size() <= 1) return {};
  QPoly d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = a[i] * static_cast<long>(i);
  qp_trim(d);
  return d;
}

QPoly qp_from_z(const mpz_class& z) {
  QPoly v;
  if (z != 0) v.push_back(mpq_class(z));
  return v;
}

// Determinant of a matrix over Q[x] by fraction-free (Bareiss) elimination.
QPoly qp_det(std::vector<std::vector<QPoly>> m) {
  const size_t n = m.size();
  int sign = 1;
  QPoly prev{mpq_class(1)};
  for (size_t k = 0; k + 1 < n; ++k) {
    if (qp_is_zero(m[k][k])) {
      size_t swap_row = k + 1;
      while (swap_row < n && qp_is_zero(m[swap_row][k])) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = qp_div_exact(qp_sub(qp_mul(m[i][j], m[k][k]), qp_mul(m[i][k], m[k][j])),
                               prev);
      }
      m[i][k] = {};
    }
    prev = m[k][k];
  }
  QPoly det = m[n - 1][n - 1];
  if (sign < 0) det = qp_scale(std::move(det), -1);
  return det;
}

ZPoly qp_to_primitive_zpoly(const QPoly& q) {
  if (q.empty()) return ZPoly::zero();
  mpz_class den = 1;
  for (const auto& x : q) {
    mpz_class d = x.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    den = den / g * d;
  }
  ZPoly f;
  f.c.resize(q.size());
  for (size_t i = 0; i < q.size(); ++i) {
    mpq_class scaled = q[i] * mpq_class(den);
    f.c[i] = scaled.get_num();
  }
  mpz_class content = 0;
  for (const auto& x : f.c) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_mpz_t());
  if (content != 0)
    for (auto& x : f.c) x /= content;
  if (!f.c.empty() && f.c.back() < 0)
    for (auto& x : f.c) x = -x;
  f.normalize();
  return f;
}

}  // namespace

ZPoly compositum_poly(const ZPoly& f, const ZPoly& g) {
  if (f.degree() < 1 || g.degree() < 1)
    throw InvalidSpecError("compositum needs polynomials of degree >= 1");
  const long m = g.degree();  // deg_y of A = g(y)
  const long n = f.degree();  // deg_y of B = f(x - k y)
  for (long k = 1; k <= 20; ++k) {
    // B(y) = f(x - k y): coefficients in Q[x] by y-degree.
    std::vector<QPoly> B(n + 1);
    std::vector<QPoly> upow{{mpq_class(1)}};  // (x - k y)^0
    for (long i = 0; i <= f.degree(); ++i) {
      if (f.c[i] != 0)
        for (size_t j = 0; j < upow.size(); ++j)
          B[j] = qp_add(B[j], qp_scale(upow[j], mpq_class(f.c[i])));
      if (i == f.degree()) break;
      // multiply upow by (x - k y)
      std::vector<QPoly> next(upow.size() + 1);
      for (size_t j = 0; j < upow.size(); ++j) {
        next[j] = qp_add(next[j], qp_mul(upow[j], QPoly{0, 1}));       // * x
        next[j + 1] = qp_add(next[j + 1], qp_scale(upow[j], -k));      // * (-k y)
      }
      upow = std::move(next);
    }
    std::vector<QPoly> A(m + 1);
    for (long j = 0; j <= m; ++j) A[j] = qp_from_z(g.c[j]);

    // Sylvester matrix of A (degree m) and B (degree n) in y.
    const size_t N = static_cast<size_t>(m + n);
    std::vector<std::vector<QPoly>> syl(N, std::vector<QPoly>(N));
    for (long row = 0; row < n; ++row)
      for (long j = 0; j <= m; ++j) syl[row][row + j] = A[m - j];
    for (long row = 0; row < m; ++row)
      for (long j = 0; j <= n; ++j) syl[n + row][row + j] = B[n - j];

    const QPoly res = qp_det(std::move(syl));
    if (qp_is_zero(res)) continue;
    const QPoly common = qp_gcd(res, qp_derivative(res));
    if (common.size() != 1) continue;  // not squarefree over Q
    return qp_to_primitive_zpoly(res);
  }
  throw NoShiftFoundError("no shift k <= 20 yields a squarefree resultant for " +
                          f.to_string() + " and " + g.to_string());
}

// --------------------------------------------------- congruence classes ----

long euler_phi(long m) {
  long result = m;
  long n = m;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CongruenceReport congruence_classes(const FieldSpec& spec, long modulus, int primes_per_class,
                                    bool allow_heuristic) {
  if (modulus < 2) throw InvalidSpecError("modulus must be >= 2");
  if (primes_per_class < 1) throw InvalidSpecError("primes_per_class must be >= 1");
  if (!spec.builtin && !allow_heuristic)
    throw NonAbelianSpecError(
        "congruence description is certified for builtin (abelian) specs only; "
        "pass allow_heuristic to search anyway");
  CongruenceReport report;
  report.modulus = modulus;
  report.exact = spec.builtin;
  for (long r = 1; r < modulus; ++r) {
    if (std::gcd(r, modulus) != 1) continue;
    std::vector<long> found;
    bool all_split = true;
    // Walk p = r, r + M, r + 2M, ... and test the first k primes. The cap is
    // a safety valve far beyond any first prime in the progressions used.
    const long cap = std::max(10'000'000L, 10'000L * modulus);
    for (long p = r; static_cast<int>(found.size()) < primes_per_class && p < cap;
         p += modulus) {
      if (p < 2 || !is_prime(p)) continue;
      if (!is_totally_split_set(spec, p).totally_split) {
        all_split = false;
        break;
      }
      found.push_back(p);
    }
    if (all_split && static_cast<int>(found.size()) == primes_per_class) {
      report.classes.push_back(r);
      report.witnesses.emplace(r, std::move(found));
    }
  }
  report.subgroup_closed = !report.classes.empty();
  for (long a : report.classes)
    for (long b : report.classes) {
      const long prod = static_cast<long>((static_cast<__int128>(a) * b) % modulus);
      if (!std::binary_search(report.classes.begin(), report.classes.end(), prod))
        report.subgroup_closed = false;
    }
  if (report.subgroup_closed) {
    const long phi = euler_phi(modulus);
    if (phi % static_cast<long>(report.classes.size()) == 0)
      report.subgroup_index = phi / static_cast<long>(report.classes.size());
  }
  return report;
}

// ------------------------------------------------- Taylor–Wiles checks -----

TWReport taylor_wiles_prime_check(long p, const FieldSpec& spec, const std::string& role) {
  if (role != "p" && role != "ell")
    throw InvalidSpecError("role must be 'p' or 'ell', got " + role);
  TWReport report;
  report.prime = p;
  report.role = role;
  const SplitReport sr = is_totally_split_set(spec, p);
  if (role == "p") {
    report.items.push_back(
        {"p > 8", p > 8, "2(n+1) bound for n = 3; p = " + std::to_string(p)});
    const long deg_e = spec.polys.front().degree();
    report.items.push_back({"zeta_p outside E", p - 1 > deg_e,
                            "p - 1 = " + std::to_string(p - 1) + " > [E:Q] = " +
                                std::to_string(deg_e)});
  }
  std::string detail;
  for (size_t i = 0; i < sr.verdicts.size(); ++i) {
    if (i) detail += ", ";
    detail += spec.polys[i].to_string() + ": " + sr.verdicts[i];
  }
  report.items.push_back({"totally split", sr.totally_split, detail});
  report.overall = true;
  for (const TWItem& item : report.items) report.overall = report.overall && item.pass;
  return report;
}

DensityCount split_density(const ZPoly& f, long bound) {
  DensityCount count;
  for (long p = 2; p < bound; ++p) {
    if (!is_prime(p)) continue;
    if (mpz_fdiv_ui(f.lead().get_mpz_t(), static_cast<unsigned long>(p)) == 0) continue;
    const FpV fbar = fp_reduce(f, p);
    if (fp_gcd(fbar, fp_derivative(fbar, p), p).size() != 1) continue;  // ramified
    ++count.tested;
    if (is_totally_split(f, p)) ++count.split;
  }
  return count;
}

}  // namespace steinberg::numtheory
