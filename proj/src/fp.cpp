#include "ordertree/fp.hpp"

#include <algorithm>
#include <string>

namespace ordertree {

fp_t fp_pow(fp_t a, uint64_t e, fp_t p) {
  fp_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = fp_mul(r, a, p);
    a = fp_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

fp_t fp_inv(fp_t a, fp_t p) {
  OT_ASSERT(a % p != 0, "fp_inv of zero");
  return fp_pow(a, p - 2, p);
}

fp_t fp_from_int(const Int& a, fp_t p) {
  Int r = int_mod(a, Int(static_cast<unsigned long>(p)));
  return r.get_ui();
}

FpMat fp_mat_mul(const FpMat& A, const FpMat& B, fp_t p) {
  OT_ASSERT(A.cols() == B.rows(), "fp_mat_mul shapes");
  FpMat C(A.rows(), B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int k = 0; k < A.cols(); ++k) {
      fp_t a = A(i, k);
      if (!a) continue;
      for (int j = 0; j < B.cols(); ++j) C(i, j) = (C(i, j) + a * B(k, j)) % p;
    }
  return C;
}

FpMat fp_mat_pow(FpMat A, uint64_t e, fp_t p) {
  OT_ASSERT(A.rows() == A.cols(), "fp_mat_pow square");
  FpMat R = FpMat::identity(A.rows());
  while (e) {
    if (e & 1) R = fp_mat_mul(R, A, p);
    A = fp_mat_mul(A, A, p);
    e >>= 1;
  }
  return R;
}

std::vector<int> fp_rref(FpMat& M, fp_t p) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < M.cols() && r < M.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < M.rows(); ++i)
      if (M(i, c) % p) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    M.swap_rows(r, piv);
    fp_t inv = fp_inv(M(r, c), p);
    for (int j = 0; j < M.cols(); ++j) M(r, j) = fp_mul(M(r, j), inv, p);
    for (int i = 0; i < M.rows(); ++i) {
      if (i == r) continue;
      fp_t f = M(i, c) % p;
      if (!f) continue;
      for (int j = 0; j < M.cols(); ++j) M(i, j) = fp_sub(M(i, j), fp_mul(f, M(r, j), p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  FpMat R(r, M.cols());
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < M.cols(); ++j) R(i, j) = M(i, j);
  M = R;
  return pivots;
}

FpMat fp_left_kernel(const FpMat& M, fp_t p) {
  // rref of [M^T | I]: rows of the identity block where M^T-part vanished.
  FpMat T = transpose(M);
  int rows = T.rows(), cols = T.cols();
  FpMat aug(rows, cols + rows);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug(i, j) = T(i, j);
    aug(i, cols + i) = 1;
  }
  // eliminate on the first `cols` columns only
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (aug(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    aug.swap_rows(r, piv);
    fp_t inv = fp_inv(aug(r, c), p);
    for (int j = 0; j < aug.cols(); ++j) aug(r, j) = fp_mul(aug(r, j), inv, p);
    for (int i = 0; i < rows; ++i) {
      if (i == r || !aug(i, c)) continue;
      fp_t f = aug(i, c);
      for (int j = 0; j < aug.cols(); ++j) aug(i, j) = fp_sub(aug(i, j), fp_mul(f, aug(r, j), p), p);
    }
    ++r;
  }
  std::vector<int> zero_rows;
  for (int i = r; i < rows; ++i) zero_rows.push_back(i);
  FpMat K(static_cast<int>(zero_rows.size()), rows);
  for (size_t t = 0; t < zero_rows.size(); ++t)
    for (int j = 0; j < rows; ++j) K(static_cast<int>(t), j) = aug(zero_rows[t], cols + j);
  fp_rref(K, p);
  return K;
}

std::optional<std::vector<fp_t>> fp_solve_left(const FpMat& M, const std::vector<fp_t>& t, fp_t p) {
  // Solve x M = t: rref of [M^T | t^T] in augmented form, read solution.
  int rows = M.rows(), cols = M.cols();
  OT_ASSERT(static_cast<int>(t.size()) == cols, "fp_solve_left shapes");
  FpMat aug(cols, rows + 1);
  for (int i = 0; i < cols; ++i) {
    for (int j = 0; j < rows; ++j) aug(i, j) = M(j, i);
    aug(i, rows) = t[i] % p;
  }
  std::vector<int> piv = fp_rref(aug, p);
  std::vector<fp_t> x(rows, 0);
  for (size_t k = 0; k < piv.size(); ++k) {
    if (piv[k] == rows) return std::nullopt;  // inconsistent
    x[piv[k]] = aug(static_cast<int>(k), rows);
  }
  return x;
}

bool fp_in_rowspace(const FpMat& R, const std::vector<fp_t>& v, fp_t p) {
  std::vector<fp_t> r = fp_reduce_by_rref(R, v, p);
  for (fp_t x : r)
    if (x % p) return false;
  return true;
}

std::vector<fp_t> fp_reduce_by_rref(const FpMat& R, std::vector<fp_t> v, fp_t p) {
  for (int i = 0; i < R.rows(); ++i) {
    int c = -1;
    for (int j = 0; j < R.cols(); ++j)
      if (R(i, j)) {
        c = j;
        break;
      }
    if (c < 0) continue;
    fp_t f = v[c] % p;
    if (!f) continue;
    for (int j = 0; j < R.cols(); ++j) v[j] = fp_sub(v[j] % p, fp_mul(f, R(i, j), p), p);
  }
  return v;
}

FpPoly fp_poly_add(const FpPoly& a, const FpPoly& b) {
  FpPoly r(a.p);
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = fp_add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)), a.p);
  r.trim();
  return r;
}

FpPoly fp_poly_sub(const FpPoly& a, const FpPoly& b) {
  FpPoly r(a.p);
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = fp_sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)), a.p);
  r.trim();
  return r;
}

FpPoly fp_poly_mul(const FpPoly& a, const FpPoly& b) {
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p);
  FpPoly r(a.p);
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % a.p;
  }
  r.trim();
  return r;
}

FpPoly fp_poly_scale(const FpPoly& a, fp_t s) {
  FpPoly r = a;
  for (auto& x : r.c) x = fp_mul(x, s, a.p);
  r.trim();
  return r;
}

std::pair<FpPoly, FpPoly> fp_poly_divrem(const FpPoly& a, const FpPoly& b) {
  OT_ASSERT(!b.is_zero(), "poly division by zero");
  FpPoly q(a.p), r = a;
  if (r.deg() < b.deg()) return {q, r};
  q.c.assign(r.deg() - b.deg() + 1, 0);
  fp_t leadinv = fp_inv(b.c.back(), a.p);
  for (int i = r.deg(); i >= b.deg(); --i) {
    fp_t coef = fp_mul(r.coeff(i), leadinv, a.p);
    if (!coef) continue;
    q.c[i - b.deg()] = coef;
    for (int j = 0; j <= b.deg(); ++j)
      r.c[i - b.deg() + j] = fp_sub(r.c[i - b.deg() + j], fp_mul(coef, b.c[j], a.p), a.p);
  }
  q.trim();
  r.trim();
  return {q, r};
}

FpPoly fp_poly_mod(const FpPoly& a, const FpPoly& b) { return fp_poly_divrem(a, b).second; }

FpPoly fp_poly_make_monic(FpPoly a) {
  if (a.is_zero() || a.c.back() == 1) return a;
  return fp_poly_scale(a, fp_inv(a.c.back(), a.p));
}

FpPoly fp_poly_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = fp_poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_poly_make_monic(a);
}

FpPoly fp_poly_derivative(const FpPoly& a) {
  FpPoly r(a.p);
  for (int i = 1; i <= a.deg(); ++i) r.c.push_back(fp_mul(a.c[i], i % a.p, a.p));
  r.trim();
  return r;
}

fp_t fp_poly_eval(const FpPoly& a, fp_t x) {
  fp_t r = 0;
  for (int i = a.deg(); i >= 0; --i) r = (r * x + a.c[i]) % a.p;
  return r;
}

FpPoly fp_poly_powmod(FpPoly base, Int e, const FpPoly& m) {
  FpPoly r = FpPoly::constant(base.p, 1);
  base = fp_poly_mod(base, m);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = fp_poly_mod(fp_poly_mul(r, base), m);
    base = fp_poly_mod(fp_poly_mul(base, base), m);
    e >>= 1;
  }
  return r;
}

bool fp_poly_is_irreducible(const FpPoly& g0) {
  FpPoly g = fp_poly_make_monic(g0);
  int n = g.deg();
  if (n <= 0) return false;
  if (n == 1) return true;
  const fp_t p = g.p;
  FpPoly x = FpPoly::x(p);
  // Rabin: x^{p^n} = x mod g, and gcd(x^{p^{n/l}} - x, g) = 1 for primes l | n.
  FpPoly xq = fp_poly_powmod(x, int_pow(Int(static_cast<unsigned long>(p)), n), g);
  if (!(fp_poly_sub(xq, x).is_zero())) return false;
  for (int l = 2; l <= n; ++l) {
    if (n % l) continue;
    bool lprime = true;
    for (int d = 2; d * d <= l; ++d)
      if (l % d == 0) lprime = false;
    if (!lprime) continue;
    FpPoly xql = fp_poly_powmod(x, int_pow(Int(static_cast<unsigned long>(p)), n / l), g);
    if (fp_poly_gcd(fp_poly_sub(xql, x), g).deg() != 0) return false;
  }
  return true;
}

namespace {

void equal_degree_split(const FpPoly& f, int k, std::vector<FpPoly>& out, Rng& rng) {
  if (f.deg() == k) {
    out.push_back(f);
    return;
  }
  const fp_t p = f.p;
  while (true) {
    FpPoly r(p);
    r.c.resize(f.deg());
    for (auto& c : r.c) c = rng.below(p);
    r.trim();
    if (r.deg() < 1) continue;
    FpPoly d(p);
    if (p == 2) {
      // trace map sum_{i<k} r^{2^i}
      FpPoly t = fp_poly_mod(r, f), acc = t;
      for (int i = 1; i < k; ++i) {
        t = fp_poly_mod(fp_poly_mul(t, t), f);
        acc = fp_poly_add(acc, t);
      }
      d = fp_poly_gcd(acc, f);
    } else {
      Int e = (int_pow(Int(static_cast<unsigned long>(p)), k) - 1) / 2;
      FpPoly s = fp_poly_powmod(r, e, f);
      d = fp_poly_gcd(fp_poly_sub(s, FpPoly::constant(p, 1)), f);
    }
    if (d.deg() > 0 && d.deg() < f.deg()) {
      equal_degree_split(d, k, out, rng);
      equal_degree_split(fp_poly_divrem(f, d).first, k, out, rng);
      return;
    }
  }
}

// distinct-degree then equal-degree on a squarefree monic input
void factor_squarefree(FpPoly g, std::vector<FpPoly>& out, Rng& rng) {
  const fp_t p = g.p;
  FpPoly x = FpPoly::x(p);
  FpPoly h = fp_poly_mod(x, g);
  int k = 0;
  while (g.deg() > 0 && g.deg() >= 2 * (k + 1)) {
    ++k;
    h = fp_poly_powmod(h, Int(static_cast<unsigned long>(p)), g);
    FpPoly d = fp_poly_gcd(fp_poly_sub(h, x), g);
    if (d.deg() > 0) {
      equal_degree_split(d, k, out, rng);
      g = fp_poly_divrem(g, d).first;
      h = fp_poly_mod(h, g);
    }
  }
  if (g.deg() > 0) out.push_back(g);
}

void factor_rec(FpPoly g, unsigned long mult, std::vector<std::pair<FpPoly, unsigned long>>& out, Rng& rng) {
  const fp_t p = g.p;
  g = fp_poly_make_monic(g);
  if (g.deg() <= 0) return;
  FpPoly d = fp_poly_derivative(g);
  if (d.is_zero()) {
    // g = h(x^p); coefficients are fixed by Frobenius on F_p
    FpPoly h(p);
    for (int i = 0; i <= g.deg(); i += static_cast<int>(p)) h.c.push_back(g.coeff(i));
    h.trim();
    factor_rec(h, mult * p, out, rng);
    return;
  }
  FpPoly c = fp_poly_gcd(g, d);
  FpPoly w = fp_poly_divrem(g, c).first;
  unsigned long i = 1;
  while (w.deg() > 0) {
    FpPoly y = fp_poly_gcd(w, c);
    FpPoly fac = fp_poly_divrem(w, y).first;
    if (fac.deg() > 0) {
      std::vector<FpPoly> irr;
      factor_squarefree(fac, irr, rng);
      for (auto& q : irr) out.emplace_back(q, mult * i);
    }
    w = y;
    c = fp_poly_divrem(c, y).first;
    ++i;
  }
  if (c.deg() > 0) factor_rec(c, mult, out, rng);
}

}  // namespace

std::vector<std::pair<FpPoly, unsigned long>> fp_poly_factor(const FpPoly& g) {
  OT_CHECK(!g.is_zero(), ErrorCode::Precondition, "factor of zero polynomial");
  Rng rng(derived_seed("fp_poly_factor"));
  std::vector<std::pair<FpPoly, unsigned long>> out;
  factor_rec(g, 1, out, rng);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
    return a.first.c < b.first.c;
  });
  return out;
}

std::vector<fp_t> fp_poly_roots(const FpPoly& g) {
  std::vector<fp_t> roots;
  for (auto& [q, m] : fp_poly_factor(g))
    if (q.deg() == 1) roots.push_back(fp_neg(q.c[0], g.p));
  std::sort(roots.begin(), roots.end());
  return roots;
}

FqField fq_make_from_modulus(fp_t p, int f, FpPoly modulus) {
  FqField F;
  F.p = p;
  F.f = f;
  F.modulus = std::move(modulus);
  F.q = int_pow(Int(static_cast<unsigned long>(p)), f);
  OT_CHECK(mpz_sizeinbase(F.q.get_mpz_t(), 2) <= 63, ErrorCode::Precondition, "p^f must be < 2^63");
  return F;
}

FqField fq_make(fp_t p, int f) {
  OT_CHECK(f >= 1, ErrorCode::Precondition, "fq_make needs f >= 1");
  OT_CHECK(is_probable_prime(Int(static_cast<unsigned long>(p))), ErrorCode::Precondition, "fq_make needs prime p");
  if (f == 1) return fq_make_from_modulus(p, 1, FpPoly(p, {0, 1}));
  // lexicographic candidates t^f + (base-p digits of counter)
  uint64_t scan_budget = 4096;
  for (uint64_t counter = 0; counter < scan_budget; ++counter) {
    FpPoly g(p);
    g.c.assign(f + 1, 0);
    g.c[f] = 1;
    uint64_t v = counter;
    for (int i = 0; i < f && v; ++i, v /= p) g.c[i] = v % p;
    if (v) break;  // exhausted representable candidates
    if (fp_poly_is_irreducible(g)) return fq_make_from_modulus(p, f, g);
  }
  Rng rng(derived_seed("fq_make"));
  for (int tries = 0; tries < 65536; ++tries) {
    FpPoly g(p);
    g.c.assign(f + 1, 0);
    g.c[f] = 1;
    for (int i = 0; i < f; ++i) g.c[i] = rng.below(p);
    if (fp_poly_is_irreducible(g)) return fq_make_from_modulus(p, f, g);
  }
  fail(ErrorCode::Budget, "no irreducible modulus found within budget");
}

FqElem fq_add(const FqField& F, const FqElem& a, const FqElem& b) { return fp_poly_add(a, b); }
FqElem fq_sub(const FqField& F, const FqElem& a, const FqElem& b) { return fp_poly_sub(a, b); }
FqElem fq_mul(const FqField& F, const FqElem& a, const FqElem& b) { return fp_poly_mod(fp_poly_mul(a, b), F.modulus); }

FqElem fq_pow(const FqField& F, FqElem a, Int e) {
  OT_ASSERT(e >= 0, "fq_pow negative exponent");
  return fp_poly_powmod(std::move(a), std::move(e), F.modulus);
}

FqElem fq_inv(const FqField& F, const FqElem& a) {
  OT_ASSERT(!a.is_zero(), "fq_inv of zero");
  return fq_pow(F, a, F.q - 2);
}

FqElem fq_one(const FqField& F) { return FpPoly::constant(F.p, 1); }
FqElem fq_zero(const FqField& F) { return FpPoly(F.p); }

FqElem fq_from_encoding(const FqField& F, uint64_t enc) {
  FpPoly a(F.p);
  while (enc) {
    a.c.push_back(enc % F.p);
    enc /= F.p;
  }
  a.trim();
  OT_ASSERT(a.deg() < F.f, "encoding out of range");
  return a;
}

bool fq_is_primitive(const FqField& F, const FqElem& a) {
  if (a.is_zero()) return false;
  OT_CHECK(F.q1_factors.complete(), ErrorCode::Budget, "q-1 not fully factored");
  if (!fp_poly_sub(fq_pow(F, a, F.q - 1), fq_one(F)).is_zero()) return false;
  for (auto& [l, e] : F.q1_factors.factors)
    if (fp_poly_sub(fq_pow(F, a, (F.q - 1) / l), fq_one(F)).is_zero()) return false;
  return true;
}

FqElem fq_primitive_element(FqField& F) {
  if (F.q1_factors.factors.empty() && F.q > 2) F.q1_factors = factor_integer(F.q - 1);
  OT_CHECK(F.q1_factors.complete(), ErrorCode::Budget, "cannot factor p^f - 1 within budget");
  for (uint64_t enc = 1; enc < 1u << 20; ++enc) {
    FqElem a = fq_from_encoding(F, enc);
    if (fq_is_primitive(F, a)) return a;
  }
  fail(ErrorCode::Budget, "no primitive element found");
}

FpPoly fq_minpoly(const FqField& F, const FqElem& a) {
  // Krylov: first dependency among 1, a, a^2, ...
  const fp_t p = F.p;
  std::vector<std::vector<fp_t>> powers;
  FqElem cur = fq_one(F);
  for (int k = 0;; ++k) {
    std::vector<fp_t> row(F.f, 0);
    for (int i = 0; i <= cur.deg(); ++i) row[i] = cur.c[i];
    FpMat M(static_cast<int>(powers.size()), F.f);
    for (size_t i = 0; i < powers.size(); ++i)
      for (int j = 0; j < F.f; ++j) M(static_cast<int>(i), j) = powers[i][j];
    std::optional<std::vector<fp_t>> sol;
    if (!powers.empty()) sol = fp_solve_left(M, row, p);
    if (sol) {
      FpPoly m(p);
      m.c.assign(k + 1, 0);
      for (int i = 0; i < k; ++i) m.c[i] = fp_neg((*sol)[i], p);
      m.c[k] = 1;
      return m;
    }
    powers.push_back(row);
    cur = fq_mul(F, cur, a);
  }
}

// ---- polynomials over F_q (local helpers for root extraction) ----

namespace {

struct FqPoly {
  std::vector<FqElem> c;  // ascending, trimmed
  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
};

FqPoly fqp_add(const FqField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()), fq_zero(F));
  for (size_t i = 0; i < r.c.size(); ++i) {
    FqElem x = i < a.c.size() ? a.c[i] : fq_zero(F);
    FqElem y = i < b.c.size() ? b.c[i] : fq_zero(F);
    r.c[i] = fq_add(F, x, y);
  }
  r.trim();
  return r;
}

FqPoly fqp_sub(const FqField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly nb = b;
  for (auto& x : nb.c) x = fp_poly_sub(FpPoly(F.p), x);
  return fqp_add(F, a, nb);
}

FqPoly fqp_mul(const FqField& F, const FqPoly& a, const FqPoly& b) {
  FqPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, fq_zero(F));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = fq_add(F, r.c[i + j], fq_mul(F, a.c[i], b.c[j]));
  }
  r.trim();
  return r;
}

FqPoly fqp_mod(const FqField& F, FqPoly a, const FqPoly& b) {
  OT_ASSERT(!b.is_zero(), "fqp_mod by zero");
  FqElem leadinv = fq_inv(F, b.c.back());
  while (a.deg() >= b.deg()) {
    FqElem coef = fq_mul(F, a.c.back(), leadinv);
    int shift = a.deg() - b.deg();
    for (int j = 0; j <= b.deg(); ++j)
      a.c[shift + j] = fq_sub(F, a.c[shift + j], fq_mul(F, coef, b.c[j]));
    a.trim();
  }
  return a;
}

FqPoly fqp_divq(const FqField& F, FqPoly a, const FqPoly& b) {
  FqPoly q;
  if (a.deg() < b.deg()) return q;
  q.c.assign(a.deg() - b.deg() + 1, fq_zero(F));
  FqElem leadinv = fq_inv(F, b.c.back());
  while (a.deg() >= b.deg()) {
    FqElem coef = fq_mul(F, a.c.back(), leadinv);
    int shift = a.deg() - b.deg();
    q.c[shift] = coef;
    for (int j = 0; j <= b.deg(); ++j)
      a.c[shift + j] = fq_sub(F, a.c[shift + j], fq_mul(F, coef, b.c[j]));
    a.trim();
  }
  q.trim();
  return q;
}

FqPoly fqp_gcd(const FqField& F, FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = fqp_mod(F, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero() && !(a.c.back() == fq_one(F))) {
    FqElem inv = fq_inv(F, a.c.back());
    for (auto& x : a.c) x = fq_mul(F, x, inv);
  }
  return a;
}

FqPoly fqp_powmod(const FqField& F, FqPoly base, Int e, const FqPoly& m) {
  FqPoly r;
  r.c = {fq_one(F)};
  base = fqp_mod(F, std::move(base), m);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = fqp_mod(F, fqp_mul(F, r, base), m);
    base = fqp_mod(F, fqp_mul(F, base, base), m);
    e >>= 1;
  }
  return r;
}

void fq_collect_roots(const FqField& F, const FqPoly& g, std::vector<FqElem>& roots, Rng& rng) {
  if (g.deg() <= 0) return;
  if (g.deg() == 1) {
    roots.push_back(fq_mul(F, fp_poly_sub(FpPoly(F.p), g.c[0]), fq_inv(F, g.c[1])));
    return;
  }
  while (true) {
    // random degree-1 shift then a splitting map
    FqElem alpha(F.p);
    uint64_t enc = rng.next() % std::min<uint64_t>(F.q.get_ui(), UINT64_MAX);
    alpha = fq_from_encoding(F, enc % F.q.get_ui());
    FqPoly d;
    if (F.p == 2) {
      // trace over F_2 of (r * Y)
      FqPoly rY;
      rY.c = {fq_zero(F), alpha.is_zero() ? fq_one(F) : alpha};
      FqPoly t = fqp_mod(F, rY, g), acc = t;
      long m = 63 - __builtin_clzll(F.q.get_ui());  // q = 2^m
      for (long i = 1; i < m; ++i) {
        t = fqp_mod(F, fqp_mul(F, t, t), g);
        acc = fqp_add(F, acc, t);
      }
      d = fqp_gcd(F, acc, g);
    } else {
      FqPoly shifted;
      shifted.c = {alpha, fq_one(F)};
      FqPoly s = fqp_powmod(F, shifted, (F.q - 1) / 2, g);
      s = fqp_sub(F, s, FqPoly{{fq_one(F)}});
      d = fqp_gcd(F, s, g);
    }
    if (d.deg() > 0 && d.deg() < g.deg()) {
      fq_collect_roots(F, d, roots, rng);
      fq_collect_roots(F, fqp_divq(F, g, d), roots, rng);
      return;
    }
  }
}

}  // namespace

std::vector<FqElem> fq_roots_of_fp_poly(const FqField& F, const FpPoly& h) {
  OT_CHECK(!h.is_zero(), ErrorCode::Precondition, "roots of zero polynomial");
  FqPoly H;
  for (fp_t coef : h.c) H.c.push_back(FpPoly::constant(F.p, coef));
  H.trim();
  // product of the distinct linear factors over F_q
  FqPoly Y;
  Y.c = {fq_zero(F), fq_one(F)};
  FqPoly Yq = fqp_powmod(F, Y, F.q, H);
  FqPoly g = fqp_gcd(F, fqp_sub(F, Yq, Y), H);
  std::vector<FqElem> roots;
  Rng rng(derived_seed("fq_roots"));
  fq_collect_roots(F, g, roots, rng);
  std::sort(roots.begin(), roots.end(), [](const FqElem& a, const FqElem& b) { return a.c < b.c; });
  return roots;
}

// ---- FpAlgebra ----

std::vector<fp_t> FpAlgebra::mul(const std::vector<fp_t>& x, const std::vector<fp_t>& y) const {
  std::vector<fp_t> r(dim, 0);
  for (int i = 0; i < dim; ++i) {
    if (!x[i]) continue;
    // b_i * y = y * mul_by_basis[i]
    for (int rrow = 0; rrow < dim; ++rrow) {
      if (!y[rrow]) continue;
      fp_t f = fp_mul(x[i], y[rrow], p);
      const FpMat& T = mul_by_basis[i];
      for (int j = 0; j < dim; ++j) r[j] = (r[j] + f * T(rrow, j)) % p;
    }
  }
  return r;
}

std::vector<fp_t> FpAlgebra::pow(std::vector<fp_t> x, Int e) const {
  OT_ASSERT(e >= 0, "algebra pow negative");
  std::vector<fp_t> r = one;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

FpMat FpAlgebra::mul_matrix(const std::vector<fp_t>& x) const {
  FpMat M(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (!x[i]) continue;
    for (int r = 0; r < dim; ++r)
      for (int j = 0; j < dim; ++j) M(r, j) = (M(r, j) + x[i] * mul_by_basis[i](r, j)) % p;
  }
  return M;
}

FpPoly algebra_minpoly(const FpAlgebra& A, const std::vector<fp_t>& x) {
  std::vector<std::vector<fp_t>> powers;
  std::vector<fp_t> cur = A.one;
  for (int k = 0;; ++k) {
    FpMat M(static_cast<int>(powers.size()), A.dim);
    for (size_t i = 0; i < powers.size(); ++i)
      for (int j = 0; j < A.dim; ++j) M(static_cast<int>(i), j) = powers[i][j];
    std::optional<std::vector<fp_t>> sol;
    if (!powers.empty()) sol = fp_solve_left(M, cur, A.p);
    if (sol) {
      FpPoly m(A.p);
      m.c.assign(k + 1, 0);
      for (int i = 0; i < k; ++i) m.c[i] = fp_neg((*sol)[i], A.p);
      m.c[k] = 1;
      return m;
    }
    powers.push_back(cur);
    cur = A.mul(cur, x);
    OT_ASSERT(k <= A.dim, "minpoly runaway");
  }
}

std::vector<fp_t> algebra_primitive_element(const FpAlgebra& A, const std::string& seed_tag) {
  auto try_elem = [&](const std::vector<fp_t>& x) { return algebra_minpoly(A, x).deg() == A.dim; };
  for (int i = 0; i < A.dim; ++i) {
    std::vector<fp_t> x(A.dim, 0);
    x[i] = 1;
    if (try_elem(x)) return x;
  }
  for (int i = 0; i < A.dim; ++i)
    for (int j = i + 1; j < A.dim; ++j) {
      std::vector<fp_t> x(A.dim, 0);
      x[i] = 1;
      x[j] = 1;
      if (try_elem(x)) return x;
    }
  Rng rng(derived_seed("algebra_primitive:" + seed_tag));
  for (int tries = 0; tries < 8192; ++tries) {
    std::vector<fp_t> x(A.dim);
    for (auto& v : x) v = rng.below(A.p);
    if (try_elem(x)) return x;
  }
  fail(ErrorCode::Budget, "no primitive element of residue algebra found");
}

std::optional<std::vector<fp_t>> algebra_find_root(const FpAlgebra& A, const FpPoly& h,
                                                   const std::string& seed_tag) {
  if (A.dim == 1) {
    for (fp_t v = 0; v < A.p; ++v)
      if (fp_poly_eval(h, v) == 0) {
        std::vector<fp_t> r = A.one;
        for (auto& x : r) x = fp_mul(x, v, A.p);
        return r;
      }
    return std::nullopt;
  }
  std::vector<fp_t> theta = algebra_primitive_element(A, seed_tag);
  FpPoly mtheta = algebra_minpoly(A, theta);
  FqField F = fq_make_from_modulus(A.p, A.dim, mtheta);
  std::vector<FqElem> roots = fq_roots_of_fp_poly(F, h);
  if (roots.empty()) return std::nullopt;
  // map the first root, a polynomial in theta, back into A
  const FqElem& rho = roots.front();
  std::vector<fp_t> acc(A.dim, 0), tpow = A.one;
  for (int i = 0; i <= rho.deg(); ++i) {
    for (int j = 0; j < A.dim; ++j) acc[j] = (acc[j] + rho.c[i] * tpow[j]) % A.p;
    tpow = A.mul(tpow, theta);
  }
  return acc;
}

}  // namespace ordertree
