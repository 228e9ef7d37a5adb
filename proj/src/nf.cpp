#include "ordertree/nf.hpp"

#include <sstream>

namespace ordertree {

namespace {

// disc(f) = (-1)^{n(n-1)/2} Res(f, f') and Res(f, g) = det g(C_f) for monic f.
Int poly_disc(const std::vector<Int>& f, int n) {
  IntMat C(n, n);  // companion: row k = coords of x * x^k mod f
  for (int k = 0; k + 1 < n; ++k) C(k, k + 1) = 1;
  for (int j = 0; j < n; ++j) C(n - 1, j) = -f[j];
  IntMat G(n, n), P = IntMat::identity(n);
  for (int k = 0; k < n; ++k) {  // G = f'(C) = sum (k+1) f_{k+1} C^k
    Int coef = Int(k + 1) * f[k + 1];
    if (coef != 0)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) G(i, j) += coef * P(i, j);
    if (k + 1 < n) P = mat_mul(P, C);
  }
  Int res = det_bareiss(G);
  long s = (static_cast<long>(n) * (n - 1) / 2) % 2;
  return s ? Int(-res) : res;
}

}  // namespace

std::shared_ptr<const NumberField> NumberField::make(std::vector<Int> coeffs) {
  OT_CHECK(coeffs.size() >= 3, ErrorCode::Precondition, "degree must be >= 2");
  OT_CHECK(coeffs.back() == 1, ErrorCode::Precondition, "polynomial must be monic");
  auto K = std::shared_ptr<NumberField>(new NumberField());
  K->n_ = static_cast<int>(coeffs.size()) - 1;
  K->f_ = std::move(coeffs);
  K->disc_ = poly_disc(K->f_, K->n_);
  OT_CHECK(K->disc_ != 0, ErrorCode::Precondition, "polynomial is not squarefree");

  const int n = K->n_;
  K->xpow_ = IntMat(n - 1, n);
  std::vector<Int> cur(n);  // x^n mod f
  for (int j = 0; j < n; ++j) cur[j] = -K->f_[j];
  for (int k = 0; k < n - 1; ++k) {
    K->xpow_.set_row(k, cur);
    // multiply by x
    Int lead = cur[n - 1];
    for (int j = n - 1; j > 0; --j) cur[j] = cur[j - 1];
    cur[0] = 0;
    if (lead != 0)
      for (int j = 0; j < n; ++j) cur[j] -= lead * K->f_[j];
  }

  // mod-p irreducibility certificate over primes <= 1000 not dividing disc
  for (unsigned long p = 2; p <= 1000; ++p) {
    if (!is_probable_prime(Int(p))) continue;
    if (divides(Int(p), K->disc_)) continue;
    FpPoly fp(p);
    for (const Int& c : K->f_) fp.c.push_back(fp_from_int(c, p));
    fp.trim();
    if (fp.deg() == n && fp_poly_is_irreducible(fp)) {
      K->cert_prime_ = p;
      break;
    }
  }
  return K;
}

std::string NumberField::describe() const {
  std::ostringstream os;
  os << "x^" << n_;
  for (int i = n_ - 1; i >= 0; --i)
    if (f_[i] != 0) os << (f_[i] > 0 ? "+" : "") << f_[i].get_str() << (i ? "*x^" + std::to_string(i) : "");
  return os.str();
}

NfElem::NfElem(FieldPtr field, std::vector<Int> numerators, Int denominator)
    : K(std::move(field)), num(std::move(numerators)), den(std::move(denominator)) {
  OT_ASSERT(static_cast<int>(num.size()) == K->degree(), "element coordinate count");
  normalize();
}

void NfElem::normalize() {
  OT_ASSERT(den != 0, "zero denominator");
  if (den < 0) {
    den = -den;
    for (auto& x : num) x = -x;
  }
  Int g = den;
  for (const auto& x : num) g = int_gcd(g, x);
  if (g > 1) {
    den = divexact(den, g);
    for (auto& x : num) x = divexact(x, g);
  }
}

bool NfElem::is_zero() const {
  for (const auto& x : num)
    if (x != 0) return false;
  return true;
}

NfElem nf_zero(const FieldPtr& K) { return NfElem(K, std::vector<Int>(K->degree(), 0), 1); }

NfElem nf_one(const FieldPtr& K) {
  std::vector<Int> v(K->degree(), 0);
  v[0] = 1;
  return NfElem(K, std::move(v), 1);
}

NfElem nf_from_int(const FieldPtr& K, const Int& a) {
  std::vector<Int> v(K->degree(), 0);
  v[0] = a;
  return NfElem(K, std::move(v), 1);
}

NfElem nf_gen(const FieldPtr& K) {
  std::vector<Int> v(K->degree(), 0);
  v[1] = 1;
  return NfElem(K, std::move(v), 1);
}

static void check_same_field(const NfElem& a, const NfElem& b) {
  OT_CHECK(a.K == b.K, ErrorCode::Precondition, "elements of different fields");
}

NfElem nf_add(const NfElem& a, const NfElem& b) {
  check_same_field(a, b);
  Int l = int_lcm(a.den, b.den);
  Int fa = divexact(l, a.den), fb = divexact(l, b.den);
  std::vector<Int> v(a.num.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.num[i] * fa + b.num[i] * fb;
  return NfElem(a.K, std::move(v), l);
}

NfElem nf_sub(const NfElem& a, const NfElem& b) { return nf_add(a, nf_neg(b)); }

NfElem nf_neg(const NfElem& a) {
  std::vector<Int> v = a.num;
  for (auto& x : v) x = -x;
  return NfElem(a.K, std::move(v), a.den);
}

NfElem nf_mul(const NfElem& a, const NfElem& b) {
  check_same_field(a, b);
  const int n = a.K->degree();
  std::vector<Int> prod(2 * n - 1);
  for (int i = 0; i < n; ++i) {
    if (a.num[i] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (b.num[j] == 0) continue;
      prod[i + j] += a.num[i] * b.num[j];
    }
  }
  const IntMat& red = a.K->xpow_reduction();
  std::vector<Int> v(prod.begin(), prod.begin() + n);
  for (int k = n; k < 2 * n - 1; ++k) {
    if (prod[k] == 0) continue;
    for (int j = 0; j < n; ++j) v[j] += prod[k] * red(k - n, j);
  }
  return NfElem(a.K, std::move(v), a.den * b.den);
}

NfElem nf_mul_int(const NfElem& a, const Int& c) {
  std::vector<Int> v = a.num;
  for (auto& x : v) x *= c;
  return NfElem(a.K, std::move(v), a.den);
}

std::pair<IntMat, Int> rep_matrix(const NfElem& a) {
  const int n = a.K->degree();
  IntMat M(n, n);
  NfElem cur = a;
  NfElem x = nf_gen(a.K);
  Int den = 1;
  std::vector<std::pair<std::vector<Int>, Int>> rows;
  for (int k = 0; k < n; ++k) {
    rows.emplace_back(cur.num, cur.den);
    den = int_lcm(den, cur.den);
    if (k + 1 < n) cur = nf_mul(cur, x);
  }
  for (int k = 0; k < n; ++k) {
    Int f = divexact(den, rows[k].second);
    for (int j = 0; j < n; ++j) M(k, j) = rows[k].first[j] * f;
  }
  return {M, den};
}

NfElem nf_inv(const NfElem& a) {
  OT_CHECK(!a.is_zero(), ErrorCode::Precondition, "inverse of zero");
  const int n = a.K->degree();
  auto [M, den] = rep_matrix(a);
  // solve v * (M/den) = e_0
  RatMat R(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) R(i, j) = Rat(M(i, j), den);
  RatMat Inv = rat_inverse(std::move(R));
  // first row of Inv is e_0 * M^{-1}
  std::vector<Int> num(n);
  Int l = 1;
  for (int j = 0; j < n; ++j) l = int_lcm(l, Int(Inv(0, j).get_den()));
  for (int j = 0; j < n; ++j) num[j] = Int(Inv(0, j).get_num()) * divexact(l, Int(Inv(0, j).get_den()));
  return NfElem(a.K, std::move(num), l);
}

NfElem nf_pow(const NfElem& a, const Int& e) {
  OT_ASSERT(e >= 0, "nf_pow negative exponent");
  NfElem r = nf_one(a.K), base = a;
  Int m = e;
  while (m > 0) {
    if (mpz_odd_p(m.get_mpz_t())) r = nf_mul(r, base);
    base = nf_mul(base, base);
    m >>= 1;
  }
  return r;
}

Rat nf_norm(const NfElem& a) {
  auto [M, den] = rep_matrix(a);
  Rat r(det_bareiss(M), int_pow(den, a.K->degree()));
  r.canonicalize();
  return r;
}

Rat nf_trace(const NfElem& a) {
  auto [M, den] = rep_matrix(a);
  Int t = 0;
  for (int i = 0; i < M.rows(); ++i) t += M(i, i);
  Rat r(t, den);
  r.canonicalize();
  return r;
}

std::pair<Rat, Rat> nf_norm_trace(const NfElem& a) { return {nf_norm(a), nf_trace(a)}; }

NfElem nf_eval_zpoly(const std::vector<Int>& g, const NfElem& a) {
  NfElem r = nf_zero(a.K);
  for (auto it = g.rbegin(); it != g.rend(); ++it) r = nf_add(nf_mul(r, a), nf_from_int(a.K, *it));
  return r;
}

}  // namespace ordertree
