#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ordertree/common.hpp"
#include "ordertree/mat.hpp"

namespace ordertree {

// Arithmetic mod a prime p < 2^31. Elements live in [0, p).
using fp_t = uint64_t;

inline fp_t fp_add(fp_t a, fp_t b, fp_t p) { fp_t s = a + b; return s >= p ? s - p : s; }
inline fp_t fp_sub(fp_t a, fp_t b, fp_t p) { return a >= b ? a - b : a + p - b; }
inline fp_t fp_mul(fp_t a, fp_t b, fp_t p) { return (a * b) % p; }
fp_t fp_pow(fp_t a, uint64_t e, fp_t p);
fp_t fp_inv(fp_t a, fp_t p);
inline fp_t fp_neg(fp_t a, fp_t p) { return a ? p - a : 0; }
fp_t fp_from_int(const Int& a, fp_t p);

using FpMat = Mat<fp_t>;

FpMat fp_mat_mul(const FpMat& A, const FpMat& B, fp_t p);
FpMat fp_mat_pow(FpMat A, uint64_t e, fp_t p);

// Reduced row echelon form in place; returns pivot columns. Zero rows dropped.
std::vector<int> fp_rref(FpMat& M, fp_t p);

// Basis (rows) of the left kernel {x : x M = 0}.
FpMat fp_left_kernel(const FpMat& M, fp_t p);

// One solution of x M = t, if any.
std::optional<std::vector<fp_t>> fp_solve_left(const FpMat& M, const std::vector<fp_t>& t, fp_t p);

// Is v in the row space of the rref matrix R?
bool fp_in_rowspace(const FpMat& R, const std::vector<fp_t>& v, fp_t p);
// Reduce v by the rref matrix R (pivot entries eliminated).
std::vector<fp_t> fp_reduce_by_rref(const FpMat& R, std::vector<fp_t> v, fp_t p);

// Dense polynomials over F_p, coefficients ascending, no trailing zeros.
struct FpPoly {
  fp_t p = 0;
  std::vector<fp_t> c;

  FpPoly() = default;
  explicit FpPoly(fp_t p_) : p(p_) {}
  FpPoly(fp_t p_, std::vector<fp_t> coeffs) : p(p_), c(std::move(coeffs)) { trim(); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  fp_t coeff(int i) const { return i >= 0 && i < static_cast<int>(c.size()) ? c[i] : 0; }
  bool monic() const { return !c.empty() && c.back() == 1; }
  bool operator==(const FpPoly& o) const { return p == o.p && c == o.c; }

  static FpPoly x(fp_t p) { return FpPoly(p, {0, 1}); }
  static FpPoly constant(fp_t p, fp_t a) { return FpPoly(p, {a % p}); }
};

FpPoly fp_poly_add(const FpPoly& a, const FpPoly& b);
FpPoly fp_poly_sub(const FpPoly& a, const FpPoly& b);
FpPoly fp_poly_mul(const FpPoly& a, const FpPoly& b);
FpPoly fp_poly_scale(const FpPoly& a, fp_t s);
// division with remainder, b != 0
std::pair<FpPoly, FpPoly> fp_poly_divrem(const FpPoly& a, const FpPoly& b);
FpPoly fp_poly_mod(const FpPoly& a, const FpPoly& b);
FpPoly fp_poly_gcd(FpPoly a, FpPoly b);  // monic gcd
FpPoly fp_poly_derivative(const FpPoly& a);
FpPoly fp_poly_make_monic(FpPoly a);
fp_t fp_poly_eval(const FpPoly& a, fp_t x);
// base^e mod m, exponent arbitrary precision
FpPoly fp_poly_powmod(FpPoly base, Int e, const FpPoly& m);

bool fp_poly_is_irreducible(const FpPoly& g);

// Monic irreducible factors with multiplicities; product reproduces g up to
// the leading unit.
std::vector<std::pair<FpPoly, unsigned long>> fp_poly_factor(const FpPoly& g);

// Roots in F_p with multiplicity dropped.
std::vector<fp_t> fp_poly_roots(const FpPoly& g);

// F_{p^f} as F_p[t]/(modulus), modulus monic irreducible of degree f.
struct FqField {
  fp_t p = 0;
  int f = 0;
  FpPoly modulus;
  Int q;        // p^f
  Factorization q1_factors;  // factorization of q - 1

  Int order() const { return q; }
};

using FqElem = FpPoly;  // reduced mod modulus

// Deterministic construction: lexicographic scan of monic candidates, then a
// seeded random search (budgeted).
FqField fq_make(fp_t p, int f);
// Wrap an already verified irreducible modulus.
FqField fq_make_from_modulus(fp_t p, int f, FpPoly modulus);

FqElem fq_add(const FqField& F, const FqElem& a, const FqElem& b);
FqElem fq_sub(const FqField& F, const FqElem& a, const FqElem& b);
FqElem fq_mul(const FqField& F, const FqElem& a, const FqElem& b);
FqElem fq_inv(const FqField& F, const FqElem& a);
FqElem fq_pow(const FqField& F, FqElem a, Int e);
FqElem fq_one(const FqField& F);
FqElem fq_zero(const FqField& F);
FqElem fq_from_encoding(const FqField& F, uint64_t enc);  // base-p digits

// Multiplicative order equals q - 1.
bool fq_is_primitive(const FqField& F, const FqElem& a);
FqElem fq_primitive_element(FqField& F);

// Minimal polynomial over F_p of a in F_q.
FpPoly fq_minpoly(const FqField& F, const FqElem& a);

// All roots in F_q of a polynomial with F_p coefficients.
std::vector<FqElem> fq_roots_of_fp_poly(const FqField& F, const FpPoly& h);

// A finite commutative F_p-algebra given by structure constants:
// basis b_0..b_{m-1}, table(i,j) = coordinates of b_i * b_j.
struct FpAlgebra {
  fp_t p = 0;
  int dim = 0;
  std::vector<FpMat> mul_by_basis;  // mul_by_basis[i]: row r = coords of b_i * b_r
  std::vector<fp_t> one;            // coordinates of the multiplicative unit

  std::vector<fp_t> mul(const std::vector<fp_t>& x, const std::vector<fp_t>& y) const;
  std::vector<fp_t> pow(std::vector<fp_t> x, Int e) const;
  FpMat mul_matrix(const std::vector<fp_t>& x) const;  // row r = coords of x * b_r
};

FpPoly algebra_minpoly(const FpAlgebra& A, const std::vector<fp_t>& x);

// Element whose minimal polynomial has degree = dim (so it generates A as an
// F_p-algebra when A is a field). Deterministic scan then seeded search.
std::vector<fp_t> algebra_primitive_element(const FpAlgebra& A, const std::string& seed_tag);

// Root of h (coefficients in F_p) inside the field A, or nullopt. A must be a
// finite field presented by its multiplication table.
std::optional<std::vector<fp_t>> algebra_find_root(const FpAlgebra& A, const FpPoly& h,
                                                   const std::string& seed_tag);

}  // namespace ordertree
