#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ordertree/fp.hpp"
#include "ordertree/mat.hpp"
#include "ordertree/zlinalg.hpp"

namespace ordertree {

// K = Q[x]/(f), f monic integral of degree n >= 2, squarefree (verified via
// disc != 0). Irreducibility gets a mod-p certificate when one is found among
// primes <= 1000; otherwise the field is accepted with cert_prime unset.
class NumberField {
 public:
  static std::shared_ptr<const NumberField> make(std::vector<Int> coeffs);

  int degree() const { return n_; }
  const std::vector<Int>& poly() const { return f_; }
  const Int& disc() const { return disc_; }
  std::optional<unsigned long> cert_prime() const { return cert_prime_; }
  // row k = coordinates of x^{n+k} mod f, 0 <= k <= n-2
  const IntMat& xpow_reduction() const { return xpow_; }

  std::string describe() const;

 private:
  NumberField() = default;
  int n_ = 0;
  std::vector<Int> f_;  // ascending, f_[n] = 1
  Int disc_;
  std::optional<unsigned long> cert_prime_;
  IntMat xpow_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of K as rational coordinates over the power basis, stored with a
// common positive denominator, gcd(den, content(num)) = 1.
struct NfElem {
  FieldPtr K;
  std::vector<Int> num;
  Int den = 1;

  NfElem() = default;
  NfElem(FieldPtr field, std::vector<Int> numerators, Int denominator);

  void normalize();
  bool is_zero() const;
  bool operator==(const NfElem& o) const { return num == o.num && den == o.den; }
};

NfElem nf_zero(const FieldPtr& K);
NfElem nf_one(const FieldPtr& K);
NfElem nf_from_int(const FieldPtr& K, const Int& a);
NfElem nf_gen(const FieldPtr& K);  // the class of x

NfElem nf_add(const NfElem& a, const NfElem& b);
NfElem nf_sub(const NfElem& a, const NfElem& b);
NfElem nf_neg(const NfElem& a);
NfElem nf_mul(const NfElem& a, const NfElem& b);
NfElem nf_mul_int(const NfElem& a, const Int& c);
NfElem nf_inv(const NfElem& a);
NfElem nf_pow(const NfElem& a, const Int& e);  // e >= 0

// Row k = coordinates of a * x^k; returned as an integer matrix over a common
// denominator: rep(a) = M / den.
std::pair<IntMat, Int> rep_matrix(const NfElem& a);

Rat nf_norm(const NfElem& a);
Rat nf_trace(const NfElem& a);
std::pair<Rat, Rat> nf_norm_trace(const NfElem& a);

// Evaluate an integer-coefficient polynomial at a.
NfElem nf_eval_zpoly(const std::vector<Int>& g, const NfElem& a);

}  // namespace ordertree
