#pragma once

#include <string>

#include "ordertree/nf.hpp"

namespace ordertree {

// Full rank-n Z-lattice in K, canonical form: positive denominator, basis in
// unique row HNF, gcd(den, content(basis)) = 1. Equality of lattices is
// equality of (den, basis).
class Lattice {
 public:
  Lattice() = default;
  // rows / den spans the lattice; rows need not be independent but must span.
  static Lattice from_rows(FieldPtr K, IntMat rows, Int den);
  static Lattice from_elems(const std::vector<NfElem>& gens);
  static Lattice equation_order(const FieldPtr& K);  // Z[x]/(f), identity basis

  const FieldPtr& field() const { return K_; }
  const Int& den() const { return den_; }
  const IntMat& basis() const { return basis_; }
  int dim() const { return basis_.rows(); }

  NfElem basis_element(int i) const;
  std::vector<NfElem> basis_elements() const;

  bool operator==(const Lattice& o) const { return den_ == o.den_ && basis_ == o.basis_; }
  bool operator!=(const Lattice& o) const { return !(*this == o); }

  // canonical comparison key, usable as a hash/map key
  std::string key() const;

  std::string to_json(bool as_order = false) const;
  static Lattice from_json(const FieldPtr& K, const std::string& text);

 private:
  FieldPtr K_;
  Int den_ = 1;
  IntMat basis_;
};

Lattice lat_add(const Lattice& I, const Lattice& J);
Lattice lat_intersect(const Lattice& I, const Lattice& J);
Lattice lat_mul(const Lattice& I, const Lattice& J);
Lattice lat_pow(const Lattice& I, const Int& m);  // m >= 1
Lattice lat_colon(const Lattice& I, const Lattice& J);
Lattice lat_dual(const Lattice& I);

// scalar and element multiples
Lattice lat_scale_int(const Lattice& I, const Int& c);
Lattice lat_scale_rat(const Lattice& I, const Rat& c);
Lattice lat_elem_mul(const Lattice& I, const NfElem& z);

// generalized index [I : J] as a positive rational
Rat lat_index(const Lattice& I, const Lattice& J);

bool lat_contains(const Lattice& I, const NfElem& a);
bool lat_subset(const Lattice& A, const Lattice& B);  // A subset of B

// representative of a + I with coordinates in the HNF fundamental box
NfElem lat_reduce_elem(const NfElem& a, const Lattice& I);

// lattice spanned by I together with extra elements
Lattice lat_extend(const Lattice& I, const std::vector<NfElem>& elems);

// smallest multiplicatively closed lattice containing I (I must sit inside
// some order for this to terminate; callers guarantee that)
Lattice lat_ring_closure(Lattice I);

}  // namespace ordertree
