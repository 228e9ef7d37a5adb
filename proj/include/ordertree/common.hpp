#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordertree {

using Int = mpz_class;
using Rat = mpq_class;

enum class ErrorCode { Parse = 1, Precondition = 2, Budget = 3, Internal = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode c, const std::string& msg) { throw Error(c, msg); }

#define OT_CHECK(cond, code, msg) \
  do {                            \
    if (!(cond)) ::ordertree::fail(code, msg); \
  } while (0)

// Internal invariants. Kept on in release builds: the enumeration is only
// useful if its invariants actually hold.
#define OT_ASSERT(cond, msg) OT_CHECK(cond, ::ordertree::ErrorCode::Internal, std::string("internal: ") + msg)

inline Int int_pow(const Int& b, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int divexact(const Int& a, const Int& b) {
  Int r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Floor division quotient.
inline Int fdiv_q(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_mod(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& a) { return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0; }

inline bool is_probable_prime(const Int& n) { return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0; }

// Largest e with p^e | n (n != 0).
inline unsigned long valuation(const Int& n, const Int& p) {
  Int m = abs(n);
  unsigned long e = 0;
  while (divides(p, m)) {
    m = divexact(m, p);
    ++e;
  }
  return e;
}

struct Factorization {
  std::vector<std::pair<Int, unsigned long>> factors;
  Int cofactor = 1;  // unfactored part (1 when complete)
  bool complete() const { return cofactor == 1; }
};

// Trial division up to `bound`, then perfect-power extraction and a primality
// test on the cofactor. Anything still composite stays in `cofactor`.
Factorization factor_integer(Int n, unsigned long bound = 1000000, const std::vector<Int>& hints = {});

// splitmix64; used to derive all deterministic "random" search streams.
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }
};

// Global seed: ORDERTREE_SEED if set, else a fixed default.
uint64_t global_seed();

// Derive a stream seed from the global seed and a context tag, so results do
// not depend on call order across threads.
uint64_t derived_seed(const std::string& context);

}  // namespace ordertree
