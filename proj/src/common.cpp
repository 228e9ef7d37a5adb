#include "ordertree/common.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>

namespace ordertree {

namespace {

// Pollard rho with Brent cycle detection; n odd composite, no small factors.
Int pollard_rho(const Int& n, Rng& rng) {
  if (divides(Int(2), n)) return 2;
  while (true) {
    Int y = Int(rng.next()) % n, c = Int(rng.next()) % n + 1, m = 128;
    Int g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
      x = y;
      for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
      Int k = 0;
      while (k < r && g == 1) {
        ys = y;
        Int lim = std::min(m, Int(r - k));
        for (Int i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = int_gcd(q, n);
        k += m;
      }
      r *= 2;
      if (r > 1000000) break;  // give up on this c
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = int_gcd(abs(x - ys), n);
      }
    }
    if (g != n && g != 1) return g;
    if (r > 1000000) return 1;  // signal failure
  }
}

void push_factor(Factorization& f, const Int& p, unsigned long e) {
  for (auto& pe : f.factors)
    if (pe.first == p) {
      pe.second += e;
      return;
    }
  f.factors.emplace_back(p, e);
}

// Fully factor n into f assuming it will succeed; returns false when a
// composite piece resists (left in f.cofactor by the caller).
bool factor_rec(Int n, Factorization& f, Rng& rng, int depth) {
  if (n == 1) return true;
  if (is_probable_prime(n)) {
    push_factor(f, n, 1);
    return true;
  }
  {
    mpz_t root;
    mpz_init(root);
    if (mpz_perfect_power_p(n.get_mpz_t())) {
      for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
        if (mpz_root(root, n.get_mpz_t(), k) != 0) {
          Int base(mpz_class(root));
          mpz_clear(root);
          Factorization sub;
          if (!factor_rec(base, sub, rng, depth + 1)) return false;
          for (auto& pe : sub.factors) push_factor(f, pe.first, pe.second * k);
          return true;
        }
      }
    }
    mpz_clear(root);
  }
  if (depth > 64) return false;
  Int d = pollard_rho(n, rng);
  if (d == 1 || d == n) return false;
  return factor_rec(d, f, rng, depth + 1) && factor_rec(divexact(n, d), f, rng, depth + 1);
}

}  // namespace

Factorization factor_integer(Int n, unsigned long bound, const std::vector<Int>& hints) {
  OT_CHECK(n > 0, ErrorCode::Precondition, "factor_integer needs n > 0");
  Factorization f;
  for (const Int& h : hints) {
    unsigned long e = valuation(n, h);
    if (e > 0) {
      push_factor(f, h, e);
      n = divexact(n, int_pow(h, e));
    }
  }
  for (unsigned long p = 2; p <= bound && n > 1; p += (p == 2 ? 1 : 2)) {
    if (Int(p) * Int(p) > n) break;
    if (!divides(Int(p), n)) continue;
    unsigned long e = valuation(n, Int(p));
    push_factor(f, Int(p), e);
    n = divexact(n, int_pow(Int(p), e));
  }
  if (n > 1) {
    Rng rng(derived_seed("factor_integer:" + n.get_str(16)));
    if (!factor_rec(n, f, rng, 0)) f.cofactor = n;
  }
  std::sort(f.factors.begin(), f.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return f;
}

uint64_t global_seed() {
  static uint64_t seed = [] {
    if (const char* env = std::getenv("ORDERTREE_SEED")) return static_cast<uint64_t>(std::strtoull(env, nullptr, 10));
    return static_cast<uint64_t>(0x0031337c0ffee555ull);
  }();
  return seed;
}

uint64_t derived_seed(const std::string& context) {
  uint64_t h = 1469598103934665603ull ^ global_seed();
  for (char c : context) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace ordertree
