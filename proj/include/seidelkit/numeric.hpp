#pragma once

// Exact arithmetic primitives: arbitrary-precision integers and rationals
// (GMP-backed), integer square roots, square-free decomposition.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace seidelkit {

using Int = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

inline int sign_of(const Int& x) { return sgn(x); }
inline int sign_of(const Rational& x) { return sgn(x); }

inline Int isqrt_floor(const Int& x) {
  if (x < 0) throw Error("isqrt_floor: negative argument");
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

inline bool is_perfect_square(const Int& x, Int* root = nullptr) {
  if (x < 0) return false;
  Int r = isqrt_floor(x);
  if (r * r == x) {
    if (root) *root = r;
    return true;
  }
  return false;
}

// x = s^2 * d with d square-free; returns (s, d). Trial division only; the
// arguments in this library stay tiny (discriminants of small matrices).
inline void squarefree_decompose(const Int& x, Int& s, Int& d) {
  if (x < 0) throw Error("squarefree_decompose: negative argument");
  s = 1;
  d = 1;
  Int rest = x;
  for (Int p = 2; p * p <= rest; ++p) {
    while (mpz_divisible_p(rest.get_mpz_t(), Int(p * p).get_mpz_t())) {
      rest /= p * p;
      s *= p;
    }
  }
  d = rest;
}

inline bool is_prime(long q) {
  if (q < 2) return false;
  for (long p = 2; p * p <= q; ++p)
    if (q % p == 0) return false;
  return true;
}

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Int& x) { return x.get_str(); }

inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace seidelkit
