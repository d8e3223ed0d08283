#include "hgs/zmod.hpp"

#include <numeric>
#include <utility>

namespace hgs {

Residue residue(u64 value, u64 modulus) {
  if (modulus < 2) throw Error("residue: modulus must be >= 2");
  return Residue{value % modulus, modulus};
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

u64 addmod(u64 a, u64 b, u64 m) {
  u64 s = a % m + b % m;
  return s >= m ? s - m : s;
}

u64 submod(u64 a, u64 b, u64 m) {
  a %= m;
  b %= m;
  return a >= b ? a - b : a + m - b;
}

u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a % m) * (b % m)) % m);
}

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 m) {
  a %= m;
  if (gcd_u64(a, m) != 1)
    throw NotAUnit("invmod: " + std::to_string(a) + " is not a unit mod " + std::to_string(m));
  // extended Euclid on signed 128-bit intermediates
  __int128 t = 0, new_t = 1;
  __int128 r = static_cast<__int128>(m), new_r = static_cast<__int128>(a);
  while (new_r != 0) {
    __int128 qt = r / new_r;
    t = std::exchange(new_t, t - qt * new_t);
    r = std::exchange(new_r, r - qt * new_r);
  }
  if (t < 0) t += static_cast<__int128>(m);
  return static_cast<u64>(t);
}

u64 ipow_checked(u64 base, u64 exp) {
  constexpr u64 kLimit = u64{1} << 62;
  u64 r = 1;
  for (u64 i = 0; i < exp; ++i) {
    if (base != 0 && r > kLimit / base)
      throw ExponentOverflow("ipow: " + std::to_string(base) + "^" + std::to_string(exp) +
                             " exceeds the integer width contract");
    r *= base;
  }
  return r;
}

bool is_prime(u64 m) {
  if (m < 2) return false;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) return false;
  return true;
}

std::vector<u64> prime_factors(u64 m) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(m);
  return out;
}

std::vector<u64> units_mod(u64 m) {
  std::vector<u64> out;
  for (u64 a = 1; a < m; ++a)
    if (gcd_u64(a, m) == 1) out.push_back(a);
  return out;
}

u64 totient(u64 m) {
  if (m == 0) throw Error("totient: m must be >= 1");
  u64 result = m;
  for (u64 d : prime_factors(m)) result -= result / d;
  return result;
}

u64 mul_order(Residue k) {
  u64 m = k.modulus;
  if (gcd_u64(k.value, m) != 1)
    throw NotAUnit("mul_order: " + std::to_string(k.value) + " is not a unit mod " +
                   std::to_string(m));
  u64 t = totient(m);
  for (u64 ell : prime_factors(t)) {
    while (t % ell == 0 && powmod(k.value, t / ell, m) == 1) t /= ell;
  }
  return t;
}

Residue element_of_order(u64 d, u64 m) {
  if (d == 0 || totient(m) % d != 0)
    throw NoSuchElement("element_of_order: " + std::to_string(d) + " does not divide phi(" +
                        std::to_string(m) + ")");
  auto divisors = prime_factors(d);
  for (u64 a = 1; a < m; ++a) {
    if (gcd_u64(a, m) != 1) continue;
    if (powmod(a, d, m) != 1) continue;
    bool exact = true;
    for (u64 ell : divisors) {
      if (powmod(a, d / ell, m) == 1) {
        exact = false;
        break;
      }
    }
    if (exact) return Residue{a, m};
  }
  throw NoSuchElement("element_of_order: no unit of order " + std::to_string(d) + " mod " +
                      std::to_string(m));
}

namespace {

// returns (1 + k + ... + k^(t-1), k^t) mod m
std::pair<u64, u64> geom_pair(u64 k, u64 t, u64 m) {
  if (t == 0) return {0, 1 % m};
  auto [s, p] = geom_pair(k, t / 2, m);
  u64 s2 = addmod(s, mulmod(s, p, m), m);  // S(2h) = S(h)(1 + k^h)
  u64 p2 = mulmod(p, p, m);
  if (t & 1) {
    s2 = addmod(s2, p2, m);  // S(2h+1) = S(2h) + k^(2h)
    p2 = mulmod(p2, k, m);
  }
  return {s2, p2};
}

}  // namespace

Residue geometric_sum(Residue k, u64 t) {
  return Residue{geom_pair(k.value % k.modulus, t, k.modulus).first, k.modulus};
}

PowerOfPWitness lemma_power_of_p(u64 p, u64 b, u64 c) {
  if (p < 3 || p % 2 == 0 || !is_prime(p))
    throw PreconditionViolation("lemma_power_of_p: p must be an odd prime");
  if (b % p == 0) throw PreconditionViolation("lemma_power_of_p: p must not divide b");
  u64 modulus = ipow_checked(p, c + 2);
  u64 pc = ipow_checked(p, c);
  constexpr u64 kLimit = u64{1} << 62;
  if (b > kLimit / pc)
    throw ExponentOverflow("lemma_power_of_p: exponent b*p^c exceeds the width contract");
  u64 r = powmod(1 + p, b * pc, modulus);
  u64 pc1 = modulus / p;  // p^(c+1)
  if (r % pc1 != 1 % pc1 || (r - 1) % pc1 != 0)
    throw Error("lemma_power_of_p: residue not of the form 1 + d*p^(c+1)");
  u64 d = (r - 1) / pc1;
  return PowerOfPWitness{d, d % p != 0};
}

bool lemma_unit(u64 p, u32 n, u64 q) {
  if ((p - 1) % q != 0)
    throw PreconditionViolation("lemma_unit: q must divide p-1");
  u64 m = ipow_checked(p, n);
  // The unit group mod p^n is cyclic, so the elements of exact order q are
  // the q-1 nontrivial powers of any one of them.
  u64 k0 = element_of_order(q, m).value;
  u64 k = k0;
  for (u64 j = 1; j < q; ++j) {
    if (gcd_u64(submod(k, 1, m), m) != 1) return false;
    k = mulmod(k, k0, m);
  }
  return true;
}

}  // namespace hgs
