#ifndef HGS_ZMOD_HPP
#define HGS_ZMOD_HPP

#include <vector>

#include "hgs/common.hpp"

namespace hgs {

// A reduced residue: 0 <= value < modulus, modulus >= 2.
struct Residue {
  u64 value = 0;
  u64 modulus = 2;
  bool operator==(const Residue&) const = default;
};

Residue residue(u64 value, u64 modulus);

u64 gcd_u64(u64 a, u64 b);
u64 addmod(u64 a, u64 b, u64 m);
u64 submod(u64 a, u64 b, u64 m);
u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);
u64 invmod(u64 a, u64 m);  // throws NotAUnit

// base^exp as a plain integer; throws ExponentOverflow past 2^62.
u64 ipow_checked(u64 base, u64 exp);

bool is_prime(u64 m);
std::vector<u64> prime_factors(u64 m);  // distinct primes, ascending
std::vector<u64> units_mod(u64 m);      // ascending

u64 totient(u64 m);

// Least t >= 1 with k^t = 1 (mod k.modulus); throws NotAUnit.
u64 mul_order(Residue k);

// Smallest unit of exact multiplicative order d mod m; throws NoSuchElement.
Residue element_of_order(u64 d, u64 m);

// 1 + k + ... + k^(t-1) mod k.modulus, by divide and conquer. Total for
// every k: never divides by k-1.
Residue geometric_sum(Residue k, u64 t);

// (1+p)^(b*p^c) = 1 + d*p^(c+1) (mod p^(c+2)); ok means p does not divide d.
struct PowerOfPWitness {
  u64 d = 0;
  bool ok = false;
};
PowerOfPWitness lemma_power_of_p(u64 p, u64 b, u64 c);

// For every unit k of exact order q mod p^n, checks that k-1 is a unit.
// Requires q | p-1.
bool lemma_unit(u64 p, u32 n, u64 q);

}  // namespace hgs

#endif  // HGS_ZMOD_HPP
