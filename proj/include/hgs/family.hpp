#ifndef HGS_FAMILY_HPP
#define HGS_FAMILY_HPP

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

#include "hgs/zmod.hpp"

namespace hgs {

enum class Family : u8 { Cyclic, PGreater, PLess };

// One isomorphism type of order p^n*q with cyclic Sylow-p subgroup.
//   Cyclic:    Z_{p^n} x Z_q (stored as the direct-product pair)
//   PGreater:  <x,y | x^{p^n} = y^q = 1, y x y^-1 = x^k>, ord(k mod p^n) = q
//   PLess:     <x,y | x^{p^n} = y^q = 1, x y x^-1 = y^k>, ord(k mod q) = p^b
struct GroupSpec {
  u64 p = 3;
  u32 n = 1;
  u64 q = 5;
  Family kind = Family::Cyclic;
  u64 k = 1;   // twist: PGreater mod p^n, PLess mod q, 1 for Cyclic
  u32 b = 0;   // PLess: exact order of k is p^b
  u64 pn = 3;  // cached p^n
  bool canonical = true;

  u64 order() const { return pn * q; }
  bool operator==(const GroupSpec&) const = default;
};

GroupSpec cyclic_spec(u64 p, u32 n, u64 q);
GroupSpec p_greater_spec(u64 p, u32 n, u64 q);
GroupSpec p_greater_spec(u64 p, u32 n, u64 q, u64 k);
GroupSpec p_less_spec(u64 p, u32 n, u64 q, u32 b);
GroupSpec p_less_spec(u64 p, u32 n, u64 q, u32 b, u64 k);

// Every isomorphism type of order p^n*q with cyclic Sylow-p, duplicate-free:
// Cyclic first, then the nonabelian specs (PLess ordered by ascending b).
std::vector<GroupSpec> specs_for(u64 p, u32 n, u64 q);

// Canonicalize a raw twist: replaces k by the smallest residue of the same
// order; order-1 twists collapse to Cyclic. Throws InvalidTwist.
GroupSpec classify(u64 p, u32 n, u64 q, Residue raw_k, Family family);

// Short display label: "C", "G", "G(b=2)".
std::string spec_label(const GroupSpec&);
// Full display name, e.g. "PLess(p=3,n=2,q=19,b=1,k=7)".
std::string spec_name(const GroupSpec&);

// Normal-form coordinates. PGreater elements read x^i y^j; PLess and Cyclic
// read y^j x^i.
struct GroupElement {
  u64 i = 0;
  u64 j = 0;
  auto operator<=>(const GroupElement&) const = default;
};

GroupElement group_identity();
GroupElement mul(const GroupSpec&, GroupElement, GroupElement);
GroupElement inverse(const GroupSpec&, GroupElement);
GroupElement power(const GroupSpec&, GroupElement, i64 t);
u64 order_of(const GroupSpec&, GroupElement);

u64 element_index(const GroupSpec&, GroupElement);  // lexicographic (i,j)
GroupElement element_at(const GroupSpec&, u64 index);

// A validated multiplication table over indices 0..order-1; index 0 is the
// identity.
struct TableGroup {
  u32 order = 1;
  std::vector<u32> table;  // row r, column c -> table[r*order + c]
  u32 identity = 0;

  u32 mul(u32 a, u32 b) const { return table[static_cast<u64>(a) * order + b]; }
  u32 inv(u32 a) const;
  u32 pow(u32 a, u64 t) const;
  u64 element_order(u32 a) const;
};

TableGroup load_table(const std::string& path);
TableGroup load_table(std::istream& in);
void validate_table(const TableGroup&);  // throws NotAGroup with a witness
TableGroup to_table(const GroupSpec&);
TableGroup direct_product(const TableGroup&, const TableGroup&);
void write_table(std::ostream&, const TableGroup&);

}  // namespace hgs

#endif  // HGS_FAMILY_HPP
