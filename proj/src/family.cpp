#include "hgs/family.hpp"

#include <fstream>
#include <sstream>

namespace hgs {

namespace {

void check_primes(u64 p, u32 n, u64 q) {
  if (p == q) throw PreconditionViolation("spec: p and q must be distinct");
  if (p < 3 || !is_prime(p) || p % 2 == 0)
    throw PreconditionViolation("spec: p must be an odd prime");
  if (q < 3 || !is_prime(q) || q % 2 == 0)
    throw PreconditionViolation("spec: q must be an odd prime");
  if (n == 0) throw PreconditionViolation("spec: n must be >= 1");
}

// exact exponent a with p^a || q-1
u32 p_adic_valuation(u64 value, u64 p) {
  u32 a = 0;
  while (value % p == 0) {
    value /= p;
    ++a;
  }
  return a;
}

}  // namespace

GroupSpec cyclic_spec(u64 p, u32 n, u64 q) {
  check_primes(p, n, q);
  GroupSpec s;
  s.p = p;
  s.n = n;
  s.q = q;
  s.kind = Family::Cyclic;
  s.k = 1;
  s.b = 0;
  s.pn = ipow_checked(p, n);
  s.canonical = true;
  return s;
}

GroupSpec p_greater_spec(u64 p, u32 n, u64 q) {
  GroupSpec s = cyclic_spec(p, n, q);
  if (q >= p || (p - 1) % q != 0)
    throw PreconditionViolation("PGreater requires q < p and q | p-1");
  s.kind = Family::PGreater;
  s.k = element_of_order(q, s.pn).value;
  return s;
}

GroupSpec p_greater_spec(u64 p, u32 n, u64 q, u64 k) {
  GroupSpec s = p_greater_spec(p, n, q);
  u64 kk = k % s.pn;
  if (gcd_u64(kk, s.pn) != 1 || mul_order(Residue{kk, s.pn}) != q)
    throw InvalidTwist("PGreater twist must have exact order q mod p^n");
  s.canonical = (kk == s.k);
  s.k = kk;
  return s;
}

GroupSpec p_less_spec(u64 p, u32 n, u64 q, u32 b) {
  GroupSpec s = cyclic_spec(p, n, q);
  if (p >= q || (q - 1) % p != 0)
    throw PreconditionViolation("PLess requires p < q and p | q-1");
  u32 a = p_adic_valuation(q - 1, p);
  if (b < 1 || b > n || b > a)
    throw PreconditionViolation("PLess requires 1 <= b <= min(n, a) where p^a || q-1");
  s.kind = Family::PLess;
  s.b = b;
  s.k = element_of_order(ipow_checked(p, b), q).value;
  return s;
}

GroupSpec p_less_spec(u64 p, u32 n, u64 q, u32 b, u64 k) {
  GroupSpec s = p_less_spec(p, n, q, b);
  u64 kk = k % q;
  if (gcd_u64(kk, q) != 1 || mul_order(Residue{kk, q}) != ipow_checked(p, b))
    throw InvalidTwist("PLess twist must have exact order p^b mod q");
  s.canonical = (kk == s.k);
  s.k = kk;
  return s;
}

std::vector<GroupSpec> specs_for(u64 p, u32 n, u64 q) {
  check_primes(p, n, q);
  std::vector<GroupSpec> out;
  out.push_back(cyclic_spec(p, n, q));
  if (q < p && (p - 1) % q == 0) {
    out.push_back(p_greater_spec(p, n, q));
  } else if (p < q && (q - 1) % p == 0) {
    u32 a = p_adic_valuation(q - 1, p);
    u32 bmax = std::min(n, a);
    for (u32 b = 1; b <= bmax; ++b) out.push_back(p_less_spec(p, n, q, b));
  }
  return out;
}

GroupSpec classify(u64 p, u32 n, u64 q, Residue raw_k, Family family) {
  check_primes(p, n, q);
  u64 d = mul_order(raw_k);
  if (d == 1) return cyclic_spec(p, n, q);
  switch (family) {
    case Family::Cyclic:
      throw InvalidTwist("classify: a Cyclic spec admits only the trivial twist");
    case Family::PGreater: {
      u64 pn = ipow_checked(p, n);
      if (raw_k.modulus != pn || d != q)
        throw InvalidTwist("classify: PGreater twist must have order q mod p^n");
      GroupSpec s = p_greater_spec(p, n, q);
      return s;  // canonical k
    }
    case Family::PLess: {
      if (raw_k.modulus != q)
        throw InvalidTwist("classify: PLess twist must live mod q");
      u32 b = 0;
      u64 dd = d;
      while (dd % p == 0) {
        dd /= p;
        ++b;
      }
      if (dd != 1 || b == 0)
        throw InvalidTwist("classify: PLess twist order must be a power of p");
      return p_less_spec(p, n, q, b);
    }
  }
  throw Error("classify: unreachable");
}

std::string spec_label(const GroupSpec& s) {
  switch (s.kind) {
    case Family::Cyclic:
      return "C";
    case Family::PGreater:
      return "G";
    case Family::PLess:
      return "G(b=" + std::to_string(s.b) + ")";
  }
  return "?";
}

std::string spec_name(const GroupSpec& s) {
  std::string base = "(p=" + std::to_string(s.p) + ",n=" + std::to_string(s.n) +
                     ",q=" + std::to_string(s.q);
  switch (s.kind) {
    case Family::Cyclic:
      return "Cyclic" + base + ")";
    case Family::PGreater:
      return "PGreater" + base + ",k=" + std::to_string(s.k) + ")";
    case Family::PLess:
      return "PLess" + base + ",b=" + std::to_string(s.b) + ",k=" + std::to_string(s.k) + ")";
  }
  return "?";
}

GroupElement group_identity() { return GroupElement{0, 0}; }

namespace {

void check_element(const GroupSpec& s, GroupElement g) {
  if (g.i >= s.pn || g.j >= s.q)
    throw SpecMismatch("group element out of range for spec " + spec_name(s));
}

}  // namespace

GroupElement mul(const GroupSpec& s, GroupElement g, GroupElement h) {
  check_element(s, g);
  check_element(s, h);
  switch (s.kind) {
    case Family::Cyclic:
      return GroupElement{addmod(g.i, h.i, s.pn), addmod(g.j, h.j, s.q)};
    case Family::PGreater:
      // x^i1 y^j1 * x^i2 y^j2 = x^{i1 + i2 k^{j1}} y^{j1+j2}
      return GroupElement{addmod(g.i, mulmod(h.i, powmod(s.k, g.j, s.pn), s.pn), s.pn),
                          addmod(g.j, h.j, s.q)};
    case Family::PLess:
      // y^j1 x^i1 * y^j2 x^i2 = y^{j1 + j2 k^{i1}} x^{i1+i2}
      return GroupElement{addmod(g.i, h.i, s.pn),
                          addmod(g.j, mulmod(h.j, powmod(s.k, g.i, s.q), s.q), s.q)};
  }
  throw Error("mul: unreachable");
}

GroupElement inverse(const GroupSpec& s, GroupElement g) {
  check_element(s, g);
  switch (s.kind) {
    case Family::Cyclic:
      return GroupElement{submod(0, g.i, s.pn), submod(0, g.j, s.q)};
    case Family::PGreater: {
      u64 kinv_j = powmod(invmod(s.k, s.pn), g.j, s.pn);
      return GroupElement{submod(0, mulmod(g.i, kinv_j, s.pn), s.pn), submod(0, g.j, s.q)};
    }
    case Family::PLess: {
      u64 kinv_i = powmod(invmod(s.k, s.q), g.i, s.q);
      return GroupElement{submod(0, g.i, s.pn), submod(0, mulmod(g.j, kinv_i, s.q), s.q)};
    }
  }
  throw Error("inverse: unreachable");
}

GroupElement power(const GroupSpec& s, GroupElement g, i64 t) {
  if (t < 0) return power(s, inverse(s, g), -t);
  GroupElement acc = group_identity();
  GroupElement base = g;
  u64 e = static_cast<u64>(t);
  while (e > 0) {
    if (e & 1) acc = mul(s, acc, base);
    base = mul(s, base, base);
    e >>= 1;
  }
  return acc;
}

u64 order_of(const GroupSpec& s, GroupElement g) {
  check_element(s, g);
  GroupElement acc = g;
  u64 t = 1;
  while (!(acc == group_identity())) {
    acc = mul(s, acc, g);
    ++t;
    if (t > s.order()) throw Error("order_of: runaway loop (not a group?)");
  }
  return t;
}

u64 element_index(const GroupSpec& s, GroupElement g) {
  check_element(s, g);
  return g.i * s.q + g.j;
}

GroupElement element_at(const GroupSpec& s, u64 index) {
  if (index >= s.order()) throw SpecMismatch("element_at: index out of range");
  return GroupElement{index / s.q, index % s.q};
}

u32 TableGroup::inv(u32 a) const {
  for (u32 b = 0; b < order; ++b)
    if (mul(a, b) == identity && mul(b, a) == identity) return b;
  throw NotAGroup("no inverse for element " + std::to_string(a));
}

u32 TableGroup::pow(u32 a, u64 t) const {
  u32 acc = identity;
  u32 base = a;
  while (t > 0) {
    if (t & 1) acc = mul(acc, base);
    base = mul(base, base);
    t >>= 1;
  }
  return acc;
}

u64 TableGroup::element_order(u32 a) const {
  u32 acc = a;
  u64 t = 1;
  while (acc != identity) {
    acc = mul(acc, a);
    ++t;
    if (t > order) throw NotAGroup("element order exceeds group order");
  }
  return t;
}

TableGroup load_table(std::istream& in) {
  TableGroup g;
  u64 m = 0;
  if (!(in >> m) || m == 0) throw ParseError("cayley table: bad or missing order line");
  if (m > caps().table_max)
    throw CapExceeded("cayley table: order " + std::to_string(m) + " exceeds the table cap");
  g.order = static_cast<u32>(m);
  g.table.resize(m * m);
  for (u64 r = 0; r < m; ++r) {
    for (u64 c = 0; c < m; ++c) {
      i64 v;
      if (!(in >> v)) throw ParseError("cayley table: truncated at row " + std::to_string(r));
      if (v < 0 || static_cast<u64>(v) >= m)
        throw ParseError("cayley table: entry " + std::to_string(v) + " out of range at row " +
                         std::to_string(r));
      g.table[r * m + c] = static_cast<u32>(v);
    }
  }
  validate_table(g);
  return g;
}

TableGroup load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open cayley table file: " + path);
  return load_table(in);
}

void validate_table(const TableGroup& g) {
  const u32 m = g.order;
  for (u32 c = 0; c < m; ++c)
    if (g.mul(0, c) != c || g.mul(c, 0) != c)
      throw NotAGroup("index 0 is not an identity: 0*" + std::to_string(c) + " = " +
                      std::to_string(g.mul(0, c)));
  for (u32 a = 0; a < m; ++a) {
    bool has_inverse = false;
    for (u32 b = 0; b < m; ++b)
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) throw NotAGroup("element " + std::to_string(a) + " has no inverse");
  }
  for (u32 a = 0; a < m; ++a)
    for (u32 b = 0; b < m; ++b)
      for (u32 c = 0; c < m; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)))
          throw NotAGroup("associativity fails at (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");
}

TableGroup to_table(const GroupSpec& s) {
  u64 m = s.order();
  if (m > caps().table_max)
    throw CapExceeded("to_table: order " + std::to_string(m) + " exceeds the table cap");
  TableGroup g;
  g.order = static_cast<u32>(m);
  g.table.resize(m * m);
  for (u64 a = 0; a < m; ++a) {
    GroupElement ga = element_at(s, a);
    for (u64 b = 0; b < m; ++b) {
      g.table[a * m + b] =
          static_cast<u32>(element_index(s, mul(s, ga, element_at(s, b))));
    }
  }
  return g;
}

TableGroup direct_product(const TableGroup& a, const TableGroup& b) {
  u64 m = static_cast<u64>(a.order) * b.order;
  if (m > caps().table_max) throw CapExceeded("direct_product: order exceeds the table cap");
  TableGroup g;
  g.order = static_cast<u32>(m);
  g.table.resize(m * m);
  for (u32 x = 0; x < m; ++x) {
    u32 xa = x / b.order, xb = x % b.order;
    for (u32 y = 0; y < m; ++y) {
      u32 ya = y / b.order, yb = y % b.order;
      g.table[static_cast<u64>(x) * m + y] = a.mul(xa, ya) * b.order + b.mul(xb, yb);
    }
  }
  return g;
}

void write_table(std::ostream& out, const TableGroup& g) {
  out << g.order << "\n";
  for (u32 r = 0; r < g.order; ++r) {
    for (u32 c = 0; c < g.order; ++c) {
      if (c > 0) out << ' ';
      out << g.mul(r, c);
    }
    out << "\n";
  }
}

}  // namespace hgs
