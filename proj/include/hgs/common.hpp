#ifndef HGS_COMMON_HPP
#define HGS_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hgs {

using u8 = std::uint8_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define HGS_DEFINE_ERROR(NAME) \
  class NAME : public Error {  \
   public:                     \
    using Error::Error;        \
  }

HGS_DEFINE_ERROR(NotAUnit);
HGS_DEFINE_ERROR(NoSuchElement);
HGS_DEFINE_ERROR(PreconditionViolation);
HGS_DEFINE_ERROR(ExponentOverflow);
HGS_DEFINE_ERROR(CapExceeded);
HGS_DEFINE_ERROR(SpecMismatch);
HGS_DEFINE_ERROR(InvalidTwist);
HGS_DEFINE_ERROR(ParseError);
HGS_DEFINE_ERROR(NotAGroup);
HGS_DEFINE_ERROR(NotClosed);
HGS_DEFINE_ERROR(NotRegular);
HGS_DEFINE_ERROR(NotInFamily);
HGS_DEFINE_ERROR(SingularDenominator);
HGS_DEFINE_ERROR(NonIntegralByott);

#undef HGS_DEFINE_ERROR

// Global size limits. hol_max can be overridden with the HGC_MAX_CAP
// environment variable or the CLI --max-cap flag.
struct Caps {
  u64 hol_max = 1'000'000;           // largest |Hol(N)| the search will enumerate
  u64 pair_max = 10'000'000'000ULL;  // candidate pairs after order filtering
  u64 aut_brute_max = 250;           // largest order for brute-force Aut
  u64 table_max = 4096;              // largest order materialized as a Cayley table
};

Caps& caps();

}  // namespace hgs

#endif  // HGS_COMMON_HPP
