#pragma once

#include <cstdint>

#include "monoideal/errors.hpp"

namespace monoideal {

/// Coefficient field: characteristic 0 (exact rationals) or p prime
/// (arithmetic mod p).  Betti numbers may depend on it, so every result
/// carries the field it was computed over.
struct FieldSpec {
  std::uint32_t characteristic = 0;

  static bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) return false;
    return true;
  }

  static FieldSpec rationals() { return FieldSpec{0}; }

  static FieldSpec prime(std::uint32_t p) {
    if (!is_prime(p)) throw PreconditionError("field characteristic must be 0 or a prime");
    return FieldSpec{p};
  }

  static FieldSpec of_characteristic(std::uint32_t c) {
    return c == 0 ? rationals() : prime(c);
  }

  bool operator==(const FieldSpec&) const = default;
};

}  // namespace monoideal
