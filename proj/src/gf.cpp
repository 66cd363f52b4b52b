#include "tetrad/gf.hpp"

#include <string>

#include "tetrad/errors.hpp"

namespace tetrad::gf {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t modulus) : modulus_(modulus) {
  if (!is_prime(modulus)) {
    throw UsageError("field modulus " + std::to_string(modulus) +
                     " is not prime");
  }
}

namespace {

std::uint32_t checked_modulus(FieldElement a, FieldElement b) {
  if (a.modulus() != b.modulus()) {
    throw UsageError("field element modulus mismatch: " +
                     std::to_string(a.modulus()) + " vs " +
                     std::to_string(b.modulus()));
  }
  return a.modulus();
}

}  // namespace

FieldElement add(FieldElement a, FieldElement b) {
  const std::uint32_t q = checked_modulus(a, b);
  return FieldElement(a.field(), (std::uint64_t{a.value()} + b.value()) % q);
}

FieldElement sub(FieldElement a, FieldElement b) { return add(a, neg(b)); }

FieldElement mul(FieldElement a, FieldElement b) {
  const std::uint32_t q = checked_modulus(a, b);
  return FieldElement(a.field(), (std::uint64_t{a.value()} * b.value()) % q);
}

FieldElement neg(FieldElement a) {
  if (a.is_zero()) return a;
  return FieldElement(a.field(), a.modulus() - a.value());
}

// Fermat: a^(q-2).
FieldElement inv(FieldElement a) {
  if (a.is_zero()) throw DivisionByZero("inverse of zero in GF(" +
                                        std::to_string(a.modulus()) + ")");
  std::uint64_t result = 1;
  std::uint64_t base = a.value();
  std::uint32_t e = a.modulus() - 2;
  while (e > 0) {
    if (e & 1u) result = result * base % a.modulus();
    base = base * base % a.modulus();
    e >>= 1;
  }
  return FieldElement(a.field(), result);
}

std::ostream& operator<<(std::ostream& os, FieldElement e) {
  return os << e.value();
}

}  // namespace tetrad::gf
