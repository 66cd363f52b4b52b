#pragma once

#include <cstdint>
#include <ostream>

namespace tetrad::gf {

// The prime field GF(q). Construction rejects composite moduli.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t modulus);

  std::uint32_t modulus() const { return modulus_; }

  friend bool operator==(PrimeField, PrimeField) = default;

 private:
  struct Unchecked {};
  PrimeField(std::uint32_t modulus, Unchecked) : modulus_(modulus) {}
  friend class FieldElement;

  std::uint32_t modulus_;
};

bool is_prime(std::uint32_t n);

// A canonical residue in [0, q) tagged with its modulus.
class FieldElement {
 public:
  FieldElement(PrimeField field, std::uint64_t value)
      : value_(static_cast<std::uint32_t>(value % field.modulus())),
        modulus_(field.modulus()) {}

  std::uint32_t value() const { return value_; }
  PrimeField field() const { return PrimeField(modulus_, PrimeField::Unchecked{}); }
  std::uint32_t modulus() const { return modulus_; }

  bool is_zero() const { return value_ == 0; }

  friend bool operator==(FieldElement, FieldElement) = default;

 private:
  std::uint32_t value_;
  std::uint32_t modulus_;
};

FieldElement add(FieldElement a, FieldElement b);
FieldElement sub(FieldElement a, FieldElement b);
FieldElement mul(FieldElement a, FieldElement b);
FieldElement neg(FieldElement a);
FieldElement inv(FieldElement a);

inline FieldElement operator+(FieldElement a, FieldElement b) { return add(a, b); }
inline FieldElement operator-(FieldElement a, FieldElement b) { return sub(a, b); }
inline FieldElement operator*(FieldElement a, FieldElement b) { return mul(a, b); }
inline FieldElement operator-(FieldElement a) { return neg(a); }

std::ostream& operator<<(std::ostream& os, FieldElement e);

}  // namespace tetrad::gf
