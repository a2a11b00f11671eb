#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "superjac/error.hpp"

namespace superjac {

using BigInt = boost::multiprecision::cpp_int;

// Hard ceiling on extension degrees over the prime field. Element storage is
// inline, so this bounds sizeof(FieldElement).
inline constexpr unsigned kMaxExtensionDegree = 32;
inline constexpr unsigned kDefaultExtensionCap = 24;

class FieldElement;

namespace detail {

// One instance per (p, k), created on first use and never destroyed.
struct FieldData {
  std::uint64_t p = 0;
  unsigned k = 1;
  // Monic irreducible modulus, lowest degree first, k + 1 entries. Empty for k == 1.
  std::vector<std::uint32_t> modulus;
  BigInt order;
};

}  // namespace detail

// Handle to the finite field F_{p^k}. Contexts are interned: two handles for
// the same (p, k) compare equal and share the same modulus. Copying is free.
//
// The modulus for k > 1 is the least monic irreducible polynomial of degree k
// when polynomials are compared coefficient by coefficient from x^{k-1} down
// to the constant term.
class FieldCtx {
 public:
  FieldCtx() = default;

  // Throws NotPrime unless p is a prime below 2^31; DegreeOverflow when
  // k exceeds kMaxExtensionDegree.
  static FieldCtx make(std::uint64_t p, unsigned k = 1);

  bool valid() const noexcept { return data_ != nullptr; }
  std::uint64_t characteristic() const noexcept { return data_->p; }
  unsigned degree() const noexcept { return data_->k; }
  const BigInt& order() const noexcept { return data_->order; }
  std::span<const std::uint32_t> modulus() const noexcept { return data_->modulus; }
  bool is_prime_field() const noexcept { return data_->k == 1; }

  FieldCtx prime_field() const { return make(data_->p, 1); }

  // True when `sub` is (canonically isomorphic to) a subfield of this field.
  bool contains(const FieldCtx& sub) const noexcept {
    return sub.data_->p == data_->p && data_->k % sub.data_->k == 0;
  }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(std::int64_t value) const;
  // Coefficients of the polynomial representative, lowest degree first.
  FieldElement from_coeffs(std::span<const std::uint64_t> coeffs) const;
  // The class of x modulo the defining polynomial; 1 in a prime field.
  FieldElement generator() const;
  FieldElement random(std::mt19937_64& rng) const;

  std::string name() const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b) noexcept { return a.data_ == b.data_; }

  const detail::FieldData* data() const noexcept { return data_; }

 private:
  explicit FieldCtx(const detail::FieldData* data) : data_(data) {}
  const detail::FieldData* data_ = nullptr;
  friend class FieldElement;
};

// An element of F_{p^k}, stored as its canonical reduced representative.
//
// Binary operations require both operands in the same field, except that an
// element of the prime field combines with any extension of the same
// characteristic. Anything else throws FieldMismatch.
class FieldElement {
 public:
  FieldElement() = default;

  FieldCtx field() const noexcept { return FieldCtx(data_); }
  bool valid() const noexcept { return data_ != nullptr; }
  std::span<const std::uint32_t> coeffs() const noexcept { return {c_.data(), data_->k}; }
  std::uint32_t coeff(unsigned i) const noexcept { return c_[i]; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  // Lies in the prime field.
  bool is_prime_field_value() const noexcept;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o) { return *this *= o.inverse(); }

  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

  // Throws DivisionByZero for zero.
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement pow(const BigInt& e) const;

  // Same field and same representative. Prime-field values compare equal to
  // their images in an extension; unrelated fields compare unequal.
  friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept;

  // Canonical order: lexicographic on the coefficient vector, constant term
  // first. Used for every deterministic sort in the library.
  friend std::strong_ordering operator<=>(const FieldElement& a, const FieldElement& b) noexcept;

  std::string to_string() const;

 private:
  explicit FieldElement(const detail::FieldData* d) : data_(d) {}
  void coerce_with(const FieldElement& o);

  const detail::FieldData* data_ = nullptr;
  std::array<std::uint32_t, kMaxExtensionDegree> c_{};

  friend class FieldCtx;
};

// Deterministic primality test for 64-bit inputs below 2^31 (trial division).
bool is_prime(std::uint64_t n) noexcept;

// Frobenius z -> z^(p^times).
FieldElement frobenius(const FieldElement& z, unsigned times = 1);

// Smallest field containing both.
FieldCtx compositum(const FieldCtx& a, const FieldCtx& b);

// Embeddings F_{p^a} -> F_{p^c} are chosen canonically relative to a common
// base subfield `over` (default: the prime field): among the roots of the
// source modulus in the target, the least one whose induced map agrees with
// the canonical embedding of `over` is used. Data relative to one base field
// therefore moves consistently between extensions.
FieldElement embed(const FieldElement& x, const FieldCtx& target, const FieldCtx& over = {});

// Inverse of embed(): the preimage of z in `sub`, or nullopt if z is not in
// the image.
std::optional<FieldElement> descend(const FieldElement& z, const FieldCtx& sub, const FieldCtx& over = {});

// True iff z lies in the subfield of its field isomorphic to `sub`.
bool lies_in(const FieldElement& z, const FieldCtx& sub);

// All elements of a field in canonical order. Throws ScanBoundExceeded if the
// field has more than `bound` elements.
std::vector<FieldElement> enumerate_field(const FieldCtx& field, std::uint64_t bound);

}  // namespace superjac
