#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace utlab {

bool is_prime(std::uint64_t n);

/// (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// GF(q) for q < 65536 prime, or q = p^e <= 32 with e > 1 (fixed Conway
/// polynomials). Elements are the integers 0..q-1 read as coefficient
/// vectors c0 + c1 p + ... of polynomials in the root x.
class GaloisField {
 public:
  explicit GaloisField(std::uint32_t q);

  std::uint32_t q() const { return q_; }
  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t k) const;
  std::uint32_t frobenius(std::uint32_t a) const { return pow(a, p_); }

  /// Fixed primitive element: the least primitive root mod p, or the root x
  /// of the Conway polynomial.
  std::uint32_t primitive() const { return omega_; }
  /// Coefficients c0..c_{e-1} of the defining polynomial's lower terms
  /// (x^e = -sum c_i x^i); empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  /// Multiplicative order of a nonzero element.
  std::uint32_t order(std::uint32_t a) const;

 private:
  std::uint32_t q_, p_, e_;
  std::uint32_t omega_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> log_, exp_;  // discrete logs to base omega
};

}  // namespace utlab
