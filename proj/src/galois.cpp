#include "utlab/galois.hpp"

#include "utlab/core.hpp"

namespace utlab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  while (q % p == 0) {
    q /= p;
    ++e;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), e);
}

namespace {

struct Conway {
  std::uint32_t q;
  std::vector<std::uint32_t> low;  // x^e + low[e-1] x^{e-1} + ... + low[0]
};

const std::vector<Conway>& conway_table() {
  static const std::vector<Conway> t{
      {4, {1, 1}},           // x^2 + x + 1
      {8, {1, 1, 0}},        // x^3 + x + 1
      {16, {1, 1, 0, 0}},    // x^4 + x + 1
      {32, {1, 0, 1, 0, 0}}, // x^5 + x^2 + 1
      {9, {2, 2}},           // x^2 + 2x + 2
      {25, {2, 4}},          // x^2 + 4x + 2
      {27, {1, 2, 0}},       // x^3 + 2x + 1
  };
  return t;
}

}  // namespace

GaloisField::GaloisField(std::uint32_t q) : q_(q) {
  const auto pe = prime_power(q);
  if (!pe) throw InvalidArgument("GaloisField: " + std::to_string(q) + " is not a prime power");
  p_ = pe->first;
  e_ = pe->second;
  if (q >= 65536) throw InvalidArgument("GaloisField: field too large");

  // Build exp/log tables by repeated multiplication by a candidate generator.
  auto mul_by = [&](std::uint32_t a, std::uint32_t g) -> std::uint32_t {
    if (e_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * g % p_);
    // g is x here: shift coefficients and reduce.
    std::vector<std::uint32_t> c(e_ + 1, 0);
    for (std::uint32_t i = 0, v = a; i < e_; ++i, v /= p_) c[i + 1] = v % p_;
    const std::uint32_t top = c[e_];
    std::uint32_t out = 0, scale = 1;
    for (std::uint32_t i = 0; i < e_; ++i, scale *= p_) {
      const std::uint32_t ci = (c[i] + (p_ - top) * modulus_[i]) % p_;
      out += ci * scale;
    }
    return out;
  };

  std::vector<std::uint32_t> candidates;
  if (e_ == 1) {
    for (std::uint32_t g = 1; g < q; ++g) candidates.push_back(g);
  } else {
    for (const auto& c : conway_table())
      if (c.q == q) modulus_ = c.low;
    if (modulus_.empty()) throw InvalidArgument("GaloisField: no polynomial for GF(" + std::to_string(q) + ")");
    candidates.push_back(p_);  // the root x
  }
  for (std::uint32_t g : candidates) {
    exp_.assign(q - 1, 0);
    log_.assign(q, 0);
    std::uint32_t a = 1, k = 0;
    bool ok = true;
    do {
      if (k == q - 1) {
        ok = false;
        break;
      }
      exp_[k] = a;
      log_[a] = k;
      ++k;
      a = mul_by(a, g);
    } while (a != 1);
    if (ok && k == q - 1) {
      omega_ = g;
      break;
    }
  }
  if (omega_ == 0 && q > 2) throw Error("GaloisField: defining polynomial is not primitive");
  if (q == 2) omega_ = 1, exp_ = {1}, log_ = {0, 0};
}

std::uint32_t GaloisField::add(std::uint32_t a, std::uint32_t b) const {
  if (e_ == 1) return (a + b) % p_;
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i, scale *= p_, a /= p_, b /= p_)
    out += ((a % p_ + b % p_) % p_) * scale;
  return out;
}

std::uint32_t GaloisField::neg(std::uint32_t a) const {
  if (e_ == 1) return (p_ - a) % p_;
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < e_; ++i, scale *= p_, a /= p_) out += ((p_ - a % p_) % p_) * scale;
  return out;
}

std::uint32_t GaloisField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[(log_[a] + log_[b]) % (q_ - 1)];
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
  if (a == 0) throw InvalidArgument("GaloisField: inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::uint32_t GaloisField::pow(std::uint32_t a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  return exp_[(log_[a] * (k % (q_ - 1))) % (q_ - 1)];
}

std::uint32_t GaloisField::order(std::uint32_t a) const {
  if (a == 0) throw InvalidArgument("GaloisField: order of zero");
  std::uint32_t k = 1;
  for (std::uint32_t b = a; b != 1; b = mul(b, a)) ++k;
  return k;
}

}  // namespace utlab
