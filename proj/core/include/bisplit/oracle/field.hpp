#pragma once

#include <cstdint>

namespace bisplit::oracle {

/// Arithmetic in Z/pZ. Elements are canonical representatives in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  static constexpr std::uint32_t kDefaultPrime = 32003;

  /// Throws InvalidInput unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t prime() const noexcept { return p_; }

  Element from_int(std::int64_t v) const noexcept {
    const auto p = static_cast<std::int64_t>(p_);
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return static_cast<Element>(r);
  }
  Element add(Element x, Element y) const noexcept {
    const std::uint32_t s = x + y;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element x, Element y) const noexcept { return x >= y ? x - y : x + p_ - y; }
  Element neg(Element x) const noexcept { return x == 0 ? 0 : p_ - x; }
  Element mul(Element x, Element y) const noexcept {
    return static_cast<Element>(static_cast<std::uint64_t>(x) * y % p_);
  }
  Element pow(Element x, std::uint64_t e) const noexcept;
  /// x must be nonzero.
  Element inv(Element x) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace bisplit::oracle
