#include "bisplit/oracle/field.hpp"

#include <string>

#include "bisplit/error.hpp"

namespace bisplit::oracle {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw InvalidInput("field characteristic " + std::to_string(p) +
                       " is not a prime below 2^31");
}

PrimeField::Element PrimeField::pow(Element x, std::uint64_t e) const noexcept {
  Element result = 1 % p_;
  while (e) {
    if (e & 1) result = mul(result, x);
    x = mul(x, x);
    e >>= 1;
  }
  return result;
}

PrimeField::Element PrimeField::inv(Element x) const {
  if (x % p_ == 0) throw InvalidInput("inverse of zero");
  return pow(x, p_ - 2);
}

}  // namespace bisplit::oracle
