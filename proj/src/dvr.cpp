#include "kleinring/dvr.hpp"

#include <limits>

namespace kleinring {

namespace {

bool is_small_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Dvr::Dvr(std::uint64_t p, unsigned precision) : p_(p), precision_(precision) {
  if (!is_small_prime(p) || p > 1000)
    throw std::invalid_argument("p must be a small prime");
  if (precision <= kGuardBand || precision > 60)
    throw std::invalid_argument("precision out of range");
  modulus_ = 1;
  for (unsigned i = 0; i < precision; ++i) {
    if (modulus_ > (std::uint64_t{1} << 62) / p)
      throw std::invalid_argument("p^N does not fit in 62 bits");
    modulus_ *= p;
  }
  pow2_mask_ = (p == 2) ? modulus_ - 1 : 0;
  small_ = modulus_ <= std::numeric_limits<std::uint32_t>::max();
}

std::uint64_t Dvr::reduce(long long v) const {
  long long m = static_cast<long long>(modulus_);
  long long r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

unsigned Dvr::valuation(std::uint64_t a) const {
  if (a == 0) return precision_;
  unsigned v = 0;
  while (a % p_ == 0) {
    a /= p_;
    ++v;
  }
  return v;
}

std::uint64_t Dvr::pow_p(unsigned e) const {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e && i < precision_; ++i) r *= p_;
  return e >= precision_ ? 0 : r;
}

std::uint64_t Dvr::unit_part(std::uint64_t a) const {
  if (a == 0) return 0;
  while (a % p_ == 0) a /= p_;
  return a;
}

std::uint64_t Dvr::inv_unit(std::uint64_t a) const {
  if (!is_unit(a)) throw std::invalid_argument("inv_unit of a non-unit");
  // Inverse mod p by Fermat, then Hensel lifting doubles the precision.
  std::uint64_t x = 1, base = a % p_, e = p_ - 2;
  while (e) {
    if (e & 1) x = (x * base) % p_;
    base = (base * base) % p_;
    e >>= 1;
  }
  unsigned have = 1;
  while (have < precision_) {
    // x <- x * (2 - a x) mod p^N; overshooting the target precision is fine.
    std::uint64_t t = mul(a, x);
    x = mul(x, sub(2 % modulus_, t));
    have *= 2;
  }
  return x;
}

std::uint64_t Dvr::divide_exact(std::uint64_t a, std::uint64_t b) const {
  if (b == 0) throw std::invalid_argument("division by zero");
  unsigned vb = valuation(b);
  std::uint64_t ub = unit_part(b);
  std::uint64_t t = mul(a, inv_unit(ub));
  std::uint64_t pe = pow_p(vb);
  if (pe == 0 || t % pe != 0)
    throw std::invalid_argument("divide_exact: divisor valuation too large");
  return t / pe;
}

std::string Dvr::to_string(std::uint64_t a) const { return std::to_string(a); }

}  // namespace kleinring
