#pragma once

#include <cstdint>
#include <string>

#include "kleinring/errors.hpp"

namespace kleinring {

// Arithmetic in the truncated discrete valuation ring R = Z/p^N, with
// valuation bookkeeping.  Residues are plain uint64_t values in [0, p^N);
// all operations go through a Dvr instance so that matrices and lattices
// over different (p, N) configurations cannot be mixed silently.
//
// valuation(0) = N by convention.  Any valuation that lands in the open
// band (N - guard, N) is ambiguous under truncation and the callers in
// linalg.hpp abort with PrecisionExhausted instead of guessing.
class Dvr {
 public:
  static constexpr unsigned kGuardBand = 4;

  Dvr(std::uint64_t p, unsigned precision);

  std::uint64_t p() const { return p_; }
  unsigned precision() const { return precision_; }
  std::uint64_t modulus() const { return modulus_; }
  // Largest valuation that is still trusted as a genuine nonzero value.
  unsigned guard() const { return precision_ - kGuardBand; }

  bool operator==(const Dvr& o) const {
    return p_ == o.p_ && precision_ == o.precision_;
  }
  bool operator!=(const Dvr& o) const { return !(*this == o); }

  std::uint64_t reduce(long long v) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= modulus_ ? s - modulus_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + modulus_ - b;
  }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : modulus_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (pow2_mask_) return (a * b) & pow2_mask_;
    if (small_) return (a * b) % modulus_;
    return static_cast<std::uint64_t>(
        (static_cast<__uint128_t>(a) * b) % modulus_);
  }

  unsigned valuation(std::uint64_t a) const;
  std::uint64_t pow_p(unsigned e) const;
  // a = unit_part(a) * p^valuation(a); unit_part(0) = 0.
  std::uint64_t unit_part(std::uint64_t a) const;
  bool is_unit(std::uint64_t a) const { return a % p_ != 0; }
  std::uint64_t inv_unit(std::uint64_t a) const;
  // Exact division a / b for valuation(a) >= valuation(b), b != 0.  The
  // result is the canonical representative in [0, p^(N - v(b))), so that
  // divide_exact(a, b) * b == a holds exactly in R.
  std::uint64_t divide_exact(std::uint64_t a, std::uint64_t b) const;

  std::string to_string(std::uint64_t a) const;

 private:
  std::uint64_t p_;
  unsigned precision_;
  std::uint64_t modulus_;
  std::uint64_t pow2_mask_;  // nonzero iff p == 2
  bool small_;               // modulus^2 fits in uint64
};

}  // namespace kleinring
