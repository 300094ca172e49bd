#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kleinring/dvr.hpp"
#include "kleinring/fp.hpp"

namespace kleinring {

// Dense matrix over the truncated DVR.  Vectors are rows and maps act by
// right multiplication: an a x b matrix is a map R^a -> R^b.
class RMat {
 public:
  RMat() : ring_(2, 8), rows_(0), cols_(0) {}
  RMat(const Dvr& ring, int rows, int cols)
      : ring_(ring), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, 0) {}

  static RMat identity(const Dvr& ring, int n);
  static RMat scalar(const Dvr& ring, int n, std::uint64_t c);

  const Dvr& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint64_t& at(int i, int j) {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }
  std::uint64_t at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }
  void set(int i, int j, long long v) { at(i, j) = ring_.reduce(v); }

  bool operator==(const RMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool is_zero() const;

  RMat operator*(const RMat& o) const;
  RMat operator+(const RMat& o) const;
  RMat operator-(const RMat& o) const;
  RMat scaled(std::uint64_t c) const;
  RMat transposed() const;
  RMat row(int i) const;
  RMat rows_slice(int begin, int end) const;
  RMat reduced_mod_p() const;  // image in k^(rows x cols)
  FpMat mod_p() const;

  static RMat hstack(const RMat& a, const RMat& b);
  static RMat vstack(const RMat& a, const RMat& b);
  static RMat block_diag(const RMat& a, const RMat& b);
  static RMat from_fp(const Dvr& ring, const FpMat& m);  // lift {0..p-1}

  std::string to_string() const;

 private:
  Dvr ring_;
  int rows_, cols_;
  std::vector<std::uint64_t> a_;
};

// U * M * V = diag(p^pivots), with U, V invertible over R.  Pivot
// valuations are nondecreasing; the value N stands for an exact zero.
struct SmithForm {
  RMat u, uinv, v, vinv;
  std::vector<unsigned> pivots;
  int rank(unsigned precision) const {
    int r = 0;
    for (unsigned s : pivots)
      if (s < precision) ++r;
    return r;
  }
};

SmithForm smith(const RMat& m);

// Basis rows of the saturated kernel {v : v * M = 0 over the exact ring}.
RMat kernel_basis(const RMat& m);
RMat kernel_basis(const SmithForm& sf, const RMat& m);

// One solution x of x * M = b (a row vector), if solvable over R.
std::optional<RMat> solve_row(const RMat& m, const RMat& b);
std::optional<RMat> solve_row(const SmithForm& sf, const RMat& m, const RMat& b);
// Row-wise batch solve: X * M = B, all rows or nothing.
std::optional<RMat> solve_rows(const RMat& m, const RMat& b);
std::optional<RMat> solve_rows(const SmithForm& sf, const RMat& m, const RMat& b);

// Basis rows of the row space (image) of M, in Smith-reduced form.
RMat row_space_basis(const RMat& m);

int rank(const RMat& m);

// Isomorphism invariant of a finitely generated R-module
// R^free_rank + sum_i R/p^torsion[i]; torsion exponents sorted ascending.
struct ModuleInvariant {
  unsigned free_rank = 0;
  std::vector<unsigned> torsion;

  bool operator==(const ModuleInvariant& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  bool operator!=(const ModuleInvariant& o) const { return !(*this == o); }
  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  // Dimension over k when every exponent is 1 (and free_rank = 0).
  int k_dim() const;
  bool is_k_power(int d) const;
  unsigned length() const;  // composition length of the torsion part
  std::string to_string() const;
};

ModuleInvariant direct_sum(const ModuleInvariant& a, const ModuleInvariant& b);

// Invariant of ker(d_out) / im(d_in) for R^a --d_in--> R^b --d_out--> R^c
// with d_in * d_out = 0.
ModuleInvariant subquotient_invariant(const RMat& d_out, const RMat& d_in);

// Invariant of R^n / rowspace(rel), rel an m x n matrix.
ModuleInvariant cokernel_invariant(const RMat& rel, int ambient_rank);

}  // namespace kleinring
