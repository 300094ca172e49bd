#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kleinring {

// Dense matrices over the residue field k = Z/p.  Entries are reduced
// representatives in [0, p).  Row-major storage.
class FpMat {
 public:
  FpMat() : p_(2), rows_(0), cols_(0) {}
  FpMat(std::uint64_t p, int rows, int cols)
      : p_(p), rows_(rows), cols_(cols),
        a_(static_cast<std::size_t>(rows) * cols, 0) {}

  static FpMat identity(std::uint64_t p, int n);

  std::uint64_t p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::uint32_t& at(int i, int j) {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }
  std::uint32_t at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }
  void set(int i, int j, std::uint64_t v) {
    at(i, j) = static_cast<std::uint32_t>(v % p_);
  }

  bool operator==(const FpMat& o) const {
    return p_ == o.p_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool is_zero() const;

  FpMat operator*(const FpMat& o) const;
  FpMat operator+(const FpMat& o) const;
  FpMat operator-(const FpMat& o) const;
  FpMat scaled(std::uint64_t c) const;
  FpMat transposed() const;

  // Reduced row echelon form; returns the pivot column of each pivot row.
  FpMat rref(std::vector<int>* pivot_cols = nullptr) const;
  int rank() const;
  // Basis (as rows) of {v : v * M = 0}.
  FpMat left_nullspace() const;
  // One solution x of x * M = rhs per row of rhs, or empty on failure.
  bool solve_left(const FpMat& rhs, FpMat* solution) const;
  bool invertible() const;
  FpMat inverse() const;

  static FpMat hstack(const FpMat& a, const FpMat& b);
  static FpMat vstack(const FpMat& a, const FpMat& b);

  std::string to_string() const;

 private:
  std::uint64_t p_;
  int rows_, cols_;
  std::vector<std::uint32_t> a_;
};

// Polynomials over Z/p, little-endian coefficient vectors with no trailing
// zeros (the zero polynomial is the empty vector).
using FpPoly = std::vector<std::uint32_t>;

FpPoly poly_trim(FpPoly f);
int poly_deg(const FpPoly& f);  // -1 for zero
FpPoly poly_mul(std::uint64_t p, const FpPoly& a, const FpPoly& b);
FpPoly poly_pow(std::uint64_t p, const FpPoly& f, unsigned e);
// Remainder of a mod b, b monic.
FpPoly poly_mod(std::uint64_t p, FpPoly a, const FpPoly& b);
bool poly_is_monic(const FpPoly& f);
bool poly_is_irreducible(std::uint64_t p, const FpPoly& f);
std::string poly_to_string(const FpPoly& f);
// Companion matrix of a monic polynomial, coefficients in the last column.
FpMat companion(std::uint64_t p, const FpPoly& f);

}  // namespace kleinring
