#include "kleinring/fp.hpp"

#include <sstream>
#include <stdexcept>

namespace kleinring {

FpMat FpMat::identity(std::uint64_t p, int n) {
  FpMat m(p, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool FpMat::is_zero() const {
  for (auto v : a_)
    if (v) return false;
  return true;
}

FpMat FpMat::operator*(const FpMat& o) const {
  if (cols_ != o.rows_ || p_ != o.p_) throw std::invalid_argument("FpMat mul shape");
  FpMat r(p_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      std::uint64_t aik = at(i, k);
      if (!aik) continue;
      for (int j = 0; j < o.cols_; ++j)
        r.at(i, j) = static_cast<std::uint32_t>((r.at(i, j) + aik * o.at(k, j)) % p_);
    }
  return r;
}

FpMat FpMat::operator+(const FpMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("FpMat add shape");
  FpMat r(p_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = static_cast<std::uint32_t>((a_[i] + o.a_[i]) % p_);
  return r;
}

FpMat FpMat::operator-(const FpMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("FpMat sub shape");
  FpMat r(p_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = static_cast<std::uint32_t>((a_[i] + p_ - o.a_[i]) % p_);
  return r;
}

FpMat FpMat::scaled(std::uint64_t c) const {
  FpMat r(p_, rows_, cols_);
  c %= p_;
  for (std::size_t i = 0; i < a_.size(); ++i)
    r.a_[i] = static_cast<std::uint32_t>((a_[i] * c) % p_);
  return r;
}

FpMat FpMat::transposed() const {
  FpMat r(p_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

namespace {

std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
  std::uint64_t x = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) x = x * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return x;
}

}  // namespace

FpMat FpMat::rref(std::vector<int>* pivot_cols) const {
  FpMat m = *this;
  if (pivot_cols) pivot_cols->clear();
  int row = 0;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int piv = -1;
    for (int i = row; i < rows_; ++i)
      if (m.at(i, col)) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(row, j));
    std::uint64_t inv = fp_inv(m.at(row, col), p_);
    for (int j = 0; j < cols_; ++j)
      m.at(row, j) = static_cast<std::uint32_t>(m.at(row, j) * inv % p_);
    for (int i = 0; i < rows_; ++i) {
      if (i == row || !m.at(i, col)) continue;
      std::uint64_t f = m.at(i, col);
      for (int j = 0; j < cols_; ++j)
        m.at(i, j) = static_cast<std::uint32_t>(
            (m.at(i, j) + (p_ - f) * m.at(row, j)) % p_);
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++row;
  }
  return m;
}

int FpMat::rank() const {
  std::vector<int> piv;
  rref(&piv);
  return static_cast<int>(piv.size());
}

FpMat FpMat::left_nullspace() const {
  // Kernel rows of M = kernel columns of M^T, read off the RREF of M^T.
  FpMat t = transposed();
  std::vector<int> piv;
  FpMat r = t.rref(&piv);
  std::vector<bool> is_piv(t.cols(), false);
  for (int c : piv) is_piv[c] = true;
  int free_count = t.cols() - static_cast<int>(piv.size());
  FpMat basis(p_, free_count, t.cols());
  int out = 0;
  for (int c = 0; c < t.cols(); ++c) {
    if (is_piv[c]) continue;
    basis.at(out, c) = 1;
    for (std::size_t k = 0; k < piv.size(); ++k) {
      std::uint32_t v = r.at(static_cast<int>(k), c);
      if (v) basis.at(out, piv[k]) = static_cast<std::uint32_t>(p_ - v);
    }
    ++out;
  }
  return basis;
}

bool FpMat::solve_left(const FpMat& rhs, FpMat* solution) const {
  // x * M = rhs  <=>  M^T x^T = rhs^T, use RREF of [M^T | rhs^T].
  if (rhs.cols() != cols_) throw std::invalid_argument("solve_left shape");
  FpMat t = transposed();
  FpMat aug = hstack(t, rhs.transposed());
  std::vector<int> piv;
  FpMat r = aug.rref(&piv);
  FpMat x(p_, rhs.rows(), rows_);
  for (std::size_t k = 0; k < piv.size(); ++k) {
    if (piv[k] >= t.cols()) return false;  // inconsistent row
  }
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (int j = 0; j < rhs.rows(); ++j)
      x.at(j, piv[k]) = r.at(static_cast<int>(k), t.cols() + j);
  if (solution) *solution = x;
  return true;
}

bool FpMat::invertible() const { return rows_ == cols_ && rank() == rows_; }

FpMat FpMat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square");
  FpMat sol;
  if (!identity(p_, rows_).solve_left(identity(p_, rows_), &sol)) {}
  FpMat aug = hstack(*this, identity(p_, rows_));
  std::vector<int> piv;
  FpMat r = aug.rref(&piv);
  if (static_cast<int>(piv.size()) != rows_ || piv.back() >= rows_)
    throw std::invalid_argument("matrix not invertible");
  FpMat inv(p_, rows_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < rows_; ++j) inv.at(i, j) = r.at(i, rows_ + j);
  return inv;
}

FpMat FpMat::hstack(const FpMat& a, const FpMat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack shape");
  FpMat r(a.p(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

FpMat FpMat::vstack(const FpMat& a, const FpMat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack shape");
  FpMat r(a.p(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

std::string FpMat::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

FpPoly poly_trim(FpPoly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int poly_deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly poly_mul(std::uint64_t p, const FpPoly& a, const FpPoly& b) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>(
          (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  return poly_trim(r);
}

FpPoly poly_pow(std::uint64_t p, const FpPoly& f, unsigned e) {
  FpPoly r{1};
  for (unsigned i = 0; i < e; ++i) r = poly_mul(p, r, f);
  return r;
}

FpPoly poly_mod(std::uint64_t p, FpPoly a, const FpPoly& b) {
  if (!poly_is_monic(b)) throw std::invalid_argument("poly_mod: non-monic divisor");
  a = poly_trim(std::move(a));
  int db = poly_deg(b);
  while (poly_deg(a) >= db) {
    std::uint64_t lead = a.back();
    int shift = poly_deg(a) - db;
    for (int i = 0; i <= db; ++i) {
      std::uint64_t sub = lead * b[static_cast<std::size_t>(i)] % p;
      auto& c = a[static_cast<std::size_t>(i + shift)];
      c = static_cast<std::uint32_t>((c + p - sub) % p);
    }
    a = poly_trim(std::move(a));
  }
  return a;
}

bool poly_is_monic(const FpPoly& f) { return !f.empty() && f.back() == 1; }

bool poly_is_irreducible(std::uint64_t p, const FpPoly& f) {
  int d = poly_deg(f);
  if (d <= 0 || !poly_is_monic(f)) return false;
  if (d == 1) return true;
  // Trial division by every monic polynomial of degree <= d/2; desk-scale
  // degrees keep this tiny.
  for (int dd = 1; dd <= d / 2; ++dd) {
    std::uint64_t count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      FpPoly g(static_cast<std::size_t>(dd) + 1, 0);
      std::uint64_t c = code;
      for (int i = 0; i < dd; ++i) {
        g[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[static_cast<std::size_t>(dd)] = 1;
      if (poly_mod(p, f, g).empty()) return false;
    }
  }
  return true;
}

std::string poly_to_string(const FpPoly& f) {
  if (f.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = poly_deg(f); i >= 0; --i) {
    std::uint32_t c = f[static_cast<std::size_t>(i)];
    if (!c) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c != 1) os << c;
    if (i >= 1) {
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

FpMat companion(std::uint64_t p, const FpPoly& f) {
  if (!poly_is_monic(f) || poly_deg(f) < 1)
    throw std::invalid_argument("companion needs a monic polynomial");
  int d = poly_deg(f);
  FpMat m(p, d, d);
  for (int i = 1; i < d; ++i) m.at(i, i - 1) = 1;
  for (int i = 0; i < d; ++i)
    m.at(i, d - 1) = static_cast<std::uint32_t>(
        (p - f[static_cast<std::size_t>(i)] % p) % p);
  return m;
}

}  // namespace kleinring
