#include "kleinring/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace kleinring {

RMat RMat::identity(const Dvr& ring, int n) {
  RMat m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RMat RMat::scalar(const Dvr& ring, int n, std::uint64_t c) {
  RMat m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = c % ring.modulus();
  return m;
}

bool RMat::is_zero() const {
  for (auto v : a_)
    if (v) return false;
  return true;
}

RMat RMat::operator*(const RMat& o) const {
  if (cols_ != o.rows_ || ring_ != o.ring_)
    throw std::invalid_argument("RMat mul shape");
  RMat r(ring_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      std::uint64_t aik = at(i, k);
      if (!aik) continue;
      for (int j = 0; j < o.cols_; ++j)
        r.at(i, j) = ring_.add(r.at(i, j), ring_.mul(aik, o.at(k, j)));
    }
  return r;
}

RMat RMat::operator+(const RMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("RMat add shape");
  RMat r(ring_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.add(a_[i], o.a_[i]);
  return r;
}

RMat RMat::operator-(const RMat& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("RMat sub shape");
  RMat r(ring_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.sub(a_[i], o.a_[i]);
  return r;
}

RMat RMat::scaled(std::uint64_t c) const {
  RMat r(ring_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.mul(a_[i], c);
  return r;
}

RMat RMat::transposed() const {
  RMat r(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

RMat RMat::row(int i) const { return rows_slice(i, i + 1); }

RMat RMat::rows_slice(int begin, int end) const {
  RMat r(ring_, end - begin, cols_);
  for (int i = begin; i < end; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i - begin, j) = at(i, j);
  return r;
}

RMat RMat::reduced_mod_p() const {
  RMat r(ring_, rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] % ring_.p();
  return r;
}

FpMat RMat::mod_p() const {
  FpMat r(ring_.p(), rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      r.at(i, j) = static_cast<std::uint32_t>(at(i, j) % ring_.p());
  return r;
}

RMat RMat::hstack(const RMat& a, const RMat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack shape");
  RMat r(a.ring(), a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
  }
  return r;
}

RMat RMat::vstack(const RMat& a, const RMat& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack shape");
  RMat r(a.ring(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
  return r;
}

RMat RMat::block_diag(const RMat& a, const RMat& b) {
  RMat r(a.ring(), a.rows() + b.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, a.cols() + j) = b.at(i, j);
  return r;
}

RMat RMat::from_fp(const Dvr& ring, const FpMat& m) {
  RMat r(ring, m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j);
  return r;
}

std::string RMat::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i ? "; " : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? "," : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

SmithForm smith(const RMat& m) {
  const Dvr& ring = m.ring();
  const unsigned N = ring.precision();
  int r = m.rows(), c = m.cols();
  RMat s = m;
  SmithForm sf{RMat::identity(ring, r), RMat::identity(ring, r),
               RMat::identity(ring, c), RMat::identity(ring, c), {}};
  int steps = std::min(r, c);
  sf.pivots.assign(static_cast<std::size_t>(steps), N);
  for (int t = 0; t < steps; ++t) {
    // Pivot of minimal valuation, ties broken row-major.
    unsigned best = N;
    int bi = -1, bj = -1;
    for (int i = t; i < r; ++i)
      for (int j = t; j < c; ++j) {
        unsigned v = ring.valuation(s.at(i, j));
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (best == 0) goto found;
        }
      }
  found:
    if (bi < 0) break;  // the rest of the matrix is exactly zero
    if (best > ring.guard() && best < N)
      throw PrecisionExhausted("pivot valuation " + std::to_string(best) +
                               " inside the guard band");
    if (bi != t) {
      for (int j = 0; j < c; ++j) std::swap(s.at(bi, j), s.at(t, j));
      for (int j = 0; j < r; ++j) std::swap(sf.u.at(bi, j), sf.u.at(t, j));
      for (int i = 0; i < r; ++i) std::swap(sf.uinv.at(i, bi), sf.uinv.at(i, t));
    }
    if (bj != t) {
      for (int i = 0; i < r; ++i) std::swap(s.at(i, bj), s.at(i, t));
      for (int i = 0; i < c; ++i) std::swap(sf.v.at(i, bj), sf.v.at(i, t));
      for (int j = 0; j < c; ++j) std::swap(sf.vinv.at(bj, j), sf.vinv.at(t, j));
    }
    // Scale the pivot row so the pivot is exactly p^best.
    std::uint64_t unit = ring.unit_part(s.at(t, t));
    if (unit != 1) {
      std::uint64_t inv = ring.inv_unit(unit);
      for (int j = 0; j < c; ++j) s.at(t, j) = ring.mul(s.at(t, j), inv);
      for (int j = 0; j < r; ++j) sf.u.at(t, j) = ring.mul(sf.u.at(t, j), inv);
      for (int i = 0; i < r; ++i) sf.uinv.at(i, t) = ring.mul(sf.uinv.at(i, t), unit);
    }
    std::uint64_t pe = ring.pow_p(best);
    // Clear the column below via row operations.
    for (int i = t + 1; i < r; ++i) {
      std::uint64_t a = s.at(i, t);
      if (!a) continue;
      std::uint64_t f = a / pe;  // exact: pivot has minimal valuation
      for (int j = t; j < c; ++j)
        s.at(i, j) = ring.sub(s.at(i, j), ring.mul(f, s.at(t, j)));
      for (int j = 0; j < r; ++j)
        sf.u.at(i, j) = ring.sub(sf.u.at(i, j), ring.mul(f, sf.u.at(t, j)));
      for (int k = 0; k < r; ++k)
        sf.uinv.at(k, t) = ring.add(sf.uinv.at(k, t), ring.mul(f, sf.uinv.at(k, i)));
    }
    // Clear the row to the right via column operations (only row t changes).
    for (int j = t + 1; j < c; ++j) {
      std::uint64_t a = s.at(t, j);
      if (!a) continue;
      std::uint64_t f = a / pe;
      s.at(t, j) = 0;
      for (int i = 0; i < c; ++i)
        sf.v.at(i, j) = ring.sub(sf.v.at(i, j), ring.mul(f, sf.v.at(i, t)));
      for (int j2 = 0; j2 < c; ++j2)
        sf.vinv.at(t, j2) = ring.add(sf.vinv.at(t, j2), ring.mul(f, sf.vinv.at(j, j2)));
    }
    sf.pivots[static_cast<std::size_t>(t)] = best;
  }
  return sf;
}

RMat kernel_basis(const SmithForm& sf, const RMat& m) {
  const Dvr& ring = m.ring();
  int r = m.rows();
  int rk = sf.rank(ring.precision());
  return sf.u.rows_slice(rk, r);
}

RMat kernel_basis(const RMat& m) { return kernel_basis(smith(m), m); }

std::optional<RMat> solve_rows(const SmithForm& sf, const RMat& m, const RMat& b) {
  const Dvr& ring = m.ring();
  const unsigned N = ring.precision();
  if (b.cols() != m.cols()) throw std::invalid_argument("solve shape");
  int r = m.rows(), c = m.cols();
  RMat cp = b * sf.v;  // w * S = b * V with w = x * U^{-1}
  RMat w(ring, b.rows(), r);
  int steps = std::min(r, c);
  for (int row = 0; row < b.rows(); ++row) {
    for (int t = 0; t < c; ++t) {
      std::uint64_t rhs = cp.at(row, t);
      unsigned s = t < steps ? sf.pivots[static_cast<std::size_t>(t)] : N;
      if (s >= N) {
        if (rhs != 0) {
          unsigned v = ring.valuation(rhs);
          if (v > ring.guard() && v < N)
            throw PrecisionExhausted("solve residual in the guard band");
          return std::nullopt;
        }
        continue;
      }
      std::uint64_t pe = ring.pow_p(s);
      if (rhs % pe != 0) return std::nullopt;
      w.at(row, t) = rhs / pe;
    }
  }
  return w * sf.u;
}

std::optional<RMat> solve_rows(const RMat& m, const RMat& b) {
  return solve_rows(smith(m), m, b);
}

std::optional<RMat> solve_row(const SmithForm& sf, const RMat& m, const RMat& b) {
  return solve_rows(sf, m, b);
}

std::optional<RMat> solve_row(const RMat& m, const RMat& b) {
  return solve_rows(m, b);
}

RMat row_space_basis(const RMat& m) {
  const Dvr& ring = m.ring();
  SmithForm sf = smith(m);
  int rk = sf.rank(ring.precision());
  RMat basis(ring, rk, m.cols());
  for (int i = 0; i < rk; ++i) {
    std::uint64_t pe = ring.pow_p(sf.pivots[static_cast<std::size_t>(i)]);
    for (int j = 0; j < m.cols(); ++j)
      basis.at(i, j) = ring.mul(pe, sf.vinv.at(i, j));
  }
  return basis;
}

int rank(const RMat& m) { return smith(m).rank(m.ring().precision()); }

int ModuleInvariant::k_dim() const {
  if (free_rank != 0) return -1;
  for (unsigned e : torsion)
    if (e != 1) return -1;
  return static_cast<int>(torsion.size());
}

bool ModuleInvariant::is_k_power(int d) const { return k_dim() == d; }

unsigned ModuleInvariant::length() const {
  unsigned n = 0;
  for (unsigned e : torsion) n += e;
  return n;
}

std::string ModuleInvariant::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank == 1) {
    os << "R";
    first = false;
  } else if (free_rank > 1) {
    os << "R^" << free_rank;
    first = false;
  }
  // Group equal exponents, ascending.
  std::size_t i = 0;
  while (i < torsion.size()) {
    std::size_t j = i;
    while (j < torsion.size() && torsion[j] == torsion[i]) ++j;
    if (!first) os << " + ";
    first = false;
    std::size_t mult = j - i;
    if (torsion[i] == 1)
      os << "k";
    else
      os << "R/p^" << torsion[i];
    if (mult > 1) os << "^" << mult;
    i = j;
  }
  return os.str();
}

ModuleInvariant direct_sum(const ModuleInvariant& a, const ModuleInvariant& b) {
  ModuleInvariant r;
  r.free_rank = a.free_rank + b.free_rank;
  r.torsion = a.torsion;
  r.torsion.insert(r.torsion.end(), b.torsion.begin(), b.torsion.end());
  std::sort(r.torsion.begin(), r.torsion.end());
  return r;
}

ModuleInvariant cokernel_invariant(const RMat& rel, int ambient_rank) {
  const Dvr& ring = rel.ring();
  const unsigned N = ring.precision();
  SmithForm sf = smith(rel);
  ModuleInvariant inv;
  int finite = 0;
  for (unsigned s : sf.pivots) {
    if (s >= N) continue;
    ++finite;
    if (s > 0) {
      if (s > ring.guard())
        throw PrecisionExhausted("torsion exponent in the guard band");
      inv.torsion.push_back(s);
    }
  }
  inv.free_rank = static_cast<unsigned>(ambient_rank - finite);
  std::sort(inv.torsion.begin(), inv.torsion.end());
  return inv;
}

ModuleInvariant subquotient_invariant(const RMat& d_out, const RMat& d_in) {
  const Dvr& ring = d_out.ring();
  if (d_in.cols() != d_out.rows())
    throw std::invalid_argument("subquotient shapes do not compose");
  if (!(d_in * d_out).is_zero())
    throw CompositionNonZero("d_in * d_out != 0");
  SmithForm sf = smith(d_out);
  RMat ker = kernel_basis(sf, d_out);
  if (d_in.rows() == 0) return cokernel_invariant(RMat(ring, 0, ker.rows()), ker.rows());
  SmithForm ker_sf = smith(ker);
  auto coords = solve_rows(ker_sf, ker, d_in);
  if (!coords)
    throw CompositionNonZero("image does not lie in the saturated kernel");
  return cokernel_invariant(*coords, ker.rows());
}

}  // namespace kleinring
