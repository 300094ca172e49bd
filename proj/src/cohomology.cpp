#include "kleinring/cohomology.hpp"

#include <cstdlib>
#include <sstream>

namespace kleinring {

ResolutionSlice resolution_slice(int degree) {
  ResolutionSlice s;
  s.degree = degree;
  int top = degree >= 0 ? degree : -degree - 1;
  for (int i = top; i >= 0; --i) s.monomials.emplace_back(i, top - i);
  return s;
}

const Engine::Actions& Engine::actions(const TypedLattice& lat) {
  std::string key = lat.content_key();
  auto it = action_cache_.find(key);
  if (it != action_cache_.end()) return it->second;
  Actions a{lat.x_action(), lat.y_action()};
  return action_cache_.emplace(std::move(key), std::move(a)).first->second;
}

namespace {

// C_i(x) = x for even i, x - p for odd i.
RMat c_op(const Dvr& ring, const RMat& x, int i) {
  if (i % 2 == 0) return x;
  return x - RMat::scalar(ring, x.rows(), ring.p() % ring.modulus());
}

void add_block(RMat& m, const Dvr& ring, int src_slot, int tgt_slot,
               const RMat& block, bool negate) {
  int d = block.rows();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      std::uint64_t v = block.at(i, j);
      if (negate) v = ring.neg(v);
      int r = src_slot * d + i, c = tgt_slot * d + j;
      m.at(r, c) = ring.add(m.at(r, c), v);
    }
}

int slot_index(const ResolutionSlice& s, int i, int j) {
  // Monomials are listed with i descending from the top.
  int top = s.monomials.empty() ? -1 : s.monomials.front().first;
  if (i < 0 || j < 0 || i + j != top + 0 * j || i > top) return -1;
  return top - i;
}

}  // namespace

RMat Engine::full_differential(const TypedLattice& lat, int n) {
  const Actions& act = actions(lat);
  int d = lat.total_dim();
  ResolutionSlice src = resolution_slice(n);
  ResolutionSlice tgt = resolution_slice(n + 1);
  RMat m(ring_, src.size() * d, tgt.size() * d);
  if (n >= 0) {
    // (delta f)(u^i v^j) = C_i(x) f(u^{i-1} v^j) + (-1)^i C_j(y) f(u^i v^{j-1}).
    for (int t = 0; t < tgt.size(); ++t) {
      auto [i, j] = tgt.monomials[static_cast<std::size_t>(t)];
      if (i >= 1) {
        int s = slot_index(src, i - 1, j);
        add_block(m, ring_, s, t, c_op(ring_, act.x, i), false);
      }
      if (j >= 1) {
        int s = slot_index(src, i, j - 1);
        add_block(m, ring_, s, t, c_op(ring_, act.y, j), i % 2 != 0);
      }
    }
  } else if (n == -1) {
    // d_0 is multiplication by xy.
    add_block(m, ring_, 0, 0, act.x * act.y, false);
  } else {
    // (delta f)(u^i v^j dual) = C_{i+1}(x) f(u^{i+1} v^j)
    //                           + (-1)^i C_{j+1}(y) f(u^i v^{j+1}).
    for (int t = 0; t < tgt.size(); ++t) {
      auto [i, j] = tgt.monomials[static_cast<std::size_t>(t)];
      int s1 = slot_index(src, i + 1, j);
      if (s1 >= 0) add_block(m, ring_, s1, t, c_op(ring_, act.x, i + 1), false);
      int s2 = slot_index(src, i, j + 1);
      if (s2 >= 0)
        add_block(m, ring_, s2, t, c_op(ring_, act.y, j + 1), i % 2 != 0);
    }
  }
  return m;
}

RMat Engine::tensor_differential(const TypedLattice& lat, int n) {
  if (n < 1) throw std::invalid_argument("tensor differential needs n >= 1");
  const Actions& act = actions(lat);
  int d = lat.total_dim();
  ResolutionSlice src = resolution_slice(n);
  ResolutionSlice tgt = resolution_slice(n - 1);
  RMat m(ring_, src.size() * d, tgt.size() * d);
  for (int s = 0; s < src.size(); ++s) {
    auto [i, j] = src.monomials[static_cast<std::size_t>(s)];
    if (i >= 1) {
      int t = slot_index(tgt, i - 1, j);
      add_block(m, ring_, s, t, c_op(ring_, act.x, i), false);
    }
    if (j >= 1) {
      int t = slot_index(tgt, i, j - 1);
      add_block(m, ring_, s, t, c_op(ring_, act.y, j), i % 2 != 0);
    }
  }
  return m;
}

ModuleInvariant Engine::homology(const TypedLattice& lat, int n) {
  if (n < 0) throw std::invalid_argument("homology needs n >= 0");
  std::string key = "H:" + std::to_string(n) + ":" + lat.content_key();
  auto it = invariant_cache_.find(key);
  if (it != invariant_cache_.end()) return it->second;
  int d = lat.total_dim();
  RMat d_out = n == 0 ? RMat(ring_, d, 0) : tensor_differential(lat, n);
  RMat d_in = tensor_differential(lat, n + 1);
  ModuleInvariant inv = subquotient_invariant(d_out, d_in);
  invariant_cache_.emplace(std::move(key), inv);
  return inv;
}

ModuleInvariant Engine::cohomology(const TypedLattice& lat, int n) {
  if (n < 1) throw std::invalid_argument("cohomology needs n >= 1");
  std::string key = "E:" + std::to_string(n) + ":" + lat.content_key();
  auto it = invariant_cache_.find(key);
  if (it != invariant_cache_.end()) return it->second;
  ModuleInvariant inv = subquotient_invariant(full_differential(lat, n),
                                              full_differential(lat, n - 1));
  invariant_cache_.emplace(std::move(key), inv);
  return inv;
}

ModuleInvariant Engine::tate(const TypedLattice& lat, int n) {
  if (n > 0) return cohomology(lat, n);
  if (n < -1) return homology(lat, -n - 1);
  std::string key = "T:" + std::to_string(n) + ":" + lat.content_key();
  auto it = invariant_cache_.find(key);
  if (it != invariant_cache_.end()) return it->second;
  const Actions& act = actions(lat);
  int d = lat.total_dim();
  std::uint64_t p = ring_.p() % ring_.modulus();
  RMat xs = act.x - RMat::scalar(ring_, d, p);
  RMat ys = act.y - RMat::scalar(ring_, d, p);
  ModuleInvariant inv;
  if (n == 0) {
    // M_pp / xyM.
    inv = subquotient_invariant(RMat::hstack(xs, ys), act.x * act.y);
  } else {
    // {m : xym = 0} / ((x-p)M + (y-p)M).
    inv = subquotient_invariant(act.x * act.y, RMat::vstack(xs, ys));
  }
  invariant_cache_.emplace(std::move(key), inv);
  return inv;
}

ModuleInvariant Engine::tate_full(const TypedLattice& lat, int n) {
  std::string key = "F:" + std::to_string(n) + ":" + lat.content_key();
  auto it = invariant_cache_.find(key);
  if (it != invariant_cache_.end()) return it->second;
  ModuleInvariant inv = subquotient_invariant(full_differential(lat, n),
                                              full_differential(lat, n - 1));
  invariant_cache_.emplace(std::move(key), inv);
  return inv;
}

std::vector<ModuleInvariant> Engine::tate_table(const TypedLattice& lat, int lo,
                                                int hi) {
  std::vector<ModuleInvariant> t;
  for (int n = lo; n <= hi; ++n) t.push_back(tate(lat, n));
  return t;
}

namespace {

ModuleInvariant k_power(int dim) {
  ModuleInvariant inv;
  if (dim < 0) throw std::logic_error("negative dimension");
  inv.torsion.assign(static_cast<std::size_t>(dim), 1);
  return inv;
}

}  // namespace

ModuleInvariant expected_family(FamilyBase base, int k, int n) {
  if (base == FamilyBase::A) {
    return k_power(n >= k ? n - k + 1 : k - n);
  }
  int m = std::abs(n - k);
  if (base == FamilyBase::Rpp) {
    if (n == k) {
      ModuleInvariant inv;
      inv.torsion = {2};
      return inv;
    }
    if (m % 2 == 0) return k_power(m / 2 + 1);
    return k_power(m / 2);
  }
  return k_power((m + 1) / 2);
}

ModuleInvariant expected_tube(const TubeId& id, int n, bool flip_branch) {
  int m = static_cast<int>(id.layer);
  if (!id.exceptional()) return k_power(static_cast<int>(id.degree()) * m);
  if (m % 2 == 0) return k_power(m / 2);
  int i = flip_branch ? 3 - id.branch : id.branch;
  int sign = (n + i) % 2 == 0 ? 1 : -1;
  return k_power((m - sign) / 2);
}

ModuleInvariant expected(const Provenance& prov, int n) {
  switch (prov.kind) {
    case Provenance::Kind::Family:
      return expected_family(prov.family.base, prov.family.translate, n);
    case Provenance::Kind::Tube:
      return expected_tube(prov.tube, n);
    case Provenance::Kind::None:
      break;
  }
  throw UnknownFamily("lattice carries no catalog provenance");
}

CheckReport check_shift(Engine& eng, const TypedLattice& lat, int n) {
  CheckReport r;
  r.name = "shift(n=" + std::to_string(n) + ")";
  ModuleInvariant lhs = eng.tate(lat, n);
  ModuleInvariant rhs = eng.tate(tau(lat), n + 1);
  r.expected = lhs.to_string();
  r.computed = rhs.to_string();
  r.pass = lhs == rhs;
  return r;
}

CheckReport check_duality(Engine& eng, const TypedLattice& lat, int n) {
  CheckReport r;
  r.name = "duality(n=" + std::to_string(n) + ")";
  ModuleInvariant lhs = eng.tate(dual(lat), n);
  ModuleInvariant rhs = eng.tate(lat, -n);
  r.expected = rhs.to_string();
  r.computed = lhs.to_string();
  r.pass = lhs == rhs;
  return r;
}

CheckReport check_kill(Engine& eng, const TypedLattice& lat, int n) {
  CheckReport r;
  r.name = "kill(n=" + std::to_string(n) + ")";
  ModuleInvariant inv = eng.tate(lat, n);
  unsigned bound = n == 0 ? 2 : 1;
  r.pass = inv.free_rank == 0;
  for (unsigned e : inv.torsion)
    if (e > bound) r.pass = false;
  r.expected = "torsion exponents <= " + std::to_string(bound);
  r.computed = inv.to_string();
  return r;
}

std::string Fingerprint::to_string() const {
  std::ostringstream os;
  os << rank.to_string() << " free=" << free_rank << " [";
  for (std::size_t i = 0; i < table.size(); ++i)
    os << (i ? ", " : "") << table[i].to_string();
  os << "]";
  return os.str();
}

Fingerprint fingerprint(Engine& eng, const TypedLattice& lat) {
  Fingerprint f;
  f.rank = vector_rank(lat);
  f.free_rank = lat.free_rank();
  f.table = eng.tate_table(lat, -4, 4);
  return f;
}

bool is_regular(Engine& eng, const TypedLattice& lat) {
  if (lat.free_rank() != 0) return false;
  VectorRank rk = vector_rank(lat);
  if (!rk.regular_balance()) return false;
  switch (lat.provenance().kind) {
    case Provenance::Kind::Tube:
      return true;
    case Provenance::Kind::Family:
      return false;
    case Provenance::Kind::None:
      break;
  }
  if (lat.ambient_dim() == 0) return true;
  TypedLattice twice = tau(tau(lat));
  return fingerprint(eng, lat) == fingerprint(eng, twice);
}

}  // namespace kleinring
