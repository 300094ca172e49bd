#include "kleinring/catalog.hpp"

#include <algorithm>

namespace kleinring {

namespace {

FamilyBase base_of_type(CoordType t) {
  switch (t) {
    case CoordType::PP: return FamilyBase::Rpp;
    case CoordType::P0: return FamilyBase::Rp0;
    case CoordType::OP: return FamilyBase::R0p;
    case CoordType::OO: return FamilyBase::R00;
  }
  return FamilyBase::Rpp;
}

}  // namespace

TypedLattice atom(const Dvr& ring, CoordType type) {
  std::array<unsigned, 4> counts{};
  counts[static_cast<int>(type)] = 1;
  RMat basis = RMat::identity(ring, 1);
  return TypedLattice(ring, counts, basis, 0,
                      Provenance::of_family({base_of_type(type), 0}));
}

TypedLattice atom(const Dvr& ring, std::uint64_t alpha, std::uint64_t beta) {
  bool ax = alpha == ring.p(), ay = beta == ring.p();
  if ((alpha != 0 && !ax) || (beta != 0 && !ay))
    throw std::invalid_argument("atom eigenvalues must be 0 or p");
  CoordType t = ax ? (ay ? CoordType::PP : CoordType::P0)
                   : (ay ? CoordType::OP : CoordType::OO);
  return atom(ring, t);
}

TypedLattice make_A(const Dvr& ring) {
  std::uint64_t p = ring.p() % ring.modulus();
  RMat basis(ring, 4, 4);
  std::uint64_t rows[4][4] = {
      {1, 1, 1, 1}, {p, p, 0, 0}, {p, 0, p, 0}, {p, 0, 0, 0}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) basis.at(i, j) = rows[i][j];
  return TypedLattice(ring, {1, 1, 1, 1}, basis, 0,
                      Provenance::of_family({FamilyBase::A, 0}));
}

TypedLattice make_free(const Dvr& ring, unsigned r) {
  return TypedLattice(ring, {}, RMat(ring, 0, 0), r);
}

TypedLattice translate_family(const Dvr& ring, FamilyId id, int bound) {
  if (std::abs(id.translate) > bound)
    throw std::out_of_range("family translate exceeds the configured bound");
  TypedLattice lat = id.base == FamilyBase::A
                         ? make_A(ring)
                         : atom(ring, kCoordTypes[static_cast<int>(id.base) - 1]);
  for (int i = 0; i < id.translate; ++i) lat = tau(lat);
  for (int i = 0; i > id.translate; --i) lat = tau_inverse(lat);
  return lat;
}

namespace {

int floor_div2(int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }

}  // namespace

VectorRank displayed_family_rank(const FamilyId& id) {
  int k = id.translate;
  VectorRank r;
  if (id.base == FamilyBase::A) {
    if (k > 0) {
      r.center = static_cast<unsigned>(2 * k - 1);
      for (auto& a : r.arm) a = static_cast<unsigned>(k);
    } else if (k < 0) {
      r.center = static_cast<unsigned>(1 - 2 * k);
      for (auto& a : r.arm) a = static_cast<unsigned>(1 - k);
    } else {
      r.center = 1;
      r.arm = {1, 1, 1, 1};
    }
    return r;
  }
  int sign_k = (k % 2 == 0) ? 1 : -1;
  unsigned pp_entry, rest;
  if (k > 0) {
    r.center = static_cast<unsigned>(k + 1);
    rest = static_cast<unsigned>(floor_div2(k));
    pp_entry = static_cast<unsigned>(floor_div2(k) - sign_k);
  } else if (k < 0) {
    r.center = static_cast<unsigned>(-k);
    rest = static_cast<unsigned>(floor_div2(1 - k));
    pp_entry = static_cast<unsigned>(floor_div2(1 - k) + sign_k);
  } else {
    r.center = 1;
    rest = 0;
    pp_entry = 1;
  }
  r.arm = {rest, rest, rest, rest};
  int pos = static_cast<int>(id.base) - 1;  // Rpp -> 0, ..., R00 -> 3
  // The displayed table is for R_pp; the others permute d_pp with d_ab.
  r.arm[0] = rest;
  r.arm[pos] = pp_entry;
  if (pos != 0) r.arm[0] = rest;
  else r.arm[0] = pp_entry;
  return r;
}

VectorRank erk_rank(TubeId::Point lambda, int branch, unsigned layer) {
  VectorRank r;
  r.center = layer;
  if (layer % 2 == 0) {
    unsigned m = layer / 2;
    r.arm = {m, m, m, m};
  } else {
    unsigned m = (layer + 1) / 2;
    if (branch == 1)
      r.arm = {m, m, m - 1, m - 1};
    else
      r.arm = {m - 1, m - 1, m, m};
    if (lambda == TubeId::Point::L0) std::swap(r.arm[1], r.arm[3]);
    if (lambda == TubeId::Point::LInf) std::swap(r.arm[1], r.arm[2]);
  }
  return r;
}

std::array<CoordType, 2> exceptional_arms(TubeId::Point lambda, int branch) {
  switch (lambda) {
    case TubeId::Point::L1:
      return branch == 1 ? std::array<CoordType, 2>{CoordType::PP, CoordType::P0}
                         : std::array<CoordType, 2>{CoordType::OP, CoordType::OO};
    case TubeId::Point::L0:
      return branch == 1 ? std::array<CoordType, 2>{CoordType::PP, CoordType::OO}
                         : std::array<CoordType, 2>{CoordType::P0, CoordType::OP};
    case TubeId::Point::LInf:
      return branch == 1 ? std::array<CoordType, 2>{CoordType::PP, CoordType::OP}
                         : std::array<CoordType, 2>{CoordType::P0, CoordType::OO};
    case TubeId::Point::Generic:
      break;
  }
  throw std::invalid_argument("exceptional_arms needs an exceptional point");
}

QuiverRep homogeneous_tube_rep(std::uint64_t p, const FpPoly& f, unsigned layer) {
  int d = poly_deg(f);
  int dn = d * static_cast<int>(layer);
  FpMat fn = companion(p, poly_pow(p, f, layer));
  QuiverRep rep;
  rep.p = p;
  rep.center = static_cast<unsigned>(2 * dn);
  FpMat left(p, dn, 2 * dn), right(p, dn, 2 * dn), sum(p, dn, 2 * dn),
      twisted(p, dn, 2 * dn);
  for (int i = 0; i < dn; ++i) {
    left.at(i, i) = 1;
    right.at(i, dn + i) = 1;
    sum.at(i, i) = 1;
    sum.at(i, dn + i) = 1;
    twisted.at(i, i) = 1;
    for (int j = 0; j < dn; ++j) twisted.at(i, dn + j) = fn.at(i, j);
  }
  rep.arm = {left, right, sum, twisted};
  return rep;
}

TypedLattice homogeneous_tube(const Dvr& ring, const FpPoly& f, unsigned layer) {
  if (layer < 1) throw std::invalid_argument("tube layer must be >= 1");
  if (!poly_is_monic(f) || !poly_is_irreducible(ring.p(), f))
    throw SemanticError("tube point must be a monic irreducible polynomial");
  FpPoly t{0, 1};
  FpPoly t_minus_1{static_cast<std::uint32_t>(ring.p() - 1), 1};
  if (f == t || f == t_minus_1)
    throw NotHomogeneousPoint("the point " + poly_to_string(f) +
                              " is exceptional; use an exceptional tube");
  TypedLattice lat = realize(ring, homogeneous_tube_rep(ring.p(), f, layer));
  TubeId id;
  id.point = TubeId::Point::Generic;
  id.f = f;
  id.layer = layer;
  lat.set_provenance(Provenance::of_tube(id));
  return lat;
}

namespace {

QuiverRep exceptional_base_rep(std::uint64_t p, TubeId::Point lambda, int branch) {
  auto arms = exceptional_arms(lambda, branch);
  QuiverRep rep;
  rep.p = p;
  rep.center = 1;
  for (int t = 0; t < 4; ++t) {
    CoordType ct = kCoordTypes[t];
    bool hit = ct == arms[0] || ct == arms[1];
    rep.arm[t] = hit ? FpMat::identity(p, 1) : FpMat(p, 0, 1);
  }
  return rep;
}

// Nonsplit extensions of Q (quotient) by S (sub) over the star quiver:
// the cokernel of the standard Hom sequence, returned as explicit cocycle
// blocks xi_t in Hom(Q_center, S_arm_t).
std::vector<std::array<FpMat, 4>> extension_classes(const QuiverRep& q,
                                                    const QuiverRep& s) {
  std::uint64_t p = q.p;
  int cq = static_cast<int>(q.center), cs = static_cast<int>(s.center);
  std::array<int, 4> dq{}, ds{};
  for (int t = 0; t < 4; ++t) {
    dq[t] = q.arm[t].rows();
    ds[t] = s.arm[t].rows();
  }
  int nu = cs * cq;
  std::array<int, 4> arm_off{};
  for (int t = 0; t < 4; ++t) {
    arm_off[t] = nu;
    nu += ds[t] * dq[t];
  }
  int ne = 0;
  std::array<int, 4> out_off{};
  for (int t = 0; t < 4; ++t) {
    out_off[t] = ne;
    ne += ds[t] * cq;
  }
  FpMat dmat(p, nu, ne);
  for (int t = 0; t < 4; ++t)
    for (int r = 0; r < ds[t]; ++r)
      for (int col = 0; col < cq; ++col) {
        int out = out_off[t] + r * cq + col;
        for (int m = 0; m < cs; ++m)
          dmat.at(m * cq + col, out) = static_cast<std::uint32_t>(
              (dmat.at(m * cq + col, out) + s.arm[t].at(r, m)) % p);
        for (int qk = 0; qk < dq[t]; ++qk)
          dmat.at(arm_off[t] + r * dq[t] + qk, out) = static_cast<std::uint32_t>(
              (dmat.at(arm_off[t] + r * dq[t] + qk, out) + p -
               q.arm[t].at(qk, col) % p) % p);
      }
  std::vector<int> pivots;
  dmat.rref(&pivots);
  std::vector<bool> in_image(static_cast<std::size_t>(ne), false);
  for (int c : pivots) in_image[static_cast<std::size_t>(c)] = true;
  std::vector<std::array<FpMat, 4>> classes;
  for (int c = 0; c < ne; ++c) {
    if (in_image[static_cast<std::size_t>(c)]) continue;
    std::array<FpMat, 4> xi;
    for (int t = 0; t < 4; ++t) xi[t] = FpMat(p, ds[t], cq);
    for (int t = 0; t < 4; ++t)
      if (c >= out_off[t] && c < out_off[t] + ds[t] * cq) {
        int rel = c - out_off[t];
        xi[t].at(rel / cq, rel % cq) = 1;
      }
    classes.push_back(xi);
  }
  return classes;
}

QuiverRep triangular_extension(const QuiverRep& s, const QuiverRep& q,
                               const std::array<FpMat, 4>& xi) {
  QuiverRep e;
  e.p = s.p;
  e.center = s.center + q.center;
  for (int t = 0; t < 4; ++t) {
    FpMat top = FpMat::hstack(s.arm[t], xi[t]);
    FpMat bottom = FpMat::hstack(FpMat(s.p, q.arm[t].rows(), static_cast<int>(s.center)),
                                 q.arm[t]);
    e.arm[t] = FpMat::vstack(top, bottom);
  }
  return e;
}

QuiverRep exceptional_rep(std::uint64_t p, TubeId::Point lambda, int branch,
                          unsigned layer) {
  if (layer == 1) return exceptional_base_rep(p, lambda, branch);
  QuiverRep sub = exceptional_rep(p, lambda, branch, layer - 1);
  int quot_branch = (layer % 2 == 1) ? branch : 3 - branch;
  QuiverRep quot = exceptional_base_rep(p, lambda, quot_branch);
  auto classes = extension_classes(quot, sub);
  VectorRank want = erk_rank(lambda, branch, layer);
  // Enumerate nonzero combinations of the class basis in lexicographic
  // order and keep the first indecomposable candidate of the stated rank.
  std::size_t e = classes.size();
  if (e == 0) throw ExtensionSearchFailed("no extension classes");
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t code = 1; code < count; ++code) {
    std::array<FpMat, 4> xi;
    for (int t = 0; t < 4; ++t) xi[t] = FpMat(p, sub.arm[t].rows(), static_cast<int>(quot.center));
    std::uint64_t c = code;
    for (std::size_t i = 0; i < e; ++i) {
      std::uint32_t coef = static_cast<std::uint32_t>(c % p);
      c /= p;
      if (coef)
        for (int t = 0; t < 4; ++t) xi[t] = xi[t] + classes[i][t].scaled(coef);
    }
    QuiverRep cand = triangular_extension(sub, quot, xi);
    if (cand.rank() != want) continue;
    if (!is_indecomposable(cand)) continue;
    return cand;
  }
  throw ExtensionSearchFailed("no indecomposable extension of the stated rank");
}

}  // namespace

TypedLattice exceptional_tube(const Dvr& ring, TubeId::Point lambda, int branch,
                              unsigned layer) {
  if (lambda == TubeId::Point::Generic)
    throw std::invalid_argument("exceptional point must be 0, 1 or inf");
  if (branch != 1 && branch != 2) throw std::invalid_argument("branch must be 1 or 2");
  if (layer < 1) throw std::invalid_argument("tube layer must be >= 1");
  QuiverRep rep = exceptional_rep(ring.p(), lambda, branch, layer);
  TypedLattice lat = realize(ring, rep);
  TubeId id;
  id.point = lambda;
  id.branch = branch;
  id.layer = layer;
  lat.set_provenance(Provenance::of_tube(id));
  return lat;
}

TypedLattice build_tube(const Dvr& ring, const TubeId& id) {
  if (id.exceptional()) return exceptional_tube(ring, id.point, id.branch, id.layer);
  return homogeneous_tube(ring, id.f, id.layer);
}

namespace {

using RPoly = std::vector<std::uint64_t>;

RPoly rpoly_lift(const Dvr& ring, const FpPoly& f) {
  RPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = f[i] % ring.modulus();
  return r;
}

RPoly rpoly_mul(const Dvr& ring, const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = ring.add(r[i + j], ring.mul(a[i], b[j]));
  return r;
}

RPoly rpoly_pow(const Dvr& ring, const RPoly& f, unsigned e) {
  RPoly r{1};
  for (unsigned i = 0; i < e; ++i) r = rpoly_mul(ring, r, f);
  return r;
}

// Remainder of t^i mod a monic divisor, over R.
RPoly rpoly_power_mod(const Dvr& ring, unsigned i, const RPoly& monic) {
  RPoly a(i + 1, 0);
  a[i] = 1;
  std::size_t db = monic.size() - 1;
  while (a.size() > db) {
    std::uint64_t lead = a.back();
    if (lead != 0) {
      std::size_t shift = a.size() - 1 - db;
      for (std::size_t j = 0; j <= db; ++j)
        a[j + shift] = ring.sub(a[j + shift], ring.mul(lead, monic[j]));
    }
    a.pop_back();
  }
  return a;
}

}  // namespace

RMat homog_arm_injection(const Dvr& ring, const FpPoly& f, unsigned m) {
  int d = poly_deg(f);
  int dm = d * static_cast<int>(m);
  RPoly lifted = rpoly_lift(ring, f);
  RPoly power = rpoly_pow(ring, lifted, m - 1);
  RMat g(ring, d, dm);
  for (int i = 0; i < d; ++i)
    for (std::size_t j = 0; j < power.size(); ++j)
      g.at(i, static_cast<int>(j) + i) = power[j];
  return g;
}

RMat homog_arm_surjection(const Dvr& ring, const FpPoly& f, unsigned m) {
  int d = poly_deg(f);
  int dm = d * static_cast<int>(m);
  int dq = d * static_cast<int>(m - 1);
  RPoly divisor = rpoly_lift(ring, poly_pow(ring.p(), f, m - 1));
  RMat q(ring, dm, dq);
  for (int i = 0; i < dm; ++i) {
    RPoly rem = rpoly_power_mod(ring, static_cast<unsigned>(i), divisor);
    for (std::size_t j = 0; j < rem.size(); ++j)
      q.at(i, static_cast<int>(j)) = rem[j];
  }
  return q;
}

}  // namespace kleinring
