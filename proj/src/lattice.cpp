#include "kleinring/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace kleinring {

std::string VectorRank::to_string() const {
  std::ostringstream os;
  os << "(" << center << "|" << arm[0] << "," << arm[1] << "," << arm[2] << ","
     << arm[3] << ")";
  return os.str();
}

FpMat QuiverRep::stacked() const {
  FpMat s(p, 0, static_cast<int>(center));
  for (int t = 0; t < 4; ++t) s = FpMat::vstack(s, arm[t]);
  return s;
}

std::string TubeId::to_string() const {
  std::ostringstream os;
  switch (point) {
    case Point::Generic:
      os << "tube(f=" << poly_to_string(f) << ",n=" << layer << ")";
      break;
    case Point::L0:
      os << "etube(l=0,i=" << branch << ",n=" << layer << ")";
      break;
    case Point::L1:
      os << "etube(l=1,i=" << branch << ",n=" << layer << ")";
      break;
    case Point::LInf:
      os << "etube(l=inf,i=" << branch << ",n=" << layer << ")";
      break;
  }
  return os.str();
}

std::string FamilyId::to_string() const {
  std::string b;
  switch (base) {
    case FamilyBase::A: b = "A"; break;
    case FamilyBase::Rpp: b = "R[pp]"; break;
    case FamilyBase::Rp0: b = "R[p0]"; break;
    case FamilyBase::R0p: b = "R[0p]"; break;
    case FamilyBase::R00: b = "R[00]"; break;
  }
  if (translate != 0) b += "^" + std::to_string(translate);
  return b;
}

TypedLattice::TypedLattice(const Dvr& ring, std::array<unsigned, 4> counts,
                           RMat basis, unsigned free_rank, Provenance prov)
    : ring_(ring), counts_(counts), basis_(std::move(basis)),
      free_rank_(free_rank), prov_(prov) {
  int d = static_cast<int>(counts_[0] + counts_[1] + counts_[2] + counts_[3]);
  if (basis_.rows() != d || basis_.cols() != d)
    throw std::invalid_argument("lattice basis must be square of ambient size");
  // Normalized position: every type projection must be onto.
  int off = 0;
  for (int t = 0; t < 4; ++t) {
    int ct = static_cast<int>(counts_[t]);
    if (ct == 0) continue;
    FpMat block(ring_.p(), d, ct);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < ct; ++j)
        block.at(i, j) =
            static_cast<std::uint32_t>(basis_.at(i, off + j) % ring_.p());
    if (block.rank() != ct)
      throw NotNormalized("type projection " +
                          std::string(coord_type_name(kCoordTypes[t])) +
                          " is not onto");
    off += ct;
  }
}

std::vector<CoordType> TypedLattice::types() const {
  std::vector<CoordType> ts;
  for (int t = 0; t < 4; ++t)
    for (unsigned i = 0; i < counts_[t]; ++i) ts.push_back(kCoordTypes[t]);
  return ts;
}

RMat TypedLattice::a_part_action(const RMat& ambient_diag) const {
  if (ambient_dim() == 0) return RMat(ring_, 0, 0);
  auto sol = solve_rows(basis_, basis_ * ambient_diag);
  if (!sol) throw std::logic_error("lattice not stable under ring action");
  return *sol;
}

RMat TypedLattice::x_action() const {
  RMat m = a_part_action(ambient_x(ring_, types()));
  for (unsigned i = 0; i < free_rank_; ++i)
    m = RMat::block_diag(m, k_regular_x(ring_));
  return m;
}

RMat TypedLattice::y_action() const {
  RMat m = a_part_action(ambient_y(ring_, types()));
  for (unsigned i = 0; i < free_rank_; ++i)
    m = RMat::block_diag(m, k_regular_y(ring_));
  return m;
}

RMat TypedLattice::z_action_a_part() const {
  return a_part_action(ambient_z(ring_, types()));
}

std::string TypedLattice::content_key() const {
  std::ostringstream os;
  os << ring_.p() << ":" << ring_.precision() << ":";
  for (int t = 0; t < 4; ++t) os << counts_[t] << ",";
  os << free_rank_ << ":";
  for (int i = 0; i < basis_.rows(); ++i)
    for (int j = 0; j < basis_.cols(); ++j) os << basis_.at(i, j) << ",";
  return os.str();
}

TypedLattice normalize_in_ambient(const Dvr& ring,
                                  const std::vector<CoordType>& types,
                                  const RMat& rows, Provenance prov) {
  const unsigned N = ring.precision();
  int m = rows.rows();
  std::array<unsigned, 4> counts{};
  std::array<std::vector<int>, 4> cols;
  for (std::size_t j = 0; j < types.size(); ++j)
    cols[static_cast<int>(types[j])].push_back(static_cast<int>(j));

  RMat out(ring, m, m);
  int out_off = 0;
  unsigned filled = 0;
  for (int t = 0; t < 4; ++t) {
    int nt = static_cast<int>(cols[t].size());
    if (nt == 0) continue;
    RMat block(ring, m, nt);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < nt; ++j) block.at(i, j) = rows.at(i, cols[t][static_cast<std::size_t>(j)]);
    SmithForm sf = smith(block);
    int rt = sf.rank(N);
    counts[t] = static_cast<unsigned>(rt);
    filled += static_cast<unsigned>(rt);
    if (out_off + rt > m)
      throw NotNormalized("type projections exceed the lattice rank");
    RMat w = block * sf.v;
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < nt; ++j) {
        std::uint64_t val = w.at(i, j);
        if (j < rt) {
          unsigned s = sf.pivots[static_cast<std::size_t>(j)];
          if (s > ring.guard())
            throw PrecisionExhausted("normalization pivot in the guard band");
          std::uint64_t pe = ring.pow_p(s);
          if (val % pe != 0)
            throw std::logic_error("normalization: row not in the projection span");
          out.at(i, out_off + j) = val / pe;
        } else if (val != 0) {
          throw std::logic_error("normalization: residue outside the row space");
        }
      }
    }
    out_off += rt;
  }
  if (filled != static_cast<unsigned>(m))
    throw NotNormalized("type projections do not fill the lattice rank (rank " +
                        std::to_string(m) + ", filled " + std::to_string(filled) + ")");
  return TypedLattice(ring, counts, out, 0, prov);
}

ValidationReport validate(const QuiverRep& rep) {
  ValidationReport r;
  for (int t = 0; t < 4; ++t) {
    const FpMat& f = rep.arm[t];
    if (f.cols() != static_cast<int>(rep.center)) {
      r.ok = false;
      r.violations.push_back(std::string("arm ") + coord_type_name(kCoordTypes[t]) +
                             " has wrong domain dimension");
      continue;
    }
    if (f.rows() > 0 && f.rank() != f.rows()) {
      r.ok = false;
      r.violations.push_back(std::string("arm ") + coord_type_name(kCoordTypes[t]) +
                             " is not surjective");
    }
  }
  if (r.ok) {
    FpMat s = rep.stacked();
    if (s.rank() != static_cast<int>(rep.center)) {
      r.ok = false;
      r.violations.push_back("f_+ is not injective");
    }
  }
  return r;
}

TypedLattice realize(const Dvr& ring, const QuiverRep& rep) {
  ValidationReport v = validate(rep);
  if (!v.ok) {
    std::string msg;
    for (const auto& s : v.violations) msg += (msg.empty() ? "" : "; ") + s;
    throw InvalidRepresentation(msg);
  }
  std::array<unsigned, 4> counts{};
  for (int t = 0; t < 4; ++t) counts[t] = rep.arm_dim(t);
  int d_total = static_cast<int>(counts[0] + counts[1] + counts[2] + counts[3]);
  int c = static_cast<int>(rep.center);

  // Row-space form of the image of f_+ inside k^D.
  FpMat image(rep.p, c, d_total);
  int off = 0;
  for (int t = 0; t < 4; ++t) {
    for (int r = 0; r < rep.arm[t].rows(); ++r)
      for (int i = 0; i < c; ++i) image.at(i, off + r) = rep.arm[t].at(r, i);
    off += rep.arm[t].rows();
  }
  std::vector<int> pivots;
  FpMat w = image.rref(&pivots);

  RMat basis(ring, d_total, d_total);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < d_total; ++j) basis.at(i, j) = w.at(i, j);
  std::vector<bool> is_piv(static_cast<std::size_t>(d_total), false);
  for (int j : pivots) is_piv[static_cast<std::size_t>(j)] = true;
  int row = c;
  for (int j = 0; j < d_total; ++j) {
    if (is_piv[static_cast<std::size_t>(j)]) continue;
    basis.at(row, j) = ring.p() % ring.modulus();
    ++row;
  }
  return TypedLattice(ring, counts, basis);
}

QuiverRep rep_of(const TypedLattice& lat) {
  const Dvr& ring = lat.ring();
  QuiverRep rep;
  rep.p = ring.p();
  std::vector<int> pivots;
  FpMat w = lat.basis().mod_p().rref(&pivots);
  int c = static_cast<int>(pivots.size());
  rep.center = static_cast<unsigned>(c);
  int off = 0;
  for (int t = 0; t < 4; ++t) {
    int dt = static_cast<int>(lat.type_counts()[t]);
    FpMat f(ring.p(), dt, c);
    for (int r = 0; r < dt; ++r)
      for (int i = 0; i < c; ++i) f.at(r, i) = w.at(i, off + r);
    rep.arm[t] = f;
    off += dt;
  }
  return rep;
}

VectorRank vector_rank(const TypedLattice& lat) {
  VectorRank r;
  r.center = static_cast<unsigned>(lat.basis().mod_p().rank());
  for (int t = 0; t < 4; ++t) r.arm[t] = lat.type_counts()[t];
  return r;
}

TypedLattice direct_sum(const TypedLattice& a, const TypedLattice& b) {
  if (a.ring() != b.ring()) throw std::invalid_argument("mixed rings");
  const Dvr& ring = a.ring();
  std::array<unsigned, 4> counts{};
  for (int t = 0; t < 4; ++t) counts[t] = a.type_counts()[t] + b.type_counts()[t];
  RMat block = RMat::block_diag(a.basis(), b.basis());
  std::vector<CoordType> combined = a.types();
  for (CoordType t : b.types()) combined.push_back(t);
  // Permute columns into the canonical grouping.
  std::vector<int> order;
  for (int t = 0; t < 4; ++t)
    for (std::size_t j = 0; j < combined.size(); ++j)
      if (static_cast<int>(combined[j]) == t) order.push_back(static_cast<int>(j));
  RMat basis(ring, block.rows(), block.cols());
  for (int i = 0; i < block.rows(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j)
      basis.at(i, static_cast<int>(j)) = block.at(i, order[j]);
  return TypedLattice(ring, counts, basis, a.free_rank() + b.free_rank());
}

TypedLattice dual(const TypedLattice& lat) {
  const Dvr& ring = lat.ring();
  int d = lat.ambient_dim();
  if (d == 0)
    return TypedLattice(ring, {}, RMat(ring, 0, 0), lat.free_rank());
  std::vector<CoordType> ts = lat.types();
  RMat x = lat.a_part_action(ambient_x(ring, ts)).transposed();
  RMat y = lat.a_part_action(ambient_y(ring, ts)).transposed();
  std::uint64_t p = ring.p() % ring.modulus();
  std::uint64_t p2 = ring.mul(p, p);
  RMat xy = x * y;
  // Integral projectors p^2 e_t scale the hull into the lattice; the dual
  // in its hull coordinates is recovered without any division.
  std::array<RMat, 4> proj{
      xy, x.scaled(p) - xy, y.scaled(p) - xy,
      RMat::scalar(ring, d, p2) - x.scaled(p) - y.scaled(p) + xy};
  std::array<unsigned, 4> counts{};
  RMat stack(ring, 0, d);
  for (int t = 0; t < 4; ++t) {
    RMat b = row_space_basis(proj[t]);
    counts[t] = static_cast<unsigned>(b.rows());
    stack = RMat::vstack(stack, b);
  }
  if (stack.rows() != d)
    throw std::logic_error("dual: eigencomponents do not fill the hull");
  auto coords = solve_rows(stack, RMat::scalar(ring, d, p2));
  if (!coords) throw std::logic_error("dual: lattice does not embed in its hull");
  return TypedLattice(ring, counts, *coords, lat.free_rank());
}

unsigned min_generators(const TypedLattice& lat) {
  int d = lat.ambient_dim();
  if (d == 0) return lat.free_rank();
  std::vector<CoordType> ts = lat.types();
  RMat x = lat.a_part_action(ambient_x(lat.ring(), ts));
  RMat y = lat.a_part_action(ambient_y(lat.ring(), ts));
  int r = RMat::vstack(x, y).mod_p().rank();
  return static_cast<unsigned>(d - r) + lat.free_rank();
}

ProjectiveCover projective_cover(const TypedLattice& lat) {
  if (lat.free_rank() != 0)
    throw std::invalid_argument("projective cover wants the A-part only");
  const Dvr& ring = lat.ring();
  int d = lat.ambient_dim();
  ProjectiveCover cover{0, RMat(ring, 0, d), RMat(ring, 0, 0)};
  if (d == 0) return cover;
  std::vector<CoordType> ts = lat.types();
  RMat x = lat.a_part_action(ambient_x(ring, ts));
  RMat y = lat.a_part_action(ambient_y(ring, ts));
  RMat xy = x * y;
  std::vector<int> pivots;
  RMat::vstack(x, y).mod_p().rref(&pivots);
  std::vector<bool> is_piv(static_cast<std::size_t>(d), false);
  for (int j : pivots) is_piv[static_cast<std::size_t>(j)] = true;
  std::vector<int> gens;
  for (int j = 0; j < d; ++j)
    if (!is_piv[static_cast<std::size_t>(j)]) gens.push_back(j);
  cover.generators = static_cast<unsigned>(gens.size());
  RMat rows(ring, 4 * static_cast<int>(gens.size()), d);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    int g = gens[i];
    int base = 4 * static_cast<int>(i);
    rows.at(base + 0, g) = 1;
    for (int j = 0; j < d; ++j) {
      rows.at(base + 1, j) = x.at(g, j);
      rows.at(base + 2, j) = y.at(g, j);
      rows.at(base + 3, j) = xy.at(g, j);
    }
  }
  SmithForm sf = smith(rows);
  if (sf.rank(ring.precision()) != d)
    throw std::logic_error("projective cover is not surjective");
  cover.map_rows = rows;
  cover.kernel_rows = kernel_basis(sf, rows);
  return cover;
}

namespace {

Provenance translated_provenance(const Provenance& prov, int step) {
  Provenance out;
  switch (prov.kind) {
    case Provenance::Kind::None:
      return out;
    case Provenance::Kind::Family: {
      FamilyId f = prov.family;
      f.translate += step;
      return Provenance::of_family(f);
    }
    case Provenance::Kind::Tube: {
      TubeId t = prov.tube;
      if (t.exceptional()) t.branch = 3 - t.branch;
      return Provenance::of_tube(t);
    }
  }
  return out;
}

}  // namespace

TypedLattice syzygy(const TypedLattice& lat) {
  if (lat.free_rank() != 0)
    throw std::invalid_argument("syzygy expects an A-lattice (no free part)");
  const Dvr& ring = lat.ring();
  ProjectiveCover cover = projective_cover(lat);
  unsigned g = cover.generators;
  if (g == 0) return TypedLattice(ring);
  RMat embed_block(ring, 0, 0);
  for (unsigned i = 0; i < g; ++i)
    embed_block = RMat::block_diag(embed_block, k_embedding_rows(ring));
  RMat embedded = cover.kernel_rows * embed_block;
  std::vector<CoordType> ts;
  for (unsigned i = 0; i < g; ++i)
    for (CoordType t : kCoordTypes) ts.push_back(t);
  return normalize_in_ambient(ring, ts, embedded,
                              translated_provenance(lat.provenance(), +1));
}

TypedLattice tau(const TypedLattice& lat) { return syzygy(lat); }

TypedLattice tau_inverse(const TypedLattice& lat) {
  TypedLattice r = dual(syzygy(dual(lat)));
  r.set_provenance(translated_provenance(lat.provenance(), -1));
  return r;
}

RMat eigen_part(const TypedLattice& lat, std::uint64_t alpha, std::uint64_t beta) {
  const Dvr& ring = lat.ring();
  int n = lat.total_dim();
  RMat x = lat.x_action() - RMat::scalar(ring, n, alpha % ring.modulus());
  RMat y = lat.y_action() - RMat::scalar(ring, n, beta % ring.modulus());
  return kernel_basis(RMat::hstack(x, y));
}

std::vector<RMat> lattice_hom_space(const TypedLattice& a, const TypedLattice& b) {
  const Dvr& ring = a.ring();
  int da = a.total_dim(), db = b.total_dim();
  RMat xa = a.x_action(), ya = a.y_action();
  RMat xb = b.x_action(), yb = b.y_action();
  int nu = da * db;
  RMat c(ring, nu, 2 * nu);
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) {
      int ex = i * db + j, ey = nu + i * db + j;
      for (int k = 0; k < da; ++k) {
        c.at(k * db + j, ex) = ring.add(c.at(k * db + j, ex), xa.at(i, k));
        c.at(k * db + j, ey) = ring.add(c.at(k * db + j, ey), ya.at(i, k));
      }
      for (int l = 0; l < db; ++l) {
        c.at(i * db + l, ex) = ring.sub(c.at(i * db + l, ex), xb.at(l, j));
        c.at(i * db + l, ey) = ring.sub(c.at(i * db + l, ey), yb.at(l, j));
      }
    }
  RMat ker = kernel_basis(c);
  std::vector<RMat> homs;
  for (int r = 0; r < ker.rows(); ++r) {
    RMat h(ring, da, db);
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < db; ++j) h.at(i, j) = ker.at(r, i * db + j);
    homs.push_back(h);
  }
  return homs;
}

std::vector<RepHom> hom_space(const QuiverRep& a, const QuiverRep& b) {
  std::uint64_t p = a.p;
  int ca = static_cast<int>(a.center), cb = static_cast<int>(b.center);
  std::array<int, 4> da{}, dbv{};
  for (int t = 0; t < 4; ++t) {
    da[t] = a.arm[t].rows();
    dbv[t] = b.arm[t].rows();
  }
  int nu = cb * ca;
  std::array<int, 4> arm_off{};
  for (int t = 0; t < 4; ++t) {
    arm_off[t] = nu;
    nu += dbv[t] * da[t];
  }
  int ne = 0;
  std::array<int, 4> eq_off{};
  for (int t = 0; t < 4; ++t) {
    eq_off[t] = ne;
    ne += dbv[t] * ca;
  }
  FpMat c(p, nu, ne);
  for (int t = 0; t < 4; ++t)
    for (int r = 0; r < dbv[t]; ++r)
      for (int s = 0; s < ca; ++s) {
        int eq = eq_off[t] + r * ca + s;
        for (int m = 0; m < cb; ++m)
          c.at(m * ca + s, eq) = static_cast<std::uint32_t>(
              (c.at(m * ca + s, eq) + b.arm[t].at(r, m)) % p);
        for (int q = 0; q < da[t]; ++q)
          c.at(arm_off[t] + r * da[t] + q, eq) = static_cast<std::uint32_t>(
              (c.at(arm_off[t] + r * da[t] + q, eq) + p - a.arm[t].at(q, s) % p) % p);
      }
  FpMat ker = c.left_nullspace();
  std::vector<RepHom> homs;
  for (int k = 0; k < ker.rows(); ++k) {
    RepHom h;
    h.center = FpMat(p, cb, ca);
    for (int m = 0; m < cb; ++m)
      for (int s = 0; s < ca; ++s) h.center.at(m, s) = ker.at(k, m * ca + s);
    for (int t = 0; t < 4; ++t) {
      h.arm[t] = FpMat(p, dbv[t], da[t]);
      for (int r = 0; r < dbv[t]; ++r)
        for (int q = 0; q < da[t]; ++q)
          h.arm[t].at(r, q) = ker.at(k, arm_off[t] + r * da[t] + q);
    }
    homs.push_back(h);
  }
  return homs;
}

namespace {

FpMat rep_hom_total(const QuiverRep& rep, const RepHom& h) {
  FpMat m = h.center;
  for (int t = 0; t < 4; ++t) {
    (void)rep;
    FpMat z1(m.p(), m.rows(), h.arm[t].cols());
    FpMat z2(m.p(), h.arm[t].rows(), m.cols());
    m = FpMat::vstack(FpMat::hstack(m, z1), FpMat::hstack(z2, h.arm[t]));
  }
  return m;
}

FpMat vectorize(const FpMat& m) {
  FpMat v(m.p(), 1, m.rows() * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) v.at(0, i * m.cols() + j) = m.at(i, j);
  return v;
}

void poly_divmod(std::uint64_t p, FpPoly a, const FpPoly& b, FpPoly* quot,
                 FpPoly* rem) {
  a = poly_trim(std::move(a));
  int db = poly_deg(b);
  FpPoly q(a.size(), 0);
  while (poly_deg(a) >= db) {
    std::uint64_t lead = a.back();
    int shift = poly_deg(a) - db;
    q[static_cast<std::size_t>(shift)] = static_cast<std::uint32_t>(lead);
    for (int i = 0; i <= db; ++i) {
      std::uint64_t sub = lead * b[static_cast<std::size_t>(i)] % p;
      auto& cc = a[static_cast<std::size_t>(i + shift)];
      cc = static_cast<std::uint32_t>((cc + p - sub) % p);
    }
    a = poly_trim(std::move(a));
  }
  if (quot) *quot = poly_trim(std::move(q));
  if (rem) *rem = a;
}

FpPoly min_poly(const FpMat& e) {
  std::uint64_t p = e.p();
  int n = e.rows();
  FpMat pow = FpMat::identity(p, n);
  FpMat krylov(p, 0, n * n);
  for (int d = 0;; ++d) {
    FpMat v = vectorize(pow);
    FpMat sol;
    if (krylov.rows() > 0 && krylov.solve_left(v, &sol)) {
      FpPoly mp(static_cast<std::size_t>(d) + 1, 0);
      for (int i = 0; i < d; ++i)
        mp[static_cast<std::size_t>(i)] =
            static_cast<std::uint32_t>((p - sol.at(0, i) % p) % p);
      mp[static_cast<std::size_t>(d)] = 1;
      return mp;
    }
    krylov = FpMat::vstack(krylov, v);
    pow = pow * e;
  }
}

// True if the minimal polynomial has at least two distinct irreducible
// factors (then the generalized eigenspaces split the representation).
bool min_poly_splits(std::uint64_t p, const FpPoly& mp) {
  FpPoly rest = mp;
  for (int dd = 1; dd <= poly_deg(mp); ++dd) {
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
      if (!poly_mod(p, rest, g).empty()) continue;
      if (!poly_is_irreducible(p, g)) continue;
      // Strip all copies of the first irreducible divisor found.
      while (true) {
        FpPoly q, r;
        poly_divmod(p, rest, g, &q, &r);
        if (!r.empty()) break;
        rest = q;
      }
      return poly_deg(rest) > 0;
    }
  }
  return false;
}

unsigned trace_pk(const FpMat& z, unsigned k) {
  std::uint64_t p = z.p();
  FpMat w = z;
  for (unsigned i = 0; i < k; ++i) {
    FpMat acc = w;
    for (std::uint64_t j = 1; j < p; ++j) acc = acc * w;
    w = acc;
  }
  std::uint64_t tr = 0;
  for (int i = 0; i < w.rows(); ++i) tr = (tr + w.at(i, i)) % p;
  return static_cast<unsigned>(tr);
}

}  // namespace

bool is_indecomposable(const QuiverRep& rep) {
  std::uint64_t p = rep.p;
  int total = static_cast<int>(rep.center);
  for (int t = 0; t < 4; ++t) total += rep.arm[t].rows();
  if (total == 0) return false;
  if (total > 512) throw Inconclusive("representation too large for the decision");
  std::vector<RepHom> ends = hom_space(rep, rep);
  std::vector<FpMat> basis;
  basis.reserve(ends.size());
  for (const auto& h : ends) basis.push_back(rep_hom_total(rep, h));
  std::size_t m = basis.size();
  if (m == 0) return false;
  if (m == 1) return true;

  // Fitting pre-split on single elements.
  for (const auto& e : basis)
    if (min_poly_splits(p, min_poly(e))) return false;
  for (std::size_t i = 0; i < m && i < 8; ++i)
    for (std::size_t j = 0; j < m && j < 8; ++j) {
      if (i == j) continue;
      if (min_poly_splits(p, min_poly(basis[i] * basis[j]))) return false;
    }

  // Radical of the endomorphism algebra by the p-power trace iteration.
  std::vector<FpMat> cur = basis;
  unsigned l = 0;
  std::uint64_t pw = p;
  while (pw <= static_cast<std::uint64_t>(total)) {
    pw *= p;
    ++l;
  }
  for (unsigned k = 0; k <= l && !cur.empty(); ++k) {
    int mm = static_cast<int>(cur.size());
    FpMat gram(p, mm, mm);
    for (int i = 0; i < mm; ++i)
      for (int j = 0; j < mm; ++j)
        gram.at(i, j) = trace_pk(cur[static_cast<std::size_t>(i)] *
                                     cur[static_cast<std::size_t>(j)],
                                 k);
    FpMat ns = gram.left_nullspace();
    std::vector<FpMat> next;
    for (int r = 0; r < ns.rows(); ++r) {
      FpMat combo(p, total, total);
      for (int i = 0; i < mm; ++i)
        if (ns.at(r, i))
          combo = combo + cur[static_cast<std::size_t>(i)].scaled(ns.at(r, i));
      next.push_back(combo);
    }
    cur = std::move(next);
  }

  // Semisimple quotient: indecomposable iff it is one finite field.
  std::size_t rad_dim = cur.size();
  std::size_t s_dim = m - rad_dim;
  if (s_dim == 1) return true;

  FpMat rad_rows(p, 0, total * total);
  for (const auto& r : cur) rad_rows = FpMat::vstack(rad_rows, vectorize(r));
  // Complement of the radical inside End.
  std::vector<FpMat> s_basis;
  FpMat span = rad_rows;
  for (const auto& b : basis) {
    FpMat v = vectorize(b);
    FpMat sol;
    if (span.rows() > 0 && span.solve_left(v, &sol)) continue;
    if (span.rows() == 0 && v.is_zero()) continue;
    span = FpMat::vstack(span, v);
    s_basis.push_back(b);
  }
  if (s_basis.size() != s_dim) throw std::logic_error("radical complement size");

  // full = [s_basis; rad] as a frame for reduction mod rad.
  FpMat frame(p, 0, total * total);
  for (const auto& s : s_basis) frame = FpMat::vstack(frame, vectorize(s));
  frame = FpMat::vstack(frame, rad_rows);
  auto s_coords = [&](const FpMat& z) {
    FpMat sol;
    if (!frame.solve_left(vectorize(z), &sol))
      throw std::logic_error("element outside the endomorphism algebra");
    FpMat c(p, 1, static_cast<int>(s_dim));
    for (std::size_t i = 0; i < s_dim; ++i)
      c.at(0, static_cast<int>(i)) = sol.at(0, static_cast<int>(i));
    return c;
  };

  for (std::size_t i = 0; i < s_dim; ++i)
    for (std::size_t j = i + 1; j < s_dim; ++j) {
      FpMat comm = s_basis[i] * s_basis[j] - s_basis[j] * s_basis[i];
      if (!s_coords(comm).is_zero()) return false;  // matrix factor present
    }

  FpMat frob(p, static_cast<int>(s_dim), static_cast<int>(s_dim));
  for (std::size_t i = 0; i < s_dim; ++i) {
    FpMat e = s_basis[i];
    FpMat ep = e;
    for (std::uint64_t j = 1; j < p; ++j) ep = ep * e;
    FpMat c = s_coords(ep);
    for (std::size_t j = 0; j < s_dim; ++j)
      frob.at(static_cast<int>(i), static_cast<int>(j)) = c.at(0, static_cast<int>(j));
  }
  FpMat fixed = (frob - FpMat::identity(p, static_cast<int>(s_dim))).left_nullspace();
  return fixed.rows() == 1;
}

RMat lift_rep_hom(const TypedLattice& a, const TypedLattice& b, const RepHom& h) {
  if (a.free_rank() != 0 || b.free_rank() != 0)
    throw std::invalid_argument("lift_rep_hom expects A-lattices");
  const Dvr& ring = a.ring();
  RMat g(ring, 0, 0);
  for (int t = 0; t < 4; ++t)
    g = RMat::block_diag(g, RMat::from_fp(ring, h.arm[t].transposed()));
  auto sol = solve_rows(b.basis(), a.basis() * g);
  if (!sol) throw std::logic_error("rep hom does not lift to the lattices");
  return *sol;
}

}  // namespace kleinring
