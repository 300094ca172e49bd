#include "kleinring/ring4.hpp"

namespace kleinring {

KElem k_mul(const Dvr& ring, const KElem& a, const KElem& b) {
  // x^2 = px, y^2 = py, x*xy = y*xy = p*xy, (xy)^2 = p^2*xy.
  const std::uint64_t p = ring.p() % ring.modulus();
  auto m = [&](std::uint64_t u, std::uint64_t v) { return ring.mul(u, v); };
  auto add = [&](std::uint64_t u, std::uint64_t v) { return ring.add(u, v); };
  KElem r;
  r.c[0] = m(a.c[0], b.c[0]);
  r.c[1] = add(add(m(a.c[0], b.c[1]), m(a.c[1], b.c[0])), m(p, m(a.c[1], b.c[1])));
  r.c[2] = add(add(m(a.c[0], b.c[2]), m(a.c[2], b.c[0])), m(p, m(a.c[2], b.c[2])));
  std::uint64_t t = add(m(a.c[0], b.c[3]), m(a.c[3], b.c[0]));
  t = add(t, add(m(a.c[1], b.c[2]), m(a.c[2], b.c[1])));
  t = add(t, m(p, add(m(a.c[1], b.c[3]), m(a.c[3], b.c[1]))));
  t = add(t, m(p, add(m(a.c[2], b.c[3]), m(a.c[3], b.c[2]))));
  t = add(t, m(m(p, p), m(a.c[3], b.c[3])));
  r.c[3] = t;
  return r;
}

KElem k_add(const Dvr& ring, const KElem& a, const KElem& b) {
  KElem r;
  for (int i = 0; i < 4; ++i) r.c[i] = ring.add(a.c[i], b.c[i]);
  return r;
}

AElem a_mul(const Dvr& ring, const AElem& a, const AElem& b) {
  // xy = pz, xz = yz = z^2 = pz.
  const std::uint64_t p = ring.p() % ring.modulus();
  auto m = [&](std::uint64_t u, std::uint64_t v) { return ring.mul(u, v); };
  auto add = [&](std::uint64_t u, std::uint64_t v) { return ring.add(u, v); };
  AElem r;
  r.c[0] = m(a.c[0], b.c[0]);
  r.c[1] = add(add(m(a.c[0], b.c[1]), m(a.c[1], b.c[0])), m(p, m(a.c[1], b.c[1])));
  r.c[2] = add(add(m(a.c[0], b.c[2]), m(a.c[2], b.c[0])), m(p, m(a.c[2], b.c[2])));
  std::uint64_t t = add(m(a.c[0], b.c[3]), m(a.c[3], b.c[0]));
  t = add(t, m(p, add(m(a.c[1], b.c[2]), m(a.c[2], b.c[1]))));
  t = add(t, m(p, add(m(a.c[1], b.c[3]), m(a.c[3], b.c[1]))));
  t = add(t, m(p, add(m(a.c[2], b.c[3]), m(a.c[3], b.c[2]))));
  t = add(t, m(p, m(a.c[3], b.c[3])));
  r.c[3] = t;
  return r;
}

AElem a_add(const Dvr& ring, const AElem& a, const AElem& b) {
  AElem r;
  for (int i = 0; i < 4; ++i) r.c[i] = ring.add(a.c[i], b.c[i]);
  return r;
}

QuadCoord embed(const Dvr& ring, const KElem& e) {
  // 1 -> (1,1,1,1), x -> (p,p,0,0), y -> (p,0,p,0), xy -> (p^2,0,0,0).
  const std::uint64_t p = ring.p() % ring.modulus();
  const std::uint64_t p2 = ring.mul(p, p);
  QuadCoord q;
  q.c[0] = ring.add(e.c[0], ring.add(ring.mul(p, ring.add(e.c[1], e.c[2])),
                                     ring.mul(p2, e.c[3])));
  q.c[1] = ring.add(e.c[0], ring.mul(p, e.c[1]));
  q.c[2] = ring.add(e.c[0], ring.mul(p, e.c[2]));
  q.c[3] = e.c[0];
  return q;
}

QuadCoord embed(const Dvr& ring, const AElem& e) {
  // z -> (p,0,0,0).
  const std::uint64_t p = ring.p() % ring.modulus();
  QuadCoord q;
  q.c[0] = ring.add(e.c[0],
                    ring.mul(p, ring.add(e.c[1], ring.add(e.c[2], e.c[3]))));
  q.c[1] = ring.add(e.c[0], ring.mul(p, e.c[1]));
  q.c[2] = ring.add(e.c[0], ring.mul(p, e.c[2]));
  q.c[3] = e.c[0];
  return q;
}

QuadCoord quad_mul(const Dvr& ring, const QuadCoord& a, const QuadCoord& b) {
  QuadCoord r;
  for (int i = 0; i < 4; ++i) r.c[i] = ring.mul(a.c[i], b.c[i]);
  return r;
}

QuadCoord quad_add(const Dvr& ring, const QuadCoord& a, const QuadCoord& b) {
  QuadCoord r;
  for (int i = 0; i < 4; ++i) r.c[i] = ring.add(a.c[i], b.c[i]);
  return r;
}

RMat act(const Dvr& ring, const QuadCoord& e,
         const std::vector<CoordType>& types, const RMat& v) {
  if (v.cols() != static_cast<int>(types.size()))
    throw std::invalid_argument("act: vector does not match the ambient");
  RMat r = v;
  for (int i = 0; i < v.rows(); ++i)
    for (int j = 0; j < v.cols(); ++j)
      r.at(i, j) = ring.mul(v.at(i, j),
                            e.c[static_cast<std::size_t>(types[static_cast<std::size_t>(j)])]);
  return r;
}

namespace {

RMat diagonal_action(const Dvr& ring, const std::vector<CoordType>& types,
                     std::uint64_t (*eig)(const Dvr&, CoordType)) {
  int n = static_cast<int>(types.size());
  RMat m(ring, n, n);
  for (int i = 0; i < n; ++i)
    m.at(i, i) = eig(ring, types[static_cast<std::size_t>(i)]);
  return m;
}

}  // namespace

RMat ambient_x(const Dvr& ring, const std::vector<CoordType>& types) {
  return diagonal_action(ring, types, &x_eigenvalue);
}

RMat ambient_y(const Dvr& ring, const std::vector<CoordType>& types) {
  return diagonal_action(ring, types, &y_eigenvalue);
}

RMat ambient_z(const Dvr& ring, const std::vector<CoordType>& types) {
  return diagonal_action(ring, types, &z_eigenvalue);
}

RMat k_regular_x(const Dvr& ring) {
  // x*1 = x, x*x = px, x*y = xy, x*xy = p*xy.
  RMat m(ring, 4, 4);
  const std::uint64_t p = ring.p() % ring.modulus();
  m.at(0, 1) = 1;
  m.at(1, 1) = p;
  m.at(2, 3) = 1;
  m.at(3, 3) = p;
  return m;
}

RMat k_regular_y(const Dvr& ring) {
  RMat m(ring, 4, 4);
  const std::uint64_t p = ring.p() % ring.modulus();
  m.at(0, 2) = 1;
  m.at(1, 3) = 1;
  m.at(2, 2) = p;
  m.at(3, 3) = p;
  return m;
}

RMat k_embedding_rows(const Dvr& ring) {
  RMat b(ring, 4, 4);
  KElem basis[4];
  for (int i = 0; i < 4; ++i) basis[i].c[static_cast<std::size_t>(i)] = 1;
  for (int i = 0; i < 4; ++i) {
    QuadCoord q = embed(ring, basis[i]);
    for (int j = 0; j < 4; ++j) b.at(i, j) = q.c[static_cast<std::size_t>(j)];
  }
  return b;
}

}  // namespace kleinring
