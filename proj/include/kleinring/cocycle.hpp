#pragma once

#include <optional>

#include "kleinring/catalog.hpp"
#include "kleinring/cohomology.hpp"

namespace kleinring {

// Map from a resolution slice into a lattice, one value row per monomial.
struct Cochain {
  int degree = 0;
  RMat values;  // slice_size x total_dim

  RMat flattened() const;
};

// Basis rows of M(n): the pp eigenpart for even n, the 0p part for odd n
// away from the infinite tube, the p0 part on it.
RMat m_slot(Engine& eng, const TypedLattice& lat, const TubeId& tube, int n);

// The sparse cocycle carrying a in the top (or, on the infinite tube,
// bottom) monomial slot; n > 0 uses the projective slices, n < 0 the dual
// ones.
Cochain xi(const TypedLattice& lat, const TubeId& tube, const RMat& a, int n);
Cochain hat_xi(const TypedLattice& lat, const TubeId& tube, const RMat& a, int n);

bool is_cocycle(Engine& eng, const TypedLattice& lat, const Cochain& c);
std::optional<Cochain> coboundary_witness(Engine& eng, const TypedLattice& lat,
                                          const Cochain& c);

// Full class-map verification at one degree: dimensions agree, every basis
// cocycle is nontrivial, p-multiples bound, and the classes span.
CheckReport verify_class_iso(Engine& eng, const TypedLattice& lat,
                             const TubeId& tube, int n);

class ShortExactSeq {
 public:
  // Validates: composite zero, pure injection, surjection, rank additivity,
  // exactness in the middle, and K-linearity of both maps.
  ShortExactSeq(TypedLattice sub, TypedLattice mid, TypedLattice quot,
                RMat inj, RMat surj);

  const TypedLattice& sub() const { return sub_; }
  const TypedLattice& mid() const { return mid_; }
  const TypedLattice& quot() const { return quot_; }
  const RMat& inj() const { return inj_; }
  const RMat& surj() const { return surj_; }

 private:
  TypedLattice sub_, mid_, quot_;
  RMat inj_, surj_;
};

// 0 -> T_1 -> T_m -> T_{m-1} -> 0 for a tube layer m >= 2.  Homogeneous
// tubes use the exact polynomial-model maps; exceptional tubes search the
// hom spaces (the quotient lands on the other branch).
ShortExactSeq tube_layer_sequence(const Dvr& ring, const TubeId& mid_id);

// a -> a + b -> b with the canonical maps.
ShortExactSeq split_sequence(const TypedLattice& a, const TypedLattice& b);

// Induced syzygy sequence via a horseshoe cover: checks that the minimal
// generator counts add (no projective correction), builds the kernels with
// explicit maps and verifies exactness plus the syzygy identification.
CheckReport omega_exact_check(Engine& eng, const ShortExactSeq& s);

// Exactness of 0 -> H^n(sub) -> H^n(mid) -> H^n(quot) -> 0 with explicit
// induced maps on Tate groups, decided by composition-length bookkeeping.
CheckReport les_check(Engine& eng, const ShortExactSeq& s, int n);

}  // namespace kleinring
