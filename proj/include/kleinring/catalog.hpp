#pragma once

#include <array>
#include <optional>

#include "kleinring/lattice.hpp"

namespace kleinring {

// Rank-1 lattice on which x, y act by the eigenvalues of the given type.
TypedLattice atom(const Dvr& ring, CoordType type);
TypedLattice atom(const Dvr& ring, std::uint64_t alpha, std::uint64_t beta);

// The minimal over-order as a lattice in its hull.
TypedLattice make_A(const Dvr& ring);

// Free module of rank r, carried symbolically next to an empty A-part.
TypedLattice make_free(const Dvr& ring, unsigned r);

// tau^k applied to a base family member; |translate| bounded.
TypedLattice translate_family(const Dvr& ring, FamilyId id, int bound = 4);

// The displayed closed-form vector ranks of the translated families, for
// the discrepancy report (not trusted as ground truth).
VectorRank displayed_family_rank(const FamilyId& id);

// Vector ranks of exceptional tube layers (with the arm permutations for
// the points 0 and infinity).
VectorRank erk_rank(TubeId::Point lambda, int branch, unsigned layer);

// Arms carrying the two rank-1 base layers of an exceptional tube.
std::array<CoordType, 2> exceptional_arms(TubeId::Point lambda, int branch);

QuiverRep homogeneous_tube_rep(std::uint64_t p, const FpPoly& f, unsigned layer);
TypedLattice homogeneous_tube(const Dvr& ring, const FpPoly& f, unsigned layer);

TypedLattice exceptional_tube(const Dvr& ring, TubeId::Point lambda, int branch,
                              unsigned layer);

TypedLattice build_tube(const Dvr& ring, const TubeId& id);

// Structural arm maps of the polynomial model of a homogeneous tube:
// multiplication by f^(m-1) (layer 1 into layer m) and reduction mod
// f^(m-1) (layer m onto layer m-1), acting on row vectors.
RMat homog_arm_injection(const Dvr& ring, const FpPoly& f, unsigned m);
RMat homog_arm_surjection(const Dvr& ring, const FpPoly& f, unsigned m);

}  // namespace kleinring
