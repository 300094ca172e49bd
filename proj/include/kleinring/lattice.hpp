#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kleinring/ring4.hpp"

namespace kleinring {

struct VectorRank {
  unsigned center = 0;
  std::array<unsigned, 4> arm{};  // pp, p0, 0p, 00

  unsigned arm_total() const { return arm[0] + arm[1] + arm[2] + arm[3]; }
  bool regular_balance() const { return 2 * center == arm_total(); }
  VectorRank operator+(const VectorRank& o) const {
    VectorRank r;
    r.center = center + o.center;
    for (int i = 0; i < 4; ++i) r.arm[i] = arm[i] + o.arm[i];
    return r;
  }
  bool operator==(const VectorRank& o) const {
    return center == o.center && arm == o.arm;
  }
  bool operator!=(const VectorRank& o) const { return !(*this == o); }
  std::string to_string() const;
};

// Representation of the star quiver: one central space, four arm spaces,
// arm maps stored column-acting (arm[t] has shape d_t x center).
struct QuiverRep {
  std::uint64_t p = 2;
  unsigned center = 0;
  std::array<FpMat, 4> arm;

  unsigned arm_dim(int t) const { return static_cast<unsigned>(arm[t].rows()); }
  VectorRank rank() const {
    VectorRank r;
    r.center = center;
    for (int t = 0; t < 4; ++t) r.arm[t] = arm_dim(t);
    return r;
  }
  FpMat stacked() const;  // f_+ : center -> sum of arms, column-acting
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Catalog provenance.  Tube points are irreducible monic polynomials f with
// f not in {t, t-1} (homogeneous) or one of the three exceptional points.
struct TubeId {
  enum class Point { Generic, L0, L1, LInf };
  Point point = Point::Generic;
  FpPoly f;           // Generic only
  int branch = 1;     // exceptional only, 1 or 2
  unsigned layer = 1;

  bool exceptional() const { return point != Point::Generic; }
  bool at_infinity() const { return point == Point::LInf; }
  unsigned degree() const {
    return point == Point::Generic ? static_cast<unsigned>(poly_deg(f)) : 1;
  }
  std::string to_string() const;
};

enum class FamilyBase { A, Rpp, Rp0, R0p, R00 };

struct FamilyId {
  FamilyBase base = FamilyBase::A;
  int translate = 0;
  std::string to_string() const;
};

struct Provenance {
  enum class Kind { None, Family, Tube };
  Kind kind = Kind::None;
  FamilyId family;
  TubeId tube;

  static Provenance none() { return {}; }
  static Provenance of_family(FamilyId f) {
    Provenance p;
    p.kind = Kind::Family;
    p.family = f;
    return p;
  }
  static Provenance of_tube(TubeId t) {
    Provenance p;
    p.kind = Kind::Tube;
    p.tube = t;
    return p;
  }
};

// An A-lattice held as a row-basis inside a typed ambient R^D (coordinates
// grouped pp | p0 | 0p | 00), plus a free K-summand K^free_rank carried as
// explicit regular blocks when action matrices are requested.
class TypedLattice {
 public:
  explicit TypedLattice(const Dvr& ring)
      : ring_(ring), counts_{}, basis_(ring, 0, 0), free_rank_(0) {}
  TypedLattice(const Dvr& ring, std::array<unsigned, 4> counts, RMat basis,
               unsigned free_rank = 0, Provenance prov = {});

  const Dvr& ring() const { return ring_; }
  const std::array<unsigned, 4>& type_counts() const { return counts_; }
  const RMat& basis() const { return basis_; }
  unsigned free_rank() const { return free_rank_; }
  const Provenance& provenance() const { return prov_; }
  void set_provenance(Provenance p) { prov_ = p; }

  int ambient_dim() const { return basis_.cols(); }   // D of the A-part
  int total_dim() const { return ambient_dim() + 4 * static_cast<int>(free_rank_); }
  std::vector<CoordType> types() const;

  // Action matrices on the total module (A-part in its basis coordinates,
  // followed by one regular K-block per free summand).
  RMat x_action() const;
  RMat y_action() const;
  // z-action is defined on the A-part only.
  RMat z_action_a_part() const;
  // Action of an arbitrary diagonal ambient operator on the A-part.
  RMat a_part_action(const RMat& ambient_diag) const;

  // Cache key: exact content, used by the cohomology engine.
  std::string content_key() const;

 private:
  Dvr ring_;
  std::array<unsigned, 4> counts_;
  RMat basis_;
  unsigned free_rank_;
  Provenance prov_;
};

// Per-type Smith reduction of a row lattice inside an arbitrary typed
// ambient; produces the canonical normalized form (ambient = A#M).
TypedLattice normalize_in_ambient(const Dvr& ring,
                                  const std::vector<CoordType>& types,
                                  const RMat& rows, Provenance prov = {});

ValidationReport validate(const QuiverRep& rep);

// The functor realizing a representation as a lattice (preimage of the
// image of f_+ under reduction mod p).
TypedLattice realize(const Dvr& ring, const QuiverRep& rep);

// The classifying functor: quiver representation of a normalized lattice.
QuiverRep rep_of(const TypedLattice& lat);

VectorRank vector_rank(const TypedLattice& lat);

TypedLattice direct_sum(const TypedLattice& a, const TypedLattice& b);

// M -> Hom(M, K), realized directly in normalized position.
TypedLattice dual(const TypedLattice& lat);

// Minimal projective cover data over K.
struct ProjectiveCover {
  unsigned generators = 0;  // g
  RMat map_rows;            // 4g x D: monomial basis of K^g -> M coordinates
  RMat kernel_rows;         // (4g - D) x 4g, saturated
};

ProjectiveCover projective_cover(const TypedLattice& lat);

// Minimal generator count over K (dim of M / rad M).
unsigned min_generators(const TypedLattice& lat);

// Kernel of the minimal projective cover, normalized.  Requires an
// A-lattice (free_rank = 0); equals the AR translate here.
TypedLattice syzygy(const TypedLattice& lat);
TypedLattice tau(const TypedLattice& lat);
TypedLattice tau_inverse(const TypedLattice& lat);

// Rows (in total-module coordinates) spanning the saturated eigenpart
// {m : xm = alpha m, ym = beta m}.
RMat eigen_part(const TypedLattice& lat, std::uint64_t alpha, std::uint64_t beta);

// Basis of Hom_K(L, L2) as D x D2 matrices in basis coordinates
// (total modules, so free summands participate).
std::vector<RMat> lattice_hom_space(const TypedLattice& a, const TypedLattice& b);

struct RepHom {
  FpMat center;             // column-acting, centerB x centerA
  std::array<FpMat, 4> arm;
};

std::vector<RepHom> hom_space(const QuiverRep& a, const QuiverRep& b);

// Complete deterministic indecomposability decision via the endomorphism
// algebra: a Fitting pre-split on single elements, then the radical of the
// algebra (trace-form iteration valid in small characteristic) and a
// Frobenius fixed-space count on the semisimple quotient.
bool is_indecomposable(const QuiverRep& rep);

// Convert a rep morphism into a lattice map between the realized lattices
// (arm-wise integer lift on the ambient, then change to basis coordinates).
RMat lift_rep_hom(const TypedLattice& a, const TypedLattice& b, const RepHom& h);

}  // namespace kleinring
