#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kleinring/lattice.hpp"

namespace kleinring {

// Monomial basis of a slice of the two-sided resolution: u^i v^j with
// i + j = n for n >= 0, dual monomials with i + j = -n - 1 for n < 0.
struct ResolutionSlice {
  int degree = 0;
  std::vector<std::pair<int, int>> monomials;

  int size() const { return static_cast<int>(monomials.size()); }
};

ResolutionSlice resolution_slice(int degree);

// All (co)homology computations, with per-lattice caching of action
// matrices and computed invariants.
class Engine {
 public:
  explicit Engine(const Dvr& ring) : ring_(ring) {}
  const Dvr& ring() const { return ring_; }

  // H_n as Tor (tensor complex), n >= 0.
  ModuleInvariant homology(const TypedLattice& lat, int n);
  // H^n as Ext (Hom complex), n >= 1.
  ModuleInvariant cohomology(const TypedLattice& lat, int n);
  // Tate group by the four-case definition.
  ModuleInvariant tate(const TypedLattice& lat, int n);
  // Tate group through the spliced full resolution, all degrees.
  ModuleInvariant tate_full(const TypedLattice& lat, int n);
  std::vector<ModuleInvariant> tate_table(const TypedLattice& lat, int lo, int hi);

  // Differential of the spliced cochain complex, position n -> n + 1,
  // acting on flattened row vectors of Hom(P^_n, M).
  RMat full_differential(const TypedLattice& lat, int n);
  // Tensor complex differential, position n -> n - 1 (n >= 1).
  RMat tensor_differential(const TypedLattice& lat, int n);

  struct Actions {
    RMat x, y;
  };
  const Actions& actions(const TypedLattice& lat);

 private:
  Dvr ring_;
  std::map<std::string, Actions> action_cache_;
  std::map<std::string, ModuleInvariant> invariant_cache_;
};

// Closed-form values for the catalog families and tubes.  The optional
// branch flip realizes the documented freedom in labeling the two branches
// of an exceptional tube.
ModuleInvariant expected_family(FamilyBase base, int k, int n);
ModuleInvariant expected_tube(const TubeId& id, int n, bool flip_branch = false);
// Dispatch on provenance; throws UnknownFamily when none is carried.
ModuleInvariant expected(const Provenance& prov, int n);

struct CheckReport {
  std::string name;
  bool pass = false;
  std::string expected, computed, note;
};

// tate(L, n) against tate(tau L, n + 1).
CheckReport check_shift(Engine& eng, const TypedLattice& lat, int n);
// tate(dual L, n) against tate(L, -n).
CheckReport check_duality(Engine& eng, const TypedLattice& lat, int n);
// Torsion exponent bounds: <= 2 in degree 0, <= 1 elsewhere.
CheckReport check_kill(Engine& eng, const TypedLattice& lat, int n);

// Iso-distinguishing invariant: vector rank, free rank and the Tate table
// over n in [-4, 4].  Isomorphic lattices always agree on it.
struct Fingerprint {
  VectorRank rank;
  unsigned free_rank = 0;
  std::vector<ModuleInvariant> table;

  bool operator==(const Fingerprint& o) const {
    return rank == o.rank && free_rank == o.free_rank && table == o.table;
  }
  bool operator!=(const Fingerprint& o) const { return !(*this == o); }
  std::string to_string() const;
};

Fingerprint fingerprint(Engine& eng, const TypedLattice& lat);

// Numerical balance (2 d_center = sum of arms) plus catalog provenance,
// with a tau^2-fingerprint stability test for lattices of unknown origin.
bool is_regular(Engine& eng, const TypedLattice& lat);

}  // namespace kleinring
