#pragma once

#include <memory>
#include <string>
#include <vector>

#include "kleinring/catalog.hpp"

namespace kleinring {

// Build plan for the lattice mini-language:
//   A | R[pp] | R[p0] | R[0p] | R[00] | <base>^<k> | free(<r>)
//   | tube(f=<poly>,n=<m>) | etube(l=<0|1|inf>,i=<1|2>,n=<m>)
//   | sum(<spec>,<spec>,...)
struct LatticePlan {
  enum class Kind { Family, Free, Tube, ETube, Sum };
  Kind kind = Kind::Family;
  FamilyId family;
  unsigned free_count = 0;
  std::vector<long long> poly;  // signed coefficients, reduced at build time
  TubeId::Point lambda = TubeId::Point::L0;
  int branch = 1;
  unsigned layer = 1;
  std::vector<LatticePlan> children;
  std::string text;
};

// Grammar errors carry positions; semantic validation happens in build.
LatticePlan parse_spec(const std::string& s);

// Realize a plan over a configured ring.  Reducible or exceptional tube
// polynomials and out-of-range coefficients raise SemanticError.
TypedLattice build_plan(const Dvr& ring, const LatticePlan& plan);

}  // namespace kleinring
