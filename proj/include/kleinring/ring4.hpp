#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "kleinring/linalg.hpp"

namespace kleinring {

// Coordinate types of the hereditary hull R^4: the (alpha, beta) character
// by which x and y act.  Global order pp, p0, 0p, 00.
enum class CoordType : std::uint8_t { PP = 0, P0 = 1, OP = 2, OO = 3 };

constexpr std::array<CoordType, 4> kCoordTypes{CoordType::PP, CoordType::P0,
                                               CoordType::OP, CoordType::OO};

inline const char* coord_type_name(CoordType t) {
  switch (t) {
    case CoordType::PP: return "pp";
    case CoordType::P0: return "p0";
    case CoordType::OP: return "0p";
    case CoordType::OO: return "00";
  }
  return "?";
}

// x acts on a type-(alpha,beta) coordinate by alpha, y by beta, z by p on
// pp and zero elsewhere.
inline std::uint64_t x_eigenvalue(const Dvr& ring, CoordType t) {
  return (t == CoordType::PP || t == CoordType::P0) ? ring.p() : 0;
}
inline std::uint64_t y_eigenvalue(const Dvr& ring, CoordType t) {
  return (t == CoordType::PP || t == CoordType::OP) ? ring.p() : 0;
}
inline std::uint64_t z_eigenvalue(const Dvr& ring, CoordType t) {
  return t == CoordType::PP ? ring.p() : 0;
}

// Element of K = R[x,y]/(x(x-p), y(y-p)) in the R-basis {1, x, y, xy}.
struct KElem {
  std::array<std::uint64_t, 4> c{};  // c1, cx, cy, cxy
};

// Element of A = K + Rz in the R-basis {1, x, y, z}.
struct AElem {
  std::array<std::uint64_t, 4> c{};  // c1, cx, cy, cz
};

// Point of the embedding A# = R^4, one coordinate per type.
struct QuadCoord {
  std::array<std::uint64_t, 4> c{};

  bool operator==(const QuadCoord& o) const { return c == o.c; }
};

KElem k_mul(const Dvr& ring, const KElem& a, const KElem& b);
KElem k_add(const Dvr& ring, const KElem& a, const KElem& b);
AElem a_mul(const Dvr& ring, const AElem& a, const AElem& b);
AElem a_add(const Dvr& ring, const AElem& a, const AElem& b);

QuadCoord embed(const Dvr& ring, const KElem& e);
QuadCoord embed(const Dvr& ring, const AElem& e);
QuadCoord quad_mul(const Dvr& ring, const QuadCoord& a, const QuadCoord& b);
QuadCoord quad_add(const Dvr& ring, const QuadCoord& a, const QuadCoord& b);

// Coordinatewise action of an embedded ring element on a typed vector.
RMat act(const Dvr& ring, const QuadCoord& e,
         const std::vector<CoordType>& types, const RMat& v);

// Diagonal ambient action matrices for a typed ambient.
RMat ambient_x(const Dvr& ring, const std::vector<CoordType>& types);
RMat ambient_y(const Dvr& ring, const std::vector<CoordType>& types);
RMat ambient_z(const Dvr& ring, const std::vector<CoordType>& types);

// Action matrices of x and y on K itself in the basis {1, x, y, xy}
// (rows: image of each basis element expressed in the basis).
RMat k_regular_x(const Dvr& ring);
RMat k_regular_y(const Dvr& ring);

// Row-basis of K inside its typed R^4 hull (coordinates of 1, x, y, xy).
RMat k_embedding_rows(const Dvr& ring);

}  // namespace kleinring
