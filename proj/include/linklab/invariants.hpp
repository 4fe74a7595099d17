#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "linklab/diagram.hpp"
#include "linklab/int_matrix.hpp"
#include "linklab/laurent.hpp"

namespace linklab {

// Half the signed sum of crossings between the two named components.
int linking_number(const PlanarDiagram& d, const std::string& a, const std::string& b);

// One generator curve of the Seifert surface: a cycle through circles and
// bands, kept so the pushoff-linking computation can be replayed or audited.
struct GeneratorCurve {
  std::vector<int> band_crossing_ids;  // bands traversed, in cycle order
};

struct SeifertData {
  int seifert_circle_count = 0;
  int crossing_count = 0;
  int genus = 0;                 // of the surface built by the algorithm
  int boundary_components = 0;
  std::vector<GeneratorCurve> generator_curves;

  // Opaque handle onto the surface combinatorics; consumed by seifert_matrix.
  std::shared_ptr<const struct SeifertSurface> surface;
};

// Oriented smoothing of every crossing.  Input must be connected as a plane
// graph (one piece).  The zero-crossing unknot yields one circle, genus 0.
SeifertData seifert_algorithm(const PlanarDiagram& d);

// Matrix of pushoff linking numbers of the generator curves; square of size
// 2*genus for a knot diagram.
IntMatrix seifert_matrix(const SeifertData& s);

// |det(V + V^T)| over exact integers; the 0x0 matrix gives 1.
std::int64_t determinant_from_seifert(const IntMatrix& v);

// det(V - t V^T), canonically normalized (lowest exponent 0, positive leading
// coefficient).
LaurentPoly alexander_from_seifert(const IntMatrix& v);

// Determinant of one component as a knot: sublink -> Seifert pipeline.
std::int64_t component_determinant(const PlanarDiagram& d, const std::string& component);

// Full pipeline for a connected knot diagram.
std::int64_t knot_determinant(const PlanarDiagram& knot);
LaurentPoly knot_alexander(const PlanarDiagram& knot);

}  // namespace linklab
