#ifndef MZQ_SAMPLE_DATA_HPP
#define MZQ_SAMPLE_DATA_HPP

#include "mzq/mesh.hpp"

namespace mzq {

// A fixed non-convex 20-vertex polygon in survey-style coordinates, with
// three designated interior points. Used by the table-reproduction command
// and the acceptance suite; also shipped as data/survey_region.json.
Polygon sample_survey_polygon();
std::vector<Point2> sample_survey_interior();

ScatteredSet sample_survey_boundary_only();
ScatteredSet sample_survey_with_interior();

} // namespace mzq

#endif
