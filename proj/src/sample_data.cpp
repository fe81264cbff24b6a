#include "mzq/sample_data.hpp"

namespace mzq {

Polygon sample_survey_polygon() {
  return Polygon({
      {-85.60, 35.00}, {-85.28, 34.00}, {-85.18, 33.00}, {-85.07, 32.00},
      {-84.98, 31.00}, {-84.86, 30.71}, {-84.00, 30.57}, {-83.00, 30.43},
      {-82.20, 30.36}, {-81.95, 30.70}, {-81.62, 30.73}, {-81.30, 30.98},
      {-81.05, 31.52}, {-81.40, 32.00}, {-80.95, 32.30}, {-81.20, 32.55},
      {-81.80, 33.25}, {-82.60, 34.00}, {-83.30, 34.70}, {-84.40, 34.99},
  });
}

std::vector<Point2> sample_survey_interior() {
  return {{-84.39, 33.75}, {-83.38, 33.95}, {-83.63, 32.84}};
}

ScatteredSet sample_survey_boundary_only() {
  return ScatteredSet(sample_survey_polygon(), {});
}

ScatteredSet sample_survey_with_interior() {
  return ScatteredSet(sample_survey_polygon(), sample_survey_interior());
}

} // namespace mzq
