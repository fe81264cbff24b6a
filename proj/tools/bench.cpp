// Timing comparison between the serial reference kernels and their OpenMP
// counterparts: polygon oracle integration and MZ ensembles.

#include "mzq/integrands.hpp"
#include "mzq/mz.hpp"
#include "mzq/oracle.hpp"
#include "mzq/sample_data.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>
#include <cstdio>

using namespace mzq;

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms, bool identical) {
  std::printf("%-28s serial %9.2f ms   openmp %9.2f ms   speedup %5.2fx   %s\n", name,
              serial_ms, parallel_ms, serial_ms / parallel_ms,
              identical ? "results identical" : "RESULTS DIFFER");
}

} // namespace

int main() {
#ifdef _OPENMP
  std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
  std::printf("openmp: disabled at build time\n");
#endif

  const Mesh mesh = refine_uniform(triangulate(sample_survey_with_interior()), 3);
  std::printf("mesh: %d triangles, %zu vertices\n\n", mesh.count(), mesh.vertices().size());

  {
    const Integrand f = make_integrand("f3");
    OracleConfig cfg;
    cfg.tolerance = 1e-12;
    IntegrationResult rs, rp;
    const double ts = time_ms([&] { rs = integrate_polygon_serial(mesh, f, cfg); });
    const double tp = time_ms([&] { rp = integrate_polygon(mesh, f, cfg); });
    report("integrate_polygon", ts, tp,
           rs.value == rp.value && rs.error_estimate == rp.error_estimate);
  }

  {
    const PolygonRule rule = polygon_weights(mesh);
    OracleConfig cfg;
    cfg.tolerance = 1e-10;
    MZReport rs, rp;
    const double ts = time_ms(
        [&] { rs = mz_ensemble_polygon_serial(rule, kInfinity, 4, 100, 42, cfg); });
    const double tp =
        time_ms([&] { rp = mz_ensemble_polygon(rule, kInfinity, 4, 100, 42, cfg); });
    report("mz_ensemble (p=inf, N=4)", ts, tp,
           rs.ratio_min == rp.ratio_min && rs.ratio_max == rp.ratio_max &&
               rs.ratio_mean == rp.ratio_mean);
  }

  {
    const PolygonRule rule = polygon_weights(triangulate(sample_survey_with_interior()));
    OracleConfig cfg;
    cfg.tolerance = 1e-10;
    MZReport rs, rp;
    const double ts =
        time_ms([&] { rs = mz_ensemble_polygon_serial(rule, 2.0, 2, 50, 42, cfg); });
    const double tp = time_ms([&] { rp = mz_ensemble_polygon(rule, 2.0, 2, 50, 42, cfg); });
    report("mz_ensemble (p=2, N=2)", ts, tp,
           rs.ratio_min == rp.ratio_min && rs.ratio_max == rp.ratio_max &&
               rs.ratio_mean == rp.ratio_mean);
  }

  return 0;
}
