#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "amo/gauss.hpp"
#include "amo/laurent.hpp"

namespace amo {

/// Image of a torus point under coordinatewise log of the modulus.
struct LogPoint {
    std::vector<double> x;
    bool pleat = false;          // came from a fiber member of multiplicity >= 2
    bool has_direction = false;  // tagged with the normal direction that produced it
    ProjectiveDirection dir;
};

/// Directions (cos t : sin t) over half a turn, rationalized by continued
/// fractions; duplicates after normalization are dropped.
std::vector<ProjectiveDirection> circle_directions(int steps = 720);

struct ContourResult {
    std::vector<LogPoint> points;
    std::vector<std::string> failures;  // per-direction, non-fatal
};

/// Log images of all torus fiber points over each real direction: the locus
/// where the boundary of the amoeba can live. Works for 2 or 3 variables.
ContourResult contour_points(const LaurentPoly& f,
                             const std::vector<ProjectiveDirection>& directions);

/// Log-radial/angular sampling grid for the first coordinate.
struct AmoebaGrid {
    double t_min = -6.0;
    double t_max = 6.0;
    int t_steps = 320;
    int angle_steps = 64;
};

/// Forward sampling of the surface: for z1 on the grid, solves f(z1, .) = 0
/// for z2 and Log-maps the torus roots. Two variables only.
std::vector<LogPoint> amoeba_samples(const LaurentPoly& f,
                                     const AmoebaGrid& grid = {});

struct Raster {
    double lo1 = 0, lo2 = 0, hi1 = 0, hi2 = 0;
    int res = 0;
    std::vector<std::uint8_t> occupied;  // res * res, row-major from lo2
    std::vector<int> label;              // component id per cell, -1 occupied
    int components = 0;
    std::vector<bool> bounded;  // per component: touches no box edge
};

/// dilate is the dilation radius in cells around each sample.
Raster rasterize(const std::vector<LogPoint>& samples, double lo1, double lo2,
                 double hi1, double hi2, int res, double dilate = 1.5);

struct ComponentCount {
    int total = 0;
    int bounded = 0;
    bool stable = false;  // counts unchanged when the resolution is doubled
    Raster raster;
};

/// Counts connected components of the complement of the dilated sample set
/// inside a box: the sample extent clipped inward by `pad` so that unbounded
/// tentacles cross the box edges. A component is bounded iff it touches no
/// box edge. Verified against double resolution.
ComponentCount complement_components(const std::vector<LogPoint>& samples,
                                     int resolution = 100, double pad = 2.0);

/// CSV rows `x1,x2[,x3],tag,direction`; tag is sample/contour/pleat.
std::string to_csv(const std::vector<LogPoint>& pts);

/// 800x800 SVG: shaded raster cells, contour points colored by direction
/// angle, pleat markers black.
std::string to_svg(const Raster& raster, const std::vector<LogPoint>& contour);

void write_file(const std::string& path, const std::string& content);

}  // namespace amo
