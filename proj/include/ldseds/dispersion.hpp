#pragma once

#include <cstdint>
#include <span>

#include "ldseds/matrix.hpp"
#include "ldseds/point_set.hpp"

namespace ldseds {

// Covering-radius measurement of a point set: sup over the unit cube of the
// minimum Euclidean distance to a sample point. The Monte Carlo estimate is
// a lower bound on the true supremum (finite probes can only undershoot);
// value never exceeds sqrt(D), the cube diameter.
struct DispersionEstimate {
    double value = 0.0;
    std::uint64_t probe_count = 0;
    std::uint64_t probe_seed = 0;
    bool exact = false;
};

// Exact supremum in one dimension over [0, 1]:
// max(first point, largest interior gap / 2, 1 - last point).
DispersionEstimate dispersion_exact_1d(std::span<const double> points);

// Monte Carlo estimate: max over seeded uniform probes of the min distance
// to any row of points.
DispersionEstimate dispersion_mc(const Matrix& points, std::uint64_t probe_count,
                                 std::uint64_t probe_seed);

inline DispersionEstimate dispersion_mc(const PointSet& ps, std::uint64_t probe_count,
                                        std::uint64_t probe_seed) {
    return dispersion_mc(ps.points, probe_count, probe_seed);
}

}  // namespace ldseds
