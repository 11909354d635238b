#include "ldseds/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "ldseds/rng.hpp"

namespace ldseds {

DispersionEstimate dispersion_exact_1d(std::span<const double> points) {
    if (points.empty())
        throw std::invalid_argument("dispersion_exact_1d: empty point list");
    std::vector<double> sorted(points.begin(), points.end());
    std::sort(sorted.begin(), sorted.end());
    double worst = std::max(sorted.front(), 1.0 - sorted.back());
    for (std::size_t i = 1; i < sorted.size(); ++i)
        worst = std::max(worst, (sorted[i] - sorted[i - 1]) / 2.0);
    return {worst, 0, 0, true};
}

DispersionEstimate dispersion_mc(const Matrix& points, std::uint64_t probe_count,
                                 std::uint64_t probe_seed) {
    if (probe_count == 0)
        throw std::invalid_argument("dispersion_mc: probe_count must be >= 1");
    if (points.rows == 0)
        throw std::invalid_argument("dispersion_mc: empty point set");
    const std::size_t d = points.cols;
    SplitMix64 rng(probe_seed);
    std::vector<double> probe(d);
    double worst = 0.0;
    for (std::uint64_t p = 0; p < probe_count; ++p) {
        for (std::size_t j = 0; j < d; ++j) probe[j] = rng.next_unit();
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < points.rows; ++i) {
            const double* row = points.data.data() + i * d;
            double dist2 = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                const double diff = probe[j] - row[j];
                dist2 += diff * diff;
            }
            if (dist2 < best) {
                best = dist2;
                // A probe closer than the current record can no longer set one.
                if (best <= worst) break;
            }
        }
        if (best > worst) worst = best;
    }
    return {std::sqrt(worst), probe_count, probe_seed, false};
}

}  // namespace ldseds
