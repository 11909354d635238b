#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ldseds/matrix.hpp"

namespace ldseds {

// Search box shared by the whole suite.
inline constexpr double kBoxLower = -100.0;
inline constexpr double kBoxUpper = 100.0;

// Base landscapes, each normalized so base(0) = 0 at its global minimum.
// Where the conventional definition lives on a smaller native box, the
// matching input shrink is folded into the base so that all of them are
// sensibly conditioned on [-100, 100]^D.
enum class BaseFn {
    Zakharov,
    Rosenbrock,
    Rastrigin,
    SchafferF6,          // expanded Schaffer F6 ring sum
    LunacekBiRastrigin,
    NonContRastrigin,
    Levy,
    Ackley,
    Griewank,
    BentCigar,
    HgBat,
    HighConditionedElliptic,
    Discus,
    Katsuura,
    ModifiedSchwefel,
    SchafferF7,
    GriewankRosenbrock,  // expanded Griewank-plus-Rosenbrock ring sum
};

std::string to_string(BaseFn f);
BaseFn parse_base_fn(std::string_view name);

double eval_base(BaseFn f, std::span<const double> z);

// Seeded random orthogonal matrix: Householder QR of a Gaussian matrix with
// diagonal sign correction.
Matrix make_rotation(std::size_t d, std::uint64_t seed);

struct HybridLayout {
    std::vector<BaseFn> components;
    std::vector<double> proportions;        // sums to 1
    std::vector<std::size_t> partition;     // per-component dimension counts
    std::vector<std::size_t> dim_permutation;
};

struct CompositionComponent {
    BaseFn base = BaseFn::Rastrigin;
    std::vector<double> shift;
    Matrix rotation;
    double sigma = 10.0;
    double lambda = 1.0;
    double bias = 0.0;
};

// Evaluable benchmark instance: f(x) = base(M (x - o)) + bias for plain
// shifted-rotated specs; hybrids additionally permute and partition the
// rotated input across components; compositions blend shifted-rotated
// components with Gaussian proximity weights (a simplified combinator, not
// the full CEC machinery).
struct ObjectiveSpec {
    enum class Layout { ShiftedRotated, Hybrid, Composition };

    Layout layout = Layout::ShiftedRotated;
    BaseFn base = BaseFn::Zakharov;
    std::size_t dim = 0;
    std::vector<double> shift;
    Matrix rotation;
    double bias = 0.0;
    std::optional<HybridLayout> hybrid;
    std::vector<CompositionComponent> composition;

    // provenance
    std::string id;
    std::uint64_t shift_seed = 0;
    std::uint64_t rot_seed = 0;

    // The point where evaluate() returns exactly bias.
    const std::vector<double>& optimum() const {
        return layout == Layout::Composition ? composition.front().shift : shift;
    }
};

ObjectiveSpec make_objective(BaseFn base, std::size_t d, std::uint64_t shift_seed,
                             std::uint64_t rot_seed, double bias);

ObjectiveSpec make_hybrid(const std::vector<BaseFn>& components,
                          const std::vector<double>& proportions, std::size_t d,
                          std::uint64_t shift_seed, std::uint64_t rot_seed, double bias);

ObjectiveSpec make_composition(const std::vector<BaseFn>& components,
                               const std::vector<double>& sigmas,
                               const std::vector<double>& lambdas, std::size_t d,
                               std::uint64_t shift_seed, std::uint64_t rot_seed,
                               double bias);

double evaluate(const ObjectiveSpec& spec, std::span<const double> x);

// (fitness - z_star) / |z_star|; rejects z_star == 0.
double relative_error(double fitness, double z_star);

// Registry of the benchmark inventory, addressable by string id in harness
// configs ("f01_zakharov_sr" .. "f19_cp_schwefel_rastrigin_rosen_grie_schaffer6").
std::vector<std::string> objective_ids();
bool is_registered_objective(const std::string& id);
double registered_bias(const std::string& id);
ObjectiveSpec make_registered(const std::string& id, std::size_t dim,
                              std::uint64_t shift_seed, std::uint64_t rot_seed);

}  // namespace ldseds
