#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ldseds {

// First 1-based position of a convergence curve whose relative error drops
// strictly below the tolerance; empty (Fail) when none does.
struct ConvergenceOutcome {
    std::optional<std::size_t> cs;
    double tolerance = 0.0;

    bool failed() const { return !cs.has_value(); }
};

ConvergenceOutcome convergence_speed(std::span<const double> curve, double z_star,
                                     double eps_tol);

// Metric cell: a finite value (lower is better) or Fail (nullopt), which
// compares worse than every finite value and ties with other Fails.
using MetricCell = std::optional<double>;

// Average ranking with ties: tied values share the mean of the positions
// they span, so each row's ranks always sum to k(k+1)/2.
std::vector<double> ranks_with_ties(std::span<const MetricCell> row);

// Functions x algorithms metric table with per-row tied ranks and column
// mean ranks.
struct RankTable {
    std::vector<std::string> row_labels;     // m functions
    std::vector<std::string> column_labels;  // k algorithms
    std::vector<std::vector<MetricCell>> metric;  // m x k
    std::vector<std::vector<double>> ranks;       // m x k
    std::vector<double> avg_ranks;                // k

    std::size_t m() const { return metric.size(); }
    std::size_t k() const { return column_labels.size(); }
};

RankTable build_rank_table(std::vector<std::string> row_labels,
                           std::vector<std::string> column_labels,
                           std::vector<std::vector<MetricCell>> metric);

struct FriedmanResult {
    double chi_f = 0.0;
    double tau_f = 0.0;
};

// chi_F^2 = 12m/(k(k+1)) * (sum R_i^2 - k(k+1)^2/4),
// tau_F   = (m-1) chi_F^2 / (m(k-1) - chi_F^2).
// Rejects the degenerate denominator m(k-1) == chi_F^2.
FriedmanResult friedman_modified(std::span<const double> avg_ranks, std::size_t m,
                                 std::size_t k);

// Upper critical value of the F distribution at significance alpha with
// (df1, df2) degrees of freedom, via numeric inversion of the regularized
// incomplete beta function (bisection to 1e-6).
double f_critical(double alpha, std::size_t df1, std::size_t df2);

// Regularized incomplete beta I_x(a, b); exposed for independent checks of
// the F-distribution inversion.
double regularized_incomplete_beta(double x, double a, double b);

// Critical difference q_alpha * sqrt(k(k+1)/(6m)) with the two-tailed
// studentized-range constants embedded for alpha = 0.05, k = 2..10. Other
// alphas are rejected rather than approximated.
double nemenyi_cd(std::size_t k, std::size_t m, double alpha = 0.05);

struct TestReport {
    double alpha = 0.05;
    double chi_f = 0.0;
    double tau_f = 0.0;
    double tau_critical = 0.0;
    bool significant = false;
    double cd = 0.0;
    std::vector<std::vector<bool>> pairwise_significant;  // k x k
};

TestReport make_test_report(const RankTable& table, double alpha);

}  // namespace ldseds
