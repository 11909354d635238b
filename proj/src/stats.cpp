#include "ldseds/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ldseds/objectives.hpp"

namespace ldseds {

ConvergenceOutcome convergence_speed(std::span<const double> curve, double z_star,
                                     double eps_tol) {
    if (curve.empty())
        throw std::invalid_argument("convergence_speed: empty curve");
    for (std::size_t g = 0; g < curve.size(); ++g) {
        if (relative_error(curve[g], z_star) < eps_tol)
            return {g + 1, eps_tol};
    }
    return {std::nullopt, eps_tol};
}

std::vector<double> ranks_with_ties(std::span<const MetricCell> row) {
    const std::size_t k = row.size();
    if (k < 2) throw std::invalid_argument("ranks_with_ties: need at least 2 entries");
    // Sort indices with Fail past every finite value; ties (including
    // Fail-Fail) share the mean of the positions they would occupy.
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    const auto worse = [&](std::size_t a, std::size_t b) {
        const bool fa = !row[a].has_value(), fb = !row[b].has_value();
        if (fa != fb) return fb;  // finite sorts first
        if (fa && fb) return false;
        return *row[a] < *row[b];
    };
    std::stable_sort(order.begin(), order.end(), worse);
    const auto tied = [&](std::size_t a, std::size_t b) {
        const bool fa = !row[a].has_value(), fb = !row[b].has_value();
        if (fa || fb) return fa == fb;
        return *row[a] == *row[b];
    };
    std::vector<double> ranks(k, 0.0);
    std::size_t pos = 0;
    while (pos < k) {
        std::size_t end = pos + 1;
        while (end < k && tied(order[pos], order[end])) ++end;
        // Positions pos..end-1 (0-based) share the mean 1-based rank.
        const double shared = (static_cast<double>(pos + 1) + static_cast<double>(end)) / 2.0;
        for (std::size_t i = pos; i < end; ++i) ranks[order[i]] = shared;
        pos = end;
    }
    return ranks;
}

RankTable build_rank_table(std::vector<std::string> row_labels,
                           std::vector<std::string> column_labels,
                           std::vector<std::vector<MetricCell>> metric) {
    if (metric.empty()) throw std::invalid_argument("build_rank_table: empty metric table");
    const std::size_t k = column_labels.size();
    if (metric.size() != row_labels.size())
        throw std::invalid_argument("build_rank_table: row label count mismatch");
    RankTable table;
    table.row_labels = std::move(row_labels);
    table.column_labels = std::move(column_labels);
    table.avg_ranks.assign(k, 0.0);
    for (auto& row : metric) {
        if (row.size() != k)
            throw std::invalid_argument("build_rank_table: ragged metric row");
        table.ranks.push_back(ranks_with_ties(row));
        for (std::size_t j = 0; j < k; ++j) table.avg_ranks[j] += table.ranks.back()[j];
    }
    table.metric = std::move(metric);
    for (double& r : table.avg_ranks) r /= static_cast<double>(table.metric.size());
    return table;
}

FriedmanResult friedman_modified(std::span<const double> avg_ranks, std::size_t m,
                                 std::size_t k) {
    if (m < 2 || k < 2)
        throw std::invalid_argument("friedman_modified: need m >= 2 and k >= 2");
    if (avg_ranks.size() != k)
        throw std::invalid_argument("friedman_modified: rank vector length != k");
    double sum_sq = 0.0;
    for (double r : avg_ranks) sum_sq += r * r;
    const double kd = static_cast<double>(k), md = static_cast<double>(m);
    const double chi_f =
        (12.0 * md / (kd * (kd + 1.0))) * (sum_sq - kd * (kd + 1.0) * (kd + 1.0) / 4.0);
    const double denom = md * (kd - 1.0) - chi_f;
    if (std::fabs(denom) < 1e-12)
        throw std::domain_error("friedman_modified: degenerate statistic, m(k-1) == chi_F^2");
    return {chi_f, (md - 1.0) * chi_f / denom};
}

namespace {

// Continued fraction for the regularized incomplete beta (modified Lentz).
double ibeta_continued_fraction(double x, double a, double b) {
    const double tiny = 1e-300;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 500; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-15) return h;
    }
    throw std::runtime_error("regularized_incomplete_beta: continued fraction did not converge");
}

}  // namespace

double regularized_incomplete_beta(double x, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::invalid_argument("regularized_incomplete_beta: a, b must be positive");
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log1p(-x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0))
        return front * ibeta_continued_fraction(x, a, b) / a;
    return 1.0 - front * ibeta_continued_fraction(1.0 - x, b, a) / b;
}

double f_critical(double alpha, std::size_t df1, std::size_t df2) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("f_critical: alpha must lie in (0, 1)");
    if (df1 < 1 || df2 < 1)
        throw std::invalid_argument("f_critical: degrees of freedom must be >= 1");
    const double d1 = static_cast<double>(df1), d2 = static_cast<double>(df2);
    const double target = 1.0 - alpha;
    const auto cdf = [&](double x) {
        return regularized_incomplete_beta(d1 * x / (d1 * x + d2), d1 / 2.0, d2 / 2.0);
    };
    double lo = 0.0, hi = 1.0;
    int expansions = 0;
    while (cdf(hi) < target) {
        hi *= 2.0;
        if (++expansions > 200)
            throw std::runtime_error("f_critical: bracket expansion failed (alpha=" +
                                     std::to_string(alpha) + ")");
    }
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        (cdf(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double nemenyi_cd(std::size_t k, std::size_t m, double alpha) {
    if (m < 1) throw std::invalid_argument("nemenyi_cd: m must be >= 1");
    if (std::fabs(alpha - 0.05) > 1e-12)
        throw std::invalid_argument(
            "nemenyi_cd: only alpha = 0.05 is supported (embedded q table)");
    // Two-tailed Nemenyi constants q_{0.05} for k = 2..10.
    static constexpr double kQ05[] = {1.960, 2.343, 2.569, 2.728, 2.850,
                                      2.949, 3.031, 3.102, 3.164};
    if (k < 2 || k > 10)
        throw std::invalid_argument("nemenyi_cd: k must lie in 2..10 (embedded q table)");
    const double q = kQ05[k - 2];
    return q * std::sqrt(static_cast<double>(k) * (static_cast<double>(k) + 1.0) /
                         (6.0 * static_cast<double>(m)));
}

TestReport make_test_report(const RankTable& table, double alpha) {
    TestReport report;
    report.alpha = alpha;
    const auto fr = friedman_modified(table.avg_ranks, table.m(), table.k());
    report.chi_f = fr.chi_f;
    report.tau_f = fr.tau_f;
    report.tau_critical = f_critical(alpha, table.k() - 1, (table.k() - 1) * (table.m() - 1));
    report.significant = report.tau_f > report.tau_critical;
    report.cd = nemenyi_cd(table.k(), table.m(), alpha);
    const std::size_t k = table.k();
    report.pairwise_significant.assign(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            report.pairwise_significant[i][j] =
                i != j && std::fabs(table.avg_ranks[i] - table.avg_ranks[j]) >= report.cd;
    return report;
}

}  // namespace ldseds
