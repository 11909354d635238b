#include "ldseds/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ldseds/rng.hpp"

namespace ldseds {

namespace {

constexpr double kPi = std::numbers::pi;

// Native-domain shrink per base, folded into the base itself so every
// landscape is sensibly conditioned on [-100, 100]^D. A uniform scalar
// commutes with rotation, so base(M(x-o)) with the shrink inside equals the
// conventional shift/scale/rotate composition.
double shrink_rate(BaseFn f) {
    switch (f) {
        case BaseFn::Rosenbrock: return 2.048 / 100.0;
        case BaseFn::Rastrigin: return 5.12 / 100.0;
        case BaseFn::NonContRastrigin: return 5.12 / 100.0;
        case BaseFn::LunacekBiRastrigin: return 10.0 / 100.0;
        case BaseFn::Griewank: return 600.0 / 100.0;
        case BaseFn::HgBat: return 5.0 / 100.0;
        case BaseFn::Katsuura: return 5.0 / 100.0;
        case BaseFn::ModifiedSchwefel: return 1000.0 / 100.0;
        case BaseFn::GriewankRosenbrock: return 5.0 / 100.0;
        default: return 1.0;
    }
}

double zakharov(std::span<const double> z) {
    double sum1 = 0.0, sum2 = 0.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        sum1 += z[i] * z[i];
        sum2 += 0.5 * static_cast<double>(i + 1) * z[i];
    }
    return sum1 + sum2 * sum2 + sum2 * sum2 * sum2 * sum2;
}

double rosenbrock(std::span<const double> z) {
    // Optimum re-centered to the zero vector.
    double f = 0.0;
    for (std::size_t i = 0; i + 1 < z.size(); ++i) {
        const double yi = z[i] + 1.0, yn = z[i + 1] + 1.0;
        const double t1 = yi * yi - yn;
        const double t2 = yi - 1.0;
        f += 100.0 * t1 * t1 + t2 * t2;
    }
    return f;
}

double rastrigin_sum(std::span<const double> y) {
    double f = 0.0;
    for (double v : y) f += v * v - 10.0 * std::cos(2.0 * kPi * v) + 10.0;
    return f;
}

double rastrigin(std::span<const double> z) { return rastrigin_sum(z); }

double noncont_rastrigin(std::span<const double> z) {
    double f = 0.0;
    for (double zi : z) {
        const double w = std::fabs(zi) <= 0.5 ? zi : std::floor(2.0 * zi + 0.5) / 2.0;
        f += w * w - 10.0 * std::cos(2.0 * kPi * w) + 10.0;
    }
    return f;
}

double schaffer_pair(double x, double y) {
    const double a = x * x + y * y;
    const double s = std::sin(std::sqrt(a));
    const double t = 1.0 + 0.001 * a;
    return 0.5 + (s * s - 0.5) / (t * t);
}

double schaffer_f6(std::span<const double> z) {
    const std::size_t d = z.size();
    if (d == 1) return schaffer_pair(z[0], z[0]);
    double f = 0.0;
    for (std::size_t i = 0; i < d; ++i) f += schaffer_pair(z[i], z[(i + 1) % d]);
    return f;
}

double lunacek_bi_rastrigin(std::span<const double> z) {
    const std::size_t d = z.size();
    const double mu0 = 2.5;
    const double s = 1.0 - 1.0 / (2.0 * std::sqrt(static_cast<double>(d) + 20.0) - 8.2);
    const double mu1 = -std::sqrt((mu0 * mu0 - 1.0) / s);
    double sum0 = 0.0, sum1 = 0.0, cos_sum = 0.0;
    for (double zi : z) {
        const double y = zi + mu0;  // optimum re-centered to zero
        const double a = y - mu0;
        const double b = y - mu1;
        sum0 += a * a;
        sum1 += b * b;
        cos_sum += 1.0 - std::cos(2.0 * kPi * a);
    }
    const double basin = std::min(sum0, static_cast<double>(d) + s * sum1);
    return basin + 10.0 * cos_sum;
}

double levy(std::span<const double> z) {
    const std::size_t d = z.size();
    auto w = [&](std::size_t i) { return 1.0 + z[i] / 4.0; };
    const double w0 = w(0), wl = w(d - 1);
    const double s0 = std::sin(kPi * w0);
    const double sl = std::sin(2.0 * kPi * wl);
    double f = s0 * s0 + (wl - 1.0) * (wl - 1.0) * (1.0 + sl * sl);
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const double wi = w(i);
        const double si = std::sin(kPi * wi + 1.0);
        f += (wi - 1.0) * (wi - 1.0) * (1.0 + 10.0 * si * si);
    }
    return f;
}

double ackley(std::span<const double> z) {
    const double d = static_cast<double>(z.size());
    double sum_sq = 0.0, sum_cos = 0.0;
    for (double zi : z) {
        sum_sq += zi * zi;
        sum_cos += std::cos(2.0 * kPi * zi);
    }
    return std::exp(1.0) - 20.0 * std::exp(-0.2 * std::sqrt(sum_sq / d)) -
           std::exp(sum_cos / d) + 20.0;
}

double griewank(std::span<const double> z) {
    double s = 0.0, p = 1.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        s += z[i] * z[i];
        p *= std::cos(z[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return 1.0 + s / 4000.0 - p;
}

double bent_cigar(std::span<const double> z) {
    double f = z[0] * z[0];
    for (std::size_t i = 1; i < z.size(); ++i) f += 1.0e6 * z[i] * z[i];
    return f;
}

double hgbat(std::span<const double> z) {
    const double d = static_cast<double>(z.size());
    double r2 = 0.0, sum = 0.0;
    for (double zi : z) {
        const double y = zi - 1.0;  // optimum re-centered to zero
        r2 += y * y;
        sum += y;
    }
    return std::sqrt(std::fabs(r2 * r2 - sum * sum)) + (0.5 * r2 + sum) / d + 0.5;
}

double elliptic(std::span<const double> z) {
    const std::size_t d = z.size();
    if (d == 1) return z[0] * z[0];
    double f = 0.0;
    for (std::size_t i = 0; i < d; ++i)
        f += std::pow(10.0, 6.0 * static_cast<double>(i) / static_cast<double>(d - 1)) *
             z[i] * z[i];
    return f;
}

double discus(std::span<const double> z) {
    double f = 1.0e6 * z[0] * z[0];
    for (std::size_t i = 1; i < z.size(); ++i) f += z[i] * z[i];
    return f;
}

double katsuura(std::span<const double> z) {
    const double d = static_cast<double>(z.size());
    const double exponent = 10.0 / std::pow(d, 1.2);
    const double factor = 10.0 / (d * d);
    double prod = 1.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        double t = 0.0;
        double power = 1.0;
        for (int j = 1; j <= 32; ++j) {
            power *= 2.0;
            const double v = power * z[i];
            t += std::fabs(v - std::floor(v + 0.5)) / power;
        }
        prod *= std::pow(1.0 + static_cast<double>(i + 1) * t, exponent);
    }
    return factor * prod - factor;
}

double mod_schwefel_coord(double y, double d) {
    if (y > 500.0) {
        const double w = 500.0 - std::fmod(y, 500.0);
        const double t = (y - 500.0) / 100.0;
        return w * std::sin(std::sqrt(std::fabs(w))) - t * t / d;
    }
    if (y < -500.0) {
        const double w = std::fmod(std::fabs(y), 500.0) - 500.0;
        const double t = (y + 500.0) / 100.0;
        return w * std::sin(std::sqrt(std::fabs(w))) - t * t / d;
    }
    return y * std::sin(std::sqrt(std::fabs(y)));
}

double modified_schwefel(std::span<const double> z) {
    const double d = static_cast<double>(z.size());
    const double mu = 420.9687462275036;
    // Anchor to the computed coordinate optimum rather than the published
    // rounded constant so the value at zero is exactly zero.
    const double g0 = mu * std::sin(std::sqrt(mu));
    double f = 0.0;
    for (double zi : z) f += g0 - mod_schwefel_coord(zi + mu, d);
    return f;
}

double schaffer_f7(std::span<const double> z) {
    const std::size_t d = z.size();
    if (d < 2) return 0.0;
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < d; ++i) {
        const double s = std::sqrt(z[i] * z[i] + z[i + 1] * z[i + 1]);
        const double t = std::sin(50.0 * std::pow(s, 0.2));
        acc += std::sqrt(s) * (1.0 + t * t);
    }
    acc /= static_cast<double>(d - 1);
    return acc * acc;
}

double griewank_rosenbrock(std::span<const double> z) {
    const std::size_t d = z.size();
    double f = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        const double yi = z[i] + 1.0, yn = z[(i + 1) % d] + 1.0;
        const double t1 = yi * yi - yn;
        const double t2 = yi - 1.0;
        const double t = 100.0 * t1 * t1 + t2 * t2;
        f += t * t / 4000.0 - std::cos(t) + 1.0;
    }
    return f;
}

}  // namespace

std::string to_string(BaseFn f) {
    switch (f) {
        case BaseFn::Zakharov: return "zakharov";
        case BaseFn::Rosenbrock: return "rosenbrock";
        case BaseFn::Rastrigin: return "rastrigin";
        case BaseFn::SchafferF6: return "schaffer_f6";
        case BaseFn::LunacekBiRastrigin: return "lunacek_bi_rastrigin";
        case BaseFn::NonContRastrigin: return "noncont_rastrigin";
        case BaseFn::Levy: return "levy";
        case BaseFn::Ackley: return "ackley";
        case BaseFn::Griewank: return "griewank";
        case BaseFn::BentCigar: return "bent_cigar";
        case BaseFn::HgBat: return "hgbat";
        case BaseFn::HighConditionedElliptic: return "elliptic";
        case BaseFn::Discus: return "discus";
        case BaseFn::Katsuura: return "katsuura";
        case BaseFn::ModifiedSchwefel: return "modified_schwefel";
        case BaseFn::SchafferF7: return "schaffer_f7";
        case BaseFn::GriewankRosenbrock: return "griewank_rosenbrock";
    }
    return "unknown";
}

BaseFn parse_base_fn(std::string_view name) {
    static const std::pair<std::string_view, BaseFn> table[] = {
        {"zakharov", BaseFn::Zakharov},
        {"rosenbrock", BaseFn::Rosenbrock},
        {"rastrigin", BaseFn::Rastrigin},
        {"schaffer_f6", BaseFn::SchafferF6},
        {"lunacek_bi_rastrigin", BaseFn::LunacekBiRastrigin},
        {"noncont_rastrigin", BaseFn::NonContRastrigin},
        {"levy", BaseFn::Levy},
        {"ackley", BaseFn::Ackley},
        {"griewank", BaseFn::Griewank},
        {"bent_cigar", BaseFn::BentCigar},
        {"hgbat", BaseFn::HgBat},
        {"elliptic", BaseFn::HighConditionedElliptic},
        {"discus", BaseFn::Discus},
        {"katsuura", BaseFn::Katsuura},
        {"modified_schwefel", BaseFn::ModifiedSchwefel},
        {"schaffer_f7", BaseFn::SchafferF7},
        {"griewank_rosenbrock", BaseFn::GriewankRosenbrock},
    };
    for (const auto& [n, f] : table)
        if (n == name) return f;
    throw std::invalid_argument("unknown base function '" + std::string(name) + "'");
}

double eval_base(BaseFn f, std::span<const double> z) {
    if (z.empty()) throw std::invalid_argument("eval_base: empty input");
    for (double v : z)
        if (!std::isfinite(v)) throw std::invalid_argument("eval_base: non-finite input");

    const double rate = shrink_rate(f);
    static thread_local std::vector<double> scaled;
    std::span<const double> in = z;
    if (rate != 1.0) {
        scaled.resize(z.size());
        for (std::size_t i = 0; i < z.size(); ++i) scaled[i] = rate * z[i];
        in = scaled;
    }
    switch (f) {
        case BaseFn::Zakharov: return zakharov(in);
        case BaseFn::Rosenbrock: return rosenbrock(in);
        case BaseFn::Rastrigin: return rastrigin(in);
        case BaseFn::SchafferF6: return schaffer_f6(in);
        case BaseFn::LunacekBiRastrigin: return lunacek_bi_rastrigin(in);
        case BaseFn::NonContRastrigin: return noncont_rastrigin(in);
        case BaseFn::Levy: return levy(in);
        case BaseFn::Ackley: return ackley(in);
        case BaseFn::Griewank: return griewank(in);
        case BaseFn::BentCigar: return bent_cigar(in);
        case BaseFn::HgBat: return hgbat(in);
        case BaseFn::HighConditionedElliptic: return elliptic(in);
        case BaseFn::Discus: return discus(in);
        case BaseFn::Katsuura: return katsuura(in);
        case BaseFn::ModifiedSchwefel: return modified_schwefel(in);
        case BaseFn::SchafferF7: return schaffer_f7(in);
        case BaseFn::GriewankRosenbrock: return griewank_rosenbrock(in);
    }
    throw std::invalid_argument("unknown base function");
}

Matrix make_rotation(std::size_t d, std::uint64_t seed) {
    if (d == 0) throw std::invalid_argument("make_rotation: d must be >= 1");
    // Gaussian matrix via Box-Muller over the counter stream.
    SplitMix64 rng(seed);
    Matrix a(d, d);
    for (std::size_t idx = 0; idx < d * d; idx += 2) {
        double u1 = rng.next_unit();
        while (u1 <= 0.0) u1 = rng.next_unit();
        const double u2 = rng.next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        a.data[idx] = r * std::cos(2.0 * kPi * u2);
        if (idx + 1 < d * d) a.data[idx + 1] = r * std::sin(2.0 * kPi * u2);
    }

    // Householder QR; Q accumulated explicitly, columns sign-corrected by
    // diag(R) so the result is uniquely determined by the Gaussian draw.
    Matrix q(d, d);
    for (std::size_t i = 0; i < d; ++i) q(i, i) = 1.0;
    std::vector<double> v(d);
    for (std::size_t k = 0; k < d; ++k) {
        double norm = 0.0;
        for (std::size_t i = k; i < d; ++i) norm += a(i, k) * a(i, k);
        norm = std::sqrt(norm);
        if (norm == 0.0) continue;
        const double alpha = a(k, k) >= 0 ? -norm : norm;
        double vnorm2 = 0.0;
        for (std::size_t i = k; i < d; ++i) {
            v[i] = (i == k) ? a(k, k) - alpha : a(i, k);
            vnorm2 += v[i] * v[i];
        }
        if (vnorm2 == 0.0) continue;
        // Reflect the trailing block of A and the trailing columns of Q.
        for (std::size_t j = k; j < d; ++j) {
            double dot = 0.0;
            for (std::size_t i = k; i < d; ++i) dot += v[i] * a(i, j);
            const double s = 2.0 * dot / vnorm2;
            for (std::size_t i = k; i < d; ++i) a(i, j) -= s * v[i];
        }
        for (std::size_t j = 0; j < d; ++j) {
            double dot = 0.0;
            for (std::size_t i = k; i < d; ++i) dot += v[i] * q(j, i);
            const double s = 2.0 * dot / vnorm2;
            for (std::size_t i = k; i < d; ++i) q(j, i) -= s * v[i];
        }
    }
    for (std::size_t k = 0; k < d; ++k) {
        if (a(k, k) < 0.0)
            for (std::size_t i = 0; i < d; ++i) q(i, k) = -q(i, k);
    }
    return q;
}

namespace {

std::vector<double> draw_shift(std::size_t d, std::uint64_t shift_seed) {
    // Central 80% of the box keeps the optimum away from the clip boundary.
    SplitMix64 rng(shift_seed);
    std::vector<double> o(d);
    const double lo = 0.8 * kBoxLower, hi = 0.8 * kBoxUpper;
    for (std::size_t j = 0; j < d; ++j) o[j] = lo + rng.next_unit() * (hi - lo);
    return o;
}

void rotate_diff(const Matrix& m, std::span<const double> x, std::span<const double> o,
                 std::vector<double>& out) {
    const std::size_t d = x.size();
    out.assign(d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < d; ++j) acc += m(i, j) * (x[j] - o[j]);
        out[i] = acc;
    }
}

}  // namespace

ObjectiveSpec make_objective(BaseFn base, std::size_t d, std::uint64_t shift_seed,
                             std::uint64_t rot_seed, double bias) {
    if (d == 0) throw std::invalid_argument("make_objective: d must be >= 1");
    ObjectiveSpec spec;
    spec.layout = ObjectiveSpec::Layout::ShiftedRotated;
    spec.base = base;
    spec.dim = d;
    spec.shift = draw_shift(d, shift_seed);
    spec.rotation = make_rotation(d, rot_seed);
    spec.bias = bias;
    spec.id = to_string(base) + "_sr";
    spec.shift_seed = shift_seed;
    spec.rot_seed = rot_seed;
    return spec;
}

ObjectiveSpec make_hybrid(const std::vector<BaseFn>& components,
                          const std::vector<double>& proportions, std::size_t d,
                          std::uint64_t shift_seed, std::uint64_t rot_seed, double bias) {
    if (components.empty()) throw std::invalid_argument("make_hybrid: empty component list");
    if (components.size() != proportions.size())
        throw std::invalid_argument("make_hybrid: components and proportions differ in length");
    double total = 0.0;
    for (double p : proportions) {
        if (p <= 0.0) throw std::invalid_argument("make_hybrid: proportions must be positive");
        total += p;
    }
    if (std::fabs(total - 1.0) > 1e-9)
        throw std::invalid_argument("make_hybrid: proportions must sum to 1");
    if (d < components.size())
        throw std::invalid_argument("make_hybrid: need at least one dimension per component");

    // Cumulative rounding, then guarantee every component at least one
    // dimension.
    std::vector<std::size_t> partition(components.size());
    double cum = 0.0;
    std::size_t used = 0;
    for (std::size_t c = 0; c < components.size(); ++c) {
        cum += proportions[c];
        const std::size_t edge =
            c + 1 == components.size()
                ? d
                : std::min<std::size_t>(d, static_cast<std::size_t>(std::llround(cum * d)));
        partition[c] = edge > used ? edge - used : 0;
        used = std::max(used, edge);
    }
    for (std::size_t c = 0; c < partition.size(); ++c) {
        if (partition[c] == 0) {
            // Steal one from the largest block.
            const std::size_t big = static_cast<std::size_t>(
                std::max_element(partition.begin(), partition.end()) - partition.begin());
            --partition[big];
            ++partition[c];
        }
    }

    ObjectiveSpec spec;
    spec.layout = ObjectiveSpec::Layout::Hybrid;
    spec.base = components.front();
    spec.dim = d;
    spec.shift = draw_shift(d, shift_seed);
    spec.rotation = make_rotation(d, rot_seed);
    spec.bias = bias;
    spec.shift_seed = shift_seed;
    spec.rot_seed = rot_seed;

    HybridLayout layout;
    layout.components = components;
    layout.proportions = proportions;
    layout.partition = partition;
    SplitMix64 perm_rng(seed_combine(rot_seed, hash_label("hybrid-partition")));
    layout.dim_permutation = random_permutation(d, perm_rng);
    spec.hybrid = std::move(layout);
    spec.id = "hybrid";
    return spec;
}

ObjectiveSpec make_composition(const std::vector<BaseFn>& components,
                               const std::vector<double>& sigmas,
                               const std::vector<double>& lambdas, std::size_t d,
                               std::uint64_t shift_seed, std::uint64_t rot_seed,
                               double bias) {
    if (components.empty())
        throw std::invalid_argument("make_composition: empty component list");
    if (components.size() != sigmas.size() || components.size() != lambdas.size())
        throw std::invalid_argument("make_composition: component/sigma/lambda length mismatch");

    ObjectiveSpec spec;
    spec.layout = ObjectiveSpec::Layout::Composition;
    spec.base = components.front();
    spec.dim = d;
    spec.bias = bias;
    spec.shift_seed = shift_seed;
    spec.rot_seed = rot_seed;
    spec.id = "composition";
    for (std::size_t c = 0; c < components.size(); ++c) {
        CompositionComponent comp;
        comp.base = components[c];
        comp.shift = draw_shift(d, c == 0 ? shift_seed : seed_combine(shift_seed, c));
        comp.rotation = make_rotation(d, c == 0 ? rot_seed : seed_combine(rot_seed, c));
        comp.sigma = sigmas[c];
        comp.lambda = lambdas[c];
        comp.bias = 100.0 * static_cast<double>(c);
        spec.composition.push_back(std::move(comp));
    }
    // Keep the spec-level optimum fields pointing at component 1.
    spec.shift = spec.composition.front().shift;
    spec.rotation = spec.composition.front().rotation;
    return spec;
}

double evaluate(const ObjectiveSpec& spec, std::span<const double> x) {
    if (x.size() != spec.dim)
        throw std::invalid_argument("evaluate: input dimension mismatch");
    for (double v : x)
        if (!std::isfinite(v)) throw std::invalid_argument("evaluate: non-finite input");

    static thread_local std::vector<double> z;
    switch (spec.layout) {
        case ObjectiveSpec::Layout::ShiftedRotated: {
            rotate_diff(spec.rotation, x, spec.shift, z);
            return eval_base(spec.base, z) + spec.bias;
        }
        case ObjectiveSpec::Layout::Hybrid: {
            rotate_diff(spec.rotation, x, spec.shift, z);
            const HybridLayout& h = *spec.hybrid;
            static thread_local std::vector<double> y;
            y.resize(spec.dim);
            for (std::size_t t = 0; t < spec.dim; ++t) y[t] = z[h.dim_permutation[t]];
            double f = spec.bias;
            std::size_t offset = 0;
            for (std::size_t c = 0; c < h.components.size(); ++c) {
                f += eval_base(h.components[c],
                               std::span<const double>(y.data() + offset, h.partition[c]));
                offset += h.partition[c];
            }
            return f;
        }
        case ObjectiveSpec::Layout::Composition: {
            const std::size_t kc = spec.composition.size();
            static thread_local std::vector<double> w;
            w.assign(kc, 0.0);
            double wsum = 0.0;
            std::size_t exact_hit = kc;
            for (std::size_t c = 0; c < kc; ++c) {
                const auto& comp = spec.composition[c];
                double dist2 = 0.0;
                for (std::size_t j = 0; j < spec.dim; ++j) {
                    const double diff = x[j] - comp.shift[j];
                    dist2 += diff * diff;
                }
                if (dist2 < 1e-24) {
                    exact_hit = c;
                    break;
                }
                w[c] = std::exp(-dist2 / (2.0 * static_cast<double>(spec.dim) * comp.sigma *
                                          comp.sigma)) /
                       std::sqrt(dist2);
                wsum += w[c];
            }
            double f = spec.bias;
            if (exact_hit < kc) {
                const auto& comp = spec.composition[exact_hit];
                rotate_diff(comp.rotation, x, comp.shift, z);
                return f + comp.lambda * eval_base(comp.base, z) + comp.bias;
            }
            for (std::size_t c = 0; c < kc; ++c) {
                if (w[c] == 0.0) continue;
                const auto& comp = spec.composition[c];
                rotate_diff(comp.rotation, x, comp.shift, z);
                f += (w[c] / wsum) * (comp.lambda * eval_base(comp.base, z) + comp.bias);
            }
            return f;
        }
    }
    throw std::logic_error("unknown objective layout");
}

double relative_error(double fitness, double z_star) {
    if (z_star == 0.0)
        throw std::invalid_argument("relative_error: z_star must be nonzero");
    return (fitness - z_star) / std::fabs(z_star);
}

namespace {

struct RegistryEntry {
    const char* id;
    double bias;
    ObjectiveSpec::Layout layout;
    std::vector<BaseFn> components;
    std::vector<double> proportions;  // hybrids
};

const std::vector<RegistryEntry>& registry() {
    using L = ObjectiveSpec::Layout;
    using B = BaseFn;
    static const std::vector<RegistryEntry> entries = {
        {"f01_zakharov_sr", 300, L::ShiftedRotated, {B::Zakharov}, {}},
        {"f02_rosenbrock_sr", 400, L::ShiftedRotated, {B::Rosenbrock}, {}},
        {"f03_rastrigin_sr", 500, L::ShiftedRotated, {B::Rastrigin}, {}},
        {"f04_schaffer_f6_sr", 600, L::ShiftedRotated, {B::SchafferF6}, {}},
        {"f05_lunacek_bi_rastrigin_sr", 700, L::ShiftedRotated, {B::LunacekBiRastrigin}, {}},
        {"f06_noncont_rastrigin_sr", 800, L::ShiftedRotated, {B::NonContRastrigin}, {}},
        {"f07_levy_sr", 900, L::ShiftedRotated, {B::Levy}, {}},
        {"f08_hy_zakharov_rosen_rastrigin", 1100, L::Hybrid,
         {B::Zakharov, B::Rosenbrock, B::Rastrigin}, {0.2, 0.4, 0.4}},
        {"f09_hy_cigar_rosen_lunacek", 1300, L::Hybrid,
         {B::BentCigar, B::Rosenbrock, B::LunacekBiRastrigin}, {0.3, 0.3, 0.4}},
        {"f10_hy_elliptic_ackley_schaffer7_rastrigin", 1400, L::Hybrid,
         {B::HighConditionedElliptic, B::Ackley, B::SchafferF7, B::Rastrigin},
         {0.2, 0.2, 0.2, 0.4}},
        {"f11_hy_cigar_hgbat_rastrigin_rosen", 1500, L::Hybrid,
         {B::BentCigar, B::HgBat, B::Rastrigin, B::Rosenbrock}, {0.2, 0.2, 0.3, 0.3}},
        {"f12_hy_schaffer6_hgbat_rosen_schwefel_rastrigin", 1600, L::Hybrid,
         {B::SchafferF6, B::HgBat, B::Rosenbrock, B::ModifiedSchwefel, B::Rastrigin},
         {0.1, 0.2, 0.2, 0.2, 0.3}},
        {"f13_hy_katsuura_ackley_grierosen_schwefel_rastrigin", 1700, L::Hybrid,
         {B::Katsuura, B::Ackley, B::GriewankRosenbrock, B::ModifiedSchwefel, B::Rastrigin},
         {0.1, 0.2, 0.2, 0.2, 0.3}},
        {"f14_hy_elliptic_ackley_rastrigin_hgbat_discus", 1900, L::Hybrid,
         {B::HighConditionedElliptic, B::Ackley, B::Rastrigin, B::HgBat, B::Discus},
         {0.2, 0.2, 0.2, 0.2, 0.2}},
        {"f15_hy_cigar_grierosen_rastrigin_schaffer6", 2000, L::Hybrid,
         {B::BentCigar, B::GriewankRosenbrock, B::Rastrigin, B::SchafferF6},
         {0.1, 0.2, 0.3, 0.4}},
        {"f16_cp_katsuura_ackley_rastrigin_schaffer6_schwefel", 2100, L::Composition,
         {B::Katsuura, B::Ackley, B::Rastrigin, B::SchafferF6, B::ModifiedSchwefel}, {}},
        {"f17_cp_griewank_rastrigin_schwefel", 2200, L::Composition,
         {B::Griewank, B::Rastrigin, B::ModifiedSchwefel}, {}},
        {"f18_cp_ackley_griewank_rastrigin_elliptic", 2400, L::Composition,
         {B::Ackley, B::Griewank, B::Rastrigin, B::HighConditionedElliptic}, {}},
        {"f19_cp_schwefel_rastrigin_rosen_grie_schaffer6", 2600, L::Composition,
         {B::ModifiedSchwefel, B::Rastrigin, B::Rosenbrock, B::Griewank, B::SchafferF6}, {}},
    };
    return entries;
}

const RegistryEntry& find_entry(const std::string& id) {
    for (const auto& e : registry())
        if (id == e.id) return e;
    throw std::invalid_argument("unknown objective id '" + id + "'");
}

}  // namespace

std::vector<std::string> objective_ids() {
    std::vector<std::string> ids;
    for (const auto& e : registry()) ids.emplace_back(e.id);
    return ids;
}

bool is_registered_objective(const std::string& id) {
    for (const auto& e : registry())
        if (id == e.id) return true;
    return false;
}

double registered_bias(const std::string& id) { return find_entry(id).bias; }

ObjectiveSpec make_registered(const std::string& id, std::size_t dim,
                              std::uint64_t shift_seed, std::uint64_t rot_seed) {
    const RegistryEntry& e = find_entry(id);
    ObjectiveSpec spec;
    switch (e.layout) {
        case ObjectiveSpec::Layout::ShiftedRotated:
            spec = make_objective(e.components.front(), dim, shift_seed, rot_seed, e.bias);
            break;
        case ObjectiveSpec::Layout::Hybrid:
            spec = make_hybrid(e.components, e.proportions, dim, shift_seed, rot_seed, e.bias);
            break;
        case ObjectiveSpec::Layout::Composition: {
            std::vector<double> sigmas, lambdas;
            for (std::size_t c = 0; c < e.components.size(); ++c) {
                sigmas.push_back(10.0 * static_cast<double>(c + 1));
                lambdas.push_back(1.0);
            }
            spec = make_composition(e.components, sigmas, lambdas, dim, shift_seed,
                                    rot_seed, e.bias);
            break;
        }
    }
    spec.id = e.id;
    return spec;
}

}  // namespace ldseds
