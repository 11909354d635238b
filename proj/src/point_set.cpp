#include "ldseds/point_set.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ldseds/rng.hpp"
#include "sobol_table.hpp"

namespace ldseds {

namespace {

constexpr std::size_t kPrimeCount = 2000;

std::vector<std::uint32_t> sieve_primes(std::size_t count) {
    std::vector<std::uint32_t> primes;
    primes.reserve(count);
    // 2000th prime is 17389; sieve a little past it.
    const std::uint32_t limit = 17500;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint32_t p = 2; p <= limit && primes.size() < count; ++p) {
        if (composite[p]) continue;
        primes.push_back(p);
        for (std::uint64_t q = static_cast<std::uint64_t>(p) * p; q <= limit; q += p)
            composite[static_cast<std::size_t>(q)] = true;
    }
    if (primes.size() < count)
        throw std::logic_error("prime sieve limit too small");
    return primes;
}

void require_prime_dimension(std::size_t d) {
    if (d > kPrimeCount)
        throw std::invalid_argument("dimension " + std::to_string(d) +
                                    " exceeds the prime base table (max " +
                                    std::to_string(kPrimeCount) + ")");
}

// 32-bit direction numbers for one Sobol dimension, v[k] scaled by 2^32.
std::array<std::uint32_t, 32> sobol_direction_numbers(std::size_t dim_index) {
    std::array<std::uint32_t, 32> v{};
    const std::uint32_t poly = detail::kSobolPoly[dim_index];
    std::uint32_t degree = 0;
    for (std::uint32_t p = poly; p > 1; p >>= 1) ++degree;
    if (degree == 0) {
        // First dimension: van der Corput in base 2.
        for (std::size_t k = 0; k < 32; ++k) v[k] = 1u << (31 - k);
        return v;
    }
    for (std::size_t k = 0; k < degree && k < 32; ++k)
        v[k] = detail::kSobolMinit[dim_index][k] << (31 - k);
    // a_1..a_{s-1} are the interior coefficient bits of the polynomial.
    const std::uint32_t a = (poly >> 1) & ((1u << (degree - 1)) - 1);
    for (std::size_t k = degree; k < 32; ++k) {
        std::uint32_t value = v[k - degree] ^ (v[k - degree] >> degree);
        for (std::uint32_t j = 1; j < degree; ++j)
            if ((a >> (degree - 1 - j)) & 1u) value ^= v[k - j];
        v[k] = value;
    }
    return v;
}

double sobol_point(const std::array<std::uint32_t, 32>& v, std::uint64_t index) {
    std::uint32_t acc = 0;
    std::size_t bit = 0;
    for (std::uint64_t i = index; i != 0; i >>= 1, ++bit)
        if (i & 1ull) acc ^= v[bit];
    return static_cast<double>(acc) * 0x1.0p-32;
}

double fractional(double x) {
    double f = x - std::floor(x);
    return f < 1.0 ? f : 0.0;
}

}  // namespace

std::span<const std::uint32_t> prime_table() {
    static const std::vector<std::uint32_t> primes = sieve_primes(kPrimeCount);
    return primes;
}

std::size_t sobol_max_dimension() { return detail::kSobolMaxDimension; }

std::string to_string(Generator g) {
    switch (g) {
        case Generator::Halton: return "halton";
        case Generator::ScrambledHalton: return "halton_scrambled";
        case Generator::Sobol: return "sobol";
        case Generator::HuaWang: return "hua_wang";
        case Generator::Uniform: return "uniform";
        case Generator::External: return "external";
    }
    return "unknown";
}

Generator parse_generator(std::string_view name) {
    if (name == "halton") return Generator::Halton;
    if (name == "halton_scrambled" || name == "hss") return Generator::ScrambledHalton;
    if (name == "sobol") return Generator::Sobol;
    if (name == "hua_wang" || name == "hws") return Generator::HuaWang;
    if (name == "uniform" || name == "rand" || name == "random") return Generator::Uniform;
    if (name == "external") return Generator::External;
    throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

double radical_inverse(std::uint64_t index, std::uint32_t base,
                       std::span<const std::uint32_t> digit_permutation) {
    if (base < 2) throw std::invalid_argument("radical_inverse: base must be >= 2");
    if (!digit_permutation.empty()) {
        if (digit_permutation.size() != base || digit_permutation[0] != 0)
            throw std::invalid_argument(
                "radical_inverse: digit permutation must cover {0..base-1} and fix 0");
    }
    const double inv_base = 1.0 / base;
    double scale = inv_base;
    double value = 0.0;
    for (std::uint64_t i = index; i != 0; i /= base) {
        std::uint32_t digit = static_cast<std::uint32_t>(i % base);
        if (!digit_permutation.empty()) digit = digit_permutation[digit];
        value += digit * scale;
        scale *= inv_base;
    }
    return value;
}

std::vector<std::uint32_t> digit_permutation(std::uint32_t base, std::uint64_t seed) {
    if (base < 2) throw std::invalid_argument("digit_permutation: base must be >= 2");
    std::vector<std::uint32_t> perm(base);
    for (std::uint32_t i = 0; i < base; ++i) perm[i] = i;
    // Shuffle digits 1..base-1 only; 0 stays put so finite expansions
    // terminate.
    SplitMix64 rng(seed_combine(seed, base));
    for (std::uint32_t i = base - 1; i > 1; --i) {
        std::uint32_t j = 1 + static_cast<std::uint32_t>(rng.next_below(i));
        std::swap(perm[i], perm[j]);
    }
    return perm;
}

namespace detail {

void fill_generator_column(Generator g, std::uint64_t seed, std::uint64_t start_index,
                           std::size_t column, std::size_t n, std::size_t stride,
                           double* out) {
    switch (g) {
        case Generator::Halton: {
            require_prime_dimension(column + 1);
            const std::uint32_t base = prime_table()[column];
            for (std::size_t i = 0; i < n; ++i)
                out[i * stride] = radical_inverse(start_index + i, base);
            return;
        }
        case Generator::ScrambledHalton: {
            require_prime_dimension(column + 1);
            const std::uint32_t base = prime_table()[column];
            const auto perm = digit_permutation(base, seed);
            for (std::size_t i = 0; i < n; ++i)
                out[i * stride] = radical_inverse(start_index + i, base, perm);
            return;
        }
        case Generator::Sobol: {
            if (column >= detail::kSobolMaxDimension)
                throw std::invalid_argument(
                    "dimension " + std::to_string(column + 1) +
                    " exceeds the Sobol direction-number table (max " +
                    std::to_string(detail::kSobolMaxDimension) + ")");
            const auto v = sobol_direction_numbers(column);
            for (std::size_t i = 0; i < n; ++i)
                out[i * stride] = sobol_point(v, start_index + i);
            return;
        }
        case Generator::HuaWang: {
            require_prime_dimension(column + 1);
            const double gamma = fractional(std::sqrt(static_cast<double>(prime_table()[column])));
            for (std::size_t i = 0; i < n; ++i)
                out[i * stride] = fractional(static_cast<double>(start_index + i) * gamma);
            return;
        }
        case Generator::Uniform: {
            const std::uint64_t column_seed = seed_combine(seed, column);
            for (std::size_t i = 0; i < n; ++i)
                out[i * stride] = SplitMix64::unit_at(column_seed, start_index + i);
            return;
        }
        case Generator::External:
            throw std::invalid_argument("external point sets are loaded, not generated");
    }
    throw std::invalid_argument("unknown generator");
}

}  // namespace detail

namespace {

PointSet generate_columns(Generator g, std::size_t n, std::size_t d, std::uint64_t seed,
                          std::uint64_t start_index) {
    if (d == 0) throw std::invalid_argument("dimension must be >= 1");
    PointSet ps;
    ps.points = Matrix(n, d);
    ps.generator_id = g;
    ps.seed = seed;
    ps.start_index = start_index;
    for (std::size_t j = 0; j < d; ++j)
        detail::fill_generator_column(g, seed, start_index, j, n, d, ps.points.data.data() + j);
    return ps;
}

}  // namespace

PointSet generate_halton(std::size_t n, std::size_t d,
                         std::optional<std::uint64_t> scramble_seed,
                         std::uint64_t start_index) {
    return scramble_seed
               ? generate_columns(Generator::ScrambledHalton, n, d, *scramble_seed, start_index)
               : generate_columns(Generator::Halton, n, d, 0, start_index);
}

PointSet generate_sobol(std::size_t n, std::size_t d, std::uint64_t start_index) {
    return generate_columns(Generator::Sobol, n, d, 0, start_index);
}

PointSet generate_hua_wang(std::size_t n, std::size_t d, std::uint64_t start_index) {
    return generate_columns(Generator::HuaWang, n, d, 0, start_index);
}

PointSet random_uniform(std::size_t n, std::size_t d, std::uint64_t seed) {
    return generate_columns(Generator::Uniform, n, d, seed, 0);
}

std::uint64_t default_start_index(Generator g) {
    return g == Generator::Uniform || g == Generator::External ? 0 : 1;
}

PointSet generate_point_set(Generator g, std::size_t n, std::size_t d,
                            std::uint64_t seed, std::uint64_t start_index) {
    if (g == Generator::External)
        throw std::invalid_argument("external point sets are loaded from files");
    return generate_columns(g, n, d, seed, start_index);
}

PointSet load_point_set(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open point file " + path.string());
    std::vector<double> values;
    std::size_t cols = 0;
    std::size_t line_no = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream row(line);
        std::vector<double> coords;
        double v;
        while (row >> v) coords.push_back(v);
        if (coords.empty()) continue;  // blank line
        if (cols == 0) cols = coords.size();
        if (coords.size() != cols)
            throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) +
                                        ": expected " + std::to_string(cols) +
                                        " coordinates, got " + std::to_string(coords.size()));
        for (double c : coords) {
            if (!(c >= 0.0) || !(c < 1.0))
                throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) +
                                            ": coordinate " + std::to_string(c) +
                                            " outside [0, 1)");
        }
        values.insert(values.end(), coords.begin(), coords.end());
    }
    if (cols == 0) throw std::invalid_argument(path.string() + ": no points");
    PointSet ps;
    ps.points.rows = values.size() / cols;
    ps.points.cols = cols;
    ps.points.data = std::move(values);
    ps.generator_id = Generator::External;
    return ps;
}

void write_point_set(const Matrix& points, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write point file " + path.string());
    char buf[32];
    for (std::size_t i = 0; i < points.rows; ++i) {
        for (std::size_t j = 0; j < points.cols; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", points(i, j));
            out << (j ? " " : "") << buf;
        }
        out << '\n';
    }
}

}  // namespace ldseds
