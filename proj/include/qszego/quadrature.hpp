#pragma once

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qszego/errors.hpp"
#include "qszego/kernel.hpp"
#include "qszego/quaternion.hpp"
#include "qszego/siegel.hpp"

namespace qszego {

// ---------------------------------------------------------------------------
// Counter-based splittable RNG (for the Monte Carlo path): a stateless mix of
// (seed, stream, index) so that any sample can be generated independently of
// evaluation order — the backbone of deterministic parallel sampling.
// ---------------------------------------------------------------------------

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t counter_mix(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index);
}

// Uniform double strictly inside (0,1).
inline double counter_u01(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    const std::uint64_t bits = counter_mix(seed, stream, index);
    return static_cast<double>(bits >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

// ---------------------------------------------------------------------------
// Gauss-Legendre nodes/weights on (-1, 1) by Newton iteration on the Legendre
// recurrence. Fully deterministic.
// ---------------------------------------------------------------------------

struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};

inline GaussLegendre gauss_legendre(int n) {
    if (n < 1) throw RangeError("Gauss-Legendre rule needs at least one node");
    GaussLegendre rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double pi = 3.14159265358979323846264338327950288;
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Legendre P_n(x) and derivative by the three-term recurrence.
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x; // ascending order
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

// Full-line compactification x = L t / (1 - t^2), t in (-1,1); returns nodes
// on the line and weights including the Jacobian L (1 + t^2)/(1 - t^2)^2.
inline GaussLegendre full_line_rule(int n, double scale) {
    if (!(scale > 0.0)) throw NonpositiveScale("compactification scale must be positive");
    GaussLegendre base = gauss_legendre(n);
    GaussLegendre out;
    out.nodes.resize(n);
    out.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        const double t = base.nodes[i];
        const double denom = 1.0 - t * t;
        out.nodes[i] = scale * t / denom;
        out.weights[i] = base.weights[i] * scale * (1.0 + t * t) / (denom * denom);
    }
    return out;
}

// Half-line compactification r = L u / (1 - u), u in (0,1); weights include
// the Jacobian L / (1 - u)^2.
inline GaussLegendre half_line_rule(int n, double scale) {
    if (!(scale > 0.0)) throw NonpositiveScale("compactification scale must be positive");
    GaussLegendre base = gauss_legendre(n);
    GaussLegendre out;
    out.nodes.resize(n);
    out.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        const double u = 0.5 * (base.nodes[i] + 1.0);
        const double w = 0.5 * base.weights[i];
        const double denom = 1.0 - u;
        out.nodes[i] = scale * u / denom;
        out.weights[i] = w * scale / (denom * denom);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Quadrature specification, canonical serialization, and hash.
// ---------------------------------------------------------------------------

enum class QuadratureMethod { tensor_gauss, adaptive, monte_carlo };

inline const char* method_name(QuadratureMethod m) {
    switch (m) {
        case QuadratureMethod::tensor_gauss: return "tensor_gauss";
        case QuadratureMethod::adaptive: return "adaptive";
        case QuadratureMethod::monte_carlo: return "monte_carlo";
    }
    return "unknown";
}

struct QuadratureSpec {
    QuadratureMethod method = QuadratureMethod::tensor_gauss;
    int radial_nodes = 48;
    int angular_nodes = 48;
    double truncation_radius = 1.0;
    long long mc_samples = 1000000;
    std::uint64_t seed = 0x51e9e1u;
    double target_rel_tol = 1e-6;

    void validate() const {
        if (radial_nodes < 1 || angular_nodes < 1) {
            throw RangeError("quadrature node counts must be positive");
        }
        if (!(truncation_radius > 0.0)) {
            throw NonpositiveScale("truncation radius must be positive");
        }
        if (mc_samples < 1) throw RangeError("Monte Carlo sample count must be positive");
        if (!(target_rel_tol > 0.0 && target_rel_tol < 1.0)) {
            throw RangeError("target relative tolerance must lie in (0,1)");
        }
    }

    std::string canonical_json() const {
        char buf[320];
        char trunc[40], tol[40];
        std::snprintf(trunc, sizeof(trunc), "%.17g", truncation_radius);
        std::snprintf(tol, sizeof(tol), "%.17g", target_rel_tol);
        std::snprintf(buf, sizeof(buf),
                      "{\"method\":\"%s\",\"radial_nodes\":%d,\"angular_nodes\":%d,"
                      "\"truncation_radius\":%s,\"mc_samples\":%lld,\"seed\":%llu,"
                      "\"target_rel_tol\":%s}",
                      method_name(method), radial_nodes, angular_nodes, trunc, mc_samples,
                      static_cast<unsigned long long>(seed), tol);
        return std::string(buf);
    }

    // FNV-1a 64-bit hash of the canonical serialization, as fixed-width hex.
    std::string hash() const {
        std::uint64_t h = 0xcbf29ce484222325ull;
        for (unsigned char c : canonical_json()) {
            h ^= c;
            h *= 0x100000001b3ull;
        }
        char buf[17];
        std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
        return std::string(buf);
    }
};

// Boundary integrand: quaternion-valued function of a group element. Must be
// pure and re-entrant (it may be evaluated from several threads).
using BoundaryFunction = std::function<Quaternion<double>(const HeisenbergElement<double>&)>;

struct IntegralResult {
    Quaternion<double> value = Quaternion<double>::zero();
    double abs_error_estimate = 0.0;
    std::string spec_hash;
};

namespace detail {

// Deterministic pairwise tree reduction of a block array: combination order
// depends only on the block count, never on thread scheduling.
template <class V, class Plus>
V pairwise_combine(std::vector<V> blocks, const Plus& plus, const V& zero) {
    if (blocks.empty()) return zero;
    while (blocks.size() > 1) {
        std::size_t half = blocks.size() / 2;
        for (std::size_t i = 0; i < half; ++i) {
            blocks[i] = plus(blocks[2 * i], blocks[2 * i + 1]);
        }
        if (blocks.size() % 2 == 1) {
            blocks[half] = blocks.back();
            ++half;
        }
        blocks.resize(half);
    }
    return blocks[0];
}

struct BlockAccum {
    Quaternion<double> value = Quaternion<double>::zero();
    double total_abs = 0.0;
    double outer_abs = 0.0;
};

inline BlockAccum accum_plus(const BlockAccum& a, const BlockAccum& b) {
    BlockAccum out;
    out.value = a.value + b.value;
    out.total_abs = a.total_abs + b.total_abs;
    out.outer_abs = a.outer_abs + b.outer_abs;
    return out;
}

// Evaluate the full tensor-product grid over dims axes that all use the
// given 1-D rule, accumulating in fixed blocks of flat indices; blocks are
// claimed by an atomic counter so threads never share a block, and the final
// reduction is the deterministic pairwise tree above.
inline BlockAccum tensor_scan(const BoundaryFunction& f, int m, const GaussLegendre& axis,
                              int dims) {
    const int n = static_cast<int>(axis.nodes.size());
    std::uint64_t total = 1;
    for (int d = 0; d < dims; ++d) total *= static_cast<std::uint64_t>(n);
    const std::uint64_t block_size = 4096;
    const std::uint64_t n_blocks = (total + block_size - 1) / block_size;

    std::vector<BlockAccum> blocks(n_blocks);
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> nonfinite{false};

    auto worker = [&]() {
        HeisenbergElement<double> h;
        h.zprime.assign(static_cast<std::size_t>(m), Quaternion<double>::zero());
        std::vector<int> digit(static_cast<std::size_t>(dims), 0);
        for (;;) {
            const std::uint64_t b = next.fetch_add(1);
            if (b >= n_blocks || nonfinite.load(std::memory_order_relaxed)) break;
            BlockAccum acc;
            const std::uint64_t lo = b * block_size;
            const std::uint64_t hi = std::min(total, lo + block_size);
            for (std::uint64_t flat = lo; flat < hi; ++flat) {
                std::uint64_t rem = flat;
                double wprod = 1.0;
                bool outer = false;
                for (int d = 0; d < dims; ++d) {
                    const int idx = static_cast<int>(rem % n);
                    rem /= n;
                    digit[static_cast<std::size_t>(d)] = idx;
                    wprod *= axis.weights[idx];
                    if (idx == 0 || idx == n - 1) outer = true;
                }
                h.w.x1 = 0.0;
                h.w.x2 = axis.nodes[digit[0]];
                h.w.x3 = axis.nodes[digit[1]];
                h.w.x4 = axis.nodes[digit[2]];
                for (int l = 0; l < m; ++l) {
                    auto& z = h.zprime[static_cast<std::size_t>(l)];
                    z.x1 = axis.nodes[digit[3 + 4 * l]];
                    z.x2 = axis.nodes[digit[4 + 4 * l]];
                    z.x3 = axis.nodes[digit[5 + 4 * l]];
                    z.x4 = axis.nodes[digit[6 + 4 * l]];
                }
                const Quaternion<double> fv = f(h);
                if (!qfinite(fv)) {
                    nonfinite.store(true, std::memory_order_relaxed);
                    break;
                }
                acc.value = acc.value + wprod * fv;
                const double mag = std::abs(wprod) * qabs(fv);
                acc.total_abs += mag;
                if (outer) acc.outer_abs += mag;
            }
            blocks[b] = acc;
        }
    };

    unsigned n_threads = std::thread::hardware_concurrency();
    if (n_threads == 0) n_threads = 1;
    n_threads = std::min<unsigned>(n_threads, 16);
    if (n_blocks < n_threads) n_threads = static_cast<unsigned>(n_blocks);
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (nonfinite.load()) {
        throw NonFinite("integrand produced a non-finite value");
    }
    return pairwise_combine(std::move(blocks), accum_plus, BlockAccum{});
}

inline IntegralResult tensor_integrate(const BoundaryFunction& f, int m,
                                       const QuadratureSpec& spec, int nodes) {
    const int dims = 3 + 4 * m;
    const GaussLegendre axis = full_line_rule(nodes, spec.truncation_radius);
    const BlockAccum fine = tensor_scan(f, m, axis, dims);
    // Fat-tail guard: the outermost-node shell carries the integrand mass
    // nearest the compactified infinity; if its share of the total absolute
    // mass is not negligible, the integrand decays too slowly for the grid.
    if (fine.total_abs > 0.0 && fine.outer_abs > spec.target_rel_tol * fine.total_abs) {
        throw TailTooFat("truncation-shell contribution exceeds the target tolerance");
    }
    IntegralResult out;
    out.value = fine.value;
    out.spec_hash = spec.hash();
    // Error estimate by comparison with a strictly coarser grid.
    const int coarse_nodes = std::max(4, (2 * nodes) / 3);
    if (coarse_nodes < nodes) {
        const GaussLegendre coarse_axis = full_line_rule(coarse_nodes, spec.truncation_radius);
        const BlockAccum coarse = tensor_scan(f, m, coarse_axis, dims);
        out.abs_error_estimate = qabs(fine.value - coarse.value);
    }
    return out;
}

struct MCBlock {
    Quaternion<double> sum = Quaternion<double>::zero();
    Quaternion<double> sum_sq = Quaternion<double>::zero(); // componentwise squares
};

inline MCBlock mc_plus(const MCBlock& a, const MCBlock& b) {
    MCBlock out;
    out.sum = a.sum + b.sum;
    out.sum_sq = a.sum_sq + b.sum_sq;
    return out;
}

inline IntegralResult monte_carlo_integrate(const BoundaryFunction& f, int m,
                                            const QuadratureSpec& spec) {
    const int dims = 3 + 4 * m;
    const double L = spec.truncation_radius;
    const double pi = 3.14159265358979323846264338327950288;
    const std::uint64_t total = static_cast<std::uint64_t>(spec.mc_samples);
    const std::uint64_t block_size = 8192;
    const std::uint64_t n_blocks = (total + block_size - 1) / block_size;

    std::vector<MCBlock> blocks(n_blocks);
    std::atomic<std::uint64_t> next{0};
    std::atomic<bool> nonfinite{false};

    auto worker = [&]() {
        HeisenbergElement<double> h;
        h.zprime.assign(static_cast<std::size_t>(m), Quaternion<double>::zero());
        std::vector<double> coords(static_cast<std::size_t>(dims), 0.0);
        for (;;) {
            const std::uint64_t b = next.fetch_add(1);
            if (b >= n_blocks || nonfinite.load(std::memory_order_relaxed)) break;
            MCBlock acc;
            const std::uint64_t lo = b * block_size;
            const std::uint64_t hi = std::min(total, lo + block_size);
            for (std::uint64_t i = lo; i < hi; ++i) {
                // Per-axis Cauchy importance sampling: x = L tan(pi (u - 1/2)),
                // density L / (pi (L^2 + x^2)).
                double inv_density = 1.0;
                for (int d = 0; d < dims; ++d) {
                    const double u = counter_u01(spec.seed, static_cast<std::uint64_t>(d), i);
                    const double x = L * std::tan(pi * (u - 0.5));
                    coords[static_cast<std::size_t>(d)] = x;
                    inv_density *= pi * (L * L + x * x) / L;
                }
                h.w.x1 = 0.0;
                h.w.x2 = coords[0];
                h.w.x3 = coords[1];
                h.w.x4 = coords[2];
                for (int l = 0; l < m; ++l) {
                    auto& z = h.zprime[static_cast<std::size_t>(l)];
                    z.x1 = coords[static_cast<std::size_t>(3 + 4 * l)];
                    z.x2 = coords[static_cast<std::size_t>(4 + 4 * l)];
                    z.x3 = coords[static_cast<std::size_t>(5 + 4 * l)];
                    z.x4 = coords[static_cast<std::size_t>(6 + 4 * l)];
                }
                const Quaternion<double> fv = f(h);
                if (!qfinite(fv)) {
                    nonfinite.store(true, std::memory_order_relaxed);
                    break;
                }
                const Quaternion<double> w = inv_density * fv;
                acc.sum = acc.sum + w;
                acc.sum_sq = acc.sum_sq + Quaternion<double>(w.x1 * w.x1, w.x2 * w.x2,
                                                             w.x3 * w.x3, w.x4 * w.x4);
            }
            blocks[b] = acc;
        }
    };

    unsigned n_threads = std::thread::hardware_concurrency();
    if (n_threads == 0) n_threads = 1;
    n_threads = std::min<unsigned>(n_threads, 16);
    if (n_blocks < n_threads) n_threads = static_cast<unsigned>(n_blocks);
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (nonfinite.load()) {
        throw NonFinite("integrand produced a non-finite value");
    }
    const MCBlock tot = pairwise_combine(std::move(blocks), mc_plus, MCBlock{});
    const double inv_n = 1.0 / static_cast<double>(total);
    IntegralResult out;
    out.value = inv_n * tot.sum;
    double var_of_mean = 0.0;
    const double denom = total > 1 ? static_cast<double>(total - 1) : 1.0;
    const double comp_mean[4] = {out.value.x1, out.value.x2, out.value.x3, out.value.x4};
    const double comp_sq[4] = {tot.sum_sq.x1, tot.sum_sq.x2, tot.sum_sq.x3, tot.sum_sq.x4};
    for (int c = 0; c < 4; ++c) {
        const double var =
            std::max(0.0, (comp_sq[c] * inv_n - comp_mean[c] * comp_mean[c])) / denom *
            static_cast<double>(total);
        var_of_mean += var / static_cast<double>(total);
    }
    out.abs_error_estimate = std::sqrt(var_of_mean);
    out.spec_hash = spec.hash();
    return out;
}

} // namespace detail

// Integral of f over the boundary group R^3 x H^m with Lebesgue measure
// dbeta = dx2 dx3 dx4 dq' (no normalization factor), by the method selected
// in spec.method. Deterministic for a fixed spec, bit-for-bit identical for any
// thread count. Errors: TailTooFat when the truncation-shell mass is not
// negligible; NonFinite when the integrand produces NaN/inf.
inline IntegralResult integrate_boundary_report(const BoundaryFunction& f, int m,
                                                const QuadratureSpec& spec) {
    spec.validate();
    if (m < 0) throw RangeError("horizontal dimension must be m >= 0");
    switch (spec.method) {
        case QuadratureMethod::tensor_gauss:
            return detail::tensor_integrate(f, m, spec, spec.radial_nodes);
        case QuadratureMethod::monte_carlo:
            return detail::monte_carlo_integrate(f, m, spec);
        case QuadratureMethod::adaptive: {
            // Global grid refinement: re-run the tensor rule on growing node
            // counts until the relative change reaches the target tolerance.
            int nodes = spec.radial_nodes;
            IntegralResult prev = detail::tensor_integrate(f, m, spec, nodes);
            for (int round = 0; round < 4; ++round) {
                nodes = (3 * nodes) / 2 + 1;
                IntegralResult fine = detail::tensor_integrate(f, m, spec, nodes);
                const double change = qabs(fine.value - prev.value);
                fine.abs_error_estimate = change;
                prev = fine;
                if (change <= spec.target_rel_tol * std::max(qabs(fine.value), 1e-300)) break;
            }
            return prev;
        }
    }
    throw RangeError("unknown quadrature method");
}

inline Quaternion<double> integrate_boundary(const BoundaryFunction& f, int m,
                                             const QuadratureSpec& spec) {
    return integrate_boundary_report(f, m, spec).value;
}

// ---------------------------------------------------------------------------
// Symmetry reduction: integrands depending only on (|Im q1|, |q'|) reduce to
// a 2-D radial integral (1-D for m = 0).
// ---------------------------------------------------------------------------

// Area of the unit sphere S^{4n-1} in R^{4n}: 2 pi^{2n} / (2n-1)!.
inline double sphere_area_4n_minus_1(int n) {
    if (n < 1) throw RangeError("sphere area factor requires n >= 1");
    const double pi = 3.14159265358979323846264338327950288;
    double g = 1.0; // (2n-1)!
    for (int i = 2; i <= 2 * n - 1; ++i) g *= i;
    return 2.0 * std::pow(pi, 2 * n) / g;
}

// Reduced quadrature over radial profiles. For n >= 1 integrates
//   4 pi * A_{4n-1} * int int r^2 rho^{4n-1} phi(r, rho) dr drho
// (r = |Im q1| uses radial_nodes, rho = |q'| uses angular_nodes); for n = 0
//   4 pi * int r^2 phi(r) dr.
struct ReducedBoundaryQuadrature {
    int n = 0;

    double integrate(const std::function<double(double)>& profile,
                     const QuadratureSpec& spec) const {
        if (n != 0) throw RangeError("1-D profile form requires n = 0");
        spec.validate();
        const double pi = 3.14159265358979323846264338327950288;
        const GaussLegendre r_rule = half_line_rule(spec.radial_nodes, spec.truncation_radius);
        double acc = 0.0;
        for (std::size_t i = 0; i < r_rule.nodes.size(); ++i) {
            const double r = r_rule.nodes[i];
            const double v = profile(r);
            if (!std::isfinite(v)) throw NonFinite("reduced integrand non-finite");
            acc += r_rule.weights[i] * r * r * v;
        }
        return 4.0 * pi * acc;
    }

    double integrate(const std::function<double(double, double)>& profile,
                     const QuadratureSpec& spec) const {
        if (n < 1) throw RangeError("2-D profile form requires n >= 1");
        spec.validate();
        const double pi = 3.14159265358979323846264338327950288;
        const GaussLegendre r_rule = half_line_rule(spec.radial_nodes, spec.truncation_radius);
        const GaussLegendre rho_rule = half_line_rule(spec.angular_nodes, spec.truncation_radius);
        const double area = sphere_area_4n_minus_1(n);
        double acc = 0.0;
        for (std::size_t i = 0; i < r_rule.nodes.size(); ++i) {
            const double r = r_rule.nodes[i];
            double inner_acc = 0.0;
            for (std::size_t j = 0; j < rho_rule.nodes.size(); ++j) {
                const double rho = rho_rule.nodes[j];
                const double v = profile(r, rho);
                if (!std::isfinite(v)) throw NonFinite("reduced integrand non-finite");
                inner_acc += rho_rule.weights[j] * std::pow(rho, 4 * n - 1) * v;
            }
            acc += r_rule.weights[i] * r * r * inner_acc;
        }
        return 4.0 * pi * area * acc;
    }
};

inline ReducedBoundaryQuadrature symmetry_reduce(int n) {
    if (n < 0) throw RangeError("symmetry reduction requires n >= 0");
    return ReducedBoundaryQuadrature{n};
}

// Spot check of the rotational symmetry a reduced integrand assumes: compares
// f at 8 pseudo-random rotations of a pseudo-random group element against the
// unrotated value; returns the max relative discrepancy.
inline double rotation_symmetry_check(const BoundaryFunction& f, int m, std::uint64_t seed) {
    if (m < 1) return 0.0;
    auto rand_quat = [&](std::uint64_t stream, std::uint64_t idx) {
        return Quaternion<double>(counter_u01(seed, stream, idx) * 2.0 - 1.0,
                                  counter_u01(seed, stream + 101, idx) * 2.0 - 1.0,
                                  counter_u01(seed, stream + 202, idx) * 2.0 - 1.0,
                                  counter_u01(seed, stream + 303, idx) * 2.0 - 1.0);
    };
    HeisenbergElement<double> h;
    h.w = Quaternion<double>(0.0, 0.7, -0.4, 0.2);
    h.zprime.assign(static_cast<std::size_t>(m), Quaternion<double>::zero());
    for (int l = 0; l < m; ++l) h.zprime[static_cast<std::size_t>(l)] = rand_quat(7, l);
    const Quaternion<double> base = f(h);
    double worst = 0.0;
    for (int trial = 0; trial < 8; ++trial) {
        Quaternion<double> sigma = rand_quat(991, trial);
        sigma = (1.0 / qabs(sigma)) * sigma;
        HeisenbergElement<double> rotated;
        rotated.w = qmul(qmul(qconj(sigma), h.w), sigma);
        rotated.w.x1 = 0.0;
        rotated.zprime = scale_right(h.zprime, sigma);
        const Quaternion<double> v = f(rotated);
        worst = std::max(worst, qabs(v - base) / std::max(1.0, qabs(base)));
    }
    return worst;
}

// ---------------------------------------------------------------------------
// Empirical normalization constant.
// ---------------------------------------------------------------------------

struct CEmpResult {
    double value = 0.0;         // F(e)_closed / A(n)
    double norm_integral = 0.0; // A(n) = int |s_unnorm(1 + conj(q1))|^2 dbeta
    double abs_error_estimate = 0.0;
    std::string spec_hash;
};

// Measures the reproducing normalization empirically: the diagonal identity
// at the base point e = (1, 0) forces constant = F(e) / A(n) where A(n) is
// the squared boundary norm of the unnormalized kernel section at e. The
// integrand depends only on (|Im q1|, |q'|), so the symmetry-reduced grid
// applies; the error estimate compares against a two-thirds-size grid.
inline CEmpResult c_emp_report(int n, const QuadratureSpec& spec) {
    if (n < 0) throw RangeError("empirical constant requires n >= 0");
    spec.validate();
    const double fe = to_double(F_e_closed(n));
    const auto reduced = symmetry_reduce(n);

    const auto run = [&](const QuadratureSpec& s) {
        if (n == 0) {
            return reduced.integrate(
                [&](double r) {
                    const Quaternion<double> sigma(1.0, -r, 0.0, 0.0);
                    return qnormsq(s_unnorm(sigma, 0));
                },
                s);
        }
        return reduced.integrate(
            [&](double r, double rho) {
                const Quaternion<double> sigma(1.0 + rho * rho, -r, 0.0, 0.0);
                return qnormsq(s_unnorm(sigma, n));
            },
            s);
    };

    const double a_fine = run(spec);
    QuadratureSpec coarse = spec;
    coarse.radial_nodes = std::max(4, (2 * spec.radial_nodes) / 3);
    coarse.angular_nodes = std::max(4, (2 * spec.angular_nodes) / 3);
    const double a_coarse = run(coarse);

    CEmpResult out;
    out.norm_integral = a_fine;
    out.value = fe / a_fine;
    out.abs_error_estimate = std::abs(fe / a_fine - fe / a_coarse);
    out.spec_hash = spec.hash();
    return out;
}

inline double c_emp(int n, const QuadratureSpec& spec) { return c_emp_report(n, spec).value; }

// ---------------------------------------------------------------------------
// Szego projection and Hardy norm.
// ---------------------------------------------------------------------------

// Projection (P f)(q) = int S(q, Q) f(Q) dbeta(Q) with the quaternion product
// in exactly that order; S is evaluated with the context's chosen
// normalization.
inline IntegralResult szego_project_report(const BoundaryFunction& fb,
                                           const SiegelPoint<double>& q, const KernelContext& ctx,
                                           const QuadratureSpec& spec,
                                           Normalization normalization = Normalization::empirical) {
    if (static_cast<int>(q.m()) != ctx.m) {
        throw SizeMismatch("projection point must match the context's horizontal dimension");
    }
    const BoundaryFunction integrand = [&fb, &q, &ctx, normalization](
                                           const HeisenbergElement<double>& h) {
        const SiegelPoint<double> boundary_point = lift(h);
        return qmul(kernel_S(q, boundary_point, ctx, normalization), fb(h));
    };
    return integrate_boundary_report(integrand, ctx.m, spec);
}

inline Quaternion<double> szego_project(const BoundaryFunction& fb, const SiegelPoint<double>& q,
                                        const KernelContext& ctx, const QuadratureSpec& spec,
                                        Normalization normalization = Normalization::empirical) {
    return szego_project_report(fb, q, ctx, spec, normalization).value;
}

struct HardyNormResult {
    double value = 0.0; // max over the epsilon grid
    std::vector<std::pair<double, double>> per_epsilon;
    bool nondecreasing_toward_boundary = true;
    std::string spec_hash;
};

// sup over vertical translates of the boundary L^2 norm, approximated by a
// max over the supplied decreasing epsilon grid. Also reports whether the
// norms were nondecreasing as epsilon decreased (consistency with the sup
// being the boundary limit).
inline HardyNormResult hardy_norm_sq(
    const std::function<Quaternion<double>(const SiegelPoint<double>&)>& interior_fn,
    const KernelContext& ctx, const QuadratureSpec& spec, const std::vector<double>& eps_grid) {
    const int m = ctx.m;
    if (eps_grid.empty()) throw RangeError("epsilon grid must be nonempty");
    for (std::size_t i = 0; i < eps_grid.size(); ++i) {
        if (!(eps_grid[i] > 0.0)) throw RangeError("epsilon grid entries must be positive");
        if (i > 0 && eps_grid[i] >= eps_grid[i - 1]) {
            throw RangeError("epsilon grid must be strictly decreasing");
        }
    }
    HardyNormResult out;
    out.spec_hash = spec.hash();
    double prev = -1.0;
    for (const double eps : eps_grid) {
        const BoundaryFunction integrand = [&interior_fn, eps](const HeisenbergElement<double>& h) {
            const SiegelPoint<double> p = vertical_translate(lift(h), eps);
            return Quaternion<double>(qnormsq(interior_fn(p)));
        };
        const double v = integrate_boundary_report(integrand, m, spec).value.x1;
        out.per_epsilon.emplace_back(eps, v);
        if (prev >= 0.0 && v + 1e-12 * std::max(1.0, prev) < prev) {
            out.nondecreasing_toward_boundary = false;
        }
        prev = v;
        out.value = std::max(out.value, v);
    }
    return out;
}

} // namespace qszego
