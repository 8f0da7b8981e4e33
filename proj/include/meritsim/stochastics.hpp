#ifndef MERITSIM_STOCHASTICS_HPP
#define MERITSIM_STOCHASTICS_HPP

#include <cstdint>
#include <random>

namespace meritsim {

/// One reproducible draw sequence per (seed, stream_id). Replications get
/// disjoint stream ids; a stream is used single-threaded. Uniform and normal
/// variates are generated here rather than through std distributions so the
/// sequence is pinned to the engine, not the standard library build.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_id_(stream_id) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                          static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream_id & 0xffffffffu),
                          static_cast<std::uint32_t>(stream_id >> 32)};
        engine_.seed(seq);
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_id_; }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

    /// Inclusive integer range via truncation; spans here are tiny.
    int uniform_int(int lo, int hi) {
        const int span = hi - lo + 1;
        int draw = lo + static_cast<int>(uniform01() * span);
        return draw > hi ? hi : draw;
    }

    /// Box-Muller; consumes two uniforms per call.
    double normal(double mean, double stddev) {
        double u1 = uniform01();
        double u2 = uniform01();
        if (u1 < 1e-300) {
            u1 = 1e-300;
        }
        const double radius = std::sqrt(-2.0 * std::log(u1));
        return mean + stddev * radius * std::cos(2.0 * 3.14159265358979323846 * u2);
    }

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::mt19937_64 engine_;
};

/// Gaussian WACC draw truncated to (0.001, 0.5) by resampling.
/// std == 0 returns the mean exactly.
double sample_wacc(double mean, double std, RngStream& rng);

/// Uniform draw in [lo_frac, hi_frac] x mean_vc. A degenerate range returns
/// its single point without consuming entropy.
double sample_variable_om(double mean_vc, double lo_frac, double hi_frac, RngStream& rng);

/// Base price plus a Gaussian residual draw, floored at zero.
double sample_fuel_price(double base_price, double residual_std, RngStream& rng);

} // namespace meritsim

#endif // MERITSIM_STOCHASTICS_HPP
