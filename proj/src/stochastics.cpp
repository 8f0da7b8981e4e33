#include "meritsim/stochastics.hpp"

#include <algorithm>
#include <cmath>

namespace meritsim {

double sample_wacc(double mean, double std, RngStream& rng) {
    constexpr double kLo = 0.001;
    constexpr double kHi = 0.5;
    if (std == 0.0) {
        return mean;
    }
    for (;;) {
        const double draw = rng.normal(mean, std);
        if (draw > kLo && draw < kHi) {
            return draw;
        }
    }
}

double sample_variable_om(double mean_vc, double lo_frac, double hi_frac, RngStream& rng) {
    const double lo = lo_frac * mean_vc;
    const double hi = hi_frac * mean_vc;
    if (lo == hi) {
        return lo;
    }
    return rng.uniform(lo, hi);
}

double sample_fuel_price(double base_price, double residual_std, RngStream& rng) {
    if (residual_std == 0.0) {
        return base_price;
    }
    return std::max(0.0, base_price + rng.normal(0.0, residual_std));
}

} // namespace meritsim
