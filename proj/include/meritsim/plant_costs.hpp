#ifndef MERITSIM_PLANT_COSTS_HPP
#define MERITSIM_PLANT_COSTS_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "meritsim/domain.hpp"

namespace meritsim {

/// Curated cost rows keyed by (type, capacity, cost basis year).
class CostTable {
public:
    /// Parses one CSV with columns: type, capacity_mw, year, efficiency,
    /// op_years, predev_years, constr_years, predev_cost, constr_cost,
    /// infra_cost, fixed_om, var_om, insurance, connection.
    /// Duplicate keys are rejected.
    void load_csv(const std::string& path);

    const std::vector<PlantSpec>& rows() const { return rows_; }
    std::vector<int> years_for(PlantType type) const;

    /// Hierarchical match: nearest available year first (lower year wins a
    /// tie), then capacity within that year. An exact capacity hit returns
    /// the row; a capacity between two known rows interpolates efficiency
    /// and every cost field independently, with the period fields taken from
    /// the nearer row; a capacity outside the known range returns the
    /// nearest row's values unchanged. The returned spec always carries the
    /// requested capacity.
    PlantSpec lookup_or_interpolate(PlantType type, double capacity_mw, int year) const;

private:
    std::vector<PlantSpec> rows_;
    std::map<std::string, std::size_t> index_;
};

/// Piecewise-constant availability by technology and construction-year
/// bucket. Buckets are validated non-decreasing within a technology.
class AvailabilityTable {
public:
    /// CSV columns: type, from_year, availability.
    void load_csv(const std::string& path);

    double availability(PlantType type, int construction_year) const;

private:
    std::map<PlantType, std::vector<std::pair<int, double>>> buckets_;
};

/// Per-segment nameplate derating for intermittent technologies.
/// Technologies absent from the file count as dispatchable (1.0 everywhere).
class CapacityFractionTable {
public:
    /// CSV columns: type, segment_index, fraction.
    void load_csv(const std::string& path, int n_segments);

    std::vector<double> fractions(PlantType type) const;

private:
    int n_segments_ = 0;
    std::map<PlantType, std::vector<double>> fractions_;
};

enum class CostParam : int {
    PreDevCost = 0,
    ConstructionCost,
    InfrastructureCost,
    FixedOm,
    VariableOm,
    Insurance,
    Connection,
};

constexpr int kNumCostParams = 7;

enum class BoundKind {
    Absolute,  // bound on the parameter value itself
    LcoeShare, // bound on the parameter's share of target_lcoe
};

struct ParamBounds {
    double lo = 0.0;
    double hi = 0.0;
    BoundKind kind = BoundKind::Absolute;
};

/// Calibration problem: recover the cost parameters of `base` so that the
/// implied LCOE hits target_lcoe, each parameter within its bounds.
struct LcoeConstraintSet {
    PlantSpec base; // periods, efficiency and capacity are taken as fixed
    double target_lcoe = 0.0;
    double assumed_capacity_factor = 0.0;
    double assumed_discount_rate = 0.0;
    std::array<ParamBounds, kNumCostParams> bounds{};
};

/// Discounted lifetime cost per discounted lifetime MWh, on the same yearly
/// cash-flow grid the investment module uses.
double lcoe(const PlantSpec& spec, double capacity_factor, double discount_rate);

/// Solves the one-constraint box-bounded linear program: LCOE is linear in
/// the cost parameters once periods, capacity factor and discount rate are
/// fixed, so parameters are raised from their lower bounds in declaration
/// order until the target is met. Throws Infeasible when the bounds cannot
/// reach the target.
PlantSpec estimate_params_from_lcoe(const LcoeConstraintSet& constraints);

} // namespace meritsim

#endif // MERITSIM_PLANT_COSTS_HPP
