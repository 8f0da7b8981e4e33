#include "meritsim/plant_costs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "meritsim/csv.hpp"

namespace meritsim {

namespace {

std::string row_key(PlantType type, double capacity, int year) {
    std::ostringstream key;
    key << plant_type_name(type) << '|' << capacity << '|' << year;
    return key.str();
}

double lerp(double a, double b, double t) { return a + t * (b - a); }

} // namespace

void CostTable::load_csv(const std::string& path) {
    const auto table = csv::read_file(path);
    const int c_type = table.require_column("type", path);
    const int c_cap = table.require_column("capacity_mw", path);
    const int c_year = table.require_column("year", path);
    const int c_eff = table.require_column("efficiency", path);
    const int c_op = table.require_column("op_years", path);
    const int c_pd = table.require_column("predev_years", path);
    const int c_cd = table.require_column("constr_years", path);
    const int c_pc = table.require_column("predev_cost", path);
    const int c_cc = table.require_column("constr_cost", path);
    const int c_ic = table.require_column("infra_cost", path);
    const int c_fc = table.require_column("fixed_om", path);
    const int c_vc = table.require_column("var_om", path);
    const int c_in = table.require_column("insurance", path);
    const int c_con = table.require_column("connection", path);

    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        const std::string ctx = path + " row " + std::to_string(i + 2);
        PlantSpec spec;
        spec.plant_type = parse_plant_type(row[c_type]);
        spec.capacity_mw = csv::to_double(row[c_cap], ctx);
        spec.cost_basis_year = csv::to_int(row[c_year], ctx);
        spec.efficiency = csv::to_double(row[c_eff], ctx);
        spec.operating_period = csv::to_double(row[c_op], ctx);
        spec.pre_dev_period = csv::to_double(row[c_pd], ctx);
        spec.construction_period = csv::to_double(row[c_cd], ctx);
        spec.pre_dev_cost = csv::to_double(row[c_pc], ctx);
        spec.construction_cost = csv::to_double(row[c_cc], ctx);
        spec.infrastructure_cost = csv::to_double(row[c_ic], ctx);
        spec.fixed_om_cost = csv::to_double(row[c_fc], ctx);
        spec.variable_om_cost = csv::to_double(row[c_vc], ctx);
        spec.insurance_cost = csv::to_double(row[c_in], ctx);
        spec.connection_cost = csv::to_double(row[c_con], ctx);
        spec.validate();

        const std::string key = row_key(spec.plant_type, spec.capacity_mw, spec.cost_basis_year);
        if (index_.count(key)) {
            throw SimError(ErrorCode::ParseError, ctx + ": duplicate key " + key);
        }
        index_[key] = rows_.size();
        rows_.push_back(spec);
    }
}

std::vector<int> CostTable::years_for(PlantType type) const {
    std::vector<int> years;
    for (const auto& row : rows_) {
        if (row.plant_type == type &&
            std::find(years.begin(), years.end(), row.cost_basis_year) == years.end()) {
            years.push_back(row.cost_basis_year);
        }
    }
    std::sort(years.begin(), years.end());
    return years;
}

PlantSpec CostTable::lookup_or_interpolate(PlantType type, double capacity_mw, int year) const {
    const auto years = years_for(type);
    if (years.empty()) {
        throw SimError(ErrorCode::UnknownPlantType,
                       std::string("no cost rows for ") + plant_type_name(type));
    }

    int best_year = years.front();
    for (int y : years) {
        if (std::abs(y - year) < std::abs(best_year - year)) {
            best_year = y;
        }
    }

    std::vector<const PlantSpec*> candidates;
    for (const auto& row : rows_) {
        if (row.plant_type == type && row.cost_basis_year == best_year) {
            candidates.push_back(&row);
        }
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const PlantSpec* a, const PlantSpec* b) { return a->capacity_mw < b->capacity_mw; });

    auto with_capacity = [capacity_mw](PlantSpec spec) {
        spec.capacity_mw = capacity_mw;
        return spec;
    };

    // Exact hit or outside the known range: nearest row, no extrapolation.
    if (capacity_mw <= candidates.front()->capacity_mw) {
        return with_capacity(*candidates.front());
    }
    if (capacity_mw >= candidates.back()->capacity_mw) {
        return with_capacity(*candidates.back());
    }
    for (const auto* row : candidates) {
        if (row->capacity_mw == capacity_mw) {
            return *row;
        }
    }

    const PlantSpec* lower = candidates.front();
    const PlantSpec* upper = candidates.back();
    for (const auto* row : candidates) {
        if (row->capacity_mw < capacity_mw && row->capacity_mw > lower->capacity_mw) {
            lower = row;
        }
        if (row->capacity_mw > capacity_mw && row->capacity_mw < upper->capacity_mw) {
            upper = row;
        }
    }

    const double t = (capacity_mw - lower->capacity_mw) / (upper->capacity_mw - lower->capacity_mw);
    const PlantSpec& nearer = (t <= 0.5) ? *lower : *upper;

    PlantSpec spec;
    spec.plant_type = type;
    spec.capacity_mw = capacity_mw;
    spec.cost_basis_year = best_year;
    spec.efficiency = lerp(lower->efficiency, upper->efficiency, t);
    // Period fields stay integral years; interpolating them would put the
    // build timeline between calendar years.
    spec.operating_period = nearer.operating_period;
    spec.pre_dev_period = nearer.pre_dev_period;
    spec.construction_period = nearer.construction_period;
    spec.pre_dev_cost = lerp(lower->pre_dev_cost, upper->pre_dev_cost, t);
    spec.construction_cost = lerp(lower->construction_cost, upper->construction_cost, t);
    spec.infrastructure_cost = lerp(lower->infrastructure_cost, upper->infrastructure_cost, t);
    spec.fixed_om_cost = lerp(lower->fixed_om_cost, upper->fixed_om_cost, t);
    spec.variable_om_cost = lerp(lower->variable_om_cost, upper->variable_om_cost, t);
    spec.insurance_cost = lerp(lower->insurance_cost, upper->insurance_cost, t);
    spec.connection_cost = lerp(lower->connection_cost, upper->connection_cost, t);
    return spec;
}

void AvailabilityTable::load_csv(const std::string& path) {
    const auto table = csv::read_file(path);
    const int c_type = table.require_column("type", path);
    const int c_from = table.require_column("from_year", path);
    const int c_avail = table.require_column("availability", path);

    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        const std::string ctx = path + " row " + std::to_string(i + 2);
        const PlantType type = parse_plant_type(row[c_type]);
        const int from_year = csv::to_int(row[c_from], ctx);
        const double value = csv::to_double(row[c_avail], ctx);
        if (!(value > 0.0 && value <= 1.0)) {
            throw SimError(ErrorCode::InvalidValue, ctx + ": availability outside (0,1]");
        }
        buckets_[type].emplace_back(from_year, value);
    }
    for (auto& [type, entries] : buckets_) {
        std::sort(entries.begin(), entries.end());
        for (std::size_t i = 1; i < entries.size(); ++i) {
            if (entries[i].second < entries[i - 1].second) {
                throw SimError(ErrorCode::InvalidValue,
                               std::string(plant_type_name(type)) +
                                   ": availability decreases for newer construction years");
            }
        }
    }
}

double AvailabilityTable::availability(PlantType type, int construction_year) const {
    const auto it = buckets_.find(type);
    if (it == buckets_.end() || it->second.empty()) {
        throw SimError(ErrorCode::MissingAvailabilityData,
                       std::string("no availability data for ") + plant_type_name(type));
    }
    const auto& entries = it->second;
    double value = entries.front().second; // years before the first bucket take its value
    for (const auto& [from_year, bucket_value] : entries) {
        if (construction_year >= from_year) {
            value = bucket_value;
        }
    }
    return value;
}

void CapacityFractionTable::load_csv(const std::string& path, int n_segments) {
    n_segments_ = n_segments;
    const auto table = csv::read_file(path);
    const int c_type = table.require_column("type", path);
    const int c_seg = table.require_column("segment_index", path);
    const int c_frac = table.require_column("fraction", path);

    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        const std::string ctx = path + " row " + std::to_string(i + 2);
        const PlantType type = parse_plant_type(row[c_type]);
        const int segment = csv::to_int(row[c_seg], ctx);
        const double fraction = csv::to_double(row[c_frac], ctx);
        if (segment < 0 || segment >= n_segments) {
            throw SimError(ErrorCode::InvalidValue, ctx + ": segment index out of range");
        }
        if (fraction < 0.0 || fraction > 1.0) {
            throw SimError(ErrorCode::InvalidValue, ctx + ": fraction outside [0,1]");
        }
        auto& fractions = fractions_[type];
        fractions.resize(static_cast<std::size_t>(n_segments), -1.0);
        fractions[static_cast<std::size_t>(segment)] = fraction;
    }
    for (const auto& [type, fractions] : fractions_) {
        for (double f : fractions) {
            if (f < 0.0) {
                throw SimError(ErrorCode::InvalidValue,
                               std::string(plant_type_name(type)) +
                                   ": capacity fractions missing for some segments");
            }
        }
    }
}

std::vector<double> CapacityFractionTable::fractions(PlantType type) const {
    const auto it = fractions_.find(type);
    if (it != fractions_.end()) {
        return it->second;
    }
    return std::vector<double>(static_cast<std::size_t>(n_segments_), 1.0);
}

namespace {

struct LcoeCoefficients {
    std::array<double, kNumCostParams> per_param{}; // d(LCOE)/d(param)
    double energy_npv = 0.0;
};

LcoeCoefficients lcoe_coefficients(const PlantSpec& spec, double capacity_factor,
                                   double discount_rate) {
    const int pre_dev = static_cast<int>(spec.pre_dev_period);
    const int constr = static_cast<int>(spec.construction_period);
    const int op = static_cast<int>(spec.operating_period);
    const double capacity = spec.capacity_mw;
    const double yearly_energy = capacity * capacity_factor * 8760.0;

    auto df = [discount_rate](int t) { return std::pow(1.0 + discount_rate, -t); };

    double df_predev = 0.0;
    for (int t = 0; t < pre_dev; ++t) {
        df_predev += df(t);
    }
    double df_constr = 0.0;
    for (int t = pre_dev; t < pre_dev + constr; ++t) {
        df_constr += df(t);
    }
    double df_op = 0.0;
    for (int t = pre_dev + constr; t < pre_dev + constr + op; ++t) {
        df_op += df(t);
    }

    LcoeCoefficients out;
    out.energy_npv = yearly_energy * df_op;
    if (out.energy_npv <= 0.0) {
        throw SimError(ErrorCode::InvalidValue, "discounted lifetime energy must be positive");
    }
    auto& a = out.per_param;
    a[static_cast<int>(CostParam::PreDevCost)] =
        (pre_dev > 0) ? capacity / pre_dev * df_predev / out.energy_npv : 0.0;
    a[static_cast<int>(CostParam::ConstructionCost)] =
        (constr > 0) ? capacity / constr * df_constr / out.energy_npv : 0.0;
    a[static_cast<int>(CostParam::InfrastructureCost)] = df(pre_dev) / out.energy_npv;
    a[static_cast<int>(CostParam::FixedOm)] = capacity * df_op / out.energy_npv;
    a[static_cast<int>(CostParam::VariableOm)] = 1.0;
    a[static_cast<int>(CostParam::Insurance)] = a[static_cast<int>(CostParam::FixedOm)];
    a[static_cast<int>(CostParam::Connection)] = a[static_cast<int>(CostParam::FixedOm)];
    return out;
}

double param_value(const PlantSpec& spec, CostParam param) {
    switch (param) {
        case CostParam::PreDevCost: return spec.pre_dev_cost;
        case CostParam::ConstructionCost: return spec.construction_cost;
        case CostParam::InfrastructureCost: return spec.infrastructure_cost;
        case CostParam::FixedOm: return spec.fixed_om_cost;
        case CostParam::VariableOm: return spec.variable_om_cost;
        case CostParam::Insurance: return spec.insurance_cost;
        case CostParam::Connection: return spec.connection_cost;
    }
    return 0.0;
}

void set_param_value(PlantSpec& spec, CostParam param, double value) {
    switch (param) {
        case CostParam::PreDevCost: spec.pre_dev_cost = value; break;
        case CostParam::ConstructionCost: spec.construction_cost = value; break;
        case CostParam::InfrastructureCost: spec.infrastructure_cost = value; break;
        case CostParam::FixedOm: spec.fixed_om_cost = value; break;
        case CostParam::VariableOm: spec.variable_om_cost = value; break;
        case CostParam::Insurance: spec.insurance_cost = value; break;
        case CostParam::Connection: spec.connection_cost = value; break;
    }
}

} // namespace

double lcoe(const PlantSpec& spec, double capacity_factor, double discount_rate) {
    const auto coeff = lcoe_coefficients(spec, capacity_factor, discount_rate);
    double value = 0.0;
    for (int p = 0; p < kNumCostParams; ++p) {
        value += coeff.per_param[static_cast<std::size_t>(p)] *
                 param_value(spec, static_cast<CostParam>(p));
    }
    return value;
}

PlantSpec estimate_params_from_lcoe(const LcoeConstraintSet& constraints) {
    const auto coeff = lcoe_coefficients(constraints.base, constraints.assumed_capacity_factor,
                                         constraints.assumed_discount_rate);

    // Resolve share bounds into value bounds.
    std::array<double, kNumCostParams> lo{};
    std::array<double, kNumCostParams> hi{};
    for (int p = 0; p < kNumCostParams; ++p) {
        const auto& b = constraints.bounds[static_cast<std::size_t>(p)];
        if (b.lo > b.hi) {
            throw SimError(ErrorCode::InvalidValue, "bound lower exceeds upper");
        }
        const double a = coeff.per_param[static_cast<std::size_t>(p)];
        if (b.kind == BoundKind::Absolute) {
            lo[static_cast<std::size_t>(p)] = b.lo;
            hi[static_cast<std::size_t>(p)] = b.hi;
        } else if (a > 0.0) {
            lo[static_cast<std::size_t>(p)] = b.lo * constraints.target_lcoe / a;
            hi[static_cast<std::size_t>(p)] = b.hi * constraints.target_lcoe / a;
        } else {
            // Parameter never reaches the LCOE; a positive required share is
            // unsatisfiable.
            if (b.lo * constraints.target_lcoe > 0.0) {
                throw SimError(ErrorCode::Infeasible,
                               "share bound on a parameter with zero LCOE weight");
            }
            lo[static_cast<std::size_t>(p)] = 0.0;
            hi[static_cast<std::size_t>(p)] = 0.0;
        }
    }

    double lcoe_at_lo = 0.0;
    double lcoe_at_hi = 0.0;
    for (int p = 0; p < kNumCostParams; ++p) {
        lcoe_at_lo += coeff.per_param[static_cast<std::size_t>(p)] * lo[static_cast<std::size_t>(p)];
        lcoe_at_hi += coeff.per_param[static_cast<std::size_t>(p)] * hi[static_cast<std::size_t>(p)];
    }
    const double scale = std::max({std::abs(constraints.target_lcoe), std::abs(lcoe_at_lo),
                                   std::abs(lcoe_at_hi), 1.0});
    if (constraints.target_lcoe < lcoe_at_lo - 1e-9 * scale ||
        constraints.target_lcoe > lcoe_at_hi + 1e-9 * scale) {
        throw SimError(ErrorCode::Infeasible,
                       "target LCOE outside [" + std::to_string(lcoe_at_lo) + ", " +
                           std::to_string(lcoe_at_hi) + "]");
    }

    // One equality constraint plus box bounds: raise parameters from their
    // lower bounds in declaration order until the gap closes (the simplex
    // vertex this walk reaches is the lexicographically smallest solution).
    PlantSpec result = constraints.base;
    double remaining = constraints.target_lcoe - lcoe_at_lo;
    for (int p = 0; p < kNumCostParams; ++p) {
        const double a = coeff.per_param[static_cast<std::size_t>(p)];
        double value = lo[static_cast<std::size_t>(p)];
        if (a > 0.0 && remaining > 0.0) {
            const double headroom = (hi[static_cast<std::size_t>(p)] - value) * a;
            const double take = std::min(remaining, headroom);
            value += take / a;
            remaining -= take;
        }
        set_param_value(result, static_cast<CostParam>(p), value);
    }
    result.validate();
    return result;
}

} // namespace meritsim
