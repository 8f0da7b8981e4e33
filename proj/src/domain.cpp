#include "meritsim/domain.hpp"

#include <cmath>
#include <numeric>

namespace meritsim {

const char* plant_type_name(PlantType type) {
    switch (type) {
        case PlantType::CCGT: return "CCGT";
        case PlantType::Coal: return "Coal";
        case PlantType::Nuclear: return "Nuclear";
        case PlantType::OCGT: return "OCGT";
        case PlantType::OnshoreWind: return "OnshoreWind";
        case PlantType::OffshoreWind: return "OffshoreWind";
        case PlantType::PV: return "PV";
        case PlantType::Hydro: return "Hydro";
        case PlantType::RecipEngine: return "RecipEngine";
    }
    return "Unknown";
}

PlantType parse_plant_type(const std::string& name) {
    for (PlantType type : kAllPlantTypes) {
        if (name == plant_type_name(type)) {
            return type;
        }
    }
    throw SimError(ErrorCode::UnknownPlantType, "'" + name + "' is not a known plant type");
}

const char* plant_status_name(PlantStatus status) {
    switch (status) {
        case PlantStatus::PreDevelopment: return "PreDevelopment";
        case PlantStatus::Construction: return "Construction";
        case PlantStatus::Operating: return "Operating";
        case PlantStatus::Retired: return "Retired";
    }
    return "Unknown";
}

void PlantSpec::validate() const {
    // Appendix data carries efficiency 0 for non-fuel technologies, so 0 is
    // accepted here; fuel-burning use sites require a positive value.
    if (!(efficiency >= 0.0 && efficiency <= 1.0)) {
        throw SimError(ErrorCode::InvalidValue, "efficiency outside [0,1]");
    }
    if (!(capacity_mw > 0.0)) {
        throw SimError(ErrorCode::InvalidValue, "capacity must be positive");
    }
    if (operating_period <= 0.0) {
        throw SimError(ErrorCode::InvalidValue, "operating period must be positive");
    }
    if (pre_dev_period < 0.0 || construction_period < 0.0) {
        throw SimError(ErrorCode::InvalidValue, "periods must be non-negative");
    }
    if (pre_dev_cost < 0.0 || construction_cost < 0.0 || infrastructure_cost < 0.0 ||
        fixed_om_cost < 0.0 || variable_om_cost < 0.0 || insurance_cost < 0.0) {
        throw SimError(ErrorCode::InvalidValue, "costs must be non-negative");
    }
    // connection_cost may be negative (embedded benefits for recip engines).
}

PlantStatus plant_timeline(const PlantInstance& instance, int year) {
    const int pre_dev_end = instance.construction_start_year +
                            static_cast<int>(instance.spec.pre_dev_period);
    const int operating_start = instance.operating_start_year();
    const int retirement = instance.retirement_year();
    if (year < pre_dev_end) {
        return PlantStatus::PreDevelopment;
    }
    if (year < operating_start) {
        return PlantStatus::Construction;
    }
    if (year < retirement) {
        return PlantStatus::Operating;
    }
    return PlantStatus::Retired;
}

double LoadDurationCurve::total_energy_mwh() const {
    double energy = 0.0;
    for (const auto& seg : segments) {
        energy += seg.demand_mw * seg.duration_hours;
    }
    return energy;
}

LoadDurationCurve validate_ldc(const std::vector<LdcSegment>& segments) {
    if (segments.empty()) {
        throw SimError(ErrorCode::InvalidValue, "LDC needs at least one segment");
    }
    double duration_sum = 0.0;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        if (segments[i].demand_mw < 0.0 || segments[i].duration_hours <= 0.0) {
            throw SimError(ErrorCode::InvalidValue, "segment demand/duration out of range");
        }
        if (i > 0 && segments[i].demand_mw > segments[i - 1].demand_mw) {
            throw SimError(ErrorCode::NonMonotoneDemand,
                           "segment " + std::to_string(i) + " exceeds its predecessor");
        }
        duration_sum += segments[i].duration_hours;
    }
    if (std::abs(duration_sum - 8760.0) > 1e-6) {
        throw SimError(ErrorCode::DurationSumMismatch,
                       "durations sum to " + std::to_string(duration_sum) + " h");
    }
    return LoadDurationCurve{segments};
}

double ScenarioConfig::carbon_tax_at(int year) const {
    const int idx = year - start_year;
    if (idx < 0) {
        return carbon_tax.value_by_year.empty() ? 0.0 : carbon_tax.value_by_year.front();
    }
    if (idx >= static_cast<int>(carbon_tax.value_by_year.size())) {
        return carbon_tax.value_by_year.empty() ? 0.0 : carbon_tax.value_by_year.back();
    }
    return carbon_tax.value_by_year[static_cast<std::size_t>(idx)];
}

double ScenarioConfig::fuel_price_at(const FuelConfig& fuel, int year) const {
    const int idx = year - start_year;
    if (fuel.price_by_year.empty()) {
        return 0.0;
    }
    if (idx < 0) {
        return fuel.price_by_year.front();
    }
    if (idx >= static_cast<int>(fuel.price_by_year.size())) {
        return fuel.price_by_year.back();
    }
    return fuel.price_by_year[static_cast<std::size_t>(idx)];
}

void ScenarioConfig::validate() const {
    if (n_years < 1) {
        throw SimError(ErrorCode::InvalidValue, "n_years must be >= 1");
    }
    if (n_replications < 1) {
        throw SimError(ErrorCode::InvalidValue, "n_replications must be >= 1");
    }
    if (!(vom_uniform_lo < vom_uniform_hi)) {
        throw SimError(ErrorCode::InvalidValue, "vom_uniform_lo must be < vom_uniform_hi");
    }
    if (vom_uniform_lo < 0.0) {
        throw SimError(ErrorCode::InvalidValue, "vom_uniform_lo must be >= 0");
    }
    if (upfront_capital_fraction < 0.0 || upfront_capital_fraction > 1.0) {
        throw SimError(ErrorCode::InvalidValue, "upfront_capital_fraction outside [0,1]");
    }
    if (forecast_window_lo < 2 || forecast_window_hi < forecast_window_lo) {
        throw SimError(ErrorCode::InvalidValue, "forecast window range invalid");
    }
    if (lost_load_price < 0.0) {
        throw SimError(ErrorCode::InvalidValue, "lost_load_price must be >= 0");
    }
    validate_ldc(initial_ldc.segments);
    if (static_cast<int>(carbon_tax.value_by_year.size()) != n_years) {
        throw SimError(ErrorCode::InvalidValue, "carbon tax schedule length != n_years");
    }
}

} // namespace meritsim
