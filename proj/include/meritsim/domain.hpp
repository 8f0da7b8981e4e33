#ifndef MERITSIM_DOMAIN_HPP
#define MERITSIM_DOMAIN_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "meritsim/errors.hpp"

namespace meritsim {

enum class PlantType {
    CCGT,
    Coal,
    Nuclear,
    OCGT,
    OnshoreWind,
    OffshoreWind,
    PV,
    Hydro,
    RecipEngine,
};

constexpr std::array<PlantType, 9> kAllPlantTypes = {
    PlantType::CCGT,       PlantType::Coal,         PlantType::Nuclear,
    PlantType::OCGT,       PlantType::OnshoreWind,  PlantType::OffshoreWind,
    PlantType::PV,         PlantType::Hydro,        PlantType::RecipEngine,
};

const char* plant_type_name(PlantType type);
PlantType parse_plant_type(const std::string& name); // throws UnknownPlantType

/// Techno-economic parameter set of one power plant design.
/// Periods are years; per-MW costs unless noted. infrastructure_cost is an
/// absolute one-off; insurance and connection are annual per-MW charges and
/// connection may be negative.
struct PlantSpec {
    PlantType plant_type = PlantType::CCGT;
    double capacity_mw = 0.0;
    int cost_basis_year = 0;
    double efficiency = 0.0;          // thermal -> electric fraction; 0 for non-fuel techs
    double operating_period = 0.0;    // OP, years
    double pre_dev_period = 0.0;      // P_D, years
    double construction_period = 0.0; // C_D, years
    double pre_dev_cost = 0.0;        // P_C, currency/MW
    double construction_cost = 0.0;   // C_C, currency/MW
    double infrastructure_cost = 0.0; // I_C, currency (absolute)
    double fixed_om_cost = 0.0;       // F_C, currency/MW/yr
    double variable_om_cost = 0.0;    // V_C, currency/MWh
    double insurance_cost = 0.0;      // In_C, currency/MW/yr
    double connection_cost = 0.0;     // Con_C, currency/MW/yr, may be negative

    void validate() const; // throws InvalidValue
};

enum class PlantStatus : int {
    PreDevelopment = 0,
    Construction = 1,
    Operating = 2,
    Retired = 3,
};

const char* plant_status_name(PlantStatus status);

/// A concrete plant owned by a GenCo. capacity_fraction_per_segment derates
/// intermittent output per LDC segment; 1.0 everywhere for dispatchables.
struct PlantInstance {
    std::int64_t id = 0;
    PlantSpec spec;
    int owner_id = 0;
    int construction_start_year = 0;
    PlantStatus status = PlantStatus::PreDevelopment;
    double sampled_variable_om = 0.0; // currency/MWh, per-instance draw
    double availability = 1.0;
    std::vector<double> capacity_fraction_per_segment;

    int operating_start_year() const {
        return construction_start_year +
               static_cast<int>(spec.pre_dev_period + spec.construction_period);
    }
    int retirement_year() const {
        return operating_start_year() + static_cast<int>(spec.operating_period);
    }
};

/// Status implied by `year` relative to the instance's build timeline.
PlantStatus plant_timeline(const PlantInstance& instance, int year);

struct LdcSegment {
    double demand_mw = 0.0;
    double duration_hours = 0.0;
};

/// Yearly demand as ordered segments, highest level first, durations summing
/// to one year.
struct LoadDurationCurve {
    std::vector<LdcSegment> segments;

    double total_energy_mwh() const;
    double mean_demand_mw() const { return total_energy_mwh() / 8760.0; }
    double peak_demand_mw() const { return segments.empty() ? 0.0 : segments.front().demand_mw; }
};

/// Checks ordering and the 8760 h duration budget; misordered input is
/// rejected, never sorted.
LoadDurationCurve validate_ldc(const std::vector<LdcSegment>& segments);

struct Loan {
    double principal = 0.0;
    double annual_rate = 0.0;
    int remaining_years = 0;
    double annual_payment = 0.0;
};

struct GenCo {
    int id = 0;
    std::string name;
    double cash_balance = 0.0;
    std::vector<PlantInstance> plants;
    std::vector<Loan> loans;
    double discount_rate = 0.0;       // sampled WACC
    int forecast_window = 4;          // years of history used when fitting
    double upfront_capital_fraction = 0.0;
};

struct Bid {
    std::int64_t plant_id = 0;
    int owner_id = 0;
    PlantType plant_type = PlantType::CCGT;
    int segment_index = 0;
    double offered_mw = 0.0;
    double price = 0.0; // currency/MWh, SRMC
};

struct Dispatch {
    Bid bid;
    double dispatched_mw = 0.0;
};

struct SegmentClearing {
    double demand_mw = 0.0;
    double duration_hours = 0.0;
    double smp = 0.0;
    double unmet_mw = 0.0;
    std::vector<Dispatch> accepted;
};

struct ClearingResult {
    std::vector<SegmentClearing> segments;
};

struct FuelConfig {
    std::string name;
    std::vector<double> price_by_year;   // base trajectory, currency/MWh-thermal
    double emission_factor = 0.0;        // tCO2/MWh-thermal
    std::vector<PlantType> plant_types;  // technologies burning this fuel
    std::string history_file;            // (year,value) CSV for fitting
};

struct CarbonTaxSchedule {
    std::vector<double> value_by_year; // currency/tCO2, one entry per simulated year
};

struct StratifiedFleet {
    std::string reference_registry;
    double target_mw = 0.0;
};

/// Everything exogenous to one scenario run.
struct ScenarioConfig {
    int start_year = 0;
    int n_years = 1;
    double demand_growth = 0.0; // fraction/yr, may be negative
    LoadDurationCurve initial_ldc;
    std::map<std::string, FuelConfig> fuels;
    CarbonTaxSchedule carbon_tax;
    double lost_load_price = 0.0;

    double wacc_mean = 0.0;
    double wacc_std = 0.0;
    double vom_uniform_lo = 0.3; // fractions of mean V_C
    double vom_uniform_hi = 2.0;
    double upfront_capital_fraction = 0.0;
    double dividend_fraction = 0.0;

    int n_replications = 1;
    std::uint64_t rng_seed = 0;
    bool stochastic_enabled = true;
    std::array<int, 3> arima_order = {1, 1, 1};
    int forecast_window_lo = 3;
    int forecast_window_hi = 10;

    int max_investments_per_year = 1; // per GenCo
    bool freeze_investment_when_cash_negative = false;

    // data sources
    std::string plant_costs_modern;
    std::string plant_costs_historic;
    std::string availability_file;
    std::string capacity_fractions_file;
    std::string carbon_history_file;
    std::string demand_history_file;
    std::string plant_registry;   // empty when fleet is stratified
    std::string company_registry;
    std::optional<StratifiedFleet> stratified_fleet;

    double carbon_tax_at(int year) const;
    double fuel_price_at(const FuelConfig& fuel, int year) const;
    void validate() const;
};

} // namespace meritsim

#endif // MERITSIM_DOMAIN_HPP
