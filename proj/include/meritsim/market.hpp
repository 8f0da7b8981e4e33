#ifndef MERITSIM_MARKET_HPP
#define MERITSIM_MARKET_HPP

#include <map>
#include <vector>

#include "meritsim/domain.hpp"

namespace meritsim {

struct SrmcInputs {
    double fuel_price = 0.0;      // currency/MWh-thermal
    double carbon_price = 0.0;    // currency/tCO2
    double emission_factor = 0.0; // tCO2/MWh-thermal
    double efficiency = 1.0;
    double variable_om = 0.0;     // currency/MWh
};

/// Short-run marginal cost: fuel and carbon scaled by heat rate, plus
/// variable O&M. Capital and fixed costs are excluded.
double srmc(const SrmcInputs& inputs);

/// Fuel terms a bidder faces, resolved per technology. Technologies absent
/// from the map burn no fuel.
struct DispatchPrices {
    struct FuelTerms {
        double fuel_price = 0.0;
        double emission_factor = 0.0;
    };
    std::map<PlantType, FuelTerms> by_type;
    double carbon_price = 0.0;
};

double plant_srmc(const PlantSpec& spec, double variable_om, const DispatchPrices& prices);

/// One bid per Operating plant per segment. Offered capacity is nameplate
/// derated by the segment capacity fraction and availability; the price is
/// the plant's SRMC at its sampled variable O&M.
std::vector<Bid> make_bids(const GenCo& genco, const LoadDurationCurve& ldc, int year,
                           const DispatchPrices& prices);

/// Merit-order clearing of one segment. Bids are taken in ascending price
/// order (ties: larger offer first, then plant id); the marginal bid is
/// dispatched partially and sets the SMP. Short supply prices the segment at
/// lost_load_price; zero demand clears at zero.
SegmentClearing clear_segment(std::vector<Bid> bids, double demand_mw, double lost_load_price);

/// Clears every LDC segment independently.
ClearingResult clear_year(const std::vector<Bid>& all_bids, const LoadDurationCurve& ldc,
                          double lost_load_price);

/// Revenue of each plant for the year: dispatched MW x segment hours x SMP.
std::map<std::int64_t, double> per_plant_revenue(const ClearingResult& clearing);

/// Dispatched energy of each plant for the year, MWh.
std::map<std::int64_t, double> per_plant_energy(const ClearingResult& clearing);

} // namespace meritsim

#endif // MERITSIM_MARKET_HPP
