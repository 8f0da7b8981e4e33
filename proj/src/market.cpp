#include "meritsim/market.hpp"

#include <algorithm>
#include <cmath>

namespace meritsim {

double srmc(const SrmcInputs& inputs) {
    double cost = inputs.variable_om;
    if (inputs.fuel_price != 0.0 || inputs.emission_factor != 0.0) {
        cost += inputs.fuel_price / inputs.efficiency;
        cost += inputs.carbon_price * inputs.emission_factor / inputs.efficiency;
    }
    return cost;
}

double plant_srmc(const PlantSpec& spec, double variable_om, const DispatchPrices& prices) {
    SrmcInputs inputs;
    inputs.variable_om = variable_om;
    inputs.carbon_price = prices.carbon_price;
    const auto it = prices.by_type.find(spec.plant_type);
    if (it != prices.by_type.end()) {
        if (spec.efficiency <= 0.0) {
            throw SimError(ErrorCode::InvalidValue,
                           std::string(plant_type_name(spec.plant_type)) +
                               ": fuel-burning plant with zero efficiency");
        }
        inputs.fuel_price = it->second.fuel_price;
        inputs.emission_factor = it->second.emission_factor;
        inputs.efficiency = spec.efficiency;
    }
    return srmc(inputs);
}

std::vector<Bid> make_bids(const GenCo& genco, const LoadDurationCurve& ldc, int year,
                           const DispatchPrices& prices) {
    std::vector<Bid> bids;
    for (const auto& plant : genco.plants) {
        if (plant_timeline(plant, year) != PlantStatus::Operating) {
            continue;
        }
        const double price = plant_srmc(plant.spec, plant.sampled_variable_om, prices);
        for (std::size_t k = 0; k < ldc.segments.size(); ++k) {
            const double fraction =
                k < plant.capacity_fraction_per_segment.size()
                    ? plant.capacity_fraction_per_segment[k]
                    : 1.0;
            Bid bid;
            bid.plant_id = plant.id;
            bid.owner_id = plant.owner_id;
            bid.plant_type = plant.spec.plant_type;
            bid.segment_index = static_cast<int>(k);
            bid.offered_mw = plant.spec.capacity_mw * fraction * plant.availability;
            bid.price = price;
            bids.push_back(bid);
        }
    }
    return bids;
}

SegmentClearing clear_segment(std::vector<Bid> bids, double demand_mw, double lost_load_price) {
    SegmentClearing result;
    result.demand_mw = demand_mw;

    if (demand_mw <= 0.0) {
        result.smp = 0.0;
        result.unmet_mw = 0.0;
        return result;
    }

    std::stable_sort(bids.begin(), bids.end(), [](const Bid& a, const Bid& b) {
        if (a.price != b.price) {
            return a.price < b.price;
        }
        if (a.offered_mw != b.offered_mw) {
            return a.offered_mw > b.offered_mw;
        }
        return a.plant_id < b.plant_id;
    });

    double remaining = demand_mw;
    double total_offered = 0.0;
    for (const Bid& bid : bids) {
        total_offered += bid.offered_mw;
        if (bid.offered_mw <= 0.0 || remaining <= 0.0) {
            continue;
        }
        const double take = std::min(bid.offered_mw, remaining);
        remaining -= take;
        result.accepted.push_back({bid, take});
        if (remaining <= 0.0) {
            result.smp = bid.price; // marginal bid sets the price
        }
    }

    if (remaining > 0.0) {
        result.smp = lost_load_price;
        result.unmet_mw = demand_mw - total_offered;
    }
    return result;
}

ClearingResult clear_year(const std::vector<Bid>& all_bids, const LoadDurationCurve& ldc,
                          double lost_load_price) {
    ClearingResult result;
    result.segments.resize(ldc.segments.size());
    for (std::size_t k = 0; k < ldc.segments.size(); ++k) {
        std::vector<Bid> segment_bids;
        for (const Bid& bid : all_bids) {
            if (bid.segment_index == static_cast<int>(k)) {
                segment_bids.push_back(bid);
            }
        }
        result.segments[k] =
            clear_segment(std::move(segment_bids), ldc.segments[k].demand_mw, lost_load_price);
        result.segments[k].duration_hours = ldc.segments[k].duration_hours;
    }
    return result;
}

std::map<std::int64_t, double> per_plant_revenue(const ClearingResult& clearing) {
    std::map<std::int64_t, double> revenue;
    for (const auto& segment : clearing.segments) {
        for (const auto& dispatch : segment.accepted) {
            revenue[dispatch.bid.plant_id] +=
                dispatch.dispatched_mw * segment.duration_hours * segment.smp;
        }
    }
    return revenue;
}

std::map<std::int64_t, double> per_plant_energy(const ClearingResult& clearing) {
    std::map<std::int64_t, double> energy;
    for (const auto& segment : clearing.segments) {
        for (const auto& dispatch : segment.accepted) {
            energy[dispatch.bid.plant_id] += dispatch.dispatched_mw * segment.duration_hours;
        }
    }
    return energy;
}

} // namespace meritsim
