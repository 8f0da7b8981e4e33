#include "meritsim/errors.hpp"

namespace meritsim {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::NonMonotoneDemand: return "NonMonotoneDemand";
        case ErrorCode::DurationSumMismatch: return "DurationSumMismatch";
        case ErrorCode::UnknownPlantType: return "UnknownPlantType";
        case ErrorCode::Infeasible: return "Infeasible";
        case ErrorCode::InsufficientData: return "InsufficientData";
        case ErrorCode::MissingAvailabilityData: return "MissingAvailabilityData";
        case ErrorCode::RegistryParseError: return "RegistryParseError";
        case ErrorCode::ForecastUnavailable: return "ForecastUnavailable";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::MissingKey: return "MissingKey";
        case ErrorCode::UnknownKey: return "UnknownKey";
        case ErrorCode::GridMismatch: return "GridMismatch";
        case ErrorCode::InvalidValue: return "InvalidValue";
    }
    return "Unknown";
}

} // namespace meritsim
