#ifndef MERITSIM_ERRORS_HPP
#define MERITSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace meritsim {

enum class ErrorCode {
    NonMonotoneDemand,
    DurationSumMismatch,
    UnknownPlantType,
    Infeasible,
    InsufficientData,
    MissingAvailabilityData,
    RegistryParseError,
    ForecastUnavailable,
    ParseError,
    MissingKey,
    UnknownKey,
    GridMismatch,
    InvalidValue,
};

const char* error_code_name(ErrorCode code);

/// Single exception type for all domain errors; the code is what tests match on.
class SimError : public std::runtime_error {
public:
    SimError(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace meritsim

#endif // MERITSIM_ERRORS_HPP
