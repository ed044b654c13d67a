#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace amiwav {

// One customer's ordered interval energy series. start_hour is a
// local-naive hour index (hours since 1970-01-01T00:00); interval_hours
// is 1 for hourly AMI data.
struct LoadProfile {
    std::string customer_id;
    std::int64_t start_hour = 0;
    int interval_hours = 1;
    bool allow_negative = false;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }

    bool operator==(const LoadProfile& other) const = default;
};

// Throws DataError on non-finite values, or negative values when the
// profile does not allow them; InvalidArgument on empty series or
// non-positive interval.
void validate_profile(const LoadProfile& profile);

// Sum of all samples (total kWh for hourly data).
double total_energy(const LoadProfile& profile);

} // namespace amiwav
