#include "amiwav/load_profile.hpp"

#include "amiwav/errors.hpp"

#include <cmath>
#include <numeric>

namespace amiwav {

void validate_profile(const LoadProfile& profile) {
    if (profile.values.empty()) {
        throw InvalidArgument("profile '" + profile.customer_id + "' is empty");
    }
    if (profile.interval_hours <= 0) {
        throw InvalidArgument("profile '" + profile.customer_id +
                              "' has non-positive interval");
    }
    for (std::size_t i = 0; i < profile.values.size(); ++i) {
        const double v = profile.values[i];
        if (!std::isfinite(v)) {
            throw DataError("profile '" + profile.customer_id +
                            "' has non-finite value at index " + std::to_string(i));
        }
        if (v < 0.0 && !profile.allow_negative) {
            throw DataError("profile '" + profile.customer_id +
                            "' has negative value at index " + std::to_string(i));
        }
    }
}

double total_energy(const LoadProfile& profile) {
    return std::accumulate(profile.values.begin(), profile.values.end(), 0.0);
}

} // namespace amiwav
