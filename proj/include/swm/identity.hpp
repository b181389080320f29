#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "swm/qseries.hpp"
#include "swm/report.hpp"

namespace swm {

/// A named equality between two q-series. `sides(order)` must return both
/// sides certified at least up to `order`.
struct SeriesIdentity {
    std::string id;
    std::map<std::string, std::string> params;
    std::function<std::pair<QSeries, QSeries>(const Rational& order)> sides;
};

using IdentityList = std::vector<SeriesIdentity>;

/// Checks every identity at `order`, one report each, in list order.
ReportList verify_identities(const IdentityList& identities, const Rational& order);

} // namespace swm
