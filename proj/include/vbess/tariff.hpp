#pragma once

#include <array>
#include <string>
#include <vector>

#include "vbess/timegrid.hpp"

namespace vbess {

// Time-of-use price schedule on a half-hour lattice. Shipped schedules are
// illustrative shapes of the PG&E EV2-A / EV-B / TOU-D plans, not published
// prices.
struct TariffSchedule {
    std::string name;
    std::array<double, 48> weekday_prices{};
    std::array<double, 48> weekend_prices{};

    void validate() const;
};

// One price per grid step, drawn from the weekday/weekend table selected by
// the calendar day of grid.start plus the step offset. Exact on grids whose
// step either nests inside a half-hour slot or spans whole slots.
std::vector<double> expand_tariff(const TariffSchedule& t, const TimeGrid& grid);

// JSON file {name, weekday_prices:[48], weekend_prices:[48]}
TariffSchedule load_tariff(const std::string& path);
void save_tariff(const TariffSchedule& t, const std::string& path);

// Built-in illustrative schedules.
TariffSchedule tariff_ev2a();
TariffSchedule tariff_evb();
TariffSchedule tariff_toud();
TariffSchedule builtin_tariff(const std::string& name);  // by one of the names above

}  // namespace vbess
