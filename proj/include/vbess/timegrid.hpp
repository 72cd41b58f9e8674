#pragma once

#include <string>

namespace vbess {

// Wall-clock anchor for a simulation grid. No timezone; minutes resolution.
struct CivilTime {
    int year = 2018;
    int month = 7;
    int day = 2;
    int hour = 0;
    int minute = 0;
};

CivilTime parse_civil(const std::string& iso);  // "YYYY-MM-DD" or "YYYY-MM-DDTHH:MM"
std::string format_civil(const CivilTime& c);

// 0 = Monday .. 6 = Sunday
int weekday_of(const CivilTime& c);

// Uniform step grid. delta_t is hours per step; start anchors tariff
// day/hour mapping.
struct TimeGrid {
    double delta_t = 0.5;
    int num_steps = 0;
    CivilTime start;

    TimeGrid() = default;
    TimeGrid(double delta_t_hours, int steps, CivilTime anchor);

    double horizon_hours() const { return delta_t * num_steps; }

    // Steps in a 24 h day; throws if delta_t does not divide a day.
    int steps_per_day() const;
};

}  // namespace vbess
