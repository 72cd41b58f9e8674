#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vbess/tariff.hpp"
#include "vbess/timegrid.hpp"

namespace vbess {

// Per-home demand/generation series, all length T and in kW.
struct HomeProfile {
    std::string home_id;
    std::vector<double> load_kw;   // non-EV household demand
    std::vector<double> solar_kw;  // >= 0
    std::vector<double> ev_kw;     // >= 0

    // load + ev - solar at step t
    double net_kw(int t) const { return load_kw[t] + ev_kw[t] - solar_kw[t]; }
};

struct BatterySpec {
    double e_max = 13.5;        // kWh
    double p_chg_max = 5.0;     // kW
    double p_dischg_max = 5.0;  // kW
    double eta = 0.9487;        // one-way efficiency
    double e_init = 6.75;       // kWh

    void validate() const;
};

enum class TauUnit { hours, seconds };

struct TransformerSpec {
    double k_rated = 25.0;         // kW nameplate (25 kVA at unity power factor)
    double dtheta_to_rated = 65.0; // °C rated top-oil rise
    double tau_to_rated = 8.738;   // oil time constant, unit per tau_unit
    TauUnit tau_unit = TauUnit::hours;
    double loss_ratio = 3.625;     // rated load loss / no-load loss
    double dtheta_h_rated = 15.0;  // °C rated hottest-spot rise
    double exp_n = 0.8;            // empirical exponent (ONAN)
    double exp_m = 0.8;            // empirical exponent (ONAN)
    double ambient_c = 25.0;       // °C
    double lifetime_h = 180000.0;  // rated insulation lifetime

    double tau_to_rated_hours() const {
        return tau_unit == TauUnit::hours ? tau_to_rated : tau_to_rated / 3600.0;
    }
    void validate() const;
};

// Everything one trial needs: homes behind one transformer, their tariffs,
// and the (homogeneous) battery spec.
struct NeighborhoodData {
    TimeGrid grid;
    std::vector<HomeProfile> homes;
    std::map<std::string, TariffSchedule> tariff_of_home;
    TariffSchedule shared_tariff;
    TransformerSpec transformer;
    BatterySpec battery;

    void validate() const;
    const TariffSchedule& tariff_for(const std::string& home_id) const;
};

// CSV with header step,home_id,load_kw,solar_kw,ev_kw; steps 0..T-1 dense per home.
std::vector<HomeProfile> load_profiles(const std::string& path, const TimeGrid& grid);
void save_profiles(const std::vector<HomeProfile>& homes, const std::string& path);

struct SynthesisConfig {
    double base_load_kw = 0.45;
    double morning_peak_kw = 1.1;
    double evening_peak_kw = 2.4;
    double load_noise_kw = 0.15;
    double solar_peak_kw = 4.0;
    double seasonal_solar = 1.0;  // 1.0 ~ July, ~0.35 ~ January
    double ev_power_kw = 7.2;     // Level 2 charger
    double ev_penetration = 1.0;  // fraction of homes with an EV
    double ev_session_min_h = 1.5;
    double ev_session_max_h = 4.0;
};

// Deterministic in (seed, n_homes, grid, cfg). Load has morning/evening
// peaks, solar is a midday bump scaled by seasonal_solar, EV demand is one
// contiguous block per day at ev_power_kw with a random evening start.
std::vector<HomeProfile> synthesize_neighborhood(std::uint64_t seed, int n_homes,
                                                 const TimeGrid& grid,
                                                 const SynthesisConfig& cfg);

}  // namespace vbess
