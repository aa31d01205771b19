#pragma once

#include <string>
#include <vector>

namespace scm {

// Opinion-dynamics parameters.  f(T) = f_max / (1 + exp(-omega (T - T_lim)))
// is the perceived warming cost entering the imitation payoff.
struct SocialParams {
    double kappa = 0.05;  // social learning rate [1/yr]
    double beta = 1.0;    // net cost of mitigation [-]
    double delta = 1.0;   // strength of social norms [-]
    double f_max = 5.0;   // maximum warming cost [-]
    double omega = 3.0;   // warming-cost nonlinearity [1/K]
    double T_lim = 1.5;   // warming-cost midpoint [K anomaly]
    double x0 = 0.05;     // initial mitigator fraction [-]
};

// Runaway-carbon feedback term R(T) = R_max / (1 + exp(-R0 (T - T_c))).
// enabled=false is behaviourally identical to R_max=0.
struct TippingParams {
    bool enabled = true;
    double R_max = 5.0;  // maximum tipping flux [GtC/yr]
    double R0 = 5.0;     // sigmoid steepness [1/K]
    double T_c = 2.0;    // critical temperature [K anomaly]
};

// Carbon-cycle and energy-balance constants.  Carbon reservoirs are GtC,
// rate constants 1/yr, radiation in SI watts.
struct ClimateParams {
    double C_at0 = 596.0;    // pre-industrial atmospheric carbon [GtC]
    double C_oc0 = 1.5e5;    // pre-industrial ocean carbon [GtC]
    double C_veg0 = 550.0;   // pre-industrial vegetation carbon [GtC]
    double C_so0 = 1500.0;   // pre-industrial soil carbon [GtC]
    double k_p = 0.184;      // photosynthesis rate [1/yr]
    double k_r = 0.092;      // plant respiration rate [1/yr]
    double k_sr = 0.034;     // soil respiration rate [1/yr]
    double k_t = 0.092;      // turnover rate [1/yr]
    double k_MM = 1.478;     // photosynthesis normaliser [-]
    double k_c = 29e-6;      // photosynthesis compensation point [-]
    double k_M = 120e-6;     // photosynthesis half-saturation [-]
    double k_A = 8.7039e9;   // plant respiration normaliser [-]
    double k_B = 157.072;    // soil respiration normaliser [-]
    double k_a = 1.773e20;   // moles of molecules in the atmosphere [mol]
    double E_a = 54830.0;    // plant respiration activation energy [J/mol]
    double c_heat = 4.69e23;     // surface heat capacity [J/K]
    double a_E = 5.101e14;       // Earth surface area [m^2]
    double L_latent = 43655.0;   // latent heat per mole of water [J/mol]
    double R_gas = 8.314;        // molar gas constant [J/mol/K]
    double H = 0.5915;           // relative humidity [-]
    double A_albedo = 0.225;     // surface albedo [-]
    double chi = 0.3;            // CO2 solubility [-]
    double zeta = 50.0;          // ocean evasion factor [-]
    double S_flux = 1368.0;      // solar flux [W/m^2]
    double tau_CH4 = 0.0231;     // methane opacity [-]
    double P0 = 1.4e11;          // water vapour saturation constant [Pa]
    double F0 = 2.5e-2;          // ocean flux rate constant [1/yr]
    double sigma_SB = 5.67e-8;   // Stefan-Boltzmann constant [W/m^2/K^4]
    double T_R = 273.15;         // freezing point of water [K]
    double T0_abs = 288.15;      // pre-industrial absolute surface temperature [K]
    double f_gtm = 8.3259e13;    // GtC -> moles of carbon conversion
    double seconds_per_year = 3.1536e7;
};

// Post-2017 emission projection:
// eps(t) = eps(t_pivot) + (t - t_pivot) eps_max / ((t - t_pivot) + s_half)
struct EmissionProjectionParams {
    double eps_max = 7.0;    // saturation increment [GtC/yr]
    double s_half = 50.0;    // half-saturation time [yr]
    double t_pivot = 2017.0; // projection start [yr]
};

struct RunSchedule {
    double t_start = 1800.0;     // integration start [yr]
    double t_social_on = 2017.0; // opinion dynamics switch-on [yr]
    double t_end = 2200.0;       // integration end [yr]
    double dt = 0.05;            // integrator step [yr]
    double output_stride = 1.0;  // sample interval [yr]
};

struct ModelParams {
    SocialParams social;
    TippingParams tipping;
    ClimateParams climate;
    EmissionProjectionParams emission;
    RunSchedule schedule;
};

// Baseline parameter set.  Immutable by convention: treat a ModelParams as
// frozen once handed to a simulation.
ModelParams default_params();

struct Violation {
    std::string path;    // dotted field name, e.g. "social.x0"
    std::string message;
};

// Empty result iff every field invariant holds.
std::vector<Violation> validate(const ModelParams& params);

// --- dotted-path parameter registry -------------------------------------
//
// One table drives the config grammar, sweep axes and the sensitivity
// whitelist.  Paths look like "social.kappa" or "tipping.enabled".

enum class ParamKind { Number, Boolean };

struct ParamInfo {
    const char* path;
    ParamKind kind;
};

// All registered paths, in stable serialization order.
const std::vector<ParamInfo>& param_registry();

bool is_known_param(const std::string& path);

// Throws std::invalid_argument for unknown paths or kind mismatch.
double get_numeric_param(const ModelParams& params, const std::string& path);
void set_numeric_param(ModelParams& params, const std::string& path, double value);
bool get_bool_param(const ModelParams& params, const std::string& path);
void set_bool_param(ModelParams& params, const std::string& path, bool value);

}  // namespace scm
