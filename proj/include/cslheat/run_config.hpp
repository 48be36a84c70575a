#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cslheat/species.hpp"

namespace cslheat {

struct trap_config {
    std::string name;
    double f1_hz = 0, f2_hz = 0, f3_hz = 0;
    double depth_nk = 0;
    double a_s_a0 = 0;                 // per-trap scattering length, Bohr radii
    std::string number_data;           // CSV path, optional
    std::string fraction_data;         // CSV path, optional
};

struct simulate_config {
    std::string kind;                  // "cloud" or "bec-decay"
    double n0 = 5000;
    double temp_nk = 85;               // cloud only
    double hbar_omega_nk = 5;          // cloud only
    double t_csl_nk = 0;               // 0 = derive from species + a_csl
    double lambda_per_s = 0;
    double t_max_s = 100;
    int slices = 4;                    // cloud: spectra per run
    int steps = 100;                   // bec-decay: CSV rows
};

/// Flat key = value configuration with [sections]; schema-validated,
/// unknown keys rejected.
struct run_config {
    std::uint64_t seed = 0;
    double tol = 1e-10;
    std::string out_dir = "out";
    double a_csl_m = 1e-7;
    double lambda_per_s = 0;           // optional, simulations only
    int mc_samples = 400;

    species sp;                        // default scattering length; per-trap a_s overrides
    double tau1_s = 320;
    double jitter_psd_m2_hz = 0;
    std::string pressure_note;

    std::vector<trap_config> traps;
    std::optional<simulate_config> simulate;

    std::string raw_text;              // verbatim config, for hashing
};

/// Parse + validate. Throws std::runtime_error with the offending line or
/// key on any schema violation.
run_config load_config(const std::string& path);
run_config parse_config_text(const std::string& text);

/// FNV-1a hash of the config text, hex-encoded (provenance field).
std::string config_hash(const std::string& text);

} // namespace cslheat
