#ifndef OPTSAT_CHANNEL_HPP
#define OPTSAT_CHANNEL_HPP

// Optical channel transmissivities, SPDC source statistics, and the
// per-link entanglement rate / fidelity model.
//
// The source emits the dual-rail polarization-entangled state truncated at
// two photon pairs; each qubit traverses a bosonic pure-loss channel; the
// receivers use threshold detectors (dark-click probability applied once per
// detector per slot gate). A slot succeeds when exactly one rail clicks on
// each side, and the fidelity is the overlap of the post-selected state with
// the ideal Bell pair.

#include <array>

#include "optsat/fock.hpp"
#include "optsat/orbital.hpp"

namespace optsat {

struct OpticalConfig {
    double transmitter_diameter_m = 0.2;
    double receiver_diameter_m = 2.0;
    double wavelength_m = 737e-9;
    double extinction_per_m = 0.028125e-3;

    void validate() const;
};

struct SourceConfig {
    double mean_photon_number = 0.0078;  // N_s
    double repetition_rate_hz = 1e10;
    double dark_click_probability = 0.0;
    // Sign of the one- and two-pair superposition terms; +1 or -1.
    int bell_sign = +1;

    // Pair-count truncation of the source state; the emission support of the
    // model, fixed.
    static constexpr int kTruncationPairs = 2;

    void validate() const;
};

// Source state truncated to the 0/1/2-pair sectors, renormalized over the
// truncated support.
struct TruncatedSourceState {
    std::array<double, kFockDim> amplitudes{};
    double normalization = 1.0;  // N_0
    int bell_sign = +1;

    double norm_squared() const;
};

struct Transmissivity {
    double free_space = 1.0;  // eta_f
    double atmospheric = 1.0; // eta_a
    double overall = 1.0;     // eta_f * eta_a
};

// Metrics of a (satellite, station-pair) link. The transmissivity fields are
// the products over the two downlink arms.
struct LinkMetrics {
    double eta_free = 1.0;
    double eta_atm = 1.0;
    double eta = 1.0;
    double rate_hz = 0.0;   // psi
    double fidelity = 0.0;  // chi
};

// Probability of emitting n photon pairs, p(n) = (n+1) N_s^n / (N_s+1)^(n+2).
double emission_probability(double mean_photon_number, int n);

// Far-field free-space transmissivity (clamped at 1), atmospheric extinction
// over the slant shell path, and their product. The geometry must be visible.
Transmissivity transmissivity(const OpticalConfig& optics, const LinkGeometry& geometry);

TruncatedSourceState source_state(const SourceConfig& source);

// Pure loss with transmissivity eta1 on both rails of the first qubit and
// eta2 on both rails of the second.
DensityMatrix apply_pure_loss(const TruncatedSourceState& state, double eta1, double eta2);
void apply_pure_loss(DensityMatrix& rho, double eta1, double eta2);

// Success probability and post-selected Bell fidelity of the dual-rail
// threshold-detection measurement on a post-loss state.
struct DetectionOutcome {
    double success_probability = 0.0;
    double fidelity = 0.0;
};
DetectionOutcome detect(const DensityMatrix& rho, double dark_click_probability, int bell_sign);

// Full per-link evaluation: transmissivities for both arms, loss propagation
// of the source state, threshold detection. Both geometries must be visible.
LinkMetrics link_metrics(const SourceConfig& source, const OpticalConfig& optics,
                         const LinkGeometry& arm1, const LinkGeometry& arm2);

// Closed-form evaluation of the same model. Success probability and the
// unnormalized fidelity numerator are exact bivariate quadratics in the two
// arm transmissivities; the coefficients are extracted once from the density
// route, making per-link evaluation cheap inside the slot loop.
class LinkMetricsEvaluator {
  public:
    explicit LinkMetricsEvaluator(const SourceConfig& source);

    DetectionOutcome eval(double eta1, double eta2) const;
    LinkMetrics link(const OpticalConfig& optics, const LinkGeometry& arm1,
                     const LinkGeometry& arm2) const;

  private:
    std::array<double, 9> success_coeff_{};
    std::array<double, 9> fidelity_num_coeff_{};
    double repetition_rate_hz_ = 0.0;
};

}  // namespace optsat

#endif  // OPTSAT_CHANNEL_HPP
