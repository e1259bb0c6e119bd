#include "optsat/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace optsat {

namespace {

// Bell-pair support kets |1,0;0,1> and |0,1;1,0>.
constexpr int kBellKetA = fock_index({1, 0, 0, 1});
constexpr int kBellKetB = fock_index({0, 1, 1, 0});

double click_weight(int photons, double dark) { return photons >= 1 ? 1.0 : dark; }
double silent_weight(int photons, double dark) { return photons >= 1 ? 0.0 : 1.0 - dark; }

// Diagonal POVM weight of "exactly one click on each side" for a Fock ket.
double success_weight(int ket, double dark) {
    const Occupancy n = fock_occupancy(ket);
    const double side1 = click_weight(n[0], dark) * silent_weight(n[1], dark) +
                         silent_weight(n[0], dark) * click_weight(n[1], dark);
    const double side2 = click_weight(n[2], dark) * silent_weight(n[3], dark) +
                         silent_weight(n[2], dark) * click_weight(n[3], dark);
    return side1 * side2;
}

}  // namespace

void OpticalConfig::validate() const {
    if (!(transmitter_diameter_m > 0.0 && receiver_diameter_m > 0.0 && wavelength_m > 0.0 &&
          extinction_per_m > 0.0))
        throw std::invalid_argument("optics: all parameters must be strictly positive");
}

void SourceConfig::validate() const {
    if (!(mean_photon_number >= 0.0)) throw std::invalid_argument("source: N_s must be >= 0");
    if (!(repetition_rate_hz > 0.0))
        throw std::invalid_argument("source: repetition rate must be > 0");
    if (!(dark_click_probability >= 0.0 && dark_click_probability < 1.0))
        throw std::invalid_argument("source: dark click probability must be in [0, 1)");
    if (bell_sign != 1 && bell_sign != -1)
        throw std::invalid_argument("source: bell_sign must be +1 or -1");
}

double TruncatedSourceState::norm_squared() const {
    double s = 0.0;
    for (double a : amplitudes) s += a * a;
    return s;
}

double emission_probability(double mean_photon_number, int n) {
    if (mean_photon_number < 0.0 || n < 0)
        throw std::domain_error("emission_probability: negative input");
    const double ns = mean_photon_number;
    return (n + 1) * std::pow(ns, n) / std::pow(ns + 1.0, n + 2);
}

Transmissivity transmissivity(const OpticalConfig& optics, const LinkGeometry& geometry) {
    if (!geometry.visible)
        throw std::domain_error("transmissivity: link not visible; gate on visibility first");
    if (!(geometry.slant_distance_m > 0.0))
        throw std::domain_error("transmissivity: slant distance must be > 0");

    const double tx_area = kPi * optics.transmitter_diameter_m * optics.transmitter_diameter_m / 4.0;
    const double rx_area = kPi * optics.receiver_diameter_m * optics.receiver_diameter_m / 4.0;
    const double denom = optics.wavelength_m * geometry.slant_distance_m;

    Transmissivity out;
    // Far-field approximation exceeds 1 at short range; clamp to stay physical.
    out.free_space = std::min(1.0, tx_area * rx_area / (denom * denom));
    out.atmospheric = std::exp(-optics.extinction_per_m * geometry.atmospheric_path_m);
    out.overall = out.free_space * out.atmospheric;
    return out;
}

TruncatedSourceState source_state(const SourceConfig& source) {
    source.validate();
    const double p0 = emission_probability(source.mean_photon_number, 0);
    const double p1 = emission_probability(source.mean_photon_number, 1);
    const double p2 = emission_probability(source.mean_photon_number, 2);

    TruncatedSourceState state;
    state.bell_sign = source.bell_sign;
    state.normalization = 1.0 / std::sqrt(p0 + p1 + p2);
    const double sign = static_cast<double>(source.bell_sign);

    const double n0 = state.normalization;
    state.amplitudes[fock_index({0, 0, 0, 0})] = n0 * std::sqrt(p0);
    state.amplitudes[kBellKetA] = n0 * std::sqrt(p1 / 2.0);
    state.amplitudes[kBellKetB] = sign * n0 * std::sqrt(p1 / 2.0);
    state.amplitudes[fock_index({2, 0, 0, 2})] = n0 * std::sqrt(p2 / 3.0);
    state.amplitudes[fock_index({1, 1, 1, 1})] = sign * n0 * std::sqrt(p2 / 3.0);
    state.amplitudes[fock_index({0, 2, 2, 0})] = n0 * std::sqrt(p2 / 3.0);
    return state;
}

void apply_pure_loss(DensityMatrix& rho, double eta1, double eta2) {
    if (!(eta1 >= 0.0 && eta1 <= 1.0) || !(eta2 >= 0.0 && eta2 <= 1.0))
        throw std::domain_error("apply_pure_loss: transmissivity outside [0, 1]");
    apply_mode_loss(rho, 0, eta1);
    apply_mode_loss(rho, 1, eta1);
    apply_mode_loss(rho, 2, eta2);
    apply_mode_loss(rho, 3, eta2);
}

DensityMatrix apply_pure_loss(const TruncatedSourceState& state, double eta1, double eta2) {
    DensityMatrix rho = DensityMatrix::from_pure(state.amplitudes);
    apply_pure_loss(rho, eta1, eta2);
    return rho;
}

DetectionOutcome detect(const DensityMatrix& rho, double dark_click_probability, int bell_sign) {
    const double dark = dark_click_probability;

    DetectionOutcome out;
    for (int k = 0; k < kFockDim; ++k) {
        const double w = success_weight(k, dark);
        if (w > 0.0) out.success_probability += w * rho.at(k, k);
    }

    const double wa = success_weight(kBellKetA, dark);
    const double wb = success_weight(kBellKetB, dark);
    const double sign = static_cast<double>(bell_sign);
    const double numerator =
        0.5 * (wa * rho.at(kBellKetA, kBellKetA) + wb * rho.at(kBellKetB, kBellKetB) +
               sign * std::sqrt(wa * wb) * (rho.at(kBellKetA, kBellKetB) + rho.at(kBellKetB, kBellKetA)));
    out.fidelity = out.success_probability > 0.0
                       ? std::clamp(numerator / out.success_probability, 0.0, 1.0)
                       : 0.0;
    return out;
}

LinkMetrics link_metrics(const SourceConfig& source, const OpticalConfig& optics,
                         const LinkGeometry& arm1, const LinkGeometry& arm2) {
    const Transmissivity t1 = transmissivity(optics, arm1);
    const Transmissivity t2 = transmissivity(optics, arm2);

    const TruncatedSourceState state = source_state(source);
    const DensityMatrix rho = apply_pure_loss(state, t1.overall, t2.overall);
    const DetectionOutcome outcome = detect(rho, source.dark_click_probability, source.bell_sign);

    LinkMetrics metrics;
    metrics.eta_free = t1.free_space * t2.free_space;
    metrics.eta_atm = t1.atmospheric * t2.atmospheric;
    metrics.eta = t1.overall * t2.overall;
    metrics.rate_hz = source.repetition_rate_hz * outcome.success_probability;
    metrics.fidelity = outcome.fidelity;
    return metrics;
}

namespace {

// Coefficients of a quadratic through f(0), f(1/2), f(1).
std::array<double, 3> quad_through(double f0, double fh, double f1) {
    const double c2 = 2.0 * (f1 + f0 - 2.0 * fh);
    return {f0, f1 - f0 - c2, c2};
}

}  // namespace

LinkMetricsEvaluator::LinkMetricsEvaluator(const SourceConfig& source) {
    source.validate();
    repetition_rate_hz_ = source.repetition_rate_hz;

    const TruncatedSourceState state = source_state(source);
    const double nodes[3] = {0.0, 0.5, 1.0};
    double p_grid[3][3];
    double f_grid[3][3];
    for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
            const DensityMatrix rho = apply_pure_loss(state, nodes[a], nodes[b]);
            const DetectionOutcome o = detect(rho, source.dark_click_probability, source.bell_sign);
            p_grid[a][b] = o.success_probability;
            f_grid[a][b] = o.fidelity * o.success_probability;
        }
    }

    // Interpolate exactly: quadratic per eta1 row, then per eta2 column.
    auto extract = [](const double (&grid)[3][3], std::array<double, 9>& coeff) {
        double rows[3][3];
        for (int b = 0; b < 3; ++b) {
            const auto c = quad_through(grid[0][b], grid[1][b], grid[2][b]);
            for (int a = 0; a < 3; ++a) rows[a][b] = c[a];
        }
        for (int a = 0; a < 3; ++a) {
            const auto c = quad_through(rows[a][0], rows[a][1], rows[a][2]);
            for (int b = 0; b < 3; ++b) coeff[a * 3 + b] = c[b];
        }
    };
    extract(p_grid, success_coeff_);
    extract(f_grid, fidelity_num_coeff_);
}

DetectionOutcome LinkMetricsEvaluator::eval(double eta1, double eta2) const {
    auto horner = [&](const std::array<double, 9>& c) {
        double acc = 0.0;
        for (int a = 2; a >= 0; --a) {
            const double row = c[a * 3 + 0] + eta2 * (c[a * 3 + 1] + eta2 * c[a * 3 + 2]);
            acc = acc * eta1 + row;
        }
        return acc;
    };
    DetectionOutcome out;
    out.success_probability = std::max(0.0, horner(success_coeff_));
    const double num = horner(fidelity_num_coeff_);
    out.fidelity = out.success_probability > 0.0
                       ? std::clamp(num / out.success_probability, 0.0, 1.0)
                       : 0.0;
    return out;
}

LinkMetrics LinkMetricsEvaluator::link(const OpticalConfig& optics, const LinkGeometry& arm1,
                                       const LinkGeometry& arm2) const {
    const Transmissivity t1 = transmissivity(optics, arm1);
    const Transmissivity t2 = transmissivity(optics, arm2);
    const DetectionOutcome outcome = eval(t1.overall, t2.overall);

    LinkMetrics metrics;
    metrics.eta_free = t1.free_space * t2.free_space;
    metrics.eta_atm = t1.atmospheric * t2.atmospheric;
    metrics.eta = t1.overall * t2.overall;
    metrics.rate_hz = repetition_rate_hz_ * outcome.success_probability;
    metrics.fidelity = outcome.fidelity;
    return metrics;
}

}  // namespace optsat
