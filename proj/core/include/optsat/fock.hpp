#ifndef OPTSAT_FOCK_HPP
#define OPTSAT_FOCK_HPP

// Truncated four-mode Fock space used by the channel model.
//
// Modes 0,1 are the two rails of the qubit sent to the first station,
// modes 2,3 the rails of the qubit sent to the second station. Occupancy
// is truncated at 2 photons per mode, which is exact for a source state
// with at most 2 photon pairs followed by pure loss.

#include <array>
#include <cstdint>
#include <vector>

namespace optsat {

inline constexpr int kNumModes = 4;
inline constexpr int kMaxOccupancy = 2;
inline constexpr int kFockDim = 81;  // (kMaxOccupancy + 1)^kNumModes

using Occupancy = std::array<int, kNumModes>;

constexpr int fock_index(const Occupancy& n) {
    return ((n[0] * 3 + n[1]) * 3 + n[2]) * 3 + n[3];
}

constexpr Occupancy fock_occupancy(int index) {
    return {index / 27, (index / 9) % 3, (index / 3) % 3, index % 3};
}

// Real density operator on the truncated space. The source state and the
// loss channel have real matrix elements, so a real representation is exact.
class DensityMatrix {
  public:
    DensityMatrix() : data_(kFockDim * kFockDim, 0.0) {}

    double& at(int row, int col) { return data_[row * kFockDim + col]; }
    double at(int row, int col) const { return data_[row * kFockDim + col]; }

    double trace() const;

    static DensityMatrix from_pure(const std::array<double, kFockDim>& amplitudes);

  private:
    std::vector<double> data_;
};

// Beam-splitter loss with transmissivity eta on a single mode: the standard
// binomial Kraus transform on Fock states, applied in place.
void apply_mode_loss(DensityMatrix& rho, int mode, double eta);

}  // namespace optsat

#endif  // OPTSAT_FOCK_HPP
