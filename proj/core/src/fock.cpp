#include "optsat/fock.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace optsat {

namespace {

constexpr int kStride[kNumModes] = {27, 9, 3, 1};

double binomial(int n, int k) {
    static const double table[3][3] = {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}};
    return table[n][k];
}

// Amplitude factor of the loss Kraus operator that removes k photons from a
// mode holding n photons: sqrt(C(n,k) eta^(n-k) (1-eta)^k).
double loss_factor(int n, int k, double eta) {
    return std::sqrt(binomial(n, k) * std::pow(eta, n - k) * std::pow(1.0 - eta, k));
}

}  // namespace

double DensityMatrix::trace() const {
    double t = 0.0;
    for (int i = 0; i < kFockDim; ++i) t += at(i, i);
    return t;
}

DensityMatrix DensityMatrix::from_pure(const std::array<double, kFockDim>& amplitudes) {
    DensityMatrix rho;
    for (int i = 0; i < kFockDim; ++i) {
        if (amplitudes[i] == 0.0) continue;
        for (int j = 0; j < kFockDim; ++j) {
            if (amplitudes[j] == 0.0) continue;
            rho.at(i, j) = amplitudes[i] * amplitudes[j];
        }
    }
    return rho;
}

void apply_mode_loss(DensityMatrix& rho, int mode, double eta) {
    if (mode < 0 || mode >= kNumModes) throw std::domain_error("apply_mode_loss: bad mode");
    if (!(eta >= 0.0 && eta <= 1.0))
        throw std::domain_error("apply_mode_loss: eta outside [0, 1]");

    const int stride = kStride[mode];
    DensityMatrix out;
    for (int row = 0; row < kFockDim; ++row) {
        const int row_n = fock_occupancy(row)[mode];
        for (int col = 0; col < kFockDim; ++col) {
            const int col_n = fock_occupancy(col)[mode];
            double sum = 0.0;
            const int max_k = kMaxOccupancy - std::max(row_n, col_n);
            for (int k = 0; k <= max_k; ++k) {
                const double v = rho.at(row + k * stride, col + k * stride);
                if (v == 0.0) continue;
                sum += loss_factor(row_n + k, k, eta) * loss_factor(col_n + k, k, eta) * v;
            }
            out.at(row, col) = sum;
        }
    }
    rho = out;
}

}  // namespace optsat
