#ifndef OPTSAT_ORBITAL_HPP
#define OPTSAT_ORBITAL_HPP

// Polar constellation propagation and satellite/ground-station link geometry.
//
// Model assumptions:
// - spherical Earth, circular polar orbits (inclination exactly 90 degrees),
//   positions evaluated in closed form per time slot (no integrator)
// - ring ascending nodes equally spaced over a configurable longitude span
//   (default 180 degrees, so ascending and descending half-orbits interleave)
// - atmosphere is a uniform spherical shell of configurable thickness
//
// All operations are pure functions of their inputs; safe to evaluate for
// different slots in parallel.

#include <string>
#include <vector>

#include "optsat/geometry.hpp"

namespace optsat {

inline constexpr double kEarthRadiusM = 6'371'000.0;
inline constexpr double kEarthMuM3S2 = 3.986004418e14;
inline constexpr double kEarthRotationPeriodS = 86'400.0;
inline constexpr double kDefaultAtmosphereThicknessM = 10'000.0;

struct Constellation {
    int num_rings = 1;
    int sats_per_ring = 1;
    double altitude_m = 500e3;
    double earth_radius_m = kEarthRadiusM;
    double mu_m3s2 = kEarthMuM3S2;
    // Anomaly offset applied per ring index; unspecified in the reference
    // constellation, defaults to no offset.
    double ring_phase_offset_rad = 0.0;
    // Longitude span covered by the ring ascending nodes.
    double node_span_rad = kPi;

    int size() const { return num_rings * sats_per_ring; }
    double orbit_radius_m() const { return earth_radius_m + altitude_m; }
    // Circular-orbit angular rate, omega = sqrt(mu / r^3).
    double angular_rate_rad_s() const;
    double period_s() const;

    // Throws std::invalid_argument on violated invariants.
    void validate() const;
};

struct GroundStation {
    std::string id;
    double latitude_deg = 0.0;   // [-90, 90]
    double longitude_deg = 0.0;  // [-180, 180]

    void validate() const;
};

struct StationPair {
    int id = 0;
    int first = 0;   // station index
    int second = 0;  // station index
};

struct TimeGrid {
    double slot_s = 1.0;
    int num_slots = 1;
    // Offset in slots; slot t in {1..num_slots} maps to physical time
    // (t - 1 + epoch_offset) * slot_s.
    double epoch_offset = 0.0;

    double physical_time_s(int slot) const { return (slot - 1 + epoch_offset) * slot_s; }

    void validate() const;
};

struct LinkGeometry {
    double slant_distance_m = 0.0;
    double elevation_rad = 0.0;
    // Slant path through the atmospheric shell; NaN when not visible.
    double atmospheric_path_m = 0.0;
    bool visible = false;
};

// Position of satellite (ring_index, phase_index) at slot t.
// Rings are spaced by node_span/num_rings in ascending-node longitude;
// satellites within a ring are equally spaced in anomaly.
Vec3 satellite_position(const Constellation& c, int ring_index, int phase_index, int slot,
                        const TimeGrid& grid);

// Earth-fixed station rotated about the polar axis with a 24 h period.
Vec3 ground_station_position(const GroundStation& g, int slot, const TimeGrid& grid);

// Slant distance, elevation above the local horizon, and atmospheric slant
// path for a satellite/station position pair.
LinkGeometry link_geometry(const Vec3& sat_position, const Vec3& station_position,
                           const Constellation& c,
                           double atmosphere_thickness_m = kDefaultAtmosphereThicknessM);

}  // namespace optsat

#endif  // OPTSAT_ORBITAL_HPP
