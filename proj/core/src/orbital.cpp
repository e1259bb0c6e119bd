#include "optsat/orbital.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace optsat {

double Constellation::angular_rate_rad_s() const {
    const double r = orbit_radius_m();
    return std::sqrt(mu_m3s2 / (r * r * r));
}

double Constellation::period_s() const { return 2.0 * kPi / angular_rate_rad_s(); }

void Constellation::validate() const {
    if (num_rings < 1) throw std::invalid_argument("constellation: num_rings must be >= 1");
    if (sats_per_ring < 1) throw std::invalid_argument("constellation: sats_per_ring must be >= 1");
    if (!(altitude_m > 0.0)) throw std::invalid_argument("constellation: altitude must be > 0");
    if (!(earth_radius_m > 0.0)) throw std::invalid_argument("constellation: earth radius must be > 0");
    if (!(mu_m3s2 > 0.0)) throw std::invalid_argument("constellation: mu must be > 0");
}

void GroundStation::validate() const {
    if (id.empty()) throw std::invalid_argument("station: id must be non-empty");
    if (!(latitude_deg >= -90.0 && latitude_deg <= 90.0))
        throw std::invalid_argument("station '" + id + "': latitude out of [-90, 90]");
    if (!(longitude_deg >= -180.0 && longitude_deg <= 180.0))
        throw std::invalid_argument("station '" + id + "': longitude out of [-180, 180]");
}

void TimeGrid::validate() const {
    if (!(slot_s > 0.0)) throw std::invalid_argument("time: slot duration must be > 0");
    if (num_slots < 1) throw std::invalid_argument("time: num_slots must be >= 1");
}

Vec3 satellite_position(const Constellation& c, int ring_index, int phase_index, int slot,
                        const TimeGrid& grid) {
    if (ring_index < 0 || ring_index >= c.num_rings)
        throw std::domain_error("satellite_position: ring_index out of range");
    if (phase_index < 0 || phase_index >= c.sats_per_ring)
        throw std::domain_error("satellite_position: phase_index out of range");

    const double tau = grid.physical_time_s(slot);
    const double node = c.node_span_rad * static_cast<double>(ring_index) / c.num_rings;
    const double anomaly = 2.0 * kPi * static_cast<double>(phase_index) / c.sats_per_ring +
                           c.ring_phase_offset_rad * ring_index + c.angular_rate_rad_s() * tau;

    // Polar orbit plane through the ascending node `node`: the satellite moves
    // from the node (on the equator) towards the north pole at anomaly pi/2.
    const double r = c.orbit_radius_m();
    const double cu = std::cos(anomaly);
    const double su = std::sin(anomaly);
    return {r * cu * std::cos(node), r * cu * std::sin(node), r * su};
}

Vec3 ground_station_position(const GroundStation& g, int slot, const TimeGrid& grid) {
    g.validate();
    const double tau = grid.physical_time_s(slot);
    const double lat = deg_to_rad(g.latitude_deg);
    const double lon = deg_to_rad(g.longitude_deg) + 2.0 * kPi * tau / kEarthRotationPeriodS;
    const double r = kEarthRadiusM;
    return {r * std::cos(lat) * std::cos(lon), r * std::cos(lat) * std::sin(lon),
            r * std::sin(lat)};
}

LinkGeometry link_geometry(const Vec3& sat_position, const Vec3& station_position,
                           const Constellation& c, double atmosphere_thickness_m) {
    const double sat_norm = norm(sat_position);
    const double gs_norm = norm(station_position);
    if (sat_norm <= 0.0 || gs_norm <= 0.0)
        throw std::domain_error("link_geometry: degenerate zero-length position vector");

    const double re = c.earth_radius_m;
    const double r = c.orbit_radius_m();

    double cos_gamma = dot(sat_position, station_position) / (sat_norm * gs_norm);
    cos_gamma = std::clamp(cos_gamma, -1.0, 1.0);

    LinkGeometry out;
    out.slant_distance_m = norm(sat_position - station_position);
    const double sin_e = std::clamp((r * cos_gamma - re) / out.slant_distance_m, -1.0, 1.0);
    out.elevation_rad = std::asin(sin_e);
    out.visible = out.elevation_rad >= 0.0;
    if (out.visible) {
        const double shell = re + atmosphere_thickness_m;
        const double cos_e = std::cos(out.elevation_rad);
        out.atmospheric_path_m = std::sqrt(shell * shell - re * re * cos_e * cos_e) - re * sin_e;
    } else {
        out.atmospheric_path_m = std::numeric_limits<double>::quiet_NaN();
    }
    return out;
}

}  // namespace optsat
