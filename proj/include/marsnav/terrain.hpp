#pragma once

#include <cstdint>
#include <vector>

#include "marsnav/errors.hpp"
#include "marsnav/geometry.hpp"

namespace marsnav {

/// Hemispherical bump added on top of the base heightfield.
struct RockSpec {
    double x = 0.0;
    double y = 0.0;
    double radius = 0.0;  // m, > 0
    double height = 0.0;  // m, > 0
};

/// Ground slip model of the regolith layer. Slip is a property of the
/// ground at a point, not of the wheel; the resulting ratio is always
/// clamped to [0, 0.95].
struct RegolithSpec {
    double base_slip = 0.1;             // [0, 1)
    double slope_slip_gain = 0.5;       // per radian of local slope
    double slip_noise_sigma = 0.0;      // amplitude of the spatial noise field
    double slip_noise_wavelength = 4.0; // m
};

/// Disk kept free of rocks (landing sites, goals).
struct ClearZone {
    double x = 0.0;
    double y = 0.0;
    double radius = 0.0;
};

struct TerrainParams {
    double extent = 50.0;      // square half-width, m
    double amplitude = 0.5;    // base-octave amplitude, m
    double wavelength = 15.0;  // base-octave wavelength, m
    int octaves = 3;

    double rock_density = 0.0;     // rocks per m^2
    double rock_radius_min = 0.3;  // m
    double rock_radius_max = 0.8;  // m
    double rock_height_min = 0.15; // m
    double rock_height_max = 0.45; // m
    std::vector<ClearZone> clear_zones;

    // Optional analytic base-height terms, both off by default. ramp_slope
    // adds h += ramp_slope * x.  The slope sweep adds a profile whose local
    // slope angle grows linearly from 0 at x=0 to sweep_max_slope at
    // x=sweep_span (then continues linear); used for calibration terrains.
    double ramp_slope = 0.0;
    double sweep_max_slope = 0.0;  // rad
    double sweep_span = 0.0;       // m

    RegolithSpec regolith;
};

struct SurfacePoint {
    double height = 0.0;
    Vec3 normal = Vec3::UnitZ();  // unit length, z > 0
    double slip = 0.0;            // [0, 0.95]
};

/// Procedural Martian ground truth: seeded value-noise heightfield plus
/// hemispherical rock bumps and a regolith slip field. Immutable after
/// construction; concurrent queries are safe.
class TerrainModel {
public:
    TerrainModel(std::uint64_t seed, const TerrainParams& params);

    std::uint64_t seed() const { return seed_; }
    const TerrainParams& params() const { return params_; }
    const std::vector<RockSpec>& rocks() const { return rocks_; }

    bool contains(double x, double y) const {
        return std::abs(x) <= params_.extent && std::abs(y) <= params_.extent;
    }

    /// Height without the bounds check; callers that ray-march off the edge
    /// use contains() first and treat outside as "no ground".
    double height(double x, double y) const;

    /// d(height)/dx, d(height)/dy (analytic except at rock rims, where the
    /// profile derivative is clamped).
    Vec2 height_gradient(double x, double y) const;

    /// Throws OutOfBoundsError outside the extent.
    SurfacePoint query_surface(double x, double y) const;

private:
    double base_height(double x, double y) const;
    void base_gradient(double x, double y, Vec2& g) const;

    std::uint64_t seed_ = 0;
    TerrainParams params_;
    std::vector<RockSpec> rocks_;

    // uniform grid over rock indices so height queries stay O(1)
    double bucket_size_ = 4.0;
    int buckets_per_side_ = 0;
    std::vector<std::vector<std::uint32_t>> rock_buckets_;
    std::uint64_t noise_seed_ = 0;
    std::uint64_t slip_seed_ = 0;
};

/// Builds the model; rock placement comes only from the seeded generator.
/// Throws ParameterError for non-positive extent/wavelength or negative
/// amplitude.
TerrainModel generate_terrain(std::uint64_t seed, const TerrainParams& params);

}  // namespace marsnav
