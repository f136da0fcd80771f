#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "marsnav/geometry.hpp"
#include "marsnav/random.hpp"
#include "marsnav/terrain.hpp"

namespace marsnav {

/// Stereo pair abstracted as a noisy ray-cast depth sensor. Defaults follow
/// the flight configuration: hazcams 120 deg wide, navcams 45 deg on the mast.
struct CameraConfig {
    std::string name = "hazcam";
    double fov_deg = 120.0;              // (0, 180]
    double max_range = 6.0;              // m
    double mount_height = 0.8;           // m above the rover ground contact
    double mount_yaw = 0.0;              // rad, relative to rover heading
    double angular_resolution = deg2rad(3.0);  // rad between sample rays
    double depth_noise_sigma = 0.0;      // m, along-ray Gaussian noise
    double feature_grid = 0.2;           // m, landmark quantization pitch
    // Declination fan relative to horizontal; negative looks up so rising
    // ground ahead is still seen.
    double min_declination = deg2rad(-10.0);
    double max_declination = deg2rad(80.0);
};

/// Points are in the rover frame: origin at the camera (mount_height above
/// the ground contact), x along the rover heading. feature_ids are stable
/// landmark identifiers derived from quantized world coordinates, unique
/// within one cloud.
struct PointCloud {
    std::vector<Vec3> points;
    std::vector<std::uint64_t> feature_ids;
    double origin_height = 0.0;  // camera height above the rover ground contact
    double timestamp = 0.0;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

struct ImuConfig {
    double rate_hz = 200.0;
    double gyro_bias = 0.0;          // rad/s
    double gyro_noise_sigma = 0.0;   // rad/s
    Vec2 accel_bias = Vec2::Zero();  // m/s^2
    double accel_noise_sigma = 0.0;  // m/s^2
};

struct ImuSample {
    double gyro_z = 0.0;  // rad/s
    Vec2 accel = Vec2::Zero();
    double timestamp = 0.0;
};

/// True planar motion state used to synthesize IMU readings.
struct MotionState {
    double yaw_rate = 0.0;
    Vec2 accel = Vec2::Zero();  // body frame
};

struct WheelOdomSample {
    double encoder_distance = 0.0;   // m, wheel-reported arc length
    double commanded_curvature = 0.0;
    double timestamp = 0.0;
};

struct StarTrackerConfig {
    bool enabled = true;
    double sigma = 0.002;        // rad
    double night_fraction = 0.5; // fraction of the sol with usable sky
    double sol_length = 88775.0; // s
};

struct StarFix {
    double heading = 0.0;  // rad, absolute
    double sigma = 0.0;
    double timestamp = 0.0;
};

/// Ray-casts the terrain over the camera's field of view. Each hit within
/// max_range snaps to its quantized world anchor (so re-observations of the
/// same spot share a feature id), is expressed in the rover frame and gets
/// along-ray Gaussian depth noise. An empty cloud is a valid result.
PointCloud capture_point_cloud(const TerrainModel& terrain, const Pose& true_pose,
                               const CameraConfig& cam, Rng& rng, double timestamp = 0.0);

ImuSample sample_imu(const MotionState& true_motion, const ImuConfig& config, Rng& rng,
                     double timestamp = 0.0);

/// The encoder reports the commanded arc length; slip is invisible to it.
/// The simulator applies ground displacement commanded * (1 - slip) separately.
WheelOdomSample sample_wheel_odometry(double commanded_distance, double commanded_curvature,
                                      Rng& rng, double timestamp = 0.0);

/// Night-only absolute heading. Day returns nullopt (a normal outcome).
/// The sol starts at dawn: night is the trailing night_fraction of each sol.
std::optional<StarFix> sample_star_fix(double true_heading, double sim_time,
                                       const StarTrackerConfig& config, Rng& rng);

bool is_night(double sim_time, const StarTrackerConfig& config);

}  // namespace marsnav
