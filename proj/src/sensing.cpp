#include "marsnav/sensing.hpp"

#include <cmath>
#include <unordered_set>

#include "marsnav/errors.hpp"

namespace marsnav {

namespace {

constexpr double kMarchStep = 0.25;  // m, rock diameters stay above 2 samples
constexpr int kBisectIters = 25;

std::uint64_t anchor_id(std::int64_t qx, std::int64_t qy) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(qx)) << 32) |
           static_cast<std::uint64_t>(static_cast<std::uint32_t>(qy));
}

}  // namespace

PointCloud capture_point_cloud(const TerrainModel& terrain, const Pose& true_pose,
                               const CameraConfig& cam, Rng& rng, double timestamp) {
    if (cam.fov_deg <= 0.0 || cam.fov_deg > 180.0)
        throw ParameterError("camera fov_deg must be in (0, 180]");
    if (cam.max_range <= 0.0) throw ParameterError("camera max_range must be positive");
    if (cam.angular_resolution <= 0.0)
        throw ParameterError("camera angular_resolution must be positive");
    if (!terrain.contains(true_pose.x, true_pose.y))
        throw OutOfBoundsError("rover outside terrain extent");

    PointCloud cloud;
    cloud.origin_height = cam.mount_height;
    cloud.timestamp = timestamp;

    const double ground_z = terrain.height(true_pose.x, true_pose.y);
    const Vec3 cam_pos(true_pose.x, true_pose.y, ground_z + cam.mount_height);
    const double half_fov = deg2rad(cam.fov_deg) / 2.0;
    const double cos_h = std::cos(true_pose.heading), sin_h = std::sin(true_pose.heading);

    std::unordered_set<std::uint64_t> seen;

    for (double rel_bearing = -half_fov; rel_bearing <= half_fov + 1e-12;
         rel_bearing += cam.angular_resolution) {
        const double bearing = true_pose.heading + cam.mount_yaw + rel_bearing;
        const double cb = std::cos(bearing), sb = std::sin(bearing);
        for (double decl = cam.min_declination; decl <= cam.max_declination + 1e-12;
             decl += cam.angular_resolution) {
            const double cd = std::cos(decl), sd = std::sin(decl);
            const Vec3 dir(cd * cb, cd * sb, -sd);

            // March until the ray drops below ground, then bisect the bracket.
            double t_prev = 0.0;
            double clr_prev = cam.mount_height;  // clearance at the camera
            double t_hit = -1.0;
            for (double t = kMarchStep; t <= cam.max_range + 1e-12; t += kMarchStep) {
                const double px = cam_pos.x() + dir.x() * t;
                const double py = cam_pos.y() + dir.y() * t;
                if (!terrain.contains(px, py)) break;
                const double clr = cam_pos.z() + dir.z() * t - terrain.height(px, py);
                if (clr <= 0.0) {
                    double lo = t_prev, hi = t;
                    double clo = clr_prev;
                    for (int i = 0; i < kBisectIters; ++i) {
                        const double mid = 0.5 * (lo + hi);
                        const double cm = cam_pos.z() + dir.z() * mid -
                                          terrain.height(cam_pos.x() + dir.x() * mid,
                                                         cam_pos.y() + dir.y() * mid);
                        if (cm <= 0.0) {
                            hi = mid;
                        } else {
                            lo = mid;
                            clo = cm;
                        }
                    }
                    (void)clo;
                    t_hit = 0.5 * (lo + hi);
                    break;
                }
                t_prev = t;
                clr_prev = clr;
            }
            if (t_hit < 0.0) continue;

            // Snap the hit to its world anchor so the same spot always maps to
            // the same landmark id.
            const double hx = cam_pos.x() + dir.x() * t_hit;
            const double hy = cam_pos.y() + dir.y() * t_hit;
            const auto qx = static_cast<std::int64_t>(std::floor(hx / cam.feature_grid));
            const auto qy = static_cast<std::int64_t>(std::floor(hy / cam.feature_grid));
            const double ax = (static_cast<double>(qx) + 0.5) * cam.feature_grid;
            const double ay = (static_cast<double>(qy) + 0.5) * cam.feature_grid;
            if (!terrain.contains(ax, ay)) continue;
            const Vec3 anchor(ax, ay, terrain.height(ax, ay));

            // Frustum filter after snapping keeps the containment invariant exact.
            const Vec3 rel = anchor - cam_pos;
            const double range = rel.norm();
            if (range > cam.max_range || range < 1e-9) continue;
            const double anchor_bearing = std::atan2(rel.y(), rel.x());
            if (std::abs(wrap_angle(anchor_bearing - true_pose.heading - cam.mount_yaw)) >
                half_fov + 1e-12)
                continue;

            const std::uint64_t id = anchor_id(qx, qy);
            if (!seen.insert(id).second) continue;

            // Rover frame: rotate world offset by -heading.
            Vec3 p(cos_h * rel.x() + sin_h * rel.y(), -sin_h * rel.x() + cos_h * rel.y(), rel.z());
            if (cam.depth_noise_sigma > 0.0) {
                const double noise = rng.gaussian(0.0, cam.depth_noise_sigma);
                p += (p / p.norm()) * noise;
            }
            cloud.points.push_back(p);
            cloud.feature_ids.push_back(id);
        }
    }
    return cloud;
}

ImuSample sample_imu(const MotionState& true_motion, const ImuConfig& config, Rng& rng,
                     double timestamp) {
    ImuSample s;
    s.timestamp = timestamp;
    s.gyro_z = true_motion.yaw_rate + config.gyro_bias + rng.gaussian(0.0, config.gyro_noise_sigma);
    s.accel.x() = true_motion.accel.x() + config.accel_bias.x() +
                  rng.gaussian(0.0, config.accel_noise_sigma);
    s.accel.y() = true_motion.accel.y() + config.accel_bias.y() +
                  rng.gaussian(0.0, config.accel_noise_sigma);
    return s;
}

WheelOdomSample sample_wheel_odometry(double commanded_distance, double commanded_curvature,
                                      Rng& rng, double timestamp) {
    (void)rng;  // encoders are modeled noise-free; slip never reaches them
    WheelOdomSample s;
    s.encoder_distance = commanded_distance;
    s.commanded_curvature = commanded_curvature;
    s.timestamp = timestamp;
    return s;
}

bool is_night(double sim_time, const StarTrackerConfig& config) {
    if (config.sol_length <= 0.0) throw ParameterError("sol_length must be positive");
    const double phase = sim_time / config.sol_length - std::floor(sim_time / config.sol_length);
    return phase >= 1.0 - config.night_fraction;
}

std::optional<StarFix> sample_star_fix(double true_heading, double sim_time,
                                       const StarTrackerConfig& config, Rng& rng) {
    if (!config.enabled || !is_night(sim_time, config)) return std::nullopt;
    StarFix fix;
    fix.heading = wrap_angle(true_heading + rng.gaussian(0.0, config.sigma));
    fix.sigma = config.sigma;
    fix.timestamp = sim_time;
    return fix;
}

}  // namespace marsnav
