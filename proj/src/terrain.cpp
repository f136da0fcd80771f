#include "marsnav/terrain.hpp"

#include <algorithm>
#include <cmath>

#include "marsnav/random.hpp"

namespace marsnav {

namespace {

// Lattice hash -> [-1, 1]. Pure integer mixing keeps every query bit-identical
// for a given seed.
double lattice_value(std::int64_t ix, std::int64_t iy, std::uint64_t seed) {
    std::uint64_t s = seed;
    s = hash_combine(s, static_cast<std::uint64_t>(ix));
    s = hash_combine(s, static_cast<std::uint64_t>(iy));
    return static_cast<double>(s >> 11) * 0x1.0p-52 - 1.0;
}

inline double fade(double t) { return t * t * t * (t * (t * 6.0 - 15.0) + 10.0); }
inline double fade_deriv(double t) { return 30.0 * t * t * (t - 1.0) * (t - 1.0); }

// One octave of value noise with its analytic gradient (w.r.t. the scaled
// coordinates u, v).
void value_noise(double u, double v, std::uint64_t seed, double& n, double& dn_du, double& dn_dv) {
    const double fu = std::floor(u), fv = std::floor(v);
    const auto iu = static_cast<std::int64_t>(fu);
    const auto iv = static_cast<std::int64_t>(fv);
    const double tu = u - fu, tv = v - fv;

    const double v00 = lattice_value(iu, iv, seed);
    const double v10 = lattice_value(iu + 1, iv, seed);
    const double v01 = lattice_value(iu, iv + 1, seed);
    const double v11 = lattice_value(iu + 1, iv + 1, seed);

    const double su = fade(tu), sv = fade(tv);
    const double a = v00 + (v10 - v00) * su;
    const double b = v01 + (v11 - v01) * su;
    n = a + (b - a) * sv;
    dn_du = fade_deriv(tu) * ((v10 - v00) + ((v11 - v01) - (v10 - v00)) * sv);
    dn_dv = fade_deriv(tv) * (b - a);
}

// Slope-sweep profile: h'(x) = tan(alpha_max * x / span) on [0, span],
// flat before, constant slope after.
double sweep_height(double x, double alpha_max, double span) {
    if (x <= 0.0 || alpha_max <= 0.0 || span <= 0.0) return 0.0;
    const double k = alpha_max / span;
    const double x_in = std::min(x, span);
    double h = -std::log(std::cos(k * x_in)) / k;
    if (x > span) h += std::tan(alpha_max) * (x - span);
    return h;
}

double sweep_slope(double x, double alpha_max, double span) {
    if (x <= 0.0 || alpha_max <= 0.0 || span <= 0.0) return 0.0;
    return std::tan(alpha_max * std::min(x, span) / span);
}

}  // namespace

TerrainModel::TerrainModel(std::uint64_t seed, const TerrainParams& params)
    : seed_(seed), params_(params) {
    if (params.extent <= 0.0) throw ParameterError("terrain extent must be positive");
    if (params.wavelength <= 0.0) throw ParameterError("terrain wavelength must be positive");
    if (params.amplitude < 0.0) throw ParameterError("terrain amplitude must be non-negative");
    if (params.octaves < 1) throw ParameterError("terrain octaves must be >= 1");
    if (params.rock_density < 0.0) throw ParameterError("rock density must be non-negative");
    if (params.rock_radius_min <= 0.0 || params.rock_radius_max < params.rock_radius_min)
        throw ParameterError("rock radius range invalid");
    if (params.rock_height_min <= 0.0 || params.rock_height_max < params.rock_height_min)
        throw ParameterError("rock height range invalid");
    if (params.regolith.base_slip < 0.0 || params.regolith.base_slip >= 1.0)
        throw ParameterError("base_slip must be in [0, 1)");
    if (params.regolith.slip_noise_wavelength <= 0.0)
        throw ParameterError("slip_noise_wavelength must be positive");
    if (params.sweep_max_slope < 0.0 || params.sweep_max_slope >= kPi / 2.0)
        throw ParameterError("sweep_max_slope must be in [0, pi/2)");

    Rng root(seed);
    noise_seed_ = root.fork("height-noise").next_u64();
    slip_seed_ = root.fork("slip-noise").next_u64();

    // Rock field: count from density, placement/size from the seeded stream.
    Rng rock_rng = root.fork("rocks");
    const double side = 2.0 * params.extent;
    const auto count = static_cast<std::size_t>(std::floor(params.rock_density * side * side));
    rocks_.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        RockSpec rock;
        // redraw rocks that land in a clear zone; bounded retries keep
        // generation total even for pathological zone layouts
        for (int attempt = 0; attempt < 64; ++attempt) {
            rock.x = rock_rng.uniform(-params.extent, params.extent);
            rock.y = rock_rng.uniform(-params.extent, params.extent);
            rock.radius = rock_rng.uniform(params.rock_radius_min, params.rock_radius_max);
            rock.height = rock_rng.uniform(params.rock_height_min, params.rock_height_max);
            bool blocked = false;
            for (const auto& zone : params.clear_zones) {
                const double dx = rock.x - zone.x, dy = rock.y - zone.y;
                if (std::hypot(dx, dy) < zone.radius + rock.radius) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) {
                rocks_.push_back(rock);
                break;
            }
        }
    }

    // Bucket the rocks on a uniform grid for O(1) lookups.
    bucket_size_ = std::max(2.0 * params.rock_radius_max, 1.0);
    buckets_per_side_ = std::max(1, static_cast<int>(std::ceil(side / bucket_size_)));
    rock_buckets_.resize(static_cast<std::size_t>(buckets_per_side_) * buckets_per_side_);
    for (std::uint32_t i = 0; i < rocks_.size(); ++i) {
        const auto& rock = rocks_[i];
        const int bx0 = std::clamp(static_cast<int>((rock.x - rock.radius + params.extent) / bucket_size_), 0, buckets_per_side_ - 1);
        const int bx1 = std::clamp(static_cast<int>((rock.x + rock.radius + params.extent) / bucket_size_), 0, buckets_per_side_ - 1);
        const int by0 = std::clamp(static_cast<int>((rock.y - rock.radius + params.extent) / bucket_size_), 0, buckets_per_side_ - 1);
        const int by1 = std::clamp(static_cast<int>((rock.y + rock.radius + params.extent) / bucket_size_), 0, buckets_per_side_ - 1);
        for (int by = by0; by <= by1; ++by)
            for (int bx = bx0; bx <= bx1; ++bx)
                rock_buckets_[static_cast<std::size_t>(by) * buckets_per_side_ + bx].push_back(i);
    }
}

double TerrainModel::base_height(double x, double y) const {
    double h = 0.0;
    if (params_.amplitude > 0.0) {
        double amp = params_.amplitude;
        double freq = 1.0 / params_.wavelength;
        for (int oct = 0; oct < params_.octaves; ++oct) {
            double n, du, dv;
            value_noise(x * freq, y * freq, noise_seed_ + static_cast<std::uint64_t>(oct), n, du, dv);
            h += amp * n;
            amp *= 0.5;
            freq *= 2.0;
        }
    }
    h += params_.ramp_slope * x;
    h += sweep_height(x, params_.sweep_max_slope, params_.sweep_span);
    return h;
}

void TerrainModel::base_gradient(double x, double y, Vec2& g) const {
    g.setZero();
    if (params_.amplitude > 0.0) {
        double amp = params_.amplitude;
        double freq = 1.0 / params_.wavelength;
        for (int oct = 0; oct < params_.octaves; ++oct) {
            double n, du, dv;
            value_noise(x * freq, y * freq, noise_seed_ + static_cast<std::uint64_t>(oct), n, du, dv);
            g.x() += amp * du * freq;
            g.y() += amp * dv * freq;
            amp *= 0.5;
            freq *= 2.0;
        }
    }
    g.x() += params_.ramp_slope;
    g.x() += sweep_slope(x, params_.sweep_max_slope, params_.sweep_span);
}

double TerrainModel::height(double x, double y) const {
    double h = base_height(x, y);
    if (!rocks_.empty()) {
        const int bx = std::clamp(static_cast<int>((x + params_.extent) / bucket_size_), 0, buckets_per_side_ - 1);
        const int by = std::clamp(static_cast<int>((y + params_.extent) / bucket_size_), 0, buckets_per_side_ - 1);
        for (std::uint32_t idx : rock_buckets_[static_cast<std::size_t>(by) * buckets_per_side_ + bx]) {
            const auto& rock = rocks_[idx];
            const double dx = x - rock.x, dy = y - rock.y;
            const double d2 = dx * dx + dy * dy;
            if (d2 < rock.radius * rock.radius) {
                const double t = 1.0 - d2 / (rock.radius * rock.radius);
                h += rock.height * std::sqrt(t);
            }
        }
    }
    return h;
}

Vec2 TerrainModel::height_gradient(double x, double y) const {
    Vec2 g;
    base_gradient(x, y, g);
    if (!rocks_.empty()) {
        const int bx = std::clamp(static_cast<int>((x + params_.extent) / bucket_size_), 0, buckets_per_side_ - 1);
        const int by = std::clamp(static_cast<int>((y + params_.extent) / bucket_size_), 0, buckets_per_side_ - 1);
        for (std::uint32_t idx : rock_buckets_[static_cast<std::size_t>(by) * buckets_per_side_ + bx]) {
            const auto& rock = rocks_[idx];
            const double dx = x - rock.x, dy = y - rock.y;
            const double r2 = rock.radius * rock.radius;
            const double d2 = dx * dx + dy * dy;
            if (d2 < r2 && d2 > 0.0) {
                // d/dd of H*sqrt(1-(d/r)^2) diverges at the rim; clamp there
                const double t = std::max(1.0 - d2 / r2, 1e-6);
                const double dh_dd2 = -rock.height / (2.0 * r2 * std::sqrt(t));
                g.x() += dh_dd2 * 2.0 * dx;
                g.y() += dh_dd2 * 2.0 * dy;
            }
        }
    }
    return g;
}

SurfacePoint TerrainModel::query_surface(double x, double y) const {
    if (!contains(x, y)) throw OutOfBoundsError("surface query outside terrain extent");
    SurfacePoint sp;
    sp.height = height(x, y);
    const Vec2 g = height_gradient(x, y);
    sp.normal = Vec3(-g.x(), -g.y(), 1.0).normalized();
    const double slope = std::atan(g.norm());

    const auto& reg = params_.regolith;
    double slip = reg.base_slip + reg.slope_slip_gain * slope;
    if (reg.slip_noise_sigma > 0.0) {
        double n, du, dv;
        value_noise(x / reg.slip_noise_wavelength, y / reg.slip_noise_wavelength, slip_seed_, n, du, dv);
        slip += reg.slip_noise_sigma * n;
    }
    sp.slip = std::clamp(slip, 0.0, 0.95);
    return sp;
}

TerrainModel generate_terrain(std::uint64_t seed, const TerrainParams& params) {
    return TerrainModel(seed, params);
}

}  // namespace marsnav
