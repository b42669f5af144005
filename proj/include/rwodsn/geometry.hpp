// Basic 3D value types shared across the library.
#pragma once

#include <array>
#include <cmath>
#include <limits>

namespace rwodsn {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
  constexpr bool operator==(const Vec3& o) const { return x == o.x && y == o.y && z == o.z; }

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

inline constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double squared_norm(const Vec3& v) { return dot(v, v); }
inline double norm(const Vec3& v) { return std::sqrt(squared_norm(v)); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }
inline double squared_distance(const Vec3& a, const Vec3& b) { return squared_norm(a - b); }

inline Vec3 normalized(const Vec3& v) {
  const double n = norm(v);
  return n > 0.0 ? v / n : Vec3{0.0, 0.0, 0.0};
}

// Unit vector; callers construct via normalized() or analytic formulas and
// are expected to keep |v| within 1 +/- 1e-9.
using UnitVec3 = Vec3;

inline bool is_unit(const Vec3& v, double tol = 1e-9) {
  return std::abs(norm(v) - 1.0) <= tol;
}

// Rigid motion p -> R*p + t, with R stored row-major.
struct RigidTransform {
  std::array<std::array<double, 3>, 3> rotation{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  Vec3 translation{0, 0, 0};

  Vec3 apply(const Vec3& p) const {
    return {rotation[0][0] * p.x + rotation[0][1] * p.y + rotation[0][2] * p.z + translation.x,
            rotation[1][0] * p.x + rotation[1][1] * p.y + rotation[1][2] * p.z + translation.y,
            rotation[2][0] * p.x + rotation[2][1] * p.y + rotation[2][2] * p.z + translation.z};
  }

  // this ∘ other: apply `other` first, then this.
  RigidTransform compose(const RigidTransform& other) const {
    RigidTransform out;
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        out.rotation[i][j] = rotation[i][0] * other.rotation[0][j] +
                             rotation[i][1] * other.rotation[1][j] +
                             rotation[i][2] * other.rotation[2][j];
      }
    }
    const Vec3 rt = {rotation[0][0] * other.translation.x + rotation[0][1] * other.translation.y + rotation[0][2] * other.translation.z,
                     rotation[1][0] * other.translation.x + rotation[1][1] * other.translation.y + rotation[1][2] * other.translation.z,
                     rotation[2][0] * other.translation.x + rotation[2][1] * other.translation.y + rotation[2][2] * other.translation.z};
    out.translation = rt + translation;
    return out;
  }

  // Rotation angle in radians, from the trace.
  double rotation_angle() const {
    double tr = rotation[0][0] + rotation[1][1] + rotation[2][2];
    double c = (tr - 1.0) / 2.0;
    c = std::fmin(1.0, std::fmax(-1.0, c));
    return std::acos(c);
  }
};

// Axis-angle rotation about a unit axis.
inline RigidTransform make_rotation(const UnitVec3& axis, double angle_rad,
                                    const Vec3& translation = {0, 0, 0}) {
  const double c = std::cos(angle_rad), s = std::sin(angle_rad), t = 1.0 - c;
  const double ux = axis.x, uy = axis.y, uz = axis.z;
  RigidTransform out;
  out.rotation = {{{t * ux * ux + c, t * ux * uy - s * uz, t * ux * uz + s * uy},
                   {t * ux * uy + s * uz, t * uy * uy + c, t * uy * uz - s * ux},
                   {t * ux * uz - s * uy, t * uy * uz + s * ux, t * uz * uz + c}}};
  out.translation = translation;
  return out;
}

inline constexpr double kQuietNan = std::numeric_limits<double>::quiet_NaN();

}  // namespace rwodsn
