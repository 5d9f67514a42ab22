// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 warewave contributors

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

namespace warewave {

inline constexpr double kSpeedOfLight = 299792458.0;         // m/s
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;  // F/m
inline constexpr double kPi = 3.14159265358979323846;

// Minimum ray-hit distance; hits closer than this are treated as
// self-intersections and ignored.
inline constexpr double kRayEpsilon = 1e-9;

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

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
};

inline constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline constexpr double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline constexpr double norm2(const Vec3& v) { return dot(v, v); }
inline Vec3 normalized(const Vec3& v) { return v / norm(v); }
inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

// Plane in Hessian form: dot(normal, x) == offset, with unit normal.
struct Plane {
  Vec3 normal{0, 0, 1};
  double offset = 0.0;

  static Plane from_point_normal(const Vec3& p, const Vec3& unit_n) {
    return {unit_n, dot(unit_n, p)};
  }
  double signed_distance(const Vec3& p) const { return dot(normal, p) - offset; }
};

// Reflects a point across a plane. Involutive to round-off.
inline Vec3 mirror_point(const Vec3& p, const Plane& plane) {
  return p - 2.0 * plane.signed_distance(p) * plane.normal;
}
inline Vec3 mirror_direction(const Vec3& d, const Vec3& unit_n) {
  return d - 2.0 * dot(d, unit_n) * unit_n;
}

struct Aabb {
  Vec3 lo{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
          std::numeric_limits<double>::max()};
  Vec3 hi{std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest(),
          std::numeric_limits<double>::lowest()};

  void expand(const Vec3& p) {
    lo.x = std::min(lo.x, p.x); lo.y = std::min(lo.y, p.y); lo.z = std::min(lo.z, p.z);
    hi.x = std::max(hi.x, p.x); hi.y = std::max(hi.y, p.y); hi.z = std::max(hi.z, p.z);
  }
  void expand(const Aabb& b) { expand(b.lo); expand(b.hi); }
  Vec3 center() const { return (lo + hi) * 0.5; }
  bool contains(const Vec3& p) const {
    return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y &&
           p.z >= lo.z && p.z <= hi.z;
  }
  bool contains_strict(const Vec3& p) const {
    return p.x > lo.x && p.x < hi.x && p.y > lo.y && p.y < hi.y &&
           p.z > lo.z && p.z < hi.z;
  }
  int longest_axis() const {
    Vec3 d = hi - lo;
    if (d.x >= d.y && d.x >= d.z) return 0;
    return d.y >= d.z ? 1 : 2;
  }
};

// Slab test over a parametric segment/ray; updates nothing, returns whether
// [tmin, tmax] intersects the box given origin + t*dir.
inline bool aabb_hit(const Aabb& b, const Vec3& o, const Vec3& inv_dir, double tmin,
                     double tmax) {
  for (int a = 0; a < 3; ++a) {
    double t0 = (b.lo[a] - o[a]) * inv_dir[a];
    double t1 = (b.hi[a] - o[a]) * inv_dir[a];
    if (t0 > t1) std::swap(t0, t1);
    tmin = std::max(tmin, t0);
    tmax = std::min(tmax, t1);
    if (tmin > tmax) return false;
  }
  return true;
}

// Convex planar polygon helpers. Vertices are CCW when viewed from the side
// the unit normal points to.

inline Vec3 polygon_centroid(const std::vector<Vec3>& verts) {
  Vec3 c{0, 0, 0};
  for (const Vec3& v : verts) c += v;
  return c / static_cast<double>(verts.size());
}

inline double polygon_area(const std::vector<Vec3>& verts) {
  if (verts.size() < 3) return 0.0;
  Vec3 s{0, 0, 0};
  for (size_t i = 1; i + 1 < verts.size(); ++i)
    s += cross(verts[i] - verts[0], verts[i + 1] - verts[0]);
  return 0.5 * norm(s);
}

// Point-in-convex-polygon for a point already on the polygon plane.
// `tol` is a signed slack in meters: positive admits points slightly outside.
inline bool polygon_contains(const std::vector<Vec3>& verts, const Vec3& normal,
                             const Vec3& p, double tol = 1e-9) {
  const size_t n = verts.size();
  for (size_t i = 0; i < n; ++i) {
    const Vec3& a = verts[i];
    const Vec3& b = verts[(i + 1) % n];
    Vec3 edge = b - a;
    // Inward side of the edge in the polygon plane.
    Vec3 inward = cross(normal, edge);
    double len = norm(inward);
    if (len < 1e-30) continue;
    if (dot(inward, p - a) < -tol * len) return false;
  }
  return true;
}

// Clips a convex polygon against the half-space dot(n, x) <= d.
// Returns the clipped polygon (possibly empty).
inline std::vector<Vec3> clip_polygon_halfspace(const std::vector<Vec3>& poly,
                                                const Vec3& n, double d) {
  std::vector<Vec3> out;
  const size_t m = poly.size();
  if (m == 0) return out;
  out.reserve(m + 1);
  for (size_t i = 0; i < m; ++i) {
    const Vec3& a = poly[i];
    const Vec3& b = poly[(i + 1) % m];
    double da = dot(n, a) - d;
    double db = dot(n, b) - d;
    if (da <= 0.0) {
      out.push_back(a);
      if (db > 0.0) {
        double t = da / (da - db);
        out.push_back(a + (b - a) * t);
      }
    } else if (db <= 0.0) {
      double t = da / (da - db);
      out.push_back(a + (b - a) * t);
    }
  }
  if (out.size() < 3) out.clear();
  return out;
}

}  // namespace warewave
