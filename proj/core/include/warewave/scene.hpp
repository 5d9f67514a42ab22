// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 warewave contributors

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "warewave/geometry.hpp"
#include "warewave/material.hpp"

namespace warewave {

// Planar convex polygon with an outward unit normal.
struct Facet {
  std::vector<Vec3> vertices;  // >= 3, coplanar within 1e-9 m, convex
  Vec3 unit_normal;
  int material = 0;  // index into Scene::materials()

  Plane plane() const { return Plane::from_point_normal(vertices[0], unit_normal); }
  Aabb bounds() const {
    Aabb b;
    for (const Vec3& v : vertices) b.expand(v);
    return b;
  }
  bool operator==(const Facet& o) const = default;
};

// Straight diffracting edge between two adjoining facets. The exterior of
// the wedge spans angles [0, n*pi] measured from face_a around edge_dir.
struct WedgeEdge {
  Vec3 p0, p1;
  int face_a = -1, face_b = -1;
  double wedge_index_n = 1.5;  // n = 2 - interior_angle/pi, in (1, 2]

  // Edge-fixed frame: cross(edge_dir, tangent_a) == normal_a.
  Vec3 edge_dir;    // unit vector along the edge
  Vec3 tangent_a;   // unit, in face_a's plane, perpendicular to edge_dir
  Vec3 normal_a;    // face_a outward unit normal

  double length() const { return distance(p0, p1); }

  // Angle of a direction around the edge, measured from face_a, in [0, 2*pi).
  // Directions interior to the exterior wedge satisfy 0 < angle < n*pi.
  double exterior_angle(const Vec3& dir) const {
    Vec3 perp = dir - dot(dir, edge_dir) * edge_dir;
    double a = std::atan2(dot(perp, normal_a), dot(perp, tangent_a));
    if (a < 0.0) a += 2.0 * kPi;
    return a;
  }
  bool operator==(const WedgeEdge& o) const = default;
};

struct RayHit {
  int facet = -1;
  double distance = 0.0;
  Vec3 point;
};

// Half-space dot(normal, x) <= offset.
struct Halfspace {
  Vec3 normal;
  double offset;
};

// Immutable traced world: facets with materials, diffracting edges, solid
// boxes for interior queries, and a BVH over facet bounds. All queries are
// safe for concurrent readers.
class Scene {
 public:
  Scene() = default;
  Scene(std::vector<Facet> facets, std::vector<WedgeEdge> edges,
        std::vector<Material> materials, std::vector<Aabb> solids = {});

  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<WedgeEdge>& edges() const { return edges_; }
  const std::vector<Material>& materials() const { return materials_; }
  const std::vector<Aabb>& solids() const { return solids_; }
  const Material& facet_material(int facet_id) const {
    return materials_[facets_[facet_id].material];
  }
  const Aabb& bounds() const { return bounds_; }

  // Nearest hit along origin + t*direction with t in (kRayEpsilon, tmax).
  // `direction` must be unit length. `skip` excludes one facet id.
  std::optional<RayHit> intersect_ray(const Vec3& origin, const Vec3& direction,
                                      double tmax = std::numeric_limits<double>::infinity(),
                                      int skip = -1) const;

  // True iff no facet blocks the open segment (p, q); hits within 1e-9 m of
  // either endpoint do not count, so interaction points sitting on facets do
  // not occlude themselves.
  bool segment_clear(const Vec3& p, const Vec3& q) const;

  // True iff p lies strictly inside one of the registered solid boxes.
  bool point_inside_solid(const Vec3& p) const;

  // Facet ids whose bounds are not fully outside any given half-space
  // (conservative frustum query used by the beam tracer).
  void query_halfspaces(std::span<const Halfspace> planes, std::vector<int>& out) const;

 private:
  struct BvhNode {
    Aabb box;
    int left = -1;    // internal: child indices; leaf: left == -1
    int right = -1;
    int first = 0;    // leaf: range into order_
    int count = 0;
  };

  void validate() const;
  void build_bvh();
  int build_node(int first, int count);

  std::vector<Facet> facets_;
  std::vector<WedgeEdge> edges_;
  std::vector<Material> materials_;
  std::vector<Aabb> solids_;
  Aabb bounds_;
  std::vector<BvhNode> nodes_;
  std::vector<int> order_;  // facet ids, leaf ranges index into this
};

// Parametric hit of a ray with one facet, or a negative value on miss.
double intersect_facet(const Facet& f, const Vec3& origin, const Vec3& direction,
                       double tmin, double tmax);

// Facets of an axis-aligned box with outward normals, in the fixed order
// -x, +x, -y, +y, -z, +z. `skip` masks faces out (same order).
std::vector<Facet> make_box_facets(const Aabb& box, int material,
                                   const std::array<bool, 6>& skip = {});

// Builds a wedge edge between two adjoining facets, deriving the wedge index
// from the facet normals and orienting the edge frame so that face_b sits at
// exterior angle n*pi. Throws std::invalid_argument on inconsistent input.
WedgeEdge make_wedge_edge(const std::vector<Facet>& facets, int face_a, int face_b,
                          const Vec3& p0, const Vec3& p1);

}  // namespace warewave
