// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 warewave contributors

#include "warewave/scene.hpp"

#include <algorithm>
#include <stdexcept>

namespace warewave {

namespace {

constexpr int kLeafSize = 4;

double safe_inv(double x) {
  // IEEE inf propagates correctly through the slab test.
  return 1.0 / x;
}

}  // namespace

double intersect_facet(const Facet& f, const Vec3& origin, const Vec3& direction,
                       double tmin, double tmax) {
  double denom = dot(f.unit_normal, direction);
  if (std::abs(denom) < 1e-15) return -1.0;
  double t = (dot(f.unit_normal, f.vertices[0]) - dot(f.unit_normal, origin)) / denom;
  if (t <= tmin || t >= tmax) return -1.0;
  Vec3 p = origin + direction * t;
  if (!polygon_contains(f.vertices, f.unit_normal, p, 1e-9)) return -1.0;
  return t;
}

Scene::Scene(std::vector<Facet> facets, std::vector<WedgeEdge> edges,
             std::vector<Material> materials, std::vector<Aabb> solids)
    : facets_(std::move(facets)),
      edges_(std::move(edges)),
      materials_(std::move(materials)),
      solids_(std::move(solids)) {
  validate();
  for (const Facet& f : facets_) bounds_.expand(f.bounds());
  build_bvh();
}

void Scene::validate() const {
  for (const Facet& f : facets_) {
    if (f.vertices.size() < 3) throw std::invalid_argument("facet with < 3 vertices");
    if (std::abs(norm(f.unit_normal) - 1.0) > 1e-12)
      throw std::invalid_argument("facet normal not unit length");
    if (f.material < 0 || f.material >= static_cast<int>(materials_.size()))
      throw std::invalid_argument("facet material index out of range");
    Plane pl = Plane::from_point_normal(f.vertices[0], f.unit_normal);
    for (const Vec3& v : f.vertices)
      if (std::abs(pl.signed_distance(v)) > 1e-9)
        throw std::invalid_argument("facet vertices not coplanar");
  }
  for (const WedgeEdge& e : edges_) {
    if (e.face_a < 0 || e.face_a >= static_cast<int>(facets_.size()) ||
        e.face_b < 0 || e.face_b >= static_cast<int>(facets_.size()))
      throw std::invalid_argument("wedge edge face index out of range");
    if (!(e.wedge_index_n > 1.0 && e.wedge_index_n <= 2.0))
      throw std::invalid_argument("wedge index outside (1, 2]");
    for (int fid : {e.face_a, e.face_b}) {
      Plane pl = facets_[fid].plane();
      if (std::abs(pl.signed_distance(e.p0)) > 1e-9 ||
          std::abs(pl.signed_distance(e.p1)) > 1e-9)
        throw std::invalid_argument("wedge edge not on both faces");
    }
  }
}

void Scene::build_bvh() {
  nodes_.clear();
  order_.resize(facets_.size());
  for (size_t i = 0; i < order_.size(); ++i) order_[i] = static_cast<int>(i);
  if (!facets_.empty()) {
    nodes_.reserve(2 * facets_.size());
    build_node(0, static_cast<int>(order_.size()));
  }
}

int Scene::build_node(int first, int count) {
  int id = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  Aabb box;
  for (int i = first; i < first + count; ++i) box.expand(facets_[order_[i]].bounds());
  nodes_[id].box = box;
  if (count <= kLeafSize) {
    nodes_[id].first = first;
    nodes_[id].count = count;
    return id;
  }
  Aabb cbox;
  for (int i = first; i < first + count; ++i)
    cbox.expand(facets_[order_[i]].bounds().center());
  int axis = cbox.longest_axis();
  int mid = first + count / 2;
  std::nth_element(order_.begin() + first, order_.begin() + mid,
                   order_.begin() + first + count, [&](int a, int b) {
                     double ca = facets_[a].bounds().center()[axis];
                     double cb = facets_[b].bounds().center()[axis];
                     if (ca != cb) return ca < cb;
                     return a < b;
                   });
  int left = build_node(first, mid - first);
  int right = build_node(mid, first + count - mid);
  nodes_[id].left = left;
  nodes_[id].right = right;
  return id;
}

std::optional<RayHit> Scene::intersect_ray(const Vec3& origin, const Vec3& direction,
                                           double tmax, int skip) const {
  if (nodes_.empty()) return std::nullopt;
  Vec3 inv{safe_inv(direction.x), safe_inv(direction.y), safe_inv(direction.z)};
  double best = tmax;
  int best_facet = -1;
  int stack[64];
  int top = 0;
  stack[top++] = 0;
  while (top > 0) {
    const BvhNode& node = nodes_[stack[--top]];
    if (!aabb_hit(node.box, origin, inv, kRayEpsilon, best)) continue;
    if (node.left < 0) {
      for (int i = node.first; i < node.first + node.count; ++i) {
        int fid = order_[i];
        if (fid == skip) continue;
        double t = intersect_facet(facets_[fid], origin, direction, kRayEpsilon, best);
        if (t > 0.0) {
          best = t;
          best_facet = fid;
        }
      }
    } else {
      stack[top++] = node.left;
      stack[top++] = node.right;
    }
  }
  if (best_facet < 0) return std::nullopt;
  return RayHit{best_facet, best, origin + direction * best};
}

bool Scene::segment_clear(const Vec3& p, const Vec3& q) const {
  if (nodes_.empty()) return true;
  Vec3 d = q - p;
  double len = norm(d);
  if (len < 1e-15) return true;
  Vec3 dir = d / len;
  // Endpoint epsilon: interaction points lying on facets must not occlude.
  double tmin = kRayEpsilon;
  double tmax = len - kRayEpsilon;
  if (tmax <= tmin) return true;
  Vec3 inv{safe_inv(dir.x), safe_inv(dir.y), safe_inv(dir.z)};
  int stack[64];
  int top = 0;
  stack[top++] = 0;
  while (top > 0) {
    const BvhNode& node = nodes_[stack[--top]];
    if (!aabb_hit(node.box, p, inv, tmin, tmax)) continue;
    if (node.left < 0) {
      for (int i = node.first; i < node.first + node.count; ++i) {
        if (intersect_facet(facets_[order_[i]], p, dir, tmin, tmax) > 0.0) return false;
      }
    } else {
      stack[top++] = node.left;
      stack[top++] = node.right;
    }
  }
  return true;
}

bool Scene::point_inside_solid(const Vec3& p) const {
  for (const Aabb& b : solids_)
    if (b.contains_strict(p)) return true;
  return false;
}

void Scene::query_halfspaces(std::span<const Halfspace> planes,
                             std::vector<int>& out) const {
  out.clear();
  if (nodes_.empty()) return;
  auto outside = [&](const Aabb& box) {
    for (const Halfspace& h : planes) {
      // Most-inside corner of the box for this half-space.
      Vec3 c{h.normal.x >= 0 ? box.lo.x : box.hi.x, h.normal.y >= 0 ? box.lo.y : box.hi.y,
             h.normal.z >= 0 ? box.lo.z : box.hi.z};
      if (dot(h.normal, c) > h.offset) return true;
    }
    return false;
  };
  int stack[64];
  int top = 0;
  stack[top++] = 0;
  while (top > 0) {
    const BvhNode& node = nodes_[stack[--top]];
    if (outside(node.box)) continue;
    if (node.left < 0) {
      for (int i = node.first; i < node.first + node.count; ++i) {
        int fid = order_[i];
        if (!outside(facets_[fid].bounds())) out.push_back(fid);
      }
    } else {
      stack[top++] = node.left;
      stack[top++] = node.right;
    }
  }
  std::sort(out.begin(), out.end());
}

std::vector<Facet> make_box_facets(const Aabb& box, int material,
                                   const std::array<bool, 6>& skip) {
  const Vec3& l = box.lo;
  const Vec3& h = box.hi;
  auto quad = [&](Vec3 a, Vec3 b, Vec3 c, Vec3 d, Vec3 n) {
    return Facet{{a, b, c, d}, n, material};
  };
  std::vector<Facet> out;
  out.reserve(6);
  if (!skip[0])
    out.push_back(quad({l.x, l.y, l.z}, {l.x, l.y, h.z}, {l.x, h.y, h.z}, {l.x, h.y, l.z},
                       {-1, 0, 0}));
  if (!skip[1])
    out.push_back(quad({h.x, l.y, l.z}, {h.x, h.y, l.z}, {h.x, h.y, h.z}, {h.x, l.y, h.z},
                       {1, 0, 0}));
  if (!skip[2])
    out.push_back(quad({l.x, l.y, l.z}, {h.x, l.y, l.z}, {h.x, l.y, h.z}, {l.x, l.y, h.z},
                       {0, -1, 0}));
  if (!skip[3])
    out.push_back(quad({l.x, h.y, l.z}, {l.x, h.y, h.z}, {h.x, h.y, h.z}, {h.x, h.y, l.z},
                       {0, 1, 0}));
  if (!skip[4])
    out.push_back(quad({l.x, l.y, l.z}, {l.x, h.y, l.z}, {h.x, h.y, l.z}, {h.x, l.y, l.z},
                       {0, 0, -1}));
  if (!skip[5])
    out.push_back(quad({l.x, l.y, h.z}, {h.x, l.y, h.z}, {h.x, h.y, h.z}, {l.x, h.y, h.z},
                       {0, 0, 1}));
  return out;
}

WedgeEdge make_wedgeedge_impl(const std::vector<Facet>& facets, int face_a, int face_b,
                              const Vec3& p0, const Vec3& p1) {
  const Facet& fa = facets[face_a];
  const Facet& fb = facets[face_b];
  for (const Facet* f : {&fa, &fb}) {
    Plane pl = f->plane();
    if (std::abs(pl.signed_distance(p0)) > 1e-9 || std::abs(pl.signed_distance(p1)) > 1e-9)
      throw std::invalid_argument("edge endpoints not on both faces");
  }
  double cosnn = std::clamp(dot(fa.unit_normal, fb.unit_normal), -1.0, 1.0);
  double interior = kPi - std::acos(cosnn);
  double n = 2.0 - interior / kPi;
  if (!(n > 1.0 && n <= 2.0))
    throw std::invalid_argument("edge between faces is not a convex wedge");

  WedgeEdge e;
  e.p0 = p0;
  e.p1 = p1;
  e.face_a = face_a;
  e.face_b = face_b;
  e.wedge_index_n = n;
  e.normal_a = fa.unit_normal;
  Vec3 dir = normalized(p1 - p0);

  // tangent_a: toward face_a's interior, perpendicular to the edge.
  Vec3 mid = (p0 + p1) * 0.5;
  Vec3 ta = polygon_centroid(fa.vertices) - mid;
  ta = ta - dot(ta, dir) * dir;
  if (norm(ta) < 1e-12) throw std::invalid_argument("degenerate face_a tangent");
  ta = normalized(ta);

  // Orient the edge so that cross(edge_dir, tangent_a) == normal_a, which
  // places the exterior sweep 0..n*pi on the air side.
  if (dot(cross(dir, ta), fa.unit_normal) < 0.0) dir = -dir;
  e.edge_dir = dir;
  e.tangent_a = ta;

  Vec3 tb = polygon_centroid(fb.vertices) - mid;
  tb = tb - dot(tb, dir) * dir;
  if (norm(tb) < 1e-12) throw std::invalid_argument("degenerate face_b tangent");
  tb = normalized(tb);
  double phi_b = e.exterior_angle(tb);
  if (std::abs(phi_b - n * kPi) > 1e-6)
    throw std::invalid_argument("face_b does not sit at the exterior wedge limit");
  return e;
}

WedgeEdge make_wedge_edge(const std::vector<Facet>& facets, int face_a, int face_b,
                          const Vec3& p0, const Vec3& p1) {
  return make_wedgeedge_impl(facets, face_a, face_b, p0, p1);
}

}  // namespace warewave
