// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 warewave contributors

#include "warewave/warehouse.hpp"

#include <cmath>

#include "warewave/rng.hpp"

namespace warewave {

namespace {

void check_spec(const WarehouseSpec& s) {
  if (s.area_x <= 0 || s.area_y <= 0) throw InvalidSpec("warehouse area must be positive");
  if (s.cluster_count < 0 || s.racks_per_cluster < 0)
    throw InvalidSpec("cluster/rack counts must be non-negative");
  if (s.cluster_count > 0 && s.racks_per_cluster > 0) {
    if (s.corridor_width < 0 || s.inter_rack_gap < 0)
      throw InvalidSpec("corridor width and rack gap must be non-negative");
    if (s.plate_thickness <= 0 || s.layer_pitch <= 0 || s.layer_count <= 0)
      throw InvalidSpec("rack layer dimensions must be positive");
    if (s.rack_footprint_x <= 0 || s.rack_footprint_y <= 0)
      throw InvalidSpec("rack footprint must be positive");
    if (s.item_height() <= 0 && !s.racks_empty())
      throw InvalidSpec("layer pitch leaves no room for the item slab");
    if (s.layer_air_gap < 0) throw InvalidSpec("air gap must be non-negative");
    double total_corridor = (s.cluster_count - 1) * s.corridor_width;
    double cw = (s.area_x - total_corridor) / s.cluster_count;
    double ch = s.area_y - 2.0 * WarehouseSpec::kClusterInsetY;
    if (cw < s.rack_footprint_x || ch < s.rack_footprint_y)
      throw InvalidSpec("cluster rectangles too small for the rack footprint");
  }
}

double rect_clearance(const Rect2& a, const Rect2& b) {
  double dx = std::max({0.0, b.x0 - a.x1, a.x0 - b.x1});
  double dy = std::max({0.0, b.y0 - a.y1, a.y0 - b.y1});
  return std::hypot(dx, dy);
}

// Wedge edges of one plate box. `ids` are scene facet indices of the box
// faces in make_box_facets order (-1 where the face was skipped).
void add_plate_edges(const std::vector<Facet>& facets, const Aabb& box,
                     const std::array<int, 6>& ids, std::vector<WedgeEdge>& edges) {
  const Vec3& l = box.lo;
  const Vec3& h = box.hi;
  auto add = [&](int fa, int fb, Vec3 a, Vec3 b) {
    if (fa >= 0 && fb >= 0) edges.push_back(make_wedge_edge(facets, fa, fb, a, b));
  };
  // Bottom ring (face 4 with each side).
  add(ids[4], ids[0], {l.x, l.y, l.z}, {l.x, h.y, l.z});
  add(ids[4], ids[1], {h.x, l.y, l.z}, {h.x, h.y, l.z});
  add(ids[4], ids[2], {l.x, l.y, l.z}, {h.x, l.y, l.z});
  add(ids[4], ids[3], {l.x, h.y, l.z}, {h.x, h.y, l.z});
  // Top ring (face 5 with each side).
  add(ids[5], ids[0], {l.x, l.y, h.z}, {l.x, h.y, h.z});
  add(ids[5], ids[1], {h.x, l.y, h.z}, {h.x, h.y, h.z});
  add(ids[5], ids[2], {l.x, l.y, h.z}, {h.x, l.y, h.z});
  add(ids[5], ids[3], {l.x, h.y, h.z}, {h.x, h.y, h.z});
  // Vertical edges (side-side pairs).
  add(ids[0], ids[2], {l.x, l.y, l.z}, {l.x, l.y, h.z});
  add(ids[2], ids[1], {h.x, l.y, l.z}, {h.x, l.y, h.z});
  add(ids[1], ids[3], {h.x, h.y, l.z}, {h.x, h.y, h.z});
  add(ids[3], ids[0], {l.x, h.y, l.z}, {l.x, h.y, h.z});
}

}  // namespace

Rect2 cluster_rect(const WarehouseSpec& spec, int cluster) {
  double total_corridor = (spec.cluster_count - 1) * spec.corridor_width;
  double cw = (spec.area_x - total_corridor) / spec.cluster_count;
  double x0 = cluster * (cw + spec.corridor_width);
  double y0 = WarehouseSpec::kClusterInsetY;
  return Rect2{x0, y0, x0 + cw, spec.area_y - WarehouseSpec::kClusterInsetY};
}

WarehouseLayout plan_warehouse(const WarehouseSpec& spec) {
  check_spec(spec);
  WarehouseLayout layout;
  if (spec.cluster_count == 0 || spec.racks_per_cluster == 0) return layout;
  SplitMix64 rng(spec.rng_seed);
  for (int c = 0; c < spec.cluster_count; ++c)
    layout.cluster_rects.push_back(cluster_rect(spec, c));
  for (int c = 0; c < spec.cluster_count; ++c) {
    const Rect2& cr = layout.cluster_rects[c];
    for (int r = 0; r < spec.racks_per_cluster; ++r) {
      bool placed = false;
      for (int attempt = 0; attempt < WarehouseSpec::kPlacementAttempts; ++attempt) {
        double x0 = rng.uniform(cr.x0, cr.x1 - spec.rack_footprint_x);
        double y0 = rng.uniform(cr.y0, cr.y1 - spec.rack_footprint_y);
        Rect2 fp{x0, y0, x0 + spec.rack_footprint_x, y0 + spec.rack_footprint_y};
        bool ok = true;
        for (const RackPlacement& other : layout.racks) {
          if (rect_clearance(fp, other.footprint) < spec.inter_rack_gap) {
            ok = false;
            break;
          }
        }
        if (ok) {
          layout.racks.push_back(RackPlacement{c, fp});
          placed = true;
          break;
        }
      }
      if (!placed)
        throw PackingFailed("could not place rack " + std::to_string(r) + " of cluster " +
                            std::to_string(c));
    }
  }
  return layout;
}

Scene build_warehouse_scene(const WarehouseSpec& spec, const WarehouseLayout& layout) {
  check_spec(spec);
  Material plate_mat{"pec", 1.0, 0.0, true, spec.rack_roughness};
  Material item_mat = spec.item_material;
  item_mat.roughness_rms = spec.rack_roughness;

  std::vector<Material> materials{spec.floor_material, plate_mat, item_mat};
  std::vector<Facet> facets;
  std::vector<WedgeEdge> edges;
  std::vector<Aabb> solids;

  // Floor.
  Facet floor;
  floor.vertices = {{0, 0, 0}, {spec.area_x, 0, 0}, {spec.area_x, spec.area_y, 0},
                    {0, spec.area_y, 0}};
  floor.unit_normal = {0, 0, 1};
  floor.material = 0;
  facets.push_back(floor);

  const bool with_items = !spec.racks_empty();
  for (const RackPlacement& rp : layout.racks) {
    const Rect2& fp = rp.footprint;
    for (int layer = 0; layer < spec.layer_count; ++layer) {
      double z0 = layer * spec.layer_pitch;
      Aabb plate;
      plate.expand({fp.x0, fp.y0, z0});
      plate.expand({fp.x1, fp.y1, z0 + spec.plate_thickness});
      // Bottom face flush with the floor is dropped; top face is covered by
      // the item slab when one is present.
      std::array<bool, 6> skip{};
      skip[4] = (layer == 0);
      skip[5] = with_items;
      std::vector<Facet> pf = make_box_facets(plate, 1, skip);
      std::array<int, 6> ids;
      ids.fill(-1);
      int next = static_cast<int>(facets.size());
      for (int face = 0, k = 0; face < 6; ++face) {
        if (!skip[face]) ids[face] = next + k++;
      }
      facets.insert(facets.end(), pf.begin(), pf.end());
      add_plate_edges(facets, plate, ids, edges);
      solids.push_back(plate);

      if (with_items) {
        Aabb slab;
        slab.expand({fp.x0, fp.y0, z0 + spec.plate_thickness});
        slab.expand({fp.x1, fp.y1, z0 + spec.layer_pitch - spec.layer_air_gap});
        std::array<bool, 6> sskip{};
        sskip[4] = true;  // rests on the plate
        std::vector<Facet> sf = make_box_facets(slab, 2, sskip);
        facets.insert(facets.end(), sf.begin(), sf.end());
        solids.push_back(slab);
      }
    }
  }
  return Scene(std::move(facets), std::move(edges), std::move(materials),
               std::move(solids));
}

Scene generate_warehouse(const WarehouseSpec& spec) {
  return build_warehouse_scene(spec, plan_warehouse(spec));
}

bool in_corridor_mask(const WarehouseSpec& spec, double x, double y) {
  if (x < 0 || x > spec.area_x || y < 0 || y > spec.area_y) return false;
  constexpr double margin = 0.5;
  if (x <= margin || x >= spec.area_x - margin) return true;
  if (y <= margin || y >= spec.area_y - margin) return true;
  for (int c = 0; c + 1 < spec.cluster_count; ++c) {
    double cx1 = cluster_rect(spec, c).x1;
    if (x >= cx1 && x <= cx1 + spec.corridor_width) return true;
  }
  return false;
}

}  // namespace warewave
