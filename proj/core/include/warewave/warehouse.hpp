// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 warewave contributors

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "warewave/scene.hpp"

namespace warewave {

struct InvalidSpec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct PackingFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parametric description of the stratified-rack warehouse. Racks are grouped
// into clusters laid along the x axis and separated by corridors; each rack
// stacks layer_count layers of (PEC plate, item slab, air gap).
struct WarehouseSpec {
  double area_x = 22.0;
  double area_y = 8.0;
  int cluster_count = 4;
  int racks_per_cluster = 7;
  double corridor_width = 1.5;
  double inter_rack_gap = 0.05;
  double plate_thickness = 0.02;
  double layer_air_gap = 0.10;
  int layer_count = 4;
  double rack_footprint_x = 1.2;
  double rack_footprint_y = 0.8;
  double layer_pitch = 0.5;
  Material item_material = Material{"air", 1.0, 0.0, false, 0.0};
  Material floor_material = Material{"concrete_default", 5.31, 0.1, false, 0.0};
  double rack_roughness = 0.05;  // RMS height deviation applied to rack faces
  uint64_t rng_seed = 42;

  // Clusters are inset 1 m from the y walls ("perimeter aisle").
  static constexpr double kClusterInsetY = 1.0;
  // Placement retry budget per rack before PackingFailed.
  static constexpr int kPlacementAttempts = 10000;

  double item_height() const { return layer_pitch - plate_thickness - layer_air_gap; }
  bool racks_empty() const { return item_material.name == "air"; }
  double rack_height() const { return layer_count * layer_pitch; }

  bool operator==(const WarehouseSpec& o) const = default;
};

struct Rect2 {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double cx() const { return 0.5 * (x0 + x1); }
  double cy() const { return 0.5 * (y0 + y1); }
  bool operator==(const Rect2& o) const = default;
};

struct RackPlacement {
  int cluster = 0;
  Rect2 footprint;
  bool operator==(const RackPlacement& o) const = default;
};

struct WarehouseLayout {
  std::vector<Rect2> cluster_rects;
  std::vector<RackPlacement> racks;
  bool operator==(const WarehouseLayout& o) const = default;
};

// Placement rectangle of one cluster (clusters indexed 0..cluster_count-1).
Rect2 cluster_rect(const WarehouseSpec& spec, int cluster);

// Seeded rejection-sampled rack placement. Deterministic in spec.
WarehouseLayout plan_warehouse(const WarehouseSpec& spec);

// Facets + wedge edges + solids for a planned layout.
Scene build_warehouse_scene(const WarehouseSpec& spec, const WarehouseLayout& layout);

// plan + build in one step; bit-identical output for identical specs.
Scene generate_warehouse(const WarehouseSpec& spec);

// Corridor mask: the inter-cluster corridor strips plus a 0.5 m band along
// the warehouse perimeter. Matches the aisles humans walk in.
bool in_corridor_mask(const WarehouseSpec& spec, double x, double y);

}  // namespace warewave
