// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 warewave contributors

#pragma once

#include <optional>
#include <string>

namespace warewave {

// Surface/bulk material of a facet. For PEC the permittivity and
// conductivity fields are ignored by every kernel.
struct Material {
  std::string name;
  double relative_permittivity = 1.0;  // dimensionless, >= 1
  double conductivity = 0.0;           // S/m, >= 0
  bool is_pec = false;
  double roughness_rms = 0.0;          // m, >= 0; 0 means a perfectly smooth face

  bool operator==(const Material& o) const = default;
};

// Built-in presets: "pec", "olive_oil", "coca_cola", "concrete_default", "air".
std::optional<Material> material_preset(const std::string& name);

}  // namespace warewave
