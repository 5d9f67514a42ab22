// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 warewave contributors

#include "warewave/material.hpp"

namespace warewave {

std::optional<Material> material_preset(const std::string& name) {
  if (name == "pec") return Material{"pec", 1.0, 0.0, true, 0.0};
  if (name == "air") return Material{"air", 1.0, 0.0, false, 0.0};
  if (name == "olive_oil") return Material{"olive_oil", 2.87, 0.0289, false, 0.0};
  if (name == "coca_cola") return Material{"coca_cola", 71.25, 4.1991, false, 0.0};
  if (name == "concrete_default") return Material{"concrete_default", 5.31, 0.1, false, 0.0};
  return std::nullopt;
}

}  // namespace warewave
