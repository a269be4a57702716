// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "tapnav/overlay.hpp"

namespace tapnav {

/// Fabrication template in physical units. The document is screen-sized
/// with a millimeter viewBox. Cutout styles produce closed cut paths in the
/// "cut" layer plus quadrant divider slots; Braille and bump styles produce
/// dot circles in the "emboss" layer. Every marker is a group tagged with
/// data-axis and data-index. Coordinates are written to 0.01 mm and the
/// output is byte-stable. Throws DomainError for an invalid overlay.
std::string export_overlay_svg(const OverlayConfig& overlay);

}  // namespace tapnav
