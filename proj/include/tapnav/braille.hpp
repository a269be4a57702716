// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <set>

#include "tapnav/geometry.hpp"

namespace tapnav {

/// One six-dot Braille cell. Dots 1-3 run down the left column, 4-6 down
/// the right column.
struct BrailleGlyph {
  char letter = 'a';
  std::set<int> dots;
  double cell_width_mm = 3.78;
  double cell_height_mm = 6.12;

  friend bool operator==(const BrailleGlyph&, const BrailleGlyph&) = default;
};

inline constexpr double kBrailleDotDiameterMm = 1.5;

/// Standard literary encoding of a lowercase Latin letter. Throws DomainError
/// for anything outside a-z.
BrailleGlyph braille_glyph(char letter);

/// Center of dot `dot` (1-6) in a cell centered on `cell_center`.
Point braille_dot_center(const BrailleGlyph& glyph, int dot, Point cell_center);

}  // namespace tapnav
