// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#include "tapnav/braille.hpp"

#include <array>
#include <string>

#include "tapnav/errors.hpp"

namespace tapnav {

namespace {

// Dot patterns for a-z as bitmasks, bit (d-1) set for dot d.
constexpr std::array<unsigned, 26> kLetters = {
    0b000001, 0b000011, 0b001001, 0b011001, 0b010001, 0b001011, 0b011011, 0b010011, 0b001010,
    0b011010, 0b000101, 0b000111, 0b001101, 0b011101, 0b010101, 0b001111, 0b011111, 0b010111,
    0b001110, 0b011110, 0b100101, 0b100111, 0b111010, 0b101101, 0b111101, 0b110101,
};

}  // namespace

BrailleGlyph braille_glyph(char letter) {
  if (letter < 'a' || letter > 'z') throw DomainError(std::string("no Braille letter for '") + letter + "'");
  BrailleGlyph g;
  g.letter = letter;
  const unsigned mask = kLetters[static_cast<std::size_t>(letter - 'a')];
  for (int d = 1; d <= 6; ++d) {
    if (mask & (1u << (d - 1))) g.dots.insert(d);
  }
  return g;
}

Point braille_dot_center(const BrailleGlyph& glyph, int dot, Point cell_center) {
  if (dot < 1 || dot > 6) throw DomainError("Braille dot ordinal must be 1-6");
  const double r = kBrailleDotDiameterMm / 2.0;
  // Dots touch the cell outline on the outer side.
  const double dx = glyph.cell_width_mm / 2.0 - r;
  const double dy = glyph.cell_height_mm / 2.0 - r;
  const int row = (dot - 1) % 3;
  const double x = cell_center.x + (dot <= 3 ? -dx : dx);
  const double y = cell_center.y + (row - 1) * dy;
  return {x, y};
}

}  // namespace tapnav
