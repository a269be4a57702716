// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace tapnav {

/// Thrown when an operation is called with arguments outside its domain:
/// a point off the screen, an index outside the grid, a scenario that does
/// not fit the overlay, and similar precondition failures.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace tapnav
