// Copyright 2026 The TapNav Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "tapnav/cli.hpp"

int main(int argc, char** argv) {
  tapnav::configure_logging();
  return tapnav::run_cli(argc, argv, std::cout, std::cerr);
}
