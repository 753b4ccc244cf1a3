// Copyright 2026 The wignerkit Authors - All rights reserved.
// SPDX-License-Identifier: Apache-2.0

#include "wignerkit/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return wignerkit::cli::run(argc, argv, std::cout, std::cerr); }
