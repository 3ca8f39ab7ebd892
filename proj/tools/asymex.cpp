// SPDX-License-Identifier: Apache-2.0
#include <iostream>

#include "asymex/cli.hpp"

int main(int argc, char** argv) { return asymex::main_entry(argc, argv, std::cout, std::cerr); }
