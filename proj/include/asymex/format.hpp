// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

namespace asymex {

/// printf("%.12g"), with "inf" / "-inf" / "nan" spelled out.
std::string format_double(double x);

/// x rounded to 12 significant digits (the value format_double prints).
double round12(double x);

}  // namespace asymex
