// Copyright 2026 The ctpower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdio>
#include <string>

namespace ctpower {

/// Shortest-form "%.<sig>g" rendering; 17 digits round-trips any double.
inline std::string format_number(double x, int significant_digits = 17) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, x);
    std::string s(buf);
    if (s == "-0") s = "0";
    return s;
}

}  // namespace ctpower
