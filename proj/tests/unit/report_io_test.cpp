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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

#include "ctpower/format.hpp"
#include "ctpower/report_io.hpp"
#include "gen.hpp"

using namespace ctpower;
using ctpower::testing::Gen;

TEST(FormatNumber, Digits) {
    EXPECT_EQ(format_number(0.1), "0.10000000000000001");
    EXPECT_EQ(format_number(2.0 / 3.0, 6), "0.666667");
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(1.0), "1");
}

TEST(FormatNumber, PropertyRoundTrip) {
    Gen g(60);
    for (int i = 0; i < 1000; ++i) {
        const double x = g.gaussian() * std::pow(10.0, g.uniform(-20, 20));
        EXPECT_EQ(std::strtod(format_number(x).c_str(), nullptr), x);
    }
}

TEST(Csv, Escaping) {
    EXPECT_EQ(csv_escape("plain"), "plain");
    EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(csv_escape("two\nlines"), "\"two\nlines\"");
}

TEST(Csv, MetadataAndRows) {
    Table t;
    t.columns = {"x", "label", "ok"};
    t.add_row({0.5, std::string("a,b"), true});
    RunMetadata meta;
    meta.command_line = "ctpower avg --channel ghz";
    meta.seed = 42;
    EXPECT_EQ(to_csv(t, meta),
              "# tool: ctpower 1.0.0\r\n# command: ctpower avg --channel ghz\r\n# seed: 42\r\n"
              "x,label,ok\r\n0.5,\"a,b\",true\r\n");
}

TEST(Table, RowWidthChecked) {
    Table t;
    t.columns = {"a", "b"};
    EXPECT_THROW(t.add_row({1.0}), DimensionError);
}

TEST(Pretty, Aligned) {
    Table t;
    t.columns = {"name", "v"};
    t.add_row({std::string("long-name"), 1.0 / 3.0});
    EXPECT_EQ(to_pretty(t), "name       v\nlong-name  0.333333\n");
}

TEST(Json, PowerReport) {
    const auto rep = power_report(ChannelSpec::maximal_slice(0.6, 0.8), Quadrature{});
    const auto j = to_json(rep);
    EXPECT_EQ(j["channel"], "ms");
    EXPECT_EQ(j["domain"], "sphere");
    EXPECT_NEAR(j["f_bar"].get<double>(), 2.0 / 3.0 + 0.8 / 3.0, 1e-9);
    EXPECT_NEAR(j["params"]["c"].get<double>(), 0.6, 1e-15);
}

TEST(Json, TableRowsKeepColumnOrder) {
    Table t;
    t.columns = {"z", "a"};
    t.add_row({1.0, std::int64_t{2}});
    EXPECT_EQ(to_json(t).dump(), R"([{"z":1.0,"a":2}])");
}
