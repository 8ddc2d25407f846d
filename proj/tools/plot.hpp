// SPDX-License-Identifier: Apache-2.0
//
// me-ris: rate optimization toolkit for movable-element RIS links
// Copyright (C) 2026 The me-ris authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "meris/harness.hpp"

namespace meris::cli
{

struct PlotSeries
{
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotData
{
    std::string x_label;
    std::string y_label;
    std::vector<PlotSeries> series;

    bool empty() const;
};

struct AxisRange
{
    double lo = 0.0;
    double hi = 1.0;
};

/// One series per method (per method and (M, N) for convergence runs).
PlotData plot_data(const ExperimentResult &result);

/// Data extent padded by 5% of the span on each side.
AxisRange padded_range(const std::vector<double> &values);

/// Self-contained SVG document, or nullopt when there is nothing to draw.
std::optional<std::string> render_svg(const PlotData &data);

} // namespace meris::cli
