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
#include "plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace meris::cli
{

namespace
{

constexpr double width = 640.0;
constexpr double height = 420.0;
constexpr double left = 70.0;
constexpr double right = 20.0;
constexpr double top = 20.0;
constexpr double bottom = 55.0;

constexpr const char *palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string num(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

std::string escape(const std::string &s)
{
    std::string out;
    for (char c : s)
        switch (c)
        {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    return out;
}

} // namespace

bool PlotData::empty() const
{
    return std::all_of(series.begin(), series.end(), [](const PlotSeries &s) { return s.x.empty(); });
}

PlotData plot_data(const ExperimentResult &result)
{
    PlotData data;
    data.y_label = "Rate (bit/s/Hz)";
    switch (result.kind)
    {
    case ExperimentKind::single_run:
    {
        data.x_label = "Iteration";
        PlotSeries s{"rate", {}, {}};
        for (const auto &p : result.single_trace)
        {
            s.x.push_back(p.iteration);
            s.y.push_back(p.rate);
        }
        data.series.push_back(std::move(s));
        break;
    }
    case ExperimentKind::convergence:
    {
        data.x_label = "Iteration";
        std::map<std::string, std::size_t> index;
        for (const auto &r : result.convergence)
        {
            const std::string name =
                std::string(to_string(r.method)) + " M=" + std::to_string(r.m) + " N=" + std::to_string(r.n);
            auto [it, inserted] = index.try_emplace(name, data.series.size());
            if (inserted)
                data.series.push_back({name, {}, {}});
            data.series[it->second].x.push_back(r.iter);
            data.series[it->second].y.push_back(r.rate);
        }
        break;
    }
    case ExperimentKind::sweep_region:
    case ExperimentKind::sweep_power:
    {
        data.x_label = result.kind == ExperimentKind::sweep_region ? "A / lambda" : "P_max (dBm)";
        std::map<Method, std::size_t> index;
        for (const auto &r : result.rows)
        {
            auto [it, inserted] = index.try_emplace(r.method, data.series.size());
            if (inserted)
                data.series.push_back({std::string(to_string(r.method)), {}, {}});
            data.series[it->second].x.push_back(r.grid_value);
            data.series[it->second].y.push_back(r.mean_rate);
        }
        break;
    }
    }
    return data;
}

AxisRange padded_range(const std::vector<double> &values)
{
    if (values.empty())
        return {};
    const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
    double lo = *lo_it, hi = *hi_it;
    double span = hi - lo;
    if (span <= 0.0)
        span = std::max(std::abs(hi), 1.0);
    return {lo - 0.05 * span, hi + 0.05 * span};
}

std::optional<std::string> render_svg(const PlotData &data)
{
    if (data.empty())
        return std::nullopt;

    std::vector<double> xs, ys;
    for (const auto &s : data.series)
    {
        xs.insert(xs.end(), s.x.begin(), s.x.end());
        ys.insert(ys.end(), s.y.begin(), s.y.end());
    }
    const AxisRange xr = padded_range(xs);
    const AxisRange yr = padded_range(ys);
    const double pw = width - left - right;
    const double ph = height - top - bottom;
    auto px = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
    auto py = [&](double y) { return top + (yr.hi - y) / (yr.hi - yr.lo) * ph; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<rect class=\"frame\" x=\"" << left << "\" y=\"" << top << "\" width=\"" << pw << "\" height=\"" << ph
        << "\" fill=\"none\" stroke=\"black\"/>\n";

    constexpr int ticks = 5;
    for (int i = 0; i <= ticks; ++i)
    {
        const double xv = xr.lo + (xr.hi - xr.lo) * i / ticks;
        const double yv = yr.lo + (yr.hi - yr.lo) * i / ticks;
        svg << "<line x1=\"" << px(xv) << "\" y1=\"" << top + ph << "\" x2=\"" << px(xv) << "\" y2=\""
            << top + ph + 5 << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << px(xv) << "\" y=\"" << top + ph + 18 << "\" text-anchor=\"middle\">" << num(xv)
            << "</text>\n";
        svg << "<line x1=\"" << left - 5 << "\" y1=\"" << py(yv) << "\" x2=\"" << left << "\" y2=\"" << py(yv)
            << "\" stroke=\"black\"/>\n";
        svg << "<text x=\"" << left - 8 << "\" y=\"" << py(yv) + 4 << "\" text-anchor=\"end\">" << num(yv)
            << "</text>\n";
    }
    svg << "<text class=\"xlabel\" x=\"" << left + pw / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\">" << escape(data.x_label) << "</text>\n";
    svg << "<text class=\"ylabel\" x=\"16\" y=\"" << top + ph / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << top + ph / 2 << ")\">" << escape(data.y_label) << "</text>\n";

    for (std::size_t s = 0; s < data.series.size(); ++s)
    {
        const auto &series = data.series[s];
        const char *color = palette[s % std::size(palette)];
        svg << "<polyline class=\"series\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < series.x.size(); ++i)
            svg << (i ? " " : "") << px(series.x[i]) << ',' << py(series.y[i]);
        svg << "\"/>\n";
    }

    const double lx = left + 10, ly = top + 10;
    for (std::size_t s = 0; s < data.series.size(); ++s)
    {
        const char *color = palette[s % std::size(palette)];
        const double y = ly + 16.0 * static_cast<double>(s);
        svg << "<g class=\"legend-entry\"><line x1=\"" << lx << "\" y1=\"" << y << "\" x2=\"" << lx + 20 << "\" y2=\""
            << y << "\" stroke=\"" << color << "\" stroke-width=\"2\"/><text x=\"" << lx + 26 << "\" y=\"" << y + 4
            << "\">" << escape(data.series[s].name) << "</text></g>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace meris::cli
