/*
   Copyright 2026 The symdisc developers

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <ostream>
#include <thread>
#include <vector>

#include "symdisc/numerics.hpp"
#include "symdisc/point.hpp"
#include "symdisc/polydisc.hpp"

namespace symdisc {

/// One free grid axis: which flat coordinate (0-based index into
/// (s_1, ..., s_{n-1}, p)) and which part of it varies.
struct AxisSel {
  int coord = 0;
  bool imag = false;
};

struct AxisRange {
  double min = 0.0;
  double max = 0.0;
  int steps = 2;
};

/// A 2D slice of the n-dimensional coordinate space: two free axes swept
/// over linear ranges, every other coordinate part held at fixed values.
struct GridSpec {
  int n = 2;
  AxisSel axis1, axis2;
  AxisRange range1, range2;
  std::vector<cplx> fixed;  // full flat coordinate vector; swept parts ignored

  void validate() const {
    if (n < 1 || n > 4) throw input_error("GridSpec: require 1 <= n <= 4");
    if (static_cast<int>(fixed.size()) != n)
      throw input_error("GridSpec: fixed coordinate list must have n entries");
    for (const cplx& c : fixed) require_finite(c, "GridSpec");
    for (const AxisRange& r : {range1, range2}) {
      if (r.steps < 2) throw input_error("GridSpec: steps must be at least 2");
      require_finite(r.min, "GridSpec range");
      require_finite(r.max, "GridSpec range");
    }
    for (const AxisSel& a : {axis1, axis2})
      if (a.coord < 0 || a.coord >= n) throw input_error("GridSpec: axis coordinate out of range");
    if (axis1.coord == axis2.coord && axis1.imag == axis2.imag)
      throw input_error("GridSpec: the two free axes must be distinct");
  }
};

/// Row-major region codes: rows follow axis1 (outer), columns axis2
/// (inner), both from min to max.
struct GridResult {
  int rows = 0;
  int cols = 0;
  std::vector<int> codes;
  int cell_failures = 0;  // cells where classification errored (emitted as code 4)

  int at(int i, int j) const { return codes[static_cast<std::size_t>(i) * cols + j]; }
};

inline GridResult rasterize(const GridSpec& spec, const ToleranceConfig& cfg, int jobs = 1) {
  spec.validate();
  cfg.validate();
  if (jobs < 1) throw input_error("rasterize: jobs must be at least 1");
  GridResult out;
  out.rows = spec.range1.steps;
  out.cols = spec.range2.steps;
  out.codes.assign(static_cast<std::size_t>(out.rows) * out.cols, 0);

  const auto axis_value = [](const AxisRange& r, int idx) {
    return r.min + (r.max - r.min) * static_cast<double>(idx) / (r.steps - 1);
  };
  std::vector<int> failures(static_cast<std::size_t>(jobs), 0);
  const auto run_rows = [&](int worker, int row_begin, int row_end) {
    std::vector<cplx> coords(spec.fixed);
    for (int i = row_begin; i < row_end; ++i) {
      const double v1 = axis_value(spec.range1, i);
      for (int j = 0; j < out.cols; ++j) {
        const double v2 = axis_value(spec.range2, j);
        coords = spec.fixed;
        auto& c1 = coords[static_cast<std::size_t>(spec.axis1.coord)];
        c1 = spec.axis1.imag ? cplx(c1.real(), v1) : cplx(v1, c1.imag());
        auto& c2 = coords[static_cast<std::size_t>(spec.axis2.coord)];
        c2 = spec.axis2.imag ? cplx(c2.real(), v2) : cplx(v2, c2.imag());
        int code;
        try {
          code = region_code(in_gamma_recursive(SymPoint::from_coords(coords), cfg).region);
        } catch (const error&) {
          code = region_code(Region::ToleranceBand);
          ++failures[static_cast<std::size_t>(worker)];
        }
        out.codes[static_cast<std::size_t>(i) * out.cols + j] = code;
      }
    }
  };

  if (jobs == 1 || out.rows == 1) {
    run_rows(0, 0, out.rows);
  } else {
    const int workers = std::min(jobs, out.rows);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const int chunk = (out.rows + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      const int b = w * chunk;
      const int e = std::min(out.rows, b + chunk);
      if (b >= e) break;
      pool.emplace_back(run_rows, w, b, e);
    }
    for (auto& t : pool) t.join();
  }
  for (int f : failures) out.cell_failures += f;
  return out;
}

inline void write_grid_csv(const GridResult& g, std::ostream& os) {
  for (int i = 0; i < g.rows; ++i) {
    for (int j = 0; j < g.cols; ++j) {
      if (j) os << ',';
      os << g.at(i, j);
    }
    os << '\n';
  }
}

/// Binary portable graymap; codes map to gray levels
/// 0->255, 1->128, 2->64, 3->0, 4->192.
inline void write_grid_pgm(const GridResult& g, std::ostream& os) {
  static constexpr unsigned char kGray[5] = {255, 128, 64, 0, 192};
  os << "P5\n" << g.cols << ' ' << g.rows << "\n255\n";
  for (int i = 0; i < g.rows; ++i)
    for (int j = 0; j < g.cols; ++j) {
      const int c = g.at(i, j);
      const unsigned char px = (c >= 0 && c <= 4) ? kGray[c] : 192;
      os.put(static_cast<char>(px));
    }
}

}  // namespace symdisc
