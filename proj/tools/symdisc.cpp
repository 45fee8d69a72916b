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

// Command-line front end: classify point files against the symmetrized
// polydisc, emit reduction chains, rasterize 2D membership slices,
// generate sample corpora, and benchmark the classifiers.
//
// Exit codes: 0 success, 1 classify found an anomaly (hard disagreement
// between methods), 2 input or configuration error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "symdisc/symdisc.hpp"

namespace {

using symdisc::cplx;

struct RunConfig {
  symdisc::ToleranceConfig tolerances;
  std::uint64_t seed = 42;
  int jobs = 1;
  std::string format = "json";
};

symdisc::FileFormat file_format(const RunConfig& rc) {
  return rc.format == "csv" ? symdisc::FileFormat::Csv : symdisc::FileFormat::Json;
}

std::vector<symdisc::PointRecord> read_input(const std::string& path) {
  if (path.empty() || path == "-") return symdisc::read_points(std::cin);
  std::ifstream in(path);
  if (!in) throw symdisc::input_error("cannot open input file '" + path + "'");
  return symdisc::read_points(in);
}

class OutputFile {
 public:
  explicit OutputFile(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw symdisc::input_error("cannot open output file '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

symdisc::AxisSel parse_axis(const std::string& text, int n) {
  const auto dot = text.find('.');
  if (dot == std::string::npos)
    throw symdisc::input_error("axis '" + text + "': expected <coord>.<re|im>, e.g. s1.re or p.im");
  const std::string name = text.substr(0, dot);
  const std::string part = text.substr(dot + 1);
  symdisc::AxisSel sel;
  if (part == "re")
    sel.imag = false;
  else if (part == "im")
    sel.imag = true;
  else
    throw symdisc::input_error("axis '" + text + "': part must be re or im");
  if (name == "p") {
    sel.coord = n - 1;
  } else if (name.size() >= 2 && name[0] == 's') {
    int k = 0;
    try {
      k = std::stoi(name.substr(1));
    } catch (const std::exception&) {
      throw symdisc::input_error("axis '" + text + "': bad coordinate name");
    }
    if (k < 1 || k > n - 1)
      throw symdisc::input_error("axis '" + text + "': s index out of range for n");
    sel.coord = k - 1;
  } else {
    throw symdisc::input_error("axis '" + text + "': coordinate must be s<k> or p");
  }
  return sel;
}

symdisc::AxisRange parse_range(const std::string& text) {
  symdisc::AxisRange r;
  std::istringstream is(text);
  std::string a, b, c;
  if (!std::getline(is, a, ':') || !std::getline(is, b, ':') || !std::getline(is, c))
    throw symdisc::input_error("range '" + text + "': expected min:max:steps");
  try {
    r.min = std::stod(a);
    r.max = std::stod(b);
    r.steps = std::stoi(c);
  } catch (const std::exception&) {
    throw symdisc::input_error("range '" + text + "': expected min:max:steps");
  }
  return r;
}

std::vector<cplx> parse_fixed(const std::string& text, int n) {
  std::vector<cplx> out(static_cast<std::size_t>(n), cplx(0.0));
  if (text.empty()) return out;
  std::istringstream is(text);
  std::string item;
  std::size_t idx = 0;
  while (std::getline(is, item, ';')) {
    if (idx >= out.size()) throw symdisc::input_error("fixed: more entries than coordinates");
    const auto comma = item.find(',');
    if (comma == std::string::npos)
      throw symdisc::input_error("fixed entry '" + item + "': expected re,im");
    try {
      out[idx] = cplx(std::stod(item.substr(0, comma)), std::stod(item.substr(comma + 1)));
    } catch (const std::exception&) {
      throw symdisc::input_error("fixed entry '" + item + "': expected re,im");
    }
    ++idx;
  }
  if (idx != out.size())
    throw symdisc::input_error("fixed: expected " + std::to_string(n) + " entries");
  return out;
}

const char* method_cell(const symdisc::ConsensusReport& rep, const char* name) {
  for (const auto& mo : rep.methods) {
    if (std::string_view(mo.method) != name) continue;
    return mo.verdict ? symdisc::to_string(mo.verdict->region) : "error";
  }
  return "skipped";
}

int cmd_classify(const RunConfig& rc, const std::string& input, const std::string& output) {
  const auto records = read_input(input);
  for (const auto& r : records) validate_record(r);

  std::vector<symdisc::ConsensusReport> reports(records.size());
  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      reports[i] = symdisc::classify_consensus(records[i].point(), rc.tolerances);
  };
  const int jobs = std::min<std::size_t>(rc.jobs, std::max<std::size_t>(records.size(), 1));
  if (jobs <= 1) {
    work(0, records.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (records.size() + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
      const std::size_t b = static_cast<std::size_t>(w) * chunk;
      if (b >= records.size()) break;
      pool.emplace_back(work, b, std::min(records.size(), b + chunk));
    }
    for (auto& t : pool) t.join();
  }

  OutputFile out(output);
  bool anomaly = false;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& rep = reports[i];
    anomaly = anomaly || rep.anomaly;
    if (file_format(rc) == symdisc::FileFormat::Json) {
      nlohmann::json j = symdisc::json_consensus(rep);
      j["id"] = records[i].id;
      j["n"] = records[i].n;
      out.stream() << j.dump() << '\n';
    } else {
      std::string maxroot;
      for (const auto& mo : rep.methods)
        if (std::string_view(mo.method) == "oracle" && mo.verdict &&
            mo.verdict->certificate.max_root_modulus)
          maxroot = symdisc::fmt_double(*mo.verdict->certificate.max_root_modulus);
      out.stream() << records[i].id << ',' << records[i].n << ','
                   << (rep.agreed_region ? symdisc::to_string(*rep.agreed_region) : "") << ','
                   << (rep.disagreement ? 1 : 0) << ',' << (rep.anomaly ? 1 : 0) << ','
                   << method_cell(rep, "oracle") << ',' << method_cell(rep, "gamma_recursive")
                   << ',' << method_cell(rep, "gn_recursive") << ','
                   << method_cell(rep, "gn_schur") << ',' << maxroot << '\n';
    }
  }
  return anomaly ? 1 : 0;
}

int cmd_reduce(const RunConfig& rc, const std::string& input, const std::string& output) {
  const auto records = read_input(input);
  OutputFile out(output);
  for (const auto& rec : records) {
    symdisc::SymPoint cur = rec.point();
    std::vector<std::vector<cplx>> chain{cur.coords()};
    std::vector<double> residuals;
    std::string stopped = "complete";
    std::string reason;
    while (cur.n() > 1) {
      std::optional<symdisc::SymPoint> next;
      try {
        next = symdisc::beta_reduce(cur, rc.tolerances);
      } catch (const symdisc::reduction_error& e) {
        stopped = "band";
        reason = e.what();
        break;
      }
      // Residual of the defining identity at this step.
      const symdisc::SymPoint back = symdisc::reconstruct(*next, cur.p());
      double res = 0.0;
      for (int j = 1; j <= cur.n() - 1; ++j) res = std::max(res, std::abs(back.s(j) - cur.s(j)));
      chain.push_back(next->coords());
      residuals.push_back(res);
      cur = std::move(*next);
    }
    if (file_format(rc) == symdisc::FileFormat::Json) {
      nlohmann::json chain_json = nlohmann::json::array();
      for (const auto& lvl : chain) chain_json.push_back(symdisc::json_coords(lvl));
      nlohmann::json j{{"id", rec.id},       {"n", rec.n},        {"chain", chain_json},
                       {"residuals", residuals}, {"stopped", stopped}};
      if (!reason.empty()) j["reason"] = reason;
      out.stream() << j.dump() << '\n';
    } else {
      for (std::size_t step = 0; step < chain.size(); ++step) {
        out.stream() << rec.id << ',' << step << ','
                     << (step == 0 ? std::string() : symdisc::fmt_double(residuals[step - 1]));
        for (const cplx& c : chain[step])
          out.stream() << ',' << symdisc::fmt_double(c.real()) << ','
                       << symdisc::fmt_double(c.imag());
        out.stream() << '\n';
      }
      out.stream() << rec.id << ",stopped," << stopped << '\n';
    }
  }
  return 0;
}

int cmd_grid(const RunConfig& rc, const symdisc::GridSpec& spec, const std::string& output,
             const std::string& pgm) {
  const symdisc::GridResult g = symdisc::rasterize(spec, rc.tolerances, rc.jobs);
  if (g.cell_failures > 0)
    std::cerr << "warning: " << g.cell_failures
              << " cells failed to classify and were emitted as code 4\n";
  OutputFile out(output);
  symdisc::write_grid_csv(g, out.stream());
  if (!pgm.empty()) {
    std::ofstream img(pgm, std::ios::binary);
    if (!img) throw symdisc::input_error("cannot open image file '" + pgm + "'");
    symdisc::write_grid_pgm(g, img);
  }
  return 0;
}

int cmd_sample(const RunConfig& rc, const std::string& kind_name, int n, int count,
               const std::string& output) {
  symdisc::SampleKind kind;
  if (kind_name == "interior")
    kind = symdisc::SampleKind::Interior;
  else if (kind_name == "torus")
    kind = symdisc::SampleKind::Torus;
  else if (kind_name == "exterior")
    kind = symdisc::SampleKind::Exterior;
  else if (kind_name == "uniform-box")
    kind = symdisc::SampleKind::UniformBox;
  else
    throw symdisc::input_error("unknown sample kind '" + kind_name + "'");
  const auto points = symdisc::make_corpus(kind, n, count, rc.seed);
  OutputFile out(output);
  char idbuf[64];
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::snprintf(idbuf, sizeof(idbuf), "%s-%06zu", kind_name.c_str(), i);
    symdisc::PointRecord rec{idbuf, n, points[i].coords()};
    if (file_format(rc) == symdisc::FileFormat::Json)
      symdisc::write_point_json(out.stream(), rec);
    else
      symdisc::write_point_csv(out.stream(), rec);
  }
  return 0;
}

int cmd_bench(const RunConfig& rc, int n_min, int n_max, int count, const std::string& output) {
  if (n_min < 1 || n_max > symdisc::kMaxDegree || n_min > n_max)
    throw symdisc::input_error("bench: need 1 <= n-min <= n-max <= 16");
  if (count < 1) throw symdisc::input_error("bench: count must be at least 1");
  using clock = std::chrono::steady_clock;
  OutputFile out(output);
  const auto median_us = [](std::vector<double>& v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
  };
  nlohmann::json rows = nlohmann::json::array();
  for (int n = n_min; n <= n_max; ++n) {
    const auto corpus = symdisc::make_corpus(symdisc::SampleKind::Interior, n, count, rc.seed);
    std::vector<double> t_rec, t_schur, t_oracle;
    t_rec.reserve(corpus.size());
    t_schur.reserve(corpus.size());
    t_oracle.reserve(corpus.size());
    for (const auto& pt : corpus) {
      auto t0 = clock::now();
      (void)symdisc::in_gamma_recursive(pt, rc.tolerances);
      auto t1 = clock::now();
      (void)symdisc::in_gn_schur(pt, rc.tolerances);
      auto t2 = clock::now();
      (void)symdisc::classify_oracle(pt, rc.tolerances);
      auto t3 = clock::now();
      t_rec.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
      t_schur.push_back(std::chrono::duration<double, std::micro>(t2 - t1).count());
      t_oracle.push_back(std::chrono::duration<double, std::micro>(t3 - t2).count());
    }
    const double m_rec = median_us(t_rec);
    const double m_schur = median_us(t_schur);
    const double m_oracle = median_us(t_oracle);
    if (file_format(rc) == symdisc::FileFormat::Json) {
      rows.push_back(nlohmann::json{{"n", n},
                                    {"count", count},
                                    {"median_us",
                                     {{"recursive", m_rec}, {"schur", m_schur}, {"oracle", m_oracle}}}});
    } else {
      out.stream() << n << ",recursive," << symdisc::fmt_double(m_rec) << '\n'
                   << n << ",schur," << symdisc::fmt_double(m_schur) << '\n'
                   << n << ",oracle," << symdisc::fmt_double(m_oracle) << '\n';
    }
  }
  if (file_format(rc) == symdisc::FileFormat::Json) out.stream() << rows.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symmetrized polydisc membership toolkit"};
  app.require_subcommand(1);
  // Let global flags (--format, --seed, ...) appear after the subcommand.
  app.fallthrough();

  RunConfig rc;
  app.add_option("--seed", rc.seed, "RNG seed for sample generation")
      ->envname("SYMDISC_SEED")
      ->capture_default_str();
  app.add_option("--jobs", rc.jobs, "worker threads for classify/grid")
      ->envname("SYMDISC_JOBS")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", rc.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--boundary-band", rc.tolerances.boundary_band,
                 "half-width of the region boundary band")
      ->capture_default_str();
  app.add_option("--matrix-tol", rc.tolerances.matrix_tol, "definiteness pivot tolerance")
      ->capture_default_str();
  app.add_option("--root-residual", rc.tolerances.root_residual,
                 "normalized residual bound for the root oracle")
      ->capture_default_str();
  app.add_option("--p-band", rc.tolerances.p_unimodular_band,
                 "half-width of the band around |p| = 1")
      ->capture_default_str();

  std::string input = "-";
  std::string output = "-";
  std::string pgm;
  int n = 2;
  int count = 10;
  std::string kind = "interior";
  std::string axis1 = "s1.re";
  std::string axis2 = "s1.im";
  std::string range1 = "-2:2:101";
  std::string range2 = "-2:2:101";
  std::string fixed;
  int n_min = 2;
  int n_max = 4;

  auto* classify = app.add_subcommand("classify", "cross-validated classification of a point file");
  classify->add_option("--input,-i", input, "point file (JSON-lines or CSV), - for stdin");
  classify->add_option("--output,-o", output, "report file, - for stdout");

  auto* reduce = app.add_subcommand("reduce", "emit reduction chains with residuals");
  reduce->add_option("--input,-i", input, "point file, - for stdin");
  reduce->add_option("--output,-o", output, "report file, - for stdout");

  auto* grid = app.add_subcommand("grid", "rasterize a 2D membership slice");
  grid->add_option("--n", n, "point dimension (1..4)")->required();
  grid->add_option("--axis1", axis1, "first free axis, e.g. s1.re")->capture_default_str();
  grid->add_option("--axis2", axis2, "second free axis, e.g. s1.im")->capture_default_str();
  grid->add_option("--range1", range1, "min:max:steps for axis1")->capture_default_str();
  grid->add_option("--range2", range2, "min:max:steps for axis2")->capture_default_str();
  grid->add_option("--fixed", fixed, "fixed coordinates 're,im;re,im;...' (default all 0)");
  grid->add_option("--output,-o", output, "CSV matrix file, - for stdout");
  grid->add_option("--pgm", pgm, "optional P5 graymap image file");

  auto* sample = app.add_subcommand("sample", "generate a reproducible point corpus");
  sample->add_option("--kind", kind, "interior|torus|exterior|uniform-box")->capture_default_str();
  sample->add_option("--n", n, "point dimension (1..16)")->required();
  sample->add_option("--count", count, "number of points")->required();
  sample->add_option("--output,-o", output, "point file, - for stdout");

  auto* bench = app.add_subcommand("bench", "time the classifiers on seeded corpora");
  bench->add_option("--n-min", n_min, "smallest dimension")->capture_default_str();
  bench->add_option("--n-max", n_max, "largest dimension")->capture_default_str();
  bench->add_option("--count", count, "classifications per dimension")->capture_default_str();
  bench->add_option("--output,-o", output, "report file, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    rc.tolerances.validate();
    if (classify->parsed()) return cmd_classify(rc, input, output);
    if (reduce->parsed()) return cmd_reduce(rc, input, output);
    if (grid->parsed()) {
      symdisc::GridSpec spec;
      spec.n = n;
      spec.axis1 = parse_axis(axis1, n);
      spec.axis2 = parse_axis(axis2, n);
      spec.range1 = parse_range(range1);
      spec.range2 = parse_range(range2);
      spec.fixed = parse_fixed(fixed, n);
      return cmd_grid(rc, spec, output, pgm);
    }
    if (sample->parsed()) return cmd_sample(rc, kind, n, count, output);
    if (bench->parsed()) return cmd_bench(rc, n_min, n_max, count, output);
  } catch (const symdisc::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
