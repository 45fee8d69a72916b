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

#include <cctype>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "symdisc/numerics.hpp"
#include "symdisc/point.hpp"
#include "symdisc/polydisc.hpp"

namespace symdisc {

enum class FileFormat { Json, Csv };

/// One input point: id, dimension, and the flat symmetrized coordinates
/// (s_1, ..., s_{n-1}, p).
struct PointRecord {
  std::string id;
  int n = 0;
  std::vector<cplx> coords;

  SymPoint point() const { return SymPoint::from_coords(coords); }
};

inline void validate_record(const PointRecord& r) {
  if (r.n < 1 || r.n > kMaxDegree)
    throw input_error("record '" + r.id + "': n must be between 1 and 16");
  if (static_cast<int>(r.coords.size()) != r.n)
    throw input_error("record '" + r.id + "': expected " + std::to_string(r.n) +
                      " coordinates, got " + std::to_string(r.coords.size()));
  for (const cplx& c : r.coords) require_finite(c, "point record");
}

/// Round-trip double formatting for CSV output.
inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline nlohmann::json json_complex(cplx z) { return nlohmann::json::array({z.real(), z.imag()}); }

inline nlohmann::json json_coords(std::span<const cplx> cs) {
  nlohmann::json a = nlohmann::json::array();
  for (const cplx& c : cs) a.push_back(json_complex(c));
  return a;
}

inline nlohmann::json json_record(const PointRecord& r) {
  return nlohmann::json{{"id", r.id}, {"n", r.n}, {"coords", json_coords(r.coords)}};
}

inline nlohmann::json json_certificate(const Certificate& c) {
  nlohmann::json j = nlohmann::json::object();
  if (c.max_root_modulus) j["max_root_modulus"] = *c.max_root_modulus;
  if (c.min_root_modulus) j["min_root_modulus"] = *c.min_root_modulus;
  if (!c.roots.empty()) j["roots"] = json_coords(c.roots);
  if (!c.beta_chain.empty()) {
    nlohmann::json chain = nlohmann::json::array();
    for (const auto& lvl : c.beta_chain) chain.push_back(json_coords(lvl));
    j["beta_chain"] = chain;
  }
  if (c.min_pivot_or_eig) j["min_pivot_or_eig"] = *c.min_pivot_or_eig;
  if (c.margin) j["margin"] = *c.margin;
  if (c.delegated) j["delegated"] = true;
  if (c.not_applicable) j["not_applicable"] = true;
  return j;
}

inline nlohmann::json json_verdict(const RegionVerdict& v) {
  return nlohmann::json{{"region", to_string(v.region)},
                        {"code", region_code(v.region)},
                        {"method", v.method},
                        {"certificate", json_certificate(v.certificate)}};
}

inline nlohmann::json json_consensus(const ConsensusReport& rep) {
  nlohmann::json methods = nlohmann::json::array();
  for (const MethodOutcome& mo : rep.methods) {
    nlohmann::json m{{"method", mo.method}};
    if (mo.verdict)
      m["verdict"] = json_verdict(*mo.verdict);
    else
      m["error"] = mo.error;
    methods.push_back(std::move(m));
  }
  nlohmann::json j{{"methods", methods},
                   {"disagreement", rep.disagreement},
                   {"anomaly", rep.anomaly},
                   {"note", rep.note}};
  if (rep.agreed_region) j["agreed_region"] = to_string(*rep.agreed_region);
  return j;
}

inline nlohmann::json json_boundary_check(const BoundaryCheck& bc) {
  nlohmann::json j{{"on_boundary", bc.on_boundary},
                   {"certificate", json_certificate(bc.certificate)}};
  if (bc.beta_witness) j["beta_witness"] = json_coords(*bc.beta_witness);
  if (bc.witness_residual) j["witness_residual"] = *bc.witness_residual;
  if (bc.consistency_defect) j["consistency_defect"] = *bc.consistency_defect;
  return j;
}

inline void write_point_json(std::ostream& os, const PointRecord& r) {
  os << json_record(r).dump() << '\n';
}

inline void write_point_csv(std::ostream& os, const PointRecord& r) {
  os << r.id << ',' << r.n;
  for (const cplx& c : r.coords) os << ',' << fmt_double(c.real()) << ',' << fmt_double(c.imag());
  os << '\n';
}

inline void write_points(std::ostream& os, const std::vector<PointRecord>& rs, FileFormat f) {
  for (const PointRecord& r : rs) {
    if (f == FileFormat::Json)
      write_point_json(os, r);
    else
      write_point_csv(os, r);
  }
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline double parse_double(const std::string& s, int lineno) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos != s.size()) throw input_error("");
    return v;
  } catch (const std::exception&) {
    throw input_error("line " + std::to_string(lineno) + ": bad numeric field '" + s + "'");
  }
}

inline PointRecord parse_csv_record(const std::string& line, int lineno) {
  const auto fields = split_csv_line(line);
  if (fields.size() < 4 || fields.size() % 2 != 0)
    throw input_error("line " + std::to_string(lineno) +
                      ": expected id,n followed by re,im pairs");
  PointRecord r;
  r.id = fields[0];
  try {
    r.n = std::stoi(fields[1]);
  } catch (const std::exception&) {
    throw input_error("line " + std::to_string(lineno) + ": bad n field '" + fields[1] + "'");
  }
  for (std::size_t k = 2; k + 1 < fields.size(); k += 2)
    r.coords.emplace_back(parse_double(fields[k], lineno), parse_double(fields[k + 1], lineno));
  return r;
}

inline PointRecord parse_json_record(const std::string& line, int lineno) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw input_error("line " + std::to_string(lineno) + ": " + e.what());
  }
  PointRecord r;
  try {
    r.id = j.at("id").get<std::string>();
    r.n = j.at("n").get<int>();
    for (const auto& c : j.at("coords")) {
      if (!c.is_array() || c.size() != 2)
        throw input_error("coords entries must be [re, im] pairs");
      r.coords.emplace_back(c[0].get<double>(), c[1].get<double>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw input_error("line " + std::to_string(lineno) + ": " + e.what());
  }
  return r;
}

}  // namespace detail

/// Reads a point file, autodetecting JSON-lines vs CSV per line ('{'
/// starts a JSON record). Blank lines and a leading "id,..." CSV header
/// are skipped. Parse failures name the offending line.
inline std::vector<PointRecord> read_points(std::istream& is) {
  std::vector<PointRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    if (line[b] == '{') {
      out.push_back(detail::parse_json_record(line, lineno));
    } else {
      if (lineno == 1 && line.compare(b, 3, "id,") == 0) continue;
      out.push_back(detail::parse_csv_record(line, lineno));
    }
    try {
      validate_record(out.back());
    } catch (const input_error& e) {
      throw input_error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace symdisc
