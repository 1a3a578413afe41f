// Copyright 2026 The seqmeas Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "seqmeas/json_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace seqmeas {

namespace {

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string(what) + ": missing field \"" + key + "\"");
  }
  return j.at(key);
}

std::size_t count_field(const Json& j, const char* key, const char* what) {
  const Json& v = field(j, key, what);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw ParseError(std::string(what) + ": \"" + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::vector<Outcome> outcomes_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": outcomes must be an array");
  std::vector<Outcome> out;
  for (const auto& o : j) {
    if (!o.is_array()) throw ParseError(std::string(what) + ": outcome labels must be arrays");
    Outcome label;
    for (const auto& r : o) {
      if (!r.is_number_integer()) throw ParseError(std::string(what) + ": residues must be integers");
      label.push_back(r.get<int>());
    }
    out.push_back(std::move(label));
  }
  return out;
}

std::vector<CMatrix> matrices_from_json(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + ": expected an array of matrices");
  std::vector<CMatrix> out;
  out.reserve(j.size());
  for (const auto& m : j) out.push_back(matrix_from_json(m));
  return out;
}

}  // namespace

Json to_json(const CMatrix& m) {
  if (!m.all_finite()) throw InvariantError("to_json: matrix has non-finite entries");
  Json data = Json::array();
  for (const auto& z : m.data()) data.push_back(Json::array({z.real(), z.imag()}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

CMatrix matrix_from_json(const Json& j) {
  const std::size_t rows = count_field(j, "rows", "matrix");
  const std::size_t cols = count_field(j, "cols", "matrix");
  const Json& data = field(j, "data", "matrix");
  if (!data.is_array() || data.size() != rows * cols) {
    throw ParseError("matrix: \"data\" must hold rows * cols = " + std::to_string(rows * cols) +
                     " entries");
  }
  std::vector<Complex> values;
  values.reserve(data.size());
  for (const auto& z : data) {
    if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
      throw ParseError("matrix: entries must be [re, im] number pairs");
    }
    values.emplace_back(z[0].get<double>(), z[1].get<double>());
  }
  return {rows, cols, std::move(values)};
}

Json to_json(const Group& g) { return Json{{"moduli", g.moduli()}}; }

Group group_from_json(const Json& j) {
  const Json& moduli = field(j, "moduli", "group");
  if (!moduli.is_array()) throw ParseError("group: \"moduli\" must be an array");
  std::vector<int> d;
  for (const auto& m : moduli) {
    if (!m.is_number_integer()) throw ParseError("group: moduli must be integers");
    d.push_back(m.get<int>());
  }
  return Group(std::move(d));
}

State state_from_json(const Json& j) { return State(matrix_from_json(j)); }

Json to_json(const Povm& p) {
  Json effects = Json::array();
  for (const auto& e : p.effects()) effects.push_back(to_json(e));
  return Json{{"outcomes", p.outcomes()}, {"effects", std::move(effects)}};
}

Povm povm_from_json(const Json& j) {
  return {outcomes_from_json(field(j, "outcomes", "povm"), "povm"),
          matrices_from_json(field(j, "effects", "povm"), "povm")};
}

Json to_json(const ProbVector& p) { return Json{{"outcomes", p.outcomes()}, {"weights", p.weights()}}; }

Json to_json(const Instrument& i) {
  Json maps = Json::array();
  for (const auto& m : i.maps()) {
    maps.push_back(Json{{"dim_in", m.dim_in()}, {"dim_out", m.dim_out()}, {"choi", to_json(m.choi())}});
  }
  return Json{{"group", to_json(i.outcomes())}, {"maps", std::move(maps)}};
}

Instrument instrument_from_json(const Json& j) {
  Group g = group_from_json(field(j, "group", "instrument"));
  const Json& maps = field(j, "maps", "instrument");
  if (!maps.is_array()) throw ParseError("instrument: \"maps\" must be an array");
  std::vector<CpMap> out;
  for (const auto& m : maps) {
    CMatrix choi = matrix_from_json(field(m, "choi", "instrument map"));
    std::size_t din = 0, dout = 0;
    if (m.contains("dim_in") || m.contains("dim_out")) {
      din = count_field(m, "dim_in", "instrument map");
      dout = count_field(m, "dim_out", "instrument map");
    } else {
      din = dout = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(choi.rows()))));
    }
    out.emplace_back(din, dout, std::move(choi));
  }
  return {std::move(g), std::move(out)};
}

Json to_json(const CovariantMeasure& mm) {
  Json m = Json::array();
  for (const auto& d : mm.densities()) m.push_back(to_json(d));
  return Json{{"group", to_json(mm.group())}, {"m", std::move(m)}};
}

CovariantMeasure measure_from_json(const Json& j) {
  return {group_from_json(field(j, "group", "measure")), matrices_from_json(field(j, "m", "measure"), "measure")};
}

Json to_json(const SequentialResiduals& r) {
  return Json{{"covariance", r.covariance},
              {"marginals", r.marginals},
              {"position_smearing", r.position_smearing},
              {"momentum_smearing", r.momentum_smearing},
              {"generating_state", r.generating_state}};
}

Json to_json(const SequentialResult& r) {
  return Json{{"measure", to_json(r.measure)},
              {"joint", to_json(r.joint)},
              {"marginal_a", to_json(r.marginal_a)},
              {"marginal_b", to_json(r.marginal_b)},
              {"sigma", to_json(r.sigma)},
              {"tau", to_json(r.tau)},
              {"generating_state", to_json(r.generating_state.matrix())},
              {"residuals", to_json(r.residuals)}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string distribution_csv(const ProbVector& p) {
  std::ostringstream out;
  out << "outcome,probability\n";
  for (std::size_t k = 0; k < p.size(); ++k) {
    const auto& label = p.outcomes()[k];
    for (std::size_t r = 0; r < label.size(); ++r) out << (r ? " " : "") << label[r];
    // Same shortest round-trip form as the JSON reports.
    out << ',' << Json(p[k]).dump() << '\n';
  }
  return out.str();
}

}  // namespace seqmeas
