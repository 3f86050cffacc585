// Copyright 2026 The ChannelForge Authors
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

#include "channelforge/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>

#include "channelforge/errors.hpp"
#include "json.hpp"

namespace channelforge {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxSide = 1u << 16;

// ---------------------------------------------------------------- writing

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string matrix_list(const std::vector<ComplexMatrix>& ms) {
  if (ms.empty()) return "[]";
  std::vector<std::string> rows;
  rows.reserve(ms.size());
  for (const auto& m : ms) rows.push_back("    " + matrix_to_json(m));
  return "[\n" + join(rows, ",\n") + "\n  ]";
}

std::string json_string(std::string_view s) { return json(std::string(s)).dump(); }

// Top-level object with one field per line, values already rendered.
std::string object(const std::vector<std::pair<std::string, std::string>>& fields) {
  std::vector<std::string> lines;
  lines.reserve(fields.size());
  for (const auto& [key, value] : fields) lines.push_back("  " + json_string(key) + ": " + value);
  return "{\n" + join(lines, ",\n") + "\n}\n";
}

std::string number_array(std::initializer_list<double> xs) {
  std::vector<std::string> parts;
  for (double x : xs) parts.push_back(format_number(x));
  return "[" + join(parts, ", ") + "]";
}

// ---------------------------------------------------------------- reading

json parse_document(std::string_view text) {
  try {
    json doc = json::parse(text.begin(), text.end());
    if (!doc.is_object()) throw ParseError("document must be a JSON object");
    return doc;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

void require_keys(const json& obj, std::initializer_list<const char*> required,
                  std::initializer_list<const char*> optional, const char* what) {
  std::set<std::string> known;
  for (const char* k : required) {
    if (!obj.contains(k)) throw ParseError(std::string(what) + ": missing key \"" + k + "\"");
    known.insert(k);
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& [key, value] : obj.items()) {
    if (!known.count(key)) throw ParseError(std::string(what) + ": unknown key \"" + key + "\"");
  }
}

std::size_t read_size(const json& v, const char* what) {
  if (!v.is_number_unsigned()) throw ParseError(std::string(what) + " must be a nonnegative integer");
  return v.get<std::size_t>();
}

double read_number(const json& v, const char* what) {
  if (!v.is_number()) throw ParseError(std::string(what) + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(std::string(what) + " must be finite");
  return x;
}

bool read_bool(const json& v, const char* what) {
  if (!v.is_boolean()) throw ParseError(std::string(what) + " must be true or false");
  return v.get<bool>();
}

const std::string& read_string(const json& v, const char* what) {
  if (!v.is_string()) throw ParseError(std::string(what) + " must be a string");
  return v.get_ref<const std::string&>();
}

ComplexMatrix read_matrix(const json& v, const char* what) {
  if (!v.is_object()) throw ParseError(std::string(what) + " must be a matrix object");
  require_keys(v, {"rows", "cols", "re"}, {"im"}, what);
  const std::size_t rows = read_size(v["rows"], "rows");
  const std::size_t cols = read_size(v["cols"], "cols");
  if (rows == 0 || cols == 0 || rows > kMaxSide || cols > kMaxSide) {
    throw ParseError(std::string(what) + ": rows and cols must be in [1, 65536]");
  }
  const std::size_t count = rows * cols;
  const json& re = v["re"];
  if (!re.is_array() || re.size() != count) {
    throw ParseError(std::string(what) + ": \"re\" must hold rows*cols numbers");
  }
  const json* im = v.contains("im") ? &v["im"] : nullptr;
  if (im && (!im->is_array() || im->size() != count)) {
    throw ParseError(std::string(what) + ": \"im\" must hold rows*cols numbers");
  }
  std::vector<cplx> entries(count);
  for (std::size_t k = 0; k < count; ++k) {
    entries[k] = {read_number(re[k], "matrix entry"), im ? read_number((*im)[k], "matrix entry") : 0.0};
  }
  return ComplexMatrix(rows, cols, std::move(entries));
}

std::vector<ComplexMatrix> read_matrix_list(const json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array of matrices");
  std::vector<ComplexMatrix> out;
  out.reserve(v.size());
  for (const auto& item : v) out.push_back(read_matrix(item, what));
  return out;
}

void require_square(const ComplexMatrix& m, std::size_t side, const char* what) {
  if (m.rows() != side || m.cols() != side) {
    throw ParseError(std::string(what) + " must be " + std::to_string(side) + "x" +
                     std::to_string(side));
  }
}

std::size_t read_dimension(const json& doc) {
  const std::size_t n = read_size(doc["n"], "n");
  if (n == 0 || n > 256) throw ParseError("n must be in [1, 256]");
  return n;
}

Channel read_channel(const json& doc) {
  const std::string kind = read_string(doc.at("kind"), "kind");
  if (!doc.contains("n")) throw ParseError("channel: missing key \"n\"");
  const std::size_t n = read_dimension(doc);

  if (kind == "kraus") {
    require_keys(doc, {"kind", "n", "operators"}, {}, "kraus channel");
    auto ops = read_matrix_list(doc["operators"], "Kraus operator");
    if (ops.empty()) throw ParseError("Kraus channel needs at least one operator");
    for (const auto& op : ops) require_square(op, n, "Kraus operator");
    return KrausSet(std::move(ops));
  }
  if (kind == "choi" || kind == "superop") {
    require_keys(doc, {"kind", "n", "matrix"}, {}, "channel");
    ComplexMatrix m = read_matrix(doc["matrix"], "matrix");
    require_square(m, n * n, "channel matrix");
    if (kind == "choi") return ChoiB(std::move(m));
    return SuperopA(std::move(m));
  }
  if (kind == "chi") {
    require_keys(doc, {"kind", "n", "basis", "matrix"}, {"basis_elements"}, "chi channel");
    const std::string& name = read_string(doc["basis"], "basis");
    const bool builtin = name == "standard" || name == "pauli";
    if (builtin == doc.contains("basis_elements")) {
      throw ParseError("chi channel: \"basis_elements\" is required exactly for custom bases");
    }
    OperatorBasis basis = [&] {
      if (name == "standard") return OperatorBasis::standard(n);
      if (name == "pauli") {
        if (n != 2) throw ParseError("the pauli basis needs n = 2");
        return OperatorBasis::pauli();
      }
      auto elems = read_matrix_list(doc["basis_elements"], "basis element");
      for (const auto& e : elems) require_square(e, n, "basis element");
      return OperatorBasis(std::move(elems), name);
    }();
    ComplexMatrix m = read_matrix(doc["matrix"], "matrix");
    require_square(m, n * n, "chi matrix");
    return ChiMatrix(std::move(basis), std::move(m));
  }
  if (kind == "stinespring") {
    require_keys(doc, {"kind", "n", "env_dim", "unitary"}, {"env_state_index"},
                 "stinespring channel");
    const std::size_t env = read_size(doc["env_dim"], "env_dim");
    if (env == 0 || env > kMaxSide / n) throw ParseError("env_dim out of range");
    const std::size_t index =
        doc.contains("env_state_index") ? read_size(doc["env_state_index"], "env_state_index") : 0;
    ComplexMatrix u = read_matrix(doc["unitary"], "unitary");
    require_square(u, n * env, "Stinespring unitary");
    return StinespringModel(n, env, std::move(u), index);
  }
  if (kind == "osd") {
    require_keys(doc, {"kind", "n", "positive", "negative"}, {}, "osd channel");
    auto pos = read_matrix_list(doc["positive"], "OSD operator");
    auto neg = read_matrix_list(doc["negative"], "OSD operator");
    for (const auto& op : pos) require_square(op, n, "OSD operator");
    for (const auto& op : neg) require_square(op, n, "OSD operator");
    return OSD(n, std::move(pos), std::move(neg));
  }
  if (kind == "affine-qubit") {
    require_keys(doc, {"kind", "n", "T", "t"}, {}, "affine-qubit channel");
    if (n != 2) throw ParseError("affine-qubit channel needs n = 2");
    AffineQubit aff;
    const json& big = doc["T"];
    if (!big.is_array() || big.size() != 3) throw ParseError("T must be three rows of three numbers");
    for (std::size_t i = 0; i < 3; ++i) {
      if (!big[i].is_array() || big[i].size() != 3) {
        throw ParseError("T must be three rows of three numbers");
      }
      for (std::size_t j = 0; j < 3; ++j) aff.T[i][j] = read_number(big[i][j], "T entry");
    }
    const json& small = doc["t"];
    if (!small.is_array() || small.size() != 3) throw ParseError("t must be three numbers");
    for (std::size_t i = 0; i < 3; ++i) aff.t[i] = read_number(small[i], "t entry");
    return aff;
  }
  throw ParseError("unknown channel kind \"" + kind + "\"");
}

// Library constructors report bad documents with their own exception types;
// readers present them uniformly.
template <class F>
auto reading(const char* what, F&& body) {
  try {
    return body();
  } catch (const ParseError&) {
    throw;
  } catch (const json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  } catch (const std::domain_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string format_number(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string matrix_to_json(const ComplexMatrix& m) {
  std::vector<std::string> re;
  std::vector<std::string> im;
  re.reserve(m.size());
  im.reserve(m.size());
  for (const cplx& z : m.entries()) {
    re.push_back(format_number(z.real()));
    im.push_back(format_number(z.imag()));
  }
  return "{\"rows\": " + std::to_string(m.rows()) + ", \"cols\": " + std::to_string(m.cols()) +
         ", \"re\": [" + join(re, ", ") + "], \"im\": [" + join(im, ", ") + "]}";
}

std::string channel_to_json(const Channel& ch) {
  std::vector<std::pair<std::string, std::string>> f{
      {"kind", json_string(kind_name(ch))}, {"n", std::to_string(dimension(ch))}};
  if (const auto* k = std::get_if<KrausSet>(&ch)) {
    f.emplace_back("operators", matrix_list(k->operators()));
  } else if (const auto* b = std::get_if<ChoiB>(&ch)) {
    f.emplace_back("matrix", matrix_to_json(b->matrix()));
  } else if (const auto* a = std::get_if<SuperopA>(&ch)) {
    f.emplace_back("matrix", matrix_to_json(a->matrix()));
  } else if (const auto* c = std::get_if<ChiMatrix>(&ch)) {
    const std::string& name = c->basis().name();
    f.emplace_back("basis", json_string(name));
    if (name != "standard" && name != "pauli") {
      f.emplace_back("basis_elements", matrix_list(c->basis().elements()));
    }
    f.emplace_back("matrix", matrix_to_json(c->matrix()));
  } else if (const auto* s = std::get_if<StinespringModel>(&ch)) {
    f.emplace_back("env_dim", std::to_string(s->env_dim()));
    f.emplace_back("env_state_index", std::to_string(s->env_state_index()));
    f.emplace_back("unitary", matrix_to_json(s->unitary()));
  } else if (const auto* o = std::get_if<OSD>(&ch)) {
    f.emplace_back("positive", matrix_list(o->positive_part()));
    f.emplace_back("negative", matrix_list(o->negative_part()));
  } else if (const auto* aff = std::get_if<AffineQubit>(&ch)) {
    std::vector<std::string> rows;
    for (const auto& row : aff->T) rows.push_back(number_array({row[0], row[1], row[2]}));
    f.emplace_back("T", "[" + join(rows, ", ") + "]");
    f.emplace_back("t", number_array({aff->t[0], aff->t[1], aff->t[2]}));
  }
  return object(f);
}

Channel channel_from_json(std::string_view text) {
  return reading("channel", [&] { return read_channel(parse_document(text)); });
}

std::string state_to_json(const ComplexMatrix& rho) {
  return object({{"n", std::to_string(rho.rows())}, {"rho", matrix_to_json(rho)}});
}

ComplexMatrix state_from_json(std::string_view text) {
  return reading("state", [&] {
    const json doc = parse_document(text);
    require_keys(doc, {"n", "rho"}, {}, "state");
    const std::size_t n = read_dimension(doc);
    ComplexMatrix rho = read_matrix(doc["rho"], "rho");
    require_square(rho, n, "rho");
    return rho;
  });
}

GeneratorDocument generator_from_json(std::string_view text) {
  return reading("generator", [&] {
    const json doc = parse_document(text);
    require_keys(doc, {"n", "H"}, {"L", "gamma-absorbed", "gamma", "rho0"}, "generator");
    const std::size_t n = read_dimension(doc);
    ComplexMatrix h = read_matrix(doc["H"], "H");
    require_square(h, n, "H");
    std::vector<ComplexMatrix> ls;
    if (doc.contains("L")) ls = read_matrix_list(doc["L"], "Lindblad operator");
    for (const auto& l : ls) require_square(l, n, "Lindblad operator");

    const bool absorbed =
        doc.contains("gamma-absorbed") ? read_bool(doc["gamma-absorbed"], "gamma-absorbed") : true;
    if (absorbed && doc.contains("gamma")) {
      throw ParseError("\"gamma\" is only meaningful with \"gamma-absorbed\": false");
    }
    if (!absorbed) {
      if (!doc.contains("gamma")) throw ParseError("\"gamma\" is required when rates are not absorbed");
      const json& gamma = doc["gamma"];
      std::vector<double> rates;
      if (gamma.is_array()) {
        if (gamma.size() != ls.size()) throw ParseError("\"gamma\" needs one rate per operator");
        for (const auto& r : gamma) rates.push_back(read_number(r, "gamma"));
      } else {
        rates.assign(ls.size(), read_number(gamma, "gamma"));
      }
      for (std::size_t a = 0; a < ls.size(); ++a) {
        if (rates[a] < 0.0) throw ParseError("rates must be nonnegative");
        ls[a] *= std::sqrt(rates[a]);
      }
    }

    ComplexMatrix rho0(n, n);
    if (doc.contains("rho0")) {
      rho0 = read_matrix(doc["rho0"], "rho0");
      require_square(rho0, n, "rho0");
    } else {
      rho0(0, 0) = 1.0;
    }
    return GeneratorDocument{LindbladGenerator(std::move(h), std::move(ls)), std::move(rho0)};
  });
}

std::string generator_to_json(const LindbladGenerator& g) {
  return object({{"n", std::to_string(g.n())},
                 {"H", matrix_to_json(g.hamiltonian())},
                 {"L", matrix_list(g.lindblads())},
                 {"gamma-absorbed", "true"}});
}

std::string report_to_json(const ValidationReport& r) {
  const auto flag = [](bool b) { return std::string(b ? "true" : "false"); };
  return object({{"hermiticity_preserving", flag(r.hermiticity_preserving)},
                 {"hermiticity_deviation", format_number(r.hermiticity_deviation)},
                 {"trace_preserving", flag(r.trace_preserving)},
                 {"trace_deviation", format_number(r.trace_deviation)},
                 {"completely_positive", flag(r.completely_positive)},
                 {"min_choi_eigenvalue", format_number(r.min_choi_eigenvalue)},
                 {"unital", flag(r.unital)},
                 {"unital_deviation", format_number(r.unital_deviation)},
                 {"kraus_rank", std::to_string(r.kraus_rank)},
                 {"choi_trace", format_number(r.choi_trace)},
                 {"tolerance_used", format_number(r.tolerance_used)}});
}

void write_trajectory_csv(std::ostream& out, const std::vector<TrajectoryPoint>& trajectory) {
  if (trajectory.empty()) return;
  const std::size_t n = trajectory.front().rho.rows();
  out << 't';
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out << ",re(rho" << i << j << "),im(rho" << i << j << ')';
    }
  out << '\n';
  for (const auto& p : trajectory) {
    out << format_number(p.time);
    for (const cplx& z : p.rho.entries()) {
      out << ',' << format_number(z.real()) << ',' << format_number(z.imag());
    }
    out << '\n';
  }
}

}  // namespace channelforge
