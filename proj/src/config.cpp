#include "dmloc/config.hpp"

#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "dmloc/error.hpp"
#include "dmloc/text.hpp"

namespace dmloc {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  const size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Columns (1-based, within `value`) of the contents of each JSON string.
std::vector<int> string_columns(std::string_view value) {
  std::vector<int> cols;
  bool in = false;
  for (size_t i = 0; i < value.size(); ++i) {
    if (!in && value[i] == '"') {
      in = true;
      cols.push_back(static_cast<int>(i) + 2);
    } else if (in && value[i] == '\\') {
      ++i;
    } else if (in && value[i] == '"') {
      in = false;
    }
  }
  return cols;
}

struct Slot {
  std::function<void(const json&)> assign;
};

template <class Int>
std::function<void(const json&)> integer_into(Int& out) {
  return [&out](const json& v) {
    if (!v.is_number_integer() || v.get<int64_t>() < 0) throw std::invalid_argument("expected a nonnegative integer");
    out = static_cast<Int>(v.get<uint64_t>());
  };
}

std::function<void(const json&)> string_into(std::string& out) {
  return [&out](const json& v) {
    if (!v.is_string()) throw std::invalid_argument("expected a string");
    out = v.get<std::string>();
  };
}

std::function<void(const json&)> list_into(std::vector<std::string>& out) {
  return [&out](const json& v) {
    if (!v.is_array()) throw std::invalid_argument("expected an array of strings");
    out.clear();
    for (const auto& x : v) {
      if (!x.is_string()) throw std::invalid_argument("expected an array of strings");
      out.push_back(x.get<std::string>());
    }
  };
}

std::function<void(const json&)> matrix_into(std::vector<std::vector<std::string>>& out) {
  return [&out](const json& v) {
    if (!v.is_array()) throw std::invalid_argument("expected an array of rows");
    out.clear();
    for (const auto& row : v) {
      if (!row.is_array()) throw std::invalid_argument("expected an array of rows");
      out.emplace_back();
      for (const auto& x : row) {
        if (!x.is_string()) throw std::invalid_argument("matrix entries must be strings");
        out.back().push_back(x.get<std::string>());
      }
    }
  };
}

std::map<std::string, Slot> slots(ProblemConfig& c) {
  return {
      {"field.p", {integer_into(c.p)}},
      {"field.n", {integer_into(c.n)}},
      {"field.modulus", {string_into(c.modulus)}},
      {"field.q", {integer_into(c.q)}},
      {"field.uniformizer", {string_into(c.uniformizer)}},
      {"drinfeld.phi_t", {string_into(c.phi_t)}},
      {"lattice.mode", {string_into(c.lattice_mode)}},
      {"lattice.generators", {list_into(c.generators)}},
      {"lattice.log_norms", {list_into(c.log_norms)}},
      {"lattice.sublattice", {matrix_into(c.sublattice)}},
      {"height.elements", {list_into(c.height_elements)}},
      {"as_break.w", {string_into(c.as_w)}},
      {"kummer.a", {string_into(c.kummer_a)}},
      {"kummer.lambda", {string_into(c.kummer_lambda)}},
      {"caps.degree", {integer_into(c.cap_degree)}},
      {"caps.ext", {integer_into(c.cap_ext)}},
      {"caps.iterations", {integer_into(c.cap_iterations)}},
  };
}

}  // namespace

bool ProblemConfig::operator==(const ProblemConfig& o) const {
  return p == o.p && n == o.n && modulus == o.modulus && q == o.q && uniformizer == o.uniformizer &&
         phi_t == o.phi_t && lattice_mode == o.lattice_mode && generators == o.generators && log_norms == o.log_norms &&
         sublattice == o.sublattice && height_elements == o.height_elements && as_w == o.as_w &&
         kummer_a == o.kummer_a && kummer_lambda == o.kummer_lambda && cap_degree == o.cap_degree &&
         cap_ext == o.cap_ext && cap_iterations == o.cap_iterations;
}

ProblemConfig parse_config(std::string_view text) {
  ProblemConfig c;
  auto table = slots(c);
  std::set<std::string> seen;
  std::string section;
  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') {
      if (end == text.size()) break;
      continue;
    }
    const int indent = static_cast<int>(raw.find_first_not_of(" \t"));
    if (line[0] == '[') {
      const size_t close = line.find(']');
      if (close == std::string::npos || trim(line.substr(close + 1)).size() > 0) {
        throw ParseError("malformed section header", line_no, indent + 1);
      }
      section = trim(line.substr(1, close - 1));
      static const std::set<std::string> known{"field", "drinfeld", "lattice", "height", "as_break", "kummer", "caps"};
      if (!known.count(section)) throw ParseError("unknown section [" + section + "]", line_no, indent + 2);
    } else {
      const size_t eq = raw.find('=');
      if (eq == std::string_view::npos) throw ParseError("expected key = value", line_no, indent + 1);
      if (section.empty()) throw ParseError("key outside of a section", line_no, indent + 1);
      const std::string key = trim(raw.substr(0, eq));
      const std::string full = section + "." + key;
      auto it = table.find(full);
      if (it == table.end()) throw ParseError("unknown key '" + key + "' in [" + section + "]", line_no, indent + 1);
      if (!seen.insert(full).second) throw ParseError("duplicate key '" + key + "'", line_no, indent + 1);

      const std::string_view rest = raw.substr(eq + 1);
      const size_t vb = rest.find_first_not_of(" \t");
      const int value_col = static_cast<int>(eq + 1 + (vb == std::string_view::npos ? rest.size() : vb)) + 1;
      const std::string value = trim(rest);
      if (value.empty()) throw ParseError("missing value", line_no, value_col);
      json v;
      try {
        v = json::parse(value);
      } catch (const json::parse_error& e) {
        const int off = e.byte > 0 ? static_cast<int>(e.byte) - 1 : 0;
        throw ParseError("malformed value: expected a JSON integer, string or array", line_no, value_col + off);
      }
      try {
        it->second.assign(v);
      } catch (const std::invalid_argument& e) {
        throw ParseError(std::string(e.what()) + " for '" + key + "'", line_no, value_col);
      }
      const auto cols = string_columns(value);
      for (size_t k = 0; k < cols.size(); ++k) {
        c.positions[full + "#" + std::to_string(k)] = SourcePos{line_no, value_col + cols[k] - 1};
      }
      c.positions[full] = SourcePos{line_no, value_col};
    }
    if (end == text.size()) break;
  }
  if (c.cap_degree == 0 || c.cap_ext == 0 || c.cap_iterations == 0) {
    throw ParseError("caps must be positive", c.positions.count("caps.degree") ? c.positions["caps.degree"].line : 0, 1);
  }
  return c;
}

ProblemConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string print_config(const ProblemConfig& c) {
  const ProblemConfig d;
  std::ostringstream out;
  auto str = [](const std::string& s) { return json(s).dump(); };
  auto list = [](const std::vector<std::string>& v) { return json(v).dump(); };

  out << "[field]\n";
  out << "p = " << c.p << "\n";
  out << "n = " << c.n << "\n";
  if (!c.modulus.empty()) out << "modulus = " << str(c.modulus) << "\n";
  if (c.q != d.q) out << "q = " << c.q << "\n";
  if (c.uniformizer != d.uniformizer) out << "uniformizer = " << str(c.uniformizer) << "\n";
  if (!c.phi_t.empty()) out << "\n[drinfeld]\nphi_t = " << str(c.phi_t) << "\n";
  if (c.lattice_mode != d.lattice_mode || !c.generators.empty() || !c.log_norms.empty() || !c.sublattice.empty()) {
    out << "\n[lattice]\n";
    if (c.lattice_mode != d.lattice_mode) out << "mode = " << str(c.lattice_mode) << "\n";
    if (!c.generators.empty()) out << "generators = " << list(c.generators) << "\n";
    if (!c.log_norms.empty()) out << "log_norms = " << list(c.log_norms) << "\n";
    if (!c.sublattice.empty()) out << "sublattice = " << json(c.sublattice).dump() << "\n";
  }
  if (!c.height_elements.empty()) out << "\n[height]\nelements = " << list(c.height_elements) << "\n";
  if (!c.as_w.empty()) out << "\n[as_break]\nw = " << str(c.as_w) << "\n";
  if (!c.kummer_a.empty() || !c.kummer_lambda.empty()) {
    out << "\n[kummer]\n";
    if (!c.kummer_a.empty()) out << "a = " << str(c.kummer_a) << "\n";
    if (!c.kummer_lambda.empty()) out << "lambda = " << str(c.kummer_lambda) << "\n";
  }
  if (c.cap_degree != d.cap_degree || c.cap_ext != d.cap_ext || c.cap_iterations != d.cap_iterations) {
    out << "\n[caps]\n";
    if (c.cap_degree != d.cap_degree) out << "degree = " << c.cap_degree << "\n";
    if (c.cap_ext != d.cap_ext) out << "ext = " << c.cap_ext << "\n";
    if (c.cap_iterations != d.cap_iterations) out << "iterations = " << c.cap_iterations << "\n";
  }
  return out.str();
}

FieldRef Problem::build_field(const ProblemConfig& c) {
  const auto it = c.positions.find("field.p");
  const SourcePos at = it == c.positions.end() ? SourcePos{} : it->second;
  try {
    if (c.modulus.empty()) return FiniteField::make(c.p, c.n);
    std::vector<uint32_t> mod;
    try {
      mod = parse_modulus(c.p, c.modulus);
    } catch (const ParseError& e) {
      const auto m = c.positions.find("field.modulus#0");
      if (m == c.positions.end()) throw;
      throw e.at(m->second.line, m->second.column - 1);
    }
    FieldRef f = FiniteField::make(c.p, mod);
    if (f->degree() != c.n) throw ComputationError("bad_field", "modulus degree differs from n");
    return f;
  } catch (const ComputationError& e) {
    throw ParseError(std::string("invalid [field]: ") + e.what(), at.line, at.column);
  }
}

uint64_t Problem::build_q(const ProblemConfig& c, const FieldRef& f) {
  if (c.uniformizer != "pi") {
    const auto it = c.positions.find("field.uniformizer#0");
    throw ParseError("only the uniformizer name \"pi\" is supported", it == c.positions.end() ? 0 : it->second.line,
                     it == c.positions.end() ? 0 : it->second.column);
  }
  const uint64_t q = c.q == 0 ? f->size() : c.q;
  if (!f->has_subfield(q)) {
    const auto it = c.positions.find("field.q");
    throw ParseError("q must be the size of a subfield of the residue field",
                     it == c.positions.end() ? 0 : it->second.line, it == c.positions.end() ? 0 : it->second.column);
  }
  return q;
}

Problem::Problem(ProblemConfig config)
    : config_(std::move(config)),
      field_(build_field(config_)),
      ring_(field_, build_q(config_, field_)) {}

SourcePos Problem::pos(const std::string& key, size_t k) const {
  const auto it = config_.positions.find(key + "#" + std::to_string(k));
  return it == config_.positions.end() ? SourcePos{} : it->second;
}

const std::string& Problem::require(const std::string& value, const char* key) const {
  if (value.empty()) throw ParseError(std::string("missing required key ") + key);
  return value;
}

namespace {

template <class F>
auto located(const SourcePos& at, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    if (at.line == 0) throw;
    throw e.at(at.line, at.column - 1);
  }
}

}  // namespace

std::shared_ptr<const DrinfeldModule> Problem::module() const {
  const std::string& s = require(config_.phi_t, "[drinfeld] phi_t");
  auto phi = located(pos("drinfeld.phi_t"), [&] { return parse_twisted(*field_, q(), s); });
  return std::make_shared<const DrinfeldModule>(ring_, std::move(phi));
}

std::vector<LocalElem> Problem::generators() const {
  std::vector<LocalElem> out;
  for (size_t k = 0; k < config_.generators.size(); ++k) {
    out.push_back(located(pos("lattice.generators", k), [&] { return parse_local(*field_, config_.generators[k]); }));
  }
  return out;
}

std::vector<NormValue> Problem::log_norms() const {
  std::vector<NormValue> out;
  for (size_t k = 0; k < config_.log_norms.size(); ++k) {
    const std::string& s = config_.log_norms[k];
    mpq_class e;
    bool ok = !s.empty() && s.find_first_not_of("-0123456789/") == std::string::npos;
    if (ok) ok = e.set_str(s, 10) == 0 && e.get_den() != 0;
    if (!ok) {
      const SourcePos at = pos("lattice.log_norms", k);
      throw ParseError("log-norm must be a rational \"a\" or \"a/b\"", at.line, at.column);
    }
    e.canonicalize();
    out.push_back(NormValue::from_log(e, q()));
  }
  return out;
}

NormedLattice Problem::lattice() const {
  if (config_.lattice_mode == "abstract") return NormedLattice::abstract(ring_, log_norms());
  if (config_.lattice_mode == "drinfeld") return NormedLattice::drinfeld(module(), generators());
  const SourcePos at = pos("lattice.mode");
  throw ParseError("lattice mode must be \"drinfeld\" or \"abstract\"", at.line, at.column);
}

std::optional<PolyMatrix> Problem::sublattice() const {
  if (config_.sublattice.empty()) return std::nullopt;
  PolyMatrix m;
  size_t k = 0;
  for (const auto& row : config_.sublattice) {
    m.emplace_back();
    for (const auto& s : row) {
      m.back().push_back(located(pos("lattice.sublattice", k++), [&] { return parse_coeff_poly(*field_, s); }));
    }
  }
  return m;
}

std::vector<LocalElem> Problem::height_elements() const {
  std::vector<LocalElem> out;
  for (size_t k = 0; k < config_.height_elements.size(); ++k) {
    out.push_back(located(pos("height.elements", k), [&] { return parse_local(*field_, config_.height_elements[k]); }));
  }
  return out;
}

LocalElem Problem::as_w() const {
  const std::string& s = require(config_.as_w, "[as_break] w");
  return located(pos("as_break.w"), [&] { return parse_local(*field_, s); });
}

CoeffElem Problem::kummer_a() const {
  const std::string& s = require(config_.kummer_a, "[kummer] a");
  return located(pos("kummer.a"), [&] { return parse_coeff_poly(*field_, s); });
}

LocalElem Problem::kummer_lambda() const {
  const std::string& s = require(config_.kummer_lambda, "[kummer] lambda");
  return located(pos("kummer.lambda"), [&] { return parse_local(*field_, s); });
}

}  // namespace dmloc
