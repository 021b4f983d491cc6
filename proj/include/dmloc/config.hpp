#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dmloc/coeff_ring.hpp"
#include "dmloc/drinfeld.hpp"
#include "dmloc/lattice.hpp"

namespace dmloc {

// Problem description: sections of `key = value` lines, values in JSON
// syntax (integers, strings, arrays of strings). `#` and `;` start comments.
//
//   [field]     p = 2   n = 1   modulus = "x^2+x+1"   q = 2   uniformizer = "pi"
//   [drinfeld]  phi_t = "pi + T"
//   [lattice]   mode = "drinfeld"   generators = ["pi^-1"]
//               mode = "abstract"   log_norms = ["0", "1/2"]
//               sublattice = [["t", "0"], ["1", "t+1"]]
//   [height]    elements = ["pi^-3"]
//   [as_break]  w = "pi^-4"
//   [kummer]    a = "t"   lambda = "pi^-3"
//   [caps]      degree = 4   ext = 12   iterations = 100000

struct SourcePos {
  int line = 0;
  int column = 0;  // 1-based column of the first character of the value
};

struct ProblemConfig {
  uint32_t p = 2;
  unsigned n = 1;
  std::string modulus;  // empty: the default modulus
  uint64_t q = 0;       // 0: the size of the residue field
  std::string uniformizer = "pi";
  std::string phi_t;
  std::string lattice_mode = "drinfeld";
  std::vector<std::string> generators;
  std::vector<std::string> log_norms;
  std::vector<std::vector<std::string>> sublattice;
  std::vector<std::string> height_elements;
  std::string as_w;
  std::string kummer_a;
  std::string kummer_lambda;
  unsigned cap_degree = 4;
  unsigned cap_ext = 12;
  uint64_t cap_iterations = 100000;

  /// Start of every string in the source, keyed "section.key#k" for the
  /// k-th string of the value. Not part of the value.
  std::map<std::string, SourcePos> positions;

  bool operator==(const ProblemConfig& o) const;
};

/// Throws ParseError with line and column.
ProblemConfig parse_config(std::string_view text);
/// Reads and parses a file; unreadable files raise ParseError at line 0.
ProblemConfig load_config(const std::string& path);
/// Canonical text; parse_config(print_config(c)) == c.
std::string print_config(const ProblemConfig& c);

/// Typed objects built from a config. Element syntax errors are reported at
/// their position in the config source.
class Problem {
 public:
  explicit Problem(ProblemConfig config);

  const ProblemConfig& config() const { return config_; }
  const FieldRef& field() const { return field_; }
  const CoeffRing& ring() const { return ring_; }
  uint64_t q() const { return ring_.q(); }

  std::shared_ptr<const DrinfeldModule> module() const;
  std::vector<LocalElem> generators() const;
  std::vector<NormValue> log_norms() const;
  NormedLattice lattice() const;
  std::optional<PolyMatrix> sublattice() const;
  std::vector<LocalElem> height_elements() const;
  LocalElem as_w() const;
  CoeffElem kummer_a() const;
  LocalElem kummer_lambda() const;

 private:
  static FieldRef build_field(const ProblemConfig& c);
  static uint64_t build_q(const ProblemConfig& c, const FieldRef& f);
  const std::string& require(const std::string& value, const char* key) const;
  SourcePos pos(const std::string& key, size_t k = 0) const;

  ProblemConfig config_;
  FieldRef field_;
  CoeffRing ring_;
};

}  // namespace dmloc
