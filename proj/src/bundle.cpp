#include "poincare/bundle.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "poincare/lyubarskii.hpp"

namespace poincare {

using nlohmann::json;

namespace {

constexpr const char* kLayout =
    "basis (A,B) then (C,D); within a block a descends from A (outer), b descends from B (inner); "
    "matrices row-major";

constexpr std::array<const char*, 3> kJNames = {"Jx", "Jy", "Jz"};
constexpr std::array<const char*, 3> kKNames = {"Kx", "Ky", "Kz"};
constexpr std::array<const char*, 4> kVNames = {"Vx", "Vy", "Vz", "Vt"};
constexpr std::array<const char*, 4> kPNames = {"Px", "Py", "Pz", "Pt"};

// Column width in code points; √ is multibyte.
std::size_t display_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char ch : s) n += (ch & 0xC0) != 0x80;
  return n;
}

std::string rational_text(const Rational& q) { return q.get_str(); }

Rational rational_from_text(const json& j) {
  if (!j.is_string()) throw std::invalid_argument("rational must be a string \"p/q\"");
  Rational q;
  if (q.set_str(j.get<std::string>(), 10) != 0) throw std::invalid_argument("malformed rational " + j.dump());
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in " + j.dump());
  q.canonicalize();
  return q;
}

json matrix_to_json(const DenseMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

DenseMatrix matrix_from_json(const json& j, std::size_t dim, const std::string& name) {
  if (!j.is_array() || j.size() != dim) throw std::invalid_argument(name + ": expected " + std::to_string(dim) + " rows");
  DenseMatrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (!j[r].is_array() || j[r].size() != dim) {
      throw std::invalid_argument(name + ": row " + std::to_string(r) + " has the wrong length");
    }
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = scalar_from_json(j[r][c]);
  }
  return m;
}

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field ") + key);
  return j.at(key);
}

template <typename Visit>
void for_each_matrix(const MatrixBundle& b, Visit visit) {
  const bool momentum = b.vectors.kind == VectorKind::Momentum;
  for (std::size_t k = 0; k < 3; ++k) visit(kJNames[k], b.generators.J[k]);
  for (std::size_t k = 0; k < 3; ++k) visit(kKNames[k], b.generators.K[k]);
  for (std::size_t mu = 0; mu < 4; ++mu) visit(momentum ? kPNames[mu] : kVNames[mu], b.vectors.V[mu]);
}

json header_json(const MatrixBundle& b) {
  json j;
  j["schemaVersion"] = MatrixBundle::kSchemaVersion;
  j["spins"] = b.spins_twice;
  j["caseTag"] = to_string(b.vectors.tag);
  j["params"] = {{"t12", scalar_to_json(b.vectors.params.t12)}, {"t21", scalar_to_json(b.vectors.params.t21)}};
  j["kind"] = b.vectors.kind == VectorKind::Momentum ? "momentum" : "vector";
  j["source"] = to_string(b.source);
  j["block"] = b.block;
  j["layout"] = kLayout;
  j["dimension"] = b.vectors.dimension();
  return j;
}

}  // namespace

std::string to_string(Source source) {
  switch (source) {
    case Source::ClosedForm: return "appendixA";
    case Source::Recursion: return "recursion";
    case Source::Lyubarskii: return "lyubarskii";
  }
  return "unknown";
}

Source source_from_string(const std::string& name) {
  if (name == "appendixA") return Source::ClosedForm;
  if (name == "recursion") return Source::Recursion;
  if (name == "lyubarskii") return Source::Lyubarskii;
  throw std::invalid_argument("unknown source '" + name + "'");
}

VectorSet build_vectors(Source source, Spin a, Spin b, Spin c, Spin d, const FreeParams& params) {
  switch (source) {
    case Source::ClosedForm: return closed_form_vectors(a, b, c, d, params);
    case Source::Recursion: return vectors_from_coefficients(recursion_solve(a, b, c, d, params));
    case Source::Lyubarskii: return lyubarskii_vectors(a, b, c, d, {params.t12, params.t21});
  }
  throw std::invalid_argument("unknown source");
}

MatrixBundle make_bundle(Source source, const std::string& block, const VectorSet& v) {
  MatrixBundle b;
  b.spins_twice = {v.upper.left.twice(), v.upper.right.twice(), v.lower.left.twice(), v.lower.right.twice()};
  b.source = source;
  b.block = block;
  b.generators = generators_for(v);
  b.vectors = v;
  return b;
}

json scalar_to_json(const RadicalScalar& s) {
  json terms = json::array();
  for (const auto& t : s.terms()) {
    terms.push_back({{"d", t.radicand}, {"re", rational_text(t.re)}, {"im", rational_text(t.im)}});
  }
  return terms;
}

RadicalScalar scalar_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("scalar must be an array of terms");
  std::vector<RadicalScalar::Term> terms;
  for (const auto& t : j) {
    const json& d = require(t, "d");
    if (!d.is_number_unsigned() || d.get<std::uint64_t>() == 0) throw std::invalid_argument("radicand must be a positive integer");
    terms.push_back({d.get<std::uint64_t>(), rational_from_text(require(t, "re")), rational_from_text(require(t, "im"))});
  }
  try {
    return RadicalScalar::from_terms(std::move(terms));
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("bad scalar: ") + e.what());
  }
}

json bundle_to_json(const MatrixBundle& b) {
  json j = header_json(b);
  json matrices = json::object();
  for_each_matrix(b, [&](const char* name, const DenseMatrix& m) { matrices[name] = matrix_to_json(m); });
  j["matrices"] = std::move(matrices);
  return j;
}

MatrixBundle bundle_from_json(const json& j) {
  if (require(j, "schemaVersion") != MatrixBundle::kSchemaVersion) throw std::invalid_argument("unsupported schemaVersion");
  MatrixBundle b;
  const json& spins = require(j, "spins");
  if (!spins.is_array() || spins.size() != 4) throw std::invalid_argument("spins must hold four doubled integers");
  for (std::size_t k = 0; k < 4; ++k) {
    if (!spins[k].is_number_integer() || spins[k].get<int>() < 0) throw std::invalid_argument("spins must be nonnegative integers");
    b.spins_twice[k] = spins[k].get<int>();
  }
  b.source = source_from_string(require(j, "source").get<std::string>());
  b.block = require(j, "block").get<std::string>();
  if (b.block != "both" && b.block != "keep12" && b.block != "keep21") throw std::invalid_argument("unknown block " + b.block);

  const SpinPair upper{Spin::from_twice(b.spins_twice[0]), Spin::from_twice(b.spins_twice[1])};
  const SpinPair lower{Spin::from_twice(b.spins_twice[2]), Spin::from_twice(b.spins_twice[3])};
  b.vectors = zero_vector_set(upper, lower);
  if (to_string(b.vectors.tag) != require(j, "caseTag").get<std::string>()) {
    throw std::invalid_argument("caseTag does not match spins");
  }
  const std::string kind = require(j, "kind").get<std::string>();
  if (kind != "vector" && kind != "momentum") throw std::invalid_argument("unknown kind " + kind);
  b.vectors.kind = kind == "momentum" ? VectorKind::Momentum : VectorKind::Vector;
  const json& params = require(j, "params");
  b.vectors.params = {scalar_from_json(require(params, "t12")), scalar_from_json(require(params, "t21"))};

  const std::size_t dim = b.vectors.dimension();
  if (require(j, "dimension") != dim) throw std::invalid_argument("dimension does not match spins");
  b.generators.spins = {upper, lower};
  const json& matrices = require(j, "matrices");
  const bool momentum = b.vectors.kind == VectorKind::Momentum;
  for (std::size_t k = 0; k < 3; ++k) {
    b.generators.J[k] = matrix_from_json(require(matrices, kJNames[k]), dim, kJNames[k]);
    b.generators.K[k] = matrix_from_json(require(matrices, kKNames[k]), dim, kKNames[k]);
  }
  for (std::size_t mu = 0; mu < 4; ++mu) {
    const char* name = momentum ? kPNames[mu] : kVNames[mu];
    b.vectors.V[mu] = matrix_from_json(require(matrices, name), dim, name);
  }
  if (matrices.size() != 10) throw std::invalid_argument("expected exactly ten matrices");
  return b;
}

std::string serialize_exact(const MatrixBundle& bundle) { return bundle_to_json(bundle).dump(2) + "\n"; }

MatrixBundle parse_bundle(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("invalid JSON: ") + e.what());
  }
  try {
    return bundle_from_json(j);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed bundle: ") + e.what());
  }
}

std::string serialize_float(const MatrixBundle& b) {
  json j = header_json(b);
  json matrices = json::object();
  for_each_matrix(b, [&](const char* name, const DenseMatrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const auto z = m(r, c).to_complex();
        row.push_back({z.real(), z.imag()});
      }
      rows.push_back(std::move(row));
    }
    matrices[name] = std::move(rows);
  });
  j["matrices"] = std::move(matrices);
  j["params"] = {{"t12", b.vectors.params.t12.to_string()}, {"t21", b.vectors.params.t21.to_string()}};
  return j.dump(2) + "\n";
}

std::string serialize_plain(const MatrixBundle& b) {
  std::ostringstream out;
  out << "spins " << b.vectors.upper.to_string() << " + " << b.vectors.lower.to_string() << "  " << to_string(b.vectors.tag)
      << "  t12 = " << b.vectors.params.t12.to_string() << "  t21 = " << b.vectors.params.t21.to_string() << "\n";
  for_each_matrix(b, [&](const char* name, const DenseMatrix& m) {
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        cells.push_back(m(r, c).to_string());
        width = std::max(width, display_width(cells.back()));
      }
    }
    out << "\n" << name << ":\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      out << " ";
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const std::string& cell = cells[r * m.cols() + c];
        out << " " << std::string(width - display_width(cell), ' ') << cell;
      }
      out << "\n";
    }
  });
  return out.str();
}

json report_to_json(const RuleReport& report) {
  json j = {{"ruleId", report.rule_id}, {"holds", report.holds}};
  if (report.first_violation) {
    j["firstViolation"] = {{"row", report.first_violation->row},
                           {"col", report.first_violation->col},
                           {"residual", report.first_violation->residual.to_string()}};
  }
  return j;
}

}  // namespace poincare
