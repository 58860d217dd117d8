#pragma once

#include <array>
#include <string>
#include <vector>

#include "poincare/generators.hpp"
#include "poincare/momentum.hpp"
#include "poincare/vectors.hpp"
#include "poincare/verifier.hpp"
#include "vendor_json.hpp"

namespace poincare {

/// How the off-diagonal blocks were produced.
enum class Source { ClosedForm, Recursion, Lyubarskii };

std::string to_string(Source source);
/// Accepts "appendixA", "recursion", "lyubarskii"; throws std::invalid_argument.
Source source_from_string(const std::string& name);

/// Builds the vector set of (A,B) ⊕ (C,D) along one construction path. For
/// the Lyubarskii path the two parameters are λ12 and λ21. Throws
/// NoSolutionError for inadmissible spins.
VectorSet build_vectors(Source source, Spin a, Spin b, Spin c, Spin d, const FreeParams& params);

/// Everything needed to re-verify a generated set without rebuilding it.
struct MatrixBundle {
  static constexpr int kSchemaVersion = 1;

  std::array<int, 4> spins_twice{};
  Source source = Source::ClosedForm;
  std::string block = "both";  // "both", "keep12" or "keep21"
  GeneratorSet generators;
  VectorSet vectors;
};

MatrixBundle make_bundle(Source source, const std::string& block, const VectorSet& v);

nlohmann::json scalar_to_json(const RadicalScalar& s);
RadicalScalar scalar_from_json(const nlohmann::json& j);

nlohmann::json bundle_to_json(const MatrixBundle& bundle);
/// Throws std::invalid_argument on malformed or inconsistent input.
MatrixBundle bundle_from_json(const nlohmann::json& j);

/// Canonical exact text: sorted keys, two-space indent, trailing newline.
std::string serialize_exact(const MatrixBundle& bundle);
MatrixBundle parse_bundle(const std::string& text);

/// Same layout with every entry replaced by [re, im] doubles.
std::string serialize_float(const MatrixBundle& bundle);
/// Human-readable grids, one per matrix.
std::string serialize_plain(const MatrixBundle& bundle);

nlohmann::json report_to_json(const RuleReport& report);

}  // namespace poincare
