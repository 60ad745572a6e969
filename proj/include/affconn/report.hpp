#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "affconn/affine.hpp"
#include "affconn/connection.hpp"
#include "affconn/lie.hpp"
#include "affconn/obstructions.hpp"
#include "affconn/search.hpp"

namespace affconn {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Input files. All coefficients are ["re", "im"] pairs of rational strings.
//
//   algebra:    {"name", "dim", "basis": [..], "brackets": [{"left", "right",
//                "result": [[re, im] x dim]}]}
//   connection: {"dim", "gamma": dim x dim x dim table}, gamma[i][j][k] being
//                the e_k coefficient of nabla_{e_i} e_j
//   affine map: {"dim", "images": [{"matrix": dim x dim, "translation": dim}]}
//
// Errors are ParseError with a line (syntax errors) or a JSON pointer
// (schema errors), plus JacobiViolation / InconsistentEntry from validation.
// ---------------------------------------------------------------------------

struct NamedAlgebra {
  std::string name;
  LieAlgebra algebra;
};

NamedAlgebra parse_algebra(std::string_view text);
NamedAlgebra load_algebra(const std::string& path);
InvariantConnection parse_connection(std::string_view text, const LieAlgebra& g);
InvariantConnection load_connection(const std::string& path, const LieAlgebra& g);
AffMap parse_affmap(std::string_view text, const LieAlgebra& g);
AffMap load_affmap(const std::string& path, const LieAlgebra& g);

json coefficient_to_json(const GaussRat& z);
json algebra_to_json(const std::string& name, const LieAlgebra& g);
json connection_to_json(const InvariantConnection& conn);
json affmap_to_json(const AffMap& m);

// ---------------------------------------------------------------------------
// Reports.
// ---------------------------------------------------------------------------

/// Tensor summary for one connection.
struct ConnectionAnalysis {
  std::string name;
  bool flat = false;
  bool torsion_free = false;
  /// Absent when the Weyl tensor is undefined (torsion or dim <= 2).
  std::optional<bool> projectively_flat;
  std::string note;

  friend bool operator==(const ConnectionAnalysis&, const ConnectionAnalysis&) = default;
};

ConnectionAnalysis analyze_connection(std::string name, const InvariantConnection& conn);

struct Report {
  std::string algebra_name;
  LieAlgebra algebra;
  StructuralProfile profile;
  DecisionReport decision;
  std::vector<ConnectionAnalysis> connections;
};

bool operator==(const Report& a, const Report& b);

/// Profile, existence decision, and the zero and standard connections.
Report analyze(const std::string& name, const LieAlgebra& g, const SearchConfig& budget);

json report_to_json(const Report& r);
Report report_from_json(const json& j);
std::string report_to_text(const Report& r);

struct ClassificationRow {
  std::string algebra;
  Verdict verdict = Verdict::unknown;
  Report report;
};

/// The four three-dimensional unimodular catalog algebras.
std::vector<ClassificationRow> classify_dim3(const SearchConfig& budget);

json classification_to_json(const std::vector<ClassificationRow>& rows);
std::vector<ClassificationRow> classification_from_json(const json& j);
std::string classification_to_text(const std::vector<ClassificationRow>& rows);

/// Report for the `search` subcommand.
json search_to_json(const std::string& name, const SearchOutcome& outcome);
std::string search_to_text(const std::string& name, const SearchOutcome& outcome);

}  // namespace affconn
