#pragma once

#include "json.hpp"

#include "misoshift/analyze.hpp"
#include "misoshift/completion.hpp"

namespace misoshift {

using ordered_json = nlohmann::ordered_json;

// Wire formats.  Complex entries are always emitted as [re, im] pairs; bare
// numbers are accepted as re with im = 0 on parse.

ordered_json to_json(const SquareMatrix& m);
SquareMatrix matrix_from_json(const ordered_json& j, int dim);

ordered_json to_json(const MatrixPolynomial& p);
MatrixPolynomial polynomial_from_json(const ordered_json& j);

ordered_json to_json(const WeightSequence& w);
WeightSequence weights_from_json(const ordered_json& j);

ordered_json to_json(const IsometryReport& r);
ordered_json to_json(const PreconditionReport& r);
ordered_json to_json(const ConstructionResult& r);
ordered_json to_json(const CompletionResult& r);
ordered_json to_json(const CommutativityEquivalenceReport& r);
ordered_json to_json(const AdjointReport& r);

/// Parse a list of prefix matrices {"dim": N, "matrices": [...]}.
std::vector<SquareMatrix> prefix_from_json(const ordered_json& j);

ordered_json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const ordered_json& j);

} // namespace misoshift
