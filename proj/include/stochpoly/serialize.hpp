#pragma once

// JSON formats shared by the CLI and the asset generator.
//
//   rational      "p/q" or "p" (canonical), optional leading '-'
//   tensor        {"n": n, "entries": [[[r, ...] x n] x n] x n}, entries[i][j][k]
//   latin square  {"n": n, "cells": [[int, ...], ...]}, symbols 1..n
//   matrix        {"n": n, "rows": [[r, ...], ...]}
//   decomposition [{"weight": r, "perm": [col, ...]}], 0-based columns
//   certificate   {"verdict": "vertex|not_vertex|infeasible", "support_size",
//                  "rank", "violated"?}
//
// Index triples and line descriptors in reports are 1-based.

#include <string>

#include <json.hpp>

#include "stochpoly/birkhoff.hpp"
#include "stochpoly/bounds.hpp"
#include "stochpoly/enumeration.hpp"
#include "stochpoly/lp.hpp"
#include "stochpoly/polytope.hpp"
#include "stochpoly/tensor.hpp"

namespace stochpoly {

using Json = nlohmann::ordered_json;

/// Accepts a canonical string or a JSON integer.
Rational rational_from_json(const Json& j);

Json to_json(const Tensor3& t);
Tensor3 tensor_from_json(const Json& j);

Json to_json(const LatinSquare& s);
LatinSquare latin_from_json(const Json& j);

Json to_json(const StochasticityViolation& v);
Json to_json(const VertexCertificate& c);
std::string verdict_name(VertexVerdict v);

Json to_json(const VertexSet& s, bool include_vertices = true);
Json to_json(const FeasibilityResult& r);

Json to_json(const DoublyStochasticMatrix& m);
/// Validates double stochasticity; throws std::invalid_argument.
DoublyStochasticMatrix matrix_from_json(const Json& j);
Json to_json(const Decomposition& d);

Json to_json(const BoundReport& r);

}  // namespace stochpoly
