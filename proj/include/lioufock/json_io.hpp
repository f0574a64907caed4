#pragma once

#include <json.hpp>

#include "lioufock/lindblad.hpp"
#include "lioufock/types.hpp"

namespace lioufock::io {

using nlohmann::json;

// complex scalars as [re, im]; matrices/vectors row-major nested arrays
json encode(Cplx z);
json encode(const CVec& v);
json encode(const CMat& m);
Cplx decode_cplx(const json& j, const std::string& where);
CVec decode_cvec(const json& j, const std::string& where);
CMat decode_cmat(const json& j, const std::string& where);

// ModelFile schema:
// { statistics, n_modes, cutoff?, H_hop, H_pair?, lindblad_ops: [{u, v}] }
// Throws std::invalid_argument with the offending field named.
lindblad::QuadraticLindbladModel parse_model(const json& j);
json model_to_json(const lindblad::QuadraticLindbladModel& model);

// FNV-1a over the canonical (sorted-key) dump
std::string input_hash(const json& j);

} // namespace lioufock::io
