#pragma once

#include <string>

#include "starorder/automorphism.hpp"
#include "starorder/numerics.hpp"
#include "starorder/penrose.hpp"
#include "starorder/scalar_map.hpp"
#include "starorder/spectral_model.hpp"

namespace starorder::harness {

// Text fixtures are JSON documents:
//   matrix  {"dim": n, "entries": [[re, im], ...]}            row-major, n*n pairs
//   model   {"atoms": [{"value", "label", "multiplicity"}], "bands": [{"lo", "hi", "label"}]}
//   spec    {"alpha", "variant": "direct"|"adjoint", "antiunitary", "S": matrix, "T": matrix,
//            "h": {"kind", ...parameters}}
// Malformed documents raise ContractError.

ComplexMatrix parse_matrix(const std::string& text);
std::string dump_matrix(const ComplexMatrix& m);

SpectralModel parse_model(const std::string& text);
std::string dump_model(const SpectralModel& m);

ScalarMap parse_scalar_map(const std::string& text);
std::string dump_scalar_map(const ScalarMap& h);

AutomorphismSpec parse_spec(const std::string& text, const ToleranceConfig& tol = {});
std::string dump_spec(const AutomorphismSpec& s);

std::string dump_decomposition(const PenroseDecomposition& pd);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace starorder::harness
