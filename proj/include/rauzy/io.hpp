#pragma once

#include <string>

#include "rauzy/certify.hpp"
#include "rauzy/extend.hpp"
#include "rauzy/geometry.hpp"
#include "rauzy/induction.hpp"
#include "rauzy/lyapunov.hpp"

namespace rauzy {

inline constexpr int kSchemaVersion = 1;

// Diagram cache: versioned JSON with canonical vertex text, edge table,
// builder metadata and a content hash; byte-stable across rebuilds.
std::string diagram_to_cache(const RauzyDiagram& d);
RauzyDiagram diagram_from_cache(const std::string& text);  // verifies the hash

std::string parameter_point_to_json(const ParameterPoint& p);
ParameterPoint parameter_point_from_json(const std::string& text);

std::string trajectory_to_json(const Trajectory& t);

std::string matrix_to_json(const IMat& m, const std::string& kind, const std::string& basis_note);
IMat matrix_from_json(const std::string& text);
std::string matrix_to_csv(const IMat& m);

std::string certificate_to_json(const std::string& component, const DensityCertificate& c);

std::string spectrum_to_json(const SpectrumEstimate& e);

std::string extension_to_json(const ExtensionWitness& w);

}  // namespace rauzy
