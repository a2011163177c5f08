#pragma once

#include "ahg/chain_complex.hpp"
#include "ahg/cochain.hpp"
#include "ahg/invariants.hpp"

#include <string>

namespace ahg {

/// Geometric complex file: {"cells": {"0": ["v0", ...], ...},
/// "boundary": {"1": [[target-dim x source-dim integers]], ...}}.
/// Boundary keys map degree n to the matrix of d_n in cell coordinates.
GeometricComplex parse_geometric_json(const std::string& text);
std::string render_geometric_json(const GeometricComplex& c);

/// Gauge complex file: {"groups": {"1": [2], ...}, "boundary": {"2": [[...]]}}
/// with invariant-factor lists (0 marks a free factor) and boundary matrices
/// in the coordinates of the listed factors.
ChainComplex parse_gauge_json(const std::string& text);
std::string render_gauge_json(const ChainComplex& g);

/// Cochain: {"p": 0, "components": {"<degree>/<cell-label>": [coords]}} with
/// canonical coordinates in the value group; omitted components are zero.
Cochain parse_cochain_json(const HomComplex& h, const std::string& text);
std::string render_cochain_json(const HomComplex& h, const Cochain& f);

/// All three GSD factorizations; Int fields are decimal strings.
std::string render_gsd_json(const GsdReport& r);
GsdReport parse_gsd_json(const std::string& text);

/// Whole file as a string; throws std::runtime_error when unreadable.
std::string read_file(const std::string& path);

} // namespace ahg
