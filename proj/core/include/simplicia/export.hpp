#pragma once

#include <string>

#include "simplicia/complex.hpp"

namespace simplicia {

/// LaTeX fragment: a longtable with one facet per row, followed by the
/// f-vector, Euler characteristic and homology.
std::string export_latex(const Complex& c);

/// polymake/TOPAZ plain-text sections: FACETS with 0-based vertices in
/// braces, one facet per line, then VERTEX_LABELS.
std::string export_topaz(const Complex& c);

/// Reads the FACETS (and optional VERTEX_LABELS) section written by export_topaz.
Complex import_topaz(const std::string& text);

}  // namespace simplicia
