#pragma once

#include <string>

#include "qent/types.hpp"

namespace qent::svg {

enum class Component { Abs, Real, Imag };

Component parse_component(const std::string& name);  // "abs" | "real" | "imag"

struct Options {
  Component component = Component::Abs;
  int cell_px = 48;
};

/// Heat-map rendering of a matrix: one rect of class "cell" per entry,
/// colored by the selected component, scaled to the largest magnitude.
/// Abs uses a white-to-blue ramp; real/imag use a diverging red/blue ramp
/// around zero. Output bytes depend only on the input and options.
std::string render_matrix(const ComplexMatrix<double>& m, const Options& opt = {});

}  // namespace qent::svg
