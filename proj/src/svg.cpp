#include "qent/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qent/errors.hpp"

namespace qent::svg {

namespace {

double component_of(const std::complex<double>& z, Component c) {
  switch (c) {
    case Component::Abs: return std::abs(z);
    case Component::Real: return z.real();
    case Component::Imag: return z.imag();
  }
  return 0;
}

struct Rgb {
  int r, g, b;
};

// abs: white -> deep blue; real/imag: diverging red (negative) / blue
// (positive) around white. `v` is the value scaled by the largest magnitude.
Rgb color_for(double v, Component c) {
  auto lerp = [](int a, int b, double t) {
    return static_cast<int>(std::lround(a + (b - a) * t));
  };
  const double t = std::clamp(std::abs(v), 0.0, 1.0);
  if (c == Component::Abs || v >= 0) return {lerp(255, 11, t), lerp(255, 83, t), lerp(255, 148, t)};
  return {lerp(255, 176, t), lerp(255, 32, t), lerp(255, 32, t)};
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

Component parse_component(const std::string& name) {
  if (name == "abs") return Component::Abs;
  if (name == "real") return Component::Real;
  if (name == "imag") return Component::Imag;
  throw ParseError("unknown component \"" + name + "\" (abs|real|imag)");
}

std::string render_matrix(const ComplexMatrix<double>& m, const Options& opt) {
  const int n = static_cast<int>(m.rows());
  const int cell = opt.cell_px;
  const int margin = 4;
  const int side = n * cell + 2 * margin;

  double scale = 0;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      scale = std::max(scale, std::abs(component_of(m(i, j), opt.component)));

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << side << "\" height=\""
     << side << "\" viewBox=\"0 0 " << side << ' ' << side << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << side << "\" height=\"" << side
     << "\" fill=\"#ffffff\"/>\n";
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double v = component_of(m(i, j), opt.component);
      const Rgb rgb = color_for(scale > 0 ? v / scale : 0.0, opt.component);
      char fill[16];
      std::snprintf(fill, sizeof fill, "#%02x%02x%02x", rgb.r, rgb.g, rgb.b);
      os << "<rect class=\"cell\" x=\"" << margin + j * cell << "\" y=\""
         << margin + i * cell << "\" width=\"" << cell << "\" height=\"" << cell
         << "\" fill=\"" << fill << "\" stroke=\"#cccccc\">";
      os << "<title>(" << i + 1 << ',' << j + 1 << ") " << fmt(m(i, j).real()) << ' '
         << (m(i, j).imag() < 0 ? "- " : "+ ") << fmt(std::abs(m(i, j).imag()))
         << "i</title></rect>\n";
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace qent::svg
