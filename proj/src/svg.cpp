#include "quantics/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace quantics {

namespace {

constexpr double kPanelW = 400.0;
constexpr double kPanelH = 400.0;
constexpr double kDiskR = 160.0;

void render_panel(std::ostringstream& os, const FigurePanel& panel, double x0) {
  const double cx = x0 + kPanelW / 2.0;
  const double cy = kPanelH / 2.0 + 10.0;

  double max_r = 1.0;
  for (const auto& p : panel.points)
    if (!p.at_infinity) max_r = std::max(max_r, std::abs(p.position));
  const double scale = kDiskR * 0.85 / max_r;

  os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << kDiskR
     << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
  // equatorial axes
  os << "<line x1=\"" << cx - kDiskR << "\" y1=\"" << cy << "\" x2=\"" << cx + kDiskR
     << "\" y2=\"" << cy << "\" stroke=\"#ddd\"/>\n";
  os << "<line x1=\"" << cx << "\" y1=\"" << cy - kDiskR << "\" x2=\"" << cx << "\" y2=\""
     << cy + kDiskR << "\" stroke=\"#ddd\"/>\n";

  std::string at_inf;
  for (const auto& p : panel.points) {
    if (p.at_infinity) {
      if (!at_inf.empty()) at_inf += ", ";
      at_inf += p.label.empty() ? std::string("point") : p.label;
      at_inf += " = inf";
      continue;
    }
    const double px = cx + p.position.real() * scale;
    const double py = cy - p.position.imag() * scale;
    if (p.pole) {
      os << "<path d=\"M" << px - 5 << " " << py - 5 << " L" << px + 5 << " " << py + 5 << " M"
         << px - 5 << " " << py + 5 << " L" << px + 5 << " " << py - 5
         << "\" stroke=\"#c00\" stroke-width=\"2\"/>\n";
    } else {
      os << "<circle cx=\"" << px << "\" cy=\"" << py << "\" r=\"4\" fill=\""
         << (p.highlight ? "#c60" : "#036") << "\"/>\n";
    }
    if (!p.label.empty())
      os << "<text x=\"" << px + 6 << "\" y=\"" << py - 6
         << "\" font-size=\"12\" font-family=\"sans-serif\">" << p.label << "</text>\n";
  }

  std::string caption = panel.title;
  if (!at_inf.empty()) caption += caption.empty() ? at_inf : "   (" + at_inf + ")";
  if (!caption.empty())
    os << "<text x=\"" << x0 + 12 << "\" y=\"20\" font-size=\"13\" "
       << "font-family=\"sans-serif\">" << caption << "</text>\n";
}

}  // namespace

std::string render_figure(const std::vector<FigurePanel>& panels) {
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"400\" "
     << "viewBox=\"0 0 800 400\">\n";
  os << "<rect width=\"800\" height=\"400\" fill=\"white\"/>\n";
  const std::size_t n = std::min<std::size_t>(panels.size(), 2);
  for (std::size_t i = 0; i < n; ++i)
    render_panel(os, panels[i], n == 1 ? 200.0 : static_cast<double>(i) * kPanelW);
  os << "</svg>\n";
  return os.str();
}

}  // namespace quantics
