#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "text_util.hpp"

namespace ektool {

struct Polyline {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// Writes a minimal standalone SVG 1.1 line plot: fixed 800x600 viewport,
/// linear axes, one stroked polyline per series, axis labels and range
/// annotations. Presentation only; every number here also lives in the CSV.
inline void write_svg_plot(std::ostream& os, const std::vector<Polyline>& series,
                           const std::string& x_label, const std::string& y_label) {
  constexpr double kWidth = 800, kHeight = 600;
  constexpr double kMarginLeft = 70, kMarginRight = 20, kMarginTop = 20, kMarginBottom = 50;
  static const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};
  constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
  bool first = true;
  for (const auto& s : series) {
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (first) {
        xmin = xmax = s.x[i];
        ymin = ymax = s.y[i];
        first = false;
      }
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      ymin = std::min(ymin, s.y[i]);
      ymax = std::max(ymax, s.y[i]);
    }
  }
  if (xmax - xmin <= 0) xmax = xmin + 1;
  if (ymax - ymin <= 0) ymax = ymin + 1;

  auto px = [&](double x) {
    return kMarginLeft + (x - xmin) / (xmax - xmin) * (kWidth - kMarginLeft - kMarginRight);
  };
  auto py = [&](double y) {
    return kHeight - kMarginBottom -
           (y - ymin) / (ymax - ymin) * (kHeight - kMarginTop - kMarginBottom);
  };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" "
        "height=\"600\" viewBox=\"0 0 800 600\">\n";
  os << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  os << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kHeight - kMarginBottom << "\" x2=\""
     << kWidth - kMarginRight << "\" y2=\"" << kHeight - kMarginBottom
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\"" << kMarginLeft
     << "\" y2=\"" << kHeight - kMarginBottom << "\" stroke=\"black\"/>\n";

  os << "<text x=\"" << (kMarginLeft + kWidth - kMarginRight) / 2 << "\" y=\"" << kHeight - 12
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" << x_label
     << "</text>\n";
  os << "<text x=\"18\" y=\"" << (kMarginTop + kHeight - kMarginBottom) / 2
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
        "transform=\"rotate(-90 18 "
     << (kMarginTop + kHeight - kMarginBottom) / 2 << ")\">" << y_label << "</text>\n";

  os << "<text x=\"" << kMarginLeft << "\" y=\"" << kHeight - kMarginBottom + 18
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
     << format_table(xmin) << "</text>\n";
  os << "<text x=\"" << kWidth - kMarginRight << "\" y=\"" << kHeight - kMarginBottom + 18
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
     << format_table(xmax) << "</text>\n";
  os << "<text x=\"" << kMarginLeft - 6 << "\" y=\"" << kHeight - kMarginBottom
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
     << format_table(ymin) << "</text>\n";
  os << "<text x=\"" << kMarginLeft - 6 << "\" y=\"" << kMarginTop + 10
     << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
     << format_table(ymax) << "</text>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    const auto& s = series[si];
    const char* color = kPalette[si % kPaletteSize];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (i) os << ' ';
      os << format_shortest(px(s.x[i])) << ',' << format_shortest(py(s.y[i]));
    }
    os << "\"/>\n";
    os << "<text x=\"" << kWidth - kMarginRight - 8 << "\" y=\""
       << kMarginTop + 16 + 16 * static_cast<double>(si)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << color
       << "\">" << s.label << "</text>\n";
  }
  os << "</svg>\n";
}

}  // namespace ektool
