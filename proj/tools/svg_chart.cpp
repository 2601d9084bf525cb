#include "svg_chart.hpp"

#include <array>
#include <string>
#include <string_view>

#include "misinfo/format.hpp"

namespace misinfo::cli {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 500.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 60.0;
constexpr int kTicks = 5;

constexpr std::array<std::string_view, 10> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string escape_xml(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double x) { return format_fixed(x, 2); }

}  // namespace

void write_svg_chart(const TimeSeries& series, std::ostream& out) {
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const std::size_t last = series.snapshots.empty() ? 0 : series.snapshots.size() - 1;
  const double t_max = last == 0 ? 1.0 : series.time(last);

  auto x_of = [&](double t) { return kLeft + plot_w * t / t_max; };
  auto y_of = [&](double lambda) { return kTop + plot_h * (1.0 - lambda); };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(kWidth) << "\" height=\""
      << num(kHeight) << "\" viewBox=\"0 0 " << num(kWidth) << ' ' << num(kHeight) << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << num(kWidth) << "\" height=\"" << num(kHeight)
      << "\" fill=\"white\"/>\n";

  // Axes.
  out << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\""
      << num(kLeft + plot_w) << "\" y2=\"" << num(kTop + plot_h) << "\"/>\n"
      << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(kLeft)
      << "\" y2=\"" << num(kTop + plot_h) << "\"/>\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double frac = static_cast<double>(i) / kTicks;
    const double x = kLeft + plot_w * frac;
    const double y = kTop + plot_h * (1.0 - frac);
    out << "<line x1=\"" << num(x) << "\" y1=\"" << num(kTop + plot_h) << "\" x2=\"" << num(x)
        << "\" y2=\"" << num(kTop + plot_h + 5) << "\"/>\n"
        << "<line x1=\"" << num(kLeft - 5) << "\" y1=\"" << num(y) << "\" x2=\"" << num(kLeft)
        << "\" y2=\"" << num(y) << "\"/>\n";
  }
  out << "</g>\n";

  out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double frac = static_cast<double>(i) / kTicks;
    out << "<text x=\"" << num(kLeft + plot_w * frac) << "\" y=\"" << num(kTop + plot_h + 20)
        << "\" text-anchor=\"middle\">" << format_significant(t_max * frac, 6) << "</text>\n"
        << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(kTop + plot_h * (1.0 - frac) + 4)
        << "\" text-anchor=\"end\">" << format_significant(frac, 6) << "</text>\n";
  }
  out << "<text x=\"" << num(kLeft + plot_w / 2) << "\" y=\"" << num(kHeight - 15)
      << "\" text-anchor=\"middle\">time</text>\n"
      << "<text x=\"20\" y=\"" << num(kTop + plot_h / 2) << "\" text-anchor=\"middle\" "
      << "transform=\"rotate(-90 20 " << num(kTop + plot_h / 2) << ")\">lambda</text>\n"
      << "</g>\n";

  out << "<g fill=\"none\" stroke-width=\"1.5\">\n";
  for (std::size_t k = 0; k < series.nodes.size(); ++k) {
    out << "<polyline stroke=\"" << kPalette[k % kPalette.size()] << "\" points=\"";
    for (std::size_t n = 0; n < series.snapshots.size(); ++n) {
      if (n > 0) out << ' ';
      out << num(x_of(series.time(n))) << ',' << num(y_of(series.snapshots[n].lambda[k]));
    }
    out << "\"><title>" << escape_xml(series.nodes[k]) << "</title></polyline>\n";
  }
  out << "</g>\n</svg>\n";
}

}  // namespace misinfo::cli
