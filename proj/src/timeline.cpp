#include "tvdance/timeline.hpp"

#include <algorithm>
#include <sstream>

namespace tvdance {

namespace {

std::string glyph_label(const Event& e) {
  if (const auto* c = std::get_if<ClassicalPass>(&e)) {
    return (c->strand == Strand::Over ? "O" : "U") + std::to_string(c->crossing);
  }
  if (const auto* v = std::get_if<VirtualPass>(&e)) return "V" + std::to_string(v->crossing);
  return "T" + std::to_string(std::get<TwistBar>(e).bar);
}

}  // namespace

std::string svg_timeline(const Schedule& schedule, const Diagram& diagram, const TimelineStyle& style) {
  std::size_t lanes = 0;
  for (const Step& s : schedule.steps) lanes = std::max(lanes, s.dancer + 1);

  const int steps = static_cast<int>(schedule.steps.size());
  const int x0 = style.margin + style.label_width;
  const int width = x0 + style.step_width * (steps + 1) + style.margin;
  const int height = 2 * style.margin + style.lane_height * static_cast<int>(lanes);
  auto lane_y = [&](std::size_t d) {
    return style.margin + style.lane_height * static_cast<int>(d) + style.lane_height / 2;
  };
  auto color = [&](std::size_t d) { return style.dancer_palette[d % style.dancer_palette.size()]; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" font-family=\"monospace\" font-size=\"11\">\n";

  for (std::size_t d = 0; d < lanes; ++d) {
    const int y = lane_y(d);
    out << "  <g class=\"lane\" id=\"dancer-" << d << "\">\n"
        << "    <text x=\"" << style.margin << "\" y=\"" << y + 4 << "\" fill=\"" << color(d)
        << "\">dancer " << d << "</text>\n";

    // Stroke into each step uses the facing held before that step.
    int prev_x = x0;
    std::ostringstream glyphs;
    for (int t = 0; t < steps; ++t) {
      const Step& s = schedule.steps[t];
      if (s.dancer != d) continue;
      const Event& e = diagram[s.event_index];
      const Facing before = is_twist_bar(e) ? flip(s.facing) : s.facing;
      const int x = x0 + style.step_width * (t + 1);
      out << "    <line x1=\"" << prev_x << "\" y1=\"" << y << "\" x2=\"" << x << "\" y2=\"" << y
          << "\" stroke=\"" << color(d) << "\" stroke-width=\"2\"";
      if (before == Facing::Backward) out << " stroke-dasharray=\"" << style.backward_dash << "\"";
      out << "/>\n";
      glyphs << "    <circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"11\" fill=\"white\" stroke=\""
             << color(d) << "\"/>\n"
             << "    <text x=\"" << x << "\" y=\"" << y + 4 << "\" text-anchor=\"middle\">"
             << glyph_label(e) << "</text>\n";
      prev_x = x;
    }
    out << glyphs.str() << "  </g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace tvdance
