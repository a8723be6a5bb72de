#ifndef TVDANCE_TIMELINE_HPP
#define TVDANCE_TIMELINE_HPP

#include <string>
#include <vector>

#include "tvdance/model.hpp"
#include "tvdance/scheduler.hpp"

namespace tvdance {

// Dancer-lane rendering of a schedule. Forward-facing stretches are solid,
// backward-facing stretches dashed.
struct TimelineStyle {
  int lane_height = 40;
  int step_width = 36;
  int margin = 20;
  int label_width = 70;
  std::string backward_dash = "6,4";
  std::vector<std::string> dancer_palette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                             "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
};

// Deterministic SVG 1.1 text: one lane per dancer, x = linearization index.
std::string svg_timeline(const Schedule& schedule, const Diagram& diagram,
                         const TimelineStyle& style = {});

}  // namespace tvdance

#endif  // TVDANCE_TIMELINE_HPP
