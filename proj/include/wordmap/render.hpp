#ifndef WORDMAP_RENDER_HPP
#define WORDMAP_RENDER_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace wordmap {

enum class LabelPolicy { All, TopN, None };

struct PlotPoint {
    std::string label;
    double x = 0.0; // normalized [0,1]
    double y = 0.0;
};

struct HighlightGroup {
    std::string name;
    std::string color;               // SVG color
    std::vector<std::string> labels; // must reference existing point labels
};

struct PlotSpec {
    std::string title;
    std::vector<PlotPoint> points;
    std::vector<HighlightGroup> highlight_groups;
    std::uint32_t width = 900;
    std::uint32_t height = 900;
    LabelPolicy label_policy = LabelPolicy::TopN;
    std::uint32_t label_count = 100; // for TopN: label the first N points
};

/// Deterministic SVG scatter plot: one circle per point (highlight groups in
/// their colors, with a legend), one text element per labeled point, 5%
/// canvas margins, 3-decimal coordinates. Throws ValidationError on
/// duplicate point labels or highlight labels that match no point.
std::string render_svg(const PlotSpec& spec);

} // namespace wordmap

#endif
