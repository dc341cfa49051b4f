#include "wordmap/render.hpp"

#include <cstdio>
#include <unordered_map>
#include <unordered_set>

#include "wordmap/errors.hpp"

namespace wordmap {
namespace {

std::string xml_escape(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
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

std::string fmt(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", value);
    return buf;
}

constexpr const char* kDefaultColor = "#666666";

} // namespace

std::string render_svg(const PlotSpec& spec) {
    if (spec.width == 0 || spec.height == 0) {
        throw ArgumentError("plot canvas dimensions must be positive");
    }

    std::unordered_map<std::string, const HighlightGroup*> group_of;
    {
        std::unordered_set<std::string> seen;
        for (const PlotPoint& p : spec.points) {
            if (!seen.insert(p.label).second) {
                throw ValidationError("duplicate point label '" + p.label + "'");
            }
        }
        for (const HighlightGroup& group : spec.highlight_groups) {
            for (const std::string& label : group.labels) {
                if (!seen.count(label)) {
                    throw ValidationError("highlight group '" + group.name +
                                          "' references unknown label '" + label + "'");
                }
                group_of[label] = &group; // later groups win; order is caller-fixed
            }
        }
    }

    const double margin_x = 0.05 * spec.width;
    const double margin_y = 0.05 * spec.height;
    auto map_x = [&](double x) { return margin_x + x * (spec.width - 2.0 * margin_x); };
    // SVG y grows downward; flip so larger y plots higher.
    auto map_y = [&](double y) { return spec.height - (margin_y + y * (spec.height - 2.0 * margin_y)); };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(spec.width) + "\" height=\"" + std::to_string(spec.height) + "\">\n";
    svg += "<rect width=\"" + std::to_string(spec.width) + "\" height=\"" +
           std::to_string(spec.height) + "\" fill=\"white\"/>\n";
    if (!spec.title.empty()) {
        svg += "<text x=\"" + fmt(spec.width / 2.0) +
               "\" y=\"16\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">" +
               xml_escape(spec.title) + "</text>\n";
    }

    for (const PlotPoint& p : spec.points) {
        const HighlightGroup* group = nullptr;
        if (auto it = group_of.find(p.label); it != group_of.end()) group = it->second;
        svg += "<circle cx=\"" + fmt(map_x(p.x)) + "\" cy=\"" + fmt(map_y(p.y)) +
               "\" r=\"" + (group ? "3.5" : "2") + "\" fill=\"" +
               (group ? group->color : kDefaultColor) + "\" fill-opacity=\"" +
               (group ? "0.9" : "0.55") + "\"/>\n";
    }

    if (spec.label_policy != LabelPolicy::None) {
        std::size_t label_limit = spec.points.size();
        if (spec.label_policy == LabelPolicy::TopN) {
            label_limit = std::min<std::size_t>(label_limit, spec.label_count);
        }
        for (std::size_t i = 0; i < spec.points.size(); ++i) {
            const PlotPoint& p = spec.points[i];
            bool highlighted = group_of.count(p.label) != 0;
            if (i >= label_limit && !highlighted) continue; // highlighted points stay labeled
            svg += "<text x=\"" + fmt(map_x(p.x) + 4.0) + "\" y=\"" + fmt(map_y(p.y) - 3.0) +
                   "\" font-family=\"sans-serif\" font-size=\"8\" fill=\"#333333\">" +
                   xml_escape(p.label) + "</text>\n";
        }
    }

    double legend_y = 28.0;
    for (const HighlightGroup& group : spec.highlight_groups) {
        svg += "<circle cx=\"14\" cy=\"" + fmt(legend_y - 3.0) + "\" r=\"4\" fill=\"" +
               group.color + "\"/>\n";
        svg += "<text x=\"24\" y=\"" + fmt(legend_y) +
               "\" font-family=\"sans-serif\" font-size=\"11\">" + xml_escape(group.name) +
               "</text>\n";
        legend_y += 16.0;
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace wordmap
