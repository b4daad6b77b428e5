#pragma once

// Cylinder diagrams for divisors. The cylinder [0,1] x S^1 is cut open along
// a seam: the horizontal axis is [0,1], the vertical axis is the circle, and
// the l points of a cycle sit on the left and right edges. Each left point
// P_i gets one <path> that travels D(P_i) steps forward (downwards) and wraps
// from the bottom edge to the top edge once per winding, so a strand is drawn
// as winding + 1 straight subpaths. A word is drawn as one panel per letter,
// glued left to right.

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "nufact/divcalc.hpp"

namespace nufact {

namespace detail {

inline const char* strand_color(std::size_t i) {
    static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                    "#8c564b", "#e377c2", "#17becf", "#bcbd22", "#7f7f7f"};
    return palette[i % (sizeof(palette) / sizeof(palette[0]))];
}

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

struct SvgLayout {
    double panel_width = 160;
    double spacing = 40;  // vertical distance between marked points
    double margin = 40;
};

inline std::size_t single_cycle_of(const CycleStructure& cs, const Divisor& d, std::size_t fallback) {
    std::size_t cycle = fallback;
    bool seen = false;
    for (const auto& [p, n] : d.counts()) {
        auto c = cs.position(p).cycle;
        if (seen && c != cycle) throw DomainError("multi-cycle drawing requested in one panel");
        cycle = c;
        seen = true;
    }
    return cycle;
}

inline void draw_panel(std::ostringstream& os, const std::vector<Label>& cycle, const Divisor& d, double x0, double y0,
                       bool label_left, const SvgLayout& lay) {
    const auto l = cycle.size();
    const double h = lay.spacing * static_cast<double>(l);
    const double w = lay.panel_width;
    os << "  <g class=\"panel\" data-cycle-length=\"" << l << "\">\n";
    os << "    <rect x=\"" << num(x0) << "\" y=\"" << num(y0) << "\" width=\"" << num(w) << "\" height=\"" << num(h)
       << "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
    for (std::size_t i = 0; i < l; ++i) {
        auto s = d[cycle[i]];
        auto moved = i + s;
        auto winding = moved / l;
        const double y_start = (static_cast<double>(i) + 0.5) * lay.spacing;
        const double travel = static_cast<double>(s) * lay.spacing;
        os << "    <path class=\"strand\" data-source=\"" << xml_escape(cycle[i]) << "\" data-target=\""
           << xml_escape(cycle[moved % l]) << "\" data-steps=\"" << s << "\" data-winding=\"" << winding
           << "\" fill=\"none\" stroke=\"" << strand_color(i) << "\" stroke-width=\"2\" d=\"";
        // Split at each crossing of the seam y = k*h.
        double t0 = 0;
        double y_from = y_start;
        for (std::size_t k = 0; k <= winding; ++k) {
            double t1 = 1;
            if (k < winding) t1 = (static_cast<double>(k + 1) * h - y_start) / travel;
            double y_to = y_start + t1 * travel - static_cast<double>(k) * h;
            if (k > 0) os << ' ';
            os << 'M' << num(x0 + t0 * w) << ' ' << num(y0 + y_from) << " L" << num(x0 + t1 * w) << ' '
               << num(y0 + y_to);
            t0 = t1;
            y_from = 0;
        }
        os << "\"/>\n";
    }
    for (std::size_t i = 0; i < l; ++i) {
        const double y = y0 + (static_cast<double>(i) + 0.5) * lay.spacing;
        os << "    <circle cx=\"" << num(x0) << "\" cy=\"" << num(y) << "\" r=\"3\" fill=\"black\"/>\n";
        os << "    <circle cx=\"" << num(x0 + w) << "\" cy=\"" << num(y) << "\" r=\"3\" fill=\"black\"/>\n";
        if (label_left)
            os << "    <text x=\"" << num(x0 - 8) << "\" y=\"" << num(y + 4)
               << "\" text-anchor=\"end\" font-size=\"12\">" << xml_escape(cycle[i]) << "</text>\n";
        os << "    <text x=\"" << num(x0 + w + 8) << "\" y=\"" << num(y + 4) << "\" font-size=\"12\">"
           << xml_escape(cycle[i]) << "</text>\n";
    }
    os << "  </g>\n";
}

inline std::string svg_document(double width, double height, const std::string& body) {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
       << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
       << body << "</svg>\n";
    return os.str();
}

}  // namespace detail

/// One panel per cycle of the structure, stacked vertically.
inline std::string render_svg(const CycleStructure& cs, const Divisor& d) {
    check_divisor(cs, d);
    detail::SvgLayout lay;
    std::ostringstream body;
    double y = lay.margin;
    for (const auto& cycle : cs.cycles()) {
        detail::draw_panel(body, cycle, d, lay.margin + 20, y, true, lay);
        y += lay.spacing * static_cast<double>(cycle.size()) + lay.margin;
    }
    return detail::svg_document(lay.panel_width + 2 * lay.margin + 60, y, body.str());
}

/// Panels for each letter of the word glued left to right. All letters must
/// share one cycle; an empty word draws the identity on `cycle_index`.
inline std::string render_svg_word(const CycleStructure& cs, const std::vector<Label>& word, std::size_t cycle_index = 0) {
    if (cycle_index >= cs.cycles().size()) throw DomainError("cycle index out of range");
    std::size_t cycle = cycle_index;
    bool seen = false;
    for (const auto& p : word) {
        auto c = cs.position(p).cycle;
        if (seen && c != cycle) throw DomainError("multi-cycle drawing requested in one panel");
        cycle = c;
        seen = true;
    }
    detail::SvgLayout lay;
    const auto& labels = cs.cycles()[cycle];
    std::ostringstream body;
    double x = lay.margin + 20;
    if (word.empty()) {
        detail::draw_panel(body, labels, Divisor{}, x, lay.margin, true, lay);
        x += lay.panel_width;
    }
    for (std::size_t n = 0; n < word.size(); ++n) {
        detail::draw_panel(body, labels, Divisor::indicator(word[n]), x, lay.margin, n == 0, lay);
        x += lay.panel_width;
    }
    return detail::svg_document(x + lay.margin + 20, lay.spacing * static_cast<double>(labels.size()) + 2 * lay.margin,
                                body.str());
}

/// Single-cycle divisor drawing; rejects divisors spanning several cycles.
inline std::string render_svg_panel(const CycleStructure& cs, const Divisor& d, std::size_t cycle_index = 0) {
    check_divisor(cs, d);
    if (cycle_index >= cs.cycles().size()) throw DomainError("cycle index out of range");
    auto cycle = detail::single_cycle_of(cs, d, cycle_index);
    detail::SvgLayout lay;
    std::ostringstream body;
    detail::draw_panel(body, cs.cycles()[cycle], d, lay.margin + 20, lay.margin, true, lay);
    return detail::svg_document(lay.panel_width + 2 * lay.margin + 60,
                                lay.spacing * static_cast<double>(cs.cycles()[cycle].size()) + 2 * lay.margin, body.str());
}

}  // namespace nufact
