#include "crosscycle/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <sstream>

namespace crosscycle {

namespace {

using Point = std::array<double, 2>;

constexpr const char* kPalette[] = {"#1f6fb4", "#c93c3c", "#2c9a4b", "#8e5bbf",
                                    "#e0821f", "#75564b", "#c9569d", "#2aa0a8"};
constexpr int kPaletteSize = 8;

constexpr double kPanelSize = 560.0;
constexpr double kPanelPad = 16.0;
constexpr double kTitleBand = 28.0;

struct Box {
    double xlo = std::numeric_limits<double>::infinity();
    double xhi = -std::numeric_limits<double>::infinity();
    double ylo = std::numeric_limits<double>::infinity();
    double yhi = -std::numeric_limits<double>::infinity();

    void absorb(const Point& p) {
        xlo = std::min(xlo, p[0]);
        xhi = std::max(xhi, p[0]);
        ylo = std::min(ylo, p[1]);
        yhi = std::max(yhi, p[1]);
    }
    void absorb(const Box& b) {
        xlo = std::min(xlo, b.xlo);
        xhi = std::max(xhi, b.xhi);
        ylo = std::min(ylo, b.ylo);
        yhi = std::max(yhi, b.yhi);
    }
    double extent() const { return std::max(xhi - xlo, yhi - ylo); }
    void pad(double frac) {
        double m = frac * extent();
        xlo -= m;
        xhi += m;
        ylo -= m;
        yhi += m;
    }
};

Box polyline_box(const std::vector<Point>& pts) {
    Box b;
    for (const Point& p : pts) b.absorb(p);
    return b;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

// One panel maps its world box onto a square pixel area with a uniform
// scale, so circles stay circles.
struct Panel {
    double ox, oy;  // top-left pixel corner of the drawable square
    Box world;
    double scale;
    double cx, cy;  // pixel offsets centering the shorter world direction

    Panel(double ox_, double oy_, Box w) : ox(ox_), oy(oy_), world(w) {
        scale = kPanelSize / world.extent();
        cx = (kPanelSize - scale * (world.xhi - world.xlo)) / 2;
        cy = (kPanelSize - scale * (world.yhi - world.ylo)) / 2;
    }
    double px(double x) const { return ox + cx + scale * (x - world.xlo); }
    // SVG y grows downward.
    double py(double y) const { return oy + kPanelSize - cy - scale * (y - world.ylo); }
};

void draw_panel(std::ostringstream& svg, const Panel& p, const std::string& clip_id,
                const std::vector<std::vector<Point>>& lines, const std::string& caption) {
    svg << "<clipPath id=\"" << clip_id << "\"><rect x=\"" << num(p.ox) << "\" y=\"" << num(p.oy)
        << "\" width=\"" << num(kPanelSize) << "\" height=\"" << num(kPanelSize)
        << "\"/></clipPath>\n";
    svg << "<rect x=\"" << num(p.ox) << "\" y=\"" << num(p.oy) << "\" width=\"" << num(kPanelSize)
        << "\" height=\"" << num(kPanelSize) << "\" fill=\"#ffffff\" stroke=\"#c8c8c8\"/>\n";
    svg << "<g clip-path=\"url(#" << clip_id << ")\">\n";

    // Full coordinate axes, then the switching set on top: the closed
    // positive half-axes, rendered heavier.
    svg << "<line x1=\"" << num(p.ox) << "\" y1=\"" << num(p.py(0)) << "\" x2=\""
        << num(p.ox + kPanelSize) << "\" y2=\"" << num(p.py(0))
        << "\" stroke=\"#b0b0b0\" stroke-width=\"1\"/>\n";
    svg << "<line x1=\"" << num(p.px(0)) << "\" y1=\"" << num(p.oy) << "\" x2=\"" << num(p.px(0))
        << "\" y2=\"" << num(p.oy + kPanelSize) << "\" stroke=\"#b0b0b0\" stroke-width=\"1\"/>\n";
    svg << "<line x1=\"" << num(p.px(0)) << "\" y1=\"" << num(p.py(0)) << "\" x2=\""
        << num(p.ox + kPanelSize) << "\" y2=\"" << num(p.py(0))
        << "\" stroke=\"#303030\" stroke-width=\"2.5\"/>\n";
    svg << "<line x1=\"" << num(p.px(0)) << "\" y1=\"" << num(p.py(0)) << "\" x2=\""
        << num(p.px(0)) << "\" y2=\"" << num(p.oy)
        << "\" stroke=\"#303030\" stroke-width=\"2.5\"/>\n";

    for (std::size_t k = 0; k < lines.size(); ++k) {
        svg << "<polyline fill=\"none\" stroke=\"" << kPalette[k % kPaletteSize]
            << "\" stroke-width=\"1.5\" points=\"";
        // Consecutive points that land on the same pixel are collapsed.
        std::string last;
        for (const Point& q : lines[k]) {
            std::string cur = num(p.px(q[0])) + ',' + num(p.py(q[1]));
            if (cur == last) continue;
            if (!last.empty()) svg << ' ';
            svg << cur;
            last = std::move(cur);
        }
        svg << "\"/>\n";
    }
    svg << "</g>\n";
    if (!caption.empty())
        svg << "<text x=\"" << num(p.ox + 6) << "\" y=\"" << num(p.oy + kPanelSize + 18)
            << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#303030\">" << caption
            << "</text>\n";
}

}  // namespace

std::string render_cycles_svg(const std::string& title,
                              const std::vector<CycleVerification>& cycles, bool zoom) {
    std::vector<std::vector<Point>> lines;
    for (const CycleVerification& v : cycles)
        if (v.verified) lines.push_back(emit_polyline(v));

    Box full;
    std::vector<Box> boxes;
    for (const auto& line : lines) {
        boxes.push_back(polyline_box(line));
        full.absorb(boxes.back());
    }
    full.absorb(Point{0, 0});
    if (!(full.extent() > 0)) full = Box{-1, 1, -1, 1};
    full.pad(0.05);

    // Zoom crop: the innermost cycle plus every cycle within three times
    // its extent, so well separated outer cycles fall away.
    Box inner;
    if (zoom && !boxes.empty()) {
        double cutoff = 3 * boxes.front().extent();
        for (const Box& b : boxes)
            if (b.extent() <= cutoff) inner.absorb(b);
        inner.absorb(Point{0, 0});
        inner.pad(0.05);
    }
    const bool two_panels = zoom && !boxes.empty();

    const double width = kPanelPad + kPanelSize + kPanelPad +
                         (two_panels ? kPanelSize + kPanelPad : 0);
    const double height = kTitleBand + kPanelSize + kPanelPad + 24;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
        << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    svg << "<text x=\"" << num(kPanelPad) << "\" y=\"19\" font-family=\"sans-serif\" "
           "font-size=\"15\" fill=\"#101010\">"
        << title << "</text>\n";

    Panel main(kPanelPad, kTitleBand, full);
    draw_panel(svg, main, "clip-main", lines, "");
    if (two_panels) {
        Panel detail(kPanelPad + kPanelSize + kPanelPad, kTitleBand, inner);
        draw_panel(svg, detail, "clip-zoom", lines, "zoom near the origin");
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace crosscycle
