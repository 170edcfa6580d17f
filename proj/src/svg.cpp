#include "hypspec/svg.hpp"

#include <cstdio>
#include <sstream>

namespace hypspec::svg {

namespace {

std::string escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
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

std::string style_attrs(const Style& style) {
    std::string out = "stroke=\"" + style.stroke + "\" stroke-width=\"" +
                      format_double(style.stroke_width) + "\" fill=\"" + style.fill +
                      "\"";
    if (!style.dash.empty()) {
        out += " stroke-dasharray=\"" + style.dash + "\"";
    }
    return out;
}

}  // namespace

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

Document::Document(double width, double height) : width_(width), height_(height) {}

void Document::line(double x1, double y1, double x2, double y2, const Style& style) {
    elements_.push_back("<line x1=\"" + format_double(x1) + "\" y1=\"" +
                        format_double(y1) + "\" x2=\"" + format_double(x2) +
                        "\" y2=\"" + format_double(y2) + "\" " + style_attrs(style) +
                        "/>");
}

void Document::polyline(const std::vector<std::pair<double, double>>& points,
                        const Style& style) {
    std::string pts;
    for (const auto& [x, y] : points) {
        if (!pts.empty()) pts += ' ';
        pts += format_double(x) + "," + format_double(y);
    }
    elements_.push_back("<polyline points=\"" + pts + "\" " + style_attrs(style) +
                        "/>");
}

void Document::circle(double cx, double cy, double radius, const Style& style) {
    elements_.push_back("<circle cx=\"" + format_double(cx) + "\" cy=\"" +
                        format_double(cy) + "\" r=\"" + format_double(radius) + "\" " +
                        style_attrs(style) + "/>");
}

void Document::text(double x, double y, const std::string& content, double font_size,
                    const std::string& fill) {
    elements_.push_back("<text x=\"" + format_double(x) + "\" y=\"" +
                        format_double(y) + "\" font-size=\"" +
                        format_double(font_size) + "\" font-family=\"monospace\" fill=\"" +
                        fill + "\">" + escape(content) + "</text>");
}

std::string Document::str() const {
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_double(width_)
       << "\" height=\"" << format_double(height_) << "\" viewBox=\"0 0 "
       << format_double(width_) << " " << format_double(height_) << "\">\n";
    for (const auto& e : elements_) {
        os << "  " << e << "\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace hypspec::svg
