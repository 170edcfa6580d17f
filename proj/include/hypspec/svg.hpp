#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hypspec::svg {

struct Style {
    std::string stroke = "#000000";
    double stroke_width = 1.0;
    std::string fill = "none";
    std::string dash;
};

// Minimal deterministic SVG writer; coordinates are taken as given, callers
// do their own world-to-pixel mapping.
class Document {
  public:
    Document(double width, double height);

    void line(double x1, double y1, double x2, double y2, const Style& style);
    void polyline(const std::vector<std::pair<double, double>>& points,
                  const Style& style);
    void circle(double cx, double cy, double radius, const Style& style);
    void text(double x, double y, const std::string& content, double font_size,
              const std::string& fill);

    std::string str() const;

  private:
    double width_;
    double height_;
    std::vector<std::string> elements_;
};

std::string format_double(double value);

}  // namespace hypspec::svg
