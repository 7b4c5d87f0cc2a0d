#include "render.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace monogen::cli {
namespace {

struct Frame {
    std::int64_t max_x = 1;
    std::int64_t max_y = 1;
    int width = 1;   // columns spanned by [0, max_x]
    int height = 1;  // rows spanned by [0, max_y]

    int col(double x) const { return static_cast<int>(std::lround(x * width / static_cast<double>(max_x))); }
    int row(double y) const { return static_cast<int>(std::lround(y * height / static_cast<double>(max_y))); }
};

Frame make_frame(const polygon::PrincipalPolygon& poly) {
    Frame f;
    f.max_x = std::max<std::int64_t>(1, poly.vertices.back().x);
    f.max_y = std::max<std::int64_t>(1, poly.vertices.front().y);
    f.width = f.max_x <= 80 ? static_cast<int>(f.max_x * std::min<std::int64_t>(10, 80 / f.max_x)) : 80;
    f.height = f.max_y <= 20 ? static_cast<int>(f.max_y * std::min<std::int64_t>(3, 20 / f.max_y)) : 20;
    return f;
}

}  // namespace

std::string render_ascii(const polygon::PrincipalPolygon& poly, const std::string& title) {
    if (poly.empty()) return title + "\n" + kEmptyPolygonMessage + "\n";
    const Frame fr = make_frame(poly);
    std::vector<std::string> grid(static_cast<std::size_t>(fr.height + 2), std::string(fr.width + 6, ' '));
    auto put = [&](int r, int c, char ch) {
        if (r < 0 || r >= static_cast<int>(grid.size()) || c < 0 || c >= static_cast<int>(grid[0].size())) return;
        grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = ch;
    };

    for (const auto& s : poly.sides) {
        const int c0 = fr.col(static_cast<double>(s.start.x)), c1 = fr.col(static_cast<double>(s.end.x));
        const int r0 = fr.row(static_cast<double>(s.start.y)), r1 = fr.row(static_cast<double>(s.end.y));
        const int steps = 2 * std::max(std::abs(c1 - c0), std::abs(r1 - r0)) + 1;
        for (int k = 0; k <= steps; ++k) {
            const double t = static_cast<double>(k) / steps;
            const double x = static_cast<double>(s.start.x) + t * static_cast<double>(s.length());
            const double y = static_cast<double>(s.start.y) - t * static_cast<double>(s.height());
            put(fr.row(y), fr.col(x), '*');
        }
    }
    for (const auto& v : poly.vertices) put(fr.row(static_cast<double>(v.y)), fr.col(static_cast<double>(v.x)), 'o');
    for (std::size_t i = 0; i < poly.sides.size(); ++i) {
        const auto& s = poly.sides[i];
        const double mx = (static_cast<double>(s.start.x) + static_cast<double>(s.end.x)) / 2;
        const double my = (static_cast<double>(s.start.y) + static_cast<double>(s.end.y)) / 2;
        const std::string label = "S" + std::to_string(i + 1);
        const int r = fr.row(my) + 1;
        const int c = fr.col(mx) + 1;
        for (std::size_t k = 0; k < label.size(); ++k) put(r, c + static_cast<int>(k), label[k]);
    }

    const int margin = static_cast<int>(std::to_string(fr.max_y).size());
    std::ostringstream os;
    os << title << "\n";
    os << std::string(static_cast<std::size_t>(margin), ' ') << " ^ nu\n";
    for (int r = fr.height + 1; r >= 0; --r) {
        std::string tick(static_cast<std::size_t>(margin), ' ');
        if (r <= fr.height && (static_cast<std::int64_t>(r) * fr.max_y) % fr.height == 0) {
            const std::string v = std::to_string(static_cast<std::int64_t>(r) * fr.max_y / fr.height);
            tick.replace(tick.size() - v.size(), v.size(), v);
        }
        std::string line = grid[static_cast<std::size_t>(r)];
        line.erase(line.find_last_not_of(' ') + 1);
        os << tick << " |" << line << "\n";
    }
    os << std::string(static_cast<std::size_t>(margin), ' ') << " +" << std::string(static_cast<std::size_t>(fr.width + 2), '-')
       << "> j\n";
    std::string ticks(static_cast<std::size_t>(fr.width + 8), ' ');
    int free_from = 0;
    for (std::int64_t x = 0; x <= fr.max_x; ++x) {
        if ((x * fr.width) % fr.max_x != 0) continue;
        const int c = fr.col(static_cast<double>(x));
        const std::string v = std::to_string(x);
        if (c < free_from) continue;
        ticks.replace(static_cast<std::size_t>(c), v.size(), v);
        free_from = c + static_cast<int>(v.size()) + 1;
    }
    ticks.erase(ticks.find_last_not_of(' ') + 1);
    os << std::string(static_cast<std::size_t>(margin), ' ') << "  " << ticks << "\n";
    return os.str();
}

std::string render_svg(const polygon::PrincipalPolygon& poly, const std::string& title) {
    constexpr double kWidth = 480, kHeight = 320, kPad = 48;
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
       << "  <title>" << title << "</title>\n"
       << "  <rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    if (poly.empty()) {
        os << "  <text x=\"" << kPad << "\" y=\"" << kHeight / 2 << "\" font-family=\"monospace\" font-size=\"14\">"
           << kEmptyPolygonMessage << "</text>\n</svg>\n";
        return os.str();
    }
    const double max_x = static_cast<double>(std::max<std::int64_t>(1, poly.vertices.back().x));
    const double max_y = static_cast<double>(std::max<std::int64_t>(1, poly.vertices.front().y));
    auto sx = [&](double x) { return kPad + x * (kWidth - 2 * kPad) / max_x; };
    auto sy = [&](double y) { return kHeight - kPad - y * (kHeight - 2 * kPad) / max_y; };

    os << "  <g stroke=\"black\" stroke-width=\"1\">\n"
       << "    <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << kWidth - kPad / 2 << "\" y2=\"" << sy(0)
       << "\"/>\n"
       << "    <line x1=\"" << sx(0) << "\" y1=\"" << sy(0) << "\" x2=\"" << sx(0) << "\" y2=\"" << kPad / 2 << "\"/>\n"
       << "  </g>\n";
    const auto x_step = std::max<std::int64_t>(1, static_cast<std::int64_t>(max_x) / 16);
    const auto y_step = std::max<std::int64_t>(1, static_cast<std::int64_t>(max_y) / 12);
    os << "  <g font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">\n";
    for (std::int64_t x = 0; x <= static_cast<std::int64_t>(max_x); x += x_step)
        os << "    <text x=\"" << sx(static_cast<double>(x)) << "\" y=\"" << sy(0) + 16 << "\">" << x << "</text>\n";
    for (std::int64_t y = 1; y <= static_cast<std::int64_t>(max_y); y += y_step)
        os << "    <text x=\"" << sx(0) - 12 << "\" y=\"" << sy(static_cast<double>(y)) + 4 << "\">" << y
           << "</text>\n";
    os << "  </g>\n";

    os << "  <polyline fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
        const auto& v = poly.vertices[i];
        os << (i ? " " : "") << sx(static_cast<double>(v.x)) << "," << sy(static_cast<double>(v.y));
    }
    os << "\"/>\n";
    for (const auto& v : poly.vertices)
        os << "  <circle cx=\"" << sx(static_cast<double>(v.x)) << "\" cy=\"" << sy(static_cast<double>(v.y))
           << "\" r=\"3\" fill=\"#1f4e9c\"/>\n";
    for (std::size_t i = 0; i < poly.sides.size(); ++i) {
        const auto& s = poly.sides[i];
        const double mx = (static_cast<double>(s.start.x) + static_cast<double>(s.end.x)) / 2;
        const double my = (static_cast<double>(s.start.y) + static_cast<double>(s.end.y)) / 2;
        os << "  <text x=\"" << sx(mx) + 6 << "\" y=\"" << sy(my) - 6
           << "\" font-family=\"serif\" font-size=\"13\">S" << i + 1 << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace monogen::cli
