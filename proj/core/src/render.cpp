#include "nakarig/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace nakarig {

std::vector<SelectionRect> selection_rectangles(const Vertex& v, const ApproxResult& approx) {
    std::vector<SelectionRect> out;
    if (approx.approx_summands.empty()) {
        return out;
    }
    SelectionRect cur{v.x, v.t, approx.approx_summands.front().t};
    out.push_back(cur);
    for (std::size_t k = 1; k < approx.approx_summands.size(); ++k) {
        const Vertex& pick = approx.approx_summands[k];
        const std::int64_t lower = cur.x + cur.t - pick.x;
        if (pick.t == lower) {
            break;
        }
        cur = SelectionRect{pick.x, static_cast<int>(lower), pick.t};
        out.push_back(cur);
    }
    return out;
}

std::string render_ascii(const GenCogenSet& M) {
    const AlgebraParams& a = M.params();
    const int width = static_cast<int>(std::to_string(std::max(a.n - 1, 1)).size());
    const int label = std::max(3, static_cast<int>(std::to_string(a.m).size()));
    std::ostringstream os;
    os << "A(" << a.n << "," << a.m << ") stable AR quiver, " << M.member_count() << " of " << a.stable_count()
       << " vertices in M ('#')\n";
    os << std::setw(label) << "t\\x";
    for (int x = 0; x < a.n; ++x) {
        os << ' ' << std::setw(width) << x;
    }
    os << '\n';
    for (int t = a.m - 1; t >= 1; --t) {
        os << std::setw(label) << t;
        for (int x = 0; x < a.n; ++x) {
            os << ' ' << std::setw(width) << (M.contains(Vertex{x, t}) ? '#' : '.');
        }
        os << '\n';
    }
    return os.str();
}

namespace {

constexpr double kStep = 40.0;
constexpr double kMargin = 40.0;

struct Frame {
    std::int64_t x_lo;
    std::int64_t x_hi;
    int m;

    double px(std::int64_t x, int t) const {
        return kMargin + (static_cast<double>(x - x_lo) + 0.5 * (t - 0)) * kStep;
    }
    double py(int t) const { return kMargin + static_cast<double>(m - t) * kStep; }
    double width() const { return 2 * kMargin + (static_cast<double>(x_hi - x_lo) + 0.5 * m) * kStep; }
    double height() const { return 2 * kMargin + m * kStep; }
};

std::string num(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(1) << v;
    return os.str();
}

} // namespace

std::string render_svg(const GenCogenSet& M, std::span<const RenderOverlay> overlays) {
    const AlgebraParams& a = M.params();
    Frame f{0, a.n - 1, a.m};
    for (const RenderOverlay& o : overlays) {
        for (const SelectionRect& r : selection_rectangles(o.source, o.approx)) {
            f.x_lo = std::min(f.x_lo, r.x);
            f.x_hi = std::max(f.x_hi, r.x + r.t);
        }
    }

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(f.width()) << "\" height=\""
       << num(f.height()) << "\" font-family=\"monospace\" font-size=\"10\">\n";
    os << "<title>A(" << a.n << "," << a.m << ") extended quiver</title>\n";
    os << "<g stroke=\"#999\" stroke-width=\"1\">\n";
    for (std::int64_t x = f.x_lo; x <= f.x_hi; ++x) {
        for (int t = 1; t <= a.m; ++t) {
            os << "<line x1=\"" << num(f.px(x, t)) << "\" y1=\"" << num(f.py(t)) << "\" x2=\""
               << num(f.px(x, t - 1)) << "\" y2=\"" << num(f.py(t - 1)) << "\"/>\n";
            if (t < a.m && x > f.x_lo) {
                os << "<line x1=\"" << num(f.px(x, t)) << "\" y1=\"" << num(f.py(t)) << "\" x2=\""
                   << num(f.px(x - 1, t + 1)) << "\" y2=\"" << num(f.py(t + 1)) << "\"/>\n";
            }
        }
    }
    os << "</g>\n";

    for (const RenderOverlay& o : overlays) {
        for (const SelectionRect& r : selection_rectangles(o.source, o.approx)) {
            const int lower_right = 0;
            os << "<polygon fill=\"#f5a623\" fill-opacity=\"0.15\" stroke=\"#f5a623\" points=\""
               << num(f.px(r.x, r.t)) << "," << num(f.py(r.t)) << " " << num(f.px(r.x, r.top)) << ","
               << num(f.py(r.top)) << " " << num(f.px(r.x + r.t, r.top - r.t)) << "," << num(f.py(r.top - r.t))
               << " " << num(f.px(r.x + r.t, lower_right)) << "," << num(f.py(lower_right)) << "\"/>\n";
        }
    }

    for (std::int64_t x = f.x_lo; x <= f.x_hi; ++x) {
        for (int t = 0; t <= a.m; ++t) {
            const Vertex v{x, t};
            std::string fill = "#ffffff";
            if (t == a.m) {
                fill = "#bbbbbb";
            } else if (t > 0 && M.contains(v)) {
                fill = "#1f6fd1";
            }
            os << "<circle cx=\"" << num(f.px(x, t)) << "\" cy=\"" << num(f.py(t)) << "\" r=\"5\" fill=\"" << fill
               << "\" stroke=\"#333\"" << (t == 0 ? " stroke-dasharray=\"2,2\"" : "") << "><title>" << to_string(v)
               << "</title></circle>\n";
        }
    }

    for (const RenderOverlay& o : overlays) {
        for (const Vertex& v : o.approx.approx_summands) {
            os << "<circle cx=\"" << num(f.px(v.x, v.t)) << "\" cy=\"" << num(f.py(v.t))
               << "\" r=\"9\" fill=\"none\" stroke=\"#f5a623\" stroke-width=\"2\"/>\n";
        }
        for (const Vertex& v : o.approx.syzygy_summands) {
            os << "<circle cx=\"" << num(f.px(v.x, v.t)) << "\" cy=\"" << num(f.py(v.t))
               << "\" r=\"9\" fill=\"none\" stroke=\"#d0021b\" stroke-width=\"2\" stroke-dasharray=\"3,2\"/>\n";
        }
        os << "<circle cx=\"" << num(f.px(o.source.x, o.source.t)) << "\" cy=\"" << num(f.py(o.source.t))
           << "\" r=\"7\" fill=\"#d0021b\"/>\n";
    }

    for (int t = 0; t <= a.m; ++t) {
        os << "<text x=\"4\" y=\"" << num(f.py(t) + 3) << "\">" << t << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace nakarig
