#include "kuranet/svg_plot.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "kuranet/errors.hpp"
#include "kuranet/observe.hpp"

namespace kuranet {

namespace {

constexpr std::array<const char*, 12> kPalette = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#ad494a"};

std::string num(double v, const char* fmt = "%.2f") {
    char buf[40];
    std::snprintf(buf, sizeof buf, fmt, v);
    return buf;
}

struct Panel {
    double x, y, w, h;          // plot rectangle in page pixels
    double xmin, xmax, ymin, ymax;

    double sx(double v) const { return x + (v - xmin) / (xmax - xmin) * w; }
    double sy(double v) const { return y + (1.0 - (v - ymin) / (ymax - ymin)) * h; }
};

struct Curve {
    std::string label;
    std::vector<std::pair<double, double>> points;  // data coordinates
};

void emit_axes(std::ostream& out, const Panel& p, const std::string& xlabel,
               const std::string& ylabel) {
    out << "<rect x=\"" << num(p.x) << "\" y=\"" << num(p.y) << "\" width=\""
        << num(p.w) << "\" height=\"" << num(p.h)
        << "\" fill=\"none\" stroke=\"#333333\"/>\n";
    for (int i = 0; i <= 5; ++i) {
        const double fx = p.xmin + (p.xmax - p.xmin) * i / 5.0;
        const double fy = p.ymin + (p.ymax - p.ymin) * i / 5.0;
        const double tx = p.sx(fx);
        const double ty = p.sy(fy);
        out << "<line x1=\"" << num(tx) << "\" y1=\"" << num(p.y + p.h)
            << "\" x2=\"" << num(tx) << "\" y2=\"" << num(p.y + p.h + 5)
            << "\" stroke=\"#333333\"/>\n";
        out << "<text x=\"" << num(tx) << "\" y=\"" << num(p.y + p.h + 20)
            << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#222222\""
            << " text-anchor=\"middle\">" << num(fx, "%.4g") << "</text>\n";
        out << "<line x1=\"" << num(p.x - 5) << "\" y1=\"" << num(ty)
            << "\" x2=\"" << num(p.x) << "\" y2=\"" << num(ty)
            << "\" stroke=\"#333333\"/>\n";
        out << "<text x=\"" << num(p.x - 8) << "\" y=\"" << num(ty + 4)
            << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#222222\""
            << " text-anchor=\"end\">" << num(fy, "%.4g") << "</text>\n";
    }
    out << "<text x=\"" << num(p.x + p.w / 2) << "\" y=\"" << num(p.y + p.h + 42)
        << "\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#222222\""
        << " text-anchor=\"middle\">" << xlabel << "</text>\n";
    const double cy = p.y + p.h / 2;
    out << "<text x=\"22\" y=\"" << num(cy)
        << "\" font-family=\"sans-serif\" font-size=\"14\" fill=\"#222222\""
        << " text-anchor=\"middle\" transform=\"rotate(-90 22 " << num(cy)
        << ")\">" << ylabel << "</text>\n";
}

// Data curves are the only <polyline> elements in the document, so tests
// and downstream tools can count curves structurally.
void emit_curves(std::ostream& out, const Panel& p, const std::vector<Curve>& curves) {
    for (std::size_t c = 0; c < curves.size(); ++c) {
        out << "<polyline fill=\"none\" stroke=\""
            << kPalette[c % kPalette.size()] << "\" stroke-width=\"1.5\" points=\"";
        bool first = true;
        for (const auto& [x, y] : curves[c].points) {
            if (!first) {
                out << ' ';
            }
            first = false;
            out << num(p.sx(x)) << ',' << num(p.sy(y));
        }
        out << "\"/>\n";
    }
}

void emit_legend(std::ostream& out, const Panel& p, const std::vector<Curve>& curves) {
    const double lx = p.x + p.w + 18;
    for (std::size_t c = 0; c < curves.size(); ++c) {
        const double ly = p.y + 10 + 22.0 * static_cast<double>(c);
        out << "<rect x=\"" << num(lx) << "\" y=\"" << num(ly - 5)
            << "\" width=\"18\" height=\"4\" fill=\""
            << kPalette[c % kPalette.size()] << "\"/>\n";
        out << "<text x=\"" << num(lx + 26) << "\" y=\"" << num(ly)
            << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#222222\">"
            << curves[c].label << "</text>\n";
    }
}

// Replicate-and-everything-else mean of r_mean per distinct key value.
template <typename Key>
std::map<Key, std::pair<double, long>>& accumulate(
    std::map<Key, std::pair<double, long>>& acc, Key key, double r) {
    auto& cell = acc[key];
    cell.first += r;
    cell.second += 1;
    return acc;
}

std::vector<Curve> curves_r_vs_k(const ResultTable& table) {
    // p -> (k -> (sum, count)); exact doubles group rows sharing a grid value
    std::map<double, std::map<double, std::pair<double, long>>> groups;
    for (const ResultRow& r : table.rows) {
        accumulate(groups[r.p], r.k, r.r_mean);
    }
    std::vector<Curve> curves;
    for (const auto& [p, by_k] : groups) {
        Curve c;
        c.label = "p = " + num(p, "%.6g");
        for (const auto& [k, cell] : by_k) {
            c.points.emplace_back(k, cell.first / static_cast<double>(cell.second));
        }
        curves.push_back(std::move(c));
    }
    return curves;
}

std::vector<Curve> curves_r_vs_n(const ResultTable& table) {
    std::map<double, std::map<int, std::pair<double, long>>> by_k;
    for (const ResultRow& r : table.rows) {
        accumulate(by_k[r.k], r.n, r.r_mean);
    }
    std::vector<double> ks;
    ks.reserve(by_k.size());
    for (const auto& [k, rest] : by_k) {
        ks.push_back(k);
    }
    std::vector<double> chosen;
    if (ks.size() <= 11) {
        chosen = ks;
    } else {
        for (int j = 0; j <= 10; ++j) {
            const auto idx = static_cast<std::size_t>(
                std::lround(j * (static_cast<double>(ks.size()) - 1.0) / 10.0));
            if (chosen.empty() || chosen.back() != ks[idx]) {
                chosen.push_back(ks[idx]);
            }
        }
    }
    std::vector<Curve> curves;
    for (double k : chosen) {
        Curve c;
        c.label = "K = " + num(k, "%.6g");
        for (const auto& [n, cell] : by_k[k]) {
            c.points.emplace_back(static_cast<double>(n),
                                  cell.first / static_cast<double>(cell.second));
        }
        curves.push_back(std::move(c));
    }
    return curves;
}

void svg_open(std::ostream& out, int width, int height) {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
        << height << "\">\n";
    out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
        << "\" fill=\"#ffffff\"/>\n";
}

}  // namespace

void write_plot_svg(const ResultTable& table, PlotKind kind, std::ostream& out) {
    if (table.rows.empty()) {
        throw InvalidParameterError("plot: the table has no rows");
    }

    if (kind == PlotKind::r_vs_k || kind == PlotKind::r_vs_n) {
        const bool vs_k = (kind == PlotKind::r_vs_k);
        std::vector<Curve> curves = vs_k ? curves_r_vs_k(table) : curves_r_vs_n(table);
        double xmin = 0.0;
        double xmax = 0.0;
        bool first = true;
        for (const Curve& c : curves) {
            if (c.points.size() < 2) {
                throw InvalidParameterError(
                    vs_k ? "plot r_vs_k: need at least 2 K values per p"
                         : "plot r_vs_n: need at least 2 sizes per K");
            }
            for (const auto& [x, y] : c.points) {
                xmin = first ? x : std::min(xmin, x);
                xmax = first ? x : std::max(xmax, x);
                first = false;
            }
        }
        Panel p{70, 40, 560, 440, xmin, xmax, 0.0, 1.0};
        svg_open(out, 840, 560);
        emit_axes(out, p, vs_k ? "K" : "N", "R");
        emit_curves(out, p, curves);
        emit_legend(out, p, curves);
        out << "</svg>\n";
        return;
    }

    // drdk: grand-mean R(K) on top, its derivative below.
    std::map<double, std::pair<double, long>> by_k;
    for (const ResultRow& r : table.rows) {
        accumulate(by_k, r.k, r.r_mean);
    }
    if (by_k.size() < 3) {
        throw InvalidParameterError("plot drdk: need at least 3 K values");
    }
    std::vector<double> ks;
    std::vector<double> rs;
    ks.reserve(by_k.size());
    rs.reserve(by_k.size());
    for (const auto& [k, cell] : by_k) {
        ks.push_back(k);
        rs.push_back(cell.first / static_cast<double>(cell.second));
    }
    const std::vector<double> ds = dR_dK(ks, rs);

    double dmin = *std::min_element(ds.begin(), ds.end());
    double dmax = *std::max_element(ds.begin(), ds.end());
    dmin = std::min(dmin, 0.0);
    const double pad = std::max(0.05 * (dmax - dmin), 1e-3);
    dmin -= pad;
    dmax += pad;

    Curve rc;
    Curve dc;
    for (std::size_t i = 0; i < ks.size(); ++i) {
        rc.points.emplace_back(ks[i], rs[i]);
        dc.points.emplace_back(ks[i], ds[i]);
    }

    Panel top{70, 40, 560, 340, ks.front(), ks.back(), 0.0, 1.0};
    Panel bottom{70, 480, 560, 340, ks.front(), ks.back(), dmin, dmax};
    svg_open(out, 840, 880);
    emit_axes(out, top, "K", "R");
    emit_curves(out, top, {rc});
    emit_axes(out, bottom, "K", "dR/dK");
    emit_curves(out, bottom, {dc});
    out << "</svg>\n";
}

}  // namespace kuranet
