#include "grsim/aggregate.hpp"

#include "grsim/error.hpp"

#include <cstdio>
#include <fstream>

namespace grsim {

void heatmap_set::add(const run_record& record, const labeled_rules& labels) {
    int eps_class = labels.class_of(record.eps);
    int eps_prime_class = labels.class_of(record.eps_prime);
    if (record.assigned_class < 1 || record.assigned_class > 4) {
        unassigned += 1;
        return;
    }
    counts[static_cast<std::size_t>(record.assigned_class - 1)]
          [static_cast<std::size_t>(eps_class - 1)][static_cast<std::size_t>(eps_prime_class - 1)] +=
        1;
}

void heatmap_set::merge(const heatmap_set& other) {
    for (std::size_t c = 0; c < 4; ++c) {
        for (std::size_t a = 0; a < 4; ++a) {
            for (std::size_t b = 0; b < 4; ++b) {
                counts[c][a][b] += other.counts[c][a][b];
            }
        }
    }
    unassigned += other.unassigned;
}

std::uint64_t heatmap_set::class_total(int output_class) const {
    std::uint64_t total = 0;
    for (const auto& row : counts[static_cast<std::size_t>(output_class - 1)]) {
        for (std::uint64_t cell : row) {
            total += cell;
        }
    }
    return total;
}

double heatmap_set::percent(int output_class, int eps_class, int eps_prime_class) const {
    std::uint64_t total = class_total(output_class);
    if (total == 0) {
        return 0.0;
    }
    std::uint64_t cell = counts[static_cast<std::size_t>(output_class - 1)]
                               [static_cast<std::size_t>(eps_class - 1)]
                               [static_cast<std::size_t>(eps_prime_class - 1)];
    return 100.0 * static_cast<double>(cell) / static_cast<double>(total);
}

std::uint64_t heatmap_set::total_records() const {
    std::uint64_t total = unassigned;
    for (int c = 1; c <= 4; ++c) {
        total += class_total(c);
    }
    return total;
}

heatmap_set build_heatmaps(const std::vector<run_record>& records, const labeled_rules& labels) {
    heatmap_set maps;
    for (const auto& record : records) {
        maps.add(record, labels);
    }
    return maps;
}

void render_grid(const evolution_grid& grid, const std::string& path_stem) {
    const std::string text_path = path_stem + ".txt";
    std::ofstream text(text_path);
    if (!text) {
        throw io_error("cannot write grid text: " + text_path);
    }
    for (int t = 0; t < grid.rows(); ++t) {
        auto row = grid.row(t);
        for (symbol s : row) {
            text << static_cast<char>('0' + s);
        }
        text << '\n';
    }
    if (!text) {
        throw io_error("error while writing grid text: " + text_path);
    }

    const std::string ppm_path = path_stem + ".ppm";
    std::ofstream ppm(ppm_path);
    if (!ppm) {
        throw io_error("cannot write grid pixmap: " + ppm_path);
    }
    ppm << "P3\n" << grid.width << ' ' << grid.rows() << "\n255\n";
    for (int t = 0; t < grid.rows(); ++t) {
        auto row = grid.row(t);
        for (int n = 0; n < grid.width; ++n) {
            int v = row[static_cast<std::size_t>(n)] == 0   ? 255
                    : row[static_cast<std::size_t>(n)] == 1 ? 0
                                                            : 128;
            ppm << v << ' ' << v << ' ' << v << (n + 1 == grid.width ? "\n" : " ");
        }
    }
    if (!ppm) {
        throw io_error("error while writing grid pixmap: " + ppm_path);
    }
}

void write_heatmap_csv(const heatmap_set& maps, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw io_error("cannot write heat-map CSV: " + path);
    }
    out << "class,row,col,percent,count\n";
    char buf[96];
    for (int c = 1; c <= 4; ++c) {
        if (maps.class_empty(c)) {
            out << "# class " << c << " empty\n";
        }
        for (int a = 1; a <= 4; ++a) {
            for (int b = 1; b <= 4; ++b) {
                std::snprintf(buf, sizeof(buf), "%d,%d,%d,%.6f,%llu\n", c, a, b,
                              maps.percent(c, a, b),
                              static_cast<unsigned long long>(
                                  maps.counts[static_cast<std::size_t>(c - 1)]
                                             [static_cast<std::size_t>(a - 1)]
                                             [static_cast<std::size_t>(b - 1)]));
                out << buf;
            }
        }
    }
    if (!out) {
        throw io_error("error while writing heat-map CSV: " + path);
    }
}

namespace {

constexpr int cell_px = 56;
constexpr int panel_gap = 36;
constexpr int margin = 44;
constexpr int title_h = 24;

void svg_panel(std::string& svg, const heatmap_set& maps, int output_class, int origin_x,
               int origin_y) {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%d\" y=\"%d\" font-family=\"monospace\" font-size=\"15\">Class %d"
                  "%s</text>\n",
                  origin_x, origin_y - 8, output_class,
                  maps.class_empty(output_class) ? " (empty)" : "");
    svg += buf;
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            double pct = maps.percent(output_class, a, b);
            int shade = 255 - static_cast<int>(pct * 2.55 + 0.5);
            if (shade < 0) {
                shade = 0;
            }
            int x = origin_x + (b - 1) * cell_px;
            int y = origin_y + (a - 1) * cell_px;
            std::snprintf(buf, sizeof(buf),
                          "<rect x=\"%d\" y=\"%d\" width=\"%d\" height=\"%d\" "
                          "fill=\"rgb(%d,%d,255)\" stroke=\"black\"/>\n",
                          x, y, cell_px, cell_px, shade, shade);
            svg += buf;
            std::snprintf(buf, sizeof(buf),
                          "<text x=\"%d\" y=\"%d\" font-family=\"monospace\" font-size=\"11\" "
                          "text-anchor=\"middle\" fill=\"%s\">%.1f</text>\n",
                          x + cell_px / 2, y + cell_px / 2 + 4,
                          pct > 55.0 ? "white" : "black", pct);
            svg += buf;
        }
    }
    // Axis ticks: rows are class(eps), columns class(eps').
    for (int i = 1; i <= 4; ++i) {
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%d\" y=\"%d\" font-family=\"monospace\" font-size=\"11\" "
                      "text-anchor=\"middle\">%d</text>\n",
                      origin_x + (i - 1) * cell_px + cell_px / 2, origin_y + 4 * cell_px + 14, i);
        svg += buf;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%d\" y=\"%d\" font-family=\"monospace\" font-size=\"11\" "
                      "text-anchor=\"end\">%d</text>\n",
                      origin_x - 5, origin_y + (i - 1) * cell_px + cell_px / 2 + 4, i);
        svg += buf;
    }
}

} // namespace

void write_heatmap_svg(const heatmap_set& maps, const std::string& path) {
    const int panel_w = 4 * cell_px;
    const int width = margin * 2 + panel_w * 4 + panel_gap * 3;
    const int height = margin + title_h + panel_w + 40;

    std::string svg;
    char buf[192];
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%d\" height=\"%d\" "
                  "viewBox=\"0 0 %d %d\">\n",
                  width, height, width, height);
    svg += buf;
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    for (int c = 1; c <= 4; ++c) {
        int origin_x = margin + (c - 1) * (panel_w + panel_gap);
        svg_panel(svg, maps, c, origin_x, margin + title_h);
    }
    svg += "</svg>\n";

    std::ofstream out(path);
    if (!out) {
        throw io_error("cannot write heat-map SVG: " + path);
    }
    out << svg;
    if (!out) {
        throw io_error("error while writing heat-map SVG: " + path);
    }
}

} // namespace grsim
