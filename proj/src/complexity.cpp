#include "grsim/complexity.hpp"

#include "grsim/compress.hpp"
#include "grsim/debruijn.hpp"
#include "grsim/error.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace grsim {

std::string serialize_grid(const evolution_grid& grid) {
    std::string out;
    out.reserve(grid.cells.size());
    for (symbol s : grid.cells) {
        out.push_back(static_cast<char>('0' + s));
    }
    return out;
}

std::int64_t baseline_compressed_size(std::size_t length) {
    static std::mutex mutex;
    static std::unordered_map<std::size_t, std::int64_t> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(length);
        if (it != cache.end()) {
            return it->second;
        }
    }
    std::string zeros(length, '0');
    auto size = static_cast<std::int64_t>(deflate_fixed_size(zeros));
    std::lock_guard lock(mutex);
    cache.emplace(length, size);
    return size;
}

class_score score_grid(const evolution_grid& grid) {
    thread_local std::string scratch;
    scratch.clear();
    scratch.reserve(grid.cells.size());
    for (symbol s : grid.cells) {
        scratch.push_back(static_cast<char>('0' + s));
    }
    class_score score;
    score.raw_bytes = static_cast<std::int64_t>(deflate_fixed_size(scratch));
    score.baseline_bytes = baseline_compressed_size(scratch.size());
    score.normalized = score.raw_bytes - score.baseline_bytes;
    return score;
}

int classify(const class_score& score, const thresholds& th) {
    std::size_t idx = 0;
    while (idx < th.cuts.size() && static_cast<double>(score.normalized) > th.cuts[idx]) {
        ++idx;
    }
    return th.class_order[idx];
}

namespace {

// Fingerprint of the labeled set so thresholds carry what they were trained on.
std::uint64_t labels_fingerprint(const labeled_rules& labels) {
    std::uint64_t h = 14695981039346656037ull;
    for (const auto& [rule, cls] : labels.classes) {
        h = (h ^ static_cast<std::uint64_t>(rule)) * 1099511628211ull;
        h = (h ^ static_cast<std::uint64_t>(cls)) * 1099511628211ull;
    }
    return h;
}

} // namespace

thresholds calibrate(const labeled_rules& labels, int width, int steps,
                     const std::vector<configuration>& inits) {
    if (inits.empty()) {
        throw data_error("calibration needs at least one initial condition");
    }
    for (const auto& init : inits) {
        if (init.width() != width) {
            throw data_error("calibration initial condition width " +
                             std::to_string(init.width()) + " does not match width " +
                             std::to_string(width));
        }
    }
    if (labels.classes.empty()) {
        throw data_error("calibration needs a labeled rule set");
    }

    std::array<std::vector<double>, 4> per_class_means;
    for (const auto& [rule_number, cls] : labels.classes) {
        eca_rule rule = eca_rule::from_number(rule_number);
        std::int64_t total = 0;
        for (const auto& init : inits) {
            auto grid = evolve(rule, project_to_binary(init), steps);
            total += score_grid(grid).normalized;
        }
        per_class_means[static_cast<std::size_t>(cls - 1)].push_back(
            static_cast<double>(total) / static_cast<double>(inits.size()));
    }

    std::array<double, 4> group_mean{};
    for (int c = 0; c < 4; ++c) {
        const auto& means = per_class_means[static_cast<std::size_t>(c)];
        if (means.empty()) {
            throw data_error("calibration label set has no rules in class " +
                             std::to_string(c + 1));
        }
        group_mean[static_cast<std::size_t>(c)] =
            std::accumulate(means.begin(), means.end(), 0.0) / static_cast<double>(means.size());
    }

    thresholds th;
    th.class_order = {1, 2, 3, 4};
    std::sort(th.class_order.begin(), th.class_order.end(), [&](int a, int b) {
        return group_mean[static_cast<std::size_t>(a - 1)] <
               group_mean[static_cast<std::size_t>(b - 1)];
    });
    for (std::size_t i = 0; i < 3; ++i) {
        double lo = group_mean[static_cast<std::size_t>(th.class_order[i] - 1)];
        double hi = group_mean[static_cast<std::size_t>(th.class_order[i + 1] - 1)];
        if (lo == hi) {
            throw data_error("degenerate calibration: classes " +
                             std::to_string(th.class_order[i]) + " and " +
                             std::to_string(th.class_order[i + 1]) + " have equal mean " +
                             std::to_string(lo));
        }
        th.cuts[i] = (lo + hi) / 2.0;
    }

    char buf[160];
    std::snprintf(buf, sizeof(buf), "labels=%016llx;rules=%zu;width=%d;steps=%d;inits=%zu",
                  static_cast<unsigned long long>(labels_fingerprint(labels)),
                  labels.classes.size(), width, steps, inits.size());
    th.provenance = buf;
    return th;
}

std::string thresholds::to_text() const {
    char buf[256];
    std::string out;
    out += "provenance=" + provenance + "\n";
    std::snprintf(buf, sizeof(buf), "class_order=%d,%d,%d,%d\n", class_order[0], class_order[1],
                  class_order[2], class_order[3]);
    out += buf;
    std::snprintf(buf, sizeof(buf), "cuts=%.17g,%.17g,%.17g\n", cuts[0], cuts[1], cuts[2]);
    out += buf;
    return out;
}

thresholds thresholds::from_text(const std::string& text) {
    thresholds th;
    std::istringstream in(text);
    std::string line;
    bool saw_provenance = false;
    bool saw_order = false;
    bool saw_cuts = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        if (line.starts_with("provenance=")) {
            th.provenance = line.substr(11);
            saw_provenance = true;
        } else if (line.starts_with("class_order=")) {
            if (std::sscanf(line.c_str(), "class_order=%d,%d,%d,%d", &th.class_order[0],
                            &th.class_order[1], &th.class_order[2], &th.class_order[3]) != 4) {
                throw data_error("malformed thresholds line: " + line);
            }
            saw_order = true;
        } else if (line.starts_with("cuts=")) {
            if (std::sscanf(line.c_str(), "cuts=%lg,%lg,%lg", &th.cuts[0], &th.cuts[1],
                            &th.cuts[2]) != 3) {
                throw data_error("malformed thresholds line: " + line);
            }
            saw_cuts = true;
        } else {
            throw data_error("unknown thresholds line: " + line);
        }
    }
    if (!saw_provenance || !saw_order || !saw_cuts) {
        throw data_error("thresholds text is missing fields");
    }
    std::array<int, 4> sorted = th.class_order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 4>{1, 2, 3, 4}) {
        throw data_error("thresholds class_order is not a permutation of 1..4");
    }
    if (!(th.cuts[0] < th.cuts[1] && th.cuts[1] < th.cuts[2])) {
        throw data_error("thresholds cuts are not strictly increasing");
    }
    return th;
}

void thresholds::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) {
        throw io_error("cannot write thresholds file: " + path);
    }
    out << to_text();
    if (!out) {
        throw io_error("error while writing thresholds file: " + path);
    }
}

thresholds thresholds::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open thresholds file: " + path);
    }
    std::ostringstream text;
    text << in.rdbuf();
    return from_text(text.str());
}

asymptotic_result asymptotic_score(const grid_source& run,
                                   const std::vector<std::pair<int, int>>& ladder,
                                   int init_count) {
    if (ladder.empty()) {
        throw data_error("asymptotic score needs a nonempty ladder");
    }
    if (init_count < 1) {
        throw data_error("asymptotic score needs init_count >= 1");
    }
    for (std::size_t i = 1; i < ladder.size(); ++i) {
        if (ladder[i].first < ladder[i - 1].first || ladder[i].second < ladder[i - 1].second) {
            throw data_error("asymptotic ladder must be nondecreasing in width and steps");
        }
    }

    asymptotic_result result;
    result.points.reserve(ladder.size());
    for (const auto& [width, steps] : ladder) {
        int order = 1;
        std::uint64_t span = 3;
        while (span < static_cast<std::uint64_t>(width)) {
            span *= 3;
            ++order;
        }
        auto inits = debruijn_inits(3, order, init_count, width);
        std::int64_t total = 0;
        for (const auto& init : inits) {
            total += score_grid(run(init, steps)).normalized;
        }
        ladder_point point;
        point.width = width;
        point.steps = steps;
        point.mean_normalized = static_cast<double>(total) / static_cast<double>(inits.size());
        result.points.push_back(point);
    }
    result.max_normalized = result.points.front().mean_normalized;
    for (const auto& point : result.points) {
        result.max_normalized = std::max(result.max_normalized, point.mean_normalized);
    }
    return result;
}

} // namespace grsim
