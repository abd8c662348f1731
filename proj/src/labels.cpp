#include "grsim/labels.hpp"

#include "grsim/eca.hpp"
#include "grsim/error.hpp"

#include <fstream>
#include <sstream>

namespace grsim {

int labeled_rules::class_of(int rule) const {
    auto it = classes.find(rule);
    if (it == classes.end()) {
        throw data_error("no class label for rule " + std::to_string(rule));
    }
    return it->second;
}

bool labeled_rules::covers_representatives() const {
    for (int rep : representatives()) {
        if (!classes.contains(rep)) {
            return false;
        }
    }
    return true;
}

const labeled_rules& labeled_rules::builtin() {
    // Wolfram's qualitative classes for the 88 representatives, as curated in
    // the published ECA classification tables. Rules not listed under class
    // 1, 3 or 4 are class 2.
    static const labeled_rules labels = [] {
        labeled_rules out;
        for (int rep : representatives()) {
            out.classes[rep] = 2;
        }
        for (int rule : {0, 8, 32, 40, 128, 136, 160, 168}) {
            out.classes[rule] = 1;
        }
        for (int rule : {18, 22, 30, 45, 60, 90, 105, 122, 126, 146, 150}) {
            out.classes[rule] = 3;
        }
        for (int rule : {41, 54, 106, 110}) {
            out.classes[rule] = 4;
        }
        return out;
    }();
    return labels;
}

labeled_rules labeled_rules::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open label file: " + path);
    }
    labeled_rules out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t')) {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        int rule = 0;
        int cls = 0;
        char comma = 0;
        std::istringstream fields(line);
        if (!(fields >> rule >> comma >> cls) || comma != ',') {
            throw data_error(path + ":" + std::to_string(lineno) +
                             ": expected 'rule,class', got '" + line + "'");
        }
        if (rule < 0 || rule > 255 || cls < 1 || cls > 4) {
            throw data_error(path + ":" + std::to_string(lineno) + ": value out of range in '" +
                             line + "'");
        }
        if (out.classes.contains(rule)) {
            throw data_error(path + ":" + std::to_string(lineno) + ": duplicate rule " +
                             std::to_string(rule));
        }
        out.classes[rule] = cls;
    }
    return out;
}

void labeled_rules::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) {
        throw io_error("cannot write label file: " + path);
    }
    for (const auto& [rule, cls] : classes) {
        out << rule << ',' << cls << '\n';
    }
    if (!out) {
        throw io_error("error while writing label file: " + path);
    }
}

} // namespace grsim
