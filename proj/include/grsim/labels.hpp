#pragma once

#include <map>
#include <string>

namespace grsim {

// Behavioral class label (1..4) per ECA rule number. The shipped set covers
// exactly the 88 symmetry representatives.
struct labeled_rules {
    std::map<int, int> classes;

    // Throws data_error naming the rule when it carries no label.
    int class_of(int rule) const;

    bool covers_representatives() const;

    // Curated classification of the 88 representatives (same content as
    // data/eca_classes.txt).
    static const labeled_rules& builtin();

    // File format: one "rule,class" pair per line, '#' starts a comment.
    static labeled_rules load(const std::string& path);
    void save(const std::string& path) const;
};

} // namespace grsim
