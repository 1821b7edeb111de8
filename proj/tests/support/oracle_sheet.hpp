#pragma once

// Hand-computed expectations for the oracle fixture classes. Reals are
// written as exact fractions ("13/30") so they can be compared at 1e-12.

#include <filesystem>
#include <string>
#include <vector>

namespace oracle_sheet {

struct Rational {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

Rational parse_rational(const std::string& text);

struct MethodExpectation {
    std::string name;
    int cc = 0;
    int coco = 0;
    std::vector<std::string> accessed;  // sorted
};

struct ClassExpectation {
    std::string file;
    std::string qualified_name;
    bool has_static = false;
    Rational lcom5, nhd, cc, coco, acoco, mxcoco, mncoco;
    std::vector<MethodExpectation> methods;
};

std::vector<ClassExpectation> load(const std::filesystem::path& json_file);

}  // namespace oracle_sheet
