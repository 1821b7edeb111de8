#include "functor_audit/classifier.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace functor_audit {

std::string_view to_string(Group group) noexcept {
    switch (group) {
    case Group::ErOr: return "ErOr";
    case Group::Utils: return "Utils";
    case Group::Rest: return "Rest";
    case Group::Dropped: return "Dropped";
    }
    return "?";
}

std::string_view to_string(DropReason reason) noexcept {
    switch (reason) {
    case DropReason::None: return "none";
    case DropReason::StaticMember: return "static-member";
    case DropReason::ExcludedSuffix: return "excluded-suffix";
    }
    return "?";
}

namespace {

bool ends_with_any(std::string_view name, const std::vector<std::string>& suffixes) {
    return std::any_of(suffixes.begin(), suffixes.end(),
                       [&](const std::string& s) { return name.ends_with(s); });
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

}  // namespace

SuffixRules SuffixRules::parse(std::string_view text) {
    SuffixRules rules;
    std::vector<std::string>* current = nullptr;
    std::set<std::string> replaced;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            const std::string section(line.substr(1, line.size() - 2));
            if (section == "utils") {
                current = &rules.utils_suffixes;
            } else if (section == "eror") {
                current = &rules.eror_suffixes;
            } else if (section == "exclude") {
                current = &rules.exclusion_suffixes;
            } else {
                throw std::runtime_error("rules line " + std::to_string(line_no) + ": unknown section [" +
                                         section + "]");
            }
            if (replaced.insert(section).second) current->clear();
            continue;
        }
        if (!current) {
            throw std::runtime_error("rules line " + std::to_string(line_no) + ": suffix outside a section");
        }
        current->emplace_back(line);
    }
    for (const auto* list : {&rules.utils_suffixes, &rules.eror_suffixes, &rules.exclusion_suffixes}) {
        if (list->empty()) throw std::runtime_error("rules: empty suffix list");
    }
    const std::set<std::string> unique(rules.exclusion_suffixes.begin(), rules.exclusion_suffixes.end());
    if (unique.size() != rules.exclusion_suffixes.size()) {
        throw std::runtime_error("rules: duplicate exclusion suffix");
    }
    return rules;
}

SuffixRules SuffixRules::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read rules file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

bool has_exclusion_suffix(std::string_view name, const SuffixRules& rules) {
    return ends_with_any(name, rules.exclusion_suffixes);
}

bool has_utils_suffix(std::string_view name, const SuffixRules& rules) {
    return ends_with_any(name, rules.utils_suffixes);
}

bool has_eror_tail(std::string_view name, const SuffixRules& rules) {
    return std::any_of(rules.eror_suffixes.begin(), rules.eror_suffixes.end(), [&](const std::string& s) {
        return name.size() > s.size() && name.ends_with(s);
    });
}

GroupLabel classify(std::string_view name, bool has_static_member, const SuffixRules& rules,
                    ExcludedPolicy excluded) {
    if (has_utils_suffix(name, rules)) return {Group::Utils, DropReason::None};
    if (has_eror_tail(name, rules)) {
        if (!has_exclusion_suffix(name, rules)) return {Group::ErOr, DropReason::None};
        if (excluded == ExcludedPolicy::Drop) return {Group::Dropped, DropReason::ExcludedSuffix};
    }
    if (has_static_member) return {Group::Dropped, DropReason::StaticMember};
    return {Group::Rest, DropReason::None};
}

}  // namespace functor_audit
