#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace functor_audit {

enum class Group { ErOr, Utils, Rest, Dropped };

enum class DropReason { None, StaticMember, ExcludedSuffix };

std::string_view to_string(Group group) noexcept;
std::string_view to_string(DropReason reason) noexcept;

struct GroupLabel {
    Group group = Group::Rest;
    DropReason drop_reason = DropReason::None;

    friend bool operator==(const GroupLabel&, const GroupLabel&) = default;
};

/// Where classes whose name hits the exclusion list end up.
enum class ExcludedPolicy { Rest, Drop };

struct SuffixRules {
    std::vector<std::string> utils_suffixes{"Utils", "Util", "Utilities", "Utility"};
    std::vector<std::string> eror_suffixes{"er", "or"};
    std::vector<std::string> exclusion_suffixes{
        "Inner",    "Actor",    "Logger", "Member",   "Order",    "Parameter", "Error",
        "Calculator", "Vector", "Computer", "Customer", "Trigger",  "Cluster",   "Cipher",
        "Cursor",   "Number",   "Owner",  "Meter",    "Letter",   "Answer",    "Author",
        "Folder",   "Other",    "Cashier", "Broker",  "Motor",    "Mirror",    "Spider",
        "Color",    "Center",   "Layer",  "Never",    "Browser",  "Either",    "Tensor",
        "Cylinder", "Meteor",   "Flower", "Banner",   "Chapter",  "Developer"};

    /// Rules file: one suffix per line under `[utils]`, `[eror]` or
    /// `[exclude]`; `#` starts a comment. A section present in the file
    /// replaces the default list; absent sections keep their defaults.
    /// Throws std::runtime_error on unknown sections, entries outside a
    /// section, duplicate exclusion entries, or an empty list.
    static SuffixRules parse(std::string_view text);
    static SuffixRules load(const std::filesystem::path& path);
};

bool has_exclusion_suffix(std::string_view name, const SuffixRules& rules);

bool has_utils_suffix(std::string_view name, const SuffixRules& rules);

/// Agent-noun tail ("er"/"or" by default) preceded by at least one
/// character, case-sensitive. Ignores the exclusion list.
bool has_eror_tail(std::string_view name, const SuffixRules& rules);

/// Utils first, then ErOr unless excluded, then the static-member filter
/// that only guards Rest.
GroupLabel classify(std::string_view name, bool has_static_member, const SuffixRules& rules,
                    ExcludedPolicy excluded = ExcludedPolicy::Rest);

}  // namespace functor_audit
