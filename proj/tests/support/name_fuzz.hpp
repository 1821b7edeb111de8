#pragma once

// Fuzzed class names for the classifier partition check.

#include <cstdint>
#include <string>
#include <vector>

#include "functor_audit/classifier.hpp"

namespace name_fuzz {

struct FuzzCase {
    std::string name;
    bool has_static = false;
    functor_audit::ExcludedPolicy policy = functor_audit::ExcludedPolicy::Rest;
};

/// Names glued from suffix-list words, agent tails and filler pieces.
std::vector<FuzzCase> make_cases(std::uint64_t seed, std::size_t count, const functor_audit::SuffixRules& rules);

/// True when `label` is the one and only group the rule predicates allow.
bool partition_holds(const FuzzCase& c, const functor_audit::GroupLabel& label,
                     const functor_audit::SuffixRules& rules);

}  // namespace name_fuzz
