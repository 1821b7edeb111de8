#include <gtest/gtest.h>

#include "functor_audit/classifier.hpp"

using namespace functor_audit;

namespace {

const SuffixRules kRules;

}  // namespace

TEST(Classify, Examples) {
    EXPECT_EQ(classify("StringUtils", false, kRules).group, Group::Utils);
    EXPECT_EQ(classify("Calculator", false, kRules).group, Group::Rest);
    EXPECT_EQ(classify("TaskManager", false, kRules).group, Group::ErOr);
    EXPECT_NE(classify("Color", false, kRules).group, Group::ErOr);
    EXPECT_EQ(classify("X", true, kRules), (GroupLabel{Group::Dropped, DropReason::StaticMember}));
}

TEST(Classify, PrecedenceOrder) {
    EXPECT_EQ(classify("FileUtil", true, kRules).group, Group::Utils);
    EXPECT_EQ(classify("Parser", true, kRules).group, Group::ErOr);
    EXPECT_EQ(classify("HttpLogger", true, kRules), (GroupLabel{Group::Dropped, DropReason::StaticMember}));
    EXPECT_EQ(classify("HttpLogger", false, kRules).group, Group::Rest);
}

TEST(Classify, TailNeedsAPrecedingCharacter) {
    EXPECT_EQ(classify("er", false, kRules).group, Group::Rest);
    EXPECT_EQ(classify("Or", false, kRules).group, Group::Rest);
    EXPECT_EQ(classify("Xor", false, kRules).group, Group::ErOr);
    EXPECT_EQ(classify("PARSER", false, kRules).group, Group::Rest);
}

TEST(Classify, ExcludedPolicyDrop) {
    EXPECT_EQ(classify("HttpLogger", false, kRules, ExcludedPolicy::Drop),
              (GroupLabel{Group::Dropped, DropReason::ExcludedSuffix}));
    EXPECT_EQ(classify("Retriever", false, kRules, ExcludedPolicy::Drop).group, Group::ErOr);
    EXPECT_EQ(classify("Plain", false, kRules, ExcludedPolicy::Drop).group, Group::Rest);
}

TEST(ExclusionSuffix, Examples) {
    EXPECT_TRUE(has_exclusion_suffix("HttpLogger", kRules));
    EXPECT_FALSE(has_exclusion_suffix("Retriever", kRules));
    EXPECT_TRUE(has_eror_tail("Retriever", kRules));
}

TEST(ExclusionSuffix, AllFortyOneWordsVerbatim) {
    ASSERT_EQ(kRules.exclusion_suffixes.size(), 41u);
    for (const std::string& w : kRules.exclusion_suffixes) {
        EXPECT_TRUE(has_exclusion_suffix(w, kRules)) << w;
        EXPECT_NE(classify(w, false, kRules).group, Group::ErOr) << w;
        EXPECT_NE(classify(w, true, kRules).group, Group::ErOr) << w;
    }
}

TEST(UtilsSuffix, AllFourSuffixes) {
    for (const char* s : {"Utils", "Util", "Utilities", "Utility"}) {
        EXPECT_EQ(classify(std::string("Io") + s, false, kRules).group, Group::Utils) << s;
        EXPECT_EQ(classify(s, true, kRules).group, Group::Utils) << s;
    }
}

TEST(SuffixRulesFile, SectionsReplaceDefaults) {
    const SuffixRules r = SuffixRules::parse("# custom\n[utils]\nHelpers\n\n[exclude]\nWorker  # trailing\n");
    EXPECT_EQ(r.utils_suffixes, (std::vector<std::string>{"Helpers"}));
    EXPECT_EQ(r.exclusion_suffixes, (std::vector<std::string>{"Worker"}));
    EXPECT_EQ(r.eror_suffixes, kRules.eror_suffixes);
    EXPECT_EQ(classify("StringHelpers", false, r).group, Group::Utils);
    EXPECT_EQ(classify("StringUtils", false, r).group, Group::Rest);
    EXPECT_EQ(classify("Worker", false, r).group, Group::Rest);
    EXPECT_EQ(classify("HttpLogger", false, r).group, Group::ErOr);
}

TEST(SuffixRulesFile, Errors) {
    EXPECT_THROW(SuffixRules::parse("[weird]\nA\n"), std::runtime_error);
    EXPECT_THROW(SuffixRules::parse("Loose\n"), std::runtime_error);
    EXPECT_THROW(SuffixRules::parse("[exclude]\nA\nA\n"), std::runtime_error);
    EXPECT_THROW(SuffixRules::parse("[utils]\n# nothing\n"), std::runtime_error);
    EXPECT_THROW(SuffixRules::load("/nonexistent/rules.txt"), std::runtime_error);
}
