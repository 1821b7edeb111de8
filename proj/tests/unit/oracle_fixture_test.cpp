#include <map>

#include <gtest/gtest.h>

#include "functor_audit/classifier.hpp"
#include "functor_audit/metrics.hpp"
#include "oracle_sheet.hpp"
#include "test_util.hpp"

using namespace functor_audit;

namespace {

std::map<std::string, SourceClass> parse_oracle_tree() {
    std::map<std::string, SourceClass> out;
    for (const auto& entry : std::filesystem::directory_iterator(test_util::fixture("oracle"))) {
        if (entry.path().extension() != ".java") continue;
        for (auto& cls : parse_compilation_unit(test_util::read_file(entry.path()), entry.path().string())) {
            out.emplace(cls.qualified_name, std::move(cls));
        }
    }
    return out;
}

class OracleFixtures : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        sheet_ = new std::vector<oracle_sheet::ClassExpectation>(oracle_sheet::load(test_util::fixture("oracle/expected.json")));
        classes_ = new std::map<std::string, SourceClass>(parse_oracle_tree());
    }
    static void TearDownTestSuite() {
        delete sheet_;
        delete classes_;
    }
    static std::vector<oracle_sheet::ClassExpectation>* sheet_;
    static std::map<std::string, SourceClass>* classes_;
};

std::vector<oracle_sheet::ClassExpectation>* OracleFixtures::sheet_ = nullptr;
std::map<std::string, SourceClass>* OracleFixtures::classes_ = nullptr;

}  // namespace

TEST_F(OracleFixtures, SheetCoversEveryParsedClass) {
    ASSERT_GE(sheet_->size(), 12u);
    EXPECT_EQ(classes_->size(), sheet_->size());
    for (const auto& e : *sheet_) EXPECT_TRUE(classes_->count(e.qualified_name)) << e.qualified_name;
}

TEST_F(OracleFixtures, ClassMetricsMatchHandComputedValues) {
    for (const auto& e : *sheet_) {
        SCOPED_TRACE(e.qualified_name);
        auto it = classes_->find(e.qualified_name);
        ASSERT_NE(it, classes_->end());
        const MetricValues v = class_metrics(it->second).values();
        ASSERT_TRUE(v.complete());
        EXPECT_NEAR(*v.lcom5, e.lcom5.value(), 1e-12);
        EXPECT_NEAR(*v.nhd, e.nhd.value(), 1e-12);
        EXPECT_NEAR(*v.cc, e.cc.value(), 1e-12);
        EXPECT_NEAR(*v.coco_total, e.coco.value(), 1e-12);
        EXPECT_NEAR(*v.coco_avg, e.acoco.value(), 1e-12);
        EXPECT_NEAR(*v.coco_max, e.mxcoco.value(), 1e-12);
        EXPECT_NEAR(*v.coco_min, e.mncoco.value(), 1e-12);
        EXPECT_EQ(it->second.has_static_member, e.has_static);
    }
}

TEST_F(OracleFixtures, MethodLevelValuesAndAccesses) {
    for (const auto& e : *sheet_) {
        const SourceClass& cls = classes_->at(e.qualified_name);
        ASSERT_EQ(cls.methods.size(), e.methods.size()) << e.qualified_name;
        for (std::size_t i = 0; i < e.methods.size(); ++i) {
            SCOPED_TRACE(e.qualified_name + "." + e.methods[i].name);
            const MethodView& m = cls.methods[i];
            EXPECT_EQ(m.name, e.methods[i].name);
            EXPECT_EQ(method_cc(m), e.methods[i].cc);
            EXPECT_EQ(method_coco(m), e.methods[i].coco);
            const std::vector<std::string> accessed(m.accessed_attributes.begin(), m.accessed_attributes.end());
            EXPECT_EQ(accessed, e.methods[i].accessed);
        }
    }
}
