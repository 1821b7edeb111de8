#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "functor_audit/pipeline.hpp"
#include "test_util.hpp"

using namespace functor_audit;

namespace {

ClassRecord record(const std::string& name, long ncloc, Group group = Group::Rest, double value = 1.0) {
    ClassRecord r;
    r.qualified_name = name;
    r.loc = ncloc + 2;
    r.blank_lines = 2;
    r.ncloc = ncloc;
    r.metrics = MetricValues{value, value, value, value, value, value, value};
    r.label = GroupLabel{group, group == Group::Dropped ? DropReason::StaticMember : DropReason::None};
    return r;
}

// 1-based nearest rank with exact integer arithmetic: ceil(num/den * n).
std::size_t exact_rank(std::size_t n, std::size_t num, std::size_t den) {
    return std::max<std::size_t>(1, (num * n + den - 1) / den);
}

const char* kCsv =
    "class,LCOM5,NHD,CC,CoCo,ACoCo,MxCoCo,MnCoCo,LoC,Blank,static,repo\n"
    "com/x/TaskManager.java,0.5,0.25,10,12,3,6,1,120,20,0,r1\n"
    "org.y.StringUtils,0.75,0.5,7,4,1,2,0,80,10,true,r1\n"
    "Plain,,0.5,3,1,0.5,1,0,30,5,no,r2\n";

}  // namespace

TEST(Quantile, NearestRankExamples) {
    std::vector<double> hundred(100);
    std::iota(hundred.begin(), hundred.end(), 1.0);
    EXPECT_EQ(quantile(hundred, 0.01), 1.0);
    EXPECT_EQ(quantile(hundred, 0.99), 99.0);
    const std::vector<double> seven = {1, 2, 3, 4, 5, 6, 7};
    EXPECT_EQ(quantile(seven, 0.5), 4.0);
    EXPECT_EQ(quantile(seven, 0.0), 1.0);
    EXPECT_EQ(quantile(seven, 1.0), 7.0);
    EXPECT_THROW(quantile(std::vector<double>{}, 0.5), EmptyInput);
}

TEST(Quantile, DecimalFractionsSnapToIntegers) {
    // 0.07 * 100 is 7.000000000000001 in binary; the rank must still be 7.
    EXPECT_EQ(nearest_rank(100, 0.07), 7u);
    EXPECT_EQ(nearest_rank(1000, 0.99), 990u);
    EXPECT_EQ(nearest_rank(3, 0.5), 2u);
    EXPECT_EQ(nearest_rank(5, 0.0), 1u);
}

TEST(Filter, AllInsideBoundsUnchanged) {
    std::vector<ClassRecord> in;
    for (int i = 0; i < 5; ++i) in.push_back(record("C" + std::to_string(i), 50));
    const FilterResult out = filter_records(in);
    EXPECT_EQ(out.kept.size(), 5u);
    EXPECT_EQ(out.dropped_metric + out.dropped_quantile + out.dropped_label, 0u);
}

TEST(Filter, UndefinedMetricRemovedRegardlessOfSize) {
    std::vector<ClassRecord> in = {record("A", 10), record("B", 10), record("C", 10)};
    in[1].metrics.nhd.reset();
    const FilterResult out = filter_records(in);
    EXPECT_EQ(out.kept.size(), 2u);
    EXPECT_EQ(out.dropped_metric, 1u);
    const FilterResult lenient = filter_records(in, {}, true);
    EXPECT_EQ(lenient.kept.size(), 3u);
}

TEST(Filter, BoundaryValuesAreKept) {
    std::vector<ClassRecord> in;
    for (int i = 1; i <= 10; ++i) in.push_back(record("C" + std::to_string(i), i));
    const FilterResult out = filter_records(in, FilterBounds{0.2, 0.8});
    EXPECT_EQ(*out.ncloc_low, 2.0);
    EXPECT_EQ(*out.ncloc_high, 8.0);
    EXPECT_EQ(out.kept.size(), 7u);
    EXPECT_EQ(out.dropped_quantile, 3u);
}

TEST(Filter, DroppedLabelsInfluenceThresholdsThenLeave) {
    std::vector<ClassRecord> in = {record("A", 1, Group::Dropped), record("B", 5), record("C", 9)};
    const FilterResult out = filter_records(in, FilterBounds{0.34, 1.0});
    EXPECT_EQ(*out.ncloc_low, 5.0);
    EXPECT_EQ(out.dropped_quantile, 1u);
    EXPECT_EQ(out.dropped_label, 0u);
    const FilterResult all = filter_records(in, FilterBounds{0.0, 1.0});
    EXPECT_EQ(all.dropped_label, 1u);
    EXPECT_EQ(all.kept.size(), 2u);
}

TEST(Filter, FrozenThresholds) {
    std::vector<ClassRecord> in = {record("A", 1), record("B", 5), record("C", 9)};
    const FilterResult out = filter_records_with_thresholds(in, 4, 9);
    EXPECT_EQ(out.kept.size(), 2u);
    EXPECT_EQ(out.dropped_quantile, 1u);
}

TEST(Filter, ThousandRecordConservationAndEnumeratedBoundary) {
    std::mt19937_64 rng(20240601);
    std::vector<long> sizes(1000);
    std::iota(sizes.begin(), sizes.end(), 1L);
    std::shuffle(sizes.begin(), sizes.end(), rng);
    std::vector<ClassRecord> in;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        const Group g = i % 13 == 0 ? Group::Dropped : static_cast<Group>(i % 3);
        in.push_back(record("C" + std::to_string(i), sizes[i], g, static_cast<double>(i % 17)));
        if (i % 29 == 0) in.back().metrics.cc.reset();
    }

    // Brute force: survivors of the metric step, their sorted sizes, the
    // exact ranks, and every record strictly outside.
    std::vector<long> defined;
    for (const auto& r : in) {
        if (r.metrics.complete()) defined.push_back(r.ncloc);
    }
    std::sort(defined.begin(), defined.end());
    const long lo = defined[exact_rank(defined.size(), 1, 100) - 1];
    const long hi = defined[exact_rank(defined.size(), 99, 100) - 1];
    std::set<std::string> expected_quantile, expected_label, expected_kept;
    std::size_t expected_metric = 0;
    for (const auto& r : in) {
        if (!r.metrics.complete()) {
            ++expected_metric;
        } else if (r.ncloc < lo || r.ncloc > hi) {
            expected_quantile.insert(r.qualified_name);
        } else if (r.label.group == Group::Dropped) {
            expected_label.insert(r.qualified_name);
        } else {
            expected_kept.insert(r.qualified_name);
        }
    }

    const FilterResult out = filter_records(in);
    EXPECT_EQ(out.input_count, 1000u);
    EXPECT_EQ(out.input_count, out.kept.size() + out.dropped_metric + out.dropped_quantile + out.dropped_label);
    EXPECT_EQ(out.dropped_metric, expected_metric);
    EXPECT_EQ(out.dropped_quantile, expected_quantile.size());
    EXPECT_EQ(out.dropped_label, expected_label.size());
    std::set<std::string> kept;
    for (const auto& r : out.kept) kept.insert(r.qualified_name);
    EXPECT_EQ(kept, expected_kept);
    EXPECT_EQ(*out.ncloc_low, static_cast<double>(lo));
    EXPECT_EQ(*out.ncloc_high, static_cast<double>(hi));
}

TEST(Filter, ThousandDistinctSizesRemoveNineteen) {
    std::vector<ClassRecord> in;
    for (int i = 1; i <= 1000; ++i) in.push_back(record("C" + std::to_string(i), i));
    const FilterResult out = filter_records(in);
    // Ranks 10 and 990: sizes 1..9 and 991..1000 fall outside.
    EXPECT_EQ(out.dropped_quantile, 19u);
}

TEST(Aggregate, MeanOfTwo) {
    const std::vector<ClassRecord> in = {record("A", 10, Group::Utils, 2.0), record("B", 20, Group::Utils, 4.0)};
    const auto s = aggregate_groups(in);
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[1].group, Group::Utils);
    EXPECT_EQ(s[1].class_count, 2u);
    EXPECT_DOUBLE_EQ(*s[1].means[0], 3.0);
    EXPECT_EQ(s[1].loc_total, 34);
    EXPECT_DOUBLE_EQ(*s[1].loc_per_class, 17.0);
    EXPECT_EQ(s[0].class_count, 0u);
    EXPECT_FALSE(s[0].means[0].has_value());
}

TEST(Aggregate, OrderIndependent) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(0.0, 1e6);
    std::vector<ClassRecord> in;
    for (int i = 0; i < 500; ++i) in.push_back(record("C" + std::to_string(i), 10, Group::Rest, dist(rng)));
    const auto a = aggregate_groups(in);
    std::shuffle(in.begin(), in.end(), rng);
    const auto b = aggregate_groups(in);
    for (std::size_t m = 0; m < MetricValues::kCount; ++m) EXPECT_EQ(*a[2].means[m], *b[2].means[m]);
}

TEST(Aggregate, StableMean) {
    EXPECT_FALSE(stable_mean({}).has_value());
    EXPECT_DOUBLE_EQ(*stable_mean({1e16, 1.0, -1e16, 1.0}), 0.5);
}

TEST(CamCsv, ThreeRows) {
    const IngestResult r = ingest_cam_csv_text(kCsv, "cam.csv", ColumnMap::parse("static=static\nrepo=repo\n"), {});
    ASSERT_EQ(r.records.size(), 3u);
    EXPECT_EQ(r.inputs_seen, 3u);
    EXPECT_EQ(r.repositories, 2u);
    EXPECT_TRUE(r.warnings.empty());
    EXPECT_EQ(r.records[0].label.group, Group::ErOr);
    EXPECT_EQ(r.records[0].ncloc, 100);
    EXPECT_EQ(r.records[1].label.group, Group::Utils);
    EXPECT_TRUE(r.records[1].has_static_member);
    EXPECT_FALSE(r.records[2].metrics.lcom5.has_value());
    EXPECT_EQ(*r.records[2].metrics.nhd, 0.5);
    EXPECT_EQ(r.records[2].origin, "csv:cam.csv:4");
}

TEST(CamCsv, MissingStaticColumnWarns) {
    const IngestResult r = ingest_cam_csv_text(kCsv, "cam.csv", ColumnMap{}, {});
    EXPECT_EQ(r.warnings.size(), 1u);
    EXPECT_FALSE(r.records[1].has_static_member);
}

TEST(CamCsv, BadRowsAreSkippedWithLines) {
    const std::string text = "class,LCOM5,NHD,CC,CoCo,ACoCo,MxCoCo,MnCoCo,LoC,Blank\n"
                             "A,1,1,1,1,1,1,1,10,1\n"
                             "B,abc,1,1,1,1,1,1,10,1\n"
                             "C,1,1\n"
                             "\"D,x\",NaN,1,1,1,1,1,1,10,1\n";
    const IngestResult r = ingest_cam_csv_text(text, "m.csv", ColumnMap{}, {});
    EXPECT_EQ(r.records.size(), 2u);
    ASSERT_EQ(r.diagnostics.size(), 2u);
    EXPECT_EQ(r.diagnostics[0].line, 3);
    EXPECT_EQ(r.diagnostics[0].to_string(), "SKIP m.csv:3 unparsable LCOM5 value");
    EXPECT_EQ(r.diagnostics[1].line, 4);
    EXPECT_FALSE(r.records[1].metrics.lcom5.has_value());
}

TEST(CamCsv, MissingRequiredColumnThrows) {
    EXPECT_THROW(ingest_cam_csv_text("class,LCOM5\nA,1\n", "m.csv", ColumnMap{}, {}), MissingColumn);
    EXPECT_THROW(ingest_cam_csv("/nonexistent.csv", ColumnMap{}, {}), IoError);
}

TEST(CamCsv, ColumnMapParsing) {
    const ColumnMap m = ColumnMap::parse("# CAM\nname = file\nlcom5=LCOM5\nstatic=isStatic\n");
    EXPECT_EQ(m.name, "file");
    EXPECT_EQ(*m.has_static, "isStatic");
    EXPECT_THROW(ColumnMap::parse("nope=x\n"), std::runtime_error);
}

TEST(CamCsv, SimpleClassName) {
    EXPECT_EQ(simple_class_name("src/main/java/org/x/FooParser.java"), "FooParser");
    EXPECT_EQ(simple_class_name("org.x.Outer$InnerHelper"), "InnerHelper");
    EXPECT_EQ(simple_class_name(" Plain "), "Plain");
}

TEST(IngestSources, EmptyDirectory) {
    test_util::TempDir dir("empty");
    const IngestResult r = ingest_sources({dir.path()}, {});
    EXPECT_TRUE(r.records.empty());
    EXPECT_TRUE(r.diagnostics.empty());
    EXPECT_THROW(ingest_sources({dir.path() / "missing"}, {}), IoError);
}

TEST(IngestSources, FixtureTreeInventory) {
    const IngestResult r = ingest_sources({test_util::fixture("corpus/src")}, {});
    std::vector<std::string> names;
    for (const auto& rec : r.records) names.push_back(rec.qualified_name);
    EXPECT_EQ(names, (std::vector<std::string>{"app.ReportPrinter", "app.TokenReader", "app.model.Inventory",
                                               "app.model.Inventory.Item", "app.model.Matrix",
                                               "app.model.BackgroundColor", "app.model.Marker",
                                               "app.model.Registry", "app.util.StringUtils"}));
    EXPECT_EQ(r.inputs_seen, 6u);
    EXPECT_EQ(r.repositories, 1u);
    std::map<std::string, std::pair<Group, long>> by_name;
    for (const auto& rec : r.records) by_name[rec.qualified_name] = {rec.label.group, rec.ncloc};
    EXPECT_EQ(by_name["app.model.Registry"], std::make_pair(Group::Dropped, 11L));
    EXPECT_EQ(by_name["app.model.BackgroundColor"], std::make_pair(Group::Rest, 10L));
    EXPECT_EQ(by_name["app.TokenReader"], std::make_pair(Group::ErOr, 36L));
}

TEST(IngestSources, MalformedFileIsIsolated) {
    const IngestResult r = ingest_sources({test_util::fixture("malformed")}, {});
    EXPECT_EQ(r.records.size(), 2u);
    EXPECT_EQ(r.inputs_skipped, 1u);
    ASSERT_EQ(r.diagnostics.size(), 1u);
    EXPECT_EQ(r.diagnostics[0].line, 11);
    EXPECT_NE(r.diagnostics[0].to_string().find("Broken.java:11 "), std::string::npos);
}

TEST(IngestSources, WorkerCountDoesNotChangeResult) {
    IngestOptions one;
    one.jobs = 1;
    IngestOptions four;
    four.jobs = 4;
    const auto roots = std::vector<std::filesystem::path>{test_util::fixture("oracle"), test_util::fixture("corpus/src")};
    const IngestResult a = ingest_sources(roots, one);
    const IngestResult b = ingest_sources(roots, four);
    ASSERT_EQ(a.records.size(), b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
        EXPECT_EQ(a.records[i].qualified_name, b.records[i].qualified_name);
        EXPECT_EQ(a.records[i].metrics, b.records[i].metrics);
        EXPECT_EQ(a.records[i].repository, b.records[i].repository);
    }
    EXPECT_EQ(a.repositories, 2u);
}
