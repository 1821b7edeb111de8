#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "functor_audit/source_model.hpp"

namespace functor_audit {

/// The seven per-class values the study works with, in table order:
/// LCOM5, NHD, CC, CoCo, ACoCo, MxCoCo, MnCoCo. Any of them may be
/// undefined (empty optional).
struct MetricValues {
    std::optional<double> lcom5;
    std::optional<double> nhd;
    std::optional<double> cc;
    std::optional<double> coco_total;
    std::optional<double> coco_avg;
    std::optional<double> coco_max;
    std::optional<double> coco_min;

    static constexpr std::size_t kCount = 7;

    std::array<std::optional<double>, kCount> as_array() const {
        return {lcom5, nhd, cc, coco_total, coco_avg, coco_max, coco_min};
    }

    bool complete() const {
        for (const auto& v : as_array()) {
            if (!v) return false;
        }
        return true;
    }

    friend bool operator==(const MetricValues&, const MetricValues&) = default;
};

/// Short column names in MetricValues::as_array() order.
constexpr std::array<std::string_view, MetricValues::kCount> kMetricNames = {
    "LCOM5", "NHD", "CC", "CoCo", "ACoCo", "MxCoCo", "MnCoCo"};

struct ClassMetrics {
    std::optional<double> lcom5;
    std::optional<double> nhd;
    std::optional<long> cc_total;
    std::optional<long> coco_total;
    std::optional<double> coco_avg;
    std::optional<long> coco_min;
    std::optional<long> coco_max;
    int k = 0;        // non-constructor methods
    int l_attr = 0;   // attributes
    int l_types = 0;  // distinct parameter types

    MetricValues values() const;
};

/// (a - k*l) / (l - k*l); undefined when l == 0 or k <= 1.
std::optional<double> lcom5(const SourceClass& cls);

/// 1 - 2/(l*k*(k-1)) * sum_j x_j (k - x_j) over distinct parameter types j;
/// undefined when k < 2 or l == 0.
std::optional<double> nhd(const SourceClass& cls);

/// 1 + number of decision points.
int method_cc(const MethodView& method);

int method_coco(const MethodView& method);

ClassMetrics class_metrics(const SourceClass& cls);

}  // namespace functor_audit
