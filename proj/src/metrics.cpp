#include "functor_audit/metrics.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace functor_audit {

MetricValues ClassMetrics::values() const {
    auto real = [](const std::optional<long>& v) -> std::optional<double> {
        if (!v) return std::nullopt;
        return static_cast<double>(*v);
    };
    return MetricValues{lcom5, nhd, real(cc_total), real(coco_total), coco_avg, real(coco_max), real(coco_min)};
}

std::optional<double> lcom5(const SourceClass& cls) {
    const long long k = static_cast<long long>(cls.methods.size());
    const long long l = static_cast<long long>(cls.attributes.size());
    if (l == 0 || k <= 1) return std::nullopt;
    long long a = 0;
    for (const MethodView& m : cls.methods) a += static_cast<long long>(m.accessed_attributes.size());
    // Both operands are exact integers, so the quotient is correctly rounded.
    return static_cast<double>(a - k * l) / static_cast<double>(l - k * l);
}

std::optional<double> nhd(const SourceClass& cls) {
    const long long k = static_cast<long long>(cls.methods.size());
    if (k < 2) return std::nullopt;
    std::map<std::string, long long> methods_per_type;
    for (const MethodView& m : cls.methods) {
        const std::set<std::string> distinct(m.parameter_types.begin(), m.parameter_types.end());
        for (const std::string& type : distinct) ++methods_per_type[type];
    }
    const long long l = static_cast<long long>(methods_per_type.size());
    if (l == 0) return std::nullopt;
    long long sum = 0;
    for (const auto& [type, x] : methods_per_type) sum += x * (k - x);
    const long long denom = l * k * (k - 1);
    return static_cast<double>(denom - 2 * sum) / static_cast<double>(denom);
}

int method_cc(const MethodView& method) {
    const DecisionProfile& p = method.decision_profile;
    return 1 + p.if_count + p.loop_count + p.case_label_count + p.catch_count + p.ternary_count +
           p.short_circuit_count;
}

int method_coco(const MethodView& method) {
    int total = 0;
    for (const CognitiveEvent& e : method.cognitive_events) {
        total += takes_nesting_penalty(e.kind) ? 1 + e.nesting_depth : 1;
    }
    return total;
}

ClassMetrics class_metrics(const SourceClass& cls) {
    ClassMetrics out;
    out.k = static_cast<int>(cls.methods.size());
    out.l_attr = static_cast<int>(cls.attributes.size());
    std::set<std::string> types;
    for (const MethodView& m : cls.methods) types.insert(m.parameter_types.begin(), m.parameter_types.end());
    out.l_types = static_cast<int>(types.size());

    out.lcom5 = lcom5(cls);
    out.nhd = nhd(cls);
    if (cls.methods.empty()) return out;

    long cc = 0;
    long coco = 0;
    long lo = 0;
    long hi = 0;
    bool first = true;
    for (const MethodView& m : cls.methods) {
        cc += method_cc(m);
        const long c = method_coco(m);
        coco += c;
        lo = first ? c : std::min(lo, c);
        hi = first ? c : std::max(hi, c);
        first = false;
    }
    out.cc_total = cc;
    out.coco_total = coco;
    out.coco_avg = static_cast<double>(coco) / static_cast<double>(out.k);
    out.coco_min = lo;
    out.coco_max = hi;
    return out;
}

}  // namespace functor_audit
