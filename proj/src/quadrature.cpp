#include "stokesmini/quadrature.hpp"

#include <string>

namespace stokesmini {

namespace {

std::vector<QuadratureRule> load_rules() {
    std::vector<QuadratureRule> rules;
    rules.reserve(detail::kTriangleRuleCount);
    for (int r = 0; r < detail::kTriangleRuleCount; ++r) {
        const auto& raw = detail::kTriangleRules[r];
        QuadratureRule rule;
        rule.degree = raw.degree;
        rule.points.reserve(raw.npoints);
        rule.weights.reserve(raw.npoints);
        for (int i = 0; i < raw.npoints; ++i) {
            rule.points.push_back({raw.pts[i][0], raw.pts[i][1], raw.pts[i][2]});
            rule.weights.push_back(raw.wts[i]);
        }
        rules.push_back(std::move(rule));
    }
    return rules;
}

}  // namespace

const QuadratureRule& rule_for_degree(int d) {
    if (d < 1 || d > 20) {
        throw UnsupportedDegreeError("rule_for_degree: degree " + std::to_string(d) +
                                     " outside supported range 1..20");
    }
    static const std::vector<QuadratureRule> rules = load_rules();
    // Tables are stored by increasing degree; take the first that qualifies.
    for (const auto& rule : rules) {
        if (rule.degree >= d) return rule;
    }
    throw UnsupportedDegreeError("rule_for_degree: no tabulated rule of degree >= " +
                                 std::to_string(d));
}

int select_degree(const IntegrandMeta& meta) {
    if (!meta.polynomial) return 20;
    if (meta.degree > 20) {
        throw UnsupportedDegreeError("select_degree: polynomial degree " +
                                     std::to_string(meta.degree) + " exceeds 20");
    }
    return std::max(meta.degree, 1);
}

}  // namespace stokesmini
