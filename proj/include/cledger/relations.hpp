#pragma once

#include "cledger/expression.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace cledger {

enum class DimensionPolicy { strict, waived };

/// One declarative order-of-magnitude check: two expressions, a decade
/// tolerance and a dimension policy.
struct Relation {
    std::string id;
    std::string description;
    ExprPtr lhs;
    ExprPtr rhs;
    std::string lhs_src;
    std::string rhs_src;
    double tolerance_decades = 1.0;
    DimensionPolicy policy = DimensionPolicy::strict;
    std::string waiver_note;     // required iff policy == waived
    std::string reference;
};

struct CheckResult {
    std::string id;
    std::optional<Quantity> lhs_value;
    std::optional<Quantity> rhs_value;
    double gap_decades = 0.0;    // NaN when evaluation failed
    double tolerance_decades = 0.0;
    bool dimension_ok = false;
    bool waived = false;
    bool passed = false;
    std::string notes;
};

/// Aggregated pass/fail record of a registry run.
struct Report {
    std::string timestamp;               // ISO 8601 UTC
    std::string constants_fingerprint;
    std::vector<CheckResult> results;
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
};

/// The 21 built-in relations, in fixed order. The returned registry is
/// immutable; copies may be edited for what-if runs.
const std::vector<Relation>& builtin_registry();

/// Evaluates both sides, applies the dimension policy and tolerance.
/// Evaluation errors become a failed result with notes, never an exception.
CheckResult check_relation(const Relation& relation, const ConstantsTable& table);

/// Runs the given relations in order; filter selects ids, overrides remaps
/// tolerances. Unknown ids in either throw.
Report run_relations(const std::vector<Relation>& registry, const ConstantsTable& table,
                     const std::vector<std::string>* filter = nullptr,
                     const std::map<std::string, double>* tolerance_overrides = nullptr);

/// run_relations over the built-in registry.
Report run_registry(const ConstantsTable& table,
                    const std::vector<std::string>* filter = nullptr,
                    const std::map<std::string, double>* tolerance_overrides = nullptr);

/// Parses a user relation file:
///   `id: <lhs-expr> ~ <rhs-expr> ; tol=<real> ; dim=<strict|waived> ; ref="..."`
std::vector<Relation> parse_relations(std::string_view text);

std::string render_text(const Report& report);
std::string render_csv(const Report& report);
nlohmann::json render_json(const Report& report);

} // namespace cledger
