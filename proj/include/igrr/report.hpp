#pragma once

#include "igrr/polynomial.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace igrr {

/// Pass/fail record of one identity instance. Both sides are kept in the
/// canonical polynomial text format; the verdict is byte equality.
struct VerificationReport {
    std::string identity;
    std::string instance;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    std::string discrepancy;
    std::vector<std::string> notes;
    std::optional<long> millis;

    /// Builds a report from two polynomials over the same alphabet.
    static VerificationReport compare(std::string identity, std::string instance, const GradedPolynomial& lhs,
                                      const GradedPolynomial& rhs);
    /// Multi-part comparison: each part is rendered under a "# label" line.
    struct Part {
        std::string label;
        GradedPolynomial lhs;
        GradedPolynomial rhs;
    };
    static VerificationReport compare_parts(std::string identity, std::string instance,
                                            const std::vector<Part>& parts);
    /// A check that has no polynomial sides (divisibility, errors).
    static VerificationReport verdict(std::string identity, std::string instance, bool pass, std::string lhs,
                                      std::string rhs, std::string discrepancy = {});

    nlohmann::ordered_json to_json(bool with_timing = false) const;
    std::string to_text() const;
};

/// One JSON object per line, schema-tagged, in the given order.
std::string reports_to_jsonl(const std::vector<VerificationReport>& reports, bool with_timing = false);

}  // namespace igrr
