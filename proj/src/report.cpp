#include "igrr/report.hpp"

#include <sstream>

namespace igrr {

VerificationReport VerificationReport::compare(std::string identity, std::string instance,
                                               const GradedPolynomial& lhs, const GradedPolynomial& rhs) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.instance = std::move(instance);
    r.lhs = lhs.to_canonical();
    r.rhs = rhs.to_canonical();
    r.pass = r.lhs == r.rhs;
    if (!r.pass) r.discrepancy = first_difference(lhs, rhs);
    return r;
}

VerificationReport VerificationReport::compare_parts(std::string identity, std::string instance,
                                                     const std::vector<Part>& parts) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.instance = std::move(instance);
    r.pass = true;
    for (const auto& part : parts) {
        const std::string l = part.lhs.to_canonical();
        const std::string rr = part.rhs.to_canonical();
        r.lhs += "# " + part.label + "\n" + l;
        r.rhs += "# " + part.label + "\n" + rr;
        if (l != rr && r.pass) {
            r.pass = false;
            r.discrepancy = part.label + ": " + first_difference(part.lhs, part.rhs);
        }
    }
    return r;
}

VerificationReport VerificationReport::verdict(std::string identity, std::string instance, bool pass,
                                               std::string lhs, std::string rhs, std::string discrepancy) {
    VerificationReport r;
    r.identity = std::move(identity);
    r.instance = std::move(instance);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.pass = pass;
    r.discrepancy = std::move(discrepancy);
    return r;
}

nlohmann::ordered_json VerificationReport::to_json(bool with_timing) const {
    nlohmann::ordered_json j;
    j["schema"] = "1";
    j["identity"] = identity;
    j["instance"] = instance;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["verdict"] = pass ? "pass" : "fail";
    j["discrepancy"] = discrepancy.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(discrepancy);
    if (!notes.empty()) j["notes"] = notes;
    if (with_timing && millis) j["millis"] = *millis;
    return j;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << (pass ? "PASS " : "FAIL ") << identity << " [" << instance << "]";
    if (!pass && !discrepancy.empty()) os << "  " << discrepancy;
    for (const auto& note : notes) os << "\n    note: " << note;
    return os.str();
}

std::string reports_to_jsonl(const std::vector<VerificationReport>& reports, bool with_timing) {
    std::string out;
    for (const auto& r : reports) out += r.to_json(with_timing).dump() + "\n";
    return out;
}

}  // namespace igrr
