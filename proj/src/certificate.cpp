#include "conevanish/certificate.hpp"

#include <iomanip>
#include <sstream>

namespace conevanish {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
    }
    return "";
}

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string Certificate::inputs_hash() const {
    std::string all = claim_id + "|" + field.name();
    for (const auto& s : inputs) all += "|" + s;
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(all);
    return out.str();
}

std::string Certificate::verdict() const {
    bool any_fail = false, any_hyp_fail = false;
    for (const auto& c : checks) {
        if (c.status == CheckStatus::fail) {
            if (c.hypothesis)
                any_hyp_fail = true;
            else
                any_fail = true;
        }
    }
    if (any_fail) return "fail";
    if (any_hyp_fail) return "inconclusive";
    return "pass";
}

nlohmann::json Certificate::to_json() const {
    nlohmann::json j;
    j["claim_id"] = claim_id;
    j["inputs"] = inputs;
    j["inputs_hash"] = inputs_hash();
    j["field"] = field.name();
    nlohmann::json cl = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json cj;
        cj["name"] = c.name;
        cj["status"] = to_string(c.status);
        cj["witness"] = c.witness.is_null() ? nlohmann::json::object() : c.witness;
        if (c.hypothesis) cj["hypothesis"] = true;
        if (!c.reason.empty()) cj["reason"] = c.reason;
        cl.push_back(cj);
    }
    j["checks"] = cl;
    j["assumptions_unverified"] = assumptions_unverified;
    j["verdict"] = verdict();
    j["stats"] = stats.is_null() ? nlohmann::json::object() : stats;
    return j;
}

std::string Certificate::to_text() const {
    std::ostringstream out;
    out << "certificate " << claim_id << " [" << field.name() << "] verdict: " << verdict() << "\n";
    for (const auto& c : checks) {
        out << "  " << (c.status == CheckStatus::pass ? "PASS" :
                        c.status == CheckStatus::fail ? "FAIL" : "SKIP")
            << "  " << c.name;
        if (c.hypothesis) out << " (hypothesis)";
        if (!c.reason.empty()) out << "  -- " << c.reason;
        out << "\n";
    }
    for (const auto& a : assumptions_unverified) out << "  unverified: " << a << "\n";
    return out.str();
}

void Certificate::add_pass(const std::string& name, nlohmann::json witness, bool hyp) {
    checks.push_back({name, CheckStatus::pass, std::move(witness), hyp, ""});
}

void Certificate::add_fail(const std::string& name, nlohmann::json witness, bool hyp) {
    checks.push_back({name, CheckStatus::fail, std::move(witness), hyp, ""});
}

void Certificate::add_check(const std::string& name, bool ok, nlohmann::json witness, bool hyp) {
    checks.push_back({name, ok ? CheckStatus::pass : CheckStatus::fail, std::move(witness), hyp, ""});
}

void Certificate::add_skipped(const std::string& name, const std::string& reason) {
    checks.push_back({name, CheckStatus::skipped, nlohmann::json::object(), false, reason});
}

} // namespace conevanish
