#ifndef CONEVANISH_CERTIFICATE_HPP
#define CONEVANISH_CERTIFICATE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "conevanish/field.hpp"

namespace conevanish {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::skipped;
    nlohmann::json witness;
    bool hypothesis = false; // failed hypothesis demotes the verdict to
                             // "inconclusive" instead of "fail"
    std::string reason;      // set when skipped
};

// Structured verification report for one claim. Byte-deterministic: identical
// input and field produce identical JSON, so no wall-clock data ever lands in
// stats.
struct Certificate {
    std::string claim_id; // prop_3_2 | lemma_3_6 | cor_gorenstein | example_e1
    std::vector<std::string> inputs; // canonical serialization of the instance
    Field field = Field::rationals();
    std::vector<Check> checks;
    std::vector<std::string> assumptions_unverified;
    nlohmann::json stats;

    std::string inputs_hash() const;
    // pass: every non-skipped check passes; inconclusive: only hypothesis
    // checks fail; fail otherwise
    std::string verdict() const;

    nlohmann::json to_json() const;
    std::string to_text() const;

    void add_pass(const std::string& name, nlohmann::json witness = {}, bool hyp = false);
    void add_fail(const std::string& name, nlohmann::json witness = {}, bool hyp = false);
    void add_check(const std::string& name, bool ok, nlohmann::json witness = {}, bool hyp = false);
    void add_skipped(const std::string& name, const std::string& reason);
};

std::uint64_t fnv1a64(const std::string& data);

} // namespace conevanish

#endif
