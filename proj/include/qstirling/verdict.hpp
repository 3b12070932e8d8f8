#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "qstirling/rational.hpp"

namespace qstirling {

enum class Verdict { verified, failed, inconclusive };

std::string verdict_name(Verdict v);

struct Counterexample {
  long long n = 0;
  long long k = 0;  // 0 when the identity has no second index
  std::string lhs;  // exact rational strings
  std::string rhs;
};

/**
 * Outcome record for one claimed-identity check. FAILED verdicts always carry
 * a counterexample with lhs != rhs, exact. VERIFIED means exact equality (or
 * the declared bound check, for truncated-series identities) over the whole
 * declared range at every listed q sample.
 */
struct IdentityVerdict {
  std::string identity_id;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  int range = 0;
  std::vector<std::string> q_samples;
  Verdict verdict = Verdict::inconclusive;
  std::optional<Counterexample> counterexample;

  bool expected_verified() const {
    return params.contains("expected") && params["expected"] == "VERIFIED";
  }
};

IdentityVerdict make_verified(std::string id, nlohmann::ordered_json params, int range,
                              std::vector<std::string> q_samples = {});
IdentityVerdict make_failed(std::string id, nlohmann::ordered_json params, int range,
                            Counterexample ce, std::vector<std::string> q_samples = {});

// Stable machine-readable ledger (JSON array, 2-space indent, trailing newline).
// Identical verdict sequences yield byte-identical output.
nlohmann::ordered_json ledger_json(std::span<const IdentityVerdict> verdicts);
std::string export_ledger(std::span<const IdentityVerdict> verdicts);

// Human-readable one-line-per-verdict summary table.
std::string ledger_summary(std::span<const IdentityVerdict> verdicts);

}  // namespace qstirling
