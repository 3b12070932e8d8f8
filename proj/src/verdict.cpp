#include "qstirling/verdict.hpp"

#include <sstream>
#include <stdexcept>

namespace qstirling {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::verified: return "VERIFIED";
    case Verdict::failed: return "FAILED";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  throw std::logic_error("unreachable");
}

IdentityVerdict make_verified(std::string id, nlohmann::ordered_json params, int range,
                              std::vector<std::string> q_samples) {
  IdentityVerdict v;
  v.identity_id = std::move(id);
  v.params = std::move(params);
  v.range = range;
  v.q_samples = std::move(q_samples);
  v.verdict = Verdict::verified;
  return v;
}

IdentityVerdict make_failed(std::string id, nlohmann::ordered_json params, int range,
                            Counterexample ce, std::vector<std::string> q_samples) {
  IdentityVerdict v;
  v.identity_id = std::move(id);
  v.params = std::move(params);
  v.range = range;
  v.q_samples = std::move(q_samples);
  v.verdict = Verdict::failed;
  v.counterexample = std::move(ce);
  return v;
}

nlohmann::ordered_json ledger_json(std::span<const IdentityVerdict> verdicts) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& v : verdicts) {
    nlohmann::ordered_json j;
    j["identity_id"] = v.identity_id;
    j["params"] = v.params;
    j["range"] = v.range;
    j["q_samples"] = v.q_samples;
    j["verdict"] = verdict_name(v.verdict);
    if (v.counterexample) {
      nlohmann::ordered_json ce;
      ce["n"] = v.counterexample->n;
      ce["k"] = v.counterexample->k;
      ce["lhs"] = v.counterexample->lhs;
      ce["rhs"] = v.counterexample->rhs;
      j["counterexample"] = std::move(ce);
    }
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string export_ledger(std::span<const IdentityVerdict> verdicts) {
  return ledger_json(verdicts).dump(2) + "\n";
}

std::string ledger_summary(std::span<const IdentityVerdict> verdicts) {
  std::size_t id_width = 8;
  for (const auto& v : verdicts) id_width = std::max(id_width, v.identity_id.size());
  std::ostringstream out;
  for (const auto& v : verdicts) {
    out << verdict_name(v.verdict);
    for (std::size_t i = verdict_name(v.verdict).size(); i < 13; ++i) out << ' ';
    out << v.identity_id;
    for (std::size_t i = v.identity_id.size(); i < id_width + 2; ++i) out << ' ';
    std::string desc;
    auto add = [&](const char* key, const char* label) {
      if (!v.params.contains(key)) return;
      if (!desc.empty()) desc += ' ';
      desc += label;
      const auto& val = v.params[key];
      desc += val.is_string() ? val.get<std::string>() : val.dump();
    };
    add("family", "");
    add("q", "q=");
    add("convention", "convention=");
    add("q17_factor", "q17=");
    out << desc << "  n<=" << v.range;
    if (v.counterexample)
      out << "  counterexample: n=" << v.counterexample->n << " k=" << v.counterexample->k
          << " lhs=" << v.counterexample->lhs << " rhs=" << v.counterexample->rhs;
    out << "\n";
  }
  return out.str();
}

}  // namespace qstirling
