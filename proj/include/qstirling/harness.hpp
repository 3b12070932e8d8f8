#pragma once

#include <span>
#include <string>
#include <vector>

#include "qstirling/psi.hpp"
#include "qstirling/rational.hpp"
#include "qstirling/verdict.hpp"

namespace qstirling {

// Registered suite ids, in the deterministic order run_all_suites uses.
std::vector<std::string> registered_suites();

/**
 * Runs one suite against the given range and q samples and returns its
 * verdicts. Suites over ambiguous printed formulas emit one verdict per
 * reading and per q (with a q = 1 instance appended when 1 is not among the
 * samples). Unknown ids throw std::invalid_argument with the full suite list.
 * Identical inputs produce identical verdict sequences.
 */
std::vector<IdentityVerdict> run_suite(const std::string& suite_id, int max_n,
                                       std::span<const Rational> q_samples);

std::vector<IdentityVerdict> run_all_suites(int max_n, std::span<const Rational> q_samples);

// Registry completeness: which suites adjudicate a given numbered equation
// (1..23) or exercise (1..13). Empty means the item is out of scope and must
// appear in out_of_scope_entries() instead.
std::vector<std::string> suites_for_equation(int eq);
std::vector<std::string> suites_for_exercise(int ex);

struct OutOfScopeEntry {
  const char* id;
  const char* note;
};
std::span<const OutOfScopeEntry> out_of_scope_entries();

// The fixed pseudorandom distinct custom psi sequence used by the psi-family
// suites (deterministic across runs).
PsiSequence harness_custom_psi();

}  // namespace qstirling
