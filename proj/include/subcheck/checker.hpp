#pragma once

#include "subcheck/preference_list.hpp"
#include "subcheck/sensitivity.hpp"
#include "subcheck/verdict.hpp"

namespace subcheck {

// Two-phase substitutability test, O(|U|^2 n^2) overall.
//
// Phase 1 fuses, in one loop over ordered member pairs: the coherence abort,
// the per-member subset counts d, and the sensitivity table.
//
// Phase 2 scans ordered pairs (X, Y), X preceding Y, outer rank ascending
// then inner rank ascending, and declares (X, Y) a witness when
//   (i)  X is insensitive to every y in Y - X, and
//   (ii) Y is insensitive to some x in X - Y (smallest such index certifies).
// The scan order guarantees no witness with an earlier first component
// exists when a pair is declared, which is what makes (i) equivalent to
// f(X u Y) = X. Condition (ii) mirrors the witness definition, which demands
// f(Y u {x}) = Y; see the polarity regression tests for the discriminating
// fixture that rules out the opposite reading.
//
// In figure1 mode an incomplete list short-circuits to NotSubstitutable with
// the incompleteness certificate and no witness (sound: substitutable lists
// are complete). In witness mode incompleteness is recorded and the scan
// still runs, so every negative verdict carries a witness.
Verdict find_witness_fast(const PreferenceList& list, CheckerMode mode = CheckerMode::witness);

// Baseline of running time O(n^3 |U| + n^2 |U|^2): tabulates, per member Y
// and element x, whether f(Y u {x}) = Y by direct list scans, then tests
// every ordered pair (X, Y) for f(X u Y) = X by direct evaluation. Scans
// pairs in the same order and certifies with the same smallest x as the
// fast checker: verdicts and witnesses match exactly, which is the
// differential-testing contract between the two.
Verdict find_witness_naive(const PreferenceList& list);

// Checks the witness definition by direct evaluation only, independently of
// the sensitivity machinery: ranks in range, x_rank < y_rank,
// f(X u Y) = X, x in X - Y, and f(Y u {x}) = Y. False on any failed clause.
bool verify_witness(const PreferenceList& list, const Witness& w);

// The violation a witness induces: A = Y u {x}, B = X u Y, with
// x in (f(B) & A) - f(A). Throws std::invalid_argument on an invalid
// witness and std::logic_error if the constructed pair fails its
// postcondition.
Violation witness_to_violation(const PreferenceList& list, const Witness& w);

// Checks the violation definition directly: A subset of B and
// x in (f(B) & A) - f(A).
bool verify_violation(const PreferenceList& list, const Violation& v);

}  // namespace subcheck
