#pragma once

#include "rainbow/coloring.hpp"

namespace rainbow {

/// Constructive rainbow-2k-cycle finder for K_{k,n} with n >= 5k - 6.
///
/// Grows a multicolored path with both endpoints in A one (b, a) hop at a
/// time; a counting bound on the blocked B-vertices guarantees an extension
/// exists at every length t < k, and a final bound supplies a closing vertex.
/// Deterministic: extensions take the smallest usable indices. Always
/// succeeds under the precondition; throws PreconditionViolated otherwise
/// (n < 5k - 6 or m != k) rather than attempting a heuristic search.
CycleCertificate constructive_find(const EdgeColoring& coloring, int k);

} // namespace rainbow
