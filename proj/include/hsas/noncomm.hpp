#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hsas/grid.hpp"

namespace hsas {

/// One generalized-transform candidate: every exponential factor sits left or
/// right of the integrand (bit set in *_right_mask = right side), ascending
/// axis order preserved within each side; forward and inverse placements are
/// independent.
struct OrderingCandidate {
  int dim = 0;
  std::uint32_t fwd_right_mask = 0;
  std::uint32_t inv_right_mask = 0;

  std::string encode() const;  // e.g. "fwd=LR inv=LR"
};

/// One bracket family: the projection indexed by `upper` reconstructed
/// against the harmonic indexed by `lower` lands in the component blade
/// upper XOR lower with some sign; `want` is the sign the commutative
/// construction requires there.
struct BracketSign {
  std::uint32_t upper = 0;
  std::uint32_t lower = 0;
  std::uint32_t component = 0;
  int got = 0;
  int want = 0;
  bool ok() const { return got == want; }
};

/// Complete sign bookkeeping for one candidate: every (projection, harmonic)
/// pair. Degree-2 terms feed back into lower-degree components (e_a e_a e_b
/// collapses to a signed e_b), so restricting the table to pure degree-2
/// blades would accept candidates that fail on a degree-1 component.
struct SignTable {
  std::vector<BracketSign> entries;
  bool consistent() const;
  int got(std::uint32_t upper, std::uint32_t lower) const;
};

SignTable candidate_signs(const OrderingCandidate& cand, const AlgebraSpec& spec);

struct CandidateResult {
  OrderingCandidate candidate;
  SignTable signs;
  bool consistent = false;
  std::string first_mismatch;  // empty when consistent
};

struct OrderingReport {
  int dim = 0;
  int swap_sign = 0;
  std::vector<CandidateResult> results;
  std::size_t consistent_count = 0;

  bool has_candidate(std::uint32_t fwd_right, std::uint32_t inv_right, bool consistent) const;
  std::string to_text() const;  // one line per candidate: encoding, verdict, first mismatch
};

/// Enumerates every placement candidate for the given algebra conventions and
/// checks its degree <= 2 bracket signs against the sign rule of the
/// commutative construction. Supported for 2 <= d <= 4 and elliptic squares.
OrderingReport ordering_search(int d, const AlgebraSpec& spec);

/// Two-sided (symmetric) quaternion transform pipeline for d = 2: forward,
/// positive-frequency restriction, inverse, with quaternion components
/// (1, i, j, k) mapped onto blades (e_00, e_10, e_01, e_11).
AnalyticGrid quaternion_analytic_2d(const GridSignal& g);

}  // namespace hsas
