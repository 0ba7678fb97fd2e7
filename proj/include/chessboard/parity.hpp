#pragma once

#include <string>
#include <vector>

#include "chessboard/predicates.hpp"

namespace chessboard {

// Stirling number of the second kind via the standard recurrence.
BigInt stirling2(int m, int k);

// S(m,k) mod 2 through the binomial congruence
// S(m,k) == C(m - ceil((k+1)/2), floor((k-1)/2)) (mod 2); requires m >= k >= 1.
int stirling2_parity(int m, int k);

// C(n, r) mod 2 by the base-2 digit rule.
int binomial_parity(long long n, long long r);

BigInt binomial(int n, int r);
BigInt multinomial(int M, const std::vector<int>& parts);

// Odd exactly when the parts share no binary digit (addition has no carries).
int multinomial_parity(const std::vector<int>& parts);

// One constrained-direction family as seen by the counting formula.
struct InstanceSignature {
  int d = 0;
  std::vector<std::pair<std::string, int>> entries;  // (subspace token, k)
  std::vector<int> ms;                               // m_i = l_i + k_i - 1

  static InstanceSignature from_specs(int d, const std::vector<FamilySpec>& specs);
  int M() const;
};

BigInt automorphism_group_order(const InstanceSignature& sig);

struct ParityReport {
  BigInt N;
  int N_mod2 = 0;
  BigInt multinomial_value;
  std::vector<BigInt> stirling_factors;
  BigInt group_order;
};

ParityReport compute_N(const InstanceSignature& sig);

// grid[di][ki] = parity of S((di+1)+(ki+1)-1, ki+1) for 1-based d,k.
std::vector<std::vector<int>> takahashi_table(int d_max, int k_max);

}  // namespace chessboard
