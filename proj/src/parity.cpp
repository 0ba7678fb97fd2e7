#include "chessboard/parity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace chessboard {

BigInt stirling2(int m, int k) {
  if (m < 0 || k < 0) throw std::invalid_argument("stirling2 needs m,k >= 0");
  if (k > m) return 0;
  if (m == 0) return k == 0 ? 1 : 0;
  if (k == 0) return 0;
  std::vector<BigInt> row(k + 1, BigInt(0));
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= m; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

int binomial_parity(long long n, long long r) {
  if (r < 0 || n < 0 || r > n) return 0;
  return ((n & r) == r) ? 1 : 0;
}

int stirling2_parity(int m, int k) {
  if (!(m >= k && k >= 1))
    throw std::invalid_argument("stirling2_parity needs m >= k >= 1");
  long long top = m - (k + 2) / 2;  // m - ceil((k+1)/2)
  long long bot = (k - 1) / 2;
  return binomial_parity(top, bot);
}

BigInt binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, r);
  return out;
}

BigInt multinomial(int M, const std::vector<int>& parts) {
  int sum = std::accumulate(parts.begin(), parts.end(), 0);
  if (sum != M) throw std::invalid_argument("multinomial parts must sum to M");
  BigInt out = 1;
  int rest = M;
  for (int p : parts) {
    out *= binomial(rest, p);
    rest -= p;
  }
  return out;
}

int multinomial_parity(const std::vector<int>& parts) {
  long long orv = 0, sum = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("negative part");
    orv |= p;
    sum += p;
  }
  return orv == sum ? 1 : 0;
}

InstanceSignature InstanceSignature::from_specs(
    int d, const std::vector<FamilySpec>& specs) {
  InstanceSignature sig;
  sig.d = d;
  for (const auto& s : specs) {
    sig.entries.emplace_back(s.L.token, s.k);
    sig.ms.push_back(s.m());
  }
  return sig;
}

int InstanceSignature::M() const {
  return std::accumulate(ms.begin(), ms.end(), 0);
}

BigInt automorphism_group_order(const InstanceSignature& sig) {
  std::map<std::pair<std::string, int>, int> mult;
  for (const auto& e : sig.entries) ++mult[e];
  BigInt order = 1;
  for (const auto& [key, c] : mult) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), c);
    order *= f;
  }
  return order;
}

ParityReport compute_N(const InstanceSignature& sig) {
  ParityReport rep;
  rep.multinomial_value = multinomial(sig.M(), sig.ms);
  BigInt prod = rep.multinomial_value;
  for (size_t i = 0; i < sig.entries.size(); ++i) {
    BigInt s = stirling2(sig.ms[i], sig.entries[i].second);
    rep.stirling_factors.push_back(s);
    prod *= s;
  }
  rep.group_order = automorphism_group_order(sig);
  BigInt q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), prod.get_mpz_t(),
              rep.group_order.get_mpz_t());
  if (r != 0)
    throw std::logic_error(
        "group order does not divide the arrangement count; "
        "subspace tokens are not canonical");
  rep.N = q;
  rep.N_mod2 = mpz_odd_p(rep.N.get_mpz_t()) ? 1 : 0;
  return rep;
}

std::vector<std::vector<int>> takahashi_table(int d_max, int k_max) {
  if (d_max < 1 || k_max < 1) throw std::invalid_argument("table needs >= 1");
  std::vector<std::vector<int>> grid(d_max, std::vector<int>(k_max, 0));
  for (int d = 1; d <= d_max; ++d)
    for (int k = 1; k <= k_max; ++k)
      grid[d - 1][k - 1] = stirling2_parity(d + k - 1, k);
  return grid;
}

}  // namespace chessboard
