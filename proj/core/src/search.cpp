#include "neumaier/search.hpp"

#include <algorithm>
#include <numeric>

#include "neumaier/cayley.hpp"
#include "neumaier/charsums.hpp"
#include "neumaier/error.hpp"

namespace neumaier::search {

namespace {

using arith::pow_mod;

__extension__ typedef __int128 i128;

std::vector<SearchRow> rows_for_prime(u64 p, u64 q) {
  std::vector<SearchRow> out;
  if (q % p == 0 || !admissible(p, q)) return out;
  for (u64 a : find_a(p, q)) {
    SearchRow row{q, p, a, 0, 0, {}, "direct"};
    if (auto closed = charsums::count_closed(p, q, a)) {
      row.lambda = closed->value;
      row.method = "closed:" + closed->branch;
    } else {
      row.lambda = charsums::count_direct(p, q, a);
    }
    if ((row.lambda + 2) % q != 0) continue;
    row.t = (row.lambda + 2) / q;
    const auto L = static_cast<feasibility::Int>(row.lambda);
    row.params = {static_cast<feasibility::Int>(row.t * p * q), static_cast<feasibility::Int>(p) + L, L, 1, L + 2};
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

std::optional<AdmissiblePQ> admissible(u64 p, u64 q) {
  if (p < 3 || !arith::is_prime(p)) throw InputError("admissible: p = " + std::to_string(p) + " is not an odd prime");
  if (q < 3 || q % 2 == 0) throw InputError("admissible: q must be odd and at least 3");
  if (std::gcd(p, q) != 1) throw InputError("admissible: p and q must be coprime");
  AdmissiblePQ out{p, q, arith::two_adic_valuation(p - 1), arith::factor_powers(q)};
  const u64 two_r = u64{1} << out.r;
  for (const auto& [l, e] : out.factors) {
    if ((l - 1) % two_r != 0) return std::nullopt;
  }
  return out;
}

u64 canonical_a(u64 a, u64 n) {
  a %= n;
  const u64 order = arith::multiplicative_order(a, n);
  u64 best = a;
  u64 x = 1;
  for (u64 i = 1; i <= order; ++i) {
    x = arith::mul_mod(x, a, n);
    if (std::gcd(i, order) == 1) best = std::min(best, x);
  }
  return best;
}

std::vector<u64> find_a(u64 p, u64 q) {
  if (!admissible(p, q)) return {};
  const u64 alpha = arith::smallest_generator(p);
  const u64 n = p * q;
  std::vector<u64> out;
  for (u64 beta = 1; beta < q; ++beta) {
    if (std::gcd(beta, q) != 1 || pow_mod(beta, (p - 1) / 2, q) != q - 1) continue;
    out.push_back(canonical_a(arith::crt(alpha, p, beta, q), n));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SearchResult search_triples(u64 q, u64 p_max, const Workers& workers) {
  if (q < 3 || q % 2 == 0) throw InputError("search_triples: q must be odd and at least 3");
  SearchResult result;
  if (q % 3 == 0) {
    result.note = "q is a multiple of 3: |S ∩ (S+1)| is never 1 (mod 3), so it is never -2 (mod q)";
    return result;
  }
  std::vector<u64> primes = arith::primes_up_to(p_max);
  primes.erase(std::remove(primes.begin(), primes.end(), u64{2}), primes.end());
  std::vector<std::vector<SearchRow>> slots(primes.size());
  workers.for_each_index(primes.size(), [&](std::size_t i) { slots[i] = rows_for_prime(primes[i], q); }, 4);
  for (auto& s : slots) {
    for (auto& row : s) result.rows.push_back(std::move(row));
  }
  return result;
}

bool above_general_strictness_bound(u64 p, u64 q) {
  if (q < 2) return true;
  // p - 18(q-2) - 31 >= 8 sqrt(18(q-2) + 16), squared on both sides.
  const i128 m = 18 * static_cast<i128>(q - 2);
  const i128 lhs = static_cast<i128>(p) - m - 31;
  if (lhs < 0) return false;
  return lhs * lhs >= 64 * (m + 16);
}

}  // namespace neumaier::search
