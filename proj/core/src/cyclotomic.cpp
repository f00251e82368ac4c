#include "neumaier/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "neumaier/error.hpp"

namespace neumaier::cyclo {

namespace {

i64 add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw InvariantError("cyclotomic arithmetic overflow");
  return r;
}

i64 mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvariantError("cyclotomic arithmetic overflow");
  return r;
}

i64 floor_mod(i64 a, i64 m) {
  const i64 r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<i64> compute_polynomial(unsigned n) {
  // x^n - 1 divided by every Phi_d with d | n, d < n. All divisors are monic.
  std::vector<i64> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<i64> quot(num.size() - dd, 0);
    for (std::size_t i = num.size() - 1; i + 1 > dd; --i) {
      const i64 c = num[i];
      if (c == 0) continue;
      quot[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] = add(num[i - dd + j], -mul(c, den[j]));
      if (i == dd) break;
    }
    num = std::move(quot);
  }
  return num;
}

}  // namespace

const std::vector<i64>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw InputError("cyclotomic_polynomial: n must be positive");
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<std::vector<i64>>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto poly = std::make_unique<std::vector<i64>>(compute_polynomial(n));
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(n, std::move(poly));
  return *it->second;
}

CyclotomicInt::CyclotomicInt(unsigned n) : n_(n), c_(n, 0) {
  if (n == 0) throw InputError("CyclotomicInt: order must be positive");
}

CyclotomicInt CyclotomicInt::from_int(unsigned n, i64 value) {
  CyclotomicInt z(n);
  z.c_[0] = value;
  return z;
}

CyclotomicInt CyclotomicInt::root(unsigned n, i64 k) {
  CyclotomicInt z(n);
  z.c_[static_cast<std::size_t>(floor_mod(k, n))] = 1;
  z.reduce();
  return z;
}

CyclotomicInt CyclotomicInt::from_coeffs(unsigned n, std::span<const i64> coeffs) {
  CyclotomicInt z(n);
  for (std::size_t j = 0; j < coeffs.size(); ++j) z.c_[j % n] = add(z.c_[j % n], coeffs[j]);
  z.reduce();
  return z;
}

void CyclotomicInt::reduce() {
  const auto& phi = cyclotomic_polynomial(n_);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t d = n_; d-- > deg;) {
    const i64 c = c_[d];
    if (c == 0) continue;
    // Subtract c * zeta^(d-deg) * Phi_n, which is zero in Z[zeta_n].
    for (std::size_t j = 0; j <= deg; ++j) c_[d - deg + j] = add(c_[d - deg + j], -mul(c, phi[j]));
  }
}

void CyclotomicInt::check_same(const CyclotomicInt& o) const {
  if (n_ != o.n_) throw InputError("CyclotomicInt: mismatched orders");
}

CyclotomicInt CyclotomicInt::operator+(const CyclotomicInt& o) const {
  CyclotomicInt r = *this;
  r += o;
  return r;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  check_same(o);
  for (unsigned j = 0; j < n_; ++j) c_[j] = add(c_[j], o.c_[j]);
  return *this;
}

CyclotomicInt CyclotomicInt::operator-() const { return *this * -1; }

CyclotomicInt CyclotomicInt::operator-(const CyclotomicInt& o) const { return *this + (-o); }

CyclotomicInt CyclotomicInt::operator*(i64 k) const {
  CyclotomicInt r = *this;
  for (auto& c : r.c_) c = mul(c, k);
  return r;
}

CyclotomicInt CyclotomicInt::operator*(const CyclotomicInt& o) const {
  check_same(o);
  CyclotomicInt r(n_);
  for (unsigned i = 0; i < n_; ++i) {
    if (c_[i] == 0) continue;
    for (unsigned j = 0; j < n_; ++j) {
      if (o.c_[j] == 0) continue;
      const unsigned k = (i + j) % n_;
      r.c_[k] = add(r.c_[k], mul(c_[i], o.c_[j]));
    }
  }
  r.reduce();
  return r;
}

CyclotomicInt CyclotomicInt::conj() const {
  CyclotomicInt r(n_);
  for (unsigned j = 0; j < n_; ++j) r.c_[(n_ - j) % n_] = c_[j];
  r.reduce();
  return r;
}

std::optional<i64> CyclotomicInt::as_integer() const {
  for (unsigned j = 1; j < n_; ++j) {
    if (c_[j] != 0) return std::nullopt;
  }
  return c_[0];
}

bool CyclotomicInt::is_zero() const {
  for (i64 c : c_) {
    if (c != 0) return false;
  }
  return true;
}

std::string CyclotomicInt::to_string() const {
  std::string out;
  for (unsigned j = 0; j < n_; ++j) {
    const i64 c = c_[j];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const i64 mag = c < 0 ? -c : c;
    if (j == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += j == 1 ? "z" : "z^" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

}  // namespace neumaier::cyclo
