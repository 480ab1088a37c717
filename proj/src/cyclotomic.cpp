#include "charprod/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

#include "charprod/errors.hpp"

namespace charprod {

namespace {

// Factor n as p^a when possible.
bool prime_power(std::uint32_t n, std::uint32_t& p, std::uint32_t& a) {
  if (n < 2) return false;
  std::uint32_t q = 2;
  while (q * q <= n && n % q != 0) ++q;
  if (n % q != 0) q = n;  // n itself is prime
  std::uint32_t m = n;
  a = 0;
  while (m % q == 0) {
    m /= q;
    ++a;
  }
  p = q;
  return m == 1;
}

// Canonical images of every power zeta_n^e, 0 <= e < n.
struct Basis {
  std::uint32_t n = 1;
  std::uint32_t phi = 1;
  std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> images;
};

std::unique_ptr<Basis> build_basis(std::uint32_t n) {
  auto b = std::make_unique<Basis>();
  b->n = n;
  b->phi = euler_phi(n);
  b->images.resize(n);
  if (n == 1) {
    b->images[0] = {{0, 1}};
    return b;
  }
  std::uint32_t p = 0;
  std::uint32_t a = 0;
  if (prime_power(n, p, a)) {
    // Phi_{p^a}(x) = sum_{i<p} x^(i p^(a-1)), so for e = phi + u with
    // u < p^(a-1): zeta^e = -sum_{i<p-1} zeta^(u + i p^(a-1)).
    const std::uint32_t block = n / p;
    for (std::uint32_t e = 0; e < n; ++e) {
      if (e < b->phi) {
        b->images[e] = {{e, 1}};
      } else {
        const std::uint32_t u = e - b->phi;
        for (std::uint32_t i = 0; i + 1 < p; ++i) b->images[e].push_back({u + i * block, -1});
      }
    }
    return b;
  }
  // General conductor: multiply by x and reduce with x^phi = -sum_j c_j x^j.
  const auto poly = cyclotomic_polynomial(n);
  std::vector<std::int64_t> cur(b->phi, 0);
  cur[0] = 1;
  for (std::uint32_t e = 0; e < n; ++e) {
    for (std::uint32_t j = 0; j < b->phi; ++j)
      if (cur[j] != 0) b->images[e].push_back({j, cur[j]});
    const std::int64_t carry = cur[b->phi - 1];
    for (std::uint32_t j = b->phi - 1; j > 0; --j) cur[j] = cur[j - 1] - carry * poly[j];
    cur[0] = -carry * poly[0];
  }
  return b;
}

const Basis& basis_for(std::uint32_t n) {
  thread_local const Basis* last = nullptr;
  if (last != nullptr && last->n == n) return *last;
  static std::mutex mutex;
  static std::map<std::uint32_t, std::unique_ptr<Basis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = build_basis(n);
  last = slot.get();
  return *last;
}

std::uint32_t checked_lcm(std::uint32_t a, std::uint32_t b) {
  const std::uint64_t l = std::lcm<std::uint64_t>(a, b);
  if (l > (1u << 24)) throw ConstraintViolation("cyclotomic conductor too large: " + std::to_string(l));
  return static_cast<std::uint32_t>(l);
}

std::uint32_t reduce_exponent(std::int64_t k, std::uint32_t n) {
  const std::int64_t m = static_cast<std::int64_t>(n);
  return static_cast<std::uint32_t>(((k % m) + m) % m);
}

}  // namespace

std::uint32_t euler_phi(std::uint32_t n) {
  if (n == 0) throw ConstraintViolation("euler_phi(0)");
  std::uint32_t result = n;
  std::uint32_t m = n;
  for (std::uint32_t q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    while (m % q == 0) m /= q;
    result -= result / q;
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<std::int64_t> cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw ConstraintViolation("cyclotomic_polynomial(0)");
  static std::mutex mutex;
  static std::map<std::uint32_t, std::vector<std::int64_t>> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<std::int64_t> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto den = cyclotomic_polynomial(d);
    const std::size_t dd = den.size() - 1;
    std::vector<std::int64_t> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
      const std::int64_t c = num[i];  // den is monic
      quot[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    num = std::move(quot);
  }
  std::lock_guard lock(mutex);
  memo.emplace(n, num);
  return num;
}

CycNumber::CycNumber() : conductor_(1), coeffs_(1) {}

CycNumber::CycNumber(long value) : conductor_(1), coeffs_{Rational(value)} {}

CycNumber::CycNumber(const Rational& value) : conductor_(1), coeffs_{value} {
  coeffs_[0].canonicalize();
}

CycNumber::CycNumber(std::uint32_t n, std::vector<Rational> coeffs)
    : conductor_(n), coeffs_(std::move(coeffs)) {}

CycNumber CycNumber::root_of_unity(std::uint32_t n, std::int64_t k) {
  if (n == 0) throw ConstraintViolation("root_of_unity: conductor must be positive");
  CycNumber z(n, std::vector<Rational>(euler_phi(n)));
  z.add_root(k, 1);
  return z;
}

CycNumber CycNumber::from_powers(std::uint32_t n, const std::vector<Rational>& coeffs) {
  if (n == 0) throw ConstraintViolation("from_powers: conductor must be positive");
  CycNumber z(n, std::vector<Rational>(euler_phi(n)));
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    if (coeffs[j] != 0) z.add_root(static_cast<std::int64_t>(j), coeffs[j]);
  return z;
}

bool CycNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycNumber::is_rational() const {
  for (std::size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) return false;
  return true;
}

Rational CycNumber::to_rational() const {
  if (!is_rational()) throw NotAnInteger("value " + to_string() + " is not rational");
  return coeffs_[0];
}

void CycNumber::add_root(std::int64_t k, const Rational& c) {
  const Basis& b = basis_for(conductor_);
  for (const auto& [idx, v] : b.images[reduce_exponent(k, conductor_)]) coeffs_[idx] += c * v;
}

void CycNumber::lift_in_place(std::uint32_t n) {
  if (n == conductor_) return;
  if (n % conductor_ != 0)
    throw ConstraintViolation("cannot lift conductor " + std::to_string(conductor_) + " to " +
                              std::to_string(n));
  const std::uint32_t step = n / conductor_;
  CycNumber out(n, std::vector<Rational>(euler_phi(n)));
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) out.add_root(static_cast<std::int64_t>(j) * step, coeffs_[j]);
  *this = std::move(out);
}

CycNumber CycNumber::lifted(std::uint32_t n) const {
  CycNumber copy = *this;
  copy.lift_in_place(n);
  return copy;
}

CycNumber CycNumber::normalized() const {
  if (is_rational()) return CycNumber(coeffs_[0]);
  CycNumber out = *this;
  std::uint32_t p = 0, a = 0;
  while (prime_power(out.conductor_, p, a) && a >= 2) {
    bool descends = true;
    for (std::size_t j = 0; j < out.coeffs_.size() && descends; ++j)
      descends = j % p == 0 || out.coeffs_[j] == 0;
    if (!descends) break;
    // zeta_{n/p}^i = zeta_n^{p i}, and p i < phi(n) for i < phi(n/p).
    std::vector<Rational> down(out.coeffs_.size() / p);
    for (std::size_t i = 0; i < down.size(); ++i) down[i] = out.coeffs_[p * i];
    out = CycNumber(out.conductor_ / p, std::move(down));
  }
  return out;
}

CycNumber CycNumber::conjugate() const {
  if (conductor_ <= 2) return *this;
  CycNumber out(conductor_, std::vector<Rational>(coeffs_.size()));
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0) out.add_root(-static_cast<std::int64_t>(j), coeffs_[j]);
  return out;
}

CycNumber& CycNumber::operator+=(const CycNumber& other) {
  const std::uint32_t n = checked_lcm(conductor_, other.conductor_);
  lift_in_place(n);
  if (other.conductor_ == n) {
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += other.coeffs_[j];
  } else {
    const CycNumber o = other.lifted(n);
    for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  }
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& other) { return *this += -other; }

CycNumber& CycNumber::operator*=(const Rational& r) {
  for (auto& c : coeffs_) c *= r;
  return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& other) {
  if (other.conductor_ == 1) return *this *= other.coeffs_[0];
  if (conductor_ == 1) {
    const Rational r = coeffs_[0];
    *this = other;
    return *this *= r;
  }
  const std::uint32_t n = checked_lcm(conductor_, other.conductor_);
  const CycNumber a = lifted(n);
  const CycNumber b = other.lifted(n);
  CycNumber out(n, std::vector<Rational>(a.coeffs_.size()));
  Rational term;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      term = a.coeffs_[i] * b.coeffs_[j];
      out.add_root(static_cast<std::int64_t>(i + j), term);
    }
  }
  *this = std::move(out);
  return *this;
}

CycNumber CycNumber::operator-() const {
  CycNumber out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const std::uint32_t n = checked_lcm(a.conductor_, b.conductor_);
  return a.lifted(n).coeffs_ == b.lifted(n).coeffs_;
}

std::string CycNumber::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "z" << conductor_;
    if (j > 1) os << "^" << j;
  }
  if (first) return "0";
  return os.str();
}

std::int64_t as_rational_integer(const CycNumber& a) {
  if (!a.is_rational()) throw NotAnInteger("value " + a.to_string() + " is not a rational integer");
  const Rational& r = a.coefficients()[0];
  if (r.get_den() != 1 || !r.get_num().fits_slong_p())
    throw NotAnInteger("value " + a.to_string() + " is not a rational integer");
  return r.get_num().get_si();
}

}  // namespace charprod
