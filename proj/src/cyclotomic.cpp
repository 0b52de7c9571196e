#include "dparity/cyclotomic.hpp"

#include <stdexcept>

namespace dparity {

namespace {

std::uint64_t prime_of(std::uint64_t m) {
  if (m == 1) return 1;
  for (std::uint64_t q = 2; q * q <= m; ++q)
    if (m % q == 0) return q;
  return m;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

void require_same(std::uint64_t a, std::uint64_t b) {
  if (a != b) throw std::invalid_argument("cyclotomic elements from different fields");
}

}  // namespace

std::uint64_t cyclotomic_degree(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("cyclotomic order must be positive");
  if (m == 1) return 1;
  const std::uint64_t p = prime_of(m);
  std::uint64_t r = m;
  while (r % p == 0) r /= p;
  if (r != 1 || p == 2) throw std::invalid_argument("cyclotomic order must be 1 or an odd prime power");
  return m - m / p;
}

Cyclotomic::Cyclotomic(std::uint64_t m) : m_(m), c_(cyclotomic_degree(m), 0) {}

Cyclotomic Cyclotomic::integer(std::uint64_t m, std::int64_t value) {
  Cyclotomic z(m);
  z.c_[0] = value;
  return z;
}

Cyclotomic Cyclotomic::zeta_power(std::uint64_t m, std::int64_t k) {
  std::vector<std::int64_t> full(m, 0);
  const auto sm = static_cast<std::int64_t>(m);
  full[static_cast<std::size_t>(((k % sm) + sm) % sm)] = 1;
  Cyclotomic z(m);
  z.c_ = reduce(m, std::move(full));
  return z;
}

std::vector<std::int64_t> Cyclotomic::reduce(std::uint64_t m, std::vector<std::int64_t> full) {
  const std::uint64_t phi = cyclotomic_degree(m);
  if (m == 1) return {full[0]};
  const std::uint64_t step = m / prime_of(m);
  // zeta^(phi + j) = -sum_{a < p-1} zeta^(a*step + j) for j < step.
  for (std::uint64_t i = phi; i < m; ++i) {
    const std::int64_t v = full[i];
    if (v == 0) continue;
    const std::uint64_t j = i - phi;
    for (std::uint64_t idx = j; idx < phi; idx += step) full[idx] = checked_add(full[idx], -v);
  }
  full.resize(phi);
  return full;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  require_same(m_, o.m_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  require_same(m_, o.m_);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], checked_mul(o.c_[i], -1));
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(std::int64_t k) {
  for (auto& v : c_) v = checked_mul(v, k);
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  require_same(a.m_, b.m_);
  std::vector<std::int64_t> full(a.m_, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      const std::size_t k = (i + j) % a.m_;
      full[k] = checked_add(full[k], checked_mul(a.c_[i], b.c_[j]));
    }
  }
  Cyclotomic r(a.m_);
  r.c_ = Cyclotomic::reduce(a.m_, std::move(full));
  return r;
}

Cyclotomic Cyclotomic::conj() const {
  std::vector<std::int64_t> full(m_, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) full[(m_ - i) % m_] = c_[i];
  Cyclotomic r(m_);
  r.c_ = reduce(m_, std::move(full));
  return r;
}

Cyclotomic Cyclotomic::embed(std::uint64_t big_m) const {
  if (big_m % m_ != 0) throw std::invalid_argument("embed: order does not divide target");
  const std::uint64_t step = big_m / m_;
  Cyclotomic r(big_m);
  // Basis exponents i < phi(m) map to i*step < phi(M), already reduced.
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * step] = c_[i];
  return r;
}

Cyclotomic Cyclotomic::descend(std::uint64_t small_m) const {
  if (m_ % small_m != 0) throw std::invalid_argument("descend: target order does not divide source");
  const std::uint64_t step = m_ / small_m;
  Cyclotomic r(small_m);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (i % step != 0 || i / step >= r.c_.size()) throw std::domain_error("element is not in the requested subfield");
    r.c_[i / step] = c_[i];
  }
  return r;
}

Cyclotomic Cyclotomic::divided_by(std::int64_t k) const {
  if (k == 0) throw std::domain_error("division by zero");
  Cyclotomic r = *this;
  for (auto& v : r.c_) {
    if (v % k != 0) throw std::domain_error("inexact cyclotomic division");
    v /= k;
  }
  return r;
}

bool Cyclotomic::is_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::int64_t Cyclotomic::integer_value() const {
  if (!is_integer()) throw std::domain_error("cyclotomic element is not a rational integer");
  return c_[0];
}

std::string Cyclotomic::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += c_[i] > 0 ? " + " : " - ";
    else if (c_[i] < 0) out += "-";
    const auto mag = c_[i] < 0 ? -c_[i] : c_[i];
    if (i == 0) out += std::to_string(mag);
    else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += "z^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace dparity
