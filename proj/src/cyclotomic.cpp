/*
 * Copyright 2026 The fflab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "fflab/cyclotomic.hpp"

#include <map>
#include <mutex>

#include "fflab/detail/util.hpp"

namespace fflab {
namespace {

using detail::ck_add;
using detail::ck_mul;
using detail::ck_sub;

using IPoly = std::vector<std::int64_t>;

void itrim(IPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// exact division of integer polynomials (b monic not required; remainder must
// vanish, which holds in the cyclotomic recursion)
IPoly idiv_exact(IPoly a, const IPoly& b) {
  itrim(a);
  IPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
  while (a.size() >= b.size() && !a.empty()) {
    if (a.back() % b.back() != 0)
      fail(errc::internal, "non-exact division in cyclotomic recursion");
    std::int64_t c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = ck_sub(a[shift + i], ck_mul(c, b[i]));
    itrim(a);
  }
  if (!a.empty()) fail(errc::internal, "nonzero remainder in cyclotomic recursion");
  return q;
}

std::mutex g_phi_mutex;

const IPoly& phi_cached(std::uint32_t n);

IPoly compute_phi(std::uint32_t n) {
  if (n == 1) return {-1, 1};
  IPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  IPoly den{1};
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const IPoly& phi_d = phi_cached(d);
    IPoly next(den.size() + phi_d.size() - 1, 0);
    for (std::size_t i = 0; i < den.size(); ++i)
      for (std::size_t j = 0; j < phi_d.size(); ++j)
        next[i + j] = ck_add(next[i + j], ck_mul(den[i], phi_d[j]));
    den = std::move(next);
  }
  return idiv_exact(std::move(num), den);
}

const IPoly& phi_cached(std::uint32_t n) {
  static auto* cache = new std::map<std::uint32_t, IPoly>();
  auto it = cache->find(n);
  if (it != cache->end()) return it->second;
  IPoly phi = compute_phi(n);
  return cache->emplace(n, std::move(phi)).first->second;
}

// residue of a (length n, Z[x]/(x^n-1) vector) modulo Phi_n
IPoly reduce_mod_phi(const IPoly& a, std::uint32_t n) {
  IPoly r = a;
  itrim(r);
  const IPoly& phi = [&]() -> const IPoly& {
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    return phi_cached(n);
  }();
  const std::size_t deg = phi.size() - 1;  // phi monic
  while (r.size() > deg) {
    std::int64_t c = r.back();
    std::size_t shift = r.size() - phi.size();
    for (std::size_t i = 0; i < phi.size(); ++i)
      r[shift + i] = ck_sub(r[shift + i], ck_mul(c, phi[i]));
    itrim(r);
  }
  return r;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) fail(errc::invalid_argument, "cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  return phi_cached(n);
}

CycInt::CycInt(std::uint32_t order) : order_(order) {
  if (order == 0) fail(errc::invalid_argument, "cyclotomic order must be positive");
  c_.assign(order, 0);
}

CycInt CycInt::integer(std::uint32_t order, std::int64_t value) {
  CycInt out(order);
  out.c_[0] = value;
  return out;
}

CycInt CycInt::root(std::uint32_t order, std::uint64_t power, std::int64_t mult) {
  CycInt out(order);
  out.c_[power % order] = mult;
  return out;
}

void CycInt::add_root(std::uint64_t power, std::int64_t mult) {
  std::size_t k = power % order_;
  c_[k] = ck_add(c_[k], mult);
}

CycInt CycInt::operator+(const CycInt& other) const {
  if (order_ != other.order_) fail(errc::order_mismatch, "cyclotomic orders differ");
  CycInt out(order_);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = ck_add(c_[i], other.c_[i]);
  return out;
}

CycInt& CycInt::operator+=(const CycInt& other) {
  if (order_ != other.order_) fail(errc::order_mismatch, "cyclotomic orders differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = ck_add(c_[i], other.c_[i]);
  return *this;
}

CycInt CycInt::operator-(const CycInt& other) const {
  if (order_ != other.order_) fail(errc::order_mismatch, "cyclotomic orders differ");
  CycInt out(order_);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = ck_sub(c_[i], other.c_[i]);
  return out;
}

CycInt CycInt::operator*(const CycInt& other) const {
  if (order_ != other.order_) fail(errc::order_mismatch, "cyclotomic orders differ");
  CycInt out(order_);
  const std::size_t n = order_;
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (other.c_[j] == 0) continue;
      std::size_t k = i + j;
      if (k >= n) k -= n;
      out.c_[k] = ck_add(out.c_[k], ck_mul(c_[i], other.c_[j]));
    }
  }
  return out;
}

CycInt CycInt::operator-() const {
  CycInt out(order_);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = ck_sub(0, c_[i]);
  return out;
}

CycInt CycInt::scaled(std::int64_t factor) const {
  CycInt out(order_);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = ck_mul(c_[i], factor);
  return out;
}

CycInt CycInt::conjugate() const {
  CycInt out(order_);
  out.c_[0] = c_[0];
  for (std::size_t i = 1; i < c_.size(); ++i) out.c_[order_ - i] = c_[i];
  return out;
}

CycInt CycInt::embedded(std::uint32_t new_order) const {
  if (new_order % order_ != 0)
    fail(errc::order_mismatch, "target order is not a multiple");
  CycInt out(new_order);
  const std::uint32_t step = new_order / order_;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) out.c_[i * step] = c_[i];
  return out;
}

bool CycInt::operator==(const CycInt& other) const {
  if (order_ != other.order_) fail(errc::order_mismatch, "cyclotomic orders differ");
  return (*this - other).is_zero();
}

bool CycInt::is_zero() const {
  return reduce_mod_phi(c_, order_).empty();
}

bool CycInt::is_rational_integer() const {
  IPoly r = reduce_mod_phi(c_, order_);
  return r.size() <= 1;
}

std::int64_t CycInt::to_integer() const {
  IPoly r = reduce_mod_phi(c_, order_);
  if (r.size() > 1)
    fail(errc::not_rational, "value is not a rational integer: " + str());
  return r.empty() ? 0 : r[0];
}

std::vector<std::int64_t> CycInt::canonical() const {
  return reduce_mod_phi(c_, order_);
}

std::string CycInt::str() const {
  IPoly r = reduce_mod_phi(c_, order_);
  if (r.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] == 0) continue;
    std::int64_t v = r[i];
    if (out.empty()) {
      if (v < 0) out += "-";
    } else {
      out += v < 0 ? "-" : "+";
    }
    std::int64_t mag = v < 0 ? -v : v;
    if (i == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += "z^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace fflab
