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

#include "fflab/field.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <mutex>
#include <numeric>

#include "fflab/detail/util.hpp"

namespace fflab {
namespace {

// ---- dense polynomials over F_p (coefficients LSB first, trimmed) ----

using PPoly = std::vector<std::uint32_t>;

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      acc[i + j] = (acc[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  // reduce mod monic f
  const std::size_t r = f.size() - 1;
  for (std::size_t i = acc.size(); i-- > r;) {
    std::uint64_t c = acc[i] % p;
    if (c == 0) continue;
    acc[i] = 0;
    for (std::size_t j = 0; j < r; ++j)
      acc[i - r + j] = (acc[i - r + j] + c * (p - f[j] % p)) % p;
  }
  PPoly out(acc.begin(), acc.begin() + std::min(acc.size(), r));
  ptrim(out);
  return out;
}

PPoly ppowmod(const PPoly& base, std::uint64_t e, const PPoly& f, std::uint32_t p) {
  PPoly result{1};
  PPoly b = base;
  while (e > 0) {
    if (e & 1) result = pmulmod(result, b, f, p);
    b = pmulmod(b, b, f, p);
    e >>= 1;
  }
  return result;
}

PPoly psub(const PPoly& a, const PPoly& b, std::uint32_t p) {
  PPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint32_t x = i < a.size() ? a[i] : 0;
    std::uint32_t y = i < b.size() ? b[i] : 0;
    out[i] = (x + p - y) % p;
  }
  ptrim(out);
  return out;
}

PPoly pgcd(PPoly a, PPoly b, std::uint32_t p) {
  while (!b.empty()) {
    // a mod b with b made monic on the fly
    std::uint64_t lead_inv = detail::inv_mod(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
      std::uint64_t c = (a.back() * lead_inv) % p;
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[shift + i] = static_cast<std::uint32_t>(
            (a[shift + i] + (p - (c * b[i]) % p)) % p);
      ptrim(a);
    }
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible_fp(const PPoly& f, std::uint32_t p) {
  const std::uint32_t r = static_cast<std::uint32_t>(f.size()) - 1;
  if (r == 1) return true;
  if (f[0] == 0) return false;
  PPoly x{0, 1};
  std::vector<PPoly> frob(r + 1);  // frob[j] = x^(p^j) mod f
  frob[0] = x;
  for (std::uint32_t j = 1; j <= r; ++j)
    frob[j] = ppowmod(frob[j - 1], p, f, p);
  if (frob[r] != x) return false;
  for (auto [ell, e] : detail::factorize(r)) {
    (void)e;
    PPoly g = pgcd(psub(frob[r / ell], x, p), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

// Order of the modulus root equals q-1 (checked without building tables).
bool root_is_primitive(const PPoly& f, std::uint32_t p, std::uint64_t q) {
  PPoly x{0, 1};
  if (q == 2) return true;
  for (auto [ell, e] : detail::factorize(q - 1)) {
    (void)e;
    PPoly h = ppowmod(x, (q - 1) / ell, f, p);
    if (h.size() == 1 && h[0] == 1) return false;
  }
  return true;
}

std::uint32_t smallest_primitive_root(std::uint32_t p) {
  if (p == 2) return 1;
  auto primes = detail::factorize(p - 1);
  for (std::uint32_t g = 2; g < p; ++g) {
    bool ok = true;
    for (auto [ell, e] : primes) {
      (void)e;
      std::uint64_t v = 1, b = g, k = (p - 1) / ell;
      while (k) {
        if (k & 1) v = v * b % p;
        b = b * b % p;
        k >>= 1;
      }
      if (v == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
  fail(errc::internal, "no primitive root found");
}

}  // namespace

// ---- FieldSpec ----

FieldSpec FieldSpec::parse(std::string_view text) {
  FieldSpec spec;
  auto bad = [&] { fail(errc::config, "malformed field spec: " + std::string(text)); };
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, spec.p);
  if (ec != std::errc{}) bad();
  spec.r = 1;
  if (ptr != end && *ptr == '^') {
    auto [ptr2, ec2] = std::from_chars(ptr + 1, end, spec.r);
    if (ec2 != std::errc{}) bad();
    ptr = ptr2;
  }
  if (ptr != end && *ptr == ':') {
    ++ptr;
    std::vector<std::uint32_t> msb_first;
    while (ptr != end) {
      std::uint32_t c = 0;
      auto [ptr2, ec2] = std::from_chars(ptr, end, c);
      if (ec2 != std::errc{}) bad();
      msb_first.push_back(c);
      ptr = ptr2;
      if (ptr != end) {
        if (*ptr != ',') bad();
        ++ptr;
      }
    }
    spec.modulus.assign(msb_first.rbegin(), msb_first.rend());
  }
  if (ptr != end) bad();
  if (spec.r == 0) fail(errc::invalid_argument, "extension degree must be positive");
  return spec;
}

std::string FieldSpec::str() const {
  std::string out = std::to_string(p);
  if (r != 1) out += "^" + std::to_string(r);
  if (!modulus.empty()) {
    out += ":";
    for (std::size_t i = modulus.size(); i-- > 0;) {
      out += std::to_string(modulus[i]);
      if (i != 0) out += ",";
    }
  }
  return out;
}

// ---- FieldCtx ----

std::shared_ptr<const FieldCtx> build_field_uncached(const FieldSpec& spec) {
  if (spec.r == 0) fail(errc::invalid_argument, "extension degree must be positive");
  if (!detail::is_prime_u64(spec.p))
    fail(errc::non_prime, "characteristic " + std::to_string(spec.p) + " is not prime");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < spec.r; ++i) {
    q *= spec.p;
    if (q > kMaxFieldSize)
      fail(errc::size_overflow, "field size exceeds 2^20: " + spec.str());
  }

  const std::uint32_t p = spec.p, r = spec.r;
  auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
  ctx->q_ = static_cast<std::uint32_t>(q);
  ctx->spec_ = spec;

  PPoly f;
  if (!spec.modulus.empty()) {
    if (spec.modulus.size() != r + 1)
      fail(errc::invalid_argument, "modulus must have degree r");
    for (auto c : spec.modulus)
      if (c >= p) fail(errc::invalid_argument, "modulus coefficient out of range");
    if (spec.modulus.back() != 1)
      fail(errc::invalid_argument, "modulus must be monic");
    f.assign(spec.modulus.begin(), spec.modulus.end());
    if (!is_irreducible_fp(f, p))
      fail(errc::reducible_modulus, "modulus is reducible: " + spec.str());
    if (!root_is_primitive(f, p, q))
      fail(errc::non_primitive_root, "modulus root is not primitive: " + spec.str());
  } else if (r == 1) {
    std::uint32_t g = smallest_primitive_root(p);
    f = {(p - g) % p, 1};  // x - g
  } else {
    // lexicographically smallest monic irreducible with primitive root
    bool found = false;
    for (std::uint64_t counter = 0; counter < q && !found; ++counter) {
      PPoly cand(r + 1, 0);
      cand[r] = 1;
      std::uint64_t c = counter;
      for (std::uint32_t j = 0; j < r; ++j) {
        cand[j] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (!is_irreducible_fp(cand, p)) continue;
      if (!root_is_primitive(cand, p, q)) continue;
      f = cand;
      found = true;
    }
    if (!found) fail(errc::internal, "no primitive modulus found");
  }
  ctx->spec_.modulus.assign(f.begin(), f.end());

  // gamma: the modulus root (r >= 2) or the primitive residue (r == 1)
  Elem gamma = r == 1 ? (p - f[0]) % p : p;
  ctx->gamma_ = gamma;

  const std::uint32_t qu = ctx->q_;
  ctx->exp_.resize(qu - 1);
  ctx->log_.assign(qu, 0);
  ctx->exp_[0] = 1;

  if (r == 1) {
    for (std::uint32_t k = 1; k + 1 < qu; ++k) {
      std::uint64_t v = std::uint64_t{ctx->exp_[k - 1]} * gamma % p;
      ctx->exp_[k] = static_cast<Elem>(v);
      if (v == 1) fail(errc::non_primitive_root, "root is not primitive");
    }
  } else {
    // multiply-by-x with reduction through the monic modulus
    std::vector<std::uint32_t> digits(r, 0);
    digits[0] = 1;
    for (std::uint32_t k = 1; k + 1 < qu; ++k) {
      std::uint32_t h = digits[r - 1];
      for (std::uint32_t i = r - 1; i > 0; --i) digits[i] = digits[i - 1];
      digits[0] = 0;
      if (h != 0) {
        for (std::uint32_t i = 0; i < r; ++i)
          digits[i] = (digits[i] + std::uint64_t{h} * (p - f[i])) % p;
      }
      Elem v = 0;
      for (std::uint32_t i = r; i-- > 0;) v = v * p + digits[i];
      ctx->exp_[k] = v;
      if (v == 1) fail(errc::non_primitive_root, "modulus root is not primitive");
    }
  }
  for (std::uint32_t k = 0; k + 1 < qu; ++k) {
    Elem v = ctx->exp_[k];
    if (v == 0 || ctx->log_[v] != 0 || (v == 1 && k != 0))
      fail(errc::internal, "exp table is not a bijection");
    ctx->log_[v] = k;
  }

  // absolute trace: linear over F_p, so evaluate on the power basis once
  ctx->trace_.assign(qu, 0);
  if (r == 1) {
    for (std::uint32_t v = 0; v < qu; ++v) ctx->trace_[v] = static_cast<std::uint8_t>(v);
  } else {
    std::vector<std::uint32_t> basis_trace(r, 0);
    for (std::uint32_t i = 0; i < r; ++i) {
      Elem acc = 0;
      for (std::uint32_t j = 0; j < r; ++j) {
        // (x^i)^(p^j)
        std::uint64_t e = ctx->log_[ctx->exp_[i]];
        for (std::uint32_t s = 0; s < j; ++s) e = e * p % (qu - 1);
        acc = ctx->add(acc, ctx->exp_[e]);
      }
      if (acc >= p) fail(errc::internal, "trace left the prime field");
      basis_trace[i] = acc;
    }
    for (std::uint32_t v = 0; v < qu; ++v) {
      std::uint64_t t = 0, w = v;
      for (std::uint32_t i = 0; i < r && w; ++i) {
        t += std::uint64_t{w % p} * basis_trace[i];
        w /= p;
      }
      ctx->trace_[v] = static_cast<std::uint8_t>(t % p);
    }
  }
  return ctx;
}

std::shared_ptr<const FieldCtx> FieldCtx::create(const FieldSpec& spec) {
  return build_field_uncached(spec);
}

Elem FieldCtx::add(Elem x, Elem y) const {
  const std::uint32_t p = spec_.p;
  if (p == 2) return x ^ y;
  Elem out = 0;
  std::uint32_t place = 1;
  while (x != 0 || y != 0) {
    std::uint32_t s = x % p + y % p;
    if (s >= p) s -= p;
    out += s * place;
    place *= p;
    x /= p;
    y /= p;
  }
  return out;
}

Elem FieldCtx::neg(Elem x) const {
  const std::uint32_t p = spec_.p;
  if (p == 2) return x;
  Elem out = 0;
  std::uint32_t place = 1;
  while (x != 0) {
    std::uint32_t c = x % p;
    out += (c == 0 ? 0 : p - c) * place;
    place *= p;
    x /= p;
  }
  return out;
}

Elem FieldCtx::sub(Elem x, Elem y) const { return add(x, neg(y)); }

Elem FieldCtx::inv(Elem x) const {
  if (x == 0) fail(errc::invalid_argument, "inverse of zero");
  return exp_[(q_ - 1 - log_[x]) % (q_ - 1)];
}

Elem FieldCtx::pow(Elem x, std::uint64_t e) const {
  if (e == 0) return 1;
  if (x == 0) return 0;
  std::uint64_t k = std::uint64_t{log_[x]} * (e % (q_ - 1)) % (q_ - 1);
  return exp_[k];
}

Elem FieldCtx::frobenius(Elem x, std::uint32_t i) const {
  if (x == 0 || x == 1) return x;
  std::uint64_t e = log_[x];
  for (std::uint32_t s = 0; s < i; ++s) e = e * spec_.p % (q_ - 1);
  return exp_[e];
}

int FieldCtx::quad_char(Elem x) const {
  if (spec_.p == 2) fail(errc::wrong_characteristic, "quadratic character needs odd q");
  if (x == 0) return 0;
  return log_[x] % 2 == 0 ? 1 : -1;
}

std::uint32_t FieldCtx::mult_order(Elem x) const {
  if (x == 0) fail(errc::zero_log, "order of zero");
  return (q_ - 1) / std::gcd<std::uint64_t>(log_[x], q_ - 1);
}

namespace {
std::mutex g_field_mutex;
std::mutex g_tower_mutex;
std::map<std::string, FieldPtr>& field_cache() {
  static auto* cache = new std::map<std::string, FieldPtr>();
  return *cache;
}
std::map<std::string, TowerPtr>& tower_cache() {
  static auto* cache = new std::map<std::string, TowerPtr>();
  return *cache;
}
}  // namespace

FieldPtr get_field(const FieldSpec& spec) {
  std::string key = spec.str();
  std::lock_guard<std::mutex> lock(g_field_mutex);
  auto& cache = field_cache();
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto ctx = build_field_uncached(spec);
  cache.emplace(std::move(key), ctx);
  return ctx;
}

// ---- Embedding ----

Embedding::Embedding(FieldPtr src, FieldPtr dst) : src_(std::move(src)), dst_(std::move(dst)) {
  if (src_->p() != dst_->p())
    fail(errc::invalid_argument, "embedding requires equal characteristic");
  if (dst_->r() % src_->r() != 0)
    fail(errc::invalid_argument, "no embedding: source degree does not divide");
  if (src_->spec() == dst_->spec()) {
    identity_ = true;
    return;
  }
  const std::uint64_t qs = src_->q(), qd = dst_->q();
  stride_ = (qd - 1) / (qs - 1);

  // roots of the source modulus inside the order-qs subfield
  const auto& f = src_->spec().modulus;
  Elem best = 0;
  std::uint32_t best_k = 0;
  bool have = false;
  for (std::uint64_t k = 0; k + 1 < qs; ++k) {
    Elem z = dst_->exp(stride_ * k);
    Elem val = 0;
    for (std::size_t i = f.size(); i-- > 0;)
      val = dst_->add(dst_->mul(val, z), dst_->scalar(f[i]));
    if (val == 0 && (!have || z < best)) {
      best = z;
      best_k = static_cast<std::uint32_t>(k);
      have = true;
    }
  }
  if (!have) fail(errc::internal, "source modulus has no root in destination");
  u_ = best_k;
  u_inv_ = static_cast<std::uint32_t>(detail::inv_mod(u_, qs - 1));
  zpow_.resize(src_->r());
  Elem zp = 1;
  for (std::uint32_t i = 0; i < src_->r(); ++i) {
    zpow_[i] = zp;
    zp = dst_->mul(zp, best);
  }
}

Elem Embedding::apply(Elem x) const {
  if (identity_) return x;
  if (x == 0) return 0;
  const std::uint32_t p = src_->p();
  Elem acc = 0;
  for (std::uint32_t i = 0; x != 0; ++i, x /= p) {
    std::uint32_t c = x % p;
    if (c != 0) acc = dst_->add(acc, dst_->mul(dst_->scalar(c), zpow_[i]));
  }
  return acc;
}

Elem Embedding::retract(Elem y) const {
  if (identity_) return y;
  if (y == 0) return 0;
  std::uint64_t l = dst_->dlog(y);
  if (l % stride_ != 0)
    fail(errc::not_in_subfield, "element lies outside the subfield");
  std::uint64_t j = l / stride_;
  return src_->exp(std::uint64_t{u_inv_} * j);
}

// ---- TowerCtx ----

std::shared_ptr<const TowerCtx> TowerCtx::create(const FieldSpec& base, std::uint32_t t) {
  if (t == 0) fail(errc::invalid_argument, "extension degree must be positive");
  auto base_ctx = get_field(base);
  detail::upow_checked(base_ctx->q(), t);
  std::uint64_t qt = 1;
  for (std::uint32_t i = 0; i < t; ++i) {
    qt *= base_ctx->q();
    if (qt > kMaxFieldSize)
      fail(errc::size_overflow, "tower size exceeds 2^20");
  }
  FieldSpec top_spec{base.p, base.r * t, {}};
  auto top_ctx = get_field(top_spec);

  auto tw = std::shared_ptr<TowerCtx>(new TowerCtx());
  tw->base_ = base_ctx;
  tw->top_ = top_ctx;
  tw->t_ = t;
  tw->index_ = (qt - 1) / (base_ctx->q() - 1);
  tw->g_top_ = top_ctx->exp(tw->index_);
  tw->emb_ = Embedding(base_ctx, top_ctx);
  if (t > 1) {
    const std::uint32_t q = base_ctx->q();
    const std::uint32_t topq = top_ctx->q();
    tw->trace_tbl_.assign(topq, 0);
    for (std::uint32_t x = 1; x < topq; ++x) {
      Elem acc = x;
      std::uint64_t e = top_ctx->dlog(x);
      for (std::uint32_t i = 1; i < t; ++i) {
        e = e * q % (topq - 1);
        acc = top_ctx->add(acc, top_ctx->exp_table()[e]);
      }
      tw->trace_tbl_[x] = acc;
    }
  }
  return tw;
}

Elem TowerCtx::norm_top(Elem x) const {
  if (x == 0) return 0;
  return top_->exp(std::uint64_t{top_->dlog(x)} * index_ % (top_->q() - 1));
}

std::uint32_t TowerCtx::ind_g(Elem base_b) const {
  if (base_b == 0) fail(errc::zero_log, "index of zero");
  std::uint64_t l = top_->dlog(emb_.apply(base_b));
  return static_cast<std::uint32_t>(l / index_);
}

CongruenceSolution TowerCtx::solve_norm_congruence(std::uint64_t m, Elem base_b) const {
  if (m == 0 || m % t_ != 0)
    fail(errc::precondition, "tower degree must divide m");
  if (base_b == 0) fail(errc::precondition, "b must be nonzero");
  const std::uint64_t qm1 = base_->q() - 1;
  const std::uint64_t mt = m / t_;
  std::uint64_t d = std::gcd(qm1, mt);
  std::uint32_t ind = ind_g(base_b);
  CongruenceSolution sol;
  sol.d = static_cast<std::uint32_t>(d);
  if (ind % d != 0) return sol;
  sol.solvable = true;
  const std::uint64_t n = qm1 / d;
  if (n <= 1) {
    sol.i0 = 0;
    return sol;
  }
  std::uint64_t coeff = (mt / d) % n;
  sol.i0 = static_cast<std::uint32_t>(detail::inv_mod(coeff, n) * (ind / d) % n);
  return sol;
}

TowerPtr get_tower(const FieldSpec& base, std::uint32_t t) {
  std::string key = base.str() + "|" + std::to_string(t);
  {
    std::lock_guard<std::mutex> lock(g_tower_mutex);
    auto& cache = tower_cache();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto tw = TowerCtx::create(base, t);  // may build fields under the field mutex
  std::lock_guard<std::mutex> lock(g_tower_mutex);
  auto [pos, inserted] = tower_cache().emplace(std::move(key), tw);
  (void)inserted;
  return pos->second;
}

}  // namespace fflab
