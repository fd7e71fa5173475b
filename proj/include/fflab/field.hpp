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

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fflab/errors.hpp"

namespace fflab {

// Field elements are integers in [0, q) encoding coefficient vectors over
// F_p in the power basis of the modulus root: value = sum c_i * p^i.
using Elem = std::uint32_t;

// Log/exp tables dominate memory past this; nothing here needs more.
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 20;

/// Description of a finite field F_{p^r}. The modulus is a monic irreducible
/// polynomial over F_p, stored constant-term-first with r+1 coefficients; when
/// empty, construction picks the lexicographically smallest monic irreducible
/// of degree r whose root generates the multiplicative group.
struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t r = 1;
  std::vector<std::uint32_t> modulus;

  /// Accepts "p", "p^r" and "p^r:c_r,...,c_1,c_0" (coefficients most
  /// significant first, decimal).
  static FieldSpec parse(std::string_view text);
  std::string str() const;
  bool operator==(const FieldSpec&) const = default;
};

/// A concrete finite field with full exponent/log tables and a distinguished
/// primitive element gamma = root of the modulus (for r >= 2) or the smallest
/// primitive residue (prime fields). Immutable after construction and safe to
/// share across threads.
class FieldCtx {
 public:
  static std::shared_ptr<const FieldCtx> create(const FieldSpec& spec);

  const FieldSpec& spec() const { return spec_; }
  std::uint32_t p() const { return spec_.p; }
  std::uint32_t r() const { return spec_.r; }
  std::uint32_t q() const { return q_; }
  Elem gamma() const { return gamma_; }

  Elem add(Elem x, Elem y) const;
  Elem sub(Elem x, Elem y) const;
  Elem neg(Elem x) const;
  Elem mul(Elem x, Elem y) const {
    if (x == 0 || y == 0) return 0;
    return exp_[(std::uint64_t{log_[x]} + log_[y]) % (q_ - 1)];
  }
  Elem inv(Elem x) const;
  /// x^e with the convention x^0 = 1 for every x (including 0).
  Elem pow(Elem x, std::uint64_t e) const;
  /// gamma^k (k reduced mod q-1).
  Elem exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }
  /// Discrete logarithm with respect to gamma; x must be nonzero.
  std::uint32_t dlog(Elem x) const {
    if (x == 0) fail(errc::zero_log, "discrete log of zero");
    return log_[x];
  }
  /// Absolute trace onto F_p, returned as an integer in [0, p).
  std::uint32_t abs_trace(Elem x) const { return trace_[x]; }
  /// The prime-subfield element n mod p.
  Elem scalar(std::uint64_t n) const { return static_cast<Elem>(n % spec_.p); }
  /// x^(p^i) via exponent arithmetic.
  Elem frobenius(Elem x, std::uint32_t i) const;
  /// Quadratic character for odd q: 0 for x = 0, +1 for squares, -1 otherwise.
  int quad_char(Elem x) const;
  /// Multiplicative order of a nonzero element.
  std::uint32_t mult_order(Elem x) const;

  const std::vector<Elem>& exp_table() const { return exp_; }
  const std::vector<std::uint32_t>& log_table() const { return log_; }

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

 private:
  friend std::shared_ptr<const FieldCtx> build_field_uncached(const FieldSpec&);
  FieldCtx() = default;

  FieldSpec spec_;  // modulus always filled in
  std::uint32_t q_ = 0;
  Elem gamma_ = 0;
  std::vector<Elem> exp_;            // size q-1
  std::vector<std::uint32_t> log_;   // size q, log_[0] unused
  std::vector<std::uint8_t> trace_;  // size q, absolute trace
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

/// Shared, memoized field construction (same spec -> same instance).
FieldPtr get_field(const FieldSpec& spec);

/// A field homomorphism F_{p^a} -> F_{p^b} with a | b, found by locating a
/// root of the source modulus inside the destination subfield of matching
/// order (smallest root encoding wins, so the map is deterministic).
class Embedding {
 public:
  Embedding() = default;
  Embedding(FieldPtr src, FieldPtr dst);

  const FieldCtx& src() const { return *src_; }
  const FieldCtx& dst() const { return *dst_; }
  bool identity() const { return identity_; }

  Elem apply(Elem x) const;
  /// Inverse on the image; errors with not_in_subfield otherwise.
  Elem retract(Elem y) const;
  /// (q_dst - 1)/(q_src - 1): exponent stride of the subfield.
  std::uint64_t stride() const { return stride_; }

 private:
  FieldPtr src_, dst_;
  bool identity_ = false;
  std::uint64_t stride_ = 1;
  std::uint32_t u_ = 1, u_inv_ = 1;  // root = g^u with g = gamma_dst^stride
  std::vector<Elem> zpow_;           // root powers z^0..z^{a-1}
};

/// Outcome of the norm congruence (m/t)*i = ind_g(b) mod (q-1).
struct CongruenceSolution {
  std::uint32_t d = 1;  // gcd(q-1, m/t)
  bool solvable = false;
  std::uint32_t i0 = 0;  // smallest solution, < (q-1)/d, valid iff solvable
};

/// An extension F_{q^t}/F_q with compatible primitive elements: the base
/// multiplicative generator used by all index computations is g = N_t(gamma_t)
/// = gamma_t^{(q^t-1)/(q-1)} by construction; user-facing base elements are
/// translated through a deterministic field embedding.
class TowerCtx {
 public:
  static std::shared_ptr<const TowerCtx> create(const FieldSpec& base, std::uint32_t t);

  const FieldCtx& base() const { return *base_; }
  const FieldCtx& top() const { return *top_; }
  FieldPtr base_ptr() const { return base_; }
  FieldPtr top_ptr() const { return top_; }
  std::uint32_t t() const { return t_; }
  /// (q^t - 1)/(q - 1); g = gamma_t^subfield_index().
  std::uint64_t subfield_index() const { return index_; }
  /// The base primitive element g = N_t(gamma_t), as a top-field element.
  Elem g_top() const { return g_top_; }

  /// Trace/norm onto the base subfield, values in top-field encoding.
  Elem trace_top(Elem x) const {
    return t_ == 1 ? x : trace_tbl_[x];
  }
  Elem norm_top(Elem x) const;
  /// Trace/norm returned in base-field encoding.
  Elem trace(Elem x) const { return emb_.retract(trace_top(x)); }
  Elem norm(Elem x) const { return emb_.retract(norm_top(x)); }
  Elem embed(Elem base_x) const { return emb_.apply(base_x); }
  Elem retract(Elem top_x) const { return emb_.retract(top_x); }

  /// Index of a nonzero base element with respect to g.
  std::uint32_t ind_g(Elem base_b) const;

  /// Solves (m/t)*i = ind_g(b) (mod q-1); t must divide m, b nonzero.
  /// Unsolvable is a valid outcome (the corresponding counts are zero).
  CongruenceSolution solve_norm_congruence(std::uint64_t m, Elem base_b) const;

  TowerCtx(const TowerCtx&) = delete;
  TowerCtx& operator=(const TowerCtx&) = delete;

 private:
  TowerCtx() = default;

  FieldPtr base_, top_;
  std::uint32_t t_ = 1;
  std::uint64_t index_ = 1;
  Elem g_top_ = 1;
  Embedding emb_;
  std::vector<Elem> trace_tbl_;  // empty when t == 1
};

using TowerPtr = std::shared_ptr<const TowerCtx>;

/// Shared, memoized tower construction.
TowerPtr get_tower(const FieldSpec& base, std::uint32_t t);

}  // namespace fflab
