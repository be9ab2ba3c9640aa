// Copyright 2026 The rrcc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rrcc/quantum.hpp"

#include <algorithm>
#include <numeric>

#include "rrcc/errors.hpp"
#include "rrcc/numtheory.hpp"

namespace rrcc {

std::string to_string(Construction c) {
  switch (c) {
    case Construction::CSSDualContaining:
      return "CSS-selfdual-pair";
    case Construction::Steane:
      return "Steane";
    case Construction::CSS:
      break;
  }
  return "CSS";
}

std::string QecCode::params() const {
  return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]]";
}

std::string EaqecCode::params() const {
  return "[[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + ";" + std::to_string(c) + "]]";
}

namespace {
std::string fraction(std::int64_t num, std::uint64_t den) {
  const std::uint64_t mag = static_cast<std::uint64_t>(num < 0 ? -num : num);
  const std::uint64_t g = std::gcd(mag, den);
  const std::uint64_t a = g ? mag / g : 0, b = g ? den / g : den;
  return (num < 0 ? "-" : "") + std::to_string(a) + "/" + std::to_string(b);
}
}  // namespace

std::string EaqecCode::rate() const { return fraction(static_cast<std::int64_t>(k), n); }
std::string EaqecCode::net_rate() const {
  return fraction(static_cast<std::int64_t>(k) - static_cast<std::int64_t>(c), n);
}

SingletonReport singleton_check(const QecCode& qc) {
  SingletonReport r;
  r.slack = static_cast<std::int64_t>(qc.n) - 2 * static_cast<std::int64_t>(qc.d) + 2 - static_cast<std::int64_t>(qc.k);
  if (r.slack < 0) throw ConsistencyError("quantum Singleton bound violated by " + qc.params());
  r.is_mds = r.slack == 0;
  return r;
}

SingletonReport singleton_check(const EaqecCode& ec) {
  SingletonReport r;
  r.slack = static_cast<std::int64_t>(ec.n + ec.c) - static_cast<std::int64_t>(ec.k) - 2 * (static_cast<std::int64_t>(ec.d) - 1);
  if (r.slack < 0) throw ConsistencyError("entanglement-assisted Singleton bound violated by " + ec.params());
  r.is_mds = r.slack == 0;
  return r;
}

std::int64_t css_dim_by_families(const RepeatedRootCode& c) {
  const CodeFamily& f = c.family();
  const std::uint32_t two_r = f.two_r();
  std::int64_t deg = 0;
  for (const StructuredEntry& e : f.structured().entries) {
    const std::uint64_t u = e.residue;
    const std::uint64_t period = two_r / std::gcd<std::uint64_t>(u == 0 ? two_r : u, two_r);
    const std::uint64_t size = multiplicative_order(f.field().q() % period, period);
    deg += static_cast<std::int64_t>(size * c.j(f.cosets().index_of(u)));
  }
  return static_cast<std::int64_t>(f.n()) - 2 * deg;
}

QecCode css_dual(const RepeatedRootCode& c) {
  if (c.is_zero()) throw PreconditionError("CSS construction needs a nonzero code");
  if (!is_dual_containing(c)) throw PreconditionError("CSS construction requires C^perp to be contained in C");
  QecCode out;
  out.n = c.n();
  out.k = 2 * c.k() - c.n();
  if (css_dim_by_families(c) != static_cast<std::int64_t>(out.k)) {
    throw ConsistencyError("family-wise CSS dimension disagrees with 2k - n for " + c.factored());
  }
  out.d = distance(c).d;
  out.construction = Construction::CSSDualContaining;
  out.source_generators = {c.factored()};
  singleton_check(out);
  return out;
}

QecCode css(const RepeatedRootCode& c, const RepeatedRootCode& inner) {
  if (c.is_zero() || inner.is_zero()) throw PreconditionError("CSS construction needs nonzero codes");
  if (!is_subcode(inner, c)) throw PreconditionError("CSS construction requires the inner code to be contained in C");
  if (inner.is_full()) throw PreconditionError("CSS construction needs an inner code with nonzero dual");
  QecCode out;
  out.n = c.n();
  out.k = c.k() - inner.k();
  out.d = std::min(distance(c).d, distance(dual(inner)).d);
  out.construction = Construction::CSS;
  out.source_generators = {c.factored(), inner.factored()};
  singleton_check(out);
  return out;
}

QecCode steane(const RepeatedRootCode& c, const RepeatedRootCode& outer) {
  if (c.is_zero()) throw PreconditionError("Steane construction needs a nonzero code");
  if (!is_dual_containing(c)) throw PreconditionError("Steane construction requires C^perp to be contained in C");
  if (!is_subcode(c, outer)) throw PreconditionError("Steane construction requires C to be contained in C'");
  if (outer.k() < c.k() + 1) throw PreconditionError("Steane construction requires k' >= k+1");
  const std::uint64_t q = c.family().field().q();
  const std::uint64_t d = distance(c).d, d_outer = distance(outer).d;
  const std::uint64_t enlarged = ((q + 1) * d_outer + q - 1) / q;
  QecCode out;
  out.n = c.n();
  out.k = c.k() + outer.k() - c.n();
  out.d = std::min(d, enlarged);
  out.construction = Construction::Steane;
  out.source_generators = {c.factored(), outer.factored()};
  out.notes.push_back("distance term ceil((q+1)*d'/q) = " + std::to_string(enlarged));
  singleton_check(out);
  return out;
}

EaqecCode eaqec(const RepeatedRootCode& c) {
  if (c.is_zero() || c.is_full()) throw PreconditionError("EAQEC construction needs a code with nonzero dual and nonzero dimension");
  const std::uint64_t l = hull(c).k();
  if (hull_dim_by_families(c) != l) {
    throw ConsistencyError("family-wise hull dimension disagrees with the exponent hull for " + c.factored());
  }
  if (c.n() - static_cast<std::uint64_t>(hull_generator_lcm(c).degree()) != l) {
    throw ConsistencyError("lcm-based hull dimension disagrees with the exponent hull for " + c.factored());
  }
  EaqecCode out;
  out.n = c.n();
  out.k = c.k() - l;
  out.d = distance(c).d;
  out.c = c.n() - c.k() - l;
  out.hull_dim = l;
  out.source_generators = {c.factored()};
  singleton_check(out);
  return out;
}

std::vector<QecRecord> qec_mds_scan(const FamilyPtr& family) {
  const CodeFamily& f = *family;
  std::vector<ExponentVector> vectors{ExponentVector(f.size(), 0)};
  for (std::size_t h : mds_allowed_reps(f)) {
    ExponentVector v(f.size(), 0);
    v[h] = 1;
    vectors.push_back(std::move(v));
  }
  std::sort(vectors.begin(), vectors.end());
  vectors.erase(std::unique(vectors.begin(), vectors.end()), vectors.end());
  std::vector<QecRecord> out;
  for (auto& v : vectors) {
    RepeatedRootCode c(family, v);
    QecCode qc = css_dual(c);
    if (!singleton_check(qc).is_mds) {
      throw ConsistencyError("certified QEC MDS candidate " + qc.params() + " has nonzero Singleton slack");
    }
    out.push_back({std::move(v), std::move(qc)});
  }
  return out;
}

std::vector<QecRecord> qec_mds_exhaustive(const FamilyPtr& family, const EnumOptions& opts) {
  return enumerate_map<QecRecord>(family, opts, [](const RepeatedRootCode& c) -> std::optional<QecRecord> {
    if (c.is_zero() || !is_dual_containing(c) || classify_mds(c) == MdsClass::NotMDS) return std::nullopt;
    QecCode qc = css_dual(c);
    if (!singleton_check(qc).is_mds) return std::nullopt;
    return QecRecord{c.exps(), std::move(qc)};
  });
}

}  // namespace rrcc
