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

#include "rrcc/cosets.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rrcc/errors.hpp"
#include "rrcc/numtheory.hpp"

namespace rrcc {

CosetTable::CosetTable(unsigned r, std::uint64_t q) : r_(r), q_(q) {
  if (r > kMaxR) throw PreconditionError("r = " + std::to_string(r) + " exceeds the supported maximum " + std::to_string(kMaxR));
  if (q % 2 == 0) throw PreconditionError("q must be odd");
  n_ = std::uint32_t{1} << r;
  const std::uint64_t qm = q % n_;
  constexpr std::uint32_t kUnset = UINT32_MAX;
  index_.assign(n_, kUnset);
  for (std::uint32_t s = 0; s < n_; ++s) {
    if (index_[s] != kUnset) continue;
    std::vector<std::uint32_t> orbit;
    std::uint64_t x = s;
    do {
      orbit.push_back(static_cast<std::uint32_t>(x));
      index_[x] = static_cast<std::uint32_t>(cosets_.size());
      x = x * qm % n_;
    } while (x != s);
    std::sort(orbit.begin(), orbit.end());
    reps_.push_back(s);
    cosets_.push_back(std::move(orbit));
  }
}

std::uint32_t negate_rep(const CosetTable& t, std::uint32_t rep) {
  if (!t.is_rep(rep)) throw PreconditionError(std::to_string(rep) + " is not a canonical coset representative mod " + std::to_string(t.n()));
  return t.rep_of((t.n() - rep) % t.n());
}

namespace {

std::uint32_t residue(std::int64_t mult, unsigned shift, std::uint32_t n) {
  std::int64_t m = static_cast<std::int64_t>(n);
  std::int64_t v = (mult % m) * static_cast<std::int64_t>(std::uint64_t{1} << shift) % m;
  if (v < 0) v += m;
  return static_cast<std::uint32_t>(v);
}

// {3^v : 0 <= v <= count - 1}, optionally with negatives interleaved.
std::vector<std::int64_t> powers_of_three(std::uint64_t count, bool signed_pair, std::uint32_t n) {
  std::vector<std::int64_t> out;
  std::int64_t x = 1;
  for (std::uint64_t v = 0; v < count; ++v) {
    out.push_back(x);
    if (signed_pair) out.push_back(-x);
    x = x * 3 % static_cast<std::int64_t>(n);
  }
  return out;
}

}  // namespace

StructuredReps structured_reps(std::uint64_t q, unsigned r) {
  if (r < 1) throw PreconditionError("r must be at least 1");
  StructuredReps s;
  s.dec = decompose_q(q);
  s.r = r;
  CosetTable t(r, q);
  const std::uint32_t n = t.n();
  auto push = [&](std::vector<StructuredEntry>& v, char fam, unsigned i, std::int64_t mult) {
    std::uint32_t res = residue(mult, r - (i == 0 ? r : i), n);
    v.push_back({fam, i, mult, res, t.rep_of(res)});
  };
  auto push_fixed = [&](std::uint32_t res) {
    s.entries.push_back({'B', 0, static_cast<std::int64_t>(res), res, t.rep_of(res)});
  };

  if (r <= 2) {
    s.direct = true;
    for (std::uint32_t rep : t.reps()) push_fixed(rep);
  } else if (s.dec.sign == 1) {
    const unsigned a = s.dec.a;
    push_fixed(0);
    push_fixed(n / 2);
    for (unsigned i = 2; i <= r; ++i) {
      const unsigned e = std::min(i, a) - 2;
      for (std::int64_t mult : powers_of_three(std::uint64_t{1} << e, true, n)) push(s.entries, 'D', i, mult);
    }
  } else {
    const unsigned a = s.dec.a;
    push_fixed(0);
    push_fixed(n / 2);
    push_fixed(n / 4);
    for (unsigned i = 3; i <= r; ++i) {
      std::vector<std::int64_t> o, e;
      if (a == 2) {
        o = {1, -1};
        e = {1, -1};
      } else if (i <= a) {
        o = powers_of_three(std::uint64_t{1} << (i - 2), false, n);
        e = o;
      } else {
        o = powers_of_three(std::uint64_t{1} << (a - 2), true, n);
        e = powers_of_three(std::uint64_t{1} << (a - 1), false, n);
      }
      for (std::int64_t mult : o) push(s.entries, 'O', i, mult);
      for (std::int64_t mult : e) push(s.e_families, 'E', i, mult);
    }
  }
  std::set<std::uint32_t> reps;
  for (const auto& e : s.entries) reps.insert(e.rep);
  s.reps.assign(reps.begin(), reps.end());
  return s;
}

ValidationReport validate_structured(const StructuredReps& s, const CosetTable& t) {
  ValidationReport rep;
  auto violate = [&](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };
  if (s.r != t.r()) {
    violate("structured reps built for r = " + std::to_string(s.r) + " but table has r = " + std::to_string(t.r()));
    return rep;
  }
  std::map<std::size_t, std::uint32_t> seen;  // coset index -> first residue
  for (const auto& e : s.entries) {
    std::size_t idx = t.index_of(e.residue);
    auto [it, fresh] = seen.emplace(idx, e.residue);
    if (!fresh) {
      violate("residues " + std::to_string(it->second) + " and " + std::to_string(e.residue) +
              " lie in the same coset (rep " + std::to_string(t.reps()[idx]) + ")");
    }
  }
  for (std::size_t idx = 0; idx < t.size(); ++idx) {
    if (!seen.count(idx)) violate("coset of " + std::to_string(t.reps()[idx]) + " is not represented");
  }
  if (s.dec.sign == -1 && !s.direct) {
    const unsigned a = s.dec.a;
    for (unsigned i = a + 1; a >= 3 && i <= s.r; ++i) {
      std::uint64_t ord = multiplicative_order(t.q(), std::uint64_t{1} << i);
      if (ord != (std::uint64_t{1} << (i - a))) {
        violate("ord_{2^" + std::to_string(i) + "}(q) = " + std::to_string(ord) + ", expected 2^" + std::to_string(i - a));
      }
    }
    for (unsigned i = 3; i <= s.r; ++i) {
      std::set<std::uint32_t> from_o, from_e;
      for (const auto& e : s.entries) {
        if (e.family == 'O' && e.i == i) from_o.insert(e.rep);
      }
      for (const auto& e : s.e_families) {
        if (e.i == i) from_e.insert(e.rep);
      }
      if (from_o != from_e) violate("E_" + std::to_string(i) + " and O_" + std::to_string(i) + " cover different cosets");
    }
  }
  return rep;
}

}  // namespace rrcc
