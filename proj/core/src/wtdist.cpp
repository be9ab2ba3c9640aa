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

#include "rrcc/wtdist.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "rrcc/errors.hpp"
#include "rrcc/numtheory.hpp"

namespace rrcc {

PAdicWeight p_weight(std::uint64_t t, std::uint32_t p, unsigned s) {
  std::uint64_t ps = 0;
  if (!checked_pow(p, s, ps) || t >= ps) {
    throw PreconditionError("t = " + std::to_string(t) + " is outside 0.." + std::to_string(p) + "^" + std::to_string(s) + "-1");
  }
  PAdicWeight w;
  w.t = t;
  w.digits.resize(s);
  for (auto& d : w.digits) {
    d = static_cast<std::uint32_t>(t % p);
    t /= p;
    w.P *= d + 1;
  }
  return w;
}

TInterval t_interval(std::uint64_t l, std::uint32_t p, unsigned s) {
  std::uint64_t ps = 0;
  if (!checked_pow(p, s, ps) || l == 0 || l >= ps) {
    throw PreconditionError("t_interval needs 1 <= l <= p^s - 1, got l = " + std::to_string(l));
  }
  std::uint64_t pk = 1;  // p^k
  for (unsigned k = 0; k < s; ++k, pk *= p) {
    const std::uint64_t block = ps / pk;  // p^{s-k}
    const std::uint64_t step = block / p;  // p^{s-k-1}
    const std::uint64_t base = ps - block;
    if (l > base && l <= ps - step) {
      TInterval out;
      out.k = k;
      out.tau = (l - base - 1) / step;
      out.min_weight = (out.tau + 2) * pk;
      out.end = base + (out.tau + 1) * step;
      return out;
    }
  }
  throw ConsistencyError("no interval contains l = " + std::to_string(l));
}

std::uint64_t min_weight_scan(std::uint64_t l, std::uint32_t p, unsigned s) {
  std::uint64_t ps = 0;
  if (!checked_pow(p, s, ps) || l >= ps) throw PreconditionError("min_weight_scan needs l < p^s");
  std::uint64_t best = UINT64_MAX;
  for (std::uint64_t t = l; t < ps; ++t) best = std::min(best, p_weight(t, p, s).P);
  return best;
}

RepeatedRootCode layer_code(const RepeatedRootCode& c, std::uint64_t t) {
  const CodeFamily& f = c.family();
  if (t >= f.ps()) throw PreconditionError("layer index t = " + std::to_string(t) + " must be below p^s = " + std::to_string(f.ps()));
  ExponentVector e(f.size());
  for (std::size_t h = 0; h < e.size(); ++h) e[h] = c.j(h) > t ? 1 : 0;
  return RepeatedRootCode(code_family(f.field(), f.r(), 0), std::move(e));
}

namespace {

using Vec = std::vector<Elem>;

double binom(double n, double k) {
  if (k < 0 || k > n) return 0;
  return std::exp(std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1));
}

// Smallest weight of a nonzero codeword by enumerating all messages.
std::uint64_t distance_by_enumeration(const Poly& g, std::uint64_t N, std::uint64_t k) {
  const FieldSpec& f = g.field();
  std::vector<Vec> rows(k, Vec(N, 0));
  for (std::uint64_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < g.coeffs().size(); ++j) rows[i][i + j] = g.coeffs()[j];
  }
  std::uint64_t best = N;
  std::vector<Vec> stack(k + 1, Vec(N, 0));
  // Depth-first over message coefficients; stack[level] holds the partial sum.
  auto recurse = [&](auto& self, std::uint64_t level, bool nonzero) -> void {
    const Vec& cur = stack[level];
    if (level == k) {
      if (!nonzero) return;
      std::uint64_t w = static_cast<std::uint64_t>(std::count_if(cur.begin(), cur.end(), [](Elem e) { return e != 0; }));
      best = std::min(best, w);
      return;
    }
    for (Elem c = 0; c < f.q(); ++c) {
      Vec& next = stack[level + 1];
      if (c == 0) {
        next = cur;
      } else {
        for (std::uint64_t i = 0; i < N; ++i) next[i] = f.add(cur[i], f.mul(c, rows[level][i]));
      }
      self(self, level + 1, nonzero || c != 0);
      if (best == 1) return;
    }
  };
  recurse(recurse, 0, false);
  return best;
}

class ColumnSearch {
 public:
  ColumnSearch(const Poly& g, std::uint64_t N) : f_(g.field()), L_(static_cast<std::size_t>(g.degree())) {
    cols_.reserve(N);
    Poly x = Poly::x(f_);
    Poly cur = Poly::constant(f_, 1) % g;
    for (std::uint64_t i = 0; i < N; ++i) {
      Vec v(L_, 0);
      for (std::size_t j = 0; j < L_; ++j) v[j] = cur[j];
      cols_.push_back(std::move(v));
      cur = (cur * x) % g;
    }
  }

  // True if some set of exactly w columns containing column 0 is dependent
  // while its first w-1 columns are independent.
  bool dependent_set_of_size(std::uint64_t w) {
    basis_.clear();
    pivots_.clear();
    Vec v = cols_[0];
    if (!insert(v)) return true;
    if (w == 1) return false;
    return search(1, w - 1);
  }

 private:
  // Reduces v against the basis; returns the pivot or L_ when v reduces to zero.
  std::size_t reduce(Vec& v) const {
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      Elem c = v[pivots_[b]];
      if (!c) continue;
      const Vec& row = basis_[b];
      for (std::size_t j = 0; j < L_; ++j) {
        if (row[j]) v[j] = f_.sub(v[j], f_.mul(c, row[j]));
      }
    }
    for (std::size_t j = 0; j < L_; ++j) {
      if (v[j]) return j;
    }
    return L_;
  }

  bool insert(Vec& v) {
    std::size_t piv = reduce(v);
    if (piv == L_) return false;
    Elem inv = f_.inv(v[piv]);
    for (auto& e : v) e = f_.mul(e, inv);
    basis_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
  }

  // basis_ holds `chosen` independent columns, the last being column `last`.
  bool search(std::uint64_t last, std::uint64_t remaining) {
    const std::uint64_t N = cols_.size();
    if (remaining == 1) {
      for (std::uint64_t j = last; j < N; ++j) {
        Vec v = cols_[j];
        if (reduce(v) == L_) return true;
      }
      return false;
    }
    for (std::uint64_t j = last; j + remaining <= N; ++j) {
      Vec v = cols_[j];
      if (!insert(v)) continue;  // dependent sets are caught at a smaller size
      bool found = search(j + 1, remaining - 1);
      basis_.pop_back();
      pivots_.pop_back();
      if (found) return true;
    }
    return false;
  }

  const FieldSpec& f_;
  std::size_t L_;
  std::vector<Vec> cols_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

std::uint64_t cyclic_min_distance(const Poly& g, std::uint64_t N, double work_budget) {
  if (g.is_zero() || g.degree() < 0) throw PreconditionError("invalid generator");
  if (static_cast<std::uint64_t>(g.degree()) >= N) throw PreconditionError("the zero code has no minimum distance");
  const std::uint64_t k = N - static_cast<std::uint64_t>(g.degree());
  if (k == N) return 1;
  const std::uint64_t L = N - k;
  const double q = static_cast<double>(g.field().q());
  const double enum_cost = std::pow(q, static_cast<double>(k)) * static_cast<double>(N);

  ColumnSearch cs(g, N);
  double spent = 0;
  for (std::uint64_t w = 1; w <= L + 1; ++w) {
    const double level = binom(static_cast<double>(N - 1), static_cast<double>(w - 1)) * static_cast<double>(w * L);
    if (spent + level > enum_cost) {
      if (enum_cost > work_budget) break;
      return distance_by_enumeration(g, N, k);
    }
    if (spent + level > work_budget) break;
    spent += level;
    if (cs.dependent_set_of_size(w)) return w;
  }
  if (enum_cost <= work_budget) return distance_by_enumeration(g, N, k);
  throw BudgetExceeded("minimum distance of a [" + std::to_string(N) + "," + std::to_string(k) +
                       "] code exceeds the work budget");
}

std::uint64_t simple_distance(const RepeatedRootCode& c) {
  if (c.is_zero()) throw PreconditionError("the zero code has no minimum distance");
  return cyclic_min_distance(c.generator(), c.n());
}

DistanceReport distance(const RepeatedRootCode& c) {
  if (c.is_zero()) throw PreconditionError("the zero code has no minimum distance");
  const CodeFamily& f = c.family();
  DistanceReport rep;
  rep.d = UINT64_MAX;
  std::map<std::vector<bool>, std::uint64_t> memo;
  for (std::uint64_t t = 0; t < f.ps(); ++t) {
    std::vector<bool> mask(f.size());
    bool all = true;
    for (std::size_t h = 0; h < f.size(); ++h) {
      mask[h] = c.j(h) > t;
      all = all && mask[h];
    }
    if (all) continue;
    auto it = memo.find(mask);
    if (it == memo.end()) it = memo.emplace(mask, simple_distance(layer_code(c, t))).first;
    const std::uint64_t P = p_weight(t, f.field().p(), f.s()).P;
    rep.layers.push_back({t, P, it->second});
    if (P * it->second < rep.d) {
      rep.d = P * it->second;
      rep.witness_t = t;
    }
  }
  return rep;
}

std::uint64_t brute_distance(const RepeatedRootCode& c, std::uint64_t max_n) {
  if (c.n() > max_n) {
    throw PreconditionError("brute_distance limited to n <= " + std::to_string(max_n) + ", got n = " + std::to_string(c.n()));
  }
  if (c.is_zero()) throw PreconditionError("the zero code has no minimum distance");
  return cyclic_min_distance(c.generator(), c.n());
}

SplitFormResult split_closed_form(const RepeatedRootCode& c) {
  const CodeFamily& f = c.family();
  if (f.dec().sign != 1 || f.dec().a < f.r()) {
    throw PreconditionError("the layered closed form applies only when q = 1 mod 2^r (all factors linear)");
  }
  if (c.is_zero()) throw PreconditionError("the zero code has no minimum distance");
  const std::uint64_t jmin = *std::min_element(c.exps().begin(), c.exps().end());
  if (jmin == 0) return {false, f.two_r()};
  SplitFormResult out{true, UINT64_MAX};
  for (std::size_t h = 0; h < f.size(); ++h) {
    const std::uint64_t j = c.j(h);
    if (j == f.ps()) continue;
    TInterval ti = t_interval(j, f.field().p(), f.s());
    out.value = std::min(out.value, ti.min_weight * simple_distance(layer_code(c, ti.end)));
  }
  return out;
}

std::string to_string(MdsClass m) {
  switch (m) {
    case MdsClass::MDS_d1:
      return "MDS_d1";
    case MdsClass::MDS_d2:
      return "MDS_d2";
    case MdsClass::MDS_dn:
      return "MDS_dn";
    case MdsClass::NotMDS:
      break;
  }
  return "NotMDS";
}

std::vector<std::size_t> mds_allowed_reps(const CodeFamily& f) {
  std::vector<std::size_t> out;
  const std::uint32_t two_r = f.two_r();
  auto add = [&](std::uint32_t residue) {
    std::size_t h = f.cosets().index_of(residue);
    if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(h);
  };
  if (f.dec().sign == 1 && f.dec().a >= f.r()) {
    for (std::size_t h = 0; h < f.size(); ++h) out.push_back(h);
  } else if (f.dec().sign == 1) {
    add(0);
    add(two_r / 2);
    for (const StructuredEntry& e : f.structured().entries) {
      if (e.family == 'D' && e.i <= f.dec().a) add(e.residue);
    }
  } else {
    add(0);
    add(two_r / 2 % two_r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MdsClass classify_mds(const RepeatedRootCode& c) {
  const CodeFamily& f = c.family();
  const auto& e = c.exps();
  if (std::all_of(e.begin(), e.end(), [](std::uint64_t j) { return j == 0; })) return MdsClass::MDS_d1;
  const auto allowed = mds_allowed_reps(f);
  for (std::size_t h : allowed) {
    bool d2 = e[h] == 1, dn = e[h] == f.ps() - 1;
    for (std::size_t g = 0; g < e.size(); ++g) {
      if (g == h) continue;
      d2 = d2 && e[g] == 0;
      dn = dn && e[g] == f.ps();
    }
    if (d2) return MdsClass::MDS_d2;
    if (dn) return MdsClass::MDS_dn;
  }
  return MdsClass::NotMDS;
}

}  // namespace rrcc
