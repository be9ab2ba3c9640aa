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

#include "rrcc/json_io.hpp"

namespace rrcc {

using nlohmann::ordered_json;

ordered_json exponents_json(const CodeFamily& family, const ExponentVector& exps) {
  ordered_json out = ordered_json::object();
  for (std::size_t h = 0; h < exps.size(); ++h) out[std::to_string(family.rep(h))] = exps[h];
  return out;
}

ordered_json code_json(const RepeatedRootCode& c) {
  const CodeFamily& f = c.family();
  ordered_json j;
  j["p"] = f.field().p();
  j["m"] = f.field().m();
  j["r"] = f.r();
  j["s"] = f.s();
  j["n"] = c.n();
  j["exponents"] = exponents_json(f, c.exps());
  j["k"] = c.k();
  j["generator"] = to_string(c.generator());
  j["generator_factored"] = c.factored();
  j["dual_exponents"] = exponents_json(f, dual(c).exps());
  j["hull_dim"] = hull(c).k();
  j["dual_containing"] = is_dual_containing(c);
  return j;
}

ordered_json distance_json(const DistanceReport& r) {
  ordered_json j;
  j["d"] = r.d;
  j["witness_t"] = r.witness_t;
  j["layers"] = ordered_json::array();
  for (const auto& l : r.layers) j["layers"].push_back({{"t", l.t}, {"P_t", l.P}, {"d_t", l.d}});
  return j;
}

ordered_json qec_json(const QecCode& q) {
  ordered_json j;
  j["n"] = q.n;
  j["k"] = q.k;
  j["d"] = q.d;
  j["construction"] = to_string(q.construction);
  j["source_generators"] = q.source_generators;
  j["singleton_slack"] = singleton_check(q).slack;
  if (!q.notes.empty()) j["notes"] = q.notes;
  return j;
}

ordered_json eaqec_json(const EaqecCode& e) {
  ordered_json j;
  j["n"] = e.n;
  j["k"] = e.k;
  j["d"] = e.d;
  j["c"] = e.c;
  j["hull_dim"] = e.hull_dim;
  j["rate"] = e.rate();
  j["net_rate"] = e.net_rate();
  j["source_generators"] = e.source_generators;
  j["singleton_slack"] = singleton_check(e).slack;
  return j;
}

}  // namespace rrcc
