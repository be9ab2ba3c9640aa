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

#ifndef RRCC_JSON_IO_HPP
#define RRCC_JSON_IO_HPP

#include "json.hpp"
#include "rrcc/cycliccode.hpp"
#include "rrcc/quantum.hpp"
#include "rrcc/wtdist.hpp"

namespace rrcc {

/// {rep: j} keyed by the decimal representative.
nlohmann::ordered_json exponents_json(const CodeFamily& family, const ExponentVector& exps);

/// {p, m, r, s, n, exponents, k, generator, generator_factored,
///  dual_exponents, hull_dim, dual_containing}
nlohmann::ordered_json code_json(const RepeatedRootCode& c);

/// {d, witness_t, layers: [{t, P_t, d_t}]}
nlohmann::ordered_json distance_json(const DistanceReport& r);

/// {n, k, d, construction, source_generators, singleton_slack, notes}
nlohmann::ordered_json qec_json(const QecCode& q);

/// {n, k, d, c, hull_dim, rate, net_rate, source_generators, singleton_slack}
nlohmann::ordered_json eaqec_json(const EaqecCode& e);

}  // namespace rrcc

#endif  // RRCC_JSON_IO_HPP
