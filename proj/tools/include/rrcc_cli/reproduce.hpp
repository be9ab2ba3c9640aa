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


#ifndef RRCC_CLI_REPRODUCE_HPP
#define RRCC_CLI_REPRODUCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rrcc/cycliccode.hpp"
#include "rrcc/polyring.hpp"

namespace rrcc::cli {

// Embedded data files, generated at build time from tools/data.
std::string_view fixtures_text();
std::string_view discrepancies_text();

const nlohmann::json& fixtures();
const nlohmann::json& discrepancy_ledger();

struct FactorPower {
  Poly poly;
  std::uint64_t exponent = 0;
};

/// Orders monic polynomials by degree, then by coefficients from x^(d-1) down.
bool canonical_less(const Poly& a, const Poly& b);

/// x^n - 1 as sorted prime powers m_h(x)^(p^s).
std::vector<FactorPower> sorted_factorization(const CodeFamily& family);
/// Factor powers of a code's generator, sorted, zero exponents dropped.
std::vector<FactorPower> sorted_factors(const RepeatedRootCode& c);
/// Parses a printed product, makes each factor monic, merges repeats and sorts.
std::vector<FactorPower> normalize_product(const FieldSpec& field, std::string_view text);
/// "(x + 1)^17*(x + 16)^17"; "1" for the empty product.
std::string render_product(const std::vector<FactorPower>& factors);

enum class Status { Match, Documented, Mismatch };
std::string to_string(Status s);

struct Check {
  std::string item;
  std::string expected;
  std::string recomputed;
  Status status = Status::Match;
  std::string note;
};

struct FixtureReport {
  std::string id;
  std::vector<Check> checks;
  /// Worst status over the checks.
  Status status() const;
};

struct CodeParams {
  std::uint64_t n = 0, k = 0, d = 0;
  std::string str() const;  // "[n,k,d]"
  std::string qstr() const;  // "[[n,k,d]]"
  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

struct TableRow {
  std::string table;
  std::size_t index = 0;  // 1-based
  bool steane = false;
  std::string g, mult;
  CodeParams printed_c, recomputed_c;
  std::optional<CodeParams> printed_c_prime, recomputed_c_prime;
  CodeParams printed_qec, recomputed_qec;
  /// Set when the construction rejected the inputs.
  std::string error;
};

/// Recomputes every row of a table fixture ("table1" ... "table8").
std::vector<TableRow> table_rows(const std::string& table_id);

/// All fixture ids in report order.
std::vector<std::string> fixture_ids();
/// Throws PreconditionError for an unknown id.
FixtureReport reproduce(const std::string& id);

}  // namespace rrcc::cli

#endif  // RRCC_CLI_REPRODUCE_HPP
