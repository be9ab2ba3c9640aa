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


#include "rrcc_cli/reproduce.hpp"

#include <algorithm>
#include <map>

#include "rrcc/errors.hpp"
#include "rrcc/quantum.hpp"
#include "rrcc/wtdist.hpp"

namespace rrcc::cli {

using nlohmann::json;

const json& fixtures() {
  static const json data = json::parse(fixtures_text());
  return data;
}

const json& discrepancy_ledger() {
  static const json data = json::parse(discrepancies_text());
  return data;
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (long i = a.degree(); i >= 0; --i) {
    const auto u = static_cast<std::size_t>(i);
    if (a[u] != b[u]) return a[u] < b[u];
  }
  return false;
}

namespace {

void sort_factors(std::vector<FactorPower>& v) {
  std::sort(v.begin(), v.end(), [](const FactorPower& a, const FactorPower& b) { return canonical_less(a.poly, b.poly); });
}

FieldSpec field_of(const json& j) { return FieldSpec::build(j.at("p").get<std::uint32_t>(), j.value("m", 1u)); }

FamilyPtr family_of(const json& j) {
  return code_family(field_of(j), j.at("r").get<unsigned>(), j.at("s").get<unsigned>());
}

CodeParams params_of(const json& arr) {
  return {arr.at(0).get<std::uint64_t>(), arr.at(1).get<std::uint64_t>(), arr.at(2).get<std::uint64_t>()};
}

CodeParams params_of(const RepeatedRootCode& c) { return {c.n(), c.k(), c.is_zero() ? 0 : distance(c).d}; }

CodeParams params_of(const QecCode& q) { return {q.n, q.k, q.d}; }

// Compares a printed value with its recomputation, consulting the ledger on disagreement.
Check make_check(const std::string& id, std::string item, std::string expected, std::string recomputed) {
  Check c{std::move(item), std::move(expected), std::move(recomputed), Status::Match, {}};
  const json* entry = nullptr;
  for (const json& e : discrepancy_ledger().at("entries")) {
    if (e.at("fixture") == id && e.at("item") == c.item) entry = &e;
  }
  if (c.expected == c.recomputed) {
    if (entry) {
      c.status = Status::Mismatch;
      c.note = "ledger lists a discrepancy but the recomputation agrees with the printed value";
    }
    return c;
  }
  if (entry && entry->at("printed") == c.expected && entry->at("recomputed") == c.recomputed) {
    c.status = Status::Documented;
    c.note = entry->at("reason").get<std::string>();
  } else {
    c.status = Status::Mismatch;
    if (entry) c.note = "ledger expects " + entry->at("recomputed").get<std::string>();
  }
  return c;
}

const json& find_by_id(const json& list, const std::string& id) {
  for (const json& j : list) {
    if (j.at("id") == id) return j;
  }
  throw PreconditionError("unknown fixture '" + id + "'");
}

Check factorization_check(const std::string& id, const json& fx) {
  const FamilyPtr fam = family_of(fx);
  const std::string expected = render_product(normalize_product(fam->field(), fx.at("text").get<std::string>()));
  return make_check(id, "factorization", expected, render_product(sorted_factorization(*fam)));
}

ExponentVector add_exps(ExponentVector a, const ExponentVector& b) {
  for (std::size_t h = 0; h < a.size(); ++h) a[h] += b[h];
  return a;
}

FixtureReport table_report(const std::string& id) {
  FixtureReport rep{id, {}};
  for (const TableRow& row : table_rows(id)) {
    const std::string pre = "row " + std::to_string(row.index) + " ";
    rep.checks.push_back(make_check(id, pre + "C", row.printed_c.str(), row.recomputed_c.str()));
    if (row.steane) {
      rep.checks.push_back(make_check(id, pre + "C'", row.printed_c_prime->str(), row.recomputed_c_prime->str()));
    }
    const std::string qec = row.error.empty() ? row.recomputed_qec.qstr() : "rejected: " + row.error;
    rep.checks.push_back(make_check(id, pre + "QEC", row.printed_qec.qstr(), qec));
  }
  return rep;
}

FixtureReport count_report(const std::string& id, const json& ex) {
  FixtureReport rep{id, {}};
  const FamilyPtr fam = family_of(ex);
  rep.checks.push_back(factorization_check(id, find_by_id(fixtures().at("factorizations"), ex.at("factorization"))));
  rep.checks.push_back(
      make_check(id, "dual-containing count", ex.at("count").get<std::string>(), count_dual_containing(*fam).str()));
  return rep;
}

FixtureReport qec_mds_report(const std::string& id, const json& ex) {
  FixtureReport rep{id, {}};
  const FamilyPtr fam = family_of(ex);
  if (ex.contains("factorization")) {
    rep.checks.push_back(factorization_check(id, find_by_id(fixtures().at("factorizations"), ex.at("factorization"))));
  } else {
    // Printed only as a product over the 2^r-th roots of unity.
    std::size_t linear = 0;
    for (std::size_t h = 0; h < fam->size(); ++h) linear += fam->degree(h) == 1;
    const std::string shape = std::to_string(fam->two_r()) + " linear factors, each to the power " + std::to_string(fam->ps());
    const std::string got = std::to_string(linear) + " linear factors of " + std::to_string(fam->size()) +
                            ", each to the power " + std::to_string(fam->ps());
    rep.checks.push_back(make_check(id, "factorization shape", shape,
                                    linear == fam->size() ? shape : got));
  }
  std::string expected;
  for (const json& c : ex.at("codes")) {
    if (!expected.empty()) expected += ", ";
    expected += params_of(c.at("qec")).qstr() + " x" + std::to_string(c.at("count").get<int>());
  }
  std::map<std::string, int> tally;
  std::vector<std::string> order;
  bool slack_zero = true;
  for (const QecRecord& rec : qec_mds_scan(fam)) {
    const std::string key = rec.code.params();
    if (!tally.count(key)) order.push_back(key);
    ++tally[key];
    slack_zero = slack_zero && singleton_check(rec.code).slack == 0;
  }
  std::string got;
  for (const std::string& key : order) {
    if (!got.empty()) got += ", ";
    got += key + " x" + std::to_string(tally[key]);
  }
  rep.checks.push_back(make_check(id, "QEC MDS codes", expected, got));
  rep.checks.push_back(make_check(id, "Singleton slack", "0", slack_zero ? "0" : "nonzero"));
  return rep;
}

FixtureReport eaqec_report(const std::string& id, const json& ex) {
  FixtureReport rep{id, {}};
  const FamilyPtr fam = family_of(ex);
  const RepeatedRootCode c(fam, parse_generator(*fam, ex.at("g").get<std::string>()));
  rep.checks.push_back(make_check(id, "d", std::to_string(ex.at("d").get<int>()), std::to_string(distance(c).d)));
  rep.checks.push_back(make_check(id, "hull", render_product(normalize_product(fam->field(), ex.at("hull").get<std::string>())),
                                  render_product(sorted_factors(hull(c)))));
  const EaqecCode ea = eaqec(c);
  rep.checks.push_back(make_check(id, "hull dimension", std::to_string(ex.at("hull_dim").get<int>()), std::to_string(ea.hull_dim)));
  const json& p = ex.at("eaqec");
  const std::string printed = "[[" + std::to_string(p.at(0).get<int>()) + "," + std::to_string(p.at(1).get<int>()) + "," +
                              std::to_string(p.at(2).get<int>()) + ";" + std::to_string(p.at(3).get<int>()) + "]]";
  rep.checks.push_back(make_check(id, "EAQEC", printed, ea.params()));
  return rep;
}

}  // namespace

std::vector<FactorPower> sorted_factorization(const CodeFamily& family) {
  std::vector<FactorPower> out;
  for (std::size_t h = 0; h < family.size(); ++h) out.push_back({family.minpoly(h), family.ps()});
  sort_factors(out);
  return out;
}

std::vector<FactorPower> sorted_factors(const RepeatedRootCode& c) {
  std::vector<FactorPower> out;
  for (std::size_t h = 0; h < c.exps().size(); ++h) {
    if (c.j(h)) out.push_back({c.family().minpoly(h), c.j(h)});
  }
  sort_factors(out);
  return out;
}

std::vector<FactorPower> normalize_product(const FieldSpec& field, std::string_view text) {
  std::vector<FactorPower> out;
  for (const PolyFactor& f : parse_product(field, text)) {
    if (f.base.degree() < 1 || f.exponent == 0) continue;
    Poly base = f.base.monic();
    auto it = std::find_if(out.begin(), out.end(), [&](const FactorPower& x) { return x.poly == base; });
    if (it != out.end()) {
      it->exponent += f.exponent;
    } else {
      out.push_back({std::move(base), f.exponent});
    }
  }
  sort_factors(out);
  return out;
}

std::string render_product(const std::vector<FactorPower>& factors) {
  std::string out;
  for (const FactorPower& f : factors) {
    if (!out.empty()) out += "*";
    out += "(" + to_string(f.poly) + ")";
    if (f.exponent != 1) out += "^" + std::to_string(f.exponent);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Documented:
      return "documented-discrepancy";
    case Status::Mismatch:
      return "mismatch";
    case Status::Match:
      break;
  }
  return "match";
}

Status FixtureReport::status() const {
  Status worst = Status::Match;
  for (const Check& c : checks) worst = std::max(worst, c.status);
  return worst;
}

std::string CodeParams::str() const {
  return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]";
}

std::string CodeParams::qstr() const { return "[" + str() + "]"; }

std::vector<TableRow> table_rows(const std::string& table_id) {
  const json& t = find_by_id(fixtures().at("tables"), table_id);
  const FamilyPtr fam = family_of(t);
  const bool is_steane = t.at("construction") == "steane";
  std::vector<TableRow> rows;
  std::size_t index = 0;
  for (const json& r : t.at("rows")) {
    TableRow row;
    row.table = table_id;
    row.index = ++index;
    row.steane = is_steane;
    row.g = r.at("g").get<std::string>();
    row.printed_c = params_of(r.at("c"));
    row.printed_qec = params_of(r.at("qec"));
    const ExponentVector g_exps = parse_generator(*fam, row.g);
    if (is_steane) {
      row.mult = r.at("mult").get<std::string>();
      row.printed_c_prime = params_of(r.at("c_prime"));
      const RepeatedRootCode c(fam, add_exps(g_exps, parse_generator(*fam, row.mult)));
      const RepeatedRootCode outer(fam, g_exps);
      row.recomputed_c = params_of(c);
      row.recomputed_c_prime = params_of(outer);
      try {
        row.recomputed_qec = params_of(steane(c, outer));
      } catch (const PreconditionError& e) {
        row.error = e.what();
      }
    } else {
      const RepeatedRootCode c(fam, g_exps);
      row.recomputed_c = params_of(c);
      try {
        row.recomputed_qec = params_of(css_dual(c));
      } catch (const PreconditionError& e) {
        row.error = e.what();
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::string> fixture_ids() {
  std::vector<std::string> ids;
  for (const json& t : fixtures().at("tables")) ids.push_back(t.at("id"));
  for (const json& e : fixtures().at("examples")) ids.push_back(e.at("id"));
  return ids;
}

FixtureReport reproduce(const std::string& id) {
  if (id.rfind("table", 0) == 0) return table_report(id);
  const json& ex = find_by_id(fixtures().at("examples"), id);
  const std::string kind = ex.at("kind");
  if (kind == "count") return count_report(id, ex);
  if (kind == "qec-mds") return qec_mds_report(id, ex);
  if (kind == "eaqec") return eaqec_report(id, ex);
  FixtureReport rep{id, {}};
  rep.checks.push_back(factorization_check(id, find_by_id(fixtures().at("factorizations"), ex.at("factorization"))));
  // The example's table is its own fixture; only its overall verdict is folded in here.
  const std::string table = ex.at("table");
  const Status verdict = table_report(table).status();
  rep.checks.push_back({"table", table + ": match", table + ": " + to_string(verdict), verdict, {}});
  return rep;
}

}  // namespace rrcc::cli
