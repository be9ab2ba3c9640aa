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


#include "rrcc_cli/cli.hpp"

#include <cstdlib>
#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rrcc/enumerate.hpp"
#include "rrcc/errors.hpp"
#include "rrcc/json_io.hpp"
#include "rrcc/numtheory.hpp"
#include "rrcc/quantum.hpp"
#include "rrcc/wtdist.hpp"
#include "rrcc_cli/reproduce.hpp"

namespace rrcc::cli {

using nlohmann::ordered_json;

std::uint64_t resolve_budget(std::optional<std::uint64_t> flag, const char* env) {
  if (flag) return *flag;
  if (env && *env) {
    const std::string text(env);
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || text.front() == '-') throw PreconditionError("RRCC_BUDGET must be a non-negative integer, got '" + text + "'");
    return v;
  }
  return kDefaultBudget;
}

namespace {

struct Globals {
  std::optional<std::uint32_t> p;
  std::uint32_t m = 1;
  std::optional<unsigned> r;
  unsigned s = 1;
  std::string format = "text";
  unsigned jobs = 1;
  std::optional<std::uint64_t> budget;
};

struct CodeSpec {
  std::string gen, exps;
};

struct Context {
  Globals g;
  std::ostream& out;
  std::ostream& err;

  bool json() const { return g.format == "json"; }
  bool csv() const { return g.format == "csv"; }

  EnumOptions enum_options() const { return {resolve_budget(g.budget, std::getenv("RRCC_BUDGET")), g.jobs}; }

  FamilyPtr family() const {
    if (!g.p) throw PreconditionError("--p is required");
    if (!g.r) throw PreconditionError("--r is required");
    if (*g.p == 2 || !is_prime(*g.p)) throw PreconditionError("p must be an odd prime, got " + std::to_string(*g.p));
    return code_family(FieldSpec::build(*g.p, g.m), *g.r, g.s);
  }
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void csv_header(std::ostream& out) { out << "n,k,d,generator,construction,extra\n"; }

void csv_row(std::ostream& out, const std::string& n, const std::string& k, const std::string& d, const std::string& generator,
             const std::string& construction, const std::string& extra) {
  out << csv_field(n) << ',' << csv_field(k) << ',' << csv_field(d) << ',' << csv_field(generator) << ','
      << csv_field(construction) << ',' << csv_field(extra) << '\n';
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

std::string exps_spec(const CodeFamily& f, const ExponentVector& e) {
  std::vector<std::string> parts;
  for (std::size_t h = 0; h < e.size(); ++h) parts.push_back(std::to_string(f.rep(h)) + ":" + std::to_string(e[h]));
  return join(parts, ",");
}

RepeatedRootCode build_code(const FamilyPtr& fam, const CodeSpec& spec, const std::string& flag) {
  if (!spec.gen.empty() && !spec.exps.empty()) {
    throw PreconditionError("--" + flag + "gen and --" + flag + "exps are mutually exclusive");
  }
  if (!spec.gen.empty()) return RepeatedRootCode(fam, parse_generator(*fam, spec.gen));
  if (!spec.exps.empty()) return RepeatedRootCode(fam, parse_exponent_spec(*fam, spec.exps));
  throw PreconditionError("one of --" + flag + "gen or --" + flag + "exps is required");
}

ordered_json count_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

// ---- factor ----------------------------------------------------------------

int cmd_factor(const Context& ctx) {
  const FamilyPtr fam = ctx.family();
  const auto factors = sorted_factorization(*fam);
  const std::string lhs = "x^" + std::to_string(fam->n()) + " - 1";
  if (ctx.json()) {
    ordered_json j;
    j["field"] = fam->field().name();
    j["n"] = fam->n();
    j["multiplicity"] = fam->ps();
    j["factors"] = ordered_json::array();
    for (const auto& f : factors) {
      j["factors"].push_back({{"poly", to_string(f.poly)}, {"degree", f.poly.degree()}, {"exponent", f.exponent}});
    }
    ctx.out << j.dump(2) << '\n';
  } else if (ctx.csv()) {
    csv_header(ctx.out);
    const std::string n = std::to_string(fam->n());
    for (const auto& f : factors) csv_row(ctx.out, n, "", "", to_string(f.poly), "factor", "exponent=" + std::to_string(f.exponent));
  } else {
    ctx.out << lhs << " = " << render_product(factors) << " over " << fam->field().name() << '\n';
  }
  return kExitOk;
}

// ---- code ------------------------------------------------------------------

int cmd_code(const Context& ctx, const CodeSpec& spec) {
  const FamilyPtr fam = ctx.family();
  const RepeatedRootCode c = build_code(fam, spec, "");
  const std::optional<DistanceReport> dist = c.is_zero() ? std::nullopt : std::optional(distance(c));
  const MdsClass mds = classify_mds(c);
  if (ctx.json()) {
    ordered_json j = code_json(c);
    j["distance"] = dist ? distance_json(*dist) : ordered_json(nullptr);
    j["mds_class"] = to_string(mds);
    ctx.out << j.dump(2) << '\n';
    return kExitOk;
  }
  const std::string d = dist ? std::to_string(dist->d) : "";
  const bool dc = is_dual_containing(c);
  const std::uint64_t l = hull(c).k();
  if (ctx.csv()) {
    csv_header(ctx.out);
    csv_row(ctx.out, std::to_string(c.n()), std::to_string(c.k()), d, c.factored(), "cyclic",
            "mds=" + to_string(mds) + ";dual_containing=" + (dc ? "true" : "false") + ";hull_dim=" + std::to_string(l));
    return kExitOk;
  }
  ctx.out << "field " << fam->field().name() << ", n = " << c.n() << ", p^s = " << fam->ps() << '\n'
          << "generator: " << c.factored() << '\n'
          << "exponents: " << exps_spec(*fam, c.exps()) << '\n'
          << "parameters: [" << c.n() << ',' << c.k() << ',' << (dist ? d : "-") << "]\n";
  if (dist) {
    ctx.out << "distance witness: t = " << dist->witness_t << '\n';
  }
  ctx.out << "dual exponents: " << exps_spec(*fam, dual(c).exps()) << '\n'
          << "dual-containing: " << (dc ? "yes" : "no") << '\n'
          << "hull dimension: " << l << '\n'
          << "MDS class: " << to_string(mds) << '\n';
  return kExitOk;
}

// ---- quantum ---------------------------------------------------------------

void emit_qec(const Context& ctx, const QecCode& q) {
  const SingletonReport sr = singleton_check(q);
  if (ctx.json()) {
    ctx.out << qec_json(q).dump(2) << '\n';
  } else if (ctx.csv()) {
    csv_header(ctx.out);
    csv_row(ctx.out, std::to_string(q.n), std::to_string(q.k), std::to_string(q.d), join(q.source_generators, " | "),
            to_string(q.construction), "singleton_slack=" + std::to_string(sr.slack));
  } else {
    ctx.out << q.params() << ' ' << to_string(q.construction) << ", Singleton slack " << sr.slack
            << (sr.is_mds ? " (MDS)" : "") << '\n';
    for (const auto& note : q.notes) ctx.out << "note: " << note << '\n';
  }
}

int cmd_css(const Context& ctx, const CodeSpec& spec, const CodeSpec& inner) {
  const FamilyPtr fam = ctx.family();
  const RepeatedRootCode c = build_code(fam, spec, "");
  if (inner.gen.empty() && inner.exps.empty()) {
    emit_qec(ctx, css_dual(c));
  } else {
    emit_qec(ctx, css(c, build_code(fam, inner, "inner-")));
  }
  return kExitOk;
}

int cmd_steane(const Context& ctx, const CodeSpec& spec, const CodeSpec& outer) {
  const FamilyPtr fam = ctx.family();
  emit_qec(ctx, steane(build_code(fam, spec, ""), build_code(fam, outer, "outer-")));
  return kExitOk;
}

void emit_eaqec(const Context& ctx, const EaqecCode& e) {
  const SingletonReport sr = singleton_check(e);
  if (ctx.json()) {
    ctx.out << eaqec_json(e).dump(2) << '\n';
  } else if (ctx.csv()) {
    csv_header(ctx.out);
    csv_row(ctx.out, std::to_string(e.n), std::to_string(e.k), std::to_string(e.d), join(e.source_generators, " | "), "EAQEC",
            "c=" + std::to_string(e.c) + ";hull_dim=" + std::to_string(e.hull_dim) + ";singleton_slack=" + std::to_string(sr.slack));
  } else {
    ctx.out << e.params() << " EAQEC, hull dimension " << e.hull_dim << ", rate " << e.rate() << ", net rate " << e.net_rate()
            << ", Singleton slack " << sr.slack << '\n';
  }
}

int cmd_eaqec(const Context& ctx, const CodeSpec& spec) {
  const FamilyPtr fam = ctx.family();
  emit_eaqec(ctx, eaqec(build_code(fam, spec, "")));
  return kExitOk;
}

// ---- scan ------------------------------------------------------------------

struct ScanOptions {
  std::string target;
  bool list = false;
  bool exhaustive = false;
  std::optional<std::uint64_t> max_c, min_k, min_d;
};

int scan_dual_containing(const Context& ctx, const ScanOptions& so) {
  const FamilyPtr fam = ctx.family();
  const BigInt closed = count_dual_containing(*fam);
  std::vector<RepeatedRootCode> codes;
  std::uint64_t enumerated = 0;
  if (so.list) {
    codes = enumerate_codes(fam, is_dual_containing, ctx.enum_options());
    enumerated = codes.size();
  } else {
    enumerated = count_codes(fam, is_dual_containing, ctx.enum_options());
  }
  const bool match = BigInt(enumerated) == closed;
  if (ctx.json()) {
    ordered_json j;
    j["target"] = so.target;
    j["enumerated"] = enumerated;
    j["closed_form"] = count_json(closed);
    j["match"] = match;
    if (so.list) {
      j["codes"] = ordered_json::array();
      for (const auto& c : codes) j["codes"].push_back({{"k", c.k()}, {"generator", c.factored()}, {"exponents", exponents_json(*fam, c.exps())}});
    }
    ctx.out << j.dump(2) << '\n';
  } else if (ctx.csv()) {
    csv_header(ctx.out);
    for (const auto& c : codes) csv_row(ctx.out, std::to_string(c.n()), std::to_string(c.k()), "", c.factored(), "dual-containing", "");
    csv_row(ctx.out, std::to_string(fam->n()), "", "", "", "summary",
            "enumerated=" + std::to_string(enumerated) + ";closed_form=" + closed.str() + ";match=" + (match ? "true" : "false"));
  } else {
    for (const auto& c : codes) ctx.out << '[' << c.n() << ',' << c.k() << "] " << c.factored() << '\n';
    ctx.out << "enumerated " << enumerated << ", closed-form " << closed.str() << ", " << (match ? "match" : "MISMATCH") << '\n';
  }
  return match ? kExitOk : kExitMismatch;
}

int scan_mds(const Context& ctx, const ScanOptions& so) {
  const FamilyPtr fam = ctx.family();
  struct Hit {
    RepeatedRootCode code;
    MdsClass cls;
  };
  const auto hits = enumerate_map<Hit>(fam, ctx.enum_options(), [](const RepeatedRootCode& c) -> std::optional<Hit> {
    if (c.is_zero()) return std::nullopt;
    const MdsClass m = classify_mds(c);
    if (m == MdsClass::NotMDS) return std::nullopt;
    return Hit{c, m};
  });
  const std::uint64_t total = space_size(*fam, ctx.enum_options().budget);
  if (ctx.json()) {
    ordered_json j;
    j["target"] = so.target;
    j["enumerated"] = total;
    j["codes"] = ordered_json::array();
    for (const auto& h : hits) {
      j["codes"].push_back({{"n", h.code.n()}, {"k", h.code.k()}, {"d", h.code.n() - h.code.k() + 1},
                            {"generator", h.code.factored()}, {"mds_class", to_string(h.cls)}});
    }
    ctx.out << j.dump(2) << '\n';
  } else if (ctx.csv()) {
    csv_header(ctx.out);
    for (const auto& h : hits) {
      csv_row(ctx.out, std::to_string(h.code.n()), std::to_string(h.code.k()), std::to_string(h.code.n() - h.code.k() + 1),
              h.code.factored(), "cyclic", "mds=" + to_string(h.cls));
    }
  } else {
    for (const auto& h : hits) {
      ctx.out << '[' << h.code.n() << ',' << h.code.k() << ',' << h.code.n() - h.code.k() + 1 << "] " << to_string(h.cls) << ' '
              << h.code.factored() << '\n';
    }
    ctx.out << hits.size() << " MDS codes among " << total << " enumerated\n";
  }
  return kExitOk;
}

int scan_qec_mds(const Context& ctx, const ScanOptions& so) {
  const FamilyPtr fam = ctx.family();
  const auto recs = qec_mds_scan(fam);
  std::optional<bool> agree;
  std::size_t exhaustive_count = 0;
  if (so.exhaustive) {
    auto ex = qec_mds_exhaustive(fam, ctx.enum_options());
    exhaustive_count = ex.size();
    std::vector<ExponentVector> a, b;
    for (const auto& r : recs) a.push_back(r.exps);
    for (const auto& r : ex) b.push_back(r.exps);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    agree = a == b;
  }
  if (ctx.json()) {
    ordered_json j;
    j["target"] = so.target;
    j["codes"] = ordered_json::array();
    for (const auto& r : recs) j["codes"].push_back(qec_json(r.code));
    if (agree) {
      j["exhaustive"] = exhaustive_count;
      j["match"] = *agree;
    }
    ctx.out << j.dump(2) << '\n';
  } else if (ctx.csv()) {
    csv_header(ctx.out);
    for (const auto& r : recs) {
      csv_row(ctx.out, std::to_string(r.code.n), std::to_string(r.code.k), std::to_string(r.code.d), join(r.code.source_generators, " | "),
              to_string(r.code.construction), "singleton_slack=" + std::to_string(singleton_check(r.code).slack));
    }
  } else {
    for (const auto& r : recs) {
      ctx.out << r.code.params() << ' ' << join(r.code.source_generators, " | ") << ", Singleton slack "
              << singleton_check(r.code).slack << '\n';
    }
    if (agree) {
      ctx.out << "structured " << recs.size() << ", exhaustive " << exhaustive_count << ", " << (*agree ? "match" : "MISMATCH") << '\n';
    } else {
      ctx.out << recs.size() << " QEC MDS codes\n";
    }
  }
  return agree.value_or(true) ? kExitOk : kExitMismatch;
}

int scan_eaqec(const Context& ctx, const ScanOptions& so) {
  const FamilyPtr fam = ctx.family();
  const auto hits = enumerate_map<EaqecCode>(fam, ctx.enum_options(), [&](const RepeatedRootCode& c) -> std::optional<EaqecCode> {
    if (c.is_zero() || c.is_full()) return std::nullopt;
    const std::uint64_t l = hull(c).k();
    if (so.max_c && c.n() - c.k() - l > *so.max_c) return std::nullopt;
    if (so.min_k && c.k() - l < *so.min_k) return std::nullopt;
    EaqecCode e = eaqec(c);
    if (so.min_d && e.d < *so.min_d) return std::nullopt;
    return e;
  });
  if (ctx.json()) {
    ordered_json j;
    j["target"] = so.target;
    j["codes"] = ordered_json::array();
    for (const auto& e : hits) j["codes"].push_back(eaqec_json(e));
    ctx.out << j.dump(2) << '\n';
  } else if (ctx.csv()) {
    csv_header(ctx.out);
    for (const auto& e : hits) {
      csv_row(ctx.out, std::to_string(e.n), std::to_string(e.k), std::to_string(e.d), join(e.source_generators, " | "), "EAQEC",
              "c=" + std::to_string(e.c) + ";hull_dim=" + std::to_string(e.hull_dim));
    }
  } else {
    for (const auto& e : hits) ctx.out << e.params() << ' ' << join(e.source_generators, " | ") << '\n';
    ctx.out << hits.size() << " EAQEC codes\n";
  }
  return kExitOk;
}

int cmd_scan(const Context& ctx, const ScanOptions& so) {
  if (so.target == "dual-containing") return scan_dual_containing(ctx, so);
  if (so.target == "mds") return scan_mds(ctx, so);
  if (so.target == "qec-mds") return scan_qec_mds(ctx, so);
  return scan_eaqec(ctx, so);
}

// ---- reproduce -------------------------------------------------------------

int cmd_reproduce(const Context& ctx, const std::string& which) {
  std::vector<std::string> ids = which == "all" ? fixture_ids() : std::vector<std::string>{which};
  std::vector<FixtureReport> reports;
  for (const auto& id : ids) reports.push_back(reproduce(id));
  std::map<Status, int> tally;
  for (const auto& r : reports) ++tally[r.status()];
  const bool ok = tally[Status::Mismatch] == 0;

  if (ctx.json()) {
    ordered_json j;
    j["fixtures"] = ordered_json::array();
    for (const auto& r : reports) {
      ordered_json f;
      f["id"] = r.id;
      f["status"] = to_string(r.status());
      f["checks"] = ordered_json::array();
      for (const auto& c : r.checks) {
        ordered_json cj{{"item", c.item}, {"expected", c.expected}, {"recomputed", c.recomputed}, {"status", to_string(c.status)}};
        if (!c.note.empty()) cj["note"] = c.note;
        f["checks"].push_back(std::move(cj));
      }
      j["fixtures"].push_back(std::move(f));
    }
    j["summary"] = {{"match", tally[Status::Match]},
                    {"documented-discrepancy", tally[Status::Documented]},
                    {"mismatch", tally[Status::Mismatch]}};
    ctx.out << j.dump(2) << '\n';
  } else if (ctx.csv()) {
    csv_header(ctx.out);
    for (const auto& r : reports) {
      for (const auto& c : r.checks) {
        csv_row(ctx.out, "", "", "", c.expected, r.id + ": " + c.item,
                "status=" + to_string(c.status) + ";recomputed=" + c.recomputed + (c.note.empty() ? "" : ";note=" + c.note));
      }
    }
  } else {
    for (const auto& r : reports) {
      ctx.out << r.id << ": " << to_string(r.status()) << '\n';
      for (const auto& c : r.checks) {
        ctx.out << "  " << c.item << ": expected " << c.expected << ", recomputed " << c.recomputed << " [" << to_string(c.status)
                << "]\n";
        if (!c.note.empty()) ctx.out << "    " << c.note << '\n';
      }
    }
    ctx.out << reports.size() << " fixtures: " << tally[Status::Match] << " match, " << tally[Status::Documented]
            << " documented-discrepancy, " << tally[Status::Mismatch] << " mismatch\n";
  }
  return ok ? kExitOk : kExitMismatch;
}

void add_code_options(CLI::App* sub, CodeSpec& spec, const std::string& prefix, const std::string& what) {
  sub->add_option("--" + prefix + "gen", spec.gen, "generator of " + what + ", e.g. \"(x+1)^2(x+8)\"");
  sub->add_option("--" + prefix + "exps", spec.exps, "exponents of " + what + " as rep:j,rep:j,...");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Context ctx{{}, out, err};
  CLI::App app{"Repeated-root cyclic codes of length 2^r p^s and the quantum codes built from them.", "rrcc"};
  app.require_subcommand(1);
  app.add_option("--p", ctx.g.p, "field characteristic, an odd prime");
  app.add_option("--m", ctx.g.m, "extension degree, q = p^m")->capture_default_str();
  app.add_option("--r", ctx.g.r, "2-adic part of the length");
  app.add_option("--s", ctx.g.s, "p-adic part of the length")->capture_default_str();
  app.add_option("--format", ctx.g.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
  app.add_option("--jobs", ctx.g.jobs, "worker threads for scans")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--budget", ctx.g.budget, "maximum exponent vectors a scan may visit (default: RRCC_BUDGET or 10^7)");

  CodeSpec spec, other;
  ScanOptions so;
  std::string which = "all";

  auto* factor = app.add_subcommand("factor", "factor x^n - 1 into minimal polynomials");
  auto* code = app.add_subcommand("code", "describe one cyclic code");
  add_code_options(code, spec, "", "the code");

  auto* quantum = app.add_subcommand("quantum", "build a quantum code");
  quantum->require_subcommand(1);
  auto* q_css = quantum->add_subcommand("css", "CSS construction; without an inner code C must be dual-containing");
  add_code_options(q_css, spec, "", "C");
  add_code_options(q_css, other, "inner-", "the inner code");
  auto* q_steane = quantum->add_subcommand("steane", "Steane enlargement from C inside C'");
  add_code_options(q_steane, spec, "", "C");
  add_code_options(q_steane, other, "outer-", "C'");
  auto* q_eaqec = quantum->add_subcommand("eaqec", "entanglement-assisted code from the hull of C");
  add_code_options(q_eaqec, spec, "", "C");

  auto* scan = app.add_subcommand("scan", "enumerate the code family");
  scan->add_option("target", so.target, "what to scan for")
      ->required()
      ->check(CLI::IsMember({"dual-containing", "mds", "qec-mds", "eaqec"}));
  scan->add_flag("--list", so.list, "list dual-containing codes instead of only counting them");
  scan->add_flag("--exhaustive", so.exhaustive, "cross-check qec-mds against full enumeration");
  scan->add_option("--max-c", so.max_c, "eaqec: at most this many entangled pairs");
  scan->add_option("--min-k", so.min_k, "eaqec: at least this many logical qudits");
  scan->add_option("--min-d", so.min_d, "eaqec: at least this minimum distance");

  auto* repro = app.add_subcommand("reproduce", "recompute the embedded table and example fixtures");
  repro->add_option("id", which, "fixture id (table1..table8, example1..example15) or all")->capture_default_str();

  for (CLI::App* sub : {factor, code, quantum, q_css, q_steane, q_eaqec, scan, repro}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*factor) return cmd_factor(ctx);
    if (*code) return cmd_code(ctx, spec);
    if (*q_css) return cmd_css(ctx, spec, other);
    if (*q_steane) return cmd_steane(ctx, spec, other);
    if (*q_eaqec) return cmd_eaqec(ctx, spec);
    if (*scan) return cmd_scan(ctx, so);
    return cmd_reproduce(ctx, which);
  } catch (const ConsistencyError& e) {
    err << "internal consistency failure: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace rrcc::cli
