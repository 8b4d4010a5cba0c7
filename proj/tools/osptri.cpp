// osptri: command-line front end for the truncation-curve library.
//
// Exit status: 0 success, 1 verification failure, 2 usage error.
// OSPTRI_WORKERS sets the worker count for verification sweeps.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "osptri/osptri.hpp"

using namespace osptri;
using json = nlohmann::ordered_json;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

// ---------------------------------------------------------------------------
// Argument parsing
// ---------------------------------------------------------------------------

Family parse_family(const std::string& s) {
  auto f = family_from_tag(s);
  if (!f) throw UsageError("unknown family '" + s + "' (expected 1B, 1C, 1D, 1O, 2B, 2C, 2D or 2O)");
  return *f;
}

long parse_long(const std::string& s) {
  BigRat x = parse_rational(s);
  if (!x.is_integer() || !x.num().fits_slong_p()) throw UsageError("expected an integer, got '" + s + "'");
  return x.num().get_si();
}

struct Range {
  long lo = 0, hi = 0;
};

Range parse_range(const std::string& s) {
  auto dots = s.find("..");
  Range r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_long(s);
  } else {
    r.lo = parse_long(s.substr(0, dots));
    r.hi = parse_long(s.substr(dots + 2));
  }
  if (r.lo > r.hi) throw UsageError("empty range '" + s + "'");
  return r;
}

/// "n=0..3,m=0..3" on top of per-suite defaults; unknown names are rejected.
std::map<std::string, Range> parse_sweep(const std::string& text, std::map<std::string, Range> ranges) {
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("sweep item '" + item + "' is not of the form name=lo..hi");
    std::string name = item.substr(0, eq);
    if (!ranges.count(name)) throw UsageError("sweep variable '" + name + "' does not apply to this suite");
    ranges[name] = parse_range(item.substr(eq + 1));
  }
  return ranges;
}

/// "2B,0,1" with rational n and m.
struct CurveArg {
  Family family;
  BigRat n, m;
};

CurveArg parse_curve_arg(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  if (parts.size() != 3) throw UsageError("expected FAMILY,n,m, got '" + s + "'");
  return {parse_family(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
}

// ---------------------------------------------------------------------------
// Worker pool
// ---------------------------------------------------------------------------

unsigned worker_count() {
  if (const char* env = std::getenv("OSPTRI_WORKERS")) {
    long w = std::strtol(env, nullptr, 10);
    if (w >= 1) return static_cast<unsigned>(w);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs job(i) for i in [0, count) on a pool; results keep index order.
template <class R, class F>
std::vector<R> run_pool(std::size_t count, F job) {
  std::vector<R> out(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = job(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  unsigned n = std::min<std::size_t>(worker_count(), std::max<std::size_t>(count, 1));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < n; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

// ---------------------------------------------------------------------------
// Output helpers
// ---------------------------------------------------------------------------

struct Output {
  bool json_mode = false;

  void emit(const json& j, const std::string& table) const {
    if (json_mode)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << table;
  }
};

std::string family_json_n(const BigRat& x) { return x.str(); }

json witness_json(const RationalityWitness& w) {
  json j;
  j["family"] = std::string(family_tag(w.family));
  j["n"] = w.n;
  j["m"] = w.m;
  j["psi"] = w.psi.str();
  j["theorem"] = w.theorem;
  json params = json::object();
  for (const auto& [k, v] : w.params) params[k] = v;
  j["params"] = params;
  json conds = json::array();
  for (const auto& c : w.conditions) conds.push_back(c.text);
  j["conditions"] = conds;
  if (w.partner) {
    j["partner"] = {{"algebra", w.partner->algebra}, {"s", w.partner->s.str()}};
  } else {
    j["partner"] = nullptr;
  }
  j["status"] = w.status();
  return j;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string pad(std::string s, std::size_t w) {
  // Width in code points so that "≠" and "⊗" line up.
  std::size_t len = 0;
  for (unsigned char c : s) len += (c & 0xC0) != 0x80;
  if (len < w) s.append(w - len, ' ');
  return s;
}

// ---------------------------------------------------------------------------
// Simple subcommands
// ---------------------------------------------------------------------------

struct FamilyArgs {
  std::string family, n, m;
};

HookFamily family_of(const FamilyArgs& a) {
  return HookFamily::make(parse_family(a.family), parse_long(a.n), parse_long(a.m));
}

int cmd_charge(const FamilyArgs& a, const std::string& psi, const Output& out) {
  HookFamily fam = family_of(a);
  RatFunc c = central_charge(fam);
  json j{{"family", std::string(family_tag(fam.family()))}, {"n", fam.n_int()}, {"m", fam.m_int()}};
  std::string table;
  if (psi.empty()) {
    j["c"] = c.str();
    table = "c = " + c.str() + "\n";
  } else {
    BigRat x = parse_rational(psi);
    BigRat v = eval(c, {{Var::psi, x}});
    j["psi"] = x.str();
    j["c"] = v.str();
    table = "c = " + v.str() + "\n";
  }
  out.emit(j, table);
  return kOk;
}

int cmd_describe(const FamilyArgs& a, const Output& out) {
  HookFamily fam = family_of(a);
  Description d = describe(fam);
  LevelDictionary L = level_dictionary(fam);
  RatFunc t = affine_subalgebra_level(fam);
  json j{{"family", std::string(family_tag(fam.family()))},
         {"n", fam.n_int()},
         {"m", fam.m_int()},
         {"algebra", d.algebra},
         {"coset", d.coset},
         {"h_dual", L.h_dual_g.str()},
         {"affine_subalgebra", L.affine_subalgebra.str()},
         {"affine_level", t.str()}};
  std::string table = "algebra            " + d.algebra + "\n" + "coset              " + d.coset + "\n" +
                      "h_dual             " + L.h_dual_g.str() + "\n" + "affine subalgebra  " +
                      L.affine_subalgebra.str() + " at level " + t.str() + "\n";
  out.emit(j, table);
  return kOk;
}

int cmd_gentype(const FamilyArgs& a, const Output& out) {
  HookFamily fam = family_of(a);
  std::string profile = profile_str(generator_profile(fam));
  json j{{"family", std::string(family_tag(fam.family()))}, {"n", fam.n_int()}, {"m", fam.m_int()},
         {"profile", profile}};
  std::string table = "profile     " + profile + "\n";
  if (fam.n_int() + fam.m_int() >= 1) {
    long w = max_generator_weight(fam);
    std::string coset = w == 2 ? "W(2)" : w == 4 ? "W(2, 4)" : "W(2, 4, ..., " + std::to_string(w) + ")";
    j["max_weight"] = w;
    j["coset_type"] = coset;
    table += "coset type  " + coset + "\n";
  } else {
    j["max_weight"] = nullptr;
    j["coset_type"] = nullptr;
  }
  out.emit(j, table);
  return kOk;
}

int cmd_curve(const std::string& family, const std::string& n, const std::string& m, const std::string& psi,
              const Output& out) {
  Family f = parse_family(family);
  BigRat N = parse_rational(n), M = parse_rational(m);
  TruncationCurve C = phi_expr(f, RatFunc(N), RatFunc(M));
  json j{{"family", std::string(family_tag(f))}, {"n", family_json_n(N)}, {"m", family_json_n(M)}};
  std::string table;
  if (psi.empty()) {
    j["c"] = C.c.str();
    j["lambda"] = C.lambda.str();
    table = "c      = " + C.c.str() + "\nlambda = " + C.lambda.str() + "\n";
  } else {
    BigRat x = parse_rational(psi);
    BigRat c = eval(C.c, {{Var::psi, x}}), l = eval(C.lambda, {{Var::psi, x}});
    j["psi"] = x.str();
    j["c"] = c.str();
    j["lambda"] = l.str();
    table = "c      = " + c.str() + "\nlambda = " + l.str() + "\n";
  }
  out.emit(j, table);
  return kOk;
}

SimpleKind parse_kind(const std::string& s) {
  if (s == "sp") return SimpleKind::sp;
  if (s == "so") return SimpleKind::so_odd;
  throw UsageError("--algebra must be sp or so");
}

SingObject parse_object(const std::string& s) {
  if (s == "affine") return SingObject::affine;
  if (s == "W") return SingObject::principal_W;
  throw UsageError("--object must be affine or W");
}

int cmd_sing(const std::string& alg, const std::string& obj, long n, long u, long v, const Output& out) {
  SimpleKind k = parse_kind(alg);
  SingObject o = parse_object(obj);
  BigRat g = sing_weight_general(k, o, n, u, v);
  BigRat c = sing_weight_closed(k, o, n, u, v);
  json j{{"algebra", alg}, {"object", obj}, {"n", n},           {"u", u},
         {"v", v},         {"general", g.str()}, {"closed", c.str()}, {"agree", g == c}};
  std::string table = "general  " + g.str() + "\nclosed   " + c.str() + "\n";
  out.emit(j, table);
  return g == c ? kOk : kVerificationFailed;
}

int cmd_intersect(const std::string& a, const std::string& b, const Output& out) {
  CurveArg A = parse_curve_arg(a), B = parse_curve_arg(b);
  TruncationCurve CA = phi_expr(A.family, RatFunc(A.n), RatFunc(A.m));
  TruncationCurve CB = phi_expr(B.family, RatFunc(B.n), RatFunc(B.m));
  IntersectionResult res = intersect(CA, CB);
  json pts = json::array();
  std::string table = pad("psi1", 12) + pad("psi2", 12) + pad("c", 14) + pad("lambda", 22) + "degenerate\n";
  for (const auto& p : res.points) {
    pts.push_back({{"psi1", p.psi1.str()},
                   {"psi2", p.psi2.str()},
                   {"c", p.c.str()},
                   {"lambda", p.lambda.str()},
                   {"degenerate", p.degenerate}});
    table += pad(p.psi1.str(), 12) + pad(p.psi2.str(), 12) + pad(p.c.str(), 14) + pad(p.lambda.str(), 22) +
             (p.degenerate ? "yes" : "no") + "\n";
  }
  for (const auto& comp : res.identity_components) table += "identity component: " + comp + "\n";
  table += "residual irrational degree: " + std::to_string(res.residual_degree) + "\n";
  json j{{"points", pts}, {"identity_components", res.identity_components}, {"residual_degree", res.residual_degree}};
  out.emit(j, table);
  return kOk;
}

// ---------------------------------------------------------------------------
// Rationality witnesses and Gelfand-Tsetlin factors
// ---------------------------------------------------------------------------

int cmd_rational_points(const FamilyArgs& a, const std::string& r, const std::string& p, const std::string& q,
                        bool conjectural, const Output& out) {
  HookFamily fam = family_of(a);
  Range rr = parse_range(r), pr = parse_range(p), qr = parse_range(q);
  WitnessBounds bounds{rr.lo, rr.hi, pr.lo, pr.hi, qr.lo, qr.hi};
  auto ws = rational_points(fam, bounds, conjectural);
  json j = json::array();
  std::string table = pad("psi", 12) + pad("theorem", 24) + pad("params", 12) + pad("status", 13) +
                      pad("conditions", 28) + "partner\n";
  for (const auto& w : ws) {
    j.push_back(witness_json(w));
    std::vector<std::string> ps;
    for (const auto& [k, v] : w.params) ps.push_back(k + "=" + std::to_string(v));
    std::string partner = w.partner ? w.partner->algebra + " at " + w.partner->s.str() : "-";
    std::vector<std::string> cs;
    for (const auto& c : w.conditions) cs.push_back(c.text);
    table += pad(w.psi.str(), 12) + pad(w.theorem, 24) + pad(join(ps, ","), 12) + pad(w.status(), 13) +
             pad(join(cs, "; "), 28) + partner + "\n";
  }
  out.emit(j, table);
  return kOk;
}

int cmd_gt_factors(const std::string& series, long n, long k, const Output& out) {
  if (series.size() != 1) throw UsageError("--series must be B, C or D");
  auto fs = gelfand_tsetlin_factors(series[0], n, k);
  json j = json::array();
  std::string table = pad("factor", 10) + pad("level", 12) + pad("theorem", 20) + pad("realization", 22) + "algebra\n";
  bool failed = false;
  for (const auto& f : fs) {
    auto chk = verify_gt_factor(f);
    failed = failed || (chk && !*chk);
    std::string real = f.family ? std::string(family_tag(*f.family)) + "(" + std::to_string(f.fam_n) + "," +
                                      std::to_string(f.fam_m) + ") at " + f.psi.str()
                                : "-";
    json fj{{"name", f.name},
            {"algebra", f.algebra},
            {"level", f.level ? json(f.level->str()) : json(nullptr)},
            {"rank", f.rank},
            {"theorem", f.theorem.empty() ? json(nullptr) : json(f.theorem)},
            {"status", f.conjectural ? "conjectural" : "certified"}};
    if (f.family) {
      fj["realization"] = {{"family", std::string(family_tag(*f.family))},
                           {"n", f.fam_n},
                           {"m", f.fam_m},
                           {"psi", f.psi.str()}};
    } else {
      fj["realization"] = nullptr;
    }
    fj["check"] = chk ? json(*chk) : json(nullptr);
    j.push_back(fj);
    std::string tag = f.theorem.empty() ? "-" : f.theorem;
    if (f.conjectural) tag += "?";
    table += pad(f.name, 10) + pad(f.level ? f.level->str() : "-", 12) + pad(tag, 20) + pad(real, 22) + f.algebra +
             (chk ? (*chk ? "" : "  MISMATCH") : "") + "\n";
  }
  out.emit(j, table);
  return failed ? kVerificationFailed : kOk;
}

// ---------------------------------------------------------------------------
// Verification suites
// ---------------------------------------------------------------------------

std::size_t product_size(const std::map<std::string, Range>& ranges) {
  std::size_t n = 1;
  for (const auto& [k, r] : ranges) n *= static_cast<std::size_t>(r.hi - r.lo + 1);
  return n;
}

json sweep_json(const std::map<std::string, Range>& ranges) {
  json j = json::object();
  for (const auto& [k, r] : ranges) j[k] = {r.lo, r.hi};
  return j;
}

struct SuiteResult {
  json report;
  std::string table;
  bool ok = true;
};

SuiteResult suite_trialities(const std::map<std::string, Range>& R) {
  std::vector<std::pair<long, long>> pts;
  for (long n = R.at("n").lo; n <= R.at("n").hi; ++n)
    for (long m = R.at("m").lo; m <= R.at("m").hi; ++m)
      if (n >= 0 && m >= n && n + m >= 1) pts.emplace_back(n, m);
  auto reps = run_pool<TrialityReport>(pts.size(), [&](std::size_t i) { return verify_trialities(pts[i].first, pts[i].second); });
  SuiteResult out;
  json cases = json::array();
  long ids = 0, failed = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<std::string> bad;
    for (const auto& c : reps[i].checks) {
      ++ids;
      if (!c.pass) bad.push_back(c.name);
    }
    failed += static_cast<long>(bad.size());
    cases.push_back({{"n", pts[i].first}, {"m", pts[i].second}, {"identities", reps[i].checks.size()},
                     {"pass", bad.empty()}, {"failed", bad}});
    out.table += "(" + std::to_string(pts[i].first) + "," + std::to_string(pts[i].second) + ")  " +
                 std::to_string(reps[i].checks.size() - bad.size()) + "/" + std::to_string(reps[i].checks.size()) +
                 (bad.empty() ? "" : "  failed: " + join(bad, "; ")) + "\n";
  }
  out.ok = failed == 0;
  out.report = {{"cases", cases}, {"identities", ids}, {"failed", failed}};
  out.table += "trialities: " + std::to_string(pts.size()) + " pairs, " + std::to_string(ids) + " identities, " +
               std::to_string(failed) + " failed\n";
  return out;
}

SuiteResult suite_coincidences(const std::map<std::string, Range>& R, const std::string& only, bool all_rows) {
  std::vector<const CoincidenceEntry*> entries;
  for (const auto& e : all_coincidences())
    if (only.empty() || e.tag() == only || e.theorem() == only || e.tag() == "coinc:" + only ||
        e.theorem() == "coinc:" + only)
      entries.push_back(&e);
  if (entries.empty()) throw UsageError("no coincidence entry matches '" + only + "'");
  if (R.at("n").lo < 0 || R.at("m").lo < 0) throw UsageError("n and m must be non-negative");

  struct Task {
    const CoincidenceEntry* e;
    long n, m, r;
  };
  std::vector<Task> tasks;
  for (const auto* e : entries)
    for (long n = R.at("n").lo; n <= R.at("n").hi; ++n)
      for (long m = R.at("m").lo; m <= R.at("m").hi; ++m)
        for (long r = std::max(R.at("r").lo, min_target_rank(e->target)); r <= R.at("r").hi; ++r)
          tasks.push_back({e, n, m, r});
  auto checks = run_pool<CoincidenceCheck>(tasks.size(), [&](std::size_t i) {
    return verify_coincidence(*tasks[i].e, tasks[i].n, tasks[i].m, tasks[i].r);
  });
  auto symbolic = run_pool<SymbolicCheck>(entries.size(), [&](std::size_t i) { return verify_coincidence_symbolic(*entries[i]); });

  SuiteResult out;
  std::map<std::string, long> counts{{"pass", 0}, {"skipped", 0}, {"pole", 0}, {"fail", 0}};
  long degenerate = 0;
  json cases = json::array();
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& t = tasks[i];
    const auto& c = checks[i];
    std::string st(status_tag(c.status));
    ++counts[st];
    if (c.status == CoincidenceStatus::pass && c.degenerate) ++degenerate;
    json row{{"entry", t.e->tag()}, {"n", t.n}, {"m", t.m}, {"r", t.r}, {"status", st}};
    row["reason"] = c.reason.empty() ? json(nullptr) : json(c.reason);
    row["psi"] = c.psi ? json(c.psi->str()) : json(nullptr);
    row["s"] = c.s ? json(c.s->str()) : json(nullptr);
    row["c"] = c.c ? json(c.c->str()) : json(nullptr);
    row["degenerate"] = c.degenerate;
    cases.push_back(row);
    if (all_rows || c.status == CoincidenceStatus::fail) {
      out.table += pad(t.e->tag(), 22) + "(" + std::to_string(t.n) + "," + std::to_string(t.m) + "," +
                   std::to_string(t.r) + ")  " + pad(st, 8) + (c.psi ? "psi=" + c.psi->str() + " " : "") +
                   (c.s ? "s=" + c.s->str() + " " : "") + (c.degenerate ? "[degenerate c] " : "") + c.reason + "\n";
    }
  }
  json sym = json::array();
  long sym_failed = 0;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    sym.push_back({{"entry", entries[i]->tag()}, {"pass", symbolic[i].pass}});
    if (!symbolic[i].pass) {
      ++sym_failed;
      out.table += "symbolic " + entries[i]->tag() + " FAILED\n";
    }
  }
  json osp = json::array();
  long osp_failed = 0;
  if (only.empty()) {
    for (long m = 1; m <= 3; ++m)
      for (long n = 1; n <= 3; ++n) {
        bool ok = verify_osp_osp(m, n).all_pass();
        osp_failed += ok ? 0 : 1;
        osp.push_back({{"m", m}, {"n", n}, {"pass", ok}});
        if (!ok) out.table += "osp-osp (" + std::to_string(m) + "," + std::to_string(n) + ") FAILED\n";
      }
  }
  out.ok = counts["fail"] == 0 && sym_failed == 0 && osp_failed == 0;
  out.report = {{"cases", cases},
                {"counts", counts},
                {"degenerate", degenerate},
                {"symbolic", sym},
                {"osp_osp", osp}};
  out.table += "coincidences: " + std::to_string(entries.size()) + " entries symbolic " +
               std::to_string(entries.size() - sym_failed) + "/" + std::to_string(entries.size()) + "; sweep pass " +
               std::to_string(counts["pass"]) + " (degenerate c " + std::to_string(degenerate) + "), skipped " +
               std::to_string(counts["skipped"]) + ", pole " + std::to_string(counts["pole"]) + ", fail " +
               std::to_string(counts["fail"]);
  if (only.empty()) out.table += "; osp-osp " + std::to_string(9 - osp_failed) + "/9";
  out.table += "\n";
  return out;
}

SuiteResult suite_charges(const std::map<std::string, Range>& R) {
  if (R.at("n").lo < 0 || R.at("m").lo < 0) throw UsageError("n and m must be non-negative");
  struct Task {
    Family f;
    long n, m;
  };
  struct Res {
    std::string assembled = "skipped", curve = "skipped";
  };
  std::vector<Task> tasks;
  for (Family f : kAllFamilies)
    for (long n = R.at("n").lo; n <= R.at("n").hi; ++n)
      for (long m = R.at("m").lo; m <= R.at("m").hi; ++m) tasks.push_back({f, n, m});
  auto res = run_pool<Res>(tasks.size(), [&](std::size_t i) {
    auto fam = HookFamily::make(tasks[i].f, tasks[i].n, tasks[i].m);
    RatFunc closed = central_charge(fam);
    Res r;
    try {
      r.assembled = assemble_central_charge(fam) == closed ? "pass" : "fail";
    } catch (const DomainError&) {
    }
    try {
      r.curve = phi(fam).c == closed ? "pass" : "fail";
    } catch (const DomainError&) {
    }
    return r;
  });
  SuiteResult out;
  json cases = json::array();
  long failed = 0, checked = 0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    std::string tag = std::string(family_tag(tasks[i].f)) + "(" + std::to_string(tasks[i].n) + "," +
                      std::to_string(tasks[i].m) + ")";
    cases.push_back({{"family", std::string(family_tag(tasks[i].f))}, {"n", tasks[i].n}, {"m", tasks[i].m},
                     {"assembled", res[i].assembled}, {"curve", res[i].curve}});
    for (const auto* s : {&res[i].assembled, &res[i].curve}) {
      if (*s != "skipped") ++checked;
      if (*s == "fail") ++failed;
    }
    if (res[i].assembled == "fail" || res[i].curve == "fail")
      out.table += tag + "  assembled " + res[i].assembled + ", curve " + res[i].curve + "\n";
  }
  out.ok = failed == 0;
  out.report = {{"cases", cases}, {"checked", checked}, {"failed", failed}};
  out.table += "charges: " + std::to_string(tasks.size()) + " families, " + std::to_string(checked) +
               " comparisons, " + std::to_string(failed) + " failed\n";
  return out;
}

SuiteResult suite_singular(const std::map<std::string, Range>& R) {
  if (R.at("n").lo < 1 || R.at("u").lo < 1 || R.at("v").lo < 1) throw UsageError("n, u, v must be positive");
  struct Task {
    SimpleKind k;
    SingObject o;
    long n, u, v;
  };
  std::vector<Task> tasks;
  for (SimpleKind k : {SimpleKind::so_odd, SimpleKind::sp})
    for (SingObject o : {SingObject::affine, SingObject::principal_W})
      for (long n = R.at("n").lo; n <= R.at("n").hi; ++n)
        for (long v = R.at("v").lo; v <= R.at("v").hi; ++v)
          for (long u = std::max(R.at("u").lo, n + 1); u <= R.at("u").hi; ++u)
            if (std::gcd(u, v) == 1) tasks.push_back({k, o, n, u, v});
  auto res = run_pool<std::pair<BigRat, BigRat>>(tasks.size(), [&](std::size_t i) {
    const auto& t = tasks[i];
    return std::make_pair(sing_weight_general(t.k, t.o, t.n, t.u, t.v), sing_weight_closed(t.k, t.o, t.n, t.u, t.v));
  });
  SuiteResult out;
  json cases = json::array();
  long failed = 0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& t = tasks[i];
    bool ok = res[i].first == res[i].second;
    failed += ok ? 0 : 1;
    std::string alg = t.k == SimpleKind::sp ? "sp" : "so";
    std::string obj = t.o == SingObject::affine ? "affine" : "W";
    cases.push_back({{"algebra", alg}, {"object", obj}, {"n", t.n}, {"u", t.u}, {"v", t.v},
                     {"general", res[i].first.str()}, {"closed", res[i].second.str()}, {"pass", ok}});
    if (!ok)
      out.table += alg + " " + obj + " n=" + std::to_string(t.n) + " u=" + std::to_string(t.u) + " v=" +
                   std::to_string(t.v) + "  general " + res[i].first.str() + " vs closed " + res[i].second.str() + "\n";
  }
  out.ok = failed == 0;
  out.report = {{"cases", cases}, {"failed", failed}};
  out.table += "singular: " + std::to_string(tasks.size()) + " weights, " + std::to_string(failed) + " failed\n";
  return out;
}

int cmd_verify(const std::string& suite, const std::string& sweep, const std::string& entry, bool all_rows,
               std::size_t cap, const Output& out) {
  std::map<std::string, Range> defaults;
  if (suite == "trialities")
    defaults = {{"n", {0, 5}}, {"m", {0, 5}}};
  else if (suite == "coincidences")
    defaults = {{"n", {0, 4}}, {"m", {0, 4}}, {"r", {1, 4}}};
  else if (suite == "charges")
    defaults = {{"n", {0, 4}}, {"m", {0, 4}}};
  else
    defaults = {{"n", {1, 4}}, {"u", {1, 12}}, {"v", {1, 6}}};
  auto ranges = parse_sweep(sweep, defaults);
  if (product_size(ranges) > cap)
    throw UsageError("sweep has " + std::to_string(product_size(ranges)) + " tuples, above the cap of " +
                     std::to_string(cap));
  if (!entry.empty() && suite != "coincidences") throw UsageError("--entry applies to the coincidences suite only");

  SuiteResult r;
  if (suite == "trialities")
    r = suite_trialities(ranges);
  else if (suite == "coincidences")
    r = suite_coincidences(ranges, entry, all_rows);
  else if (suite == "charges")
    r = suite_charges(ranges);
  else
    r = suite_singular(ranges);

  json j{{"suite", suite}, {"sweep", sweep_json(ranges)}, {"pass", r.ok}};
  for (auto& [k, v] : r.report.items()) j[k] = v;
  out.emit(j, r.table);
  return r.ok ? kOk : kVerificationFailed;
}

void add_family_options(CLI::App* sub, FamilyArgs& a) {
  sub->add_option("--family", a.family, "family tag: 1B 1C 1D 1O 2B 2C 2D 2O")->required();
  sub->add_option("--n", a.n, "integer n >= 0")->required();
  sub->add_option("--m", a.m, "integer m >= 0")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact truncation curves, trialities and coincidences of orthosymplectic W-algebra cosets"};
  app.require_subcommand(1);
  Output out;
  auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", out.json_mode, "emit JSON on stdout"); };
  json_flag(&app);

  FamilyArgs fa;
  std::string psi, curve_n, curve_m, family, a_curve, b_curve, alg, obj, suite, sweep, entry, series;
  std::string r_range = "1..3", p_range = "1..6", q_range = "1..6";
  long sn = 0, su = 0, sv = 0, gn = 0, gk = 0;
  bool conjectural = false, all_rows = false;
  std::size_t cap = 1000000;

  auto* charge = app.add_subcommand("charge", "central charge of C_{iX}(n,m), symbolic in psi or at --psi");
  add_family_options(charge, fa);
  charge->add_option("--psi", psi, "exact rational psi");
  json_flag(charge);

  auto* desc = app.add_subcommand("describe", "identify W^psi_{iX}(n,m) and its coset");
  add_family_options(desc, fa);
  json_flag(desc);

  auto* gentype = app.add_subcommand("gentype", "strong generating type");
  add_family_options(gentype, fa);
  json_flag(gentype);

  auto* curve = app.add_subcommand("curve", "truncation curve (c(psi), lambda(psi))");
  curve->add_option("--family", family, "family tag")->required();
  curve->add_option("--n", curve_n, "rational n")->required();
  curve->add_option("--m", curve_m, "rational m")->required();
  curve->add_option("--psi", psi, "evaluate at this psi");
  json_flag(curve);

  auto* sing = app.add_subcommand("sing", "weight of the lowest singular vector at level -h^vee + u/v");
  sing->add_option("--algebra", alg, "sp or so")->required();
  sing->add_option("--object", obj, "affine or W")->required();
  sing->add_option("--n", sn, "rank")->required();
  sing->add_option("--u", su, "numerator u")->required();
  sing->add_option("--v", sv, "denominator v")->required();
  json_flag(sing);

  auto* inter = app.add_subcommand("intersect", "rational intersection points of two truncation curves");
  inter->add_option("--a", a_curve, "FAMILY,n,m")->required();
  inter->add_option("--b", b_curve, "FAMILY,n,m")->required();
  json_flag(inter);

  auto* verify = app.add_subcommand("verify", "run a verification suite over a sweep");
  verify->add_option("suite", suite, "trialities | coincidences | charges | singular")
      ->required()
      ->check(CLI::IsMember({"trialities", "coincidences", "charges", "singular"}));
  verify->add_option("--sweep", sweep, "ranges, e.g. n=0..3,m=0..3");
  verify->add_option("--entry", entry, "restrict coincidences to one entry or theorem tag");
  verify->add_flag("--all", all_rows, "list every sweep point in table mode");
  verify->add_option("--max-tuples", cap, "cap on the sweep size");
  json_flag(verify);

  auto* rp = app.add_subcommand("rational-points", "catalogued rationality witnesses of a family");
  add_family_options(rp, fa);
  rp->add_option("--r", r_range, "range of the auxiliary rank or level, e.g. 1..3");
  rp->add_option("--p", p_range, "range of p for two-parameter theorems");
  rp->add_option("--q", q_range, "range of q for two-parameter theorems");
  rp->add_flag("--include-conjectural", conjectural, "also list conjectural points");
  json_flag(rp);

  auto* gt = app.add_subcommand("gt-factors", "Gelfand-Tsetlin factors of L_k(g)");
  gt->add_option("--series", series, "B, C or D")->required();
  gt->add_option("--n", gn, "rank n >= 1")->required();
  gt->add_option("--k", gk, "level k >= 1")->required();
  json_flag(gt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*charge) return cmd_charge(fa, psi, out);
    if (*desc) return cmd_describe(fa, out);
    if (*gentype) return cmd_gentype(fa, out);
    if (*curve) return cmd_curve(family, curve_n, curve_m, psi, out);
    if (*sing) return cmd_sing(alg, obj, sn, su, sv, out);
    if (*inter) return cmd_intersect(a_curve, b_curve, out);
    if (*verify) return cmd_verify(suite, sweep, entry, all_rows, cap, out);
    if (*rp) return cmd_rational_points(fa, r_range, p_range, q_range, conjectural, out);
    if (*gt) return cmd_gt_factors(series, gn, gk, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const osptri::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
