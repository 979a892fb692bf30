#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "qtwist/fermionic.hpp"
#include "qtwist/genfunc.hpp"
#include "qtwist/qeuler.hpp"
#include "qtwist/zeta.hpp"
#include "records.hpp"
#include "suites.hpp"
#include "values.hpp"

namespace qtwist::cli {

namespace {

// Raised before any computation; always exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Errors that depend only on the parameters, not on the index being computed.
bool is_usage(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::argument:
    case ErrorKind::precondition:
    case ErrorKind::method:
    case ErrorKind::divergence:
    case ErrorKind::branch_ambiguity:
      return true;
    default:
      return false;
  }
}

struct Outcome {
  std::vector<Record> records;
  bool failed = false;
  std::vector<std::string> notes;  // printed to stderr
};

struct Common {
  std::string format = "plain";
  std::string out_path;
  bool no_timing = false;
};

Number number_flag(const std::string& name, const std::string& text) {
  try {
    return parse_number(text);
  } catch (const Error& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

Rational exact_flag(const std::string& name, const std::string& text) {
  const Number v = number_flag(name, text);
  if (!v.exact) throw UsageError("--" + name + " must be rational here, got '" + text + "'");
  return *v.exact;
}

Real real_flag(const std::string& name, const std::string& text) {
  const Number v = number_flag(name, text);
  if (!v.is_real()) throw UsageError("--" + name + " must be real, got '" + text + "'");
  return v.value.real();
}

std::vector<int> range_flag(const std::string& name, const std::string& text) {
  try {
    return parse_range(text);
  } catch (const Error& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

// Runs one cell; usage-class library errors abort the command, the rest are recorded.
bool guarded(Record& record, const std::function<void()>& body, const std::vector<std::string>& result_keys) {
  try {
    body();
    record.add("error", std::monostate{});
    return true;
  } catch (const Error& e) {
    if (is_usage(e.kind())) throw;
    for (const auto& key : result_keys) record.add(key, std::monostate{});
    record.add("error", std::string(to_string(e.kind())) + ": " + e.what());
    return false;
  }
}

// ---- euler / poly / genocchi ------------------------------------------------

enum class Family { euler, poly, genocchi };

struct SequenceFlags {
  std::string indices;
  int r = 1;
  std::string q;
  std::string w;
  std::string x;
  std::string method = "closed";
  double tol = 1e-12;
};

Outcome sequence(Family family, const SequenceFlags& f) {
  const Number q = number_flag("q", f.q);
  const Number w = number_flag("w", f.w);
  const std::vector<int> indices = range_flag(family == Family::genocchi ? "m" : "n", f.indices);
  if (f.r < 1) throw UsageError("--r must be >= 1");
  for (int k : indices) {
    if (k < 0) throw UsageError("indices must be >= 0");
  }
  if (f.method != "closed" && f.method != "series") throw UsageError("--method must be closed or series");
  const bool series = f.method == "series";
  if (series && family == Family::genocchi) throw UsageError("the series method applies to euler and poly");
  if (series && !(f.tol > 0)) throw UsageError("--tol must be positive");
  if (family == Family::poly && f.x.empty()) throw UsageError("poly needs --x");

  std::optional<Number> x;
  if (!f.x.empty()) {
    x = number_flag("x", f.x);
    if (!x->is_real()) throw UsageError("--x must be real");
  }
  const bool exact = q.exact && w.exact && !series && (!x || (x->exact && x->exact->is_integer()));
  const std::string index_key = family == Family::genocchi ? "m" : "n";

  Outcome outcome;
  for (int k : indices) {
    Record record;
    record.add(index_key, static_cast<long>(k)).add("r", static_cast<long>(f.r)).add("q", q.str()).add("w", w.str());
    if (x) record.add("x", x->str());
    record.add("mode", std::string(exact ? "exact" : "floating")).add("method", f.method);

    const bool ok = guarded(record, [&] {
      if (exact) {
        const ExactContext ctx{*q.exact, *w.exact, f.r};
        std::optional<long> xl;
        if (x) xl = x->exact->numerator().get_si();
        Rational v;
        if (family == Family::genocchi) {
          const GenocchiQuery<Rational> query{k, ctx, xl};
          v = xl ? genocchi_poly(query) : genocchi_number(query);
        } else {
          const EulerQuery<Rational> query{k, ctx, xl};
          v = xl ? euler_poly_closed(query) : euler_number_closed(query);
        }
        record.add("value", v.str()).add("error_bound", std::monostate{});
        return;
      }
      const FloatContext ctx{q.value, w.value, f.r};
      std::optional<Real> xr;
      if (x) xr = x->value.real();
      if (series) {
        const EulerQuery<Complex> query{k, ctx, xr};
        const SeriesValue v = xr ? euler_poly_series(query, f.tol) : euler_number_series(query, f.tol);
        record.add("value", v.value).add("error_bound", v.tail_bound);
        return;
      }
      Complex v;
      if (family == Family::genocchi) {
        const GenocchiQuery<Complex> query{k, ctx, xr};
        v = xr ? genocchi_poly(query) : genocchi_number(query);
      } else {
        const EulerQuery<Complex> query{k, ctx, xr};
        v = xr ? euler_poly_closed(query) : euler_number_closed(query);
      }
      record.add("value", v).add("error_bound", std::monostate{});
    }, {"value", "error_bound"});
    outcome.failed = outcome.failed || !ok;
    outcome.records.push_back(std::move(record));
  }
  return outcome;
}

// ---- zeta -------------------------------------------------------------------

struct ZetaFlags {
  std::string s;
  std::string q;
  std::string w;
  int r = 1;
  std::string x;
  std::string method = "direct";
  double tol = 1e-17;
  double delta = 0.05;
};

Outcome zeta(const ZetaFlags& f) {
  const Number s = number_flag("s", f.s);
  const Real q = real_flag("q", f.q);
  const Number w = number_flag("w", f.w);
  if (f.method != "direct" && f.method != "accelerated") throw UsageError("--method must be direct or accelerated");
  if (!(f.tol > 0)) throw UsageError("--tol must be positive");
  std::optional<Number> x;
  if (!f.x.empty()) x = number_flag("x", f.x);

  ZetaQuery query{s.value, q, w.value, f.r, std::nullopt,
                  f.method == "direct" ? ZetaMethod::direct : ZetaMethod::accelerated};
  if (x) query.x = x->value;
  ZetaOptions options;
  options.tolerance = f.tol;
  options.delta = f.delta;

  Record record;
  record.add("s", s.str()).add("q", number_flag("q", f.q).str()).add("w", w.str()).add("r", static_cast<long>(f.r));
  if (x) record.add("x", x->str());

  Outcome outcome;
  try {
    const ZetaValue v = x ? hurwitz_zeta(query, options) : lerch_zeta(query, options);
    record.add("method", std::string(to_string(v.method)))
        .add("value", v.value)
        .add("error_estimate", v.error_estimate)
        .add("terms", v.terms)
        .add("rigorous", v.rigorous)
        .add("error", std::monostate{});
  } catch (const ZetaNonConvergence& e) {
    const ZetaValue& v = e.partial();
    record.add("method", std::string(to_string(v.method)))
        .add("value", v.value)
        .add("error_estimate", v.error_estimate)
        .add("terms", v.terms)
        .add("rigorous", false)
        .add("error", std::string(to_string(e.kind())) + ": " + e.what());
    outcome.failed = true;
  }
  outcome.records.push_back(std::move(record));
  return outcome;
}

// ---- witt -------------------------------------------------------------------

struct WittFlags {
  long p = 3;
  std::string q;
  std::string w = "1";
  int r = 1;
  int n = 0;
  int levels = 3;
  bool check = false;
};

Outcome witt(const WittFlags& f) {
  const Rational q = exact_flag("q", f.q);
  const Rational w = exact_flag("w", f.w);
  if (f.levels < 1) throw UsageError("--levels must be >= 1");
  const PadicParams params(q, w, f.p);
  const WittReport report = witt_verify(f.n, params, f.r, f.levels);

  Outcome outcome;
  for (const auto& level : report.levels) {
    Record record;
    record.add("p", f.p)
        .add("q", q.str())
        .add("w", w.str())
        .add("r", static_cast<long>(f.r))
        .add("n", static_cast<long>(f.n))
        .add("N", static_cast<long>(level.level))
        .add("S_N", level.approximant.str())
        .add("target", report.target.str())
        .add("residual", level.residual.str())
        .add("valuation", level.valuation.str());
    outcome.records.push_back(std::move(record));
  }
  if (f.check && !strictly_increasing(report.valuations())) {
    outcome.failed = true;
    outcome.notes.push_back("check failed: residual valuations are not strictly increasing");
  }
  return outcome;
}

// ---- table ------------------------------------------------------------------

struct TableFlags {
  bool classical = false;
  std::string kind = "euler";
  std::string n = "0..10";
  std::string r = "1";
  std::string q;
  std::string w = "1";
  std::string x = "0";
  long h = 1;
};

Outcome table(const TableFlags& f) {
  const std::vector<int> ns = range_flag("n", f.n);
  const std::vector<int> rs = range_flag("r", f.r);
  for (int r : rs) {
    if (r < 1) throw UsageError("--r must be >= 1");
  }
  int top = 0;
  for (int n : ns) {
    if (n < 0) throw UsageError("indices must be >= 0");
    top = std::max(top, n);
  }
  const auto order = static_cast<std::size_t>(top);
  Outcome outcome;

  if (f.kind == "comparator") {
    const Rational q = exact_flag("q", f.q.empty() ? std::string("1") : f.q);
    for (int r : rs) {
      const FormalSeries series = cos_genocchi_series(f.h, r, q, order);
      for (int n : ns) {
        outcome.records.push_back(Record()
                                      .add("n", static_cast<long>(n))
                                      .add("h", f.h)
                                      .add("r", static_cast<long>(r))
                                      .add("q", q.str())
                                      .add("value", series[static_cast<std::size_t>(n)].str()));
      }
    }
    return outcome;
  }
  if (f.kind != "euler" && f.kind != "genocchi") throw UsageError("--kind must be euler, genocchi or comparator");

  const Rational w = exact_flag("w", f.w);
  const Rational x = exact_flag("x", f.x);
  if (f.classical) {
    for (int r : rs) {
      const FormalSeries series = f.kind == "euler" ? classical_euler_series(w, r, x, order)
                                                    : classical_genocchi_series(w, r, x, order);
      for (int n : ns) {
        outcome.records.push_back(Record()
                                      .add("n", static_cast<long>(n))
                                      .add("w", w.str())
                                      .add("r", static_cast<long>(r))
                                      .add("x", x.str())
                                      .add("value", series[static_cast<std::size_t>(n)].str()));
      }
    }
    return outcome;
  }

  if (f.q.empty()) throw UsageError("table needs --q (or --classical for q = 1)");
  const Rational q = exact_flag("q", f.q);
  if (!x.is_integer()) throw UsageError("--x must be an integer in exact mode");
  const long xl = x.numerator().get_si();
  for (int r : rs) {
    const ExactContext ctx{q, w, r};
    for (int n : ns) {
      Record record;
      record.add("n", static_cast<long>(n)).add("q", q.str()).add("w", w.str()).add("r", static_cast<long>(r));
      record.add("x", x.str());
      const bool ok = guarded(record, [&] {
        const Rational v = f.kind == "euler" ? euler_poly_closed(EulerQuery<Rational>{n, ctx, xl})
                                             : genocchi_poly(GenocchiQuery<Rational>{n, ctx, xl});
        record.add("value", v.str());
      }, {"value"});
      outcome.failed = outcome.failed || !ok;
      outcome.records.push_back(std::move(record));
    }
  }
  return outcome;
}

// ---- verify -----------------------------------------------------------------

struct VerifyFlags {
  bool all = false;
  bool interpolation = false;
  std::vector<std::string> identities;
};

Outcome verify(const VerifyFlags& f) {
  std::vector<const Suite*> chosen;
  if (f.all || (f.identities.empty() && !f.interpolation)) {
    for (const auto& suite : suites()) chosen.push_back(&suite);
  } else {
    if (f.interpolation) chosen.push_back(find_suite("interpolation"));
    for (const auto& name : f.identities) {
      const Suite* suite = find_suite(name);
      if (!suite) {
        std::string known;
        for (const auto& s : suites()) known += (known.empty() ? "" : ", ") + std::string(s.name);
        throw UsageError("unknown identity '" + name + "'; known: " + known);
      }
      chosen.push_back(suite);
    }
  }

  Outcome outcome;
  for (const Suite* suite : chosen) {
    Record record;
    record.add("identity", std::string(suite->name)).add("summary", std::string(suite->summary));
    try {
      const SuiteResult result = suite->run();
      record.add("cases", result.cases).add("failures", result.failures);
      if (result.max_deviation) {
        record.add("max_deviation", *result.max_deviation);
      } else {
        record.add("max_deviation", std::monostate{});
      }
      record.add("passed", result.passed()).add("detail", result.detail);
      outcome.failed = outcome.failed || !result.passed();
    } catch (const Error& e) {
      record.add("cases", 0L).add("failures", 1L).add("max_deviation", std::monostate{}).add("passed", false);
      record.add("detail", std::string(to_string(e.kind())) + ": " + e.what());
      outcome.failed = true;
    }
    outcome.records.push_back(std::move(record));
  }
  return outcome;
}

Format format_of(const std::string& name) {
  if (name == "plain") return Format::plain;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw UsageError("--format must be plain, csv or json");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twisted q-Euler and q-Genocchi numbers of higher order, their q-zeta functions, and identity checks"};
  app.name("qtwist-cli");
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--format", common.format, "plain, csv (RFC 4180) or json")->capture_default_str();
  app.add_option("--out", common.out_path, "write records to this file instead of standard output");
  app.add_flag("--no-timing", common.no_timing, "omit the elapsed-time footer");

  std::function<Outcome()> action;

  auto add_sequence = [&](Family family, const char* name, const char* help) {
    auto flags = std::make_shared<SequenceFlags>();
    CLI::App* sub = app.add_subcommand(name, help);
    const char* index = family == Family::genocchi ? "--m" : "--n";
    sub->add_option(index, flags->indices, "index, range a..b, or list a,b,c")->required();
    sub->add_option("--r", flags->r, "order r >= 1")->capture_default_str();
    sub->add_option("--q", flags->q, "q as a, a/b, decimal or a+bi; q = 1 is the classical case (table --classical)")
        ->required();
    sub->add_option("--w", flags->w, "twist w; 1 + w q^l must not vanish")->required();
    sub->add_option("--x", flags->x, "polynomial argument; integer for exact values, real >= 0 otherwise")
        ->required(family == Family::poly);
    if (family != Family::genocchi) {
      sub->add_option("--method", flags->method, "closed, or series (needs |w| < 1 and 0 < |q| < 1)")
          ->capture_default_str();
      sub->add_option("--tol", flags->tol, "tail bound target for the series method")->capture_default_str();
    }
    sub->callback([&action, flags, family] { action = [flags, family] { return sequence(family, *flags); }; });
  };
  add_sequence(Family::euler, "euler", "w-q-Euler numbers E_{n,w,q}^{(r)}");
  add_sequence(Family::poly, "poly", "w-q-Euler polynomials E_{n,w,q}^{(r)}(x)");
  add_sequence(Family::genocchi, "genocchi", "w-q-Genocchi numbers G_{m,w,q}^{(r)}, or polynomials with --x");

  auto zeta_flags = std::make_shared<ZetaFlags>();
  CLI::App* zeta_cmd = app.add_subcommand("zeta", "Lerch-type q-zeta function, or the Hurwitz form with --x");
  zeta_cmd->add_option("--s", zeta_flags->s, "complex s, e.g. -3 or 2+1i")->required();
  zeta_cmd->add_option("--q", zeta_flags->q, "real q in (0, 1)")->required();
  zeta_cmd->add_option("--w", zeta_flags->w, "twist with |w| <= 1, w != -1")->required();
  zeta_cmd->add_option("--r", zeta_flags->r, "order r >= 1")->capture_default_str();
  zeta_cmd->add_option("--x", zeta_flags->x, "Hurwitz shift, not 0, -1, -2, ...");
  zeta_cmd->add_option("--method", zeta_flags->method,
                       "direct (rigorous, needs |w| <= 1 - delta) or accelerated (Euler transform, |w/(1+w)| < 1)")
      ->capture_default_str();
  zeta_cmd->add_option("--tol", zeta_flags->tol, "relative stopping tolerance")->capture_default_str();
  zeta_cmd->add_option("--delta", zeta_flags->delta, "margin from the unit circle for the direct method")
      ->capture_default_str();
  zeta_cmd->callback([&action, zeta_flags] { action = [zeta_flags] { return zeta(*zeta_flags); }; });

  auto witt_flags = std::make_shared<WittFlags>();
  CLI::App* witt_cmd = app.add_subcommand("witt", "p-adic Riemann sums S_N against E_n and the valuation of the residual");
  witt_cmd->add_option("--p", witt_flags->p, "odd prime p")->capture_default_str();
  witt_cmd->add_option("--q", witt_flags->q, "rational q with v_p(q - 1) >= 1")->required();
  witt_cmd->add_option("--w", witt_flags->w, "rational w with v_p(w - 1) >= 1")->capture_default_str();
  witt_cmd->add_option("--r", witt_flags->r, "order r >= 1")->capture_default_str();
  witt_cmd->add_option("--n", witt_flags->n, "index n >= 0")->capture_default_str();
  witt_cmd->add_option("--levels", witt_flags->levels, "levels N = 1..levels")->capture_default_str();
  witt_cmd->add_flag("--check", witt_flags->check, "exit 1 unless the valuations strictly increase");
  witt_cmd->callback([&action, witt_flags] { action = [witt_flags] { return witt(*witt_flags); }; });

  auto table_flags = std::make_shared<TableFlags>();
  CLI::App* table_cmd = app.add_subcommand("table", "tables over n and r, exact");
  table_cmd->set_help_flag("--help", "print this help message and exit");
  table_cmd->add_flag("--classical", table_flags->classical, "q = 1: coefficients of (2/(w e^t + 1))^r e^{xt}");
  table_cmd->add_option("--kind", table_flags->kind, "euler, genocchi, or comparator for the (h, r)-Genocchi numbers")
      ->capture_default_str();
  table_cmd->add_option("--n", table_flags->n, "index range")->capture_default_str();
  table_cmd->add_option("--r", table_flags->r, "order range")->capture_default_str();
  table_cmd->add_option("--q", table_flags->q, "rational q (not with --classical)");
  table_cmd->add_option("--w", table_flags->w, "rational w")->capture_default_str();
  table_cmd->add_option("--x", table_flags->x, "argument x")->capture_default_str();
  table_cmd->add_option("--h", table_flags->h, "h for --kind comparator")->capture_default_str();
  table_cmd->callback([&action, table_flags] { action = [table_flags] { return table(*table_flags); }; });

  auto verify_flags = std::make_shared<VerifyFlags>();
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the identity suites; exit 0 iff all pass");
  verify_cmd->add_flag("--all", verify_flags->all, "every suite (the default)");
  verify_cmd->add_flag("--interpolation", verify_flags->interpolation, "the interpolation suite");
  std::string identity_help = "suite name, repeatable:";
  for (const auto& suite : suites()) identity_help += " " + std::string(suite.name);
  verify_cmd->add_option("--identity", verify_flags->identities, identity_help);
  verify_cmd->callback([&action, verify_flags] { action = [verify_flags] { return verify(*verify_flags); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Format format = format_of(common.format);
    const auto start = std::chrono::steady_clock::now();
    const Outcome outcome = action();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

    std::ofstream file;
    if (!common.out_path.empty()) {
      file.open(common.out_path, std::ios::binary);
      if (!file) throw UsageError("cannot open --out " + common.out_path);
    }
    std::ostream& sink = common.out_path.empty() ? out : file;
    render(sink, outcome.records, format);
    for (const auto& note : outcome.notes) err << note << '\n';
    if (!common.no_timing) {
      std::ostringstream footer;
      footer.precision(3);
      footer << "# elapsed " << std::fixed << elapsed.count() << " s\n";
      (format == Format::plain ? sink : err) << footer.str();
    }
    return outcome.failed ? kExitFailure : kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    return is_usage(e.kind()) ? kExitUsage : kExitFailure;
  }
}

}  // namespace qtwist::cli
