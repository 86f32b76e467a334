#include "coisocap/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <sstream>

#include "coisocap/bounds.hpp"
#include "coisocap/errors.hpp"
#include "coisocap/json_io.hpp"
#include "coisocap/kfun.hpp"
#include "coisocap/spectra.hpp"
#include "coisocap/verify.hpp"

namespace coisocap::cli {

namespace {

using json_io::Json;
using std::int64_t;

enum class Format { text, json, csv };

Format resolve_format(const std::string& flag, Format fallback) {
  if (flag.empty()) return fallback;
  if (flag == "json") return Format::json;
  if (flag == "csv") return Format::csv;
  return Format::text;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string witness_text(const kfun::WitnessedValue& v) { return v.witness ? v.witness->to_string() : ""; }

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

// ---------------------------------------------------------------------------

struct KfunArgs {
  std::string fn;
  int64_t n = 0;
  std::string d;
};

int cmd_kfun(const KfunArgs& a, Format fmt, std::ostream& out) {
  kfun::WitnessedValue v;
  std::string query;
  std::string dtext;
  if (a.fn == "K") {
    if (!a.d.empty()) throw ParseError("kfun K takes a single argument n");
    v = kfun::big_k(a.n);
    query = "K(" + std::to_string(a.n) + ")";
  } else {
    if (a.d.empty()) throw ParseError("kfun " + a.fn + " needs both n and d");
    const Rational d = Rational::parse(a.d);
    dtext = d.to_string();
    if (a.fn == "keq") {
      if (!d.is_integer()) throw ParseError("keq needs an integer d, got '" + a.d + "'");
      v = kfun::keq(a.n, d.num());
    } else {
      v = kfun::kk(a.n, d);
    }
    query = a.fn + "(" + std::to_string(a.n) + "," + dtext + ")";
  }

  switch (fmt) {
    case Format::text:
      out << query << " = " << v.value;
      if (v.witness) out << ", witness " << v.witness->to_string();
      out << '\n';
      break;
    case Format::json:
      emit(out, json_io::value_document(query, json_io::to_json(v.value), json_io::witness_json(v.witness)));
      break;
    case Format::csv:
      out << "function,n,d,value,witness\n"
          << a.fn << ',' << a.n << ',' << dtext << ',' << v.value << ',' << csv_field(witness_text(v)) << '\n';
      break;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct TableArgs {
  std::string fn;
  int64_t from = 0;
  int64_t to = 0;
  std::string d;
};

int cmd_table(const TableArgs& a, Format fmt, std::ostream& out) {
  if (a.from < 1 || a.to < a.from) {
    throw OutOfRange("table needs 1 <= from <= to, got " + std::to_string(a.from) + ".." + std::to_string(a.to));
  }
  if (a.fn == "K" && !a.d.empty()) throw ParseError("table K takes no --d");
  std::optional<Rational> fixed_d;
  if (!a.d.empty()) fixed_d = Rational::parse(a.d);
  if (a.fn == "keq" && fixed_d && !fixed_d->is_integer()) throw ParseError("keq needs an integer d");

  struct Row {
    int64_t n;
    Rational d;
    kfun::WitnessedValue v;
  };
  std::vector<Row> rows;
  if (a.fn == "K") {
    auto values = kfun::big_k_range(a.from, a.to);
    for (int64_t n = a.from; n <= a.to; ++n) rows.push_back({n, Rational(n), std::move(values[n - a.from])});
  } else {
    for (int64_t n = a.from; n <= a.to; ++n) {
      const Rational d = fixed_d.value_or(Rational(n));
      rows.push_back({n, d, a.fn == "keq" ? kfun::keq(n, d.num()) : kfun::kk(n, d)});
    }
  }

  const bool with_d = a.fn != "K";
  const std::string query = "table " + a.fn + " " + std::to_string(a.from) + " " + std::to_string(a.to) +
                            (fixed_d ? " --d " + fixed_d->to_string() : "");
  switch (fmt) {
    case Format::text: {
      out << "n:";
      for (const auto& r : rows) out << ' ' << r.n;
      out << '\n';
      if (with_d) {
        out << "d:";
        for (const auto& r : rows) out << ' ' << r.d;
        out << '\n';
      }
      out << (with_d ? a.fn + "(n,d):" : "K(n):");
      for (const auto& r : rows) out << ' ' << r.v.value;
      out << '\n';
      break;
    }
    case Format::csv:
      out << (with_d ? "n,d,value,witness\n" : "n,value,witness\n");
      for (const auto& r : rows) {
        out << r.n << ',';
        if (with_d) out << r.d << ',';
        out << r.v.value << ',' << csv_field(witness_text(r.v)) << '\n';
      }
      break;
    case Format::json: {
      Json values = Json::array();
      for (const auto& r : rows) {
        Json row{{"n", r.n}};
        if (with_d) row["d"] = r.d.to_string();
        row["value"] = json_io::to_json(r.v.value);
        row["witness"] = json_io::witness_json(r.v.witness);
        values.push_back(std::move(row));
      }
      emit(out, json_io::value_document(query, std::move(values), nullptr));
      break;
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------

void emit_interval(const std::string& query, const bounds::BoundInterval& b, Format fmt, std::ostream& out) {
  auto ids = [](const std::vector<bounds::Citation>& prov) {
    std::string s;
    for (const auto& c : prov) s += (s.empty() ? "" : " ") + std::string(c.id);
    return s;
  };
  switch (fmt) {
    case Format::json: emit(out, json_io::interval_document(query, b)); break;
    case Format::text:
      out << query << " in [" << b.lower() << ", " << b.upper() << "]\n"
          << "  lower: " << ids(b.lower_prov()) << '\n'
          << "  upper: " << ids(b.upper_prov()) << '\n';
      if (b.witness()) out << "  witness: " << b.witness()->to_string() << '\n';
      for (const auto& n : b.notes()) out << "  note: " << n << '\n';
      break;
    case Format::csv:
      out << "query,lower,upper,lower_provenance,upper_provenance\n"
          << csv_field(query) << ',' << b.lower() << ',' << b.upper() << ',' << csv_field(ids(b.lower_prov())) << ','
          << csv_field(ids(b.upper_prov())) << '\n';
      break;
  }
}

struct BoundArgs {
  std::string expr;
  int64_t n = 0;
  std::string d;
  std::string area;
  bool closed_aspherical = false;
};

int cmd_bound(const std::string& kind, const BoundArgs& a, Format fmt, std::ostream& out) {
  if (kind == "energy") {
    const auto obj = spectra::parse_object(a.expr);
    emit_interval("e(" + obj.to_string() + ")", bounds::energy_bounds(obj), fmt, out);
  } else if (kind == "capacity") {
    const Rational d = Rational::parse(a.d);
    if (!d.is_integer()) throw ParseError("capacity needs an integer d");
    emit_interval("A_coiso^" + d.to_string() + "(B^" + std::to_string(2 * a.n) + ")",
                  bounds::capacity_bounds(a.n, d.num()), fmt, out);
  } else if (kind == "squeeze") {
    const Rational d = Rational::parse(a.d);
    emit_interval("emb_" + d.to_string() + "(B^" + std::to_string(2 * a.n) + ", Z^" + std::to_string(2 * a.n) + ")",
                  bounds::squeeze_bounds(a.n, d), fmt, out);
  } else if (kind == "width") {
    RatPi area;
    try {
      area = RatPi::parse(a.area);
    } catch (const OutOfRange& e) {
      throw ParseError(e.what());
    }
    emit_interval(std::string("e(B(") + area.to_string() + ") x M')",
                  bounds::width_energy_bound(area, a.closed_aspherical), fmt, out);
  } else {  // lagrangian
    const Rational d = Rational::parse(a.d);
    if (!d.is_integer()) throw ParseError("lagrangian needs an integer d");
    const auto r = bounds::lagrangian_comparison(a.n, d.num());
    const std::string query = "c_L vs A_coiso^" + d.to_string() + "(B^" + std::to_string(2 * a.n) + ")";
    switch (fmt) {
      case Format::json:
        emit(out, json_io::value_document(
                      query, Json{{"c_L", json_io::to_json(r.c_l)}, {"lower_A", json_io::to_json(r.lower_a)},
                                  {"strict", r.strict}},
                      nullptr));
        break;
      case Format::text:
        out << query << ": c_L = " << r.c_l << ", lower_A = " << r.lower_a << ", strict = " << std::boolalpha
            << r.strict << '\n';
        break;
      case Format::csv:
        out << "n,d,c_L,lower_A,strict\n"
            << a.n << ',' << d << ',' << r.c_l << ',' << r.lower_a << ',' << (r.strict ? "true" : "false") << '\n';
        break;
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_spectrum(const std::string& expr, Format fmt, std::ostream& out) {
  const auto obj = spectra::parse_object(expr);
  const auto s = spectra::product_spectrum(obj);
  const auto min_action = spectra::minimal_action(s);
  const auto split = spectra::split_min_action(obj);
  Json notes = Json::array();
  for (const auto& atom : obj.atoms()) {
    if (auto* v = atom.as_stiefel(); v && v->k >= 2) {
      notes.push_back("Stiefel spectrum taken as area*Z by rescaling; only its minimal action is certified");
      break;
    }
  }
  switch (fmt) {
    case Format::json:
      emit(out, json_io::value_document(obj.to_string(),
                                        Json{{"spectrum", json_io::to_json(s)},
                                             {"minimal_action", json_io::to_json(min_action)},
                                             {"split_min_action", json_io::to_json(split)},
                                             {"coiso_dim", obj.coiso_dim()},
                                             {"ambient_half_dim", obj.ambient_half_dim()}},
                                        nullptr, std::move(notes)));
      break;
    case Format::text:
      out << obj.to_string() << '\n'
          << "  spectrum: " << s.to_string() << '\n'
          << "  minimal action: " << min_action << '\n'
          << "  split minimal action: " << split << '\n'
          << "  dimension: " << obj.coiso_dim() << " in R^" << 2 * obj.ambient_half_dim() << '\n';
      break;
    case Format::csv:
      out << "object,spectrum,minimal_action,split_min_action,coiso_dim,ambient_half_dim\n"
          << csv_field(obj.to_string()) << ',' << s.to_string() << ',' << min_action << ',' << split << ','
          << obj.coiso_dim() << ',' << obj.ambient_half_dim() << '\n';
      break;
  }
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_verify(const std::string& suite_name, int64_t nmax, std::optional<int64_t> dmax_opt, Format fmt,
               std::ostream& out, std::ostream& err) {
  const auto suite = verify::parse_suite(suite_name);
  if (!suite) throw ParseError("unknown verify suite '" + suite_name + "'");
  if (nmax < 1) throw ParseError("verify needs --nmax >= 1, got " + std::to_string(nmax));
  const int64_t dmax = dmax_opt.value_or(2 * nmax);
  if (dmax < 0) throw ParseError("verify needs --dmax >= 0, got " + std::to_string(dmax));

  const auto report = verify::run(*suite, nmax, dmax);
  const std::string query =
      "verify " + suite_name + " --nmax " + std::to_string(nmax) + " --dmax " + std::to_string(dmax);
  switch (fmt) {
    case Format::json: {
      Json checks = Json::array();
      for (const auto& c : report.checks) checks.push_back(json_io::to_json(c));
      emit(out, json_io::value_document(query, Json{{"checks", std::move(checks)}, {"ok", report.ok()}}, nullptr));
      break;
    }
    case Format::text: {
      std::int64_t failed = 0;
      for (const auto& c : report.checks) {
        out << (c.fail_count == 0 ? "PASS " : "FAIL ") << c.name << "  [" << c.range << "]  pass=" << c.pass_count
            << " fail=" << c.fail_count;
        if (c.first_failure) out << "  first_failure=" << *c.first_failure;
        out << '\n';
        failed += c.fail_count != 0;
      }
      out << query << ": " << report.checks.size() << " checks, " << failed << " failed\n";
      break;
    }
    case Format::csv:
      out << "name,range,pass_count,fail_count,first_failure\n";
      for (const auto& c : report.checks) {
        out << csv_field(c.name) << ',' << csv_field(c.range) << ',' << c.pass_count << ',' << c.fail_count << ','
            << csv_field(c.first_failure.value_or("")) << '\n';
      }
      break;
  }
  err << "wall_time_ms=" << report.wall_time_ms << '\n';
  return report.ok() ? kOk : kVerifyFailure;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact capacity functions, action spectra and certified bound intervals", "coisocap"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));

  KfunArgs kf;
  auto* kfun_cmd = app.add_subcommand("kfun", "Evaluate K(n), keq(n,d) or kk(n,d) with a witness");
  kfun_cmd->add_option("function", kf.fn)->required()->check(CLI::IsMember({"K", "keq", "kk"}));
  kfun_cmd->add_option("n", kf.n)->required();
  kfun_cmd->add_option("d", kf.d);

  TableArgs tb;
  auto* table_cmd = app.add_subcommand("table", "Tabulate K, keq or kk over a range of n");
  table_cmd->add_option("function", tb.fn)->required()->check(CLI::IsMember({"K", "keq", "kk"}));
  table_cmd->add_option("from", tb.from)->required();
  table_cmd->add_option("to", tb.to)->required();
  table_cmd->add_option("--d", tb.d, "Fixed d for every row (default d = n)");

  BoundArgs bd;
  auto* bound_cmd = app.add_subcommand("bound", "Certified bound intervals");
  bound_cmd->require_subcommand(1);
  auto* energy = bound_cmd->add_subcommand("energy", "Displacement energy of a product object");
  energy->add_option("expr", bd.expr)->required();
  auto* capacity = bound_cmd->add_subcommand("capacity", "Regular coisotropic capacity of B^{2n}");
  capacity->add_option("n", bd.n)->required();
  capacity->add_option("d", bd.d)->required();
  auto* squeeze = bound_cmd->add_subcommand("squeeze", "Squeezing constant emb_d(B^{2n}, Z^{2n})");
  squeeze->add_option("n", bd.n)->required();
  squeeze->add_option("d", bd.d)->required();
  auto* width = bound_cmd->add_subcommand("width", "Energy against Gromov width of a ball");
  width->add_option("a", bd.area)->required();
  width->add_flag("--closed-aspherical", bd.closed_aspherical, "Stabilize by a closed aspherical factor M'");
  auto* lagrangian = bound_cmd->add_subcommand("lagrangian", "Compare c_L(B^{2n}) with the capacity lower bound");
  lagrangian->add_option("n", bd.n)->required();
  lagrangian->add_option("d", bd.d)->required();

  std::string expr;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Action spectrum of a product object");
  spectrum_cmd->add_option("expr", expr)->required();

  std::string suite;
  int64_t nmax = 0;
  std::optional<int64_t> dmax;
  auto* verify_cmd = app.add_subcommand("verify", "Sweep the invariants over a grid");
  verify_cmd->add_option("suite", suite)->required()->check(
      CLI::IsMember({"kfun-props", "oracle", "bounds-props", "all"}));
  verify_cmd->add_option("--nmax", nmax)->required();
  verify_cmd->add_option("--dmax", dmax);

  std::vector<const char*> cargv;
  cargv.reserve(argv.size());
  for (const auto& a : argv) cargv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (*kfun_cmd) return cmd_kfun(kf, resolve_format(format, Format::text), out);
    if (*table_cmd) return cmd_table(tb, resolve_format(format, Format::text), out);
    if (*spectrum_cmd) return cmd_spectrum(expr, resolve_format(format, Format::json), out);
    if (*verify_cmd) return cmd_verify(suite, nmax, dmax, resolve_format(format, Format::text), out, err);
    const Format bfmt = resolve_format(format, Format::json);
    for (auto* sub : {energy, capacity, squeeze, width, lagrangian})
      if (*sub) return cmd_bound(sub->get_name(), bd, bfmt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  err << "error: no command\n";
  return kParseError;
}

}  // namespace coisocap::cli
