#include "gwp1/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gwp1/verify.hpp"
#include "json.hpp"

namespace gwp1 {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Row {
  std::vector<std::pair<std::string, std::string>> keys;
  std::string value;
};

struct Table {
  std::string command;
  std::vector<std::pair<std::string, std::string>> truncation;
  std::vector<Row> rows;
};

struct Config {
  int q_max = 2, u_lo = -8, u_hi = 2, z_order = 3;
  int energy = -1;  // -1: chosen per command
  std::string format = "text";
  int parallel = 1;
  // invariant
  std::vector<int> zero, inf, one, hyper;
  std::string kind = "both";
  bool y_basis = false;
  // hodge, hurwitz
  std::string mu;
  int genus = -100;
  // gfun
  int n = 0, m = 0, d = -1;
  std::string route = "operator";
  bool connected = false;
  // verify
  std::string suite;
  int kmax = 3, budget = 2, window = 7;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

void render(const Table& t, const std::string& format, std::ostream& out) {
  if (format == "json") {
    ordered_json j;
    j["command"] = t.command;
    ordered_json tr = ordered_json::object();
    for (const auto& [k, v] : t.truncation) tr[k] = v;
    j["truncation"] = tr;
    j["rows"] = ordered_json::array();
    for (const auto& r : t.rows) {
      ordered_json keys = ordered_json::object();
      for (const auto& [k, v] : r.keys) keys[k] = v;
      j["rows"].push_back({{"keys", keys}, {"value", r.value}});
    }
    out << j.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    std::vector<std::string> cols;
    for (const auto& r : t.rows)
      for (const auto& kv : r.keys)
        if (std::find(cols.begin(), cols.end(), kv.first) == cols.end()) cols.push_back(kv.first);
    for (const auto& c : cols) out << csv_field(c) << ",";
    out << "value\n";
    for (const auto& r : t.rows) {
      for (const auto& c : cols) {
        auto it = std::find_if(r.keys.begin(), r.keys.end(), [&](const auto& kv) { return kv.first == c; });
        out << (it == r.keys.end() ? "" : csv_field(it->second)) << ",";
      }
      out << csv_field(r.value) << "\n";
    }
    return;
  }
  out << "# " << t.command;
  for (const auto& [k, v] : t.truncation) out << " " << k << "=" << v;
  out << "\n";
  for (const auto& r : t.rows) {
    for (const auto& [k, v] : r.keys) out << k << "=" << v << " ";
    out << ": " << r.value << "\n";
  }
}

Partition parse_mu(const std::string& s) {
  if (s.empty()) throw UsageError("--mu is required");
  Partition p = Partition::parse(s);
  if (p.empty()) throw UsageError("--mu must be a nonempty partition");
  return p;
}

std::vector<std::pair<std::string, std::string>> truncation_keys(const Config& c) {
  return {{"q_max", std::to_string(c.q_max)},
          {"u_lo", std::to_string(c.u_lo)},
          {"u_hi", std::to_string(c.u_hi)},
          {"z_order", std::to_string(c.z_order)}};
}

Truncation truncation_of(const Config& c) {
  Truncation tr = uniform_truncation(c.q_max, c.u_lo, c.u_hi, c.z_order);
  validate(tr);
  return tr;
}

// ---- commands ----

int cmd_invariant(const Config& c, Table& t) {
  InsertionList ins;
  Cls first = c.y_basis ? Cls::One : Cls::Zero, second = c.y_basis ? Cls::Hyperplane : Cls::Infinity;
  for (int k : c.zero) ins.push_back({first, k});
  for (int k : c.inf) ins.push_back({second, k});
  if (!c.one.empty() || !c.hyper.empty()) {
    if (!c.zero.empty() || !c.inf.empty())
      if (!c.y_basis) throw UsageError("--one/--hyper cannot be mixed with --zero/--inf; use --y-basis");
    for (int k : c.one) ins.push_back({Cls::One, k});
    for (int k : c.hyper) ins.push_back({Cls::Hyperplane, k});
  }
  for (const auto& x : ins)
    if (x.k < 0) throw UsageError("descendant indices must be >= 0");
  if (ins.size() > 8) throw UsageError("at most 8 insertions");
  int status = 0;
  for (const char* kind : {"connected", "disconnected"}) {
    if (c.kind != "both" && c.kind != kind) continue;
    bool conn = std::string(kind) == "connected";
    Series s = conn ? tau_connected(ins, c.q_max) : tau_disconnected(ins, c.q_max);
    for (const auto& [k, coef] : s.terms()) {
      int u = k[U];
      if (u < c.u_lo || u > c.u_hi) continue;
      int d = k[Q];
      // brackets only carry even powers u^{2g-2}
      int g = (u + 2) / 2;
      // polynomiality in t holds for stable connected brackets
      bool stable = d > 0 || 2 * g - 2 + static_cast<int>(ins.size()) > 0;
      if (conn && stable && !coef.is_polynomial()) status = 1;
      t.rows.push_back({{{"kind", kind}, {"d", std::to_string(d)}, {"g", std::to_string(g)}}, coef.str()});
    }
  }
  return status;
}

std::vector<int> genera(const Config& c) {
  if (c.genus != -100) return {c.genus};
  std::vector<int> gs;
  for (int u = c.u_lo; u <= c.u_hi; ++u)
    if ((u + 2) % 2 == 0) gs.push_back((u + 2) / 2);
  return gs;
}

int cmd_hodge(const Config& c, Table& t) {
  Partition mu = parse_mu(c.mu);
  int status = 0;
  for (int g : genera(c)) {
    int u = 2 * g - 2;
    Rational ch = elsv_hodge(g, mu);
    Coef op = hodge_at_integers(mu, u, u).coeff(key_of({{U, u}}));
    bool match = op == Coef(ch);
    if (!match) status = 1;
    t.rows.push_back({{{"mu", mu.str()}, {"g", std::to_string(g)}, {"operator", op.str()}, {"character", Coef(ch).str()},
                       {"match", match ? "yes" : "no"}},
                      Coef(ch).str()});
  }
  return status;
}

int cmd_hurwitz(const Config& c, Table& t) {
  Partition mu = parse_mu(c.mu);
  int status = 0;
  for (int g : genera(c)) {
    if (g < 0) continue;
    Rational ch = hurwitz_character(g, mu);
    int b = branch_points(g, mu);
    std::string oracle = "n/a", match = "n/a";
    if (mu.size() <= 6 && b <= 8) {
      Rational o = hurwitz_oracle(g, mu);
      oracle = o.get_str();
      match = o == ch ? "yes" : "no";
      if (o != ch) status = 1;
    }
    t.rows.push_back({{{"mu", mu.str()}, {"g", std::to_string(g)}, {"b", std::to_string(b)}, {"character", ch.get_str()},
                       {"oracle", oracle}, {"match", match}},
                      ch.get_str()});
  }
  return status;
}

int cmd_gfun(const Config& c, Table& t) {
  if (c.n < 0 || c.m < 0 || c.n > 3 || c.m > 3) throw UsageError("--n and --m must lie in [0, 3]");
  Truncation tr = truncation_of(c);
  Series s;
  if (c.connected) {
    unsigned all = (1u << (c.n + c.m)) - 1;
    s = g_connected_family(c.n, c.m, tr).at(all);
    if (c.d >= 0) s = s.select(Q, c.d);
  } else if (c.d < 0) {
    s = g_all_degrees(c.n, c.m, tr);
  } else if (c.route == "localization") {
    s = g_localization(c.n, c.m, c.d, tr);
  } else {
    s = g_operator(c.n, c.m, c.d, tr);
  }
  std::vector<std::pair<std::string, int>> slots{{"q", Q}, {"u", U}};
  for (int i = 0; i < c.n; ++i) slots.push_back({"z" + std::to_string(i + 1), Z1 + i});
  for (int j = 0; j < c.m; ++j) slots.push_back({"w" + std::to_string(j + 1), W1 + j});
  for (const auto& [k, coef] : s.terms()) {
    Row r;
    for (const auto& [name, slot] : slots) r.keys.push_back({name, std::to_string(k[slot])});
    r.value = coef.str();
    t.rows.push_back(std::move(r));
  }
  return 0;
}

// ---- verification suites ----

Report suite_commutators(const Config& c) {
  int cap = c.energy >= 0 ? c.energy : 4;
  return check_commutator_A(-2, c.kmax, cap, std::max(c.kmax + 1, c.z_order));
}

Report suite_toda(const Config& c) {
  Report r = check_toda(c.q_max, c.budget, c.u_hi);
  r.merge(check_translation(c.q_max, c.budget, c.u_hi));
  return r;
}

Report suite_divisor_string(const Config& c) {
  Report r;
  int orders = std::min(c.z_order, 2);
  for (int d = 0; d <= c.q_max; ++d)
    for (auto [n, m] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {0, 2}})
      r.merge(check_divisor(d, n, m, uniform_truncation(d, c.u_lo, c.u_hi, orders)));
  std::vector<InsertionList> lists{{},
                                   {{Cls::Zero, 1}},
                                   {{Cls::Infinity, 2}},
                                   {{Cls::Zero, 2}, {Cls::Infinity, 1}},
                                   {{Cls::Infinity, 1}, {Cls::Infinity, 2}}};
  for (int g = 0; g <= 1; ++g)
    for (int d = 0; d <= c.q_max; ++d)
      for (const auto& ins : lists) r.merge(check_string(g, d, ins));
  return r;
}

Report suite_pluecker(const Config& c) {
  std::vector<std::array<Rational, 4>> samples{{Rational(1), 0, 0, 0},
                                               {Rational(1, 2), -1, Rational(2, 3), 0},
                                               {Rational(-3, 2), Rational(1, 3), 1, Rational(1, 4)}};
  Report r = check_pluecker(samples, c.q_max, 3);
  r.merge(check_T_conjugation(c.energy >= 0 ? c.energy : 3, c.z_order));
  r.merge(check_translation(c.q_max, c.budget, std::min(c.u_hi, 0)));
  return r;
}

Report suite_dressing(const Config& c) {
  Report r = check_dressing_coefficients(std::max(c.kmax, 4));
  r.merge(check_dressing_identity(c.kmax, c.window));
  return r;
}

Report suite_routes(const Config& c) {
  Report r;
  int d_max = c.d >= 0 ? c.d : c.q_max;
  Truncation tr = uniform_truncation(d_max, c.u_lo, c.u_hi, c.z_order);
  validate(tr);
  for (int d = 0; d <= d_max; ++d)
    for (int n = 0; n <= 2; ++n)
      for (int m = 0; n + m <= 2; ++m) {
        Series op = g_operator(n, m, d, tr);
        r.compare("fixed-point sum = operator formula",
                  "d=" + std::to_string(d) + " n=" + std::to_string(n) + " m=" + std::to_string(m),
                  g_localization(n, m, d, tr), op, op.prec());
      }
  return r;
}

int cmd_verify(const Config& c, Table& t) {
  static const std::vector<std::pair<std::string, std::function<Report(const Config&)>>> suites{
      {"commutators", suite_commutators}, {"toda", suite_toda},         {"divisor-string", suite_divisor_string},
      {"pluecker", suite_pluecker},       {"dressing", suite_dressing}, {"routes", suite_routes}};
  Report all;
  bool found = false;
  for (const auto& [name, fn] : suites)
    if (c.suite == "all" || c.suite == name) {
      all.merge(fn(c));
      found = true;
    }
  if (!found) throw UsageError("unknown suite: " + c.suite);
  for (const auto& e : all.entries) {
    Row r{{{"identity", e.identity}, {"location", e.location}, {"status", e.pass ? "pass" : "FAIL"}}, e.actual};
    if (!e.pass) r.value = "expected " + e.expected + ", actual " + e.actual;
    t.rows.push_back(std::move(r));
  }
  return all.ok() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant Gromov-Witten theory of P^1 through the infinite wedge"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* s) {
    s->add_option("--qmax", c.q_max, "largest degree in q")->check(CLI::NonNegativeNumber);
    s->add_option("--ulo", c.u_lo, "lowest power of u");
    s->add_option("--uhi", c.u_hi, "highest power of u");
    s->add_option("--zorder", c.z_order, "order in each z/w variable")->check(CLI::NonNegativeNumber);
    s->add_option("--energy", c.energy, "Fock energy cap for state sweeps")->check(CLI::NonNegativeNumber);
    s->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "csv", "json"}));
    s->add_option("--parallel", c.parallel, "worker count (accepted; work runs on one thread)")
        ->check(CLI::PositiveNumber);
  };

  CLI::App* inv = app.add_subcommand("invariant", "descendant brackets <prod tau_k(0) prod tau_l(inf)>_{g,d}");
  common(inv);
  inv->add_option("--zero", c.zero, "descendant indices at the fixed point 0");
  inv->add_option("--inf", c.inf, "descendant indices at the fixed point infinity");
  inv->add_option("--one", c.one, "descendant indices of the unit class");
  inv->add_option("--hyper", c.hyper, "descendant indices of the hyperplane class");
  inv->add_option("--kind", c.kind, "connected, disconnected or both")
      ->check(CLI::IsMember({"connected", "disconnected", "both"}));
  inv->add_flag("--y-basis", c.y_basis, "read --zero as the unit class and --inf as the hyperplane class");

  CLI::App* hod = app.add_subcommand("hodge", "linear Hodge integrals H_g(mu): operator route and character route");
  common(hod);
  hod->add_option("--mu", c.mu, "partition, e.g. 3,1")->required();
  hod->add_option("--genus", c.genus, "genus (default: all in the u-window)");

  CLI::App* hur = app.add_subcommand("hurwitz", "Hurwitz numbers: character formula and symmetric-group count");
  common(hur);
  hur->add_option("--mu", c.mu, "partition, e.g. 3,1")->required();
  hur->add_option("--genus", c.genus, "genus (default: all in the u-window)");

  CLI::App* gf = app.add_subcommand("gfun", "raw n+m point series G_d(z, w, u)");
  common(gf);
  gf->add_option("--n", c.n, "number of z variables");
  gf->add_option("--m", c.m, "number of w variables");
  gf->add_option("--d", c.d, "degree (default: all degrees up to --qmax)");
  gf->add_option("--route", c.route, "computation route")->check(CLI::IsMember({"operator", "localization"}));
  gf->add_flag("--connected", c.connected, "connected part");

  CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
  common(ver);
  ver->add_option("suite", c.suite, "commutators|toda|divisor-string|pluecker|dressing|routes|all")
      ->required()
      ->check(CLI::IsMember({"commutators", "toda", "divisor-string", "pluecker", "dressing", "routes", "all"}));
  ver->add_option("--kmax", c.kmax, "largest k for commutators and dressing")->check(CLI::NonNegativeNumber);
  ver->add_option("--budget", c.budget, "x-degree budget for the Toda suite")->check(CLI::NonNegativeNumber);
  ver->add_option("--window", c.window, "matrix window E for the dressing identity")->check(CLI::PositiveNumber);
  ver->add_option("--d", c.d, "largest degree for the routes suite");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  Table t;
  t.truncation = truncation_keys(c);
  int status = 0;
  try {
    if (inv->parsed()) {
      t.command = "invariant";
      status = cmd_invariant(c, t);
    } else if (hod->parsed()) {
      t.command = "hodge";
      status = cmd_hodge(c, t);
    } else if (hur->parsed()) {
      t.command = "hurwitz";
      status = cmd_hurwitz(c, t);
    } else if (gf->parsed()) {
      t.command = "gfun";
      status = cmd_gfun(c, t);
    } else {
      t.command = "verify " + c.suite;
      status = cmd_verify(c, t);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  render(t, c.format, out);
  return status;
}

}  // namespace gwp1
