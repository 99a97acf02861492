#include "fragile/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "fragile/constructions.hpp"
#include "fragile/errors.hpp"
#include "fragile/measurement.hpp"
#include "fragile/mermin.hpp"
#include "fragile/phase_torus.hpp"
#include "fragile/separability.hpp"
#include "fragile/state_io.hpp"

namespace fragile::cli {
namespace {

using nlohmann::json;
constexpr double kPi = std::numbers::pi;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class VerdictFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Table };

struct Config {
  Tolerances tol;
  Format format = Format::Json;
  std::uint64_t seed = 0;
};

struct GlobalFlags {
  std::optional<std::string> config_path;
  std::optional<std::string> format;
  std::optional<double> probability;
  std::optional<double> eigenvalue;
  std::optional<double> residual;
  std::optional<double> phase;
  std::optional<std::uint64_t> seed;
};

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "table") return Format::Table;
  throw UsageError("format must be json or table, got '" + text + "'");
}

void set_tolerance(double& slot, double value, const char* name) {
  if (!(value > 0.0)) throw UsageError(std::string("tolerance ") + name + " must be positive");
  slot = value;
}

Config resolve_config(const GlobalFlags& flags) {
  Config config;
  std::optional<std::string> path = flags.config_path;
  if (!path)
    if (const char* env = std::getenv(kConfigEnv); env != nullptr && *env != '\0') path = env;
  if (path) {
    std::ifstream in(*path);
    if (!in) throw UsageError("cannot open config file " + *path);
    json doc;
    try {
      doc = json::parse(in);
      if (doc.contains("format")) config.format = parse_format(doc.at("format").get<std::string>());
      if (doc.contains("seed")) config.seed = doc.at("seed").get<std::uint64_t>();
      if (doc.contains("tolerances")) {
        const auto& t = doc.at("tolerances");
        if (t.contains("probability"))
          set_tolerance(config.tol.probability, t.at("probability").get<double>(), "probability");
        if (t.contains("eigenvalue"))
          set_tolerance(config.tol.eigenvalue, t.at("eigenvalue").get<double>(), "eigenvalue");
        if (t.contains("residual"))
          set_tolerance(config.tol.residual, t.at("residual").get<double>(), "residual");
        if (t.contains("phase"))
          set_tolerance(config.tol.phase, t.at("phase").get<double>(), "phase");
      }
    } catch (const json::exception& e) {
      throw UsageError("config file " + *path + ": " + e.what());
    }
  }
  if (flags.format) config.format = parse_format(*flags.format);
  if (flags.seed) config.seed = *flags.seed;
  if (flags.probability) set_tolerance(config.tol.probability, *flags.probability, "probability");
  if (flags.eigenvalue) set_tolerance(config.tol.eigenvalue, *flags.eigenvalue, "eigenvalue");
  if (flags.residual) set_tolerance(config.tol.residual, *flags.residual, "residual");
  if (flags.phase) set_tolerance(config.tol.phase, *flags.phase, "phase");
  return config;
}

// ---- shared helpers -------------------------------------------------------

std::vector<double> times_pi(const std::vector<double>& units) {
  std::vector<double> out(units.size());
  std::transform(units.begin(), units.end(), out.begin(), [](double u) { return u * kPi; });
  return out;
}

// A JSON array ("[0, 0.5]") or a comma-separated list ("0,0.5").
std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> values;
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') {
    try {
      values = json::parse(text).get<std::vector<double>>();
    } catch (const json::exception& e) {
      throw UsageError(std::string("cannot parse number list: ") + e.what());
    }
    return values;
  }
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("cannot parse number '" + item + "'");
    }
  }
  return values;
}

std::vector<Axis> parse_axis_string(const std::string& text, int n) {
  std::vector<Axis> axes;
  try {
    axes = parse_axes(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (static_cast<int>(axes.size()) != n)
    throw UsageError("--axes needs one axis per particle (" + std::to_string(n) + ")");
  return axes;
}

StateVector load(const std::string& path, std::ostream& err) {
  auto loaded = read_state(path);
  if (loaded.renormalized) err << "note: " << path << " was renormalized\n";
  return std::move(loaded.state);
}

std::string fixed(double x, int digits = 6) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

// ---- construct --------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  int n = 3;
  double q = 0.5;
  std::string axis = "z";
  int sign = -1;
  std::optional<std::string> phases;
  bool random_phases = false;
  std::optional<std::string> alphas;
  std::optional<std::string> betas;
  std::optional<std::string> out_path;
};

StateVector build_state(const ConstructArgs& a, const Config& config) {
  StateVector s = [&]() -> StateVector {
    if (a.family == "bernstein") return special_bernstein(a.n);
    if (a.family == "general-bernstein") {
      std::vector<double> phases;
      if (a.phases) {
        phases = times_pi(parse_number_list(*a.phases));
      } else if (a.random_phases) {
        std::mt19937_64 rng(config.seed);
        std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
        phases.resize(dimension_of(a.n) / 2);
        for (double& p : phases) p = angle(rng);
      } else {
        throw UsageError("general-bernstein needs --phases or --random");
      }
      return general_bernstein(a.n, TermPhaseVector(a.n, phases));
    }
    if (a.family == "ghz") {
      if (a.axis != "x" && a.axis != "z") throw UsageError("--axis must be x or z");
      return ghz(a.n, a.axis == "x" ? Axis::X : Axis::Z, a.sign);
    }
    if (a.family == "inhomogeneous") return inhomogeneous_bernstein3(a.q);
    throw UsageError("unknown family '" + a.family + "'");
  }();

  if (a.alphas || a.betas) {
    PhaseAssignment p;
    p.alphas = a.alphas ? times_pi(parse_number_list(*a.alphas))
                        : std::vector<double>(std::size_t(s.n_particles()), 0.0);
    p.betas = a.betas ? times_pi(parse_number_list(*a.betas))
                      : std::vector<double>(std::size_t(s.n_particles()), 0.0);
    s = local_phase_transform(s, p);
  }
  return s;
}

void run_construct(const ConstructArgs& a, const Config& config, std::ostream& out) {
  const auto s = build_state(a, config);
  if (a.out_path) {
    write_state(*a.out_path, s);
    if (config.format == Format::Table)
      out << "wrote " << s.n_particles() << "-particle state to " << *a.out_path << '\n';
    else
      emit(out, {{"written", *a.out_path}, {"n", s.n_particles()}});
    return;
  }
  if (config.format == Format::Json) {
    emit(out, state_to_json(s));
    return;
  }
  out << "bits" << std::string(std::size_t(std::max(0, s.n_particles() - 4)), ' ')
      << "  re          im\n";
  for (BasisIndex i = 0; i < BasisIndex(s.dim()); ++i)
    if (s[i] != std::complex<double>(0.0))
      out << std::setw(std::max(4, s.n_particles())) << std::left << format_pattern(i, s.n_particles())
          << std::right << "  " << std::setw(10) << fixed(s[i].real()) << "  " << std::setw(10)
          << fixed(s[i].imag()) << '\n';
}

// ---- stats / independence ----------------------------------------------------

int independent_through(const IndependenceReport& r) {
  int k = 1;
  for (const auto& v : r.per_size) {
    if (!v.independent) break;
    k = v.size;
  }
  return k;
}

json report_json(const IndependenceReport& r) {
  json sizes = json::array();
  for (const auto& v : r.per_size) {
    json entry = {{"size", v.size},
                  {"independent", v.independent},
                  {"worst_deviation", v.worst_deviation},
                  {"witness", nullptr}};
    if (v.witness) {
      entry["witness"] = v.witness->to_string(r.n_particles);
      entry["joint"] = v.witness_joint;
      entry["product"] = v.witness_product;
    }
    sizes.push_back(std::move(entry));
  }
  std::string axes;
  for (Axis a : r.axes) axes += axis_char(a);
  return {{"axes", axes},
          {"max_checked", r.max_checked},
          {"independent_through", independent_through(r)},
          {"single_up", r.single_up},
          {"per_size", std::move(sizes)},
          {"n_wise", {{"joint", r.n_wise_joint}, {"product", r.n_wise_product}}}};
}

void report_table(const IndependenceReport& r, std::ostream& out) {
  out << "size  independent  worst_deviation  witness\n";
  for (const auto& v : r.per_size) {
    out << std::setw(4) << v.size << "  " << std::setw(11) << (v.independent ? "yes" : "no") << "  "
        << std::setw(15) << fixed(v.worst_deviation, 12) << "  ";
    if (v.witness)
      out << v.witness->to_string(r.n_particles) << " joint " << fixed(v.witness_joint, 12)
          << " vs product " << fixed(v.witness_product, 12);
    out << '\n';
  }
  out << "independent through " << independent_through(r) << "; all-up joint "
      << fixed(r.n_wise_joint, 12) << " vs product " << fixed(r.n_wise_product, 12) << '\n';
}

struct StateArgs {
  std::string state;
  bool expect_pass = false;
};

void run_stats(const StateArgs& a, const Config& config, std::ostream& out, std::ostream& err) {
  const auto s = load(a.state, err);
  const int n = s.n_particles();
  const std::vector<Axis> all_z(std::size_t(n), Axis::Z);
  const auto report = kwise_independence_report(s, all_z, n, config.tol);
  std::optional<BernsteinVerdict> cert;
  if (n >= 3) cert = bernstein_certificate(s, config.tol);

  const auto dist = outcome_distribution(s);
  if (config.format == Format::Json) {
    json d = json::array();
    for (BasisIndex i = 0; i < dist.size(); ++i)
      if (dist[i] > 0.0) d.push_back({{"bits", format_pattern(i, n)}, {"p", dist[i]}});
    json c = nullptr;
    if (cert)
      c = {{"is_bernstein", cert->is_bernstein},
           {"reason", cert->reason ? json(to_string(*cert->reason)) : json(nullptr)},
           {"statistics_reason",
            cert->statistics_reason ? json(to_string(*cert->statistics_reason)) : json(nullptr)}};
    emit(out, {{"n", n}, {"distribution", std::move(d)}, {"report", report_json(report)}, {"certificate", c}});
  } else {
    out << "label" << std::string(std::size_t(std::max(0, n - 5)), ' ') << "  probability\n";
    for (BasisIndex i = 0; i < dist.size(); ++i)
      if (dist[i] > 0.0)
        out << std::setw(std::max(5, n)) << std::left << format_pattern(i, n) << std::right << "  "
            << fixed(dist[i], 12) << '\n';
    report_table(report, out);
    if (cert)
      out << "bernstein certificate: " << (cert->is_bernstein ? "pass" : "fail")
          << (cert->reason ? std::string(" (") + to_string(*cert->reason) + ")" : "") << '\n';
  }
  if (a.expect_pass && !(cert && cert->is_bernstein))
    throw VerdictFailed("state does not pass the Bernstein certificate");
}

struct IndependenceArgs {
  std::string state;
  std::string axes;
  std::optional<int> max_k;
  std::optional<int> expect_through;
};

void run_independence(const IndependenceArgs& a, const Config& config, std::ostream& out,
                      std::ostream& err) {
  const auto s = load(a.state, err);
  const int n = s.n_particles();
  const auto axes = a.axes.empty() ? std::vector<Axis>(std::size_t(n), Axis::Z)
                                   : parse_axis_string(a.axes, n);
  const int max_k = a.max_k.value_or(n);
  if (max_k < 1 || max_k > n) throw UsageError("--max-k must lie in [1, N]");
  const auto report = kwise_independence_report(s, axes, max_k, config.tol);
  if (config.format == Format::Json)
    emit(out, report_json(report));
  else
    report_table(report, out);
  if (a.expect_through && independent_through(report) < *a.expect_through)
    throw VerdictFailed("outcomes are not independent through size " +
                        std::to_string(*a.expect_through));
}

// ---- fragility ---------------------------------------------------------------

void run_fragility(const StateArgs& a, const Config& config, std::ostream& out, std::ostream& err) {
  const auto s = load(a.state, err);
  const auto report = fragility_report(s, config.tol);
  if (config.format == Format::Json) {
    json per = json::array();
    for (const auto& t : report.per_particle) {
      json splits = json::array();
      for (const auto& sp : t.splits)
        splits.push_back({{"a", sp.split.side_a}, {"b", sp.split.side_b}, {"ppt_min", sp.ppt_min}});
      per.push_back({{"traced", t.traced},
                     {"splits", std::move(splits)},
                     {"residual", t.residual ? json(*t.residual) : json(nullptr)},
                     {"decomposition", t.decomposition},
                     {"verdict", to_string(t.verdict)}});
    }
    emit(out, {{"n", report.n_particles}, {"fragile", report.fragile()}, {"per_particle", std::move(per)}});
  } else {
    out << "traced  verdict       residual          decomposition  min ppt\n";
    for (const auto& t : report.per_particle) {
      double min_ppt = 0.0;
      for (const auto& sp : t.splits) min_ppt = std::min(min_ppt, sp.ppt_min);
      out << std::setw(6) << t.traced << "  " << std::setw(12) << std::left << to_string(t.verdict)
          << std::right << "  " << std::setw(16) << (t.residual ? fixed(*t.residual, 12) : "-")
          << "  " << std::setw(13) << std::left << t.decomposition << std::right << "  "
          << fixed(min_ppt, 12) << '\n';
    }
    out << "fragile: " << (report.fragile() ? "yes" : "no") << '\n';
  }
  if (a.expect_pass && !report.fragile()) throw VerdictFailed("state is not fragile");
}

// ---- orbit -------------------------------------------------------------------

struct OrbitArgs {
  std::optional<int> n;
  std::string phases;
  bool expect_pass = false;
};

void run_orbit(const OrbitArgs& a, const Config& config, std::ostream& out) {
  const auto units = parse_number_list(a.phases);
  int n = 0;
  if (a.n) {
    n = *a.n;
  } else {
    // 2^(N-1) phases determine N.
    for (int k = 3; k <= kMaxStateParticles; ++k)
      if (dimension_of(k) / 2 == units.size()) n = k;
    if (n == 0) throw UsageError("--phases must hold 2^(N-1) angles for some N >= 3");
  }
  if (n < 3 || n > kMaxStateParticles) throw UsageError("--n must lie in [3, 16]");
  if (units.size() != dimension_of(n) / 2)
    throw UsageError("--phases must hold 2^(N-1) = " + std::to_string(dimension_of(n) / 2) + " angles");

  const auto m = orbit_membership(n, TermPhaseVector(n, times_pi(units)), config.tol);
  const auto lattice = period_lattice(n);
  const auto gap = dimension_gap(n);

  std::vector<double> deltas_pi;
  if (m.deltas)
    for (double d : *m.deltas) deltas_pi.push_back(d / kPi);

  if (config.format == Format::Json) {
    json gens = json::array();
    for (const auto& g : lattice.generators) {
      std::vector<int> num(g.numerators.data(), g.numerators.data() + g.numerators.size());
      gens.push_back({{"numerators", num}, {"denominator", g.denominator}, {"state_period", is_state_period(n, g)}});
    }
    emit(out, {{"n", n},
               {"reachable", m.reachable},
               {"deltas_pi", m.deltas ? json(deltas_pi) : json(nullptr)},
               {"constant_pi", m.constant / kPi},
               {"max_residual_mod_2pi", m.max_residual_mod_2pi},
               {"lattice_pi", std::move(gens)},
               {"dimension_gap", {{"orbit_dim", gap.orbit_dim}, {"bernstein_dim", gap.bernstein_dim}}}});
  } else {
    out << "reachable: " << (m.reachable ? "yes" : "no") << "  (max residual "
        << fixed(m.max_residual_mod_2pi, 12) << ")\n";
    if (m.deltas) {
      out << "deltas / pi:";
      for (double d : deltas_pi) out << ' ' << fixed(d);
      out << '\n';
    }
    out << "period lattice generators (units of pi):\n";
    for (const auto& g : lattice.generators) {
      out << "  (";
      for (Eigen::Index i = 0; i < g.numerators.size(); ++i)
        out << (i ? ", " : "") << g.numerators(i) << (g.denominator == 1 ? "" : "/" + std::to_string(g.denominator));
      out << ")" << (is_state_period(n, g) ? "" : "  not a state period") << '\n';
    }
    out << "orbit dimension " << gap.orbit_dim << ", Bernstein torus dimension " << gap.bernstein_dim << '\n';
  }
  if (a.expect_pass && !m.reachable) throw VerdictFailed("phase vector is not in the orbit");
}

// ---- mermin -----------------------------------------------------------------

struct MerminArgs {
  int n = 3;
  int max_size = 4;
  int sign = -1;
};

void run_mermin(const MerminArgs& a, const Config& config, std::ostream& out) {
  if (a.sign != 1 && a.sign != -1) throw UsageError("--sign must be +1 or -1");
  const auto relations = mermin_observables(a.n);
  if (a.max_size < 1 || static_cast<std::size_t>(a.max_size) > relations.size())
    throw UsageError("--max-size must lie in [1, " + std::to_string(relations.size()) + "]");
  const auto state = ghz(a.n, Axis::Z, a.sign);
  std::vector<double> measured;
  for (const auto& r : relations) measured.push_back(observable_eigenvalue(state, r.axes, config.tol.residual));
  const auto sets = find_contradictions(relations, a.max_size);

  if (config.format == Format::Json) {
    json table = json::array();
    for (std::size_t i = 0; i < relations.size(); ++i)
      table.push_back({{"axes", relations[i].axes}, {"predicted", relations[i].sign}, {"measured", measured[i]}});
    json contradictions = json::array();
    for (const auto& c : sets) {
      json axes = json::array();
      for (auto i : c.relation_indices) axes.push_back(relations[i].axes);
      contradictions.push_back(std::move(axes));
    }
    emit(out, {{"n", a.n},
               {"sign", a.sign},
               {"relations", std::move(table)},
               {"contradiction_count", sets.size()},
               {"contradictions", std::move(contradictions)}});
  } else {
    out << std::setw(a.n) << std::left << "axes" << std::right << "  predicted  measured\n";
    for (std::size_t i = 0; i < relations.size(); ++i)
      out << std::setw(std::max(4, a.n)) << std::left << relations[i].axes << std::right << "  " << std::setw(9)
          << relations[i].sign << "  " << std::setw(8) << fixed(measured[i], 3) << '\n';
    out << sets.size() << " contradiction set(s) up to size " << a.max_size << '\n';
    for (const auto& c : sets) {
      out << " ";
      for (auto i : c.relation_indices) out << ' ' << relations[i].axes;
      out << '\n';
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bernstein and GHZ state analysis: statistics, fragility, phase orbits, Mermin relations"};
  app.name("fragile");
  app.require_subcommand(1);

  GlobalFlags flags;
  auto add_globals = [&](CLI::App* sub) {
    sub->add_option("--config", flags.config_path, "JSON config file (default: $FRAGILE_CONFIG)");
    sub->add_option("--format", flags.format, "Output format: json or table");
    sub->add_option("--seed", flags.seed, "Seed for randomized choices");
    sub->add_option("--tol-probability", flags.probability, "Probability tolerance");
    sub->add_option("--tol-eigenvalue", flags.eigenvalue, "Eigenvalue tolerance");
    sub->add_option("--tol-residual", flags.residual, "Residual tolerance");
    sub->add_option("--tol-phase", flags.phase, "Phase tolerance (radians)");
  };

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build a state and write it as JSON");
  c->add_option("family", construct.family, "bernstein | general-bernstein | ghz | inhomogeneous")
      ->required()
      ->check(CLI::IsMember({"bernstein", "general-bernstein", "ghz", "inhomogeneous"}));
  c->add_option("--n", construct.n, "Number of particles");
  c->add_option("--q", construct.q, "Parameter of the inhomogeneous family");
  c->add_option("--axis", construct.axis, "GHZ axis: x or z");
  c->add_option("--sign", construct.sign, "GHZ relative sign");
  c->add_option("--phases", construct.phases, "Term phases in units of pi (comma list or JSON array)");
  c->add_flag("--random", construct.random_phases, "Random term phases from --seed");
  c->add_option("--alphas", construct.alphas, "Local phases on Up, units of pi");
  c->add_option("--betas", construct.betas, "Local phases on Down, units of pi");
  c->add_option("--out", construct.out_path, "Output file (default: standard output)");
  add_globals(c);

  StateArgs stats;
  auto* st = app.add_subcommand("stats", "Outcome distribution, independence report and certificate");
  st->add_option("--state", stats.state, "State file")->required();
  st->add_flag("--expect-pass", stats.expect_pass, "Exit 1 unless the certificate passes");
  add_globals(st);

  IndependenceArgs indep;
  auto* in = app.add_subcommand("independence", "k-wise independence report");
  in->add_option("--state", indep.state, "State file")->required();
  in->add_option("--axes", indep.axes, "One axis letter per particle (default all z)");
  in->add_option("--max-k", indep.max_k, "Largest subset size (default N)");
  in->add_option("--expect-through", indep.expect_through, "Exit 1 unless independent through this size");
  add_globals(in);

  StateArgs frag;
  auto* fr = app.add_subcommand("fragility", "Single-particle trace-out separability report");
  fr->add_option("--state", frag.state, "State file")->required();
  fr->add_flag("--expect-pass", frag.expect_pass, "Exit 1 unless every reduction is separable");
  add_globals(fr);

  OrbitArgs orbit;
  auto* orb = app.add_subcommand("orbit", "Local-phase orbit membership and period lattice");
  orb->add_option("--n", orbit.n, "Number of particles (default: inferred)");
  orb->add_option("--phases", orbit.phases, "2^(N-1) term phases in units of pi")->required();
  orb->add_flag("--expect-pass", orbit.expect_pass, "Exit 1 unless the phases are reachable");
  add_globals(orb);

  MerminArgs mermin;
  auto* me = app.add_subcommand("mermin", "Mermin relation table and contradiction sets");
  me->add_option("--n", mermin.n, "Number of particles")->required();
  me->add_option("--max-size", mermin.max_size, "Largest contradiction set size");
  me->add_option("--sign", mermin.sign, "GHZ_z relative sign");
  add_globals(me);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    const auto config = resolve_config(flags);
    if (c->parsed())
      run_construct(construct, config, out);
    else if (st->parsed())
      run_stats(stats, config, out, err);
    else if (in->parsed())
      run_independence(indep, config, out, err);
    else if (fr->parsed())
      run_fragility(frag, config, out, err);
    else if (orb->parsed())
      run_orbit(orbit, config, out);
    else if (me->parsed())
      run_mermin(mermin, config, out);
    return kOk;
  } catch (const VerdictFailed& e) {
    err << "verdict: " << e.what() << '\n';
    return kVerdictFailed;
  } catch (const NumericalFailure& e) {
    err << "error: " << e.what() << '\n';
    return kVerdictFailed;
  } catch (const InternalInconsistency& e) {
    err << "error: " << e.what() << '\n';
    return kVerdictFailed;
  } catch (const NotAnEigenstate& e) {
    err << "error: " << e.what() << '\n';
    return kVerdictFailed;
  } catch (const std::exception& e) {
    // Malformed input, bad arguments and dimension caps.
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace fragile::cli
