#include "nckc/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "nckc/errors.hpp"
#include "nckc/scattering.hpp"
#include "nckc/spectrum.hpp"
#include "nckc/validation.hpp"
#include "nckc/wavefields.hpp"

namespace nckc::cli {
namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string s;
  double gamma = 1.0;
  std::string format = "json";
  std::string out;
  // spectrum
  int jmax = 0;
  // wavefunction
  int j = -1;
  int l = -1;
  int m = -1;
  std::string r_grid = "0.5:20:40";
  std::string theta_grid = "0.785398163397448:0.785398163397448:1";
  std::string phi_grid = "0.785398163397448:0.785398163397448:1";
  // smatrix / amplitude
  double energy = 0.0;
  int lmax = -1;
  std::string in_dir;
  std::string out_dir;
  std::string method = "partial_wave";
  std::string eps = "0.2,0.1,0.05,0.025";
  int nalpha = 64;
  int nalpha_max = 512;
  bool swap = false;
  // validate
  std::vector<std::string> suites;
  std::vector<std::string> tol;
};

// Fixed formatting for csv: 17 significant digits round-trips every double.
std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError(what + ": '" + text + "' is not a number");
  }
  if (used != text.size() || !std::isfinite(v)) {
    throw UsageError(what + ": '" + text + "' is not a finite number");
  }
  return v;
}

int parse_int(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    throw UsageError(what + ": '" + text + "' is not an integer");
  }
  if (used != text.size()) throw UsageError(what + ": '" + text + "' is not an integer");
  return static_cast<int>(v);
}

ChannelSpec parse_channel(const Flags& f) {
  const auto parts = split(f.s, ',');
  if (parts.size() != 3) throw UsageError("--s expects three integers a,b,c");
  ChannelSpec c;
  c.s1 = parse_int(parts[0], "--s");
  c.s2 = parse_int(parts[1], "--s");
  c.s3 = parse_int(parts[2], "--s");
  c.gamma = f.gamma;
  if (c.s1 < 0 || c.s2 < 0 || c.s3 < 0) throw UsageError("--s entries must be nonnegative");
  if (!(c.gamma > 0.0) || !std::isfinite(c.gamma)) throw UsageError("--gamma must be positive");
  return c;
}

std::vector<double> parse_grid(const std::string& text, const std::string& what) {
  const auto parts = split(text, ':');
  if (parts.size() != 3) throw UsageError(what + " expects lo:hi:n");
  const double lo = parse_double(parts[0], what);
  const double hi = parse_double(parts[1], what);
  const int n = parse_int(parts[2], what);
  if (n < 1) throw UsageError(what + ": n must be at least 1");
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1.0);
  return g;
}

double checked_angle(double v, const std::string& what) {
  if (!(v >= 0.0 && v <= kHalfPi)) throw UsageError(what + ": angle outside [0, pi/2] (radians)");
  return v;
}

AngularDirection parse_direction(const std::string& text, const std::string& what) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw UsageError(what + " expects theta,phi");
  return {checked_angle(parse_double(parts[0], what), what),
          checked_angle(parse_double(parts[1], what), what)};
}

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  std::vector<double> v;
  for (const auto& p : split(text, ',')) v.push_back(parse_double(p, what));
  return v;
}

Json channel_json(const ChannelSpec& c) {
  Json j;
  j["s1"] = c.s1;
  j["s2"] = c.s2;
  j["s3"] = c.s3;
  j["gamma"] = c.gamma;
  if (c.borderline()) j["borderline"] = true;
  return j;
}

Json complex_json(Complex z) {
  Json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

struct Output {
  std::string command;
  Json channel;
  Json parameters = Json::object();
  Json payload = Json::array();
  std::vector<std::string> equations;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
};

// RFC 4180 quoting for cells holding commas or quotes
std::string csv_cell(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string q = "\"";
  for (char ch : cell) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

std::string render(const Output& o, const std::string& format) {
  if (format == "csv") {
    std::string text;
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) text += (i ? "," : "") + csv_cell(cells[i]);
      text += "\n";
    };
    line(o.csv_header);
    for (const auto& row : o.csv_rows) line(row);
    return text;
  }
  Json env;
  env["schema_version"] = "1";
  env["command"] = o.command;
  env["channel"] = o.channel;
  env["parameters"] = o.parameters;
  env["payload"] = o.payload;
  env["provenance"]["equations"] = o.equations;
  return env.dump(2) + "\n";
}

Output cmd_spectrum(const Flags& f) {
  const ChannelSpec c = parse_channel(f);
  Output o;
  o.command = "spectrum";
  o.channel = channel_json(c);
  o.parameters["jmax"] = f.jmax;
  if (f.jmax < c.threshold()) {
    throw NoStateError("no bound states: jmax " + std::to_string(f.jmax) +
                       " is below the threshold s1+s2+s3 = " + std::to_string(c.threshold()));
  }
  o.equations = {"E_j = -gamma^2 / (2 (j + 5/2)^2)",
                 "degeneracy d (d + 1) / 2, d = floor((j - s1 - s2 - s3) / 2) + 1",
                 "m = s1 + s2 + 2 k2, l = m + s3 + 2 k1, j = l + n"};
  o.csv_header = {"j", "energy", "degeneracy"};
  for (int j = c.threshold(); j <= f.jmax; ++j) {
    Json row;
    row["j"] = j;
    row["energy"] = bound_energy(c, j);
    row["degeneracy"] = degeneracy(c, j);
    Json states = Json::array();
    for (const QuantumNumbers& q : enumerate_states(c, j)) {
      states.push_back({{"l", q.l}, {"m", q.m}, {"k1", q.k1}, {"k2", q.k2}, {"n", q.n}});
    }
    row["states"] = states;
    o.csv_rows.push_back({std::to_string(j), num(bound_energy(c, j)), std::to_string(degeneracy(c, j))});
    o.payload.push_back(row);
  }
  return o;
}

QuantumNumbers select_state(const ChannelSpec& c, const Flags& f) {
  if (f.j < 0) throw UsageError("wavefunction: --j is required");
  std::vector<QuantumNumbers> hits;
  for (const QuantumNumbers& q : enumerate_states(c, f.j)) {
    if ((f.l < 0 || q.l == f.l) && (f.m < 0 || q.m == f.m)) hits.push_back(q);
  }
  if (hits.size() == 1) return hits.front();
  std::string list;
  for (const auto& q : hits) {
    list += " (l=" + std::to_string(q.l) + ",m=" + std::to_string(q.m) + ")";
  }
  if (hits.empty()) throw UsageError("wavefunction: selector matches no state of level j");
  throw UsageError("wavefunction: ambiguous selector; candidates:" + list);
}

Output cmd_wavefunction(const Flags& f) {
  const ChannelSpec c = parse_channel(f);
  const std::vector<double> rs = parse_grid(f.r_grid, "--r");
  const std::vector<double> ts = parse_grid(f.theta_grid, "--theta");
  const std::vector<double> ps = parse_grid(f.phi_grid, "--phi");
  for (double r : rs) {
    if (!(r > 0.0)) throw UsageError("--r: radii must be positive");
  }
  for (double t : ts) checked_angle(t, "--theta");
  for (double p : ps) checked_angle(p, "--phi");
  if (f.j < c.threshold()) throw NoStateError("no bound state at j = " + std::to_string(f.j));
  const QuantumNumbers q = select_state(c, f);

  Output o;
  o.command = "wavefunction";
  o.channel = channel_json(c);
  o.parameters["state"] = {{"j", q.j}, {"l", q.l}, {"m", q.m}, {"k1", q.k1}, {"k2", q.k2}, {"n", q.n}};
  o.parameters["energy"] = bound_energy(c, q.j);
  o.parameters["r"] = f.r_grid;
  o.parameters["theta"] = f.theta_grid;
  o.parameters["phi"] = f.phi_grid;
  o.equations = {"psi = R_jl(r) Y_lm(theta, phi)",
                 "R_jl = c r^{3/2} u^l e^{-u/2} L_{j-l}^{2l+4}(u), u = 2 gamma r / (j + 5/2)",
                 "Y_lm = chi sin^{m+1}t cos^{s3+1/2}t sin^{s1+1/2}p cos^{s2+1/2}p "
                 "P_k1^{(m+1,s3)}(cos 2t) P_k2^{(s1,s2)}(cos 2p)"};
  o.csv_header = {"r", "theta", "phi", "radial", "angular", "psi"};
  for (double r : rs) {
    const double radial = radial_wavefunction(c, q.j, q.l, r);
    for (double t : ts) {
      for (double p : ps) {
        const double angular = angular_wavefunction(c, q.l, q.m, {t, p});
        const double psi = full_wavefunction(c, q, r, {t, p});
        o.payload.push_back(
            {{"r", r}, {"theta", t}, {"phi", p}, {"radial", radial}, {"angular", angular}, {"psi", psi}});
        o.csv_rows.push_back({num(r), num(t), num(p), num(radial), num(angular), num(psi)});
      }
    }
  }
  return o;
}

double require_energy(const Flags& f) {
  if (!(f.energy > 0.0)) throw UsageError("--energy must be positive");
  return f.energy;
}

Output cmd_smatrix(const Flags& f) {
  const ChannelSpec c = parse_channel(f);
  const ScatteringState s = make_scattering_state(c, require_energy(f));
  const int lmax = f.lmax < 0 ? 10 : f.lmax;
  Output o;
  o.command = "smatrix";
  o.channel = channel_json(c);
  o.parameters["energy"] = s.energy;
  o.parameters["p"] = s.p;
  o.parameters["rho"] = s.rho;
  o.parameters["lmax"] = lmax;
  o.equations = {"A_l = Gamma(5/2 + l + i rho) / Gamma(5/2 + l - i rho)",
                 "rho = gamma / sqrt(2 E)"};
  o.csv_header = {"l", "re", "im", "modulus", "phase"};
  for (int l = 0; l <= lmax; ++l) {
    const Complex a = partial_wave_element(s, l);
    o.payload.push_back({{"l", l},
                         {"re", a.real()},
                         {"im", a.imag()},
                         {"modulus", std::abs(a)},
                         {"phase", std::arg(a)}});
    o.csv_rows.push_back({std::to_string(l), num(a.real()), num(a.imag()), num(std::abs(a)),
                          num(std::arg(a))});
  }
  return o;
}

Json amplitude_record(const AmplitudeResult& r) {
  Json j;
  j["method"] = to_string(r.method);
  j["re"] = r.value.real();
  j["im"] = r.value.imag();
  j["abs"] = std::abs(r.value);
  j["arg"] = std::arg(r.value);
  if (r.method == AmplitudeMethod::partial_wave) {
    j["lmax"] = r.l_max;
    Json damped = Json::array();
    for (std::size_t k = 0; k < r.epsilons.size(); ++k) {
      Json d = complex_json(r.damped[k]);
      d["eps"] = r.epsilons[k];
      damped.push_back(d);
    }
    j["abel"] = damped;
  } else {
    Json seq = Json::array();
    for (std::size_t k = 0; k < r.points.size(); ++k) {
      Json d = complex_json(r.refinements[k]);
      d["points"] = r.points[k];
      seq.push_back(d);
    }
    j["trapezoid"] = seq;
    j["converged"] = r.converged;
  }
  return j;
}

Output cmd_amplitude(const Flags& f) {
  const ChannelSpec c = parse_channel(f);
  const ScatteringState s = make_scattering_state(c, require_energy(f));
  AmplitudeRequest req;
  req.in_dir = parse_direction(f.in_dir, "--in-dir");
  req.out_dir = parse_direction(f.out_dir, "--out-dir");
  if (f.lmax >= 0) req.l_max = f.lmax;
  req.abel_epsilons = parse_list(f.eps, "--eps");
  req.min_points = f.nalpha;
  req.max_points = f.nalpha_max;
  std::vector<AmplitudeMethod> methods;
  if (f.method == "both") {
    methods = {AmplitudeMethod::partial_wave, AmplitudeMethod::integral_rep};
  } else if (f.method == "partial_wave" || f.method == "integral_rep") {
    methods = {parse_amplitude_method(f.method)};
  } else {
    throw UsageError("--method must be partial_wave, integral_rep or both");
  }

  Output o;
  o.command = "amplitude";
  o.channel = channel_json(c);
  o.parameters["energy"] = s.energy;
  o.parameters["p"] = s.p;
  o.parameters["rho"] = s.rho;
  o.parameters["in_dir"] = {req.in_dir.theta, req.in_dir.phi};
  o.parameters["out_dir"] = {req.out_dir.theta, req.out_dir.phi};
  o.equations = {"f = (2 pi / (i p)) sum_l A_l sum_m Y_lm(in) Y_lm(out), Abel limit eps -> 0",
                 "f = (2 pi / (i p)) eta lambda(in) lambda(out) "
                 "int (1 - n.n')^{-5/2 - i rho} exp(-i s.alpha) d^3 alpha",
                 "eta = 2^{-5/2 + i rho} Gamma(5/2 + i rho) / (pi^{5/2} Gamma(-i rho))"};
  o.csv_header = {"method", "direction", "re", "im", "abs", "arg"};
  for (AmplitudeMethod m : methods) {
    req.method = m;
    std::vector<std::pair<std::string, AmplitudeRequest>> runs{{"forward", req}};
    if (f.swap) {
      AmplitudeRequest swapped = req;
      std::swap(swapped.in_dir, swapped.out_dir);
      runs.emplace_back("swapped", swapped);
    }
    for (const auto& [label, r] : runs) {
      const AmplitudeResult res = amplitude(s, r);
      Json rec = amplitude_record(res);
      rec["direction"] = label;
      o.payload.push_back(rec);
      o.csv_rows.push_back({to_string(m), label, num(res.value.real()), num(res.value.imag()),
                            num(std::abs(res.value)), num(std::arg(res.value))});
    }
  }
  return o;
}

Output cmd_validate(const Flags& f, bool& all_passed) {
  std::vector<std::string> suites = f.suites.empty() ? validation_suites() : f.suites;
  for (const auto& s : suites) {
    if (std::find(validation_suites().begin(), validation_suites().end(), s) ==
        validation_suites().end()) {
      throw UsageError("--suite: unknown suite '" + s + "'");
    }
  }
  ToleranceOverrides tol;
  for (const auto& t : f.tol) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw UsageError("--tol expects name=value");
    tol[t.substr(0, eq)] = parse_double(t.substr(eq + 1), "--tol");
  }

  Output o;
  o.command = "validate";
  o.channel = nullptr;
  o.parameters["suites"] = suites;
  Json overrides = Json::object();
  for (const auto& [k, v] : tol) overrides[k] = v;
  o.parameters["tolerance_overrides"] = overrides;
  o.equations = suites;
  o.csv_header = {"suite", "check", "measured", "tolerance", "passed"};
  all_passed = true;
  for (const auto& s : suites) {
    for (const CheckRecord& r : run_suite(s, tol)) {
      all_passed = all_passed && r.passed;
      o.payload.push_back({{"suite", r.suite},
                           {"check", r.check},
                           {"measured", r.measured},
                           {"tolerance", r.tolerance},
                           {"passed", r.passed},
                           {"detail", r.detail}});
      o.csv_rows.push_back({r.suite, r.check, num(r.measured), num(r.tolerance),
                            r.passed ? "true" : "false"});
    }
  }
  return o;
}

void add_common(CLI::App* sub, Flags& f, bool channel) {
  if (channel) {
    sub->add_option("--s", f.s, "barrier labels s1,s2,s3 (nonnegative integers)")->required();
    sub->add_option("--gamma", f.gamma, "Coulomb strength gamma > 0");
  }
  sub->add_option("--format", f.format, "output format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--out", f.out, "output file (default stdout)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Bound states and scattering of the Kepler-Coulomb problem with axis barriers",
               "nckc"};
  app.require_subcommand(1);

  auto* spectrum = app.add_subcommand("spectrum", "energy levels, degeneracies and state labels");
  add_common(spectrum, f, true);
  spectrum->add_option("--jmax", f.jmax, "highest level j")->required();

  auto* wave = app.add_subcommand("wavefunction", "bound-state wavefunction on a grid");
  add_common(wave, f, true);
  wave->add_option("--j", f.j, "level j")->required();
  wave->add_option("--l", f.l, "angular label l");
  wave->add_option("--m", f.m, "angular label m");
  wave->add_option("--r", f.r_grid, "radial grid lo:hi:n");
  wave->add_option("--theta", f.theta_grid, "theta grid lo:hi:n (radians)");
  wave->add_option("--phi", f.phi_grid, "phi grid lo:hi:n (radians)");

  auto* smatrix = app.add_subcommand("smatrix", "partial-wave S-matrix elements A_l");
  add_common(smatrix, f, true);
  smatrix->add_option("--energy", f.energy, "energy E > 0")->required();
  smatrix->add_option("--lmax", f.lmax, "highest l (default 10)");

  auto* amp = app.add_subcommand("amplitude", "scattering amplitude between two directions");
  add_common(amp, f, true);
  amp->add_option("--energy", f.energy, "energy E > 0")->required();
  amp->add_option("--in-dir", f.in_dir, "incoming direction theta,phi (radians)")->required();
  amp->add_option("--out-dir", f.out_dir, "outgoing direction theta,phi (radians)")->required();
  amp->add_option("--method", f.method, "partial_wave, integral_rep or both");
  amp->add_option("--lmax", f.lmax, "partial-wave cutoff (default 1200)");
  amp->add_option("--eps", f.eps, "Abel damping sequence, decreasing");
  amp->add_option("--nalpha", f.nalpha, "starting trapezoid points per axis");
  amp->add_option("--nalpha-max", f.nalpha_max, "largest trapezoid points per axis");
  amp->add_flag("--swap", f.swap, "also evaluate with the directions exchanged");

  auto* validate = app.add_subcommand("validate", "run the invariant suites");
  add_common(validate, f, false);
  validate->add_option("--suite", f.suites, "suite name (repeatable)")->delimiter(',');
  validate->add_option("--tol", f.tol, "tolerance override suite[.check]=value (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  int code = kExitOk;
  Output o;
  try {
    if (spectrum->parsed()) {
      o = cmd_spectrum(f);
    } else if (wave->parsed()) {
      o = cmd_wavefunction(f);
    } else if (smatrix->parsed()) {
      o = cmd_smatrix(f);
    } else if (amp->parsed()) {
      o = cmd_amplitude(f);
    } else {
      bool passed = true;
      o = cmd_validate(f, passed);
      if (!passed) code = kExitValidation;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConstraintError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }

  const std::string text = render(o, f.format);
  if (f.out.empty()) {
    out << text;
  } else {
    std::ofstream file(f.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << f.out << "\n";
      return kExitUsage;
    }
    file << text;
  }
  return code;
}

}  // namespace nckc::cli
