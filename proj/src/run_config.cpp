#include "aseopt/run_config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace aseopt {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

double parse_num(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw std::invalid_argument("config: bad numeric value for '" + key + "': " + v);
  }
}

void set_key(RunConfig& cfg, const std::string& section, const std::string& key,
             const std::string& value) {
  if (section.empty()) {
    if (key == "lambda") cfg.lambda = parse_num(key, value);
    else if (key == "alpha") cfg.alpha = parse_num(key, value);
    else if (key == "d_sd") cfg.d_sd = parse_num(key, value);
    else if (key == "p") cfg.p = parse_num(key, value);
    else if (key == "tau") cfg.tau = parse_num(key, value);
    else if (key == "p_s") cfg.p_s = parse_num(key, value);
    else if (key == "output_path") cfg.output_path = value;
    else throw std::invalid_argument("config: unknown key '" + key + "'");
  } else if (section == "sweep") {
    if (!cfg.sweep) cfg.sweep.emplace();
    if (key == "variable") cfg.sweep->variable = value;
    else if (key == "start") cfg.sweep->start = parse_num(key, value);
    else if (key == "stop") cfg.sweep->stop = parse_num(key, value);
    else if (key == "count") cfg.sweep->count = static_cast<int>(parse_num(key, value));
    else if (key == "spacing") cfg.sweep->spacing = value;
    else throw std::invalid_argument("config: unknown key '" + key + "' in [sweep]");
  } else if (section == "mc") {
    if (!cfg.mc) cfg.mc.emplace();
    if (key == "n") cfg.mc->n = static_cast<long>(parse_num(key, value));
    else if (key == "seed") cfg.mc->seed = static_cast<std::uint64_t>(parse_num(key, value));
    else if (key == "radius") cfg.mc->radius = parse_num(key, value);
    else throw std::invalid_argument("config: unknown key '" + key + "' in [mc]");
  } else {
    throw std::invalid_argument("config: unknown section [" + section + "]");
  }
}

}  // namespace

NetworkParams RunConfig::make_params() const {
  return NetworkParams(lambda, alpha, d_sd, p, tau, p_s);
}

RunConfig parse_run_config(std::istream& is) {
  RunConfig cfg;
  std::string line, section;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    set_key(cfg, section, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  if (cfg.sweep) {
    sweep_values(*cfg.sweep);  // validates
  }
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  return parse_run_config(in);
}

void apply_override(RunConfig& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos)
    throw std::invalid_argument("override '" + assignment + "': expected key=value");
  std::string key = trim(assignment.substr(0, eq));
  std::string section;
  const auto dot = key.find('.');
  if (dot != std::string::npos) {
    section = key.substr(0, dot);
    key = key.substr(dot + 1);
  }
  set_key(cfg, section, key, trim(assignment.substr(eq + 1)));
}

std::vector<double> sweep_values(const SweepSpec& spec) {
  if (spec.count < 2)
    throw std::invalid_argument("sweep: count must be >= 2");
  if (spec.variable != "lambda" && spec.variable != "p" && spec.variable != "tau" &&
      spec.variable != "d_sd")
    throw std::invalid_argument("sweep: variable must be lambda, p, tau or d_sd");
  if (spec.spacing != "linear" && spec.spacing != "log")
    throw std::invalid_argument("sweep: spacing must be linear or log");
  if (spec.spacing == "log" && !(spec.start > 0.0 && spec.stop > 0.0))
    throw std::invalid_argument("sweep: log spacing needs positive bounds");

  std::vector<double> vals(spec.count);
  if (spec.spacing == "linear") {
    for (int i = 0; i < spec.count; ++i)
      vals[i] = spec.start + (spec.stop - spec.start) * i / (spec.count - 1.0);
  } else {
    const double la = std::log(spec.start), lb = std::log(spec.stop);
    for (int i = 0; i < spec.count; ++i)
      vals[i] = std::exp(la + (lb - la) * i / (spec.count - 1.0));
  }
  return vals;
}

}  // namespace aseopt
