#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "range.hpp"
#include "symcat/ed_oracle.hpp"
#include "symcat/error.hpp"
#include "symcat/scan_io.hpp"

namespace symcat::io {

namespace {

constexpr std::pair<Command, std::string_view> kCommandNames[] = {
    {Command::Fig1, "fig1"},
    {Command::Fig2, "fig2"},
    {Command::GenFun, "genfun"},
    {Command::XyCrossings, "xy-crossings"},
    {Command::XyConcurrence, "xy-concurrence"},
    {Command::XxxConcurrence, "xxx-concurrence"},
    {Command::OracleValidate, "oracle-validate"},
};

const std::set<std::string, std::less<>> kStates = {"xy-symmetric", "xy-factorized", "xy-cross", "xxx-member",
                                                    "xxx-symmetric"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string normalize_key(std::string_view key) {
  std::string k(key);
  for (auto& ch : k) {
    if (ch == '_') ch = '-';
  }
  return k;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view value, std::string_view expected) {
  std::ostringstream msg;
  msg << "invalid value '" << value << "' for '" << key << "': expected " << expected;
  throw InvalidArgument(msg.str());
}

template <class T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  const auto* end = value.data() + value.size();
  auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) bad_value(key, value, "a number");
  if constexpr (std::is_floating_point_v<T>) {
    if (!std::isfinite(out)) bad_value(key, value, "a finite number");
  }
  return out;
}

std::vector<double> parse_list(std::string_view key, std::string_view value) {
  std::vector<double> out;
  while (true) {
    const auto comma = value.find(',');
    out.push_back(parse_number<double>(key, trim(value.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return out;
}

Branch parse_branch(std::string_view key, std::string_view value) {
  if (value == "+" || value == "plus") return Branch::Plus;
  if (value == "-" || value == "minus") return Branch::Minus;
  bad_value(key, value, "'+', '-', 'plus' or 'minus'");
}

void apply(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "n") cfg.n = parse_number<int>(key, value);
  else if (key == "n-min") cfg.n_min = parse_number<int>(key, value);
  else if (key == "n-max") cfg.n_max = parse_number<int>(key, value);
  else if (key == "n-step") cfg.n_step = parse_number<int>(key, value);
  else if (key == "gamma") cfg.gammas = parse_list(key, value);
  else if (key == "h-min") cfg.h_min = parse_number<double>(key, value);
  else if (key == "h-max") cfg.h_max = parse_number<double>(key, value);
  else if (key == "h-step") cfg.h_step = parse_number<double>(key, value);
  else if (key == "crossing-step") cfg.crossing_step = parse_number<double>(key, value);
  else if (key == "tol") cfg.tol = parse_number<double>(key, value);
  else if (key == "lambda-max") cfg.lambda_max = parse_number<double>(key, value);
  else if (key == "lambda-points") cfg.lambda_points = parse_number<int>(key, value);
  else if (key == "lambda-star") cfg.lambda_star = parse_number<double>(key, value);
  else if (key == "state") cfg.state = value;
  else if (key == "branch") cfg.branch = parse_branch(key, value);
  else if (key == "theta") cfg.theta = parse_number<double>(key, value);
  else if (key == "oracle-cap") cfg.oracle_cap = parse_number<int>(key, value);
  else if (key == "points") cfg.points = parse_number<int>(key, value);
  else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, value);
  else if (key == "workers") cfg.workers = parse_number<unsigned>(key, value);
  else if (key == "out") cfg.out = value;
  else throw InvalidArgument("unknown configuration key '" + key + "'");
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& [cmd, text] : kCommandNames) {
    if (text == name) return cmd;
  }
  return std::nullopt;
}

std::string_view to_string(Command c) {
  for (const auto& [cmd, text] : kCommandNames) {
    if (cmd == c) return text;
  }
  return "unknown";
}

ConfigValues parse_config_text(std::string_view text) {
  ConfigValues out;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidArgument("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = normalize_key(trim(line.substr(0, eq)));
    auto value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    if (key.empty()) throw InvalidArgument("config line " + std::to_string(line_no) + ": empty key");
    if (!out.emplace(key, std::string(value)).second) {
      throw InvalidArgument("config line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
  }
  return out;
}

ConfigValues load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

RunConfig default_config(Command command) {
  RunConfig cfg;
  cfg.command = command;
  switch (command) {
    case Command::Fig2: cfg.gammas = {0.5, 0.8}; break;
    case Command::OracleValidate:
      cfg.n = 12;
      cfg.gammas = {0.3, 0.6, 0.9};
      break;
    default: cfg.gammas = {0.6}; break;
  }
  return cfg;
}

RunConfig resolve_config(Command command, const std::vector<ConfigValues>& layers) {
  ConfigValues merged;
  for (const auto& layer : layers) {
    for (const auto& [k, v] : layer) merged[normalize_key(k)] = v;
  }
  RunConfig cfg = default_config(command);
  for (const auto& [k, v] : merged) apply(cfg, k, v);
  validate(cfg);
  return cfg;
}

NRange resolve_n_range(const RunConfig& cfg) {
  NRange r;
  switch (cfg.command) {
    case Command::Fig2:
    case Command::XyConcurrence:
    case Command::XxxConcurrence: r = {4, 40, 2}; break;
    case Command::GenFun:
      r = cfg.state.starts_with("xxx") ? NRange{50, 400, 50} : NRange{4, 40, 4};
      break;
    case Command::OracleValidate: r = {4, cfg.n, 2}; break;
    default: r = {cfg.n, cfg.n, 1}; break;
  }
  if (cfg.n_min) r.min = *cfg.n_min;
  if (cfg.n_max) r.max = *cfg.n_max;
  if (cfg.n_step) r.step = *cfg.n_step;
  return r;
}

std::vector<int> NRange::values() const {
  std::vector<int> out;
  for (int n = min; n <= max; n += step) out.push_back(n);
  return out;
}

void validate(const RunConfig& cfg) {
  const bool xxx_only = cfg.command == Command::XxxConcurrence ||
                        (cfg.command == Command::GenFun && cfg.state.starts_with("xxx"));
  require(cfg.n >= 4, "n must be >= 4");
  require(cfg.workers >= 1 && cfg.workers <= 256, "workers must lie in [1, 256]");

  if (!xxx_only) {
    require(!cfg.gammas.empty(), "at least one gamma is required");
    for (double g : cfg.gammas) require(g > 0.0 && g <= 1.0, "gamma must lie in (0, 1]");
  }
  const bool single_gamma = cfg.command == Command::Fig1 || cfg.command == Command::GenFun;
  if (single_gamma && !xxx_only) require(cfg.gammas.size() == 1, "this command takes a single gamma");

  const auto range = resolve_n_range(cfg);
  require(range.step >= 1, "n-step must be >= 1");
  require(range.min >= 4, "n-min must be >= 4");
  require(range.min <= range.max, "n-min must not exceed n-max");
  require(range.values().size() <= 100000, "n range is too long");

  switch (cfg.command) {
    case Command::Fig1:
      require(cfg.h_min >= 0.0, "h-min must be >= 0");
      require(cfg.h_max > cfg.h_min, "h-max must exceed h-min");
      require(cfg.h_step > 0.0, "h-step must be positive");
      require((cfg.h_max - cfg.h_min) / cfg.h_step <= 1e7, "h grid is too fine");
      [[fallthrough]];
    case Command::XyCrossings:
      require(cfg.crossing_step > 0.0 && cfg.crossing_step <= 0.5, "crossing-step must lie in (0, 0.5]");
      require(cfg.tol > 0.0, "tol must be positive");
      break;
    case Command::GenFun:
      require(kStates.contains(cfg.state),
              "state must be one of xy-symmetric, xy-factorized, xy-cross, xxx-member, xxx-symmetric");
      require(cfg.lambda_max >= 0.0, "lambda-max must be >= 0");
      require(cfg.lambda_points >= 1 && cfg.lambda_points <= 1000000, "lambda-points must lie in [1, 1e6]");
      if (cfg.state == "xxx-symmetric") {
        require(cfg.n % 2 == 0, "xxx-symmetric needs even n (the odd-N symmetric state vanishes)");
        require(range.min % 2 == 0 && range.step % 2 == 0, "xxx-symmetric scaling range must contain even N only");
      }
      break;
    case Command::Fig2:
    case Command::XxxConcurrence:
      require(range.min % 2 == 0 && range.step % 2 == 0, "XXX concurrence needs even N only");
      break;
    case Command::OracleValidate:
      require(cfg.points >= 1, "points must be >= 1");
      require(cfg.oracle_cap >= 4 && cfg.oracle_cap <= 20, "oracle-cap must lie in [4, 20]");
      if (cfg.n > cfg.oracle_cap) ed::check_capacity(cfg.n, cfg.oracle_cap);
      break;
    case Command::XyConcurrence: break;
  }
}

}  // namespace symcat::io
