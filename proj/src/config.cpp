#include "qcoh/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "qcoh/errors.hpp"

namespace qcoh {
namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

template <class T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw InvalidInput("config field '" + key + "' expects an unsigned integer, got '" + value + "'");
  return out;
}

}  // namespace

RunConfig parse_config(std::string_view text, RunConfig c) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw InvalidInput("config line " + std::to_string(lineno) + " lacks '='");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "system") c.system = value;
    else if (key == "parabolic") c.parabolic = value;
    else if (key == "order") c.order = value;
    else if (key == "format") c.format = value;
    else if (key == "out") c.out = value;
    else if (key == "suites") c.suites = value;
    else if (key == "max_q") c.max_q = parse_number<int>(key, value);
    else if (key == "max_weyl") c.max_weyl = parse_number<std::size_t>(key, value);
    else if (key == "seed") c.seed = parse_number<std::uint64_t>(key, value);
    else throw InvalidInput("unknown config field '" + key + "'");
  }
  if (c.max_q < 0) throw InvalidInput("config field 'max_q' must be nonnegative");
  return c;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream f(path);
  if (!f) throw InvalidInput("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

std::string emit_config(const RunConfig& c) {
  std::ostringstream o;
  o << "system = " << c.system << '\n'
    << "parabolic = " << c.parabolic << '\n'
    << "order = " << c.order << '\n'
    << "format = " << c.format << '\n'
    << "out = " << c.out << '\n'
    << "max_q = " << c.max_q << '\n'
    << "max_weyl = " << c.max_weyl << '\n'
    << "seed = " << c.seed << '\n'
    << "suites = " << c.suites << '\n';
  return o.str();
}

}  // namespace qcoh
