#include <charconv>
#include <cmath>
#include <numbers>
#include <string>

#include "nlqfi/cli.hpp"

namespace nlqfi::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view text) {
  text = trim(text);
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw DomainError("not a number: '" + std::string(text) + "'");
  }
  return v;
}

int parse_int(std::string_view text) {
  text = trim(text);
  int v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end) {
    throw DomainError("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

double parse_angle(std::string_view text) {
  text = trim(text);
  const auto at = text.find("pi");
  if (at == std::string_view::npos) return parse_number(text);

  double factor = 1.0;
  std::string_view head = trim(text.substr(0, at));
  if (head == "-") {
    factor = -1.0;
  } else if (!head.empty()) {
    if (head.back() != '*') throw DomainError("bad angle: '" + std::string(text) + "'");
    head.remove_suffix(1);
    factor = parse_number(head);
  }
  std::string_view tail = trim(text.substr(at + 2));
  double divisor = 1.0;
  if (!tail.empty()) {
    if (tail.front() != '/') throw DomainError("bad angle: '" + std::string(text) + "'");
    divisor = parse_number(tail.substr(1));
  }
  return factor * std::numbers::pi / divisor;
}

StateEntry parse_state_token(std::string_view token, const SolveAux& defaults) {
  token = trim(token);
  StateEntry entry;
  entry.label = std::string(token);
  entry.aux = defaults;

  const auto colon = token.find(':');
  const std::string_view name = token.substr(0, colon);
  if (name == "thermal" || name == "ts") {
    entry.family = Family::Thermal;
  } else if (name == "coherent" || name == "cs") {
    entry.family = Family::Coherent;
  } else if (name == "svs") {
    entry.family = Family::SqueezedVacuum;
  } else if (name == "scs") {
    entry.family = Family::SqueezedCoherent;
  } else if (name == "sn") {
    entry.family = Family::SqueezedNumber;
  } else if (name == "sos") {
    entry.family = Family::SqueezedNumber;
    entry.aux.m = 1;
  } else if (name == "cat") {
    entry.family = Family::Cat;
  } else if (name == "ecs") {
    entry.family = Family::Cat;
    entry.aux.delta = 0.0;
  } else if (name == "ocs") {
    entry.family = Family::Cat;
    entry.aux.delta = std::numbers::pi;
  } else if (name == "yscs") {
    entry.family = Family::Cat;
    entry.aux.delta = std::numbers::pi / 2;
  } else if (name == "ns") {
    entry.number_state_curve = true;
  } else {
    throw DomainError("unknown state '" + std::string(name) + "'");
  }

  std::string_view rest = colon == std::string_view::npos ? "" : token.substr(colon + 1);
  while (!rest.empty()) {
    const auto next = rest.find(':');
    const std::string_view kv = rest.substr(0, next);
    rest = next == std::string_view::npos ? "" : rest.substr(next + 1);
    const auto eq = kv.find('=');
    if (eq == std::string_view::npos) throw DomainError("expected key=value in '" + entry.label + "'");
    const std::string_view key = trim(kv.substr(0, eq));
    const std::string_view value = kv.substr(eq + 1);
    if (key == "z") {
      entry.aux.z = parse_number(value);
    } else if (key == "phi") {
      entry.aux.phi = parse_angle(value);
    } else if (key == "m") {
      entry.aux.m = parse_int(value);
    } else if (key == "delta") {
      entry.aux.delta = parse_angle(value);
    } else {
      throw DomainError("unknown state option '" + std::string(key) + "'");
    }
  }
  if (entry.family == Family::Cat && !entry.number_state_curve) cat_kind(entry.aux.delta);
  return entry;
}

std::vector<StateEntry> parse_state_list(std::string_view list, const SolveAux& defaults) {
  std::vector<StateEntry> out;
  while (!list.empty()) {
    const auto comma = list.find(',');
    const std::string_view token = trim(list.substr(0, comma));
    if (!token.empty()) out.push_back(parse_state_token(token, defaults));
    list = comma == std::string_view::npos ? "" : list.substr(comma + 1);
  }
  return out;
}

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::Json;
  throw DomainError("format must be csv or json");
}

VerifyLevel parse_level(std::string_view name) {
  if (name == "fast") return VerifyLevel::Fast;
  if (name == "full") return VerifyLevel::Full;
  throw DomainError("level must be fast or full");
}

}  // namespace nlqfi::cli
