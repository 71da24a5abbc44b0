#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <unordered_map>
#include <vector>

#include "aura/aura_space.hpp"
#include "aura/error.hpp"
#include "aura/point_set.hpp"
#include "aura/sensor.hpp"
#include "aura/topology.hpp"
#include "aura/validation.hpp"

// Space documents are line oriented:
//
//   name: finite_aura_basic
//   note: free text
//   points: a, b, c, d
//   opens:
//     {}
//     {a}
//   aura:
//     a -> {a}
//
// '#' starts a comment. Section entries are indented.

namespace aura::doc {

/// A decoded space document before any topological checking.
struct SpaceDocument {
  std::string name;
  std::string note;
  std::vector<std::string> points;
  Family opens;
  std::vector<std::size_t> open_lines;
  std::vector<std::optional<PointSet>> aura;  // indexed by point
  std::vector<std::size_t> aura_lines;

  [[nodiscard]] std::size_t size() const noexcept { return points.size(); }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

inline std::string_view strip_comment(std::string_view s) {
  const auto h = s.find('#');
  return h == std::string_view::npos ? s : s.substr(0, h);
}

inline bool valid_label(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c == ',' || c == '{' || c == '}' || c == '#' || c == ':' || c == ' ' || c == '\t' || c == '>' ||
        c == '=') {
      return false;
    }
  }
  return true;
}

struct Line {
  std::size_t number;
  bool indented;
  std::string_view text;  // trimmed, comment removed
};

inline std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const auto nl = text.find('\n');
    auto raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    auto body = trim(strip_comment(raw));
    if (!body.empty()) out.push_back({number, raw.front() == ' ' || raw.front() == '\t', body});
    if (text.empty()) break;
  }
  return out;
}

inline std::vector<std::string> split_list(std::string_view s, std::size_t line) {
  std::vector<std::string> out;
  s = trim(s);
  if (s.empty()) return out;
  while (true) {
    const auto comma = s.find(',');
    auto item = trim(s.substr(0, comma));
    if (!valid_label(item)) throw ParseError(line, "malformed label '" + std::string(item) + "'");
    out.emplace_back(item);
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  return out;
}

inline std::pair<std::string_view, std::string_view> split_key(std::string_view s) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) return {s, {}};
  return {trim(s.substr(0, colon)), trim(s.substr(colon + 1))};
}

inline double parse_number(std::string_view s, std::size_t line) {
  s = trim(s);
  double v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw ParseError(line, "expected a number, got '" + std::string(s) + "'");
  return v;
}

inline std::vector<double> parse_numbers(std::string_view s, std::size_t count, std::size_t line) {
  std::vector<double> out;
  s = trim(s);
  while (!s.empty()) {
    const auto sp = s.find_first_of(" \t");
    out.push_back(parse_number(s.substr(0, sp), line));
    s = sp == std::string_view::npos ? std::string_view{} : trim(s.substr(sp));
  }
  if (out.size() != count) {
    throw ParseError(line, "expected " + std::to_string(count) + " numbers, got " + std::to_string(out.size()));
  }
  return out;
}

/// Shortest decimal that reads back to the same double.
inline std::string format_number(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace detail

/// Resolves label lists against a fixed point order.
class LabelIndex {
public:
  LabelIndex() = default;
  explicit LabelIndex(const std::vector<std::string>& labels) : size_(labels.size()) {
    for (std::size_t i = 0; i < labels.size(); ++i) index_.emplace(labels[i], i);
  }

  [[nodiscard]] std::optional<std::size_t> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  [[nodiscard]] std::size_t at(std::string_view label, std::size_t line) const {
    auto i = find(label);
    if (!i) throw ParseError(line, "unknown label '" + std::string(label) + "'");
    return *i;
  }

  /// Parses "a, b" or "{a, b}" into a set.
  [[nodiscard]] PointSet set(std::string_view text, std::size_t line) const {
    text = detail::trim(text);
    if (text.size() >= 2 && text.front() == '{' && text.back() == '}') {
      text = text.substr(1, text.size() - 2);
    } else if (!text.empty() && (text.front() == '{' || text.back() == '}')) {
      throw ParseError(line, "unbalanced braces in '" + std::string(text) + "'");
    }
    PointSet out(size_);
    for (const auto& l : detail::split_list(text, line)) out.insert(at(l, line));
    return out;
  }

  [[nodiscard]] std::size_t size() const noexcept { return size_; }

private:
  std::size_t size_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

/// "{a, b}" with members in point order.
inline std::string format_set(const PointSet& s, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t x) {
    if (!first) out += ", ";
    out += labels.at(x);
    first = false;
  });
  return out + "}";
}

inline std::vector<std::string> label_list(const PointSet& s, const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  s.for_each([&](std::size_t x) { out.push_back(labels.at(x)); });
  return out;
}

/// Labels of a space, filling in indices when the topology has none.
inline std::vector<std::string> labels_of(const AuraSpace& s) {
  std::vector<std::string> out;
  for (std::size_t x = 0; x < s.size(); ++x) out.push_back(s.label(x));
  return out;
}

inline SpaceDocument parse_space(std::string_view text) {
  SpaceDocument d;
  LabelIndex index;
  enum class Section { none, opens, aura } section = Section::none;
  bool have_points = false;

  for (const auto& line : detail::split_lines(text)) {
    if (line.indented && section != Section::none) {
      if (section == Section::opens) {
        d.opens.push_back(index.set(line.text, line.number));
        d.open_lines.push_back(line.number);
      } else {
        const auto arrow = line.text.find("->");
        if (arrow == std::string_view::npos) throw ParseError(line.number, "expected 'label -> {set}'");
        const auto x = index.at(detail::trim(line.text.substr(0, arrow)), line.number);
        if (d.aura[x]) throw ParseError(line.number, "second aura entry for '" + d.points[x] + "'");
        d.aura[x] = index.set(line.text.substr(arrow + 2), line.number);
        d.aura_lines[x] = line.number;
      }
      continue;
    }
    if (line.indented) throw ParseError(line.number, "indented line outside a section");

    const auto [key, value] = detail::split_key(line.text);
    section = Section::none;
    if (key == "name") {
      d.name = value;
    } else if (key == "note") {
      d.note = value;
    } else if (key == "points") {
      if (have_points) throw ParseError(line.number, "points listed twice");
      d.points = detail::split_list(value, line.number);
      if (d.points.empty()) throw ParseError(line.number, "a space needs at least one point");
      auto sorted = d.points;
      std::sort(sorted.begin(), sorted.end());
      auto dup = std::adjacent_find(sorted.begin(), sorted.end());
      if (dup != sorted.end()) throw ParseError(line.number, "duplicate point '" + *dup + "'");
      index = LabelIndex(d.points);
      d.aura.assign(d.points.size(), std::nullopt);
      d.aura_lines.assign(d.points.size(), 0);
      have_points = true;
    } else if (key == "opens" || key == "aura") {
      if (!have_points) throw ParseError(line.number, "'" + std::string(key) + "' before 'points'");
      if (!value.empty()) throw ParseError(line.number, "section entries go on indented lines");
      section = key == "opens" ? Section::opens : Section::aura;
    } else {
      throw ParseError(line.number, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_points) throw ParseError(1, "missing 'points'");
  return d;
}

/// Topology axioms, missing aura entries, self-membership and open codomain,
/// each violation naming the offending point by label.
inline ValidationResult validate(const SpaceDocument& d) {
  const auto n = d.size();
  auto result = validate_topology(n, d.opens);
  Family sorted = d.opens;
  std::sort(sorted.begin(), sorted.end());
  const bool topology_ok = result.ok();
  for (std::size_t x = 0; x < n; ++x) {
    const auto& label = d.points[x];
    if (!d.aura[x]) {
      result.add("missing_aura", "point '" + label + "' has no aura entry", x);
      continue;
    }
    const auto& a = *d.aura[x];
    if (!a.contains(x)) {
      result.add("self_membership", "point '" + label + "' is not in its own aura " + format_set(a, d.points), x);
    }
    if (topology_ok && !std::binary_search(sorted.begin(), sorted.end(), a)) {
      result.add("open_codomain",
                 "aura " + format_set(a, d.points) + " of '" + label + "' is not an open set", x);
    }
  }
  return result;
}

inline AuraSpace to_space(const SpaceDocument& d) {
  auto check = validate(d);
  if (!check.ok()) {
    const auto& v = check.violations.front();
    const bool scope_rule = v.rule == "missing_aura" || v.rule == "self_membership" || v.rule == "open_codomain";
    throw Error(scope_rule ? ErrorCode::invalid_scope : ErrorCode::invalid_topology, v.message);
  }
  ScopeFunction scope;
  for (const auto& a : d.aura) scope.assignment.push_back(*a);
  return AuraSpace(Topology(d.size(), d.opens, d.points), std::move(scope));
}

inline AuraSpace decode_space(std::string_view text) { return to_space(parse_space(text)); }

inline SpaceDocument from_space(const AuraSpace& s, std::string name = {}, std::string note = {}) {
  require_enumerable(s.size(), kMaxEnumerableUniverse, "space document");
  SpaceDocument d;
  d.name = std::move(name);
  d.note = std::move(note);
  d.points = labels_of(s);
  for (const auto& l : d.points) {
    if (!detail::valid_label(l)) throw Error(ErrorCode::precondition, "label '" + l + "' cannot be written");
  }
  d.opens = s.topology().opens();
  for (std::size_t x = 0; x < s.size(); ++x) d.aura.emplace_back(s.aura(x));
  return d;
}

/// Canonical text: opens in numeric order, members and auras in point order.
inline std::string encode(const SpaceDocument& d) {
  std::string out;
  if (!d.name.empty()) out += "name: " + d.name + "\n";
  if (!d.note.empty()) out += "note: " + d.note + "\n";
  out += "points: ";
  for (std::size_t i = 0; i < d.points.size(); ++i) out += (i ? ", " : "") + d.points[i];
  out += "\nopens:\n";
  Family sorted = d.opens;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& o : sorted) out += "  " + format_set(o, d.points) + "\n";
  out += "aura:\n";
  for (std::size_t x = 0; x < d.size(); ++x) {
    if (d.aura[x]) out += "  " + d.points[x] + " -> " + format_set(*d.aura[x], d.points) + "\n";
  }
  return out;
}

inline std::string encode_space(const AuraSpace& s, std::string name = {}, std::string note = {}) {
  return encode(from_space(s, std::move(name), std::move(note)));
}

/// Replacement auras written as "a -> {a}" lines (indentation optional).
/// Points without an entry keep their current aura.
inline ScopeFunction parse_scope_patch(std::string_view text, const AuraSpace& s) {
  LabelIndex index(labels_of(s));
  auto scope = s.scope();
  std::vector<bool> seen(s.size(), false);
  for (const auto& line : detail::split_lines(text)) {
    if (line.text == "aura:") continue;
    const auto arrow = line.text.find("->");
    if (arrow == std::string_view::npos) throw ParseError(line.number, "expected 'label -> {set}'");
    const auto x = index.at(detail::trim(line.text.substr(0, arrow)), line.number);
    if (seen[x]) throw ParseError(line.number, "second aura entry for '" + s.label(x) + "'");
    seen[x] = true;
    scope.assignment[x] = index.set(line.text.substr(arrow + 2), line.number);
  }
  return scope;
}

/// Point mapping written "a=b, c=d" between two labelled spaces.
inline std::vector<std::size_t> parse_mapping(std::string_view text, const AuraSpace& source,
                                              const AuraSpace& target) {
  LabelIndex from(labels_of(source)), to(labels_of(target));
  std::vector<std::optional<std::size_t>> m(source.size());
  text = detail::trim(text);
  while (!text.empty()) {
    const auto comma = text.find(',');
    auto item = detail::trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : detail::trim(text.substr(comma + 1));
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError(0, "mapping entry '" + std::string(item) + "' lacks '='");
    const auto x = from.at(detail::trim(item.substr(0, eq)), 0);
    if (m[x]) throw ParseError(0, "point '" + source.label(x) + "' mapped twice");
    m[x] = to.at(detail::trim(item.substr(eq + 1)), 0);
  }
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (!m[x]) throw ParseError(0, "point '" + source.label(x) + "' has no image");
    out.push_back(*m[x]);
  }
  return out;
}

inline std::string encode_mapping(const std::vector<std::size_t>& m, const AuraSpace& source,
                                  const AuraSpace& target) {
  std::string out;
  for (std::size_t x = 0; x < m.size(); ++x) out += (x ? "," : "") + source.label(x) + "=" + target.label(m[x]);
  return out;
}

// Deployment documents:
//
//   name: sensor_three
//   region: -4 -4 7 6        # x0 y0 x1 y1
//   resolution: 0.5
//   sensor: 0 0 3            # x y range, one line per sensor
//   uncovered: self          # or: delta 0.75

struct DeploymentDocument {
  std::string name;
  std::string note;
  sensor::SensorDeployment deployment;
};

inline DeploymentDocument parse_deployment(std::string_view text) {
  DeploymentDocument d;
  bool have_region = false, have_resolution = false;
  for (const auto& line : detail::split_lines(text)) {
    if (line.indented) throw ParseError(line.number, "deployment documents have no sections");
    const auto [key, value] = detail::split_key(line.text);
    if (key == "name") {
      d.name = value;
    } else if (key == "note") {
      d.note = value;
    } else if (key == "region") {
      const auto v = detail::parse_numbers(value, 4, line.number);
      d.deployment.region = {v[0], v[1], v[2], v[3]};
      have_region = true;
    } else if (key == "resolution") {
      d.deployment.resolution = detail::parse_number(value, line.number);
      have_resolution = true;
    } else if (key == "sensor") {
      const auto v = detail::parse_numbers(value, 3, line.number);
      d.deployment.sensors.push_back({{v[0], v[1]}, v[2]});
    } else if (key == "uncovered") {
      if (value == "self") {
        d.deployment.uncovered = {};
      } else if (value.substr(0, 6) == "delta ") {
        d.deployment.uncovered = {sensor::UncoveredAura::Mode::delta_ball,
                                  detail::parse_number(value.substr(6), line.number)};
      } else {
        throw ParseError(line.number, "uncovered must be 'self' or 'delta <radius>'");
      }
    } else {
      throw ParseError(line.number, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!have_region) throw ParseError(1, "missing 'region'");
  if (!have_resolution) throw ParseError(1, "missing 'resolution'");
  try {
    sensor::validate_deployment(d.deployment);
  } catch (const Error& e) {
    throw ParseError(1, e.what());
  }
  return d;
}

inline std::string encode(const DeploymentDocument& d) {
  using detail::format_number;
  const auto& dep = d.deployment;
  std::string out;
  if (!d.name.empty()) out += "name: " + d.name + "\n";
  if (!d.note.empty()) out += "note: " + d.note + "\n";
  out += "region: " + format_number(dep.region.x0) + " " + format_number(dep.region.y0) + " " +
         format_number(dep.region.x1) + " " + format_number(dep.region.y1) + "\n";
  out += "resolution: " + format_number(dep.resolution) + "\n";
  for (const auto& s : dep.sensors) {
    out += "sensor: " + format_number(s.position.x) + " " + format_number(s.position.y) + " " +
           format_number(s.range) + "\n";
  }
  if (dep.uncovered.mode == sensor::UncoveredAura::Mode::self) {
    out += "uncovered: self\n";
  } else {
    out += "uncovered: delta " + format_number(dep.uncovered.delta) + "\n";
  }
  return out;
}

/// Rectangle written "x0,y0,x1,y1".
inline sensor::Rect parse_rect(std::string_view text) {
  std::vector<double> v;
  text = detail::trim(text);
  while (!text.empty()) {
    const auto comma = text.find(',');
    v.push_back(detail::parse_number(text.substr(0, comma), 0));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
  }
  if (v.size() != 4) throw ParseError(0, "rectangle needs four numbers x0,y0,x1,y1");
  if (v[2] < v[0] || v[3] < v[1]) throw ParseError(0, "rectangle corners are out of order");
  return {v[0], v[1], v[2], v[3]};
}

}  // namespace aura::doc
