#pragma once

#include <openssl/evp.h>

#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "aura/aura_space.hpp"
#include "aura/document.hpp"
#include "aura/error.hpp"
#include "aura/fixtures.hpp"
#include "aura/morphisms.hpp"
#include "aura/open_classes.hpp"
#include "aura/properties.hpp"
#include "aura/rough_approx.hpp"
#include "aura/sensor.hpp"
#include "aura/separation.hpp"
#include "aura/spread.hpp"

namespace aura::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

/// Raw input text plus where it came from ("fixture:NAME" or a file path).
struct Input {
  std::string origin;
  std::string text;
};

struct Outcome {
  Json report;
  int exit_code = kSuccess;
};

inline std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::precondition, "sha256 failed");
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xF];
  }
  return out;
}

inline Input read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return {path, ss.str()};
}

// Space fixtures are fed through the same text path as files.
inline Input space_input(const std::string& fixture_name) {
  const auto& e = fixtures::entry(fixture_name);
  return {"fixture:" + fixture_name,
          doc::encode_space(fixtures::space(fixture_name), std::string(e.name), std::string(e.note))};
}

inline Input deployment_input(const std::string& fixture_name) {
  const auto& e = fixtures::entry(fixture_name);
  return {"fixture:" + fixture_name,
          doc::encode(doc::DeploymentDocument{std::string(e.name), std::string(e.note),
                                               fixtures::deployment(fixture_name)})};
}

// Parse failures are reported with the input's origin in front.
template <typename F>
auto with_origin(const Input& in, F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    throw Error(ErrorCode::parse, in.origin + ": " + e.what());
  }
}

inline doc::SpaceDocument parse_space(const Input& in) {
  return with_origin(in, [&] { return doc::parse_space(in.text); });
}

inline AuraSpace load_space(const Input& in) {
  return with_origin(in, [&] { return doc::to_space(doc::parse_space(in.text)); });
}

inline PointSet parse_set(const AuraSpace& s, std::string_view text) {
  return doc::LabelIndex(doc::labels_of(s)).set(text, 0);
}

// ---- JSON rendering ----------------------------------------------------------

inline Json set_json(const PointSet& s, const std::vector<std::string>& labels) {
  return Json(doc::label_list(s, labels));
}

inline Json family_json(const Family& f, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (const auto& s : f) out.push_back(set_json(s, labels));
  return out;
}

inline Json ratio_json(const Ratio& r) { return Json{{"num", r.num}, {"den", r.den}, {"decimal", r.decimal()}}; }

inline Json violations_json(const ValidationResult& v, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (const auto& x : v.violations) {
    Json j{{"rule", x.rule}, {"message", x.message}};
    if (x.point && *x.point < labels.size()) j["point"] = labels[*x.point];
    out.push_back(std::move(j));
  }
  return out;
}

inline Json approximation_json(const ApproximationReport& r, const std::vector<std::string>& labels) {
  return Json{{"target", set_json(r.target, labels)},       {"lower", set_json(r.lower, labels)},
              {"upper", set_json(r.upper, labels)},         {"boundary", set_json(r.boundary, labels)},
              {"boundary_size", r.boundary.size()},         {"accuracy", ratio_json(r.accuracy)},
              {"roughness", ratio_json(r.roughness)},       {"definable", r.definable}};
}

inline Json pair_json(const std::optional<PointPair>& p, const std::vector<std::string>& labels) {
  if (!p) return nullptr;
  return Json::array({labels.at(p->first), labels.at(p->second)});
}

inline Json trace_json(const std::vector<PointSet>& stages, std::size_t stabilized_at,
                       const std::vector<std::string>& labels) {
  return Json{{"stages", family_json(stages, labels)}, {"stabilized_at", stabilized_at}};
}

/// Report envelope: command echo, digest of arguments and inputs, result.
inline Json envelope(std::string_view command, const Json& arguments, const std::vector<Input>& inputs) {
  std::string material = arguments.dump();
  Json sources = Json::array();
  for (const auto& in : inputs) {
    material += '\0';
    material += in.text;
    sources.push_back(in.origin);
  }
  return Json{{"command", command},
              {"arguments", arguments},
              {"inputs", sources},
              {"input_digest", "sha256:" + sha256_hex(material)}};
}

/// Runs a command body, turning library faults into error reports.
/// Parse and naming faults exit 2; every other fault exits 1.
inline Outcome run(std::string_view command, const Json& arguments, const std::vector<Input>& inputs,
                   const std::function<Outcome(Json&)>& body) {
  auto report = envelope(command, arguments, inputs);
  try {
    auto out = body(report);
    out.report = std::move(report);
    return out;
  } catch (const Error& e) {
    report["error"] = Json{{"code", to_string(e.code())}, {"message", e.what()}};
    const bool usage = e.code() == ErrorCode::parse || e.code() == ErrorCode::unknown_name;
    return {std::move(report), usage ? kUsage : kFailure};
  }
}

// ---- commands ----------------------------------------------------------------

inline Outcome cmd_validate(const Input& in) {
  return run("validate", Json::object(), {in}, [&](Json& r) {
    const auto d = parse_space(in);
    const auto v = doc::validate(d);
    r["result"] = Json{{"name", d.name},
                       {"points", d.points},
                       {"open_count", d.opens.size()},
                       {"ok", v.ok()},
                       {"violations", violations_json(v, d.points)}};
    return Outcome{{}, v.ok() ? kSuccess : kFailure};
  });
}

inline Outcome cmd_analyze(const Input& in, const std::string& set_text) {
  return run("analyze", Json{{"set", set_text}}, {in}, [&](Json& r) {
    const auto s = load_space(in);
    const auto labels = doc::labels_of(s);
    const auto a = parse_set(s, set_text);
    const auto trace = closure_trace(s, a);
    const auto profile = classify_set(s, a);
    Json classes = Json::object();
    for (auto c : kAllOpenClasses) classes[std::string(to_string(c))] = profile[c];
    const auto sp = scope_profile(s);
    r["result"] = Json{
        {"set", set_json(a, labels)},
        {"closure", set_json(closure(s.topology(), a), labels)},
        {"interior", set_json(interior(s.topology(), a), labels)},
        {"aura_closure", set_json(aura_closure(s, a), labels)},
        {"aura_interior", set_json(aura_interior(s, a), labels)},
        {"closure_trace", trace_json(trace.stages, trace.stabilized_at, labels)},
        {"infinity_closure", set_json(trace.limit(), labels)},
        {"classes", classes},
        {"approximation", approximation_json(approximate(s, a), labels)},
        {"scope", Json{{"trivial", sp.trivial}, {"discrete", sp.discrete}, {"transitive", sp.transitive},
                       {"symmetric", sp.symmetric}}},
    };
    return Outcome{};
  });
}

inline Outcome cmd_enumerate(const Input& in, const std::string& class_name) {
  return run("enumerate", Json{{"class", class_name}}, {in}, [&](Json& r) {
    const auto s = load_space(in);
    const auto c = parse_open_class(class_name);
    const auto fam = enumerate_class(s, c);
    r["result"] = Json{{"class", to_string(c)}, {"count", fam.size()}, {"sets", family_json(fam, doc::labels_of(s))}};
    return Outcome{};
  });
}

inline Outcome cmd_separation(const Input& in) {
  return run("separation", Json::object(), {in}, [&](Json& r) {
    const auto s = load_space(in);
    const auto labels = doc::labels_of(s);
    const auto p = separation_profile(s);
    const auto t1 = t1_via_singletons(s);
    Json closed = Json::object();
    for (std::size_t x = 0; x < s.size(); ++x) closed[labels[x]] = static_cast<bool>(t1.per_point[x]);
    Json regular_witness = nullptr;
    if (p.a_regular_witness) {
      regular_witness = Json{{"point", labels.at(p.a_regular_witness->point)},
                             {"closed_set", set_json(p.a_regular_witness->closed, labels)}};
    }
    r["result"] = Json{
        {"a_t0", p.a_t0},
        {"a_t1", p.a_t1},
        {"a_t2", p.a_t2},
        {"a_regular", p.a_regular},
        {"t0", p.t0},
        {"t1", p.t1},
        {"t2", p.t2},
        {"witnesses", Json{{"a_t0", pair_json(p.a_t0_witness, labels)},
                           {"a_t1", pair_json(p.a_t1_witness, labels)},
                           {"a_t2", pair_json(p.a_t2_witness, labels)},
                           {"a_regular", regular_witness},
                           {"t0", pair_json(p.t0_witness, labels)},
                           {"t1", pair_json(p.t1_witness, labels)},
                           {"t2", pair_json(p.t2_witness, labels)}}},
        {"singletons_aura_closed", closed},
        {"t1_via_singletons", t1.all_closed},
    };
    return Outcome{};
  });
}

inline Json continuity_json(const ContinuityProfile& p) {
  return Json{{"continuous", p.continuous}, {"a_continuous", p.a_continuous}, {"a_semi", p.a_semi},
              {"a_pre", p.a_pre},           {"a_alpha", p.a_alpha},           {"a_beta", p.a_beta}};
}

inline Outcome cmd_map(const Input& source, const Input& target, const std::string& mapping_text) {
  return run("map", Json{{"mapping", mapping_text}}, {source, target}, [&](Json& r) {
    const auto x = load_space(source);
    const auto y = load_space(target);
    SpaceMap m{x, y, doc::parse_mapping(mapping_text, x, y)};
    const auto v = validate_map(m);
    const auto lx = doc::labels_of(x), ly = doc::labels_of(y);
    Json mapping = Json::object();
    for (std::size_t p = 0; p < m.mapping.size(); ++p) mapping[lx[p]] = ly.at(m.mapping[p]);
    Json result{{"mapping", mapping}, {"valid", v.ok()}, {"violations", violations_json(v, lx)}};
    if (v.ok()) {
      result["profile"] = continuity_json(continuity_profile(m));
      result["semi_via_closed_sets"] = semi_continuity_via_closed(m);
      result["semi_via_neighbourhoods"] = semi_continuity_via_neighbourhoods(m);
      Json pre = Json::array();
      for (const auto& o : aura_topology(y).opens()) {
        pre.push_back(Json{{"open", set_json(o, ly)}, {"preimage", set_json(preimage(m, o), lx)},
                           {"preimage_aura_open", is_aura_open(x, preimage(m, o))}});
      }
      result["aura_open_preimages"] = pre;
    }
    r["result"] = std::move(result);
    return Outcome{{}, v.ok() ? kSuccess : kFailure};
  });
}

inline Outcome cmd_rough(const Input& in, const std::string& set_text, const std::optional<Input>& refined) {
  std::vector<Input> inputs{in};
  if (refined) inputs.push_back(*refined);
  Json args{{"set", set_text}};
  if (refined) args["refined"] = refined->origin;
  return run("rough", args, inputs, [&](Json& r) {
    const auto s = load_space(in);
    const auto labels = doc::labels_of(s);
    const auto a = parse_set(s, set_text);
    Json result{{"approximation", approximation_json(approximate(s, a), labels)}};
    if (refined) {
      const auto fine = load_space(*refined);
      const bool refines = is_refinement(s, fine);
      result["is_refinement"] = refines;
      if (refines) {
        const auto rr = refinement_report(s, fine, a);
        result["refined_approximation"] = approximation_json(rr.fine, labels);
        result["monotonicity"] = Json{{"lower_grows", rr.lower_grows},
                                      {"upper_shrinks", rr.upper_shrinks},
                                      {"boundary_shrinks", rr.boundary_shrinks}};
      } else {
        result["refined_approximation"] = approximation_json(approximate(fine, a), labels);
      }
    }
    r["result"] = std::move(result);
    return Outcome{};
  });
}

struct SpreadOptions {
  std::string seed_set;
  std::optional<std::string> quarantine;
  std::optional<Input> distancing;  // replacement aura lines
};

inline Outcome cmd_spread(const Input& in, const SpreadOptions& opt) {
  std::vector<Input> inputs{in};
  Json args{{"set", opt.seed_set}};
  if (opt.quarantine) args["quarantine"] = *opt.quarantine;
  if (opt.distancing) {
    args["distancing"] = opt.distancing->origin;
    inputs.push_back(*opt.distancing);
  }
  return run("spread", args, inputs, [&](Json& r) {
    const auto base = load_space(in);
    const auto labels = doc::labels_of(base);
    const auto seed = parse_set(base, opt.seed_set);
    auto s = base;
    Json interventions = Json::array();
    if (opt.distancing) {
      const auto patch = with_origin(*opt.distancing, [&] { return doc::parse_scope_patch(opt.distancing->text, s); });
      s = apply_distancing(s, patch);
      interventions.push_back("distancing");
    }
    if (opt.quarantine) {
      s = apply_quarantine(s, parse_set(s, *opt.quarantine));
      interventions.push_back("quarantine");
    }
    const auto trace = spread_trace(s, seed);
    Json comps = Json::array();
    const auto sc = spread_components(s);
    for (const auto& c : sc.components) {
      comps.push_back(Json{{"reach", set_json(c.reach, labels)}, {"generators", set_json(c.generators, labels)}});
    }
    Json result{{"seed", set_json(seed, labels)},
                {"interventions", interventions},
                {"trace", trace_json(trace.stages, trace.stabilized_at, labels)},
                {"reach", set_json(trace.reach, labels)},
                {"unreached", set_json(trace.unreached, labels)},
                {"steps", trace.stabilized_at},
                {"detection_closure", set_json(aura_closure(s, seed), labels)},
                {"components", comps},
                {"components_overlap", sc.overlapping}};
    if (!interventions.empty()) result["reach_without_interventions"] = set_json(total_spread(base, seed), labels);
    r["result"] = std::move(result);
    return Outcome{};
  });
}

inline Outcome cmd_sensor(const Input& in, const std::string& rect_text, std::optional<std::size_t> steps) {
  Json args{{"target", rect_text}};
  if (steps) args["steps"] = *steps;
  return run("sensor", args, {in}, [&](Json& r) {
    const auto d = with_origin(in, [&] { return doc::parse_deployment(in.text); });
    const auto rect = doc::parse_rect(rect_text);
    const auto g = sensor::build_grid_space(d.deployment);
    const auto labels = doc::labels_of(g.aura_space);
    const auto target = sensor::grid_points_in(g, rect);
    const auto c = sensor::coverage_report(g, target);
    std::size_t uncovered = 0;
    for (const auto& o : g.owner) uncovered += o ? 0 : 1;
    const auto& dep = d.deployment;
    Json result{
        {"grid", Json{{"columns", g.columns},
                      {"rows", g.rows},
                      {"points", g.size()},
                      {"origin", Json::array({dep.region.x0, dep.region.y0})},
                      {"resolution", dep.resolution},
                      {"uncovered_points", uncovered}}},
        {"target_size", target.size()},
        {"approximation", approximation_json(c.approximation, labels)},
        {"lower_size", c.approximation.lower.size()},
        {"upper_size", c.approximation.upper.size()},
        {"full_coverage", c.full_coverage},
        {"target_aura_open", c.target_aura_open},
    };
    if (steps) result["relay_reach"] = set_json(sensor::relay_reach(g, target, *steps), labels);
    r["result"] = std::move(result);
    return Outcome{};
  });
}

inline Outcome cmd_fixtures() {
  return run("fixtures", Json::object(), {}, [&](Json& r) {
    Json list = Json::array();
    for (const auto& e : fixtures::kCatalog) {
      list.push_back(Json{{"name", e.name}, {"kind", to_string(e.kind)}, {"note", e.note}});
    }
    r["result"] = Json{{"fixtures", list}};
    return Outcome{};
  });
}

/// Canonical document text for a fixture; maps export their mapping line.
inline std::string export_fixture(const std::string& name) {
  const auto& e = fixtures::entry(name);
  switch (e.kind) {
    case fixtures::Kind::space: return space_input(name).text;
    case fixtures::Kind::deployment: return deployment_input(name).text;
    case fixtures::Kind::map: {
      const auto m = fixtures::map(name);
      return doc::encode_mapping(m.mapping, m.source, m.target) + "\n";
    }
  }
  return {};
}

inline Outcome cmd_fuzz(std::uint64_t seed, std::size_t cases, std::size_t max_n) {
  return run("fuzz", Json{{"seed", seed}, {"cases", cases}, {"max_n", max_n}}, {}, [&](Json& r) {
    if (cases < 1) throw Error(ErrorCode::parse, "--cases must be at least 1");
    if (max_n < 2 || max_n > props::kMaxFuzzUniverse) {
      throw Error(ErrorCode::parse, "--max-n must lie in [2, " + std::to_string(props::kMaxFuzzUniverse) + "]");
    }
    const auto suite = props::run_property_suite(seed, cases, max_n);
    Json list = Json::array();
    for (const auto& p : suite.properties) {
      Json j{{"name", p.name}, {"checked", p.checked}, {"failed", p.failed}, {"passed", p.passed()}};
      if (p.first_failure) {
        j["counterexample"] = Json{{"case", p.first_failure->case_index},
                                   {"detail", p.first_failure->detail},
                                   {"document", p.first_failure->document}};
      }
      list.push_back(std::move(j));
    }
    r["result"] = Json{{"passed", suite.passed()}, {"properties", list}};
    return Outcome{{}, suite.passed() ? kSuccess : kFailure};
  });
}

enum class Format { report, compact };

inline std::string render(const Json& report, Format f) {
  return f == Format::report ? report.dump(2) + "\n" : report.dump() + "\n";
}

}  // namespace aura::cli
