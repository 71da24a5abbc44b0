#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "aura/commands.hpp"

namespace {

using aura::cli::Input;

// One space source per command: a file path or --fixture NAME.
struct SpaceSource {
  std::string file;
  std::string fixture;

  void attach(CLI::App* cmd, const char* what = "space document") {
    cmd->add_option("file", file, what);
    cmd->add_option("--fixture", fixture, "built-in fixture instead of a file");
  }

  [[nodiscard]] Input space() const {
    if (!fixture.empty()) return aura::cli::space_input(fixture);
    if (file.empty()) throw aura::Error(aura::ErrorCode::parse, "give a file or --fixture NAME");
    return aura::cli::read_file(file);
  }

  [[nodiscard]] Input deployment() const {
    if (!fixture.empty()) return aura::cli::deployment_input(fixture);
    if (file.empty()) throw aura::Error(aura::ErrorCode::parse, "give a file or --fixture NAME");
    return aura::cli::read_file(file);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite aura spaces: operators, open-set classes, separation, rough sets, spread and coverage"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "report";
  app.add_option("--format", format, "report (indented) or compact")
      ->check(CLI::IsMember({"report", "compact"}));

  SpaceSource src, dst, refined;
  std::string set_text, class_name, mapping, target, quarantine, distancing, export_name;
  std::optional<std::size_t> steps;
  std::uint64_t seed = 42;
  std::size_t cases = 500, max_n = 6;

  auto* validate = app.add_subcommand("validate", "check a space document");
  src.attach(validate);

  auto* analyze = app.add_subcommand("analyze", "operators, classes and approximation of one set");
  src.attach(analyze);
  analyze->add_option("--set", set_text, "labels, e.g. \"a,b\"")->required();

  auto* enumerate = app.add_subcommand("enumerate", "all subsets in one open-set class");
  src.attach(enumerate);
  enumerate->add_option("--class", class_name, "open, semi_open, ..., a_b_open")->required();

  auto* separation = app.add_subcommand("separation", "separation axioms and witnesses");
  src.attach(separation);

  auto* map = app.add_subcommand("map", "continuity profile of a map between two spaces");
  map->add_option("source", src.file, "source space document");
  map->add_option("target", dst.file, "target space document");
  map->add_option("--mapping", mapping, "\"a=b,c=d\"");
  map->add_option("--fixture", src.fixture, "built-in map fixture");

  auto* rough = app.add_subcommand("rough", "rough approximation, optionally against a refined scope");
  src.attach(rough);
  rough->add_option("--set", set_text, "target labels")->required();
  rough->add_option("--refined", refined.file, "space document with the refined scope");
  rough->add_option("--refined-fixture", refined.fixture, "built-in refined space");

  auto* spread = app.add_subcommand("spread", "forward spread trace with optional interventions");
  src.attach(spread);
  spread->add_option("--set", set_text, "initially infected labels")->required();
  spread->add_option("--quarantine", quarantine, "labels whose auras become singletons");
  spread->add_option("--distancing", distancing, "file of replacement 'x -> {..}' aura lines");

  auto* sensor = app.add_subcommand("sensor", "grid coverage of a target rectangle");
  src.attach(sensor, "deployment document");
  sensor->add_option("--target", target, "x0,y0,x1,y1")->required();
  sensor->add_option("--steps", steps, "relay steps from the target");

  auto* fixtures = app.add_subcommand("fixtures", "list built-in fixtures");
  fixtures->add_option("--export", export_name, "print one fixture's document instead");

  auto* fuzz = app.add_subcommand("fuzz", "run every property suite on generated spaces");
  fuzz->add_option("--seed", seed, "generator seed");
  fuzz->add_option("--cases", cases, "number of generated spaces");
  fuzz->add_option("--max-n", max_n, "largest universe, 2..8");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : aura::cli::kUsage;
  }

  const auto fmt = format == "compact" ? aura::cli::Format::compact : aura::cli::Format::report;
  try {
    aura::cli::Outcome out;
    if (validate->parsed()) {
      out = aura::cli::cmd_validate(src.space());
    } else if (analyze->parsed()) {
      out = aura::cli::cmd_analyze(src.space(), set_text);
    } else if (enumerate->parsed()) {
      out = aura::cli::cmd_enumerate(src.space(), class_name);
    } else if (separation->parsed()) {
      out = aura::cli::cmd_separation(src.space());
    } else if (map->parsed()) {
      if (!src.fixture.empty()) {
        const auto m = aura::fixtures::map(src.fixture);
        const auto space = aura::cli::space_input("pre_not_semi");
        out = aura::cli::cmd_map(space, space, aura::doc::encode_mapping(m.mapping, m.source, m.target));
      } else {
        if (src.file.empty() || dst.file.empty() || mapping.empty()) {
          throw aura::Error(aura::ErrorCode::parse, "map needs SOURCE TARGET --mapping, or --fixture NAME");
        }
        out = aura::cli::cmd_map(aura::cli::read_file(src.file), aura::cli::read_file(dst.file), mapping);
      }
    } else if (rough->parsed()) {
      std::optional<Input> fine;
      if (!refined.fixture.empty() || !refined.file.empty()) fine = refined.space();
      out = aura::cli::cmd_rough(src.space(), set_text, fine);
    } else if (spread->parsed()) {
      aura::cli::SpreadOptions opt{set_text, std::nullopt, std::nullopt};
      if (!quarantine.empty()) opt.quarantine = quarantine;
      if (!distancing.empty()) opt.distancing = aura::cli::read_file(distancing);
      out = aura::cli::cmd_spread(src.space(), opt);
    } else if (sensor->parsed()) {
      out = aura::cli::cmd_sensor(src.deployment(), target, steps);
    } else if (fixtures->parsed()) {
      if (!export_name.empty()) {
        std::cout << aura::cli::export_fixture(export_name);
        return 0;
      }
      out = aura::cli::cmd_fixtures();
    } else if (fuzz->parsed()) {
      out = aura::cli::cmd_fuzz(seed, cases, max_n);
    }
    std::cout << aura::cli::render(out.report, fmt);
    return out.exit_code;
  } catch (const aura::Error& e) {
    const aura::cli::Json report{{"error", {{"code", aura::to_string(e.code())}, {"message", e.what()}}}};
    std::cout << aura::cli::render(report, fmt);
    return e.code() == aura::ErrorCode::parse || e.code() == aura::ErrorCode::unknown_name ? aura::cli::kUsage
                                                                                            : aura::cli::kFailure;
  }
}
