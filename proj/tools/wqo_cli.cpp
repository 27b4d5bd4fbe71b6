#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "wqo/coverability.hpp"
#include "wqo/oracle.hpp"
#include "wqo/termlang.hpp"

using namespace wqo;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kVerdictFalse = 1;
constexpr int kInputError = 2;
constexpr int kInternal = 3;

struct Options {
  bool json = false;
  std::string type;
  std::string expr;
  std::size_t budget = 40;
  std::size_t max_size = 8;
  std::uint64_t seed = 1;
  std::size_t samples = 24;
  std::string mutate;
  std::string net;
  std::string init;
  std::string target;
  bool expect_coverable = false;
};

int run_eval(const Options& o) {
  auto t = parse_type(o.type);
  auto X = build_presentation(t);
  auto e = parse_set_expr(o.expr, t);
  auto r = evaluate(*X, e);
  auto text = render_result(r, t);
  if (o.json) {
    json j{{"command", "eval"}, {"type", render(t)}, {"expr", o.expr}, {"result", text}};
    if (auto* s = std::get_if<ClosedSet>(&r)) {
      j["kind"] = s->is_up() ? "up" : "down";
      j["components"] = s->is_up() ? s->up().size() : s->down().size();
    } else {
      j["kind"] = "bool";
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
  return kOk;
}

int run_check(const Options& o) {
  auto t = parse_type(o.type);
  PresentationPtr X = build_presentation(t);
  if (!o.mutate.empty()) X = corrupt(X, o.mutate);
  CheckOptions opts;
  opts.seed = o.seed;
  opts.samples = o.samples;
  auto report = check_presentation(*X, t, Budget{o.budget, o.max_size}, opts);
  std::cout << (o.json ? report.json_lines() : report.text());
  return report.passed() ? kOk : kInternal;
}

int run_enum(const Options& o) {
  auto t = parse_type(o.type);
  auto xs = enumerate(t, Budget{o.budget, o.max_size});
  for (std::size_t k = 0; k < xs.size(); ++k) {
    auto text = render_value(xs[k], t);
    if (o.json)
      std::cout << json{{"index", k}, {"size", structural_size(xs[k])}, {"element", text}}.dump()
                << "\n";
    else
      std::cout << text << "\n";
  }
  return kOk;
}

int run_cover(const Options& o) {
  auto net = load_net(o.net);
  auto init = parse_marking(o.init);
  auto target = parse_marking(o.target);
  auto r = coverability(net, init, target);
  std::string type = "Nat";
  for (std::size_t i = 1; i < net.places; ++i) type += ",Nat";
  auto t = parse_type(net.places == 1 ? type : "Prod(" + type + ")");
  auto basis = render_set(ClosedSet(r.basis), t);
  if (o.json) {
    std::cout << json{{"command", "cover"},
                      {"net", o.net},
                      {"coverable", r.coverable},
                      {"iterations", r.iterations},
                      {"basis", basis},
                      {"basis_size", r.basis.size()}}
                     .dump()
              << "\n";
  } else {
    std::cout << "coverable: " << (r.coverable ? "true" : "false") << "\n"
              << "iterations: " << r.iterations << "\n"
              << "basis: " << basis << "\n";
  }
  return o.expect_coverable && !r.coverable ? kVerdictFalse : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upward- and downward-closed sets of well-quasi-orderings"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Print JSON lines");

  auto* eval = app.add_subcommand("eval", "Evaluate a set expression");
  eval->add_option("--type", o.type, "Type expression")->required();
  eval->add_option("--expr", o.expr, "Set expression")->required();

  auto* check = app.add_subcommand("check", "Run the oracle property suite");
  check->add_option("--type", o.type, "Type expression")->required();
  check->add_option("--budget", o.budget, "Maximum number of enumerated elements");
  check->add_option("--max-size", o.max_size, "Maximum structural size");
  check->add_option("--seed", o.seed, "Sampling seed");
  check->add_option("--samples", o.samples, "Sampled inputs per operation");
  check->add_option("--mutate", o.mutate, "Corrupt one procedure first")
      ->check(CLI::IsMember({"cf", "ci", "if", "ii", "pi", "od", "id"}));

  auto* cover = app.add_subcommand("cover", "Petri net backward coverability");
  cover->add_option("--net", o.net, "Net file (JSON)")->required();
  cover->add_option("--init", o.init, "Initial marking, e.g. 1,0")->required();
  cover->add_option("--target", o.target, "Target marking, e.g. 3,0")->required();
  cover->add_flag("--expect-coverable", o.expect_coverable,
                  "Exit with status 1 when the target is not coverable");

  auto* en = app.add_subcommand("enum", "Enumerate elements of a type");
  en->add_option("--type", o.type, "Type expression")->required();
  en->add_option("--budget", o.budget, "Maximum number of elements");
  en->add_option("--max-size", o.max_size, "Maximum structural size");

  for (auto* sub : {eval, check, cover, en}) sub->add_flag("--json", o.json, "Print JSON lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*eval) return run_eval(o);
    if (*check) return run_check(o);
    if (*cover) return run_cover(o);
    return run_enum(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const TypeMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const PolarityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
