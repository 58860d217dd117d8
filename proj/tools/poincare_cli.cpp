// poincare-cli: generate, verify, compare and export vector/momentum matrices.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "poincare/bundle.hpp"
#include "poincare/lyubarskii.hpp"

namespace {

using namespace poincare;
using nlohmann::json;

enum Exit { kOk = 0, kVerifyFailed = 1, kNoSolution = 2, kIoError = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::array<Spin, 4> parse_spins(const std::string& text) {
  std::array<Spin, 4> out;
  std::stringstream in(text);
  std::string item;
  std::size_t k = 0;
  while (std::getline(in, item, ',')) {
    if (k == 4) throw IoError("--spins takes exactly four doubled integers");
    std::size_t used = 0;
    int value = -1;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || value < 0) throw IoError("bad doubled spin '" + item + "'");
    out[k++] = Spin::from_twice(value);
  }
  if (k != 4) throw IoError("--spins takes exactly four doubled integers");
  return out;
}

RadicalScalar parse_scalar(const std::string& text, const char* flag) {
  try {
    return parse_radical(text);
  } catch (const std::exception& e) {
    throw IoError(std::string(flag) + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

MatrixBundle load_bundle(const std::string& path) {
  try {
    return parse_bundle(read_file(path));
  } catch (const std::invalid_argument& e) {
    throw IoError(path + ": " + e.what());
  }
}

VectorSet apply_block(const VectorSet& v, const std::string& block) {
  if (block == "keep12") return momentum_from_vectors(v, BlockChoice::Keep12);
  if (block == "keep21") return momentum_from_vectors(v, BlockChoice::Keep21);
  return v;
}

json rules_json(const std::vector<RuleReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) out.push_back(report_to_json(r));
  return out;
}

std::vector<std::string> failing_ids(const std::vector<RuleReport>& reports) {
  std::vector<std::string> ids;
  for (const auto& r : reports) {
    if (!r.holds) ids.push_back(r.rule_id);
  }
  return ids;
}

struct GenOptions {
  std::string spins, t12 = "1", t21 = "1", source = "appendixA", block = "both", out = "-";
};

int cmd_gen(const GenOptions& o) {
  const auto s = parse_spins(o.spins);
  const FreeParams params{parse_scalar(o.t12, "--t12"), parse_scalar(o.t21, "--t21")};
  const Source source = source_from_string(o.source);
  const VectorSet v = apply_block(build_vectors(source, s[0], s[1], s[2], s[3], params), o.block);
  write_output(o.out, serialize_exact(make_bundle(source, o.block, v)));
  return kOk;
}

struct VerifyOptions {
  std::string in;
  int sweep = -1;
};

int verify_bundle(const std::string& path) {
  const MatrixBundle b = load_bundle(path);
  const auto reports = check_all(b.generators, b.vectors);
  const bool ok = all_hold(reports);
  json out = {{"spins", b.spins_twice},
              {"caseTag", to_string(b.vectors.tag)},
              {"kind", b.vectors.kind == VectorKind::Momentum ? "momentum" : "vector"},
              {"ruleCount", reports.size()},
              {"allHold", ok},
              {"failing", failing_ids(reports)},
              {"rules", rules_json(reports)}};
  std::cout << out.dump(2) << "\n";
  return ok ? kOk : kVerifyFailed;
}

int verify_sweep(int bound) {
  if (bound < 0) throw IoError("--sweep bound must be nonnegative");
  std::size_t quadruples = 0, admissible = 0, checked = 0;
  json failures = json::array();
  for (int a = 0; a <= bound; ++a) {
    for (int b = 0; b <= bound; ++b) {
      for (int c = 0; c <= bound; ++c) {
        for (int d = 0; d <= bound; ++d) {
          ++quadruples;
          const Spin A = Spin::from_twice(a), B = Spin::from_twice(b), C = Spin::from_twice(c), D = Spin::from_twice(d);
          const json spins = {a, b, c, d};
          if (classify_case(A, B, C, D) == CaseTag::NoSolution) {
            bool raised = false;
            try {
              closed_form_vectors(A, B, C, D, {1, 1});
            } catch (const NoSolutionError&) {
              raised = true;
            }
            if (!raised) failures.push_back({{"spins", spins}, {"problem", "NoSolution not reported"}});
            continue;
          }
          ++admissible;
          const GeneratorSet g = direct_sum(SpinPair{A, B}, SpinPair{C, D});
          for (Source source : {Source::ClosedForm, Source::Recursion, Source::Lyubarskii}) {
            const VectorSet v = build_vectors(source, A, B, C, D, {1, 1});
            for (const char* block : {"both", "keep12", "keep21"}) {
              const auto reports = check_all(g, apply_block(v, block));
              ++checked;
              if (!all_hold(reports)) {
                failures.push_back(
                    {{"spins", spins}, {"source", to_string(source)}, {"block", block}, {"failing", failing_ids(reports)}});
              }
            }
          }
        }
      }
    }
  }
  const bool ok = failures.empty();
  json out = {{"sweepBound", bound}, {"quadruples", quadruples}, {"admissible", admissible},
              {"setsChecked", checked}, {"allHold", ok},       {"failures", failures}};
  std::cout << out.dump(2) << "\n";
  return ok ? kOk : kVerifyFailed;
}

struct EquivOptions {
  std::string spins, t12 = "1", t21 = "1", lambda12 = "1", lambda21 = "1";
};

int cmd_equiv(const EquivOptions& o) {
  const auto s = parse_spins(o.spins);
  const FreeParams t{parse_scalar(o.t12, "--t12"), parse_scalar(o.t21, "--t21")};
  const LambdaParams lambdas{parse_scalar(o.lambda12, "--lambda12"), parse_scalar(o.lambda21, "--lambda21")};
  const VectorSet closed = closed_form_vectors(s[0], s[1], s[2], s[3], t);
  const VectorSet lyub = lyubarskii_vectors(s[0], s[1], s[2], s[3], lambdas);
  const EquivalenceReport r = equivalence_ratio(closed, lyub);
  const auto text = [](const std::optional<RadicalScalar>& x) { return x ? json(x->to_string()) : json(nullptr); };
  json out = {{"caseTag", to_string(closed.tag)},
              {"equivalent", r.equivalent()},
              {"ratio12", text(r.ratio12)},
              {"ratio21", text(r.ratio21)}};
  if (r.mismatch) out["mismatch"] = r.mismatch->describe();
  std::cout << out.dump(2) << "\n";
  return r.equivalent() ? kOk : kVerifyFailed;
}

struct ExportOptions {
  std::string in, format = "exact-json", out = "-";
};

int cmd_export(const ExportOptions& o) {
  const MatrixBundle b = load_bundle(o.in);
  std::string text;
  if (o.format == "exact-json") {
    text = serialize_exact(b);
  } else if (o.format == "float-json") {
    text = serialize_float(b);
  } else if (o.format == "plain") {
    text = serialize_plain(b);
  } else {
    throw IoError("unknown format " + o.format);
  }
  write_output(o.out, text);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vector and momentum matrices for (A,B) + (C,D) Lorentz representations"};
  app.require_subcommand(1);
  const std::string spins_help = "doubled spins 2A,2B,2C,2D, e.g. 1,1,0,0";

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a matrix bundle");
  gen_cmd->add_option("--spins", gen.spins, spins_help)->required();
  gen_cmd->add_option("--t12", gen.t12, "12-block parameter (or lambda12 for lyubarskii)");
  gen_cmd->add_option("--t21", gen.t21, "21-block parameter (or lambda21 for lyubarskii)");
  gen_cmd->add_option("--source", gen.source)->check(CLI::IsMember({"appendixA", "recursion", "lyubarskii"}));
  gen_cmd->add_option("--block", gen.block)->check(CLI::IsMember({"both", "keep12", "keep21"}));
  gen_cmd->add_option("--out", gen.out, "output path, - for stdout");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "check commutation rules of a bundle or a sweep");
  auto* in_opt = verify_cmd->add_option("--in", verify.in, "bundle path, - for stdin");
  auto* sweep_opt = verify_cmd->add_option("--sweep", verify.sweep, "check every quadruple with doubled spins <= N");
  in_opt->excludes(sweep_opt);
  verify_cmd->require_option(1);

  EquivOptions equiv;
  auto* equiv_cmd = app.add_subcommand("equiv", "compare closed-form and Clebsch-Gordan vector matrices");
  equiv_cmd->add_option("--spins", equiv.spins, spins_help)->required();
  equiv_cmd->add_option("--t12", equiv.t12);
  equiv_cmd->add_option("--t21", equiv.t21);
  equiv_cmd->add_option("--lambda12", equiv.lambda12);
  equiv_cmd->add_option("--lambda21", equiv.lambda21);

  ExportOptions exp;
  auto* export_cmd = app.add_subcommand("export", "re-emit a bundle");
  export_cmd->add_option("--in", exp.in, "bundle path, - for stdin")->required();
  export_cmd->add_option("--format", exp.format, "exact-json, float-json or plain");
  export_cmd->add_option("--out", exp.out, "output path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kIoError;
  }

  try {
    if (*gen_cmd) return cmd_gen(gen);
    if (*verify_cmd) return verify.in.empty() ? verify_sweep(verify.sweep) : verify_bundle(verify.in);
    if (*equiv_cmd) return cmd_equiv(equiv);
    if (*export_cmd) return cmd_export(exp);
  } catch (const NoSolutionError& e) {
    std::cerr << "no solution: " << e.what() << "\n";
    return kNoSolution;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIoError;
  }
  return kOk;
}
