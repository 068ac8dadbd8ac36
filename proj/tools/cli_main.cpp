#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "schreier/report_io.hpp"

using namespace schreier;

namespace {

constexpr const char* kCommands[] = {"act-basis",  "act-verify", "act-grassmann", "group-series",
                                     "group-verify", "group-even", "group-surgery", "group-enum",
                                     "mod-basis",  "mod-verify", "mod-affine",    "mod-large",
                                     "mod-nilparts"};

struct Options {
  std::string input_path;
  std::string inline_json;
  std::string out_path;
  RunConfig cfg;
};

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot open output file '" << out_path << "'\n";
      return 2;
    }
    out << text;
  }
  return 0;
}

int run_one(Options& opt) {
  if (!opt.input_path.empty() && !opt.inline_json.empty()) {
    std::cerr << "use either --input or --json, not both\n";
    return 2;
  }
  try {
    if (!opt.input_path.empty()) {
      std::ifstream in(opt.input_path);
      if (!in) {
        std::cerr << "cannot read input file '" << opt.input_path << "'\n";
        return 2;
      }
      opt.cfg.input = Json::parse(in);
      opt.cfg.input_name = opt.input_path;
    } else if (!opt.inline_json.empty()) {
      opt.cfg.input = Json::parse(opt.inline_json);
      opt.cfg.input_name = "<inline>";
    } else {
      opt.cfg.input = Json::object();
      opt.cfg.input_name = "<none>";
    }
  } catch (const Json::parse_error& e) {
    // position-annotated parse failure
    std::cerr << "input parse error: " << e.what() << "\n";
    return 2;
  }
  RunResult res = run_command(opt.cfg);
  int ec = emit(res.output, opt.out_path);
  return ec != 0 ? ec : res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schreier rewriting toolkit: coset graphs, subact bases and exact Hilbert-series checks"};
  app.set_version_flag("--version", library_version());
  app.require_subcommand(1);

  std::vector<std::pair<CLI::App*, std::shared_ptr<Options>>> subs;
  for (const char* name : kCommands) {
    auto opt = std::make_shared<Options>();
    opt->cfg.command = name;
    CLI::App* sub = app.add_subcommand(name, "");
    sub->add_option("--input,-i", opt->input_path, "input JSON file");
    sub->add_option("--json,-j", opt->inline_json, "inline input JSON");
    sub->add_option("--cap,-c", opt->cfg.cap, "series truncation cap")->check(CLI::Range(0, 64));
    sub->add_option("--radius,-N", opt->cfg.radius, "coset graph radius")->check(CLI::Range(0, 16));
    sub->add_option("--seed", opt->cfg.seed, "seed for randomized searches");
    sub->add_option("--budget", opt->cfg.budget, "search budget");
    sub->add_option("--format,-f", opt->cfg.format, "output format: json, csv or dot")
        ->check(CLI::IsMember({"json", "csv", "dot"}));
    sub->add_option("--out,-o", opt->out_path, "write the report to a file");
    subs.emplace_back(sub, opt);
  }

  auto regress = std::make_shared<Options>();
  CLI::App* reg = app.add_subcommand("regress", "run every case in a corpus directory");
  std::string corpus_dir;
  reg->add_option("corpus", corpus_dir, "directory of case JSON files")->required();
  reg->add_option("--out,-o", regress->out_path, "write the table to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (reg->parsed()) {
    RegressResult r = run_regress(corpus_dir);
    std::cerr << r.timing;
    int ec = emit(r.table, regress->out_path);
    return ec != 0 ? ec : r.exit_code;
  }
  for (auto& [sub, opt] : subs)
    if (sub->parsed()) return run_one(*opt);
  return 2;
}
