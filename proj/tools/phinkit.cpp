#include "phinkit/io/commands.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

namespace {

bool read_input(const std::string& path, std::string& text, std::string& error) {
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    error = "cannot open " + path;
    return false;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with filtered (phi,N)-modules, spectral sequences and Drinfeld models"};
  app.require_subcommand(1);

  std::string format = "json";
  std::uint64_t seed = 0;
  std::size_t budget = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--seed", seed, "seed for the sampled admissibility fallback");
    sub->add_option("--budget", budget, "enumeration guard (candidates, vertices or flats)");
  };

  std::string input_path;
  for (const auto& name : phinkit::io::file_commands()) {
    auto* sub = app.add_subcommand(name, "analyse a JSON document (use - for stdin)");
    sub->add_option("input", input_path, "input file")->required();
    add_common(sub);
  }

  // Integer parameters of the drinfeld commands, by command.
  const std::map<std::string, std::vector<std::string>> params = {{"drinfeld-ball", {"d", "p", "n"}},
                                                                  {"drinfeld-counts", {"d", "q", "i"}},
                                                                  {"drinfeld-arrangement", {"r", "q"}},
                                                                  {"drinfeld-blowup", {"r", "q"}}};
  std::map<std::string, long> values;
  for (const auto& name : phinkit::io::parameter_commands()) {
    auto* sub = app.add_subcommand(name, "building and arrangement combinatorics");
    for (const auto& key : params.at(name)) sub->add_option("--" + key, values[key])->required();
    add_common(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  phinkit::io::RunOptions opts;
  opts.seed = seed;
  if (budget > 0) opts.budget = budget;

  std::string text;
  phinkit::io::Json param_obj = phinkit::io::Json::object();
  if (params.count(command)) {
    for (const auto& key : params.at(command)) param_obj[key] = values[key];
  } else {
    std::string error;
    if (!read_input(input_path, text, error)) {
      std::cerr << "phinkit: " << error << '\n';
      return 1;
    }
  }
  const auto res = phinkit::io::run(command, text, param_obj, opts, format);
  std::cout << res.out;
  std::cerr << res.err;
  return res.exit_code;
}
