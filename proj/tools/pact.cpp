#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pact/dsl.hpp"

namespace {

int read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "pact: cannot open '" << path << "'\n";
    return 2;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partial actions, crossed products and partial representations"};
  app.require_subcommand(1);

  std::string run_file, out_path, format = "text";
  CLI::App* run = app.add_subcommand("run", "execute a batch file and report");
  run->add_option("file", run_file, "input file")->required();
  run->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  run->add_option("--out", out_path, "write the report to a file");

  std::string check_file;
  CLI::App* check = app.add_subcommand("check", "parse only");
  check->add_option("file", check_file, "input file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;  // --help is not an error
  }

  try {
    if (check->parsed()) {
      std::string text;
      if (int rc = read_file(check_file, text)) return rc;
      pact::dsl::parse_spec(text);
      std::cout << "ok\n";
      return 0;
    }
    std::string text;
    if (int rc = read_file(run_file, text)) return rc;
    pact::dsl::SpecDocument doc = pact::dsl::parse_spec(text);
    pact::dsl::Report report = pact::dsl::run(doc);
    std::string bytes = pact::dsl::emit(
        report, format == "json" ? pact::dsl::Format::json : pact::dsl::Format::text);
    if (out_path.empty()) {
      std::cout << bytes;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "pact: cannot write '" << out_path << "'\n";
        return 2;
      }
      out << bytes;
    }
    return report.all_ok() ? 0 : 1;
  } catch (const pact::dsl::ParseError& e) {
    std::cerr << "pact: parse error: " << e.what() << "\n";
    return 2;
  } catch (const pact::Error& e) {
    std::cerr << "pact: " << e.what() << "\n";
    return 2;
  }
}
