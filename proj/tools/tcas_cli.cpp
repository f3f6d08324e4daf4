#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  using namespace tcas::cli;
  CLI::App app{"Exact tractor and Verma-module computations for Grassmannian structures"};
  RunConfig config;
  std::string format = "text";
  app.add_option("command,--command", config.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("--n", config.n, "Rank of the unprimed bundle")->capture_default_str();
  app.add_option("--k", config.k, "Column height of the target bundle")->capture_default_str();
  app.add_option("--j", config.j, "Form degree (decompose-forms)")->capture_default_str();
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for pseudorandom sections")->capture_default_str();
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  config.format = format == "json" ? Format::Json : Format::Text;
  return run(config, std::cout, std::cerr);
}
