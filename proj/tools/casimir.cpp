/*
 * Copyright 2026 The casimir-engine Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// casimir <command> --config <path> [--out <path>]

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "casimir/cli.hpp"

int main(int argc, char** argv) {
  namespace cli = casimir::cli;

  CLI::App app{"Casimir free energy, pressure and PFA force between real mirrors"};
  std::string command;
  std::string config_path;
  std::string out_path;
  app.add_option("command", command,
                 "energy | pressure | eta | pfa-force | pfa-gradient | thermal-ratio | sweep")
      ->required();
  app.add_option("--config", config_path, "JSON configuration file")->required();
  app.add_option("--out", out_path, "CSV output path (default: config 'output', else stdout)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  const auto cmd = cli::parse_command(command);
  if (!cmd) {
    std::cerr << "casimir: unknown command '" << command << "'\n";
    return 1;
  }

  std::ifstream config_file(config_path);
  if (!config_file) {
    std::cerr << "casimir: cannot read config '" << config_path << "'\n";
    return 1;
  }
  std::stringstream text;
  text << config_file.rdbuf();

  try {
    cli::RunConfig config = cli::parse_config(text.str(), *cmd);
    if (!out_path.empty()) config.output = out_path;

    if (!config.output) return cli::run(config, std::cout, std::cerr);

    std::ostringstream csv;
    const int status = cli::run(config, csv, std::cerr);
    std::ofstream out(*config.output, std::ios::binary);
    out << csv.str();
    out.close();
    if (!out) {
      std::cerr << "casimir: cannot write '" << *config.output << "'\n";
      return 1;
    }
    return status;
  } catch (const std::exception& e) {
    std::cerr << "casimir: " << e.what() << '\n';
    return 1;
  }
}
