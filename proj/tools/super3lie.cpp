#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "super3lie/cli.hpp"

int main(int argc, char** argv) {
  using namespace super3lie;
  CLI::App app{"Exact computations for 3-Lie superalgebras"};
  std::string command, job_path, out_path;
  std::size_t dim_cap = 0;
  int level_cap = 0;
  app.add_option("command", command, "verify | derivations | verify-rep | cohomology | build-extension | extract | "
                                     "split-test | compatible-pairs | obstruction | lift")
      ->required();
  app.add_option("--job", job_path, "job file (JSON)")->required();
  app.add_option("--out", out_path, "write the JSON report here instead of standard output");
  auto* dim_opt = app.add_option("--dim-cap", dim_cap, "largest algebra dimension accepted");
  auto* level_opt = app.add_option("--level-cap", level_cap, "largest cochain level built");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  RunOptions options;
  if (*dim_opt) options.dim_cap = dim_cap;
  if (*level_opt) options.level_cap = level_cap;
  CommandResult res = run_job_file(command, job_path, options);
  for (const auto& line : res.summary) std::cout << line << "\n";
  std::string text = render_report(res.report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 2;
    }
    out << text;
  }
  return res.exit_code;
}
