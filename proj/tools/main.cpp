#include <CLI11.hpp>

#include <q3inv/cyclotomic.hpp>

#include <cstdio>

int main(int argc, char** argv) {
  CLI::App app{"Exact quantum 3-manifold invariants"};
  app.require_subcommand(0, 1);

  bool show_version = false;
  app.add_flag("--version", show_version, "Print version and exit");

  CLI11_PARSE(app, argc, argv);

  if (show_version) {
    std::puts("q3inv 1.0.0");
    return 0;
  }
  std::puts(app.help().c_str());
  return 0;
}
