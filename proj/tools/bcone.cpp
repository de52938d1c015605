// Command-line front end for the Betti cone library.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bcone/cli/commands.hpp"

namespace {

/// Opens `path`, or stdin for "-". Returns nullptr if the file is unreadable.
std::istream* open_input(const std::string& path, std::ifstream& file) {
  if (path == "-") return &std::cin;
  file.open(path);
  return file ? &file : nullptr;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace bcone::cli;

  CLI::App app{"Betti tables over B = k[x,y,z]/(xy,yz,xz)"};
  app.require_subcommand(1);

  int d0 = 0;
  std::string d1;
  bool tail = false;
  auto* rays = app.add_subcommand("rays", "print the pure diagram pi_d");
  rays->add_option("--d0", d0, "degree of the generators")->required();
  rays->add_option("--d1", d1, "degree of the first syzygies, or 'inf'")->required();
  rays->add_flag("--tail", tail, "use the infinite linear tail (d1, d1+1, ...)");

  std::string table_path = "-";
  bool finite_length = false;
  auto* check = app.add_subcommand("check", "cone membership with certificate");
  check->add_option("file", table_path, "table file ('-' for stdin)");
  check->add_flag("--finite-length", finite_length, "use the finite length cone");
  auto* decompose = app.add_subcommand("decompose", "decomposition into pure diagrams");
  decompose->add_option("file", table_path, "table file ('-' for stdin)");
  decompose->add_flag("--finite-length", finite_length, "use the finite length cone");

  std::string module_path = "-";
  int deg_bound = 8;
  int hom_bound = 4;
  std::optional<std::string> field;
  auto* resolve = app.add_subcommand("resolve", "minimal free resolution of a module");
  resolve->add_option("file", module_path, "module description ('-' for stdin)");
  resolve->add_option("--deg-bound", deg_bound, "largest internal degree computed");
  resolve->add_option("--hom-bound", hom_bound, "largest homological degree");
  resolve->add_option("--field", field, "qq or fp:<p> (overrides the file)");
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series numerator and e(M)");
  hilbert->add_option("file", module_path, "module description ('-' for stdin)");
  hilbert->add_option("--deg-bound", deg_bound, "largest degree computed");
  hilbert->add_option("--field", field, "qq or fp:<p> (overrides the file)");

  int jmin = 0;
  int jmax = 0;
  bool drop_alpha = false;
  bool drop_gamma = false;
  std::size_t max_width = 6;
  auto* verify = app.add_subcommand("verify-window",
                                    "compare generators and inequalities on a window");
  verify->add_option("--jmin", jmin, "lowest degree")->required();
  verify->add_option("--jmax", jmax, "highest degree")->required();
  verify->add_flag("--finite-length", finite_length, "use the finite length cone");
  verify->add_flag("--drop-alpha", drop_alpha, "omit the alpha inequalities");
  verify->add_flag("--drop-gamma", drop_gamma, "omit the gamma inequalities");
  verify->add_option("--max-width", max_width, "largest window width accepted");

  std::string local_mode;
  std::string b0, b1, b2;
  auto* local = app.add_subcommand("local", "local Betti sequence cone");
  local->add_option("mode", local_mode, "check or decompose")->required();
  local->add_option("b0", b0)->required();
  local->add_option("b1", b1)->required();
  local->add_option("b2", b2)->required();
  local->add_flag("--finite-length", finite_length, "use the finite length cone");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Ok : Usage;
  }

  std::ifstream file;
  auto need_input = [&](const std::string& path) -> std::istream* {
    auto* in = open_input(path, file);
    if (!in) std::cerr << "error: cannot open '" << path << "'\n";
    return in;
  };

  if (*rays) return cmd_rays(d0, d1, tail, std::cout, std::cerr);
  if (*check || *decompose) {
    auto* in = need_input(table_path);
    if (!in) return Usage;
    return cmd_check(*in, finite_length, static_cast<bool>(*decompose), std::cout,
                     std::cerr);
  }
  if (*resolve || *hilbert) {
    auto* in = need_input(module_path);
    if (!in) return Usage;
    if (*resolve) return cmd_resolve(*in, deg_bound, hom_bound, field, std::cout, std::cerr);
    return cmd_hilbert(*in, deg_bound, field, std::cout, std::cerr);
  }
  if (*verify)
    return cmd_verify_window(jmin, jmax, finite_length, drop_alpha, drop_gamma, max_width,
                             std::cout, std::cerr);
  if (*local)
    return cmd_local(local_mode, b0, b1, b2, finite_length, std::cout, std::cerr);
  return Usage;
}
