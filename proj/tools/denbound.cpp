// denbound: content bounds for rational solutions of tau(Y) = M Y.
//
//   denbound global    --file F --J n [--format factored|expanded]
//   denbound cw        --file F --J n [--format ...] [--cutoff c]
//   denbound transform --file F --J n [--mode global|cw]
//   denbound verify    --file F --J n --solutions S [--mode global|cw]
//   denbound bench     --file F --jmax k
//
// Exit codes: 0 success, 1 parse or usage error, 2 singular matrix,
// 3 verification failed.

#include <chrono>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "denbound.hpp"

namespace {

using namespace denbound;

struct Options {
  std::string file;
  std::string solutions;
  int J = 1;
  int jmax = 4;
  int cutoff = 10;
  std::string format = "factored";
  std::string mode = "global";
};

RecurrenceSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  RecurrenceSystem sys = parse_system(in);
  inverse(sys.M);  // rejects singular input up front
  return sys;
}

std::vector<RatFunVector> load_solutions(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  return parse_solutions(in);
}

ContentBound run_mode(const RecurrenceSystem& sys, const Options& o) {
  if (o.mode == "cw") return cw_bound(sys, o.J, CwOptions{o.cutoff, std::nullopt});
  return global_bound(sys, o.J);
}

void print_caveat(const ContentBound& b) {
  if (b.caveat == Caveat::up_to_D_factor) std::cout << "# up to a factor x^m (q-shift case)\n";
}

void print_global(const ContentBound& b, bool factored) {
  if (b.is_zero()) {
    std::cout << "0 (no nonzero rational solutions)\n";
    return;
  }
  print_caveat(b);
  std::cout << to_string(b.scalar(), factored) << "\n";
}

void print_cw(const ContentBound& b, bool factored) {
  print_caveat(b);
  for (const auto& e : b.entries) {
    if (e.zero)
      std::cout << "0 (component vanishes)\n";
    else
      std::cout << to_string(e, factored) << "\n";
  }
}

int cmd_verify(const RecurrenceSystem& sys, const Options& o) {
  const ContentBound b = run_mode(sys, o);
  const auto sols = load_solutions(o.solutions);
  const VerifyReport rep = verify_bound(sys, b, sols);
  for (std::size_t s : rep.non_solutions) std::cout << "solution " << s + 1 << ": not a solution of the system\n";
  for (const auto& v : rep.violations) {
    std::cout << "solution " << v.solution + 1 << ", component " << v.component + 1 << ": ";
    if (v.witness.is_zero())
      std::cout << "nonzero but the bound is 0\n";
    else
      std::cout << "valuation " << v.solution_valuation << " < " << v.bound_valuation << " at " << to_string(v.witness)
                << "\n";
  }
  std::cout << (rep.passed() ? "PASS" : "FAIL") << " (" << sols.size() << " solutions, mode " << o.mode << ", J "
            << o.J << ")\n";
  return rep.passed() ? 0 : 3;
}

int cmd_bench(const RecurrenceSystem& sys, const Options& o) {
  std::cout << "J,mode,den_degree,ms,iters\n";
  for (const char* mode : {"global", "componentwise"}) {
    for (int J = 1; J <= o.jmax; ++J) {
      const auto t0 = std::chrono::steady_clock::now();
      const ContentBound b = std::string(mode) == "global" ? global_bound(sys, J) : cw_bound(sys, J);
      const auto t1 = std::chrono::steady_clock::now();
      const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
      std::cout << J << "," << mode << "," << b.den_degree() << "," << ms << "," << b.iterations << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Content bounds for rational solutions of first-order difference systems"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--file", o.file, "system file")->required()->check(CLI::ExistingFile);
  };
  auto add_J = [&](CLI::App* sub) { sub->add_option("--J", o.J, "ladder depth")->check(CLI::PositiveNumber); };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", o.mode, "global or cw")->check(CLI::IsMember({"global", "cw"}));
  };
  auto add_cutoff = [&](CLI::App* sub) {
    sub->add_option("--cutoff", o.cutoff, "stable-sweep counter limit")->check(CLI::PositiveNumber);
  };

  auto* global = app.add_subcommand("global", "global content bound");
  add_common(global);
  add_J(global);
  global->add_option("--format", o.format)->check(CLI::IsMember({"factored", "expanded"}));

  auto* cw = app.add_subcommand("cw", "component-wise content bound");
  add_common(cw);
  add_J(cw);
  add_cutoff(cw);
  cw->add_option("--format", o.format)->check(CLI::IsMember({"factored", "expanded"}));

  auto* transform = app.add_subcommand("transform", "print M' for Y = B Z");
  add_common(transform);
  add_J(transform);
  add_mode(transform);
  add_cutoff(transform);

  auto* verify = app.add_subcommand("verify", "check known solutions against the bound");
  add_common(verify);
  add_J(verify);
  add_mode(verify);
  add_cutoff(verify);
  verify->add_option("--solutions", o.solutions, "solutions file")->required()->check(CLI::ExistingFile);

  auto* bench = app.add_subcommand("bench", "denominator degree and time per J");
  add_common(bench);
  bench->add_option("--jmax", o.jmax, "largest J")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const RecurrenceSystem sys = load_system(o.file);
    const bool factored = o.format == "factored";
    if (global->parsed()) {
      print_global(global_bound(sys, o.J), factored);
    } else if (cw->parsed()) {
      print_cw(cw_bound(sys, o.J, CwOptions{o.cutoff, std::nullopt}), factored);
    } else if (transform->parsed()) {
      std::cout << to_system_string(transform_system(sys, run_mode(sys, o)));
    } else if (verify->parsed()) {
      return cmd_verify(sys, o);
    } else if (bench->parsed()) {
      return cmd_bench(sys, o);
    }
    return 0;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const SingularMatrixError& e) {
    std::cerr << "singular matrix: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
