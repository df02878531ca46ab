// primeterm: evaluate arithmetic expressions exactly, run the prime-function
// chain in term or oracle mode, expand and emit the prime-count equations,
// and drive the verification suites.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "primeterm/errors.hpp"
#include "primeterm/expoly.hpp"
#include "primeterm/fhat.hpp"
#include "primeterm/hypercube.hpp"
#include "primeterm/mterm.hpp"
#include "primeterm/numtheory.hpp"
#include "primeterm/oracle.hpp"
#include "primeterm/parallel.hpp"
#include "primeterm/primefn.hpp"
#include "primeterm/term.hpp"
#include "primeterm/verify.hpp"

namespace {

using namespace primeterm;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct CliConfig {
  EvalConfig eval;
  std::string format = "text";  // text | json
};

void print_value(const CliConfig& cli, const Bigint& v) {
  if (cli.format == "json") {
    nlohmann::json out;
    out["value"] = v.to_string();
    std::cout << out.dump() << "\n";
  } else {
    std::cout << v.to_string() << "\n";
  }
}

FnMode parse_mode(const std::string& s) {
  if (s == "term") return FnMode::Term;
  if (s == "oracle") return FnMode::Oracle;
  throw DomainError("mode must be term or oracle");
}

int run_verify(const CliConfig& cli, const std::string& which) {
  std::vector<CheckResult> results;
  if (which == "all" || which.empty()) {
    results = run_all_suites(cli.eval);
  } else {
    results.push_back(run_suite(which, cli.eval));
  }
  bool all_ok = true;
  for (const auto& r : results) {
    all_ok = all_ok && r.pass;
    std::printf("[%s] %2d %-11s %s (%.2fs)\n", r.pass ? "PASS" : "FAIL",
                r.number, r.name.c_str(), r.detail.c_str(), r.seconds);
  }
  return all_ok ? kExitOk : kExitVerifyFail;
}

double bench_one(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

int run_bench(const CliConfig& cli) {
  std::printf("threads available: %d\n", hardware_threads());
  std::printf("%-34s %10s %10s %8s\n", "kernel", "serial", "parallel",
              "speedup");
  auto row = [](const char* name, double s, double p) {
    std::printf("%-34s %9.3fs %9.3fs %7.2fx\n", name, s, p, p > 0 ? s / p : 0);
  };
  {
    const std::uint64_t n = 500'000;
    std::uint64_t a = 0, b = 0;
    double s = bench_one([&] { a = oracle::sqrt_unity_scan(n); });
    double p = bench_one([&] {
      b = oracle::sqrt_unity_scan(n, ExecPolicy::Parallel);
    });
    if (a != b) throw Error("parallel scan diverged");
    row("unity residue scan (n=5e5)", s, p);
  }
  {
    HypercubeInstance inst = unity_instance(250);
    Bigint ws, wp;
    double s = bench_one([&] {
      ws = assemble_w(inst, WMethod::Contributions, cli.eval);
    });
    double p = bench_one([&] {
      wp = assemble_w(inst, WMethod::Contributions, cli.eval,
                      ExecPolicy::Parallel);
    });
    if (!(ws == wp)) throw Error("parallel contribution sum diverged");
    row("packed word contributions (n=250)", s, p);
  }
  {
    HypercubeInstance inst = unity_instance(15);
    std::uint64_t a = 0, b = 0;
    double s = bench_one([&] { a = count_zeros_scan(inst); });
    double p = bench_one([&] {
      b = count_zeros_scan(inst, ExecPolicy::Parallel);
    });
    if (a != b) throw Error("parallel lattice scan diverged");
    row("lattice zero scan (t=16, k=2)", s, p);
  }
  {
    HypercubeInstance inst = unity_instance(200);
    Bigint a, b;
    double s = bench_one([&] {
      a = assemble_w(inst, WMethod::Direct, cli.eval);
    });
    double p = bench_one([&] {
      b = assemble_w(inst, WMethod::Direct, cli.eval, ExecPolicy::Parallel);
    });
    if (!(a == b)) throw Error("parallel direct word diverged");
    row("packed word direct (t=201, k=2)", s, p);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arithmetic-term prime functions"};
  app.require_subcommand(1);
  CliConfig cli;

  if (const char* env = std::getenv("PRIMETERM_MAX_BITS")) {
    cli.eval.max_bits = std::strtoull(env, nullptr, 10);
  }
  app.add_option("--max-bits", cli.eval.max_bits,
                 "bit budget for intermediates");
  app.add_option("--output", cli.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::string expr;
  std::vector<std::string> sets;
  auto* c_eval = app.add_subcommand("eval", "evaluate an expression exactly");
  c_eval->add_option("--expr", expr, "expression text")->required();
  c_eval->add_option("--set", sets, "variable binding name=value");

  std::uint64_t arg_n = 0;
  std::string mode = "term";
  auto* c_omega =
      app.add_subcommand("omega", "number of distinct prime divisors");
  c_omega->add_option("n", arg_n)->required();
  c_omega->add_option("--mode", mode)->check(CLI::IsMember({"term", "oracle"}));

  auto* c_pi = app.add_subcommand("pi", "number of primes <= n");
  c_pi->add_option("n", arg_n)->required();
  c_pi->add_option("--mode", mode)->check(CLI::IsMember({"term", "oracle"}));

  auto* c_nsqrt =
      app.add_subcommand("nsqrt1", "number of square roots of unity mod n");
  c_nsqrt->add_option("n", arg_n)->required();
  c_nsqrt->add_option("--mode", mode)->check(CLI::IsMember({"term", "oracle"}));

  std::string n_mode = "oracle";
  auto* c_prime = app.add_subcommand("prime", "the n-th prime");
  c_prime->add_option("n", arg_n)->required();
  c_prime->add_option("--n-mode", n_mode)
      ->check(CLI::IsMember({"hypercube", "oracle"}));

  auto* c_next = app.add_subcommand("next-prime", "smallest prime > x");
  c_next->add_option("x", arg_n)->required();
  c_next->add_option("--mode", mode)->check(CLI::IsMember({"term", "oracle"}));

  std::string which_eq = "fhat";
  std::string eq_format = "count";
  auto* c_expand = app.add_subcommand("expand", "expand a prime-count equation");
  c_expand->add_option("equation", which_eq)
      ->check(CLI::IsMember({"f", "fhat"}));
  c_expand->add_option("--format", eq_format)
      ->check(CLI::IsMember({"json", "latex", "text", "count"}));

  std::string suite = "all";
  auto* c_verify = app.add_subcommand("verify", "run verification suites");
  c_verify->add_option("suite", suite, "suite name or 'all'");

  auto* c_bench =
      app.add_subcommand("bench", "compare serial and parallel kernels");

  try {
    app.parse(argc, argv);
    if (c_eval->parsed()) {
      Env env;
      for (const auto& s : sets) {
        auto eq = s.find('=');
        if (eq == std::string::npos)
          throw DomainError("--set expects name=value");
        env[s.substr(0, eq)] = Bigint(std::string_view(s).substr(eq + 1));
      }
      print_value(cli, eval_term(parse_term(expr), env, cli.eval));
    } else if (c_omega->parsed()) {
      print_value(cli, omega(Bigint(arg_n), parse_mode(mode), cli.eval));
    } else if (c_pi->parsed()) {
      print_value(cli, prime_pi(Bigint(arg_n), parse_mode(mode), cli.eval));
    } else if (c_nsqrt->parsed()) {
      print_value(cli,
                  sqrt_unity_count(Bigint(arg_n), parse_mode(mode), cli.eval));
    } else if (c_prime->parsed()) {
      print_value(cli, nth_prime(arg_n,
                                 n_mode == "hypercube" ? NMode::Hypercube
                                                       : NMode::Oracle,
                                 cli.eval));
    } else if (c_next->parsed()) {
      print_value(cli, next_prime(Bigint(arg_n), parse_mode(mode), cli.eval));
    } else if (c_expand->parsed()) {
      const ExpoPoly f =
          build_f(which_eq == "fhat" ? FEquation::Fhat42 : FEquation::F32);
      if (eq_format == "count") {
        const ExpandStats st = expand_stats(f);
        std::cout << "monomials=" << st.monomials
                  << " variables=" << st.variables << "\n";
      } else if (eq_format == "json") {
        std::cout << emit(f, EmitFormat::Json) << "\n";
      } else if (eq_format == "latex") {
        std::cout << emit(f, EmitFormat::Latex) << "\n";
      } else {
        std::cout << emit(f, EmitFormat::Text) << "\n";
      }
    } else if (c_verify->parsed()) {
      return run_verify(cli, suite);
    } else if (c_bench->parsed()) {
      return run_bench(cli);
    }
    return kExitOk;
  } catch (const BitLimitExceeded& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const RangeExceeded& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
