#include "ipf/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "ipf/codec.hpp"
#include "ipf/congruence.hpp"
#include "ipf/order.hpp"
#include "ipf/verify.hpp"

namespace ipf {

namespace {

Green parse_green(std::string const& s) {
  if (s == "L") return Green::L;
  if (s == "R") return Green::R;
  if (s == "H") return Green::H;
  if (s == "D") return Green::D;
  if (s == "J") return Green::J;
  throw ParseError("unknown Green relation \"" + s + "\"; expected L, R, H, D or J");
}

char const* boolean(bool b) { return b ? "true" : "false"; }

}  // namespace

int run_cli(std::vector<std::string> const& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact computations in the monoid of order isomorphisms between "
               "principal filters of finitely supported sequences",
               "ipf"};
  app.require_subcommand(1);

  std::string a_text, b_text, rel_text;
  std::function<void()> action;

  auto* compose_cmd = app.add_subcommand("compose", "product A·B (A first)");
  compose_cmd->add_option("A", a_text)->required();
  compose_cmd->add_option("B", b_text)->required();
  compose_cmd->callback([&] {
    action = [&] {
      out << render(compose(parse_element(a_text), parse_element(b_text))) << '\n';
    };
  });

  auto* inverse_cmd = app.add_subcommand("inverse", "inverse element");
  inverse_cmd->add_option("A", a_text)->required();
  inverse_cmd->callback([&] {
    action = [&] { out << render(inverse(parse_element(a_text))) << '\n'; };
  });

  auto* apply_cmd = app.add_subcommand("apply", "image of point P under A");
  apply_cmd->add_option("A", a_text)->required();
  apply_cmd->add_option("P", b_text)->required();
  apply_cmd->callback([&] {
    action = [&] {
      Element a = parse_element(a_text);
      NSeq p = parse_nseq(b_text);
      out << render(apply(a, p)) << '\n';
    };
  });

  auto* canonical_cmd =
      app.add_subcommand("canonical", "image in the maximal group quotient");
  canonical_cmd->add_option("A", a_text)->required();
  canonical_cmd->callback([&] {
    action = [&] { out << render(canonical(parse_element(a_text))) << '\n'; };
  });

  auto* top_cmd = app.add_subcommand("top", "greatest element of A's class");
  top_cmd->add_option("A", a_text)->required();
  top_cmd->callback([&] {
    action = [&] { out << render(top(parse_element(a_text))) << '\n'; };
  });

  auto* leq_cmd = app.add_subcommand("leq", "natural partial order A <= B");
  leq_cmd->add_option("A", a_text)->required();
  leq_cmd->add_option("B", b_text)->required();
  leq_cmd->callback([&] {
    action = [&] {
      out << boolean(nat_leq(parse_element(a_text), parse_element(b_text))) << '\n';
    };
  });

  auto* green_cmd = app.add_subcommand("green", "Green's relation test");
  green_cmd->add_option("REL", rel_text)->required();
  green_cmd->add_option("A", a_text)->required();
  green_cmd->add_option("B", b_text)->required();
  green_cmd->callback([&] {
    action = [&] {
      Green rel = parse_green(rel_text);
      out << boolean(green(rel, parse_element(a_text), parse_element(b_text)))
          << '\n';
    };
  });

  auto* lift_cmd = app.add_subcommand("lift", "preimage of a quotient element");
  lift_cmd->add_option("Q", a_text)->required();
  lift_cmd->callback([&] {
    action = [&] { out << render(lift(parse_quot(a_text))) << '\n'; };
  });

  auto* psi_cmd = app.add_subcommand("psi", "image in the semidirect product");
  psi_cmd->add_option("A", a_text)->required();
  psi_cmd->callback([&] {
    action = [&] { out << render(psi(parse_element(a_text))) << '\n'; };
  });

  std::string suite = "all";
  std::uint64_t cases = 100;
  std::uint64_t seed = 0;
  Value bound = 16;
  bool serial = false;
  bool verify_passed = true;
  auto* verify_cmd = app.add_subcommand("verify", "run seeded property suites");
  verify_cmd->add_option("--suite", suite,
                         "all|axioms|psi|oracle|congruence|order|units")
      ->capture_default_str();
  verify_cmd->add_option("--cases", cases)->capture_default_str();
  verify_cmd->add_option("--seed", seed)->capture_default_str();
  verify_cmd->add_option("--bound", bound)
      ->check(CLI::Range(Value{2}, Value{1} << 20))
      ->capture_default_str();
  verify_cmd->add_flag("--serial", serial, "run cases on one thread");
  verify_cmd->callback([&] {
    action = [&] {
      auto suites = parse_suite(suite);
      if (!suites) throw ParseError("unknown suite \"" + suite + "\"");
      VerifyReport report = run_verify(VerifyOptions{
          *suites, cases, seed, bound,
          serial ? Execution::serial : Execution::parallel});
      out << report.text();
      verify_passed = report.passed();
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (CLI::CallForHelp const&) {
    out << app.help();
    return kExitOk;
  } catch (CLI::CallForAllHelp const&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  }

  try {
    action();
  } catch (ParseError const& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return verify_passed ? kExitOk : kExitDomain;
}

}  // namespace ipf
