// itsub: command-line front end for the subtyping kernel.
//
// Exit codes: 0 success/true, 1 false/inconclusive/failing suite,
// 2 usage, parse or certificate errors.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "itsub/bcd.hpp"
#include "itsub/consistency.hpp"
#include "itsub/harness.hpp"
#include "itsub/subtype.hpp"
#include "itsub/syntax.hpp"

namespace {

using namespace itsub;

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct InputError {
  std::string message;
};

Ty parse_arg(const std::string& text) {
  try {
    return parse(text);
  } catch (const ParseError& e) {
    std::string caret(e.span().start, ' ');
    throw InputError{std::string(e.what()) + "\n  " + text + "\n  " + caret + "^"};
  }
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw InputError{"cannot open " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <typename D>
void emit(const D& d, const std::string& format) {
  if (format == "tree")
    std::cout << derivation_to_tree(d);
  else
    std::cout << derivation_to_json(d) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Transitivity-free intersection type subtyping kernel"};
  app.require_subcommand(1);

  std::string lhs, rhs, third, format = "json";

  auto* check = app.add_subcommand("check", "Decide A <: B");
  check->add_option("A", lhs)->required();
  check->add_option("B", rhs)->required();

  auto* derive = app.add_subcommand("derive", "Print a certificate for A <: B");
  derive->add_option("A", lhs)->required();
  derive->add_option("B", rhs)->required();
  derive->add_option("--format", format)->check(CLI::IsMember({"json", "tree"}));

  std::size_t max_depth = kDefaultBcdSearchDepth;
  auto* bcd = app.add_subcommand("bcd", "Bounded search for a classic derivation of A <= B");
  bcd->add_option("A", lhs)->required();
  bcd->add_option("B", rhs)->required();
  bcd->add_option("--max-depth", max_depth)->check(CLI::PositiveNumber);
  bcd->add_option("--format", format)->check(CLI::IsMember({"json", "tree"}));

  std::string file, target;
  auto* translate = app.add_subcommand("translate", "Translate a certificate between the two systems");
  translate->add_option("certificate", file, "JSON certificate file, or - for stdin")->required();
  translate->add_option("--to", target)->required()->check(CLI::IsMember({"bcd", "new"}));
  translate->add_option("--format", format)->check(CLI::IsMember({"json", "tree"}));

  auto* trans = app.add_subcommand("trans", "Compose certificates for A <: B and B <: C");
  trans->add_option("A", lhs)->required();
  trans->add_option("B", rhs)->required();
  trans->add_option("C", third)->required();
  trans->add_option("--format", format)->check(CLI::IsMember({"json", "tree"}));

  auto* cons = app.add_subcommand("consistent", "Decide A ~ B");
  cons->add_option("A", lhs)->required();
  cons->add_option("B", rhs)->required();

  auto* self = app.add_subcommand("self-consistent", "Decide A ~ A");
  self->add_option("A", lhs)->required();

  SuiteOptions options;
  std::string suite_name, report = "text";
  bool no_timing = false;
  auto* suite = app.add_subcommand("suite", "Run a property suite (or all)");
  suite->add_option("name", suite_name)->required();
  suite->add_option("--atoms", options.pairs.atom_count, "Constants in both universes");
  suite->add_option("--max-size", options.pairs.max_size, "Size bound of the pair universe");
  suite->add_option("--triple-max-size", options.triples.max_size, "Size bound of the triple universe");
  suite->add_option("--seed", options.seed);
  suite->add_option("--samples", options.random_samples, "Random types for the roundtrip suite");
  suite->add_option("--bcd-depth", options.bcd_depth)->check(CLI::PositiveNumber);
  suite->add_option("--jobs", options.jobs)->check(CLI::PositiveNumber);
  suite->add_option("--failure-limit", options.failure_limit);
  suite->add_option("--report", report)->check(CLI::IsMember({"json", "text"}));
  suite->add_flag("--no-timing", no_timing, "Omit wall time so reports are byte-stable");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (check->parsed()) {
      const bool yes = is_subtype(parse_arg(lhs), parse_arg(rhs));
      std::cout << (yes ? "true" : "false") << '\n';
      return yes ? kTrue : kFalse;
    }
    if (derive->parsed()) {
      const Ty a = parse_arg(lhs);
      const Ty b = parse_arg(rhs);
      auto d = check_sub(a, b);
      if (!d) {
        std::cerr << "not a subtype: " << print(a) << " <: " << print(b) << '\n';
        return kFalse;
      }
      emit(*d, format);
      return kTrue;
    }
    if (bcd->parsed()) {
      auto d = bcd_search(parse_arg(lhs), parse_arg(rhs), max_depth);
      if (!d) {
        std::cout << "inconclusive\n";
        return kFalse;
      }
      emit(*d, format);
      return kTrue;
    }
    if (translate->parsed()) {
      const std::string text = read_input(file);
      try {
        if (target == "bcd")
          emit(to_bcd(derivation_from_json(text)), format);
        else
          emit(from_bcd(bcd_derivation_from_json(text)), format);
      } catch (const std::invalid_argument& e) {
        throw InputError{e.what()};
      }
      return kTrue;
    }
    if (trans->parsed()) {
      const Ty a = parse_arg(lhs);
      const Ty b = parse_arg(rhs);
      const Ty c = parse_arg(third);
      auto d1 = check_sub(a, b);
      auto d2 = check_sub(b, c);
      if (!d1 || !d2) {
        std::cerr << "premise not derivable: " << (d1 ? print(b) + " <: " + print(c) : print(a) + " <: " + print(b))
                  << '\n';
        return kFalse;
      }
      Derivation r = trans_compose(*d1, *d2, ComposeOptions{true, nullptr});
      if (auto v = validate(r); !v) {
        std::cerr << "composed certificate invalid at " << v.path << ": " << v.reason << '\n';
        return kFalse;
      }
      emit(r, format);
      return kTrue;
    }
    if (cons->parsed()) {
      const bool yes = consistent(parse_arg(lhs), parse_arg(rhs));
      std::cout << (yes ? "true" : "false") << '\n';
      return yes ? kTrue : kFalse;
    }
    if (self->parsed()) {
      const bool yes = self_consistent(parse_arg(lhs));
      std::cout << (yes ? "true" : "false") << '\n';
      return yes ? kTrue : kFalse;
    }
    if (suite->parsed()) {
      options.triples.atom_count = options.pairs.atom_count;
      std::vector<std::string> names;
      if (suite_name == "all") {
        names = suite_names();
      } else {
        const auto& known = suite_names();
        if (std::find(known.begin(), known.end(), suite_name) == known.end())
          throw InputError{"unknown suite \"" + suite_name + "\""};
        names.push_back(suite_name);
      }
      SuiteContext context;
      std::vector<SuiteReport> reports;
      bool ok = true;
      for (const auto& name : names) {
        reports.push_back(run_suite(name, options, context));
        ok = ok && reports.back().ok();
      }
      std::cout << (report == "json" ? reports_to_json(reports, !no_timing) + "\n"
                                     : reports_to_text(reports, !no_timing));
      return ok ? kTrue : kFalse;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kUsage;
  }
  return kUsage;
}
