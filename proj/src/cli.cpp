#include "frobcalc/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "frobcalc/acceptance.hpp"
#include "frobcalc/diagram.hpp"
#include "frobcalc/error.hpp"
#include "frobcalc/matrix.hpp"
#include "frobcalc/prover.hpp"
#include "frobcalc/terms.hpp"
#include "frobcalc/theories.hpp"
#include "frobcalc/translate.hpp"

namespace frobcalc {

namespace {

struct Invocation {
  std::string theory = "frob";
  unsigned p = 2;
  std::string format = "ascii";
  std::string out_path;
  unsigned depth = 12;
  unsigned max_size = 4;
  std::size_t node_cap = 3'000'000;
  std::string side;
  std::vector<std::string> args;
};

/// Bad usage detected after option parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(std::string s) {
  auto is_space = [](char c) {
    return c == ' ' || c == '\n' || c == '\r' || c == '\t';
  };
  while (!s.empty() && is_space(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && is_space(s[i])) ++i;
  return s.substr(i);
}

/// Resolves "-" (stdin) and "@path" arguments to their text.
std::string resolve(const std::string& arg, std::istream& in) {
  if (arg == "-") {
    std::string text{std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>()};
    return trim(text);
  }
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream file(arg.substr(1), std::ios::binary);
    if (!file) throw UsageError("cannot read file '" + arg.substr(1) + "'");
    std::string text{std::istreambuf_iterator<char>(file),
                     std::istreambuf_iterator<char>()};
    return trim(text);
  }
  return arg;
}

Theory theory_of(const Invocation& inv) {
  auto th = parse_theory(inv.theory);
  if (!th) {
    throw UsageError("unknown theory '" + inv.theory +
                     "' (expected frob, frob-phi, frob-sep or sep-matrix)");
  }
  return *th;
}

void expect_args(const Invocation& inv, std::size_t n, const char* what) {
  if (inv.args.size() != n) {
    throw UsageError(std::string("expected ") + what + ", got " +
                     std::to_string(inv.args.size()) + " argument(s)");
  }
}

FrobTerm frob_arg(const Invocation& inv, std::size_t i, std::istream& in) {
  return parse_term<FrobLang>(resolve(inv.args[i], in));
}

int run_check(const Invocation& inv, std::istream& in, std::ostream& out,
              std::ostream& err) {
  expect_args(inv, 2, "two terms");
  Theory th = theory_of(inv);
  FrobTerm t1 = frob_arg(inv, 0, in);
  FrobTerm t2 = frob_arg(inv, 1, in);
  Decision d = decide(t1, t2, th);
  if (d.equal) {
    out << "EQUAL\n";
    return kExitOk;
  }
  if (!d.note.empty()) err << d.note << '\n';
  out << "NOT-EQUAL\n";
  return kExitNotEqual;
}

int run_normalize(const Invocation& inv, std::istream& in, std::ostream& out) {
  expect_args(inv, 1, "one term");
  Theory th = theory_of(inv);
  Diagram d = normalize(eval_frob(frob_arg(inv, 0, in)), th);
  out << serialize(d) << '\n';
  return kExitOk;
}

int run_diagram(const Invocation& inv, std::istream& in, std::ostream& out) {
  expect_args(inv, 1, "one term");
  Theory th = theory_of(inv);
  Diagram d = normalize(eval_frob(frob_arg(inv, 0, in)), th);
  if (inv.format == "ascii") {
    std::string text = render(d, RenderFormat::ascii);
    if (!inv.out_path.empty()) {
      std::ofstream file(inv.out_path, std::ios::binary);
      file << text << '\n';
      if (!file) throw UsageError("cannot write '" + inv.out_path + "'");
      out << "wrote " << inv.out_path << '\n';
    } else {
      out << text << '\n';
    }
    return kExitOk;
  }
  if (inv.format != "svg") {
    throw UsageError("unknown format '" + inv.format +
                     "' (expected ascii or svg)");
  }
  if (inv.out_path.empty()) {
    throw UsageError("--format svg needs --out PATH");
  }
  std::ofstream file(inv.out_path, std::ios::binary);
  file << render(d, RenderFormat::svg) << '\n';
  if (!file) throw UsageError("cannot write '" + inv.out_path + "'");
  out << "wrote " << inv.out_path << '\n';
  return kExitOk;
}

int run_matrix(const Invocation& inv, std::istream& in, std::ostream& out) {
  expect_args(inv, 1, "one term");
  if (inv.p < 2) throw UsageError("--p must be at least 2");
  out << to_string(matrix_of_term(frob_arg(inv, 0, in), inv.p)) << '\n';
  return kExitOk;
}

std::string normalize_direction(std::string dir) {
  for (std::string_view arrow : {"→", "->", ":"}) {
    auto at = dir.find(arrow);
    if (at != std::string::npos) {
      return dir.substr(0, at) + ">" + dir.substr(at + arrow.size());
    }
  }
  return dir;
}

int run_translate(const Invocation& inv, std::istream& in, std::ostream& out) {
  expect_args(inv, 2, "a direction and a term");
  std::string dir = normalize_direction(inv.args[0]);
  std::string text = resolve(inv.args[1], in);
  if (dir != "selfadj>bij" && !inv.side.empty()) {
    throw UsageError("--side applies only to selfadj->bij");
  }
  if (dir == "frob>selfadj") {
    out << to_string(frob_to_selfadj(parse_term<FrobLang>(text))) << '\n';
  } else if (dir == "selfadj>frob") {
    out << to_string(selfadj_to_frob(parse_term<SelfAdjLang>(text))) << '\n';
  } else if (dir == "monad>adj") {
    out << to_string(monad_to_adj(parse_term<MonadLang>(text))) << '\n';
  } else if (dir == "adj>monad") {
    out << to_string(adj_to_monad(parse_term<AdjLang>(text))) << '\n';
  } else if (dir == "bij>selfadj") {
    out << to_string(bij_to_selfadj(parse_term<BijLang>(text))) << '\n';
  } else if (dir == "selfadj>bij") {
    SelfAdjTerm t = parse_term<SelfAdjLang>(text);
    BijSide side;
    if (inv.side == "A" || inv.side == "a") {
      side = BijSide::A;
    } else if (inv.side == "B" || inv.side == "b") {
      side = BijSide::B;
    } else if (inv.side.empty()) {
      side = type_of(t).src % 2 == 0 ? BijSide::A : BijSide::B;
    } else {
      throw UsageError("unknown side '" + inv.side + "' (expected A or B)");
    }
    out << to_string(selfadj_to_bij(t, side)) << '\n';
  } else {
    throw UsageError("unknown direction '" + inv.args[0] +
                     "' (expected frob->selfadj, selfadj->frob, monad->adj, "
                     "adj->monad, bij->selfadj or selfadj->bij)");
  }
  return kExitOk;
}

int run_prove(const Invocation& inv, std::istream& in, std::ostream& out,
              std::ostream& err) {
  expect_args(inv, 2, "two terms");
  Theory th = theory_of(inv);
  FrobTerm t1 = frob_arg(inv, 0, in);
  FrobTerm t2 = frob_arg(inv, 1, in);
  SearchOptions options;
  options.depth = inv.depth;
  options.node_cap = inv.node_cap;
  SearchResult r = rewrite_search(t1, t2, th, options);
  if (r.status == SearchResult::Status::found) {
    out << format_trace(r) << '\n';
    return kExitOk;
  }
  if (r.status == SearchResult::Status::incomplete) {
    err << "search stopped at the node cap (" << r.nodes << " nodes)\n";
  }
  out << "NOT-FOUND\n";
  return kExitNotFound;
}

int run_selftest(const Invocation& inv, std::ostream& out) {
  std::vector<std::string> ids = inv.args.empty() ? criterion_ids() : inv.args;
  for (const auto& id : ids) {
    bool known = false;
    for (const auto& k : criterion_ids()) known = known || k == id;
    if (!known) throw UsageError("unknown criterion '" + id + "'");
  }
  bool all = true;
  for (const auto& id : ids) {
    CriterionResult r = run_criterion(id);
    all = all && r.passed;
    out << format_result(r) << '\n' << std::flush;
  }
  return all ? kExitOk : kExitNotEqual;
}

int run_collisions(const Invocation& inv, std::ostream& out) {
  if (!inv.args.empty()) throw UsageError("collisions takes no arguments");
  if (inv.p < 2) throw UsageError("--p must be at least 2");
  Theory th = theory_of(inv);
  CollisionReport rep = collision_search(th, inv.p, inv.max_size);
  out << "terms: " << rep.terms << '\n'
      << "classes: " << rep.classes << '\n'
      << "complete: " << (rep.complete ? "yes" : "no") << '\n'
      << "equal-matrix collisions: " << rep.equal_matrix_count << '\n';
  for (const auto& c : rep.equal_matrix) {
    out << "  " << to_string(c.first) << "  ~  " << to_string(c.second)
        << '\n';
  }
  out << "equal-diagram collisions: " << rep.equal_diagram_count << '\n';
  for (const auto& c : rep.equal_diagram) {
    out << "  " << to_string(c.first) << "  ~  " << to_string(c.second)
        << '\n';
  }
  return kExitOk;
}

void add_common(CLI::App* sub, Invocation& inv) {
  sub->add_option("--theory", inv.theory,
                  "frob, frob-phi, frob-sep or sep-matrix");
  sub->add_option("--p", inv.p, "dimension of the Frobenius algebra");
  sub->add_option("--format", inv.format, "ascii or svg");
  sub->add_option("--out", inv.out_path, "output file");
  sub->add_option("--depth", inv.depth, "proof search depth");
  sub->add_option("--max-size", inv.max_size, "enumeration size bound");
  sub->add_option("--node-cap", inv.node_cap, "proof search node bound");
  sub->add_option("--side", inv.side, "A or B (selfadj->bij)");
  sub->add_option("args", inv.args, "terms, @file or - for stdin");
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::istream& in,
             std::ostream& out, std::ostream& err) {
  CLI::App app{"Calculator for the free Frobenius monad", "frobcalc"};
  app.require_subcommand(1);
  Invocation inv;

  struct Entry {
    const char* name;
    const char* help;
  };
  const Entry entries[] = {
      {"check", "decide equality of two terms"},
      {"normalize", "print the canonical diagram of a term"},
      {"diagram", "render the diagram of a term"},
      {"matrix", "print the matrix of a term"},
      {"translate", "translate a term between the free structures"},
      {"prove", "search for an equational proof"},
      {"selftest", "run the acceptance suites"},
      {"collisions", "compare matrices against normal forms"},
  };
  for (const auto& e : entries) add_common(app.add_subcommand(e.name, e.help), inv);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  std::string name = app.get_subcommands().front()->get_name();
  try {
    if (name == "check") return run_check(inv, in, out, err);
    if (name == "normalize") return run_normalize(inv, in, out);
    if (name == "diagram") return run_diagram(inv, in, out);
    if (name == "matrix") return run_matrix(inv, in, out);
    if (name == "translate") return run_translate(inv, in, out);
    if (name == "prove") return run_prove(inv, in, out, err);
    if (name == "selftest") return run_selftest(inv, out);
    return run_collisions(inv, out);
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const ParseError& e) {
    err << "parse error " << e.what() << '\n';
    return kExitInputError;
  } catch (const TypeError& e) {
    err << "type error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace frobcalc
