#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "frobcalc/cli.hpp"

using namespace frobcalc;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  int code = dispatch(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("documented invocations") {
  Run a = run({"check", "--theory", "frob", "eb 0 . ed 0", "id 0"});
  CHECK(a.code == 1);
  CHECK(a.out == "NOT-EQUAL\n");
  Run b = run({"normalize", "--theory", "frob", "eb 0 . ed 0"});
  CHECK(b.code == 0);
  CHECK(b.out == "type: 0 -> 0\nclass: +1 -1 : 1\n");
  Run c = run({"matrix", "--p", "3", "eb 0 . ed 0"});
  CHECK(c.code == 0);
  CHECK(c.out == "1 x 1\n3\n");
}

TEST_CASE("check and prove") {
  CHECK(run({"check", "dd 0 . db 0", "id 1"}).out == "NOT-EQUAL\n");
  Run eq = run({"check", "--theory", "frob-sep", "dd 0 . db 0", "id 1"});
  CHECK(eq.code == 0);
  CHECK(eq.out == "EQUAL\n");
  Run pr = run({"prove", "--theory", "frob", "--depth", "3", "eb 1 . db 0", "id 1"});
  CHECK(pr.code == 0);
  CHECK(pr.out == "(eb 1 . db 0)\n= id 1   [box-beta -> @0]\n");
  Run nf = run({"prove", "--theory", "frob", "dd 0 . db 0", "id 1"});
  CHECK(nf.code == 3);
  CHECK(nf.out == "NOT-FOUND\n");
}

TEST_CASE("inputs from stdin and files") {
  CHECK(run({"normalize", "-"}, "eb 0 . ed 0\n").out ==
        "type: 0 -> 0\nclass: +1 -1 : 1\n");
  std::string path = "frobcalc_cli_test_input.txt";
  {
    std::ofstream f(path);
    f << "dd 0 . db 0\n";
  }
  Run r = run({"check", "--theory", "frob-sep", "@" + path, "id 1"});
  std::remove(path.c_str());
  CHECK(r.out == "EQUAL\n");
  CHECK(run({"check", "@does/not/exist", "id 0"}).code == 2);
}

TEST_CASE("errors and exit codes") {
  Run parse = run({"check", "eb 0 . foo 1", "id 0"});
  CHECK(parse.code == 2);
  CHECK(parse.out.empty());
  CHECK(parse.err.find("position 7") != std::string::npos);
  CHECK(parse.err.find("foo") != std::string::npos);
  Run type = run({"normalize", "eb 0 . eb 0"});
  CHECK(type.code == 2);
  CHECK(type.err.find("position 5") != std::string::npos);
  CHECK(run({"check", "--theory", "nope", "id 0", "id 0"}).code == 2);
  CHECK(run({"matrix", "--p", "2", "id 20"}).code == 4);
  CHECK(run({"matrix", "--p", "1", "id 0"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"check", "id 0"}).code == 2);
  CHECK(run({"selftest", "A0"}).code == 2);
  CHECK(run({"diagram", "--format", "svg", "id 0"}).code == 2);
}

TEST_CASE("translate") {
  CHECK(run({"translate", "frob->selfadj", "db 2"}).out == "F (gam 5)\n");
  CHECK(run({"translate", "frob→selfadj", "db 2"}).out == "F (gam 5)\n");
  CHECK(run({"translate", "selfadj->frob", "F gam 1"}).out == "db 0\n");
  CHECK(run({"translate", "monad->adj", "M ed 0"}).out == "G (F (gam 0))\n");
  CHECK(run({"translate", "adj->monad", "G phi 1"}).out == "dd 0\n");
  CHECK(run({"translate", "selfadj->bij", "--side", "A", "phi 0"}).out ==
        "phiA 0\n");
  CHECK(run({"translate", "selfadj->bij", "F phi 0"}).out == "U (phiA 0)\n");
  CHECK(run({"translate", "selfadj->bij", "--side", "A", "F phi 0"}).code == 2);
  CHECK(run({"translate", "bij->selfadj", "U phiA 0"}).out == "F (phi 0)\n");
  CHECK(run({"translate", "frob->monad", "id 0"}).code == 2);
}

TEST_CASE("diagram output is deterministic") {
  Run a = run({"diagram", "db 0 . dd 0"});
  Run b = run({"diagram", "db 0 . dd 0"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.back() == '\n');
  CHECK(a.out[a.out.size() - 2] != '\n');
  std::string path = "frobcalc_cli_test.svg";
  Run s = run({"diagram", "--format", "svg", "--out", path, "eb 0 . ed 0"});
  CHECK(s.code == 0);
  std::ifstream f(path);
  std::string head;
  std::getline(f, head);
  CHECK(head.rfind("<svg", 0) == 0);
  f.close();
  std::remove(path.c_str());
}

TEST_CASE("selftest of a quick criterion") {
  Run r = run({"selftest", "A3", "A9"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("A3 PASS", 0) == 0);
  CHECK(r.out.find("\nA9 PASS") != std::string::npos);
}
