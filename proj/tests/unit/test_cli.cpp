#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "conegb/cli.hpp"
#include "conegb/systems.hpp"
#include "support/parse.hpp"
#include "support/systems.hpp"

using namespace conegb;
using fixtures::poly;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> tsv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, '\t')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("conegb_test_" + name)).string();
}

void expect_parse_error(const std::string& text, std::size_t line, std::size_t column, const std::string& what) {
  try {
    parse_system(text);
    FAIL("no error for: " << text);
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
    CHECK(e.message().find(what) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("parse_system examples") {
  const auto fig = parse_system("vars: x y\nx^2 + y^2 - 4\nx*y - 1");
  CHECK(fig.variables == std::vector<std::string>{"x", "y"});
  REQUIRE(fig.polynomials.size() == 2);
  CHECK(fig.polynomials[0] ==
        Polynomial(2, {{Term{2, 0}, 1}, {Term{0, 2}, 1}, {Term{0, 0}, -4}}));
  CHECK(fig.polynomials[1] == Polynomial(2, {{Term{1, 1}, 1}, {Term{0, 0}, -1}}));

  const auto half = parse_system("vars: x\n1/2*x - 1");
  CHECK(half.polynomials[0].coefficient(Term{1}) == mpq_class(1, 2));

  expect_parse_error("vars: x\nz + 1", 2, 1, "unknown variable z");
}

TEST_CASE("parse_system grammar details") {
  const auto s = parse_system("# a comment\nvars: a, b\n\n  -3a^2 b + 2/4 b^1 # trailing\r\n-a*b*a\n");
  REQUIRE(s.polynomials.size() == 2);
  CHECK(s.polynomials[0] == Polynomial(2, {{Term{2, 1}, -3}, {Term{0, 1}, mpq_class(1, 2)}}));
  CHECK(s.polynomials[1] == Polynomial(2, {{Term{2, 1}, -1}}));
  expect_parse_error("vars: x\nx^", 2, 3, "malformed exponent");
  expect_parse_error("vars: x\n1/0 x", 2, 3, "zero denominator");
  expect_parse_error("", 1, 1, "empty system");
  expect_parse_error("vars: x y\n", 2, 1, "empty system");
  CHECK_THROWS_AS(parse_system("vars: x x\nx"), ParseError);
  CHECK_THROWS_AS(parse_system("vars: x\nx + + 1"), ParseError);
}

TEST_CASE("parse(render(system)) round-trips") {
  std::mt19937_64 rng(59);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    SystemFile s;
    s.variables = default_names(n);
    s.polynomials = fixtures::random_system(rng, n, 4, 3);
    s.polynomials[0] = s.polynomials[0].scaled(mpq_class(-7, 3));
    CHECK(parse_system(render_system(s)) == s);
  }
  SystemFile named{{"alpha", "b2"}, generate_cyclic(2)};
  CHECK(parse_system(render_system(named)) == named);
}

TEST_CASE("resolve_system names") {
  CHECK(cli::resolve_system("cyclic-5").system.polynomials == generate_cyclic(5));
  const auto k = cli::resolve_system("katsura-4");
  CHECK(k.system.polynomials == generate_katsura(3));
  CHECK(k.system.variables.size() == 4);
  CHECK_THROWS_AS(cli::resolve_system("cyclic-1"), cli::InputError);
  CHECK_THROWS_AS(cli::resolve_system("cyclic-x"), cli::InputError);
  CHECK_THROWS_AS(cli::resolve_system("/no/such/file.txt"), cli::InputError);
  const auto h = cli::homogenized(cli::resolve_system("cyclic-3"));
  CHECK(h.system.variables.back() == "h");
  CHECK(h.system.polynomials.back().is_homogeneous());
}

TEST_CASE("parse_order") {
  CHECK(cli::parse_order("grevlex", 3) == TermOrdering::grevlex(3));
  CHECK(cli::parse_order("lex", 2) == TermOrdering::lex(2));
  CHECK(cli::parse_order("2,1,1", 3) == TermOrdering::weighted({2, 1, 1}));
  CHECK(cli::parse_order("1,3,2,4;1,1,1,0;1,1,0,0;1,0,0,0", 4) ==
        TermOrdering::matrix({{1, 3, 2, 4}, {1, 1, 1, 0}, {1, 1, 0, 0}, {1, 0, 0, 0}}));
  CHECK_THROWS_AS(cli::parse_order("1,2", 3), cli::InputError);
  CHECK_THROWS_AS(cli::parse_order("0,1", 2), cli::InputError);
  CHECK_THROWS_AS(cli::parse_order("a,b", 2), cli::InputError);
}

TEST_CASE("cli: static Cyclic-4 report") {
  const auto r = invoke({"--system", "cyclic-4", "--static", "--order", "grevlex", "--verify"});
  CHECK(r.code == 0);
  const auto rows = tsv_rows(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0] == std::vector<std::string>{"system", "mode", "rejected_corners", "rejected_disjoint", "lps_solved",
                                            "lps_failed", "constraints_final", "pols", "terms", "verified"});
  CHECK(rows[1][0] == "cyclic-4");
  CHECK(rows[1][1] == "static");
  CHECK(rows[1][7] == "7");
  CHECK(rows[1][8] == "24");
  CHECK(rows[1][9] == "true");
}

TEST_CASE("cli: dynamic Cyclic-5 is verified and uses the corners") {
  const auto r = invoke({"--system", "cyclic-5", "--strategy", "sugar", "--verify"});
  CHECK(r.code == 0);
  const auto rows = tsv_rows(r.out);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1][9] == "true");
  CHECK(std::stoll(rows[1][2]) > 0);
}

TEST_CASE("cli: exit codes") {
  CHECK(invoke({"--system", "missing.txt"}).code == 2);
  CHECK(invoke({"--system", "cyclic-3", "--order", "lex"}).code == 2);
  CHECK(invoke({"--system", "cyclic-3", "--strategy", "fastest"}).code == 2);
  CHECK(invoke({}).code == 2);
  CHECK(invoke({"--bogus"}).code == 2);
  CHECK(invoke({"--help"}).code == 0);

  const auto path = temp_path("bad.txt");
  std::ofstream(path) << "vars: x\nx + q\n";
  const auto bad = invoke({"--system", path});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("unknown variable q") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("cli: JSON and TSV carry the same numbers") {
  const std::vector<std::string> base{"--system", "cyclic-4", "--system", "katsura-3", "--strategy", "sugar",
                                      "--seed",   "3",        "--verify"};
  auto tsv_args = base;
  auto json_args = base;
  json_args.insert(json_args.end(), {"--output", "json"});
  const auto t = invoke(tsv_args), j = invoke(json_args);
  REQUIRE(t.code == 0);
  REQUIRE(j.code == 0);
  const auto rows = tsv_rows(t.out);
  const auto doc = nlohmann::json::parse(j.out);
  REQUIRE(doc.size() == rows.size() - 1);
  for (std::size_t k = 0; k < doc.size(); ++k) {
    const auto& row = rows[k + 1];
    const auto& e = doc[k];
    CHECK(row[0] == e["system_name"].get<std::string>());
    CHECK(row[1] == e["mode"].get<std::string>());
    CHECK(std::stoll(row[2]) == e["stats"]["rejected_by_corners"].get<std::int64_t>());
    CHECK(std::stoll(row[3]) == e["stats"]["rejected_by_disjoint_cones"].get<std::int64_t>());
    CHECK(std::stoll(row[4]) == e["stats"]["lps_solved"].get<std::int64_t>());
    CHECK(std::stoll(row[5]) == e["stats"]["lps_failed"].get<std::int64_t>());
    CHECK(std::stoll(row[6]) == e["stats"]["constraint_count"].get<std::int64_t>());
    CHECK(std::stoll(row[7]) == e["basis_size_pols"].get<std::int64_t>());
    CHECK(std::stoll(row[8]) == e["basis_size_terms"].get<std::int64_t>());
    CHECK((row[9] == "true") == e["verified"].get<bool>());
  }
}

TEST_CASE("cli: parallel jobs match the sequential run") {
  const std::vector<std::string> base{"--system", "cyclic-4", "--system", "katsura-3", "--system", "cyclic-3"};
  auto par = base;
  par.insert(par.end(), {"--jobs", "3"});
  CHECK(invoke(base).out == invoke(par).out);
}

TEST_CASE("cli: basis output parses back and is a Groebner basis") {
  const auto path = temp_path("basis.txt");
  const auto r = invoke({"--system", "cyclic-4", "--static", "--order", "lex", "--out-basis", path});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto back = parse_system(ss.str());
  CHECK(back.polynomials.size() == 6);
  CHECK(is_groebner_oracle(back.polynomials, TermOrdering::lex(4)));
  std::filesystem::remove(path);
}

TEST_CASE("cli: file input and homogenization") {
  const auto path = temp_path("fig.txt");
  std::ofstream(path) << "vars: x y\nx^2 + y^2 - 4\nx*y - 1\n";
  const auto r = invoke({"--system", path, "--homogenize", "--verify", "--output", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc[0]["variables"].size() == 3);
  CHECK(doc[0]["verified"].get<bool>());
  std::filesystem::remove(path);
}
