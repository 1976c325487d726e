#include <catch2/catch_amalgamated.hpp>

#include "milnor/jobfile.hpp"

using namespace milnor;

TEST_CASE("job files parse into actions and germs", "[jobfile]") {
  JobFile job = parse_job_file(
      "# cubic cone under Z3\n"
      "vars = x, y\n"
      "f = x^3 + y^3\n"
      "group = 3\n"
      "chars = 1; 2\n"
      "dmax = 6\n"
      "seed = 42\n");
  REQUIRE(job.vars == std::vector<std::string>{"x", "y"});
  REQUIRE(job.f.has_value());
  REQUIRE(job.has_group);
  REQUIRE(job.action.group.orders() == std::vector<unsigned long>{3});
  REQUIRE(job.action.chars.size() == 2);
  REQUIRE(job.action.chars[1] == Character(job.action.group, {2}));
  REQUIRE(job.dmax == 6U);
  REQUIRE(job.seed == 42ULL);
  REQUIRE(job.warnings.empty());
}

TEST_CASE("omitted group means the trivial group", "[jobfile]") {
  JobFile job = parse_job_file("vars = x\nf = x^4\n");
  REQUIRE(!job.has_group);
  REQUIRE(job.action.group.is_trivial());
  REQUIRE(job.action.chars.size() == 1);
  REQUIRE(job.action.chars[0].is_trivial());
}

TEST_CASE("out-of-range character entries reduce with a warning", "[jobfile]") {
  JobFile job = parse_job_file("vars = x, y\ngroup = 3\nchars = 4; -1\n");
  REQUIRE(job.warnings.size() == 2);
  REQUIRE(job.action.chars[0] == Character(job.action.group, {1}));
  REQUIRE(job.action.chars[1] == Character(job.action.group, {2}));
}

TEST_CASE("multi-factor groups use rows of exponents", "[jobfile]") {
  JobFile job = parse_job_file("vars = x, y\ngroup = 2, 4\nchars = 1 0; 0 3\n");
  REQUIRE(job.action.group.orders() == std::vector<unsigned long>{2, 4});
  REQUIRE(job.action.chars[0] == Character(job.action.group, {1, 0}));
  REQUIRE(job.action.chars[1] == Character(job.action.group, {0, 3}));
}

TEST_CASE("malformed job files are rejected", "[jobfile]") {
  REQUIRE_THROWS_AS(parse_job_file("f = x\n"), JobError);                       // no vars
  REQUIRE_THROWS_AS(parse_job_file("vars = x\nvars = y\n"), JobError);          // duplicate
  REQUIRE_THROWS_AS(parse_job_file("vars = x\nchars = 1\n"), JobError);         // chars without group
  REQUIRE_THROWS_AS(parse_job_file("vars = x\ngroup = 3\n"), JobError);         // group without chars
  REQUIRE_THROWS_AS(parse_job_file("vars = x, y\ngroup = 3\nchars = 1\n"), JobError);
  REQUIRE_THROWS_AS(parse_job_file("vars = x\nbogus = 1\n"), JobError);         // unknown key
  REQUIRE_THROWS_AS(parse_job_file("vars = x\nmode = sometimes\n"), JobError);
  REQUIRE_THROWS_AS(parse_job_file("vars = x\ngroup = 0\nchars = 0\n"), JobError);
  REQUIRE_THROWS_AS(parse_job_file("vars = 9x\n"), JobError);                   // bad identifier
  REQUIRE_THROWS_AS(parse_job_file("vars = x, x\n"), JobError);                 // duplicate var
  REQUIRE_THROWS_AS(parse_job_file("vars = x\nf = x + w\n"), ParseError);       // unknown variable
}
