#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(JSTIRLING_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int st = pclose(pipe);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("golden tables") {
  const Run second = run("table --kind second --n 6");
  CHECK(second.status == 0);
  CHECK(second.out == slurp("table_second.tsv"));
  const Run first = run("table --kind first --n 5");
  CHECK(first.status == 0);
  CHECK(first.out == slurp("table_first.tsv"));
  CHECK(run("table --kind second --n 6 --output json").out == slurp("table_second.jsonl"));
  CHECK(run("table --kind first --n 5 --output json").out == slurp("table_first.jsonl"));
  CHECK(run("table").out == slurp("table_second.tsv"));
}

TEST_CASE("json output is line-delimited and parses") {
  const Run r = run("check --suite routes --output json");
  CHECK(r.status == 0);
  std::istringstream lines(r.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.at("verdict") == "certified");
    CHECK(j.at("suite") == "routes");
    ++count;
  }
  CHECK(count == 2);
  const Run d = run("diagonal --k 1 --z 2");
  CHECK(d.status == 0);
  CHECK(nlohmann::json::parse(d.out.substr(0, d.out.find('\n'))).is_object());
}

TEST_CASE("exit codes") {
  CHECK(run("check --suite identities").status == 0);
  CHECK(run("ramanujan --kind R --n 5").status == 0);
  CHECK(run("lambert --kind p --n 6").status == 0);

  const Run refuted = run("check --suite theorem-1.2 --z 2");
  CHECK(refuted.status == 1);
  CHECK(refuted.out.find("REFUTED") != std::string::npos);
  CHECK(refuted.out.find("witness rows {0,1,2,3,4} cols {2,3,4,5,6} det -16") != std::string::npos);

  CHECK(run("").status == 2);
  CHECK(run("table --bogus").status == 2);
  CHECK(run("table --n 0").status == 2);
  CHECK(run("table --kind third").status == 2);
  CHECK(run("check --suite no-such-suite").status == 2);
  CHECK(run("check --suite diagonal-pf --z 1/0").status == 2);
  CHECK(run("check --suite diagonal-pf --z abc").status == 2);
  CHECK(run("table --output xml").status == 2);
}

TEST_CASE("text output") {
  const Run r = run("table --kind second --n 6 --output text");
  CHECK(r.status == 0);
  CHECK(r.out.find("JS(6,2;z) = 341 + 738*z + 604*z^2 + 222*z^3 + 31*z^4\n") != std::string::npos);
  const Run q = run("ramanujan --kind R --n 4");
  CHECK(q.out.find("6 + 18*y + 25*y^2 + 15*y^3") != std::string::npos);
}
