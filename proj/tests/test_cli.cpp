#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

std::string quote(std::string const &s) {
  std::string q = "'";
  for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return q + "'";
}

Run run(std::string const &args) {
  std::string const cmd = std::string(SURFMC_CLI) + " " + args + " 2>&1";
  FILE *pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  int const status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(std::filesystem::path const &p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path temp(std::string const &name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("verify writes deterministic json") {
  auto const a = temp("surfmc_cli_a.json"), b = temp("surfmc_cli_b.json");
  Run const r1 = run("verify --genus 1..3 --no-timing --json " + a.string());
  Run const r2 = run("verify --genus 1..3 --no-timing --json " + b.string());
  CHECK(r1.code == 0);
  CHECK(r2.code == 0);
  CHECK(r1.out.find("exit code 0") != std::string::npos);
  CHECK(slurp(a) == slurp(b));
  auto const doc = nlohmann::json::parse(slurp(a));
  CHECK(doc["genera"].size() == 3);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST_CASE("witnesses replay in a separate process") {
  auto const path = temp("surfmc_cli_witness.json");
  REQUIRE(run("verify --genus 2,3 --no-timing --json " + path.string()).code == 0);
  auto const doc = nlohmann::json::parse(slurp(path));
  int replayed = 0;
  for (auto const &gr : doc["genera"]) {
    int const g = gr["genus"];
    for (auto const &rec : gr["checks"]) {
      if (rec["status"] != "pass" || !rec.contains("claims")) continue;
      std::string const w = rec["witness"];
      for (auto const &cl : rec["claims"]) {
        std::string args = "check-witness --genus " + std::to_string(g) + " --witness " + quote(w) + " ";
        if (cl["scope"] == "free") args += "--free ";
        args += "-- " + quote(cl["u"]) + " " + quote(cl["v"]);
        Run const r = run(args);
        INFO(rec["name"].get<std::string>() << ": " << args << " -> " << r.out);
        CHECK(r.code == 0);
        ++replayed;
      }
    }
  }
  CHECK(replayed > 50);
  std::filesystem::remove(path);
}

TEST_CASE("node cap of one exits with two") {
  Run const r = run("verify --genus 2 --max-bfs-nodes 1 --no-timing");
  CHECK(r.code == 2);
  CHECK(r.out.find("inconclusive") != std::string::npos);
}

TEST_CASE("check filter on the command line") {
  Run const r = run("verify --genus 2 --checks sign.eps1,order --no-timing");
  CHECK(r.code == 0);
  CHECK(r.out.find("sign.eps1") != std::string::npos);
  CHECK(r.out.find("order.homology") != std::string::npos);
  CHECK(r.out.find("sign.M") == std::string::npos);
}

TEST_CASE("word queries") {
  CHECK(run("equal --genus 2 't2 s2 t2^-1 t1 s1 t1^-1 s1^-1 s2^-1' ''").code == 0);
  Run const ne = run("equal --genus 2 t1 s1");
  CHECK(ne.code == 1);
  CHECK(ne.out == "not equal\n");

  Run const c = run("conjugate --genus 2 't1 s1 s2' 's2 t1 s1'");
  CHECK(c.code == 0);
  CHECK(c.out.rfind("conjugate\nwitness: ", 0) == 0);
  CHECK(run("conjugate --genus 2 t1 s1").code == 1);
  CHECK(run("conjugate --genus 2 --max-bfs-nodes 1 't2 s2 t2^-1 t1' 's2 s1 t1 s1^-1'").code == 2);

  CHECK(run("check-witness --genus 2 --witness t1 s1 't1 s1 t1^-1'").code == 0);
  CHECK(run("check-witness --genus 2 --witness t1 s1 s1").code == 1);
}

TEST_CASE("export") {
  Run const r = run("export --genus 2 --element eps1");
  CHECK(r.code == 0);
  CHECK(r.out.find("t1 -> t1^-1\ns1 -> s2 s1 t1\nt2 -> t1^-1 t2\ns2 -> s2^-1\n") != std::string::npos);
  Run const all = run("export --genus 3");
  CHECK(all.code == 0);
  for (char const *n : {"# M", "# eps1", "# eps2", "# eps2c", "# eps3", "# rho", "# C"})
    CHECK(all.out.find(std::string(n) + "\n") != std::string::npos);
}

TEST_CASE("bad input") {
  CHECK(run("equal --genus 2 t3 t1").code == 3);
  CHECK(run("verify --genus 0").code == 3);
  CHECK(run("frobnicate").code != 0);
  CHECK(run("export --genus 2 --element eps9").code == 3);
}
