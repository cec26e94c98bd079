#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// stdout of the CLI; stderr folded in when `merge`
Run run(const std::string& args, bool merge = false) {
  std::string cmd = std::string(JACKLR_CLI_PATH) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

json read_json(const fs::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

/* The schema subset used by the report schema: type, required, properties,
 * additionalProperties, items, enum, const, minItems, minimum, if/then.
 * Errors are appended with a JSON-pointer-like path. */
void validate(const json& v, const json& s, const std::string& at, std::vector<std::string>& err) {
  auto fail = [&](const std::string& m) { err.push_back(at + ": " + m); };
  if (s.contains("type")) {
    std::string t = s["type"];
    bool ok = (t == "object" && v.is_object()) || (t == "array" && v.is_array()) ||
              (t == "string" && v.is_string()) || (t == "integer" && v.is_number_integer()) ||
              (t == "number" && v.is_number()) || (t == "boolean" && v.is_boolean());
    if (!ok) return fail("expected " + t);
  }
  if (s.contains("const") && v != s["const"]) fail("const mismatch");
  if (s.contains("enum")) {
    bool found = false;
    for (const auto& e : s["enum"]) found = found || e == v;
    if (!found) fail("not in enum");
  }
  if (s.contains("minimum") && v.is_number() && v.get<double>() < s["minimum"].get<double>()) fail("below minimum");
  if (v.is_object()) {
    for (const auto& k : s.value("required", json::array()))
      if (!v.contains(k.get<std::string>())) fail("missing " + k.get<std::string>());
    json props = s.value("properties", json::object());
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (props.contains(it.key())) validate(it.value(), props[it.key()], at + "/" + it.key(), err);
      else if (s.contains("additionalProperties") && s["additionalProperties"] == false)
        fail("unexpected " + it.key());
    }
  }
  if (v.is_array()) {
    if (s.contains("minItems") && v.size() < s["minItems"].get<std::size_t>()) fail("too few items");
    if (s.contains("items"))
      for (std::size_t i = 0; i < v.size(); ++i) validate(v[i], s["items"], at + "/" + std::to_string(i), err);
  }
  if (s.contains("if")) {
    std::vector<std::string> probe;
    validate(v, s["if"], at, probe);
    if (probe.empty() && s.contains("then")) validate(v, s["then"], at, err);
  }
}

std::vector<std::string> schema_errors(const json& v) {
  std::ifstream in(JACKLR_SCHEMA_PATH);
  json s = json::parse(in);
  std::vector<std::string> err;
  validate(v, s, "", err);
  return err;
}

json strip_times(json r) {
  for (auto& c : r["checks"]) c.erase("elapsed_ms");
  return r;
}

}  // namespace

TEST_CASE("jack, lr and stanley") {
  auto r = run("stanley --mu 1 --nu 1 --lam 1,1");
  CHECK(r.code == 0);
  CHECK(trim(r.out) == "2*a^2");
  r = run("jack --lam \"\"");
  CHECK(r.code == 0);
  CHECK(trim(r.out) == "1");
  r = run("jack --lam 2");
  CHECK(r.code == 0);
  CHECK(trim(r.out).find("m[2]") != std::string::npos);
  CHECK(trim(r.out).find("2*m[1,1]") == std::string::npos);
  r = run("lr --mu 2,1 --nu 2,1 --lam 3,2,1");
  CHECK(trim(r.out) == "(12*a^3 + 66*a^2 + 12*a)/(12*a^4 + 56*a^3 + 89*a^2 + 56*a + 12)");
  r = run("lr --mu 2,1 --nu 2,1 --lam 3,2,1 --json");
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["command"] == "lr");
  CHECK(j["lam"] == "3,2,1");
  CHECK(j.contains("numerator"));
  CHECK(j.contains("denominator"));
  r = run("stanley --mu 2,1 --nu 2,1 --lam 3,2,1 --json");
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["result"].get<std::string>().find("a^") != std::string::npos);
}

TEST_CASE("errors exit 2") {
  auto r = run("stanley --mu 2,x --nu 1 --lam 3,1", true);
  CHECK(r.code == 2);
  CHECK(r.out.find("position") != std::string::npos);
  r = run("lr --mu 1 --nu 1 --lam 3", true);
  CHECK(r.code == 2);
  r = run("jack --lam 5,4,3 --degree-cap 6", true);
  CHECK(r.code == 2);
  r = run("verify nonsense", true);
  CHECK(r.code != 0);
}

TEST_CASE("verify graphs writes a schema-valid, reproducible report") {
  fs::path dir = fs::temp_directory_path() / "jacklr_cli_test";
  fs::create_directories(dir);
  auto a = run("verify graphs --seed 42 --jobs 1 --out " + (dir / "a.json").string());
  CHECK(a.code == 0);
  CHECK(a.out.find("0 failures") != std::string::npos);
  auto b = run("verify graphs --seed 42 --jobs 2 --out " + (dir / "b.json").string());
  CHECK(b.code == 0);
  json ja = read_json(dir / "a.json"), jb = read_json(dir / "b.json");
  auto err = schema_errors(ja);
  for (const auto& e : err) INFO(e);
  CHECK(err.empty());
  CHECK(ja["meta"]["seed"] == 42);
  CHECK(ja["checks"].size() == 9);
  CHECK(strip_times(ja) == strip_times(jb));

  // the validator rejects what the schema forbids
  json bad = ja;
  bad["checks"][0]["status"] = "fail";
  bad["checks"][0]["witnesses"] = json::array();
  CHECK_FALSE(schema_errors(bad).empty());
  bad = ja;
  bad["extra"] = 1;
  CHECK_FALSE(schema_errors(bad).empty());
  bad = ja;
  bad["checks"][0].erase("details");
  CHECK_FALSE(schema_errors(bad).empty());
  fs::remove_all(dir);
}

TEST_CASE("verify fixtures, cold and warm cache") {
  fs::path dir = fs::temp_directory_path() / "jacklr_cli_fixtures";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::string flags = " --cache-dir " + (dir / "cache").string() + " --out ";
  auto cold = run("verify fixtures" + flags + (dir / "cold.json").string());
  CHECK(cold.code == 0);
  auto warm = run("verify fixtures" + flags + (dir / "warm.json").string());
  CHECK(warm.code == 0);
  json j = read_json(dir / "cold.json");
  CHECK(schema_errors(j).empty());
  REQUIRE(j["checks"].size() == 3);
  for (const auto& c : j["checks"]) CHECK(c["status"] == "pass");
  CHECK(strip_times(j) == strip_times(read_json(dir / "warm.json")));
  fs::remove_all(dir);
}

TEST_CASE("a corrupted cache line is reported and recomputed") {
  fs::path dir = fs::temp_directory_path() / "jacklr_cli_cache";
  fs::remove_all(dir);
  auto cold = run("jack --lam 2,1 --cache-dir " + dir.string());
  REQUIRE(cold.code == 0);
  REQUIRE(fs::exists(dir / "jack_deg3.txt"));
  {
    std::ofstream app(dir / "jack_deg3.txt", std::ios::app);
    app << "garbage without separator\n";
  }
  auto warm = run("jack --lam 2,1 --cache-dir " + dir.string(), true);
  CHECK(warm.code == 0);
  CHECK(warm.out.find("warning:") != std::string::npos);
  CHECK(warm.out.find(trim(cold.out)) != std::string::npos);
  fs::remove_all(dir);
}
