#include "jacklr/report.hpp"

#include <json.hpp>

namespace jacklr {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

Check& Check::expect(bool cond, const std::string& witness) {
  if (!cond) {
    status = Status::Fail;
    witnesses.push_back(witness);
  }
  return *this;
}

bool Report::ok() const { return failures() == 0; }

int Report::failures() const {
  int n = 0;
  for (const auto& c : checks) n += c.status == Status::Fail;
  return n;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["meta"] = {{"version", meta.version},
               {"seed", meta.seed},
               {"degree_cap", meta.degree_cap},
               {"corpus_bound", meta.corpus_bound}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name},
                           {"status", status_name(c.status)},
                           {"details", c.details},
                           {"witnesses", c.witnesses},
                           {"elapsed_ms", c.elapsed_ms}});
  return j.dump(2) + "\n";
}

}  // namespace jacklr
