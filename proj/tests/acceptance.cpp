// One line per acceptance criterion; exit status is nonzero when any criterion fails.
#include "golden_support.hpp"
#include "operadix/lattice.hpp"
#include "operadix/verify.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>

using namespace operadix;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::string summarize(const SuiteReport& r) {
  std::uint64_t cases = 0, failures = 0;
  std::string firstFail;
  for (const auto& c : r.checks) {
    cases += c.cases;
    failures += c.failures;
    if (!c.ok() && firstFail.empty()) firstFail = c.name + ": " + c.firstFailure;
  }
  std::string s = std::to_string(cases) + " cases, " + std::to_string(failures) + " failures";
  if (!firstFail.empty()) s += "; first " + firstFail;
  return s;
}

Outcome suiteOutcome(const std::string& name) {
  const SuiteReport r = runSuite(name, VerifyOptions{});
  return {r.ok(), summarize(r)};
}

Outcome filtrationOutcome() {
  const SuiteReport r = runSuite("filtration", VerifyOptions{});
  Outcome o{r.ok(), summarize(r)};
  const CheckLine* strict = r.find("q-strict-morphism");
  const CheckLine* lax = r.find("q-lax-morphism");
  if (strict && lax)
    o.detail += " | q strict morphism " + std::string(strict->ok() ? "PASS" : "FAIL") + " (" +
                std::to_string(strict->failures) + "/" + std::to_string(strict->cases) +
                " pairs), q lax morphism " + (lax->ok() ? "PASS" : "FAIL");
  return o;
}

// Each component must also finish within its own time budget.
Outcome homologyOutcome(double perComponentLimit) {
  const SuiteReport r = runSuite("homology", VerifyOptions{});
  Outcome o{r.ok(), summarize(r)};
  double slowest = 0;
  for (const auto& t : swissCheeseTargets()) {
    const auto t0 = std::chrono::steady_clock::now();
    componentHomology(t.inputs, t.output, 2);
    slowest = std::max(slowest, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "; slowest component %.3f s", slowest);
  o.detail += buf;
  if (slowest > perComponentLimit) o.ok = false;
  return o;
}

Outcome cliGolden() {
  const std::string dir = OPERADIX_GOLDEN_DIR;
  Outcome o;
  std::size_t roundTrips = 0, reports = 0;
  for (const auto& s : golden::corpus(dir)) {
    std::string printed;
    try {
      printed = print(parse(s));
    } catch (const std::exception& e) {
      printed = std::string("error: ") + e.what();
    }
    if (printed != s) {
      if (o.ok) o.detail = "round trip " + s + " -> " + printed;
      o.ok = false;
    }
    ++roundTrips;
  }
  for (const auto& rep : golden::manifest(dir)) {
    const auto a = golden::run(OPERADIX_CLI, rep.args);
    const auto b = golden::run(OPERADIX_CLI, rep.args);
    const std::string want = golden::readFile(dir + "/" + rep.name + ".out");
    if (a.exitCode != 0 || a.out != b.out || a.out != want) {
      if (o.ok) o.detail = "report " + rep.name + " differs";
      o.ok = false;
    }
    ++reports;
  }
  const std::string counts = std::to_string(roundTrips) + " round trips, " + std::to_string(reports) + " reports";
  o.detail = o.detail.empty() ? counts : counts + "; " + o.detail;
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limitSeconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "worked examples", 1, [] { return suiteOutcome("examples"); }},
      {2, "RL operad laws", 60, [] { return suiteOutcome("rl-operad"); }},
      {3, "filtration functoriality", 60, [] { return filtrationOutcome(); }},
      {4, "RS2 dg-operad", 120, [] { return suiteOutcome("surjection"); }},
      {5, "component homology", 40, [] { return homologyOutcome(10); }},
      {6, "RS2 generators", 300, [] { return suiteOutcome("generators"); }},
      {7, "cellulation compatibility", 120, [] { return suiteOutcome("cells"); }},
      {8, "loop-model identities", 300, [] { return suiteOutcome("loops"); }},
      {9, "cobar constructions", 300, [] { return suiteOutcome("cobar"); }},
      {10, "CLI golden files", 60, [] { return cliGolden(); }},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = o.ok && secs <= c.limitSeconds;
    if (secs > c.limitSeconds) o.detail += "; over the time limit";
    all = all && ok;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << "criterion " << c.id << " [" << (ok ? "PASS" : "FAIL") << "] " << c.name << " (" << timing
              << "): " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
