// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line each. A criterion fails on any failed check or a blown
// time budget. Run a single criterion by number (argv[1]) or all by default.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "apu/audits.hpp"

namespace {

using apu::ExperimentReport;

struct Criterion {
  int id;
  std::string label;
  double budget_seconds;  // 0 = no stated budget
  std::function<std::vector<ExperimentReport>()> run;
};

constexpr std::uint64_t kSeed = 20250808;

std::vector<Criterion> criteria() {
  auto one = [](const char* suite, std::uint64_t seed) {
    return [suite, seed] { return std::vector<ExperimentReport>{apu::run_audit(suite, seed)}; };
  };
  return {
      {1, "u_2 closed form matched by box-exact search, n <= 12", 60, one("u2-box", kSeed)},
      {2, "exact f values mn/md/nd on the m,n,d <= 20 grids", 30, one("exact-regimes", kSeed)},
      {3, "tightness sets with (8tkl)^2 >= mnd on the m,n,d <= 16 grid", 60, one("tightness", kSeed)},
      {4, "difference-ratio membership on 10^4 overlapping AP pairs", 30,
       one("difference-ratio", kSeed + 4)},
      {5, "intersection equals the element-set oracle on 10^4 rational pairs", 30,
       one("intersect-oracle", kSeed + 5)},
      {6, "pair census easy bounds on 10^4 random sets", 0, one("g-easy-bound", kSeed + 6)},
      {7, "cycle census equals the permutation filter, B in {1..12}", 120,
       one("cycle-oracle", kSeed)},
      {8, "subsample expectation identities within 4 standard errors", 120,
       one("expectation", kSeed + 8)},
      {9, "d(m) < c3(delta) m^delta for delta in {1,1/2,1/4}, m <= 10^6", 60,
       one("divisor-bound", kSeed)},
      {10, "Dawson-Sankoff and gcd-sum union bounds on 10^3 families", 0,
       one("union-bounds", kSeed + 10)},
      {11, "Pillai fast range vs brute force (n <= 2000) + factor-3 band", 120,
       [] {
         return std::vector<ExperimentReport>{apu::run_audit("gcd-sum-fast", kSeed),
                                              apu::run_audit("gcd-growth", kSeed)};
       }},
      {12, "multiplication table: dual routes to 512, ratio decay to 4096", 120,
       one("mult-table", kSeed)},
      {13, "three-term reduction invariants on 10^3 random sets", 0, one("ruzsa", kSeed + 13)},
  };
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);

  int failed = 0, ran = 0;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    ++ran;
    const auto start = std::chrono::steady_clock::now();
    const auto reports = c.run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    bool checks_ok = true;
    for (const auto& rep : reports) checks_ok = checks_ok && rep.all_pass();
    const bool time_ok = c.budget_seconds == 0 || secs < c.budget_seconds;
    const bool pass = checks_ok && time_ok;
    if (!pass) ++failed;

    std::printf("[%2d] %s  %6.1fs  %s\n", c.id, pass ? "PASS" : "FAIL", secs, c.label.c_str());
    if (!time_ok)
      std::printf("      time budget exceeded: %.1fs >= %.0fs\n", secs, c.budget_seconds);
    if (!checks_ok)
      for (const auto& rep : reports)
        for (const auto& chk : rep.checks)
          if (!chk.pass)
            std::printf("      failed: %s%s%s\n", chk.name.c_str(),
                        chk.detail.empty() ? "" : " -- ", chk.detail.c_str());
  }
  if (only == 0) std::printf("%d/%d criteria pass\n", ran - failed, ran);
  return failed == 0 ? 0 : 1;
}
