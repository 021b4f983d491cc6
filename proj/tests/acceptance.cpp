#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "dmloc/verify.hpp"

namespace {

struct Criterion {
  int number;
  const char* suite;
  const char* summary;
};

const std::vector<Criterion> kCriteria{
    {1, "supnorm", "sup-norm lattice A^n has volume q^-n, Lambda(1) generates, no vector of norm < 1"},
    {2, "latcount", "lattice point counts match c^{ni}/vol beyond stabilization and bound it for 0 <= i <= 5"},
    {3, "volume", "orthogonal, determinant/Smith and counting volume routes agree"},
    {4, "valrel", "height of phi(a)(lambda) equals q^{s deg a} times height of lambda"},
    {5, "asfactor", "u phi = (T - 1) psi0 exactly, u independent of the kernel basis"},
    {6, "asbreak", "Artin-Schreier breaks are wp-invariant and prime to p; pi^-4 has break 1"},
    {7, "conductor", "rank-2 constructions: conductor m for odd m, interval with upper <= m-1 for even m"},
    {8, "condvol", "conductor upper end bounded by vol^s C^{s(r-s)}, tightened by 1 when applicable"},
    {9, "kummer", "Kummer map onto torsion on inertia for heights prime to p, zero image for integral lambda"},
    {10, "isogeny", "conductor invariant under Frobenius-twist isogeny transport"},
};

}  // namespace

int main() {
  dmloc::VerifyOptions opts;
  bool all = true;
  for (const auto& c : kCriteria) {
    const auto start = std::chrono::steady_clock::now();
    dmloc::SuiteResult r;
    std::string error;
    try {
      r = dmloc::run_suite(c.suite, opts);
    } catch (const std::exception& e) {
      r.passed = false;
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = r.passed && error.empty() && secs <= 60.0;
    all = all && ok;
    std::printf("%s criterion %d: %s [%zu checks, %.1f s]\n", ok ? "PASS" : "FAIL", c.number, c.summary, r.cases, secs);
    for (const auto& f : r.failures) std::printf("    counterexample: %s\n", f.c_str());
    if (!error.empty()) std::printf("    error: %s\n", error.c_str());
  }
  return all ? 0 : 1;
}
