// Acceptance criteria: one PASS/FAIL line each. Exit status 0 iff all pass.
#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "qell/qell.hpp"
#include "qell/verify.hpp"

using namespace qell;

namespace {

constexpr std::uint64_t kSeed = 2024;
constexpr int kSamples = 50;

struct Outcome {
  bool passed = true;
  std::string detail;
};

Outcome from_checks(const verify::Checks& cs) {
  Outcome o;
  for (const auto& c : cs)
    if (!c.passed) {
      o.passed = false;
      o.detail += c.name + ": " + c.detail + "; ";
    }
  if (o.passed) o.detail = std::to_string(cs.size()) + " checks";
  return o;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Hand-derived transfer of 1 from C3 = <(0 1 2)> into S3 on a point.
// Classes of S3: e, (1 2), (0 1 2); irreducibles at e: trivial, sign, standard.
// At e: Ind(1) = 1 + sign. At (1 2): no coset of C3 is fixed, so 0.
// At (0 1 2): both cosets are fixed, C_S3 = C3, so 2 * unit.
const std::vector<std::vector<long long>> kTransferC3Table = {{1, 1, 0}, {0, 0}, {2, 0, 0}};

Outcome transfer_worked_value() {
  auto s3 = symmetric_group(3);
  auto session = Session::for_groups({s3});
  auto pt = qe_structure(session, FiniteGSet::point(s3));
  auto c3 = subgroup(s3, {Permutation::from_cycles(3, {{0, 1, 2}})});
  auto u = qe_unit(qe_structure(session, FiniteGSet::point(c3)));
  for (int alg = 0; alg < 2; ++alg) {
    auto t = alg == 0 ? qe_transfer_a(pt, c3, u) : qe_transfer_b(pt, u);
    for (std::size_t c = 0; c < kTransferC3Table.size(); ++c) {
      const auto& row = kTransferC3Table[c];
      const auto& got = t.at(c, 0).coeffs;
      if (got.size() != row.size()) return {false, "rank differs at class " + std::to_string(c)};
      for (std::size_t i = 0; i < row.size(); ++i)
        if (got[i] != QLaurent(row[i]))
          return {false, std::string("algorithm ") + (alg ? "B" : "A") + " differs at class " + std::to_string(c) +
                             ", basis " + std::to_string(i) + ": " + got[i].to_string()};
    }
  }
  return {true, "matches the committed table"};
}

Outcome s5_structure() {
  auto s5 = symmetric_group(5);
  auto session = Session::for_groups({s5});
  auto s = qe_structure(session, FiniteGSet::point(s5));
  std::size_t entries = 0;
  for (std::size_t c = 0; c < s->num_classes(); ++c) {
    const auto& ctx = *s->ctx(c, 0);
    for (std::size_t i = 0; i < ctx.rank(); ++i)
      for (std::size_t j = 0; j < ctx.rank(); ++j) entries += ctx.product(i, j).size();
  }
  if (s->num_classes() != 7) return {false, "expected 7 components"};
  if (s->rank(0) != 7) return {false, "identity component rank " + std::to_string(s->rank(0))};
  return {true, std::to_string(s->total_rank()) + " basis elements, " + std::to_string(entries) + " product terms"};
}

}  // namespace

int main() {
  struct Criterion {
    int number;
    std::string title;
    double limit_seconds;  // 0: untimed
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "Z/N presentations x_m^N = q^m, N <= 8", 5.0, [] { return from_checks(verify::cyclic_presentation_checks(8)); }},
      {2, "Sigma_3 rings", 1.0, [] { return from_checks(verify::sigma3_checks()); }},
      {3, "Tate presentation check, N <= 8", 0, [] { return from_checks(verify::tate_checks(8)); }},
      {4, "Kunneth on points", 0, [] { return from_checks(verify::kunneth_point_checks()); }},
      {5, "change-of-group round trips", 0, [] { return from_checks(verify::change_of_group_checks(kSeed, kSamples)); }},
      {6, "transfer algorithms agree; worked value", 0,
       [] {
         Outcome o = from_checks(verify::transfer_agreement_checks(kSeed, kSamples));
         Outcome w = transfer_worked_value();
         return Outcome{o.passed && w.passed, o.detail + "; " + w.detail};
       }},
      {7, "mu^n is a Lambda-ring homomorphism", 0, [] { return from_checks(verify::mu_checks(kSeed, kSamples)); }},
      {8, "free action and trivial-action split", 0, [] { return from_checks(verify::free_action_checks(kSeed, kSamples)); }},
      {9, "character properties, builtin groups of order <= 48", 30.0, [] { return from_checks(verify::character_checks(48)); }},
      {10, "S5 structure with all products", 10.0, s5_structure},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double dt = seconds_since(t0);
    if (c.limit_seconds > 0 && dt >= c.limit_seconds) {
      o.passed = false;
      o.detail += "; over the time limit";
    }
    if (c.number == 10 && o.passed) {
      // the full verify run is part of the performance criterion
      const auto v0 = std::chrono::steady_clock::now();
      const auto report = verify::run_suite("all", kSeed);
      const double vt = seconds_since(v0);
      o.passed = report.passed && vt < 120.0;
      o.detail += "; verify all " + std::string(report.passed ? "passed" : "FAILED") + " in " + std::to_string(vt) + " s";
    }
    all = all && o.passed;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " (" << dt << " s) "
              << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
