// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "support/generators.hpp"
#include "tvdance/codec.hpp"
#include "tvdance/facing.hpp"
#include "tvdance/scheduler.hpp"
#include "tvdance/solver.hpp"

using namespace tvdance;
using tvdance::testing::code;

namespace {

const char* kTrefoil = "O1+ U2+ O3+ U1+ O2+ U3+";
const char* kBarTrefoil = "O1+ U2+ O3+ T1 U1+ O2+ U3+";

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failure notes for one criterion.
struct Verdict {
  std::ostringstream notes;
  std::ostringstream detail;
  bool ok = true;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) notes << what;
      ok = false;
    }
  }
};

int failures = 0;

void report(int id, const std::string& name, const std::function<void(Verdict&)>& body) {
  Verdict v;
  const auto t0 = Clock::now();
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("unexpected exception: ") + e.what());
  }
  const double secs = seconds_since(t0);
  std::printf("[%s] AC%d %s (%.3fs)%s%s\n", v.ok ? "PASS" : "FAIL", id, name.c_str(), secs,
              v.ok ? "" : " -- ", v.notes.str().c_str());
  if (!v.detail.str().empty()) std::printf("      %s\n", v.detail.str().c_str());
  std::fflush(stdout);
  if (!v.ok) ++failures;
}

// The desk-scale corpus shared by the oracle and retrograde criteria.
std::vector<Diagram> small_corpus() { return tvdance::testing::diagram_corpus(2024, 400, 8); }

// Forward plans and matching plans (with solved facings) for every placement
// of n <= 3 dancers and k <= 2.
template <typename Fn>
void for_each_small_plan(const std::vector<Diagram>& corpus, Fn&& fn) {
  for (const Diagram& d : corpus) {
    for (std::size_t n = 1; n <= std::min<std::size_t>(3, d.gap_count()); ++n) {
      for (const GapSet& pts : placements(d.gap_count(), n)) {
        for (std::size_t k = 1; k <= 2; ++k) {
          fn(DancePlan(d, pts, k));
          if (auto f = matching_solve(parity_vector(d, pts), k)) fn(DancePlan(d, pts, k, MatchingRule{*f}));
        }
      }
    }
  }
}

}  // namespace

int main() {
  report(1, "trefoil is 2-danceable, not 1-danceable (forward, over-first, k=1)", [](Verdict& v) {
    const auto t0 = Clock::now();
    const Diagram d = code(kTrefoil);
    const auto r = min_dancers(d, RuleKind::Forward, CrossingRule::OverFirst, 1, 6);
    v.require(r.feasible(), "min_dancers found nothing");
    if (!r.feasible()) return;
    v.require(r.outcome->plan.dancers() == 2, "n != 2");
    v.require(r.outcome->plan.laps() == 1, "k != 1");
    v.require(!verify_schedule(r.outcome->plan, r.outcome->schedule), "witness fails verification");
    for (std::size_t g = 0; g < 6; ++g) {
      const auto out = schedule_search(DancePlan(d, {g}, 1));
      v.require(!is_feasible(out) && std::get<Infeasible>(out).reason == InfeasibleReason::Deadlock,
                "one-point placement " + std::to_string(g) + " is not Infeasible(Deadlock)");
    }
    v.require(seconds_since(t0) < 1.0, "runtime >= 1 s");
  });

  report(2, "trefoil with one twist bar: minimal k over 2-point placements is 4", [](Verdict& v) {
    const auto t0 = Clock::now();
    const Diagram d = code(kBarTrefoil);
    std::size_t min_k = 0;
    for (std::size_t k = 1; k <= 4 && min_k == 0; ++k) {
      for (const auto& pts : placements(d.gap_count(), 2)) {
        if (is_feasible(schedule_search(DancePlan(d, pts, k)))) {
          min_k = k;
          break;
        }
      }
    }
    v.require(min_k == 4, "minimal k = " + std::to_string(min_k));
    const DancePlan plan(d, {0, 4}, 4);
    const auto out = schedule_search(plan);
    v.require(is_feasible(out), "{0,4}, k=4 infeasible");
    if (is_feasible(out)) v.require(!verify_schedule(plan, std::get<Schedule>(out)), "witness not verifier-clean");
    v.require(seconds_since(t0) < 5.0, "runtime >= 5 s");
  });

  report(3, "trefoil with two twist bars on one path dances with n=2, k=1", [](Verdict& v) {
    const Diagram d = code("O1+ U2+ O3+ T1 T2 U1+ O2+ U3+");
    const GapSet pts{0, 5};
    v.require(parity_vector(d, pts) == tvdance::testing::bits({0, 0}), "bars not on one path");
    const DancePlan plan(d, pts, 1);
    const auto out = schedule_search(plan);
    v.require(is_feasible(out), "forward n=2, k=1 plan infeasible");
    if (is_feasible(out)) v.require(!verify_schedule(plan, std::get<Schedule>(out)), "witness not verifier-clean");
    const auto r = min_dancers(d, RuleKind::Forward, CrossingRule::OverFirst, 1, 2);
    v.require(r.feasible() && r.outcome->plan.dancers() == 2 && r.outcome->plan.laps() == 1,
              "min_dancers does not report n=2, k=1");
  });

  report(4, "matching rule facing sensitivity (k=1 vs k=3, two bars on distinct paths)", [](Verdict& v) {
    std::mt19937 rng(4);
    std::size_t cases = 0, fig4_pairs = 0, witnesses = 0;
    for (int iter = 0; iter < 150; ++iter) {
      // two bars plus crossings, 6..10 events
      const std::size_t crossings = 2 + rng() % 3;
      std::vector<Event> events{TwistBar{1}, TwistBar{2}};
      for (CrossingId c = 1; c <= crossings; ++c) {
        if (rng() % 4 == 0) {
          events.push_back(VirtualPass{c});
          events.push_back(VirtualPass{c});
        } else {
          events.push_back(ClassicalPass{c, Strand::Over, CrossingSign::Positive});
          events.push_back(ClassicalPass{c, Strand::Under, CrossingSign::Positive});
        }
      }
      std::shuffle(events.begin(), events.end(), rng);
      const Diagram d = Diagram::validate(events);

      for (const auto& pts : placements(d.gap_count(), 3)) {
        const ParityVector t = parity_vector(d, pts);
        std::size_t ones = 0;
        for (std::size_t i = 0; i < 3; ++i) ones += t[i];
        if (ones != 2) continue;  // bars on the same path
        ++cases;

        std::size_t consistent = 0;
        std::vector<bool> ok_k1(8), feasible_k3(8);
        for (std::size_t mask = 0; mask < 8; ++mask) {
          const auto f = tvdance::testing::facings_from_mask(mask, 3);
          ok_k1[mask] = matching_check(t, f, 1);
          v.require(ok_k1[mask] == tvdance::testing::brute_matching(t, f, 1), "k=1 class differs from brute force");
          consistent += ok_k1[mask];
          v.require(matching_check(t, f, 3), "an assignment fails parity at k=3");

          const DancePlan plan(d, pts, 3, MatchingRule{f});
          const auto out = schedule_search(plan);
          if (const auto* s = std::get_if<Schedule>(&out)) {
            ++witnesses;
            feasible_k3[mask] = true;
            v.require(!verify_schedule(plan, *s), "k=3 witness not verifier-clean");
          } else {
            v.require(std::get<Infeasible>(out).reason == InfeasibleReason::Deadlock,
                      "k=3 infeasible for a facing reason");
          }
        }
        const auto solved = matching_solve(t, 1);
        v.require(solved.has_value() == (consistent > 0), "matching_solve disagrees on solvability at k=1");
        v.require(consistent == 2, "expected exactly two parity-consistent assignments at k=1");
        if (solved) v.require(matching_check(t, *solved, 1), "matching_solve output fails matching_check");

        // Same placement, facings differing at one point: one dances with k=1,
        // the other only with k=3.
        for (std::size_t a = 0; a < 8; ++a) {
          if (!ok_k1[a] || !is_feasible(schedule_search(DancePlan(d, pts, 1, MatchingRule{
                                                                 tvdance::testing::facings_from_mask(a, 3)})))) {
            continue;
          }
          for (std::size_t bit = 0; bit < 3; ++bit) {
            const std::size_t b = a ^ (std::size_t{1} << bit);
            if (!ok_k1[b] && feasible_k3[b]) ++fig4_pairs;
          }
        }
      }
    }
    v.require(cases > 0, "no placements with bars on distinct paths generated");
    v.require(witnesses > 0, "no k=3 witnesses found");
    v.require(fig4_pairs > 0, "no (k=1, k=3) facing pair found");
    v.detail << cases << " placements, " << witnesses << " k=3 witnesses, " << fig4_pairs << " k=1/k=3 facing pairs";
  });

  const auto corpus = small_corpus();

  report(5, "schedule_search agrees with the brute-force oracle (m<=8, n<=3, k<=2)", [&](Verdict& v) {
    const auto t0 = Clock::now();
    std::size_t plans = 0, disagreements = 0, feasible = 0, deadlocks = 0;
    for_each_small_plan(corpus, [&](const DancePlan& plan) {
      ++plans;
      const auto fast = schedule_search(plan);
      if (is_feasible(fast) != is_feasible(oracle_schedule(plan))) ++disagreements;
      if (is_feasible(fast)) ++feasible;
      else if (std::get<Infeasible>(fast).reason == InfeasibleReason::Deadlock) ++deadlocks;
    });
    v.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
    v.require(seconds_since(t0) < 120.0, "runtime >= 2 min");
    v.detail << corpus.size() << " diagrams, " << plans << " plans (" << feasible << " feasible, " << deadlocks
             << " deadlocked)";
  });

  report(6, "retrograde duality: over-first on d == under-first on retrograde(d)", [&](Verdict& v) {
    std::size_t plans = 0, disagreements = 0;
    for_each_small_plan(corpus, [&](const DancePlan& plan) {
      ++plans;
      const DancePlan back(retrograde(plan.diagram()), retrograde_points(plan.diagram(), plan.points()),
                           plan.laps(), retrograde(plan).rule(), CrossingRule::UnderFirst);
      if (is_feasible(schedule_search(plan)) != is_feasible(schedule_search(back))) ++disagreements;
    });
    v.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
    v.detail << plans << " plans";
  });

  report(7, "facing algebra: simulated end facings and matching_solve vs brute force", [](Verdict& v) {
    std::mt19937 rng(7);
    std::size_t checks = 0, disagreements = 0;
    while (checks < 10000) {
      const Diagram d = tvdance::testing::random_diagram(rng, rng() % 11);
      const std::size_t n = 1 + rng() % std::min<std::size_t>(4, d.gap_count());
      const auto all = placements(d.gap_count(), n);
      const GapSet pts = all[rng() % all.size()];
      const std::size_t k = 1 + rng() % 6;
      const auto crossing = static_cast<CrossingRule>(rng() % 3);
      const ParityVector t = parity_vector(d, pts);
      DanceRule rule = ForwardRule{};
      if (rng() % 2) {
        auto f = matching_solve(t, k);
        if (!f) continue;
        rule = MatchingRule{*f};
      }
      const DancePlan plan(d, pts, k, rule, crossing);
      const auto out = schedule_search(plan);
      const auto* s = std::get_if<Schedule>(&out);
      if (!s) continue;

      ++checks;
      std::vector<Facing> end(n);
      for (std::size_t i = 0; i < n; ++i) end[i] = plan.start_facing(i);
      for (const Step& step : s->steps) end[step.dancer] = step.facing;
      for (std::size_t i = 0; i < n; ++i) {
        if (end[i] != apply_parity(plan.start_facing(i), window_parity(t, i, k))) ++disagreements;
      }
    }

    std::size_t solve_cases = 0;
    for (std::size_t n = 1; n <= 4; ++n) {
      for (std::size_t tm = 0; tm < (std::size_t{1} << n); ++tm) {
        ParityVector t;
        for (std::size_t i = 0; i < n; ++i) t.bits.push_back((tm >> i) & 1);
        for (std::size_t k = 1; k <= 8; ++k) {
          ++solve_cases;
          const auto solved = matching_solve(t, k);
          bool any = false;
          for (std::size_t fm = 0; fm < (std::size_t{1} << n); ++fm) {
            any = any || matching_check(t, tvdance::testing::facings_from_mask(fm, n), k);
          }
          if (solved.has_value() != any) ++disagreements;
          if (solved != tvdance::testing::brute_matching_solve(t, k)) ++disagreements;
        }
      }
    }
    v.require(disagreements == 0, std::to_string(disagreements) + " disagreements");
    v.detail << checks << " witness schedules, " << solve_cases << " matching_solve cases";
  });

  report(8, "codec roundtrip (1,000 diagrams) and fuzzing (>= 100,000 inputs)", [](Verdict& v) {
    std::mt19937 rng(8);
    std::size_t roundtrip_bad = 0;
    for (int i = 0; i < 1000; ++i) {
      const Diagram d = tvdance::testing::random_diagram(rng, rng() % 25);
      const std::string s = serialize(d);
      if (!(parse(s) == d) || serialize(parse(s)) != s) ++roundtrip_bad;
    }
    v.require(roundtrip_bad == 0, std::to_string(roundtrip_bad) + " roundtrip failures");

    const std::string alphabet = "OUVT0123456789+-, \t\n\rxX";
    std::size_t inputs = 0, parsed = 0, errors = 0, crashes = 0;
    for (int i = 0; i < 120000; ++i) {
      std::string input;
      const std::size_t len = rng() % 40;
      switch (i % 3) {
        case 0:  // arbitrary bytes
          for (std::size_t j = 0; j < len; ++j) input.push_back(static_cast<char>(rng() & 0xff));
          break;
        case 1:  // grammar alphabet
          for (std::size_t j = 0; j < len; ++j) input.push_back(alphabet[rng() % alphabet.size()]);
          break;
        default: {  // mutated valid code
          input = serialize(tvdance::testing::random_diagram(rng, rng() % 10));
          for (int mut = 0; mut < 1 + static_cast<int>(rng() % 3) && !input.empty(); ++mut) {
            const std::size_t at = rng() % input.size();
            switch (rng() % 3) {
              case 0: input[at] = static_cast<char>(rng() & 0xff); break;
              case 1: input.erase(at, 1); break;
              default: input.insert(at, 1, alphabet[rng() % alphabet.size()]); break;
            }
          }
        }
      }
      ++inputs;
      try {
        parse(input);
        ++parsed;
      } catch (const ParseError& e) {
        ++errors;
        for (const auto& span : e.spans()) {
          if (span.byte_start > span.byte_end || span.byte_end > input.size()) ++crashes;
        }
      } catch (...) {
        ++crashes;
      }
    }
    v.require(inputs >= 100000, "too few fuzz inputs");
    v.require(crashes == 0, std::to_string(crashes) + " unstructured failures");
    v.detail << inputs << " fuzz inputs: " << parsed << " parsed, " << errors << " structured errors";
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED", failures);
  return failures;
}
