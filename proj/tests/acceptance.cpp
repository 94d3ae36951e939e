// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Usage: treebalance_acceptance [--max-n N] (N in 16..18).

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "oracle.hpp"
#include "treebalance/enumeration.hpp"
#include "treebalance/extremal.hpp"
#include "treebalance/generators.hpp"
#include "treebalance/newick.hpp"
#include "treebalance/stairs2.hpp"

using namespace treebalance;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) {
      detail = why;
    }
    ok = false;
  }
};

using Clock = std::chrono::steady_clock;

int failures = 0;

// Runs `body`, then enforces the time limit (seconds, 0 = none).
void criterion(const std::string& name, double limit_seconds,
               const std::function<void(Outcome&)>& body) {
  Outcome outcome;
  const auto start = Clock::now();
  body(outcome);
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && elapsed >= limit_seconds) {
    outcome.fail("took " + std::to_string(elapsed) + " s, limit " +
                 std::to_string(limit_seconds) + " s");
  }
  failures += outcome.ok ? 0 : 1;
  std::printf("[%s] %-44s %8.3f s%s%s\n", outcome.ok ? "PASS" : "FAIL", name.c_str(), elapsed,
              outcome.detail.empty() ? "" : "  ", outcome.detail.c_str());
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t max_n = 16;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--max-n" && i + 1 < argc) {
      max_n = std::strtoul(argv[++i], nullptr, 10);
    }
  }
  if (max_n < 16 || max_n > 18) {
    std::fprintf(stderr, "--max-n must be in 16..18\n");
    return 2;
  }
  const double sweep_limit = max_n <= 16 ? 30.0 : 120.0;

  criterion("fully balanced trees have stairs2 = 1", 1.0, [](Outcome& o) {
    for (std::size_t h = 1; h <= 10; ++h) {
      if (stairs2_direct(fully_balanced(h)) != Rational(1)) {
        o.fail("h=" + std::to_string(h));
      }
    }
  });

  // One exhaustive sweep feeds the next three criteria.
  std::vector<ExtremalReport> reports;
  VerifyOptions options;
  options.bound = max_n;
  options.jobs = std::max(1U, std::thread::hardware_concurrency());
  criterion("unique maximizer is echelon(n), n=2.." + std::to_string(max_n), sweep_limit,
            [&](Outcome& o) {
              for (std::size_t n = 2; n <= max_n; ++n) {
                reports.push_back(verify_extremal(n, options));
                const ExtremalReport& r = reports.back();
                if (!r.max_unique_and_is_echelon) {
                  o.fail("n=" + std::to_string(n) + " has " +
                         std::to_string(r.max_witnesses.size()) + " maximizers");
                }
                if (r.max_value != max_value_recursive(n)) {
                  o.fail("n=" + std::to_string(n) + " maximum differs from st*(n)");
                }
              }
            });

  criterion("unique minimizer is caterpillar(n), n=2..16", 0, [&](Outcome& o) {
    for (const ExtremalReport& r : reports) {
      if (r.n <= 16 && !r.min_unique_and_is_caterpillar) {
        o.fail("n=" + std::to_string(r.n));
      }
    }
  });

  criterion("maximizer subtrees are maximizers, n=2..16", 0, [&](Outcome& o) {
    for (const ExtremalReport& r : reports) {
      if (r.n <= 16 && !r.subtree_maximality_holds) {
        o.fail("n=" + std::to_string(r.n));
      }
    }
  });

  criterion("recursive = closed = even-recursion, n<=4096", 5.0, [](Outcome& o) {
    for (std::size_t n = 0; n <= 4096; ++n) {
      const Rational r = max_value_recursive(n);
      if (r != max_value_closed(n)) {
        o.fail("closed form differs at n=" + std::to_string(n));
      }
      if (n >= 2 && n % 2 == 0 && r != max_value_even_recursion(n)) {
        o.fail("even recursion differs at n=" + std::to_string(n));
      }
    }
  });

  criterion("stairs2(echelon(n)) = st*(n), n=1..4096", 0, [](Outcome& o) {
    for (std::size_t n = 1; n <= 4096; ++n) {
      if (stairs2_direct(echelon(n)) != max_value_recursive(n)) {
        o.fail("n=" + std::to_string(n));
      }
    }
  });

  criterion("direct = recursive on all shapes, n=1..12", 0, [](Outcome& o) {
    std::size_t checked = 0;
    for (std::size_t n = 1; n <= 12; ++n) {
      for (const Shape& s : enumerate_shapes(n)) {
        ++checked;
        if (stairs2_direct(s.tree) != stairs2_recursive(s.tree)) {
          o.fail("mismatch on " + s.code.text());
        }
      }
    }
    if (checked != 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 46 + 98 + 207 + 451) {
      o.fail("checked " + std::to_string(checked) + " shapes");
    }
  });

  criterion("spot values agree with brute force", 0, [](Outcome& o) {
    struct Spot {
      int n;
      Rational value;
    };
    std::vector<Spot> spots{{3, Rational(3, 4)}, {5, Rational(13, 16)}, {6, Rational(9, 10)}};
    for (int h = 1; h <= 4; ++h) {
      spots.push_back({1 << h, Rational(1)});
    }
    for (const Spot& s : spots) {
      const auto n = static_cast<std::size_t>(s.n);
      const Rational brute = oracle::extremes(s.n).max.to_rational();
      if (brute != s.value || max_value_recursive(n) != s.value ||
          max_value_closed(n) != s.value) {
        o.fail("n=" + std::to_string(s.n));
      }
    }
  });

  criterion("enumeration complete and distinct, n=1..14", 0, [](Outcome& o) {
    for (std::size_t n = 1; n <= 14; ++n) {
      const auto& shapes = enumerate_shapes(n);
      std::set<std::string> codes;
      for (const Shape& s : shapes) {
        codes.insert(canonical(s.tree).text());
      }
      if (count_shapes(n).count != static_cast<unsigned long>(shapes.size()) ||
          codes.size() != shapes.size()) {
        o.fail("n=" + std::to_string(n));
      }
    }
  });

  criterion("Newick round trip n<=10, non-binary rejected", 0, [](Outcome& o) {
    for (std::size_t n = 1; n <= 10; ++n) {
      for (const Shape& s : enumerate_shapes(n)) {
        if (!is_isomorphic(parse_newick(write_newick(s.tree)).shape, s.tree)) {
          o.fail("round trip broke " + s.code.text());
        }
      }
    }
    struct Bad {
      const char* text;
      std::size_t offset;
    };
    for (const Bad& bad : {Bad{"(A,B,C);", 0}, Bad{"((A),B);", 1}, Bad{"(A,(B,C,D));", 3}}) {
      try {
        parse_newick(bad.text);
        o.fail(std::string("accepted ") + bad.text);
      } catch (const NewickArityError& e) {
        if (e.offset() != bad.offset) {
          o.fail(std::string("wrong offset for ") + bad.text);
        }
      }
    }
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
