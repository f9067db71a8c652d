// Acceptance suite: one line per criterion, exit status 0 iff all pass.
// Everything is exact; there are no tolerances.

#include "gaussdeg/degrees.hpp"
#include "gaussdeg/errors.hpp"
#include "gaussdeg/partition.hpp"
#include "gaussdeg/schur.hpp"
#include "oracles.hpp"

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace gaussdeg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void expect(bool condition, const std::string& what) {
    if (!condition && outcome_.pass) {
      outcome_.pass = false;
      outcome_.detail = what;
    }
  }
  void note(const std::string& text) {
    if (outcome_.pass) outcome_.detail = text;
  }
  Outcome result() const { return outcome_; }

 private:
  Outcome outcome_;
};

std::string at(int n, int d, int m) {
  std::ostringstream s;
  s << "n=" << n << " d=" << d << " m=" << m;
  return s.str();
}

// Five routes at a single (n, d, m), all required to equal `expected`.
void five_way(Checker& c, int n, int d, int m, int expected_dim, long expected,
              const std::function<DegreeReport()>& closed) {
  const VeroneseVariety v(n, d);
  const DegreeReport main = degree_main(v, m);
  c.expect(main.dim_xm == expected_dim, "dim via main");
  c.expect(main.degree == expected, "main = " + to_decimal(main.degree));
  c.expect(degree_alternate(v, m).degree == expected, "alternate");
  c.expect(closed().degree == expected, "closed form");
  c.expect(degree_m_np1(v).degree == expected, "m = n + 1 form");
  c.expect(degree_generic(veronese_integral_table(v), m).degree == expected, "generic table");
}

Outcome criterion1() {
  Checker c;
  five_way(c, 1, 4, 2, 3, 12, [] { return degree_curve_closed(4, 2); });
  c.note("deg X_2^* = 12, dim 3 for v_4(P^1), five routes");
  return c.result();
}

Outcome criterion2() {
  Checker c;
  five_way(c, 2, 2, 3, 4, 21, [] { return degree_surface_closed(2, 3); });
  c.expect(syt_count_hook(Partition{3, 1}) == 3, "f^(3,1)");
  c.expect(syt_count_hook(Partition{2, 2}) == 2, "f^(2,2)");
  c.expect(syt_count_hook(add_rectangle(Partition{2}, 2, 1)) == 3, "f^{(2)+eps}");
  c.expect(syt_count_hook(add_rectangle(Partition{1, 1}, 2, 1)) == 2, "f^{(1,1)+eps}");
  c.note("deg X_3^* = 21, dim 4 for v_2(P^2), five routes; f^(3,1)=3, f^(2,2)=2");
  return c.result();
}

Outcome criterion3() {
  Checker c;
  int cells = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int d = 2; d <= 5; ++d) {
      const VeroneseVariety v(n, d);
      const BigInt expected = BigInt(n + 1) * power(BigInt(d - 1), n);
      c.expect(degree_main(v, v.ambient_dim() - 1).degree == expected, "Boole at " + at(n, d, v.ambient_dim() - 1));
      ++cells;
    }
  }
  c.note(std::to_string(cells) + " varieties, m = N-1 equals (n+1)(d-1)^n");
  return c.result();
}

Outcome criterion4() {
  Checker c;
  int cells = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int d = 2; d <= 5; ++d) {
      const BigInt expected = power(BigInt(n + 1), n) * power(BigInt(d - 1), n);
      c.expect(degree_main(VeroneseVariety(n, d), n).degree == expected, "ordinary at " + at(n, d, n));
      ++cells;
    }
  }
  c.note(std::to_string(cells) + " varieties, m = n equals (n+1)^n (d-1)^n");
  return c.result();
}

Outcome criterion5() {
  Checker c;
  for (int n = 1; n <= 8; ++n) {
    const IdentityCheck check = verify_identity(n);
    const BigInt expected = power(BigInt(n + 1), n) * factorial(n);
    c.expect(check.equal && check.lhs == expected && check.rhs == expected, "identity n=" + std::to_string(n));
  }
  for (int n = 1; n <= 5; ++n) {
    BigRat lhs = 0;
    for (const Partition& lam : enumerate_partitions(n, n)) {
      const BigInt f = syt_count_bruteforce(lam);
      BigRat term(f * f);
      const auto l = lam.padded(n);
      for (int i = 1; i <= n; ++i) term *= BigRat(factorial(n + i), factorial(n + i - l[i - 1]));
      lhs += term;
    }
    c.expect(lhs == BigRat(power(BigInt(n + 1), n) * factorial(n)), "brute-force identity n=" + std::to_string(n));
  }
  c.note("n = 1..8 exact; n <= 5 recomputed with brute-force f^lambda");
  return c.result();
}

Outcome criterion6() {
  Checker c;
  const auto start = std::chrono::steady_clock::now();
  std::size_t count = 0;
  std::size_t at_ten = 0;
  for (int w = 0; w <= 10; ++w) {
    for (const Partition& lam : enumerate_partitions(w, w)) {
      c.expect(syt_count_hook(lam) == syt_count_bruteforce(lam), "hook vs brute at " + lam.to_string());
      ++count;
      if (w == 10) ++at_ten;
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(at_ten == 42, "partition count at weight 10");
  c.expect(seconds < 60.0, "runtime over a minute");
  c.note(std::to_string(count) + " partitions of weight <= 10 (" + std::to_string(at_ten) +
         " of weight 10), " + std::to_string(seconds) + " s");
  return c.result();
}

Outcome criterion7() {
  Checker c;
  int checks = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int d = 2; d <= 5; ++d) {
      const VeroneseVariety v(n, d);
      const SegreSequence s = veronese_segre_sequence(v);
      for (int w = 0; w <= n; ++w) {
        for (const Partition& lam : enumerate_partitions(w, n)) {
          for (int length = std::max(1, lam.length()); length <= n; ++length) {
            c.expect(schur_delta_veronese_closed(v, lam, length) == schur_delta_determinant(s, lam, length),
                     "Schur " + lam.to_string() + " " + at(n, d, length));
            ++checks;
          }
        }
      }
    }
  }
  c.note(std::to_string(checks) + " (n, d, lambda, length) cells agree");
  return c.result();
}

Outcome criterion8() {
  Checker c;
  int cells = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int d = 2; d <= 4; ++d) {
      const VeroneseVariety v(n, d);
      for (int m = n; m < v.ambient_dim(); ++m) {
        const BoundsReport b = bounds(v, m);
        c.expect(b.lower <= b.ratio && b.ratio <= b.upper, "sandwich at " + at(n, d, m));
        if (n == 1) c.expect(b.lower == b.ratio && b.ratio == b.upper, "curve equality at " + at(n, d, m));
        ++cells;
      }
    }
  }
  c.note(std::to_string(cells) + " cells, lower <= ratio <= upper; equality for n = 1");
  return c.result();
}

Outcome criterion9() {
  Checker c;
  int checks = 0;
  for (int n = 1; n <= 5; ++n) {
    const Partition column = Partition::rectangle(n, 1);
    const Partition row{n};
    for (int big_n = 2 * n; big_n <= 20; ++big_n) {
      for (int m = n; m < big_n; ++m) {
        const BigRat low = d_lambda(column, n, big_n, m);
        const BigRat high = d_lambda(row, n, big_n, m);
        for (const Partition& lam : enumerate_partitions(n, n)) {
          const BigRat value = d_lambda(lam, n, big_n, m);
          c.expect(low <= value && value <= high, "D" + lam.to_string() + " N=" + std::to_string(big_n));
          ++checks;
        }
      }
    }
  }
  c.note(std::to_string(checks) + " (lambda, N, m) cells with 2n <= N <= 20");
  return c.result();
}

Outcome criterion10() {
  Checker c;
  int cells = 0;
  for (int d = 2; d <= 4; ++d) {
    const VeroneseVariety v(2, d);
    for (int m = 2; m < v.ambient_dim(); ++m, ++cells)
      c.expect(degree_surface_closed(d, m).degree == degree_main(v, m).degree, "surface " + at(2, d, m));
  }
  int threefold_d3 = 0;
  for (int d = 2; d <= 3; ++d) {
    const VeroneseVariety v(3, d);
    for (int m = 3; m < v.ambient_dim(); ++m, ++cells) {
      c.expect(degree_threefold_closed(d, m).degree == degree_main(v, m).degree, "threefold " + at(3, d, m));
      if (d == 3) ++threefold_d3;
    }
  }
  c.expect(VeroneseVariety(3, 3).ambient_dim() == 19 && threefold_d3 == 16, "v_3(P^3) has N = 19, 16 values of m");
  c.note(std::to_string(cells) + " cells; v_3(P^3): N = 19, " + std::to_string(threefold_d3) + " values of m");
  return c.result();
}

Outcome criterion11() {
  Checker c;
  const ScanReport scan = conjecture_scan(1, 3, 2, 4);
  std::ostringstream text;
  text << scan.rows.size() << " cells scanned, " << scan.violations.size()
       << " violation(s) of the conjectured bound (reported, not asserted)";
  for (const ScanRow& row : scan.violations) {
    text << "; counterexample " << at(row.n, row.d, row.m) << " ratio " << to_fraction_string(row.bounds.ratio)
         << " > " << to_fraction_string(row.bounds.conjecture_upper);
  }
  c.note(text.str());
  return c.result();
}

Outcome criterion12() {
  Checker c;
  int cells = 0;
  for (int n = 1; n <= 3; ++n) {
    for (int d = 2; d <= 4; ++d) {
      const VeroneseVariety v(n, d);
      const SegreIntegralTable table = veronese_integral_table(v);
      for (int m = n; m < v.ambient_dim(); ++m, ++cells)
        c.expect(degree_generic(table, m).degree == degree_main(v, m).degree, "generic " + at(n, d, m));
    }
  }
  int curve_cells = 0;
  for (int big_n = 2; big_n <= 8; ++big_n) {
    for (int genus = 0; genus <= 3; ++genus) {
      for (int deg = big_n; deg <= big_n + 3; ++deg) {
        const SegreIntegralTable table(1, big_n, {{Partition{1}, BigInt(2 * genus - 2 + 2 * deg)}});
        for (int m = 1; m < big_n; ++m, ++curve_cells) {
          c.expect(degree_generic(table, m).degree == degree_general_curve(big_n, deg, genus, m).degree,
                   "curve table N=" + std::to_string(big_n) + " g=" + std::to_string(genus));
        }
      }
    }
  }
  c.note(std::to_string(cells) + " Veronese cells and " + std::to_string(curve_cells) + " curve cells round-trip");
  return c.result();
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1  v_4(P^1), m=2: five-way degree 12", criterion1},
      {"AC2  v_2(P^2), m=3: five-way degree 21", criterion2},
      {"AC3  Boole at m=N-1", criterion3},
      {"AC4  ordinary Gauss map at m=n", criterion4},
      {"AC5  f^lambda identity", criterion5},
      {"AC6  hook length vs brute force", criterion6},
      {"AC7  closed Schur vs Jacobi-Trudi", criterion7},
      {"AC8  degree bounds sandwich", criterion8},
      {"AC9  D(lambda) monotonicity", criterion9},
      {"AC10 surface and threefold closed forms", criterion10},
      {"AC11 conjectured bound scan", criterion11},
      {"AC12 generic-mode round trip", criterion12},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failed;
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << name << " -- " << outcome.detail << '\n';
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
