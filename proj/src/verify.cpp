#include "gaussdeg/verify.hpp"

#include "gaussdeg/degrees.hpp"
#include "gaussdeg/errors.hpp"
#include "gaussdeg/partition.hpp"
#include "gaussdeg/schur.hpp"

#include <exception>
#include <functional>
#include <sstream>

namespace gaussdeg::verify {

namespace {

// Records one check; exceptions count as failures carrying their message.
void check(SuiteResult& result, const std::string& label, const std::function<bool()>& predicate) {
  bool ok = false;
  std::string detail;
  try {
    ok = predicate();
  } catch (const std::exception& e) {
    detail = std::string(": ") + e.what();
  }
  if (ok) {
    ++result.passed;
  } else {
    ++result.failed;
    result.failures.push_back(label + detail);
  }
}

std::string tuple(int n, int d, int m) {
  std::ostringstream out;
  out << "(n=" << n << ", d=" << d << ", m=" << m << ")";
  return out.str();
}

}  // namespace

SuiteResult identity(int max_n) {
  SuiteResult result;
  result.name = "identity";
  for (int n = 1; n <= max_n; ++n) {
    check(result, "identity n=" + std::to_string(n), [n] { return verify_identity(n).equal; });
  }
  return result;
}

SuiteResult syt(int max_weight, int cap) {
  SuiteResult result;
  result.name = "syt";
  for (int w = 0; w <= max_weight; ++w) {
    for (const Partition& lam : enumerate_partitions(w, w)) {
      check(result, "syt " + lam.to_string(),
            [&] { return syt_count_hook(lam) == syt_count_bruteforce(lam, cap); });
    }
  }
  return result;
}

SuiteResult crossform(int max_n, int max_d) {
  SuiteResult result;
  result.name = "crossform";
  for (int n = 1; n <= max_n; ++n) {
    for (int d = 2; d <= max_d; ++d) {
      const VeroneseVariety v(n, d);
      const int top = v.ambient_dim() - 1;
      for (int m = n; m <= top; ++m) {
        const std::string at = tuple(n, d, m);
        BigInt reference;
        check(result, "main " + at, [&] {
          reference = degree_main(v, m).degree;
          return reference > 0;
        });
        check(result, "alternate " + at, [&] { return degree_alternate(v, m).degree == reference; });
        check(result, "generic " + at,
              [&] { return degree_generic(veronese_integral_table(v), m).degree == reference; });
        if (n == 1) {
          check(result, "curve_closed " + at,
                [&] { return degree_curve_closed(d, m).degree == reference; });
          check(result, "general_curve " + at,
                [&] { return degree_general_curve(d, d, 0, m).degree == reference; });
        }
        if (n == 2) {
          check(result, "surface_closed " + at,
                [&] { return degree_surface_closed(d, m).degree == reference; });
        }
        if (n == 3) {
          check(result, "threefold_closed " + at,
                [&] { return degree_threefold_closed(d, m).degree == reference; });
        }
        if (m == n + 1) {
          check(result, "m_eq_n_plus_1 " + at, [&] { return degree_m_np1(v).degree == reference; });
        }
        if (m == n) {
          check(result, "ordinary " + at, [&] { return ordinary_gauss_degree(v) == reference; });
        }
        if (m == top) {
          check(result, "boole " + at, [&] { return boole_degree(n, d) == reference; });
        }
      }
    }
  }
  return result;
}

SuiteResult schur(int max_n, int max_d) {
  SuiteResult result;
  result.name = "schur";
  for (int n = 1; n <= max_n; ++n) {
    for (int d = 2; d <= max_d; ++d) {
      const VeroneseVariety v(n, d);
      const SegreSequence s = veronese_segre_sequence(v);
      for (int w = 0; w <= n; ++w) {
        for (const Partition& lam : enumerate_partitions(w, n)) {
          for (int length = std::max(1, lam.length()); length <= n; ++length) {
            check(result,
                  "schur n=" + std::to_string(n) + " d=" + std::to_string(d) + " " +
                      lam.to_string() + " len=" + std::to_string(length),
                  [&] {
                    return schur_delta_determinant(s, lam, length) ==
                           schur_delta_veronese_closed(v, lam, length);
                  });
          }
        }
      }
    }
  }
  return result;
}

SuiteResult bounds(int max_n, int max_d) {
  SuiteResult result;
  result.name = "bounds";
  for (int n = 1; n <= max_n; ++n) {
    for (int d = 2; d <= max_d; ++d) {
      const VeroneseVariety v(n, d);
      for (int m = n; m <= v.ambient_dim() - 1; ++m) {
        check(result, "bounds " + tuple(n, d, m), [&] {
          const BoundsReport b = gaussdeg::bounds(v, m);
          bool ok = b.lower <= b.ratio && b.ratio <= b.upper;
          if (n == 1) ok = ok && b.lower == b.ratio && b.ratio == b.upper;
          return ok;
        });
      }
    }
  }
  return result;
}

SuiteResult lemma(int max_n, int max_ambient) {
  SuiteResult result;
  result.name = "lemma";
  for (int n = 1; n <= max_n; ++n) {
    const Partition column = Partition::rectangle(n, 1);
    const Partition row{n};
    for (int big_n = 2 * n; big_n <= max_ambient; ++big_n) {
      for (int m = n; m <= big_n - 1; ++m) {
        const BigRat low = d_lambda(column, n, big_n, m);
        const BigRat high = d_lambda(row, n, big_n, m);
        for (const Partition& lam : enumerate_partitions(n, n)) {
          check(result,
                "D" + lam.to_string() + " n=" + std::to_string(n) + " N=" + std::to_string(big_n) +
                    " m=" + std::to_string(m),
                [&] {
                  const BigRat value = d_lambda(lam, n, big_n, m);
                  return low <= value && value <= high;
                });
        }
      }
    }
  }
  return result;
}

SuiteResult generic(int max_n, int max_d) {
  SuiteResult result;
  result.name = "generic";
  for (int n = 1; n <= max_n; ++n) {
    for (int d = 2; d <= max_d; ++d) {
      const VeroneseVariety v(n, d);
      const SegreIntegralTable table = veronese_integral_table(v);
      for (int m = n; m <= v.ambient_dim() - 1; ++m) {
        check(result, "veronese table " + tuple(n, d, m),
              [&] { return degree_generic(table, m).degree == degree_main(v, m).degree; });
      }
      check(result, "katz_kleiman n=" + std::to_string(n) + " d=" + std::to_string(d),
            [&] { return katz_kleiman(table) == boole_degree(n, d); });
    }
  }
  for (int big_n = 2; big_n <= 8; ++big_n) {
    for (int genus = 0; genus <= 3; ++genus) {
      for (int deg = big_n; deg <= big_n + 2; ++deg) {
        const SegreIntegralTable table(1, big_n, {{Partition{1}, BigInt(2 * genus - 2 + 2 * deg)}});
        for (int m = 1; m <= big_n - 1; ++m) {
          check(result,
                "curve table N=" + std::to_string(big_n) + " d=" + std::to_string(deg) +
                    " g=" + std::to_string(genus) + " m=" + std::to_string(m),
                [&] {
                  return degree_generic(table, m).degree ==
                         degree_general_curve(big_n, deg, genus, m).degree;
                });
        }
      }
    }
  }
  return result;
}

}  // namespace gaussdeg::verify
