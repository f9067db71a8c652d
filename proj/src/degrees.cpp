#include "gaussdeg/degrees.hpp"

#include "gaussdeg/errors.hpp"
#include "gaussdeg/grassmann.hpp"

#include <array>
#include <string>
#include <utility>

namespace gaussdeg {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 9> kMethodNames{{
    {Method::main, "main"},
    {Method::alternate, "alternate"},
    {Method::curve_closed, "curve_closed"},
    {Method::surface_closed, "surface_closed"},
    {Method::threefold_closed, "threefold_closed"},
    {Method::boole, "boole"},
    {Method::generic, "generic"},
    {Method::m_eq_n_plus_1, "m_eq_n_plus_1"},
    {Method::general_curve, "general_curve"},
}};

BigInt sign_power(int exponent) { return exponent % 2 == 0 ? BigInt(1) : BigInt(-1); }

// prod_{i=1}^{height} (n+i)!/(n+i-lam_i)!, zero when some lam_i > n+i.
BigRat falling_factorial_product(int n, const Partition& lam, int height) {
  const std::vector<int> l = lam.padded(height);
  BigRat product = 1;
  for (int i = 1; i <= height; ++i) {
    product *= BigRat(factorial(n + i)) * inverse_factorial(n + i - l[static_cast<std::size_t>(i - 1)]);
  }
  return product;
}

DegreeReport make_report(int n, std::optional<int> d, int ambient_dim, int m, BigRat value,
                         Method method, std::string notes = {}) {
  DegreeReport report;
  report.n = n;
  report.d = d;
  report.ambient_dim = ambient_dim;
  report.m = m;
  report.dim_xm = dim_xm(n, ambient_dim, m);
  report.degree = require_integral(value, std::string("degree via ") +
                                              std::string(method_name(method)));
  if (report.degree <= 0) {
    throw InternalError("degree via " + std::string(method_name(method)) +
                        " is not positive: " + to_decimal(report.degree));
  }
  report.method = method;
  report.notes = std::move(notes);
  return report;
}

void require_dimension(const VeroneseVariety& v, int n, std::string_view what) {
  if (v.dim() != n) {
    throw ParameterError(std::string(what) + " applies only to n = " + std::to_string(n));
  }
}

}  // namespace

std::string_view method_name(Method method) {
  for (const auto& [value, name] : kMethodNames) {
    if (value == method) return name;
  }
  return "unknown";
}

Method parse_method(std::string_view tag) {
  for (const auto& [value, name] : kMethodNames) {
    if (name == tag) return value;
  }
  throw ParameterError("unknown method '" + std::string(tag) + "'");
}

GaussIndex::GaussIndex(int n, int ambient_dim, int m) : n_(n), ambient_(ambient_dim), m_(m) {
  if (n < 1 || m < n || m > ambient_dim - 1) {
    throw ParameterError("m = " + std::to_string(m) + " outside " + std::to_string(n) +
                         " <= m <= N - 1 = " + std::to_string(ambient_dim - 1));
  }
}

int dim_xm(int n, int ambient_dim, int m) {
  GaussIndex index(n, ambient_dim, m);
  return n + index.codim() * index.excess();
}

BigInt ordinary_gauss_degree(const VeroneseVariety& v) {
  const auto n = static_cast<unsigned long>(v.dim());
  return power(BigInt(v.dim() + 1), n) * power(BigInt(v.degree() - 1), n);
}

BigInt boole_degree(int n, int d) {
  if (n < 1 || d < 2) throw ParameterError("boole_degree needs n >= 1 and d >= 2");
  return BigInt(n + 1) * power(BigInt(d - 1), static_cast<unsigned long>(n));
}

DegreeReport degree_main(const VeroneseVariety& v, int m) {
  const int n = v.dim();
  const GaussIndex index(n, v.ambient_dim(), m);
  const int e = index.codim();
  BigRat sum = 0;
  for (const Partition& lam : enumerate_partitions(n, e)) {
    sum += BigRat(syt_count_hook(lam) * syt_count_hook(add_rectangle(lam, e, index.excess()))) *
           falling_factorial_product(n, lam, e);
  }
  BigRat prefactor(ordinary_gauss_degree(v),
                   factorial(n) * power(BigInt(n + 1), static_cast<unsigned long>(n)));
  return make_report(n, v.degree(), v.ambient_dim(), m, prefactor * sum, Method::main);
}

DegreeReport degree_alternate(const VeroneseVariety& v, int m) {
  const int n = v.dim();
  const GaussIndex index(n, v.ambient_dim(), m);
  const int rows = index.excess();
  const int width = index.codim();
  const int big_m = dim_xm(n, v.ambient_dim(), m);
  BigRat total = 0;
  for (int k = 0; k <= n; ++k) {
    // For m = n there are no rows: only the empty shape survives, at k = n.
    BigRat inner = 0;
    for (const Partition& lam : enumerate_partitions(n - k, rows)) {
      inner += BigRat(syt_count_hook(lam) * syt_count_hook(add_rectangle(lam, rows, width))) *
               falling_factorial_product(n, lam, rows);
    }
    total += BigRat(sign_power(n - k) * power(BigInt(n + 1), static_cast<unsigned long>(k)) *
                        binomial(big_m, k),
                    factorial(n - k)) *
             inner;
  }
  BigRat prefactor(ordinary_gauss_degree(v), power(BigInt(n + 1), static_cast<unsigned long>(n)));
  return make_report(n, v.degree(), v.ambient_dim(), m, prefactor * total, Method::alternate);
}

DegreeReport degree_m_np1(const VeroneseVariety& v) {
  const int n = v.dim();
  const int big_n = v.ambient_dim();
  if (n + 1 > big_n - 1) {
    throw ParameterError("m = n + 1 = " + std::to_string(n + 1) + " exceeds N - 1 = " +
                         std::to_string(big_n - 1));
  }
  BigInt sum = 0;
  for (int k = 0; k <= n; ++k) {
    sum += sign_power(n - k) * power(BigInt(n + 1), static_cast<unsigned long>(k)) *
           binomial(big_n - 1, k) * binomial(n + 1, n - k);
  }
  BigRat value(ordinary_gauss_degree(v) * sum, power(BigInt(n + 1), static_cast<unsigned long>(n)));
  return make_report(n, v.degree(), big_n, n + 1, value, Method::m_eq_n_plus_1);
}

DegreeReport degree_curve_closed(int d, int m) {
  const VeroneseVariety v(1, d);
  const GaussIndex index(1, d, m);
  const GrassmannShape fibre(d - m, d - 1);
  const GrassmannShape dual_fibre(m - 1, d - 1);
  const BigInt fibre_degree = grassmann_degree(fibre);
  if (fibre_degree != grassmann_degree(dual_fibre)) {
    throw InternalError("deg G(d-m, d-1) != deg G(m-1, d-1) at d = " + std::to_string(d) +
                        ", m = " + std::to_string(m));
  }
  BigRat value(BigInt(index.codim()), BigInt(d - 1));
  value *= BigRat((1 + grassmann_dim(fibre)) * fibre_degree * 2 * (d - 1));
  return make_report(1, d, d, m, value, Method::curve_closed);
}

DegreeReport degree_general_curve(int ambient_dim, int d, int genus, int m) {
  if (ambient_dim < 2) throw ParameterError("general curve needs N >= 2");
  if (genus < 0) throw ParameterError("general curve needs g >= 0");
  if (d < 1) throw ParameterError("general curve needs d >= 1");
  const GaussIndex index(1, ambient_dim, m);
  const long ordinary = 2L * genus - 2 + 2L * d;
  if (ordinary <= 0) throw ParameterError("general curve needs 2g - 2 + 2d > 0");
  const GrassmannShape g(ambient_dim - m, ambient_dim - 1);
  BigRat value(BigInt(index.codim()), BigInt(ambient_dim - 1));
  value *= BigRat((1 + grassmann_dim(g)) * grassmann_degree(g) * ordinary);
  return make_report(1, d, ambient_dim, m, value, Method::general_curve,
                     "genus " + std::to_string(genus));
}

DegreeReport degree_surface_closed(int d, int m) {
  const VeroneseVariety v(2, d);
  const int big_n = v.ambient_dim();
  const GaussIndex index(2, big_n, m);
  const BigInt e = index.codim();
  const BigInt nn = big_n;
  BigRat coefficient(e * (3 * e * nn - nn - 5 * e - 1), 3 * (nn - 1) * (nn - 2) * (nn - 3));
  const GrassmannShape g(m - 2, big_n - 2);
  BigRat value = coefficient * BigRat(binomial(2 + grassmann_dim(g), 2) * grassmann_degree(g) *
                                      ordinary_gauss_degree(v));
  return make_report(2, d, big_n, m, value, Method::surface_closed);
}

DegreeReport degree_threefold_closed(int d, int m) {
  const VeroneseVariety v(3, d);
  const int big_n = v.ambient_dim();
  const GaussIndex index(3, big_n, m);
  const BigInt e = index.codim();
  const BigInt nn = big_n;
  const BigInt numerator = e * ((8 * e * e - 6 * e + 1) * nn * nn + (-42 * e * e + 9 * e + 6) * nn +
                                5 * (8 * e * e + 3 * e + 1));
  const BigInt denominator = 8 * (nn - 1) * (nn - 2) * (nn - 3) * (nn - 4) * (nn - 5);
  const GrassmannShape g(m - 3, big_n - 3);
  BigRat value = BigRat(numerator, denominator) *
                 BigRat(binomial(3 + grassmann_dim(g), 3) * grassmann_degree(g) *
                        ordinary_gauss_degree(v));
  return make_report(3, d, big_n, m, value, Method::threefold_closed);
}

BigInt katz_kleiman(const SegreIntegralTable& table) {
  return table.at(Partition{table.dim()});
}

DegreeReport degree_generic(const SegreIntegralTable& table, int m) {
  const int n = table.dim();
  const GaussIndex index(n, table.ambient_dim(), m);
  const int e = index.codim();
  BigInt total = 0;
  for (const Partition& lam : enumerate_partitions(n, e)) {
    total += syt_count_hook(add_rectangle(lam, e, index.excess())) * table.at(lam);
  }
  if (total <= 0) throw NotGenericallyFinite(total);
  return make_report(n, std::nullopt, table.ambient_dim(), m, BigRat(total), Method::generic,
                     "positive d_m^* certifies gamma_m generically finite");
}

DegreeReport degree_by_method(const VeroneseVariety& v, int m, Method method) {
  switch (method) {
    case Method::main:
      return degree_main(v, m);
    case Method::alternate:
      return degree_alternate(v, m);
    case Method::curve_closed:
      require_dimension(v, 1, "curve_closed");
      return degree_curve_closed(v.degree(), m);
    case Method::surface_closed:
      require_dimension(v, 2, "surface_closed");
      return degree_surface_closed(v.degree(), m);
    case Method::threefold_closed:
      require_dimension(v, 3, "threefold_closed");
      return degree_threefold_closed(v.degree(), m);
    case Method::boole:
      static_cast<void>(GaussIndex(v.dim(), v.ambient_dim(), m));
      if (m != v.ambient_dim() - 1) throw ParameterError("boole applies only to m = N - 1");
      return make_report(v.dim(), v.degree(), v.ambient_dim(), m,
                         BigRat(boole_degree(v.dim(), v.degree())), Method::boole);
    case Method::m_eq_n_plus_1:
      static_cast<void>(GaussIndex(v.dim(), v.ambient_dim(), m));
      if (m != v.dim() + 1) throw ParameterError("m_eq_n_plus_1 applies only to m = n + 1");
      return degree_m_np1(v);
    case Method::generic:
      return degree_generic(veronese_integral_table(v), m);
    case Method::general_curve:
      break;
  }
  throw ParameterError("method '" + std::string(method_name(method)) +
                       "' is not a Veronese formula");
}

BigRat d_lambda(const Partition& lam, int n, int ambient_dim, int m) {
  const std::vector<int> l = lam.padded(n);
  BigRat value = 1;
  for (int i = 1; i <= n; ++i) {
    for (int step = 1; step <= l[static_cast<std::size_t>(i - 1)]; ++step) {
      const int denominator = ambient_dim - n + step - i;
      if (denominator == 0) {
        throw ParameterError("D(lambda) undefined: N = " + std::to_string(ambient_dim) +
                             " is too small for n = " + std::to_string(n));
      }
      value *= BigRat(BigInt(ambient_dim - m + step - i), BigInt(denominator));
    }
  }
  return value;
}

BoundsReport bounds(const VeroneseVariety& v, int m) {
  const int n = v.dim();
  const int big_n = v.ambient_dim();
  const GaussIndex index(n, big_n, m);
  const BigInt degree = degree_main(v, m).degree;
  const GrassmannShape g(m - n, big_n - n);

  BoundsReport report;
  report.product = binomial(n + grassmann_dim(g), n) * grassmann_degree(g) * ordinary_gauss_degree(v);
  report.ratio = BigRat(degree, report.product);

  const BigInt lower_den = binomial(big_n - n, n);
  const BigInt upper_den = binomial(big_n - 1, n);
  if (lower_den == 0 || upper_den == 0) {
    throw ParameterError("degree bounds undefined for N = " + std::to_string(big_n) + ", n = " +
                         std::to_string(n));
  }
  report.lower = BigRat(binomial(index.codim(), n), lower_den);
  report.upper = BigRat(binomial(index.codim() + n - 1, n), upper_den);
  report.conjecture_upper =
      power(BigRat(BigInt(index.codim()), BigInt(big_n - n)), static_cast<unsigned long>(n));
  report.virtual_degree = report.conjecture_upper * BigRat(report.product);
  report.within_bounds = report.lower <= report.ratio && report.ratio <= report.upper;
  report.within_conjecture = report.ratio <= report.conjecture_upper;
  if (!report.within_bounds) {
    throw InternalError("degree ratio " + to_fraction_string(report.ratio) + " outside [" +
                        to_fraction_string(report.lower) + ", " + to_fraction_string(report.upper) +
                        "] for n = " + std::to_string(n) + ", d = " + std::to_string(v.degree()) +
                        ", m = " + std::to_string(m));
  }
  return report;
}

IdentityCheck verify_identity(int n) {
  if (n < 1) throw ParameterError("verify_identity needs n >= 1");
  BigRat lhs = 0;
  for (const Partition& lam : enumerate_partitions(n, n)) {
    const BigInt f = syt_count_hook(lam);
    lhs += BigRat(f * f) * falling_factorial_product(n, lam, n);
  }
  IdentityCheck check;
  check.lhs = require_integral(lhs, "verify_identity");
  check.rhs = power(BigInt(n + 1), static_cast<unsigned long>(n)) * factorial(n);
  check.equal = check.lhs == check.rhs;
  return check;
}

ScanReport conjecture_scan(int n_lo, int n_hi, int d_lo, int d_hi) {
  if (n_lo > n_hi || d_lo > d_hi) throw ParameterError("conjecture_scan: empty range");
  if (n_lo < 1 || d_lo < 2) throw ParameterError("conjecture_scan needs n >= 1 and d >= 2");
  ScanReport scan;
  for (int n = n_lo; n <= n_hi; ++n) {
    for (int d = d_lo; d <= d_hi; ++d) {
      const VeroneseVariety v(n, d);
      for (int m = n; m <= v.ambient_dim() - 1; ++m) {
        ScanRow row;
        row.n = n;
        row.d = d;
        row.ambient_dim = v.ambient_dim();
        row.m = m;
        row.bounds = bounds(v, m);
        row.degree = require_integral(row.bounds.ratio * BigRat(row.bounds.product), "scan degree");
        if (!row.bounds.within_conjecture) scan.violations.push_back(row);
        scan.rows.push_back(std::move(row));
      }
    }
  }
  return scan;
}

}  // namespace gaussdeg
