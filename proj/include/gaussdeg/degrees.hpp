#pragma once

#include "gaussdeg/arith.hpp"
#include "gaussdeg/partition.hpp"
#include "gaussdeg/schur.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gaussdeg {

enum class Method {
  main,
  alternate,
  curve_closed,
  surface_closed,
  threefold_closed,
  boole,
  generic,
  m_eq_n_plus_1,
  general_curve,
};

std::string_view method_name(Method method);

/// Throws ParameterError for an unknown tag.
Method parse_method(std::string_view tag);

/// Index m of the m-th Gauss map, validated against n <= m <= N - 1.
class GaussIndex {
 public:
  GaussIndex(int n, int ambient_dim, int m);

  int value() const noexcept { return m_; }
  /// e = N - m, the number of rows of the partitions lambda.
  int codim() const noexcept { return ambient_ - m_; }
  /// m - n, the number of rows of the partitions lambda'.
  int excess() const noexcept { return m_ - n_; }

 private:
  int n_;
  int ambient_;
  int m_;
};

struct DegreeReport {
  int n = 0;
  std::optional<int> d;  // absent for generic tables and general curves
  int ambient_dim = 0;
  int m = 0;
  int dim_xm = 0;
  BigInt degree;
  Method method = Method::main;
  std::string notes;
};

struct BoundsReport {
  BigInt product;  // C(n + dim G, n) deg G deg X_n^*, G = G(m-n, N-n)
  BigRat ratio;    // deg X_m^* / product
  BigRat lower;
  BigRat upper;
  BigRat conjecture_upper;  // ((N-m)/(N-n))^n
  BigRat virtual_degree;    // conjecture_upper * product
  bool within_bounds = false;
  bool within_conjecture = false;
};

/// n + (N - m)(m - n).
int dim_xm(int n, int ambient_dim, int m);

/// (n+1)^n (d-1)^n, the degree of the ordinary Gauss map image.
BigInt ordinary_gauss_degree(const VeroneseVariety& v);

/// (n+1)(d-1)^n.
BigInt boole_degree(int n, int d);

DegreeReport degree_main(const VeroneseVariety& v, int m);
DegreeReport degree_alternate(const VeroneseVariety& v, int m);
DegreeReport degree_m_np1(const VeroneseVariety& v);
DegreeReport degree_curve_closed(int d, int m);
DegreeReport degree_general_curve(int ambient_dim, int d, int genus, int m);
DegreeReport degree_surface_closed(int d, int m);
DegreeReport degree_threefold_closed(int d, int m);

/// The table entry at (n).
BigInt katz_kleiman(const SegreIntegralTable& table);

/// Sum of f^{lam + eps} times the tabulated integral. Throws
/// NotGenericallyFinite when the total is not positive.
DegreeReport degree_generic(const SegreIntegralTable& table, int m);

/// Dispatches a Veronese computation to the formula named by `method`.
/// general_curve and generic are not Veronese methods and are rejected.
DegreeReport degree_by_method(const VeroneseVariety& v, int m, Method method);

/// prod_{i=1}^{n} prod_{l=1}^{lam_i} (N-m+l-i)/(N-n+l-i). Requires
/// N >= 2n so no denominator vanishes.
BigRat d_lambda(const Partition& lam, int n, int ambient_dim, int m);

BoundsReport bounds(const VeroneseVariety& v, int m);

struct IdentityCheck {
  BigInt lhs;
  BigInt rhs;
  bool equal = false;
};

/// sum_{|lam| = n} (f^lam)^2 prod_{i=1}^{n} (n+i)!/(n+i-lam_i)! against
/// (n+1)^n n!.
IdentityCheck verify_identity(int n);

struct ScanRow {
  int n = 0;
  int d = 0;
  int ambient_dim = 0;
  int m = 0;
  BigInt degree;
  BoundsReport bounds;
};

struct ScanReport {
  std::vector<ScanRow> rows;
  std::vector<ScanRow> violations;  // rows with within_conjecture == false
};

/// Evaluates bounds() over every (n, d, m) with n in [n_lo, n_hi], d in
/// [d_lo, d_hi], n <= m <= N - 1. Rows are ordered by (n, d, m).
ScanReport conjecture_scan(int n_lo, int n_hi, int d_lo, int d_hi);

}  // namespace gaussdeg
