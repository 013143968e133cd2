#include "psindex/index.hpp"

#include <cmath>
#include <numbers>

#include "psindex/error.hpp"
#include "psindex/oracle.hpp"

namespace psindex {

namespace {

constexpr double kIntegerTol = 1e-6;
constexpr int kMaxWindingGrid = 1 << 16;

void require_order_zero(const ClassicalSymbol& Q) {
  if (degree_offset(0.0, Q.order()) != 0)
    throw Error(ErrorKind::InvalidArgument, "index needs an order-0 symbol");
}

std::string describe(const Error& e) {
  return std::string(to_string(e.kind())) + ": " + e.what();
}

}  // namespace

Winding winding_number(const CoeffFn& f, const NumericPolicy& policy) {
  const CoeffFn df = dx(f);
  for (int n = 8 * (f.bandwidth() + 1); n <= kMaxWindingGrid; n *= 2) {
    const auto v = sample(f, n);
    const auto dv = sample(df, n);
    double min_abs = std::abs(v[0]);
    cplx quad = 0.0;
    double phase = 0.0;
    for (int j = 0; j < n; ++j) {
      min_abs = std::min(min_abs, std::abs(v[j]));
      if (min_abs <= policy.inversion_floor)
        throw Error(ErrorKind::NotElliptic,
                    "determinant of the leading symbol vanishes on the grid");
      quad += dv[j] / v[j];
      phase += std::arg(v[(j + 1) % n] / v[j]);
    }
    Winding w;
    w.grid = n;
    w.quadrature = (quad / static_cast<double>(n) / cplx(0.0, 1.0)).real();
    w.unwrapped = phase / (2.0 * std::numbers::pi);
    w.value = static_cast<int>(std::lround(w.quadrature));
    if (std::abs(w.quadrature - w.value) <= kIntegerTol &&
        std::abs(w.unwrapped - w.value) <= kIntegerTol)
      return w;
  }
  throw Error(ErrorKind::NonIntegerWinding,
              "winding number did not settle on an integer");
}

Topological topological_index_detail(const ClassicalSymbol& Q,
                                     const NumericPolicy& policy) {
  const auto [gp, gm] = leading(Q);
  Topological t;
  t.plus = winding_number(determinant(gp), policy);
  t.minus = winding_number(determinant(gm), policy);
  t.index = t.minus.value - t.plus.value;
  return t;
}

int topological_index(const ClassicalSymbol& Q, const NumericPolicy& policy) {
  return topological_index_detail(Q, policy).index;
}

Analytic analytic_index_detail(const ClassicalSymbol& Q, const LogQ& L,
                               const NumericPolicy& policy) {
  require_order_zero(Q);
  const Parametrix P = parametrix_with_residual(Q, Q.depth(), policy);
  Analytic a;
  a.pairing = radul(L, P.value, Q);
  a.index = -a.pairing;
  a.parametrix_residual = std::max(P.left_residual, P.right_residual);
  return a;
}

cplx analytic_index(const ClassicalSymbol& Q, const LogQ& L,
                    const NumericPolicy& policy) {
  return analytic_index_detail(Q, L, policy).index;
}

IndexReport index_report(const ClassicalSymbol& Q, const IndexOptions& options) {
  IndexReport r;
  std::vector<long> values;
  bool ok = true;

  if (options.analytic) {
    try {
      const Analytic a =
          analytic_index_detail(Q, LogQ::canonical(Q.depth()), options.numeric);
      r.analytic = a.index;
      r.pairing = a.pairing;
      r.analytic_rounded = std::lround(a.index.real());
      r.residuals["parametrix"] = a.parametrix_residual;
      r.residuals["analytic_integrality"] =
          std::abs(a.index - cplx(static_cast<double>(*r.analytic_rounded)));
      values.push_back(*r.analytic_rounded);
      if (r.residuals["analytic_integrality"] > kIntegerTol) ok = false;
    } catch (const Error& e) {
      r.errors["analytic"] = describe(e);
    }
    if (options.general_q) {
      try {
        const LogQ L = LogQ::general(*options.general_q, Q.depth(), options.numeric);
        const cplx g = analytic_index_detail(Q, L, options.numeric).index;
        r.analytic_general = g;
        const long rounded = std::lround(g.real());
        r.residuals["general_integrality"] =
            std::abs(g - cplx(static_cast<double>(rounded)));
        if (r.analytic)
          r.residuals["mode_difference"] = std::abs(g - *r.analytic);
        values.push_back(rounded);
        if (r.residuals["general_integrality"] > kIntegerTol) ok = false;
      } catch (const Error& e) {
        r.errors["analytic_general"] = describe(e);
      }
    }
  }

  if (options.topological) {
    try {
      const Topological t = topological_index_detail(Q, options.numeric);
      r.topological = t.index;
      r.residuals["winding"] =
          std::max({std::abs(t.plus.quadrature - t.plus.value),
                    std::abs(t.minus.quadrature - t.minus.value),
                    std::abs(t.plus.unwrapped - t.plus.value),
                    std::abs(t.minus.unwrapped - t.minus.value)});
      values.push_back(t.index);
    } catch (const Error& e) {
      r.errors["topological"] = describe(e);
    }
  }

  if (options.oracle) {
    try {
      const OracleResult o = run_oracle(Q, options.modes, options.oracle_tol);
      r.oracle = o.index;
      r.oracle_exact = o.exact;
      values.push_back(o.index);
    } catch (const Error& e) {
      r.errors["oracle"] = describe(e);
    }
  }

  r.agree = ok && r.errors.empty() && !values.empty();
  for (const long v : values)
    if (v != values.front()) r.agree = false;
  return r;
}

}  // namespace psindex
