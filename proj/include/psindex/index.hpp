#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "psindex/radul.hpp"
#include "psindex/symbol.hpp"

namespace psindex {

/// Winding number of a nonvanishing periodic function, computed two ways on
/// the same grid: quadrature of f'/f and summed phase increments.
struct Winding {
  int value = 0;
  double quadrature = 0.0;
  double unwrapped = 0.0;
  int grid = 0;
};

/// Grid starts at 8 (bandwidth + 1) points and doubles while the two
/// estimates disagree or are not within 1e-6 of an integer. Throws
/// NotElliptic when f comes within the inversion floor of zero and
/// NonIntegerWinding when no grid up to 2^16 points settles.
Winding winding_number(const CoeffFn& f, const NumericPolicy& policy = {});

struct Topological {
  int index = 0;
  Winding plus;
  Winding minus;
};

/// w_- - w_+ for the windings of det of the two leading branches.
Topological topological_index_detail(const ClassicalSymbol& Q,
                                     const NumericPolicy& policy = {});
int topological_index(const ClassicalSymbol& Q,
                      const NumericPolicy& policy = {});

struct Analytic {
  cplx pairing;  // c(P, Q) as produced by the cocycle
  cplx index;    // -c(P, Q): orientation matching the Fredholm index
  double parametrix_residual = 0.0;
};

/// Radul pairing of Q with its parametrix P, over the full depth of Q.
/// Throws NotElliptic, DepthExhausted.
Analytic analytic_index_detail(const ClassicalSymbol& Q, const LogQ& L,
                               const NumericPolicy& policy = {});
cplx analytic_index(const ClassicalSymbol& Q, const LogQ& L,
                    const NumericPolicy& policy = {});

struct IndexOptions {
  bool analytic = true;
  bool topological = true;
  bool oracle = true;
  std::optional<ClassicalSymbol> general_q;  // also run the general q mode
  std::vector<int> modes{8, 12, 16, 20};
  double oracle_tol = 1e-8;
  NumericPolicy numeric;
};

struct IndexReport {
  std::optional<cplx> analytic;           // oriented value, -c(P,Q)
  std::optional<cplx> pairing;            // raw c(P,Q), canonical q
  std::optional<cplx> analytic_general;   // oriented value, general q
  std::optional<long> analytic_rounded;
  std::optional<int> topological;
  std::optional<int> oracle;
  bool oracle_exact = false;
  std::map<std::string, double> residuals;
  std::map<std::string, std::string> errors;  // method -> "Kind: message"
  bool agree = false;
};

/// Runs the requested methods; failures are recorded per method and force
/// agree = false rather than aborting the report.
IndexReport index_report(const ClassicalSymbol& Q, const IndexOptions& options);

}  // namespace psindex
