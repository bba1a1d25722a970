#ifndef FRACTEL_FRAC_OPS_HPP
#define FRACTEL_FRAC_OPS_HPP

#include <Eigen/Core>
#include <memory>

#include "fractel/grid.hpp"
#include "fractel/psi_map.hpp"

namespace fractel {

enum class OperatorSide { left, right };

enum class OperatorKind { integral, hilfer };

/// Fractional order alpha in (0,1) and type beta in [0,1].
struct FracOrder {
  double alpha = 0.5;
  double beta = 1.0;
};

FracOrder make_frac_order(double alpha, double beta);

/// Dense realization of a psi-Riemann-Liouville integral or psi-Hilfer
/// derivative on a grid. Left integral matrices are lower triangular,
/// right ones upper triangular.
struct OperatorMatrix {
  Eigen::MatrixXd m;
  OperatorSide side = OperatorSide::left;
  OperatorKind kind = OperatorKind::integral;
  double alpha = 0.0;
  double beta = 0.0;
  GridPtr grid;

  Eigen::VectorXd apply(const Eigen::VectorXd& u) const { return m * u; }
};

/// Product-quadrature assembly of I^{alpha;psi}: the kernel
/// psi'(s)(psi(x)-psi(s))^{alpha-1}/Gamma(alpha) is integrated exactly in
/// the variable y = psi(s) against the piecewise-linear interpolant of u.
/// Requires 0 < alpha <= 1 and at least 3 nodes. An order-0 integral is
/// the identity and is handled by the Hilfer assembly, not here.
OperatorMatrix assemble_integral_matrix(OperatorSide side, double alpha,
                                        const PsiMap& psi, const Grid& grid);

/// Differentiation matrix for (1/psi') d/dx: three-point stencils,
/// second order on nonuniform grids, one-sided at the endpoints.
Eigen::MatrixXd scaled_diff_matrix(const PsiMap& psi, const Grid& grid);

/// Hilfer composition I^{beta(1-alpha)} o (+-(1/psi')d/dx) o I^{(1-beta)(1-alpha)},
/// with sign -1 for the right-sided operator. Requires at least 5 nodes.
OperatorMatrix assemble_hilfer_matrix(OperatorSide side, const FracOrder& order,
                                      const PsiMap& psi, const Grid& grid);

/// Cached application of the fractional integral. Matrices are cached by
/// (side, kind, orders, psi, grid) and shared; cached values are immutable.
GridFunction frac_integral(OperatorSide side, const GridFunction& u,
                           double alpha, const PsiMap& psi);

/// Cached application of the Hilfer derivative.
GridFunction hilfer_derivative(OperatorSide side, const GridFunction& u,
                               const FracOrder& order, const PsiMap& psi);

/// Cached matrix lookup (assembles on miss).
std::shared_ptr<const OperatorMatrix> cached_integral_matrix(
    OperatorSide side, double alpha, const PsiMap& psi, const GridPtr& grid);
std::shared_ptr<const OperatorMatrix> cached_hilfer_matrix(
    OperatorSide side, const FracOrder& order, const PsiMap& psi,
    const GridPtr& grid);

void clear_operator_cache();

/// |int (D_{0+} phi) chi dx - int phi psi' D_T(chi/psi') dx| by composite
/// trapezoid. phi must vanish at both endpoints (tolerance 1e-12). This is
/// a residual that converges to zero under grid refinement, not an exact
/// identity at finite N.
double integration_by_parts_residual(const GridFunction& phi,
                                     const GridFunction& chi,
                                     const FracOrder& order, const PsiMap& psi);

}  // namespace fractel

#endif
