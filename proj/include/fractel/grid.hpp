#ifndef FRACTEL_GRID_HPP
#define FRACTEL_GRID_HPP

#include <Eigen/Core>
#include <memory>

namespace fractel {

class PsiMap;

/// One-dimensional grid on [0, L] with strictly increasing nodes.
class Grid {
public:
  Grid(double length, Eigen::VectorXd nodes);

  double length() const { return length_; }
  Eigen::Index size() const { return nodes_.size(); }
  double node(Eigen::Index i) const { return nodes_[i]; }
  const Eigen::VectorXd& nodes() const { return nodes_; }

  /// Composite-trapezoid quadrature weights for the node set.
  const Eigen::VectorXd& trapezoid_weights() const { return weights_; }

private:
  double length_;
  Eigen::VectorXd nodes_;
  Eigen::VectorXd weights_;
};

using GridPtr = std::shared_ptr<const Grid>;

GridPtr make_uniform_grid(double length, Eigen::Index n);

/// Nodes equispaced in psi(x) rather than x. Improves kernel-moment
/// conditioning when psi is strongly nonlinear.
GridPtr make_psi_uniform_grid(double length, Eigen::Index n, const PsiMap& psi);

bool same_grid(const GridPtr& a, const GridPtr& b);

/// Nodal values of a function on a grid.
struct GridFunction {
  GridPtr grid;
  Eigen::VectorXd values;

  GridFunction() = default;
  GridFunction(GridPtr g, Eigen::VectorXd v);

  Eigen::Index size() const { return values.size(); }
  bool all_finite() const { return values.allFinite(); }
};

GridFunction make_grid_function(const GridPtr& g,
                                const std::function<double(double)>& f);
GridFunction zero_function(const GridPtr& g);

/// Composite trapezoid of the nodal values.
double trapezoid(const GridFunction& f);
double trapezoid(const Grid& grid, const Eigen::VectorXd& values);

}  // namespace fractel

#endif
