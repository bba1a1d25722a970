#include "fractel/grid.hpp"

#include <functional>
#include <stdexcept>

#include "fractel/psi_map.hpp"

namespace fractel {

Grid::Grid(double length, Eigen::VectorXd nodes)
    : length_(length), nodes_(std::move(nodes)) {
  const Eigen::Index n = nodes_.size();
  if (n < 2) throw std::invalid_argument("grid needs at least 2 nodes");
  if (!(length_ > 0.0)) throw std::invalid_argument("grid length must be positive");
  if (nodes_[0] != 0.0 || nodes_[n - 1] != length_)
    throw std::invalid_argument("grid must span [0, L] exactly");
  for (Eigen::Index i = 0; i + 1 < n; ++i)
    if (!(nodes_[i] < nodes_[i + 1]))
      throw std::invalid_argument("grid nodes must be strictly increasing");

  weights_.resize(n);
  weights_.setZero();
  for (Eigen::Index i = 0; i + 1 < n; ++i) {
    const double h = nodes_[i + 1] - nodes_[i];
    weights_[i] += 0.5 * h;
    weights_[i + 1] += 0.5 * h;
  }
}

GridPtr make_uniform_grid(double length, Eigen::Index n) {
  if (n < 2) throw std::invalid_argument("grid needs at least 2 nodes");
  Eigen::VectorXd nodes(n);
  for (Eigen::Index i = 0; i < n; ++i)
    nodes[i] = length * static_cast<double>(i) / static_cast<double>(n - 1);
  nodes[0] = 0.0;
  nodes[n - 1] = length;
  return std::make_shared<Grid>(length, std::move(nodes));
}

GridPtr make_psi_uniform_grid(double length, Eigen::Index n, const PsiMap& psi) {
  if (n < 2) throw std::invalid_argument("grid needs at least 2 nodes");
  const double y0 = psi.eval(0.0);
  const double y1 = psi.eval(length);
  Eigen::VectorXd nodes(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double y = y0 + (y1 - y0) * static_cast<double>(i) / static_cast<double>(n - 1);
    nodes[i] = psi.inverse(y);
  }
  nodes[0] = 0.0;
  nodes[n - 1] = length;
  return std::make_shared<Grid>(length, std::move(nodes));
}

bool same_grid(const GridPtr& a, const GridPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->size() == b->size() && a->length() == b->length() &&
         a->nodes() == b->nodes();
}

GridFunction::GridFunction(GridPtr g, Eigen::VectorXd v)
    : grid(std::move(g)), values(std::move(v)) {
  if (!grid) throw std::invalid_argument("grid function needs a grid");
  if (values.size() != grid->size())
    throw std::invalid_argument("grid function length mismatch");
  if (!values.allFinite())
    throw std::invalid_argument("grid function has non-finite values");
}

GridFunction make_grid_function(const GridPtr& g,
                                const std::function<double(double)>& f) {
  Eigen::VectorXd v(g->size());
  for (Eigen::Index i = 0; i < g->size(); ++i) v[i] = f(g->node(i));
  return GridFunction(g, std::move(v));
}

GridFunction zero_function(const GridPtr& g) {
  return GridFunction(g, Eigen::VectorXd::Zero(g->size()));
}

double trapezoid(const Grid& grid, const Eigen::VectorXd& values) {
  if (values.size() != grid.size())
    throw std::invalid_argument("trapezoid length mismatch");
  return grid.trapezoid_weights().dot(values);
}

double trapezoid(const GridFunction& f) { return trapezoid(*f.grid, f.values); }

}  // namespace fractel
