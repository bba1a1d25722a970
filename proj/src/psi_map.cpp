#include "fractel/psi_map.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fractel/grid.hpp"

namespace fractel {

double PsiMap::eval(double x) const {
  switch (kind_) {
    case PsiKind::identity: return x;
    case PsiKind::power: return std::pow(1.0 + x, param_);
    case PsiKind::logarithmic: return std::log1p(x);
    case PsiKind::exponential: return std::exp(param_ * x);
  }
  return x;
}

double PsiMap::deriv(double x) const {
  switch (kind_) {
    case PsiKind::identity: return 1.0;
    case PsiKind::power: return param_ * std::pow(1.0 + x, param_ - 1.0);
    case PsiKind::logarithmic: return 1.0 / (1.0 + x);
    case PsiKind::exponential: return param_ * std::exp(param_ * x);
  }
  return 1.0;
}

double PsiMap::inverse(double y) const {
  switch (kind_) {
    case PsiKind::identity: return y;
    case PsiKind::power: return std::pow(y, 1.0 / param_) - 1.0;
    case PsiKind::logarithmic: return std::expm1(y);
    case PsiKind::exponential: return std::log(y) / param_;
  }
  return y;
}

std::string PsiMap::describe() const {
  switch (kind_) {
    case PsiKind::identity: return "identity";
    case PsiKind::power: return "power(" + std::to_string(param_) + ")";
    case PsiKind::logarithmic: return "logarithmic";
    case PsiKind::exponential: return "exponential(" + std::to_string(param_) + ")";
  }
  return "identity";
}

PsiMap make_psi_map(PsiKind kind, const std::vector<double>& params) {
  switch (kind) {
    case PsiKind::identity:
    case PsiKind::logarithmic:
      if (!params.empty())
        throw std::invalid_argument("psi map takes no parameters for this kind");
      return PsiMap(kind, 0.0);
    case PsiKind::power: {
      if (params.size() != 1)
        throw std::invalid_argument("power psi map needs exactly one parameter");
      if (!(params[0] > 0.0))
        throw std::invalid_argument("power psi map needs gamma > 0 for monotonicity");
      return PsiMap(kind, params[0]);
    }
    case PsiKind::exponential: {
      if (params.size() != 1)
        throw std::invalid_argument("exponential psi map needs exactly one parameter");
      if (!(params[0] > 0.0))
        throw std::invalid_argument("exponential psi map needs lambda > 0 for monotonicity");
      return PsiMap(kind, params[0]);
    }
  }
  throw std::invalid_argument("unknown psi kind");
}

PsiKind psi_kind_from_string(const std::string& name) {
  if (name == "identity") return PsiKind::identity;
  if (name == "power") return PsiKind::power;
  if (name == "logarithmic") return PsiKind::logarithmic;
  if (name == "exponential") return PsiKind::exponential;
  throw std::invalid_argument("unknown psi kind: " + name);
}

std::string to_string(PsiKind kind) {
  switch (kind) {
    case PsiKind::identity: return "identity";
    case PsiKind::power: return "power";
    case PsiKind::logarithmic: return "logarithmic";
    case PsiKind::exponential: return "exponential";
  }
  return "identity";
}

void validate_psi_on_grid(const PsiMap& psi, const Grid& grid) {
  const Eigen::Index n = grid.size();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(psi.deriv(grid.node(i)) > 0.0))
      throw std::invalid_argument("psi' must be positive on the grid");
  }
  // eval/deriv consistency at interior nodes; the step balances truncation
  // against roundoff so the 1e-6 relative tolerance is decisive.
  for (Eigen::Index i = 1; i + 1 < n; ++i) {
    const double x = grid.node(i);
    const double h = 6e-6 * std::max(1.0, std::abs(x));
    const double fd = (psi.eval(x + h) - psi.eval(x - h)) / (2.0 * h);
    const double d = psi.deriv(x);
    if (std::abs(fd - d) > 1e-6 * std::abs(d))
      throw std::invalid_argument("psi eval/deriv are inconsistent on the grid");
  }
}

}  // namespace fractel
