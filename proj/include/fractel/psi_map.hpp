#ifndef FRACTEL_PSI_MAP_HPP
#define FRACTEL_PSI_MAP_HPP

#include <string>

namespace fractel {

class Grid;

enum class PsiKind { identity, power, logarithmic, exponential };

/// Reparameterization psi: increasing, continuously differentiable,
/// psi' > 0 on the working domain.
///
/// identity     psi(x) = x
/// power        psi(x) = (1+x)^gamma, gamma > 0   (shifted so psi'(0) > 0)
/// logarithmic  psi(x) = log(1+x)
/// exponential  psi(x) = exp(lambda*x), lambda > 0
class PsiMap {
public:
  PsiMap() : kind_(PsiKind::identity), param_(0.0) {}

  PsiKind kind() const { return kind_; }
  double param() const { return param_; }

  double eval(double x) const;
  double deriv(double x) const;
  double inverse(double y) const;

  bool operator==(const PsiMap& other) const {
    return kind_ == other.kind_ && param_ == other.param_;
  }

  std::string describe() const;

  friend PsiMap make_psi_map(PsiKind kind, const std::vector<double>& params);

private:
  PsiMap(PsiKind k, double p) : kind_(k), param_(p) {}

  PsiKind kind_;
  double param_;
};

/// Throws std::invalid_argument on parameters that break monotonicity
/// (power needs gamma > 0, exponential needs lambda > 0).
PsiMap make_psi_map(PsiKind kind, const std::vector<double>& params = {});

PsiKind psi_kind_from_string(const std::string& name);
std::string to_string(PsiKind kind);

/// Checks psi' > 0 at every node and that a central finite difference of
/// eval matches deriv to 1e-6 relative at interior nodes.
void validate_psi_on_grid(const PsiMap& psi, const Grid& grid);

}  // namespace fractel

#endif
