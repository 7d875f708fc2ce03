#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace frosl {

// Closed-form generators.  They exist only to regenerate samples at
// arbitrary resolution; the uniform-grid samples are the representation
// everything else consumes.
struct PolyForm {
  std::vector<double> coeff;  // coeff[k] * t^k
};
struct TrigForm {
  double constant = 0.0;
  std::vector<double> cos_coeff;  // cos_coeff[k-1] * cos(k t), k >= 1
  std::vector<double> sin_coeff;  // sin_coeff[k-1] * sin(k t), k >= 1
};
using ClosedForm = std::variant<PolyForm, TrigForm>;

// Potential q on [0, pi]: uniform-grid samples including both endpoints,
// optionally backed by a closed form.
class Potential {
 public:
  // Samples on the uniform grid t_i = i*pi/(n-1); n >= 33.
  explicit Potential(std::vector<double> samples);
  Potential(ClosedForm form, int grid_points);

  static Potential zero(int grid_points = 513);

  const std::vector<double>& samples() const { return samples_; }
  int grid_points() const { return static_cast<int>(samples_.size()); }
  double grid_step() const;
  const std::optional<ClosedForm>& closed_form() const { return form_; }

  // Point evaluation: exact for closed forms, linear interpolation of the
  // stored samples otherwise.
  double value_at(double t) const;

  // New uniform grid of n points over [0, pi]; exact when a closed form
  // is available.
  Potential resampled(int n) const;

  double max_abs() const { return max_abs_; }

  // Crude oscillation-frequency bound used by the quadrature refinement
  // rule: highest trig mode for trig forms, small constant otherwise.
  double freq_hint() const;

 private:
  void validate_and_finish();

  std::vector<double> samples_;
  std::optional<ClosedForm> form_;
  double max_abs_ = 0.0;
};

double eval_closed_form(const ClosedForm& form, double t);

}  // namespace frosl
