#include "frosl/potential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace frosl {

namespace {
constexpr int kMinGridPoints = 33;
}

double eval_closed_form(const ClosedForm& form, double t) {
  if (const auto* p = std::get_if<PolyForm>(&form)) {
    double v = 0.0;
    for (size_t k = p->coeff.size(); k-- > 0;) v = v * t + p->coeff[k];
    return v;
  }
  const auto& tr = std::get<TrigForm>(form);
  double v = tr.constant;
  for (size_t k = 0; k < tr.cos_coeff.size(); ++k)
    v += tr.cos_coeff[k] * std::cos(double(k + 1) * t);
  for (size_t k = 0; k < tr.sin_coeff.size(); ++k)
    v += tr.sin_coeff[k] * std::sin(double(k + 1) * t);
  return v;
}

Potential::Potential(std::vector<double> samples)
    : samples_(std::move(samples)) {
  validate_and_finish();
}

Potential::Potential(ClosedForm form, int grid_points) : form_(std::move(form)) {
  if (grid_points < kMinGridPoints)
    throw std::invalid_argument("potential: grid needs at least 33 points");
  samples_.resize(static_cast<size_t>(grid_points));
  const double h = M_PI / (grid_points - 1);
  for (int i = 0; i < grid_points; ++i)
    samples_[static_cast<size_t>(i)] = eval_closed_form(*form_, i * h);
  validate_and_finish();
}

Potential Potential::zero(int grid_points) {
  return Potential(PolyForm{{0.0}}, grid_points);
}

void Potential::validate_and_finish() {
  if (static_cast<int>(samples_.size()) < kMinGridPoints)
    throw std::invalid_argument("potential: grid needs at least 33 points");
  max_abs_ = 0.0;
  for (double v : samples_) {
    if (!std::isfinite(v))
      throw std::invalid_argument("potential: samples must be finite");
    max_abs_ = std::max(max_abs_, std::abs(v));
  }
}

double Potential::grid_step() const {
  return M_PI / static_cast<double>(samples_.size() - 1);
}

double Potential::value_at(double t) const {
  if (form_) return eval_closed_form(*form_, t);
  const double h = grid_step();
  if (t <= 0.0) return samples_.front();
  if (t >= M_PI) return samples_.back();
  const double u = t / h;
  auto i = static_cast<size_t>(u);
  if (i >= samples_.size() - 1) i = samples_.size() - 2;
  const double w = u - static_cast<double>(i);
  return samples_[i] * (1.0 - w) + samples_[i + 1] * w;
}

Potential Potential::resampled(int n) const {
  if (form_) return Potential(*form_, n);
  std::vector<double> out(static_cast<size_t>(n));
  const double h = M_PI / (n - 1);
  for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] = value_at(i * h);
  return Potential(std::move(out));
}

double Potential::freq_hint() const {
  if (form_) {
    if (const auto* tr = std::get_if<TrigForm>(&*form_)) {
      size_t k = std::max(tr->cos_coeff.size(), tr->sin_coeff.size());
      return std::max(1.0, static_cast<double>(k));
    }
    return 1.0;
  }
  return 4.0;
}

}  // namespace frosl
