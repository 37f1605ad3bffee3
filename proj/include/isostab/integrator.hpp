#pragma once

#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace isostab {

struct StepCollapseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Advances x from t0 to t1 with the Runge-Kutta-Fehlberg 7(8) pair under
// absolute and relative tolerance `tol`. `dt` carries the step size between
// calls. Rejected steps below 1e-12 of the interval length throw.
template <class State, class System>
long integrate_controlled(const System& sys, State& x, double t0, double t1, double tol, double& dt) {
  namespace odeint = boost::numeric::odeint;
  auto stepper = odeint::make_controlled<odeint::runge_kutta_fehlberg78<State>>(tol, tol);
  const double span = t1 - t0;
  const double minStep = 1e-12 * std::max(std::abs(span), 1.0);
  double t = t0;
  long steps = 0;
  if (!(dt > 0.0)) dt = 0.05;
  double lastFull = dt;
  while (t < t1) {
    const bool clipped = t + dt > t1;
    if (clipped) dt = t1 - t;
    const double tried = dt;
    if (stepper.try_step(sys, x, t, dt) == odeint::success) {
      ++steps;
      if (!clipped) lastFull = dt;
      if (t1 - t < 1e-14 * std::max(std::abs(t1), 1.0)) t = t1;
    } else if (tried < minStep) {
      std::ostringstream os;
      os << "step size collapsed to " << tried << " at t = " << t;
      throw StepCollapseError(os.str());
    }
    if (steps > 50'000'000) throw StepCollapseError("step budget exhausted");
  }
  dt = std::max(dt, lastFull);
  return steps;
}

}  // namespace isostab
