#include "ctcost/models/ramp.hpp"

#include <cmath>
#include <numbers>

#include "ctcost/errors.hpp"

namespace ctcost {

Ramp::Ramp(Kind kind, double a, double b, double t0, double t1) : kind_(kind), a_(a), b_(b), t0_(t0), t1_(t1) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw InvalidInput("Ramp: non-finite end values");
  if (!std::isfinite(t0) || !std::isfinite(t1) || !(t0 < t1)) throw InvalidInput("Ramp: require t0 < t1");
}

Ramp Ramp::cosine(double start, double end, double t0, double t1) { return Ramp(Kind::cosine, start, end, t0, t1); }
Ramp Ramp::linear(double start, double end, double t0, double t1) { return Ramp(Kind::linear, start, end, t0, t1); }
Ramp Ramp::constant(double value, double t0, double t1) { return Ramp(Kind::constant, value, value, t0, t1); }

Ramp Ramp::rescaled(double t0, double t1) const { return Ramp(kind_, a_, b_, t0, t1); }

double Ramp::value(double t) const {
  const double s = (t - t0_) / duration();
  switch (kind_) {
    case Kind::cosine:
      return a_ + (b_ - a_) * 0.5 * (1.0 - std::cos(std::numbers::pi * s));
    case Kind::linear:
      return a_ + (b_ - a_) * s;
    case Kind::constant:
      break;
  }
  return a_;
}

double Ramp::rate(double t) const {
  const double s = (t - t0_) / duration();
  switch (kind_) {
    case Kind::cosine:
      return (b_ - a_) * 0.5 * std::numbers::pi / duration() * std::sin(std::numbers::pi * s);
    case Kind::linear:
      return (b_ - a_) / duration();
    case Kind::constant:
      break;
  }
  return 0.0;
}

double Ramp::acceleration(double t) const {
  if (kind_ != Kind::cosine) return 0.0;
  const double s = (t - t0_) / duration();
  const double w = std::numbers::pi / duration();
  return (b_ - a_) * 0.5 * w * w * std::cos(std::numbers::pi * s);
}

}  // namespace ctcost
