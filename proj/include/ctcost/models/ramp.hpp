#pragma once

namespace ctcost {

/// Control parameter protocol on [t0, t1].
/// cosine: a + (b - a)(1 - cos(pi s)) / 2 with s = (t - t0)/(t1 - t0); zero rate at both ends.
/// linear: a + (b - a) s. constant: a.
/// The formulas are evaluated as written outside [t0, t1] as well.
class Ramp {
 public:
  enum class Kind { cosine, linear, constant };

  static Ramp cosine(double start, double end, double t0, double t1);
  static Ramp linear(double start, double end, double t0, double t1);
  static Ramp constant(double value, double t0, double t1);

  Kind kind() const noexcept { return kind_; }
  double start_value() const noexcept { return a_; }
  double end_value() const noexcept { return b_; }
  double t0() const noexcept { return t0_; }
  double t1() const noexcept { return t1_; }
  double duration() const noexcept { return t1_ - t0_; }

  double value(double t) const;
  double rate(double t) const;
  double acceleration(double t) const;

  /// Same shape over a new interval.
  Ramp rescaled(double t0, double t1) const;

 private:
  Ramp(Kind kind, double a, double b, double t0, double t1);

  Kind kind_;
  double a_;
  double b_;
  double t0_;
  double t1_;
};

}  // namespace ctcost
