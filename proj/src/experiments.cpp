#include "ctcost/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <thread>

#include "ctcost/counterdiabatic.hpp"
#include "ctcost/errors.hpp"
#include "ctcost/fit.hpp"
#include "ctcost/models/ising.hpp"
#include "ctcost/models/ising_momentum.hpp"
#include "ctcost/models/landau_zener.hpp"
#include "ctcost/models/lmg.hpp"
#include "ctcost/models/oscillator.hpp"
#include "ctcost/work.hpp"

namespace ctcost {
namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// Results land in index order whatever order the workers finish in.
template <typename T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& fn) {
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>({hw, count, 8});
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

class Writer {
 public:
  Writer(const ExperimentConfig& cfg, std::vector<std::string> header) : cfg_(cfg), header_(std::move(header)) {
    std::filesystem::create_directories(cfg.out_dir);
  }

  void csv(const std::string& name, const Table& table) {
    const std::string path = (std::filesystem::path(cfg_.out_dir) / name).string();
    std::ofstream os(path);
    if (!os) throw InvalidInput("cannot write " + path);
    os << "# " << library_version << "\n";
    for (const auto& line : header_) os << "# " << line << "\n";
    for (std::size_t c = 0; c < table.columns.size(); ++c) os << (c ? "," : "") << table.columns[c];
    os << "\n";
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_number(row[c]);
      os << "\n";
    }
    result_.files.push_back(path);
  }

  void put(const std::string& key, double v) { result_.summary.emplace_back(key, format_number(v)); }
  void put(const std::string& key, const std::string& v) { result_.summary.emplace_back(key, v); }

  ExperimentResult finish() {
    const std::string path = (std::filesystem::path(cfg_.out_dir) / (cfg_.experiment + "_summary.txt")).string();
    std::ofstream os(path);
    if (!os) throw InvalidInput("cannot write " + path);
    for (const auto& [k, v] : result_.summary) os << k << "=" << v << "\n";
    result_.files.push_back(path);
    return std::move(result_);
  }

 private:
  const ExperimentConfig& cfg_;
  std::vector<std::string> header_;
  ExperimentResult result_;
};

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + format_number(v[i]);
  return s;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string beta_label(double beta) {
  if (std::isinf(beta)) return "binf";
  return "b" + format_number(beta);
}

IntegratorConfig grid_config(std::size_t steps) {
  IntegratorConfig cfg;
  cfg.steps = steps;
  return cfg;
}

std::size_t argmax(const std::vector<double>& v) {
  return static_cast<std::size_t>(std::max_element(v.begin(), v.end()) - v.begin());
}

// Header lines shared by every CSV of a run.
std::vector<std::string> base_header(const ExperimentConfig& c, std::size_t steps, std::optional<double> duration) {
  std::vector<std::string> h;
  h.push_back("experiment=" + c.experiment);
  h.push_back("steps=" + std::to_string(steps));
  if (duration) h.push_back("duration=" + format_number(*duration));
  h.push_back("hbar=" + format_number(hbar));
  return h;
}

// --- Landau-Zener cost scaling ---

ExperimentResult run_lz_cost_scaling(const ExperimentConfig& c) {
  const std::size_t steps = c.steps.value_or(4000);
  const std::vector<double> durations = c.durations.empty() ? std::vector<double>{1, 2, 4, 8, 16} : c.durations;
  auto header = base_header(c, steps, std::nullopt);
  header.push_back("durations=" + join(durations));
  header.push_back("model=landau-zener delta=1 g=-10->5 cosine ramp nu=1");
  Writer out(c, header);

  const auto costs = parallel_map<std::vector<double>>(durations.size(), [&](std::size_t i) {
    const Schedule s = lz_model(1.0, Ramp::cosine(-10.0, 5.0, 0.0, durations[i]));
    std::vector<double> row{durations[i]};
    for (int n = 1; n <= 3; ++n) row.push_back(cost_transitionless(s, n, 1.0, grid_config(steps)).total);
    return row;
  });
  Table t{{"duration", "Ct_n1", "Ct_n2", "Ct_n3"}, costs};
  out.csv("lz-cost-scaling.csv", t);
  for (int n = 1; n <= 3; ++n) {
    std::vector<double> y;
    for (const auto& r : costs) y.push_back(r[static_cast<std::size_t>(n)]);
    const LinearFit fit = fit_power_law(durations, y);
    const std::string tag = "_n" + std::to_string(n);
    out.put("slope" + tag, fit.slope);
    out.put("expected_slope" + tag, static_cast<double>(1 - n));
    out.put("r2" + tag, fit.r_squared);
  }
  return out.finish();
}

// --- Landau-Zener exigency (instantaneous cost and exigency along one ramp) ---

ExperimentResult run_lz_exigency(const ExperimentConfig& c) {
  const std::size_t steps = c.steps.value_or(4000);
  const double T = c.duration.value_or(1.0);
  auto header = base_header(c, steps, T);
  header.push_back("model=landau-zener delta=1 g=-10->5 cosine ramp; exigency on the adiabatically continued state");
  Writer out(c, header);

  const Schedule s = lz_model(1.0, Ramp::cosine(-10.0, 5.0, 0.0, T));
  const IntegratorConfig cfg = grid_config(steps);
  const CostReport ct = cost_transitionless(s, 1, 1.0, cfg);
  const SpectralDecomposition d0 = eigendecompose(s.hamiltonian_at(0.0));
  auto rho = [&](double pg) {
    const Matrix m = pg * d0.projector(0).matrix() + (1.0 - pg) * d0.projector(1).matrix();
    return QuantumState::density(m);
  };
  const std::vector<double> pgs{1.0, 0.75};
  const auto c0 = parallel_map<CostReport>(2, [&](std::size_t i) {
    return exigency(s, adiabatic_trajectory(s, rho(pgs[i]), cfg));
  });

  Table t{{"tau", "dCt1", "dC0_pg1", "dC0_pg075"}, {}};
  std::vector<double> a, b, e;
  bool below = true;
  for (std::size_t k = 0; k < ct.samples.size(); ++k) {
    const double tau = ct.samples[k].t / T;
    t.rows.push_back({tau, ct.samples[k].value, c0[0].samples[k].value, c0[1].samples[k].value});
    a.push_back(ct.samples[k].value);
    b.push_back(c0[0].samples[k].value);
    e.push_back(c0[1].samples[k].value);
    if (c0[1].samples[k].value > c0[0].samples[k].value + 1e-12) below = false;
  }
  out.csv("lz-exigency.csv", t);
  out.put("Ct1", ct.total);
  out.put("C0_pg1", c0[0].total);
  out.put("C0_pg075", c0[1].total);
  out.put("peak_tau_dCt1", t.rows[argmax(a)][0]);
  out.put("peak_tau_dC0_pg1", t.rows[argmax(b)][0]);
  out.put("peak_tau_dC0_pg075", t.rows[argmax(e)][0]);
  out.put("crossing_tau", std::acos(-1.0 / 3.0) / std::acos(-1.0));
  out.put("pg075_below_pg1", below ? 1.0 : 0.0);
  return out.finish();
}

// --- Ising instantaneous costs ---

ExperimentResult run_ising_cost(const ExperimentConfig& c) {
  const std::size_t steps = c.steps.value_or(4000);
  const double T = c.duration.value_or(1.0);
  const int n = c.norm_exponent.value_or(1);
  const std::vector<int> sizes = c.sizes.empty() ? std::vector<int>{2, 8} : c.sizes;
  const std::vector<double> betas = c.betas.empty() ? std::vector<double>{inf, 10, 5, 2, 1, 0.5, 0} : c.betas;
  auto header = base_header(c, steps, T);
  header.push_back("model=ising J=1 g=0.5->1.5 cosine ramp nu=1 norm_exponent=" + std::to_string(n));
  header.push_back("betas=" + join(betas));
  header.push_back("sizes=" + join(sizes));
  header.push_back("dC0 columns (L<=4) use the adiabatically continued thermal state of the dense chain");
  Writer out(c, header);
  const IntegratorConfig cfg = grid_config(steps);
  const Ramp ramp = Ramp::cosine(0.5, 1.5, 0.0, T);
  const std::string ns = std::to_string(n);

  for (int L : sizes) {
    const MomentumSectorModel model(L, 1.0, ramp);
    const CostReport ct = transitionless_cost_ising(model, n, 1.0, cfg);
    const auto cw = parallel_map<CostReport>(betas.size(), [&](std::size_t i) {
      return selected_cost_ising(model, betas[i], n, 1.0, cfg);
    });
    std::vector<CostReport> c0;
    if (L <= 4) {
      const Schedule s = ising_dense(L, 1.0, ramp);
      c0 = parallel_map<CostReport>(betas.size(), [&](std::size_t i) {
        return exigency(s, adiabatic_trajectory(s, thermal_state(s.hamiltonian_at(0.0), betas[i]), cfg));
      });
    }
    Table t;
    t.columns = {"tau", "dCt" + ns};
    for (double b : betas) t.columns.push_back("dCW" + ns + "_" + beta_label(b));
    for (std::size_t i = 0; i < c0.size(); ++i) t.columns.push_back("dC0_" + beta_label(betas[i]));
    for (std::size_t k = 0; k < ct.samples.size(); ++k) {
      std::vector<double> row{ct.samples[k].t / T, ct.samples[k].value};
      for (const auto& r : cw) row.push_back(r.samples[k].value);
      for (const auto& r : c0) row.push_back(r.samples[k].value);
      t.rows.push_back(std::move(row));
    }
    const std::string tag = "_L" + std::to_string(L);
    out.csv("ising-cost" + tag + ".csv", t);
    out.put("Ct" + ns + tag, ct.total);
    for (std::size_t i = 0; i < betas.size(); ++i) {
      out.put("CW" + ns + tag + "_" + beta_label(betas[i]), cw[i].total);
      out.put("ratio" + tag + "_" + beta_label(betas[i]), cw[i].total / ct.total);
    }
    for (std::size_t i = 0; i < c0.size(); ++i) out.put("C0" + tag + "_" + beta_label(betas[i]), c0[i].total);
  }
  return out.finish();
}

// --- Ising cost ratio versus temperature ---

ExperimentResult run_ising_ratio(const ExperimentConfig& c) {
  const std::size_t steps = c.steps.value_or(4000);
  const double T = c.duration.value_or(1.0);
  const std::vector<int> sizes = c.sizes.empty() ? std::vector<int>{4, 6, 8} : c.sizes;
  const std::vector<double> betas =
      c.betas.empty() ? std::vector<double>{0, 0.1, 0.2, 0.5, 1, 2, 3, 5, 10, 20, 50, inf} : c.betas;
  auto header = base_header(c, steps, T);
  header.push_back("model=ising J=1 g=0.5->1.5 cosine ramp n=1 nu=1");
  header.push_back("betas=" + join(betas));
  header.push_back("sizes=" + join(sizes));
  Writer out(c, header);
  const IntegratorConfig cfg = grid_config(steps);
  const Ramp ramp = Ramp::cosine(0.5, 1.5, 0.0, T);

  // the last column of each row is the zero-temperature ratio
  std::vector<double> all = betas;
  all.push_back(inf);
  std::vector<std::vector<double>> ratios(sizes.size());
  for (std::size_t li = 0; li < sizes.size(); ++li) {
    const MomentumSectorModel model(sizes[li], 1.0, ramp);
    const double ct = transitionless_cost_ising(model, 1, 1.0, cfg).total;
    ratios[li] = parallel_map<double>(all.size(), [&](std::size_t i) {
      return selected_cost_ising(model, all[i], 1, 1.0, cfg).total / ct;
    });
  }
  Table t;
  t.columns = {"beta"};
  for (int L : sizes) t.columns.push_back("ratio_L" + std::to_string(L));
  for (std::size_t i = 0; i < betas.size(); ++i) {
    std::vector<double> row{betas[i]};
    for (const auto& r : ratios) row.push_back(r[i]);
    t.rows.push_back(std::move(row));
  }
  out.csv("ising-ratio.csv", t);
  for (std::size_t li = 0; li < sizes.size(); ++li) {
    const std::string tag = "_L" + std::to_string(sizes[li]);
    for (std::size_t i = 0; i < betas.size(); ++i) out.put("ratio" + tag + "_" + beta_label(betas[i]), ratios[li][i]);
    out.put("ratio" + tag + "_ground", ratios[li].back());
    bool increasing = true;
    for (std::size_t i = 1; i < betas.size(); ++i) {
      if (betas[i] > betas[i - 1] && ratios[li][i] < ratios[li][i - 1] - 1e-12) increasing = false;
    }
    out.put("increasing_in_beta" + tag, increasing ? 1.0 : 0.0);
  }
  return out.finish();
}

// --- Harmonic oscillator exigency ---

ExperimentResult run_ho_exigency(const ExperimentConfig& c) {
  const std::size_t steps = c.steps.value_or(4000);
  const double T = c.duration.value_or(1.0);
  const int n_max = 60;
  auto header = base_header(c, steps, T);
  header.push_back("model=oscillator m=1 omega=1->2 cosine ramp n_max=60; ground state continued adiabatically");
  Writer out(c, header);
  const Ramp omega = Ramp::cosine(1.0, 2.0, 0.0, T);
  const Schedule s = ho_model(1.0, omega, n_max);
  const SpectralDecomposition d0 = eigendecompose(s.hamiltonian_at(0.0));
  const QuantumState ground = QuantumState::pure(d0.group_vectors(0).col(0));
  const CostReport c0 = exigency(s, adiabatic_trajectory(s, ground, grid_config(steps)));
  Table t{{"tau", "dC0", "dC0_analytic"}, {}};
  for (const auto& smp : c0.samples) t.rows.push_back({smp.t / T, smp.value, ho_exigency_rate_analytic(omega, smp.t)});
  out.csv("ho-exigency.csv", t);
  const double exact = ho_exigency_analytic(omega);
  out.put("C0", c0.total);
  out.put("C0_analytic", exact);
  out.put("C0_rel_error", std::abs(c0.total - exact) / exact);
  return out.finish();
}

// --- LMG ground-state exigency ---

ExperimentResult run_lmg_exigency(const ExperimentConfig& c) {
  const std::size_t steps = c.steps.value_or(400);
  const double T = c.duration.value_or(1.0);
  const std::vector<int> sizes = c.sizes.empty() ? std::vector<int>{100, 200, 300, 400} : c.sizes;
  const int hp_size = *std::max_element(sizes.begin(), sizes.end());
  auto header = base_header(c, steps, T);
  header.push_back("model=lmg delta=1 gamma=0 g/delta=0.75->1.25 cosine ramp; ground state of the m=S parity sector");
  header.push_back("sizes=" + join(sizes));
  header.push_back("dC0_hp uses N=" + std::to_string(hp_size) + "; nan marks |g/delta - 1| < 1e-3");
  Writer out(c, header);
  const Ramp ramp = Ramp::cosine(0.75, 1.25, 0.0, T);
  const std::vector<double> grid = time_grid(0.0, T, grid_config(steps));

  const auto curves = parallel_map<std::vector<double>>(sizes.size(), [&](std::size_t i) {
    const LmgModel model = lmg_model(sizes[i], 0.0, 1.0, ramp);
    std::vector<double> v;
    v.reserve(grid.size());
    for (double t : grid) {
      v.push_back(lmg_exigency(model, t, QuantumState::unchecked_pure(lmg_ground_state(model, t))).value);
    }
    return v;
  });

  Table t;
  t.columns = {"tau"};
  for (int N : sizes) t.columns.push_back("dC0_N" + std::to_string(N));
  t.columns.push_back("dC0_hp");
  Table d2;
  d2.columns = {"tau"};
  for (int N : sizes) d2.columns.push_back("d2C0_N" + std::to_string(N));
  const double h = grid[1] - grid[0];
  std::vector<std::vector<double>> second(sizes.size(), std::vector<double>(grid.size()));
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    const auto& v = curves[i];
    for (std::size_t k = 0; k < grid.size(); ++k) {
      if (k == 0) {
        second[i][k] = (v[1] - v[0]) / h;
      } else if (k + 1 == grid.size()) {
        second[i][k] = (v[k] - v[k - 1]) / h;
      } else {
        second[i][k] = (v[k + 1] - v[k - 1]) / (2.0 * h);
      }
    }
  }
  for (std::size_t k = 0; k < grid.size(); ++k) {
    std::vector<double> row{grid[k] / T};
    for (const auto& v : curves) row.push_back(v[k]);
    const HpExigency hp = lmg_hp_exigency(ramp.value(grid[k]), ramp.rate(grid[k]), hp_size);
    row.push_back(hp.near_critical ? std::numeric_limits<double>::quiet_NaN() : hp.value);
    t.rows.push_back(std::move(row));
    std::vector<double> r2{grid[k] / T};
    for (const auto& v : second) r2.push_back(v[k]);
    d2.rows.push_back(std::move(r2));
  }
  out.csv("lmg-exigency.csv", t);
  out.csv("lmg-exigency_d2.csv", d2);

  double previous_distance = inf;
  bool monotone = true;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    // dip = most negative second derivative in the interior
    std::size_t best = 1;
    for (std::size_t k = 1; k + 1 < grid.size(); ++k) {
      if (second[i][k] < second[i][best]) best = k;
    }
    const double g = ramp.value(grid[best]);
    const std::string tag = "_N" + std::to_string(sizes[i]);
    out.put("dip_tau" + tag, grid[best] / T);
    out.put("dip_gtilde" + tag, g);
    out.put("peak_tau" + tag, grid[argmax(curves[i])] / T);
    const double dist = std::abs(g - 1.0);
    if (i > 0 && dist > previous_distance) monotone = false;
    previous_distance = dist;
  }
  out.put("dip_monotone", monotone ? 1.0 : 0.0);
  out.put("hp_size", static_cast<double>(hp_size));
  return out.finish();
}

// --- Landau-Zener friction versus cost ---

double crossover(const std::vector<double>& x, const std::vector<double>& benefit) {
  // last sign change from positive to negative, after which the benefit stays negative
  std::size_t first_negative = x.size();
  for (std::size_t i = x.size(); i-- > 0;) {
    if (benefit[i] < 0.0) {
      first_negative = i;
    } else {
      break;
    }
  }
  if (first_negative == x.size() || first_negative == 0) return std::numeric_limits<double>::quiet_NaN();
  const std::size_t a = first_negative - 1;
  const std::size_t b = first_negative;
  return x[a] + (x[b] - x[a]) * benefit[a] / (benefit[a] - benefit[b]);
}

ExperimentResult run_lz_benefit(const ExperimentConfig& c) {
  const std::size_t per_unit = c.steps.value_or(1000);
  const std::vector<double> durations =
      c.durations.empty() ? std::vector<double>{1, 2, 4, 6, 8, 12, 16, 24, 32, 48, 64} : c.durations;
  auto header = base_header(c, per_unit, std::nullopt);
  header[1] = "steps_per_unit_duration=" + std::to_string(per_unit);
  header.push_back("durations=" + join(durations));
  header.push_back("model=landau-zener delta=1 g=-10->5 cosine ramp; ground state; nu=1");
  header.push_back("benefit_n2 compares quantities with different units; the comparison is set-up dependent");
  Writer out(c, header);

  const auto rows = parallel_map<std::vector<double>>(durations.size(), [&](std::size_t i) {
    const double T = durations[i];
    const Schedule s = lz_model(1.0, Ramp::cosine(-10.0, 5.0, 0.0, T));
    const auto steps = static_cast<std::size_t>(std::max(100.0, std::ceil(static_cast<double>(per_unit) * T)));
    const IntegratorConfig cfg = grid_config(steps);
    const SpectralDecomposition d0 = eigendecompose(s.hamiltonian_at(0.0));
    const QuantumState ground = QuantumState::pure(d0.group_vectors(0).col(0));
    const double friction = inner_friction(s, ground, unitary(s, cfg), cfg);
    const CostReport c1 = cost_transitionless(s, 1, 1.0, cfg);
    const CostReport c2 = cost_transitionless(s, 2, 1.0, cfg);
    return std::vector<double>{T, friction, c1.total, c2.total, driving_benefit(friction, c1).benefit,
                               driving_benefit(friction, c2).benefit};
  });
  Table t{{"duration", "friction", "Ct1", "Ct2", "benefit_n1", "benefit_n2"}, rows};
  out.csv("lz-benefit.csv", t);

  std::vector<double> fx, fy, x, c1, c2, b1, b2;
  for (const auto& r : rows) {
    x.push_back(r[0]);
    c1.push_back(r[2]);
    c2.push_back(r[3]);
    b1.push_back(r[4]);
    b2.push_back(r[5]);
    if (r[1] > 1e-10) {
      fx.push_back(r[0]);
      fy.push_back(r[1]);
    }
  }
  if (fx.size() >= 2) {
    const LinearFit f = fit_exponential(fx, fy);
    out.put("friction_decay_rate", -f.slope);
    out.put("friction_fit_r2", f.r_squared);
  } else {
    out.put("friction_decay_rate", std::numeric_limits<double>::quiet_NaN());
    out.put("friction_fit_r2", std::numeric_limits<double>::quiet_NaN());
  }
  out.put("friction_fit_points", static_cast<double>(fx.size()));
  out.put("Ct1_slope", fit_power_law(x, c1).slope);
  out.put("Ct2_slope", fit_power_law(x, c2).slope);
  out.put("Ct2_r2", fit_power_law(x, c2).r_squared);
  out.put("crossover_duration_n1", crossover(x, b1));
  out.put("crossover_duration_n2", crossover(x, b2));
  out.put("units_differ_n1", 0.0);
  out.put("units_differ_n2", 1.0);
  return out.finish();
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"lz-cost-scaling", "lz-exigency", "ising-cost",  "ising-ratio",
                                              "ho-exigency",     "lmg-exigency", "lz-benefit"};
  return names;
}

void validate(const ExperimentConfig& c) {
  const auto& names = experiment_names();
  if (std::find(names.begin(), names.end(), c.experiment) == names.end()) {
    throw InvalidInput("unknown experiment '" + c.experiment + "'");
  }
  if (c.out_dir.empty()) throw InvalidInput("output directory must not be empty");
  if (c.steps && *c.steps < 100) throw InvalidInput("steps must be at least 100");
  if (c.duration && !(*c.duration > 0.0 && std::isfinite(*c.duration))) {
    throw InvalidInput("duration must be positive and finite");
  }
  for (double b : c.betas) {
    if (std::isnan(b) || b < 0.0) throw InvalidInput("beta values must be >= 0");
  }
  for (double d : c.durations) {
    if (!(d > 0.0 && std::isfinite(d))) throw InvalidInput("durations must be positive and finite");
  }
  if (c.norm_exponent && (*c.norm_exponent < 1 || *c.norm_exponent > 8)) {
    throw InvalidInput("norm exponent must be within [1, 8]");
  }
  const bool ising = c.experiment == "ising-cost" || c.experiment == "ising-ratio";
  for (int s : c.sizes) {
    if (ising && (s < 2 || s > 12 || s % 2 != 0)) throw InvalidInput("Ising sizes must be even and within [2, 12]");
    if (c.experiment == "lmg-exigency" && (s < 2 || s > 2000)) {
      throw InvalidInput("LMG sizes must be within [2, 2000]");
    }
  }
  if (!c.sizes.empty() && !ising && c.experiment != "lmg-exigency") {
    throw InvalidInput("--sizes is not used by " + c.experiment);
  }
  if (!c.betas.empty() && c.experiment != "ising-cost" && c.experiment != "ising-ratio") {
    throw InvalidInput("--beta-list is not used by " + c.experiment);
  }
  if (c.norm_exponent && c.experiment != "ising-cost") {
    throw InvalidInput("--norm-exponent is only used by ising-cost");
  }
  if (!c.durations.empty() && c.experiment != "lz-cost-scaling" && c.experiment != "lz-benefit") {
    throw InvalidInput("durations are only used by lz-cost-scaling and lz-benefit");
  }
  if (c.duration && (c.experiment == "lz-cost-scaling" || c.experiment == "lz-benefit")) {
    throw InvalidInput("--duration is not used by " + c.experiment + "; set durations instead");
  }
}

const std::string& ExperimentResult::value(const std::string& key) const {
  for (const auto& [k, v] : summary) {
    if (k == key) return v;
  }
  throw InvalidInput("summary has no key '" + key + "'");
}

double ExperimentResult::number(const std::string& key) const { return std::stod(value(key)); }

ExperimentResult run(const ExperimentConfig& config) {
  validate(config);
  const std::string& e = config.experiment;
  if (e == "lz-cost-scaling") return run_lz_cost_scaling(config);
  if (e == "lz-exigency") return run_lz_exigency(config);
  if (e == "ising-cost") return run_ising_cost(config);
  if (e == "ising-ratio") return run_ising_ratio(config);
  if (e == "ho-exigency") return run_ho_exigency(config);
  if (e == "lmg-exigency") return run_lmg_exigency(config);
  return run_lz_benefit(config);
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item == "inf" || item == "infinity") {
      out.push_back(inf);
      continue;
    }
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InvalidInput("not a number: '" + item + "'");
    }
    if (used != item.size()) throw InvalidInput("not a number: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidInput("empty list");
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (double v : parse_number_list(text)) {
    if (!std::isfinite(v) || v != std::floor(v) || std::abs(v) > 1e9) {
      throw InvalidInput("not an integer: " + format_number(v));
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

}  // namespace ctcost
