#include "dissension/sweep.hpp"

#include <cstdio>
#include <ostream>

#include "dissension/errors.hpp"
#include "dissension/parallel.hpp"

namespace dissension {

namespace {

std::vector<DensityMatrix> row_states(const SweepRequest& request) {
  std::vector<DensityMatrix> states;
  if (!request.a_axis) {
    states.push_back(make_state(request.state));
    return states;
  }
  if (!request.state.has_mixing_weight()) {
    throw InvalidParam("state family " + to_string(request.state.family) + " has no mixing weight to sweep");
  }
  for (double a : *request.a_axis) {
    StateSpec spec = request.state;
    spec.a = a;
    states.push_back(make_state(spec));
  }
  return states;
}

template <class Tabulator>
SweepGrid sweep_with(const SweepRequest& request, Tabulator&& tabulator) {
  if (request.t_axis.empty()) throw InvalidParam("sweep needs a nonempty t axis");
  const std::vector<DensityMatrix> states = row_states(request);
  const std::size_t nt = request.t_axis.size();

  SweepGrid grid;
  grid.t_axis = request.t_axis;
  grid.a_axis = request.a_axis;
  grid.measure = request.measure;
  grid.labeling = request.labeling;
  grid.state = request.a_axis ? to_string(request.state.family) : request.state.descriptor();
  grid.values = tabulator(states.size() * nt, [&](std::size_t cell) {
    return evaluate_measure(request.measure, states[cell / nt], request.labeling, request.t_axis[cell % nt]);
  });
  return grid;
}

}  // namespace

std::vector<double> linspace(double lo, double hi, int steps) {
  if (steps < 2) throw InvalidParam("an axis needs at least 2 steps");
  std::vector<double> out(static_cast<std::size_t>(steps));
  const double h = (hi - lo) / (steps - 1);
  for (int i = 0; i < steps; ++i) out[i] = lo + h * i;
  out.back() = hi;
  return out;
}

SweepGrid run_sweep(const SweepRequest& request, int workers) {
  return sweep_with(request, [workers](std::size_t n, auto&& f) { return tabulate(n, f, workers); });
}

SweepGrid run_sweep_serial(const SweepRequest& request) {
  return sweep_with(request, [](std::size_t n, auto&& f) { return tabulate_serial(n, f); });
}

std::string format_csv_number(double v) {
  if (v == 0.0) v = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_csv(const SweepGrid& grid, std::ostream& out) {
  out << "t,a,value\n";
  for (std::size_t r = 0; r < grid.rows(); ++r) {
    const std::string a = grid.a_axis ? format_csv_number((*grid.a_axis)[r]) : std::string();
    for (std::size_t i = 0; i < grid.t_axis.size(); ++i) {
      out << format_csv_number(grid.t_axis[i]) << ',' << a << ',' << format_csv_number(grid.at(r, i)) << '\n';
    }
  }
}

}  // namespace dissension
