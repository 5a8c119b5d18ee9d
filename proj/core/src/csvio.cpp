#include "wigner/csvio.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace wigner::csv {

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  return f;
}

std::vector<double> split_doubles(const std::string& line) {
  std::vector<double> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(std::stod(cell));
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_state(const std::string& path, const WignerState& s) {
  std::ofstream f = open_out(path);
  const PhaseGrid& g = s.grid;
  f << "# wignerdeco-state,1\n";
  f << "# n_x,n_p,x_min,x_max,p_min,p_max,hbar,time\n";
  f << g.n_x() << ',' << g.n_p() << ',' << format_double(g.x_min()) << ','
    << format_double(g.x_max()) << ',' << format_double(g.p_min()) << ','
    << format_double(g.p_max()) << ',' << format_double(g.hbar()) << ','
    << format_double(s.time) << '\n';
  for (int i = 0; i < g.n_x(); ++i) {
    for (int j = 0; j < g.n_p(); ++j) {
      if (j) f << ',';
      f << format_double(s.at(i, j));
    }
    f << '\n';
  }
}

WignerState read_state(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open state dump: " + path);
  std::string line;
  if (!std::getline(f, line) || line.rfind("# wignerdeco-state", 0) != 0) {
    throw std::runtime_error("not a wignerdeco state dump: " + path);
  }
  std::getline(f, line);  // column comment
  if (!std::getline(f, line)) throw std::runtime_error("truncated state dump: " + path);
  const std::vector<double> h = split_doubles(line);
  if (h.size() != 8) throw std::runtime_error("malformed state header: " + path);
  PhaseGrid grid(h[2], h[3], static_cast<int>(h[0]), h[4], h[5], static_cast<int>(h[1]), h[6]);
  WignerState s(grid);
  s.time = h[7];
  for (int i = 0; i < grid.n_x(); ++i) {
    if (!std::getline(f, line)) throw std::runtime_error("truncated state dump: " + path);
    const std::vector<double> row = split_doubles(line);
    if (static_cast<int>(row.size()) != grid.n_p()) {
      throw std::runtime_error("malformed state row in " + path);
    }
    for (int j = 0; j < grid.n_p(); ++j) s.at(i, j) = row[j];
  }
  return s;
}

void write_moments(const std::string& path, const MomentFields& m) {
  std::ofstream f = open_out(path);
  f << "# time=" << format_double(m.time) << ",m=" << format_double(m.mass_m) << '\n';
  f << "x,N,J,E,flux_E\n";
  for (std::size_t i = 0; i < m.x.size(); ++i) {
    f << format_double(m.x[i]) << ',' << format_double(m.N[i]) << ',' << format_double(m.J[i])
      << ',' << format_double(m.E[i]) << ',' << format_double(m.flux_E[i]) << '\n';
  }
}

void write_kernel(const std::string& lambda_path, const std::string& gamma_path,
                  const DecoherenceKernel& k) {
  {
    std::ofstream f = open_out(lambda_path);
    f << "xi,re_lambda,im_lambda\n";
    for (int l = 0; l < k.xi_grid().n; ++l) {
      f << format_double(k.xi_grid().xi(l)) << ',' << format_double(k.lambda()[l].real()) << ','
        << format_double(k.lambda()[l].imag()) << '\n';
    }
  }
  std::ofstream f = open_out(gamma_path);
  f << "p,re_gamma,im_gamma\n";
  for (int j = 0; j < k.xi_grid().n; ++j) {
    f << format_double(k.conjugate_p(j)) << ',' << format_double(k.gamma()[j].real()) << ','
      << format_double(k.gamma()[j].imag()) << '\n';
  }
}

void write_trajectory(const std::string& path, const Trajectory& traj, double hbar) {
  std::ofstream f = open_out(path);
  f << "t,A,B,C,D,exp_minus_D,coherence_length\n";
  for (const TrajectoryPoint& p : traj) {
    const double coh = p.A > 0.0 ? hbar * std::sqrt(2.0 * p.A)
                                 : std::numeric_limits<double>::quiet_NaN();
    f << format_double(p.t) << ',' << format_double(p.A) << ',' << format_double(p.B) << ','
      << format_double(p.C) << ',' << format_double(p.D) << ','
      << format_double(p.exp_minus_D()) << ',' << format_double(coh) << '\n';
  }
}

void write_residual_report(const std::string& path,
                           const std::vector<BalanceResidual>& series) {
  std::ofstream f = open_out(path);
  f << "time,l2_N,max_N,l2_J,max_J,l2_E,max_E,dt_used,dx_used\n";
  for (const BalanceResidual& r : series) {
    f << format_double(r.time) << ',' << format_double(r.l2_N) << ',' << format_double(r.max_N)
      << ',' << format_double(r.l2_J) << ',' << format_double(r.max_J) << ','
      << format_double(r.l2_E) << ',' << format_double(r.max_E) << ','
      << format_double(r.dt_used) << ',' << format_double(r.dx_used) << '\n';
  }
}

}  // namespace wigner::csv
