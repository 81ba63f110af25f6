#pragma once

#include <string>
#include <vector>

#include "closed_form.hpp"
#include "detection.hpp"

namespace qlidar {

struct GridPoint {
  StateKind kind;
  double alpha2;
  double zeta2;  // 0 means vacuum in port b
  double phi;
  double loss_r;

  std::string describe() const;
};

struct RegressionGrid {
  std::vector<StateKind> kinds;
  std::vector<double> alpha2, zeta2, phi, loss_r;

  // six states x |alpha|^2 {0.5, 2, 8} x |zeta|^2 {0, 2, 25}
  // x phi {0.3, 1.1, 2.7} x loss_r {0, 0.2, 0.5}
  static RegressionGrid standard();
  std::vector<GridPoint> points() const;
};

struct OraclePoint {
  GridPoint point;
  int cutoff = 0;
  double max_dp = 0;  // max_n |P_engine(n) - P_oracle(n)|
  double d_parity = 0;
  double d_z = 0;
  double worst() const;
};

struct ClosedFormPoint {
  GridPoint point;
  double d_parity = 0;
  double d_z = 0;
  double d_parity_derivative = 0;
  double d_z_derivative = 0;
  double worst() const;
};

template <class P>
struct Report {
  std::vector<P> points;
  std::size_t worst_index = 0;
  double worst = 0;
};

SuperposedState state_for(const GridPoint& p);
SuperposedState port_b_for(const GridPoint& p);

OraclePoint oracle_compare(const GridPoint& p);
Report<OraclePoint> oracle_check(const RegressionGrid& grid,
                                 unsigned threads = 1);

ClosedFormPoint closed_form_compare(const GridPoint& p,
                                    closed_form::Variant v);
Report<ClosedFormPoint> closed_form_check(const RegressionGrid& grid,
                                          closed_form::Variant v,
                                          unsigned threads = 1);

}  // namespace qlidar
