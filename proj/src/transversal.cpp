#include "piercing/transversal.hpp"

#include <algorithm>

#include "piercing/error.hpp"

namespace piercing {

namespace {

// Height of the generator g of pierced set s: z_gs for axis X (g = i,
// s = j), z_sg for axis Y (s = i, g = j).
const Rat& height(const GridInstance& inst, Axis axis, std::size_t g, std::size_t s) {
  return axis == Axis::X ? inst.z(g, s) : inst.z(s, g);
}

std::size_t beta_index(const PrimalLayout& layout, Axis axis, std::size_t g, std::size_t s) {
  return axis == Axis::X ? layout.beta(g, s) : layout.beta(s, g);
}

Rat sum(const RatVec& v) {
  Rat acc = 0;
  for (const Rat& q : v) acc += q;
  return acc;
}

bool all_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& q) { return q == 0; });
}

}  // namespace

LinearSystem build_primal(const GridInstance& inst, Axis axis) {
  const PrimalLayout layout{inst.n(), inst.m()};
  const RatVec& planes = inst.plane_values(axis);
  const RatVec& ords = inst.ordinates(axis);
  const std::size_t sets = ords.size();
  const std::size_t gens = planes.size();

  LinearSystem sys;
  sys.num_vars = layout.num_vars();
  for (std::size_t s = 0; s < sets; ++s) {
    RatVec row = zeros(sys.num_vars);
    for (std::size_t g = 0; g < gens; ++g) row[beta_index(layout, axis, g, s)] = planes[g];
    row[layout.plane()] = -1;
    sys.add_eq(std::move(row), 0);
  }
  for (std::size_t s = 0; s < sets; ++s) {
    RatVec row = zeros(sys.num_vars);
    for (std::size_t g = 0; g < gens; ++g) row[beta_index(layout, axis, g, s)] = height(inst, axis, g, s);
    row[layout.slope()] = -ords[s];
    row[layout.intercept()] = -1;
    sys.add_eq(std::move(row), 0);
  }
  for (std::size_t s = 0; s < sets; ++s) {
    RatVec row = zeros(sys.num_vars);
    for (std::size_t g = 0; g < gens; ++g) row[beta_index(layout, axis, g, s)] = 1;
    sys.add_eq(std::move(row), 1);
  }
  for (std::size_t i = 0; i < inst.n(); ++i) {
    for (std::size_t j = 0; j < inst.m(); ++j) {
      RatVec row = zeros(sys.num_vars);
      row[layout.beta(i, j)] = 1;
      sys.add_ge(std::move(row), 0);
    }
  }
  return sys;
}

std::optional<PiercingResult> solve_axis(const GridInstance& inst, Axis axis) {
  const FeasOutcome out = solve_feasibility(build_primal(inst, axis));
  if (!out.is_feasible()) return std::nullopt;
  const PrimalLayout layout{inst.n(), inst.m()};
  const RatVec& v = out.point();

  PiercingResult result;
  result.axis = axis;
  result.line = PlaneLine{axis, v[layout.plane()], v[layout.slope()], v[layout.intercept()]};
  result.witness.axis = axis;
  result.witness.beta.assign(inst.n(), zeros(inst.m()));
  for (std::size_t i = 0; i < inst.n(); ++i) {
    for (std::size_t j = 0; j < inst.m(); ++j) result.witness.beta[i][j] = v[layout.beta(i, j)];
  }
  result.report = line_pierces(inst, result.line);
  return result;
}

PiercingResult find_piercing_line(const GridInstance& inst) {
  for (Axis axis : {Axis::X, Axis::Y}) {
    if (auto result = solve_axis(inst, axis)) {
      if (!result->report.all()) {
        throw Error(ErrorCode::TheoremViolation, "feasible primal produced a line that misses a set");
      }
      return *std::move(result);
    }
  }
  throw Error(ErrorCode::TheoremViolation, "both primal piercing systems are infeasible");
}

DualCertificate extract_dual_certificate(const GridInstance& inst, Axis axis) {
  const LinearSystem sys = build_primal(inst, axis);
  const FeasOutcome out = solve_feasibility(sys);
  if (out.is_feasible()) {
    throw Error(ErrorCode::Feasible, std::string("primal system for axis ") + std::string(to_string(axis)) + " is feasible");
  }
  // Column of beta in the Farkas identity: y1_s P_g + y2_s z_gs + y3_s + w_gs = 0
  // with w >= 0, while sum(y3) > 0. Negating and scaling by 1/sum(y3) gives
  // the dual rows with sum(u3) = -1.
  const std::size_t sets = inst.family_size(axis);
  const RatVec& eq = out.cert().eq_mults;
  Rat total = 0;
  for (std::size_t s = 0; s < sets; ++s) total += eq[2 * sets + s];

  DualCertificate cert;
  cert.side = axis;
  for (std::size_t s = 0; s < sets; ++s) {
    cert.row1.push_back(-eq[s] / total);
    cert.row2.push_back(-eq[sets + s] / total);
    cert.row3.push_back(-eq[2 * sets + s] / total);
  }
  if (!verify_dual_certificate(inst, cert)) {
    throw Error(ErrorCode::TheoremViolation, "mapped Farkas certificate fails the dual system");
  }
  return cert;
}

bool verify_dual_certificate(const GridInstance& inst, const DualCertificate& cert) {
  const std::size_t sets = inst.family_size(cert.side);
  if (cert.row1.size() != sets || cert.row2.size() != sets || cert.row3.size() != sets) {
    throw Error(ErrorCode::Dimension, "dual certificate rows must have length " + std::to_string(sets));
  }
  const RatVec& planes = inst.plane_values(cert.side);
  const RatVec& ords = inst.ordinates(cert.side);
  for (std::size_t g = 0; g < planes.size(); ++g) {
    for (std::size_t s = 0; s < sets; ++s) {
      if (cert.row1[s] * planes[g] + cert.row2[s] * height(inst, cert.side, g, s) + cert.row3[s] < 0) return false;
    }
  }
  return dot(cert.row2, ords) == 0 && sum(cert.row1) == 0 && sum(cert.row2) == 0 && sum(cert.row3) < 0;
}

std::string ViolatedRow::label() const {
  auto cell = [&](const char* name) { return std::string(name) + "[" + std::to_string(i) + "," + std::to_string(j) + "]"; };
  switch (kind) {
    case CombinedRow::XBeta: return cell("x:beta");
    case CombinedRow::YBeta: return cell("y:beta");
    case CombinedRow::XA: return "x:a";
    case CombinedRow::YA: return "y:a";
    case CombinedRow::XX0: return "x:x0";
    case CombinedRow::YX0: return "y:x0";
    case CombinedRow::XZ0: return "x:z0";
    case CombinedRow::YZ0: return "y:z0";
    case CombinedRow::XInfeasible: return "x:infeasible";
    case CombinedRow::YInfeasible: return "y:infeasible";
  }
  return "?";
}

std::string_view to_string(LedgerBranch branch) {
  switch (branch) {
    case LedgerBranch::NotReached: return "not-reached";
    case LedgerBranch::PartSum: return "part-sum";
    case LedgerBranch::V2Zero: return "v2-zero";
    case LedgerBranch::U2Zero: return "u2-zero";
  }
  return "?";
}

ContradictionLedger check_combined(const RatVec& x, const RatVec& y, const RatMat& z, const DualCertificate& u,
                                   const DualCertificate& v) {
  const std::size_t n = x.size();
  const std::size_t m = y.size();
  if (z.size() != n || std::any_of(z.begin(), z.end(), [&](const RatVec& row) { return row.size() != m; })) {
    throw Error(ErrorCode::Dimension, "Z must be n x m");
  }
  if (u.side != Axis::X || u.row1.size() != m || u.row2.size() != m || u.row3.size() != m) {
    throw Error(ErrorCode::Dimension, "U must be a side-x certificate with rows of length m");
  }
  if (v.side != Axis::Y || v.row1.size() != n || v.row2.size() != n || v.row3.size() != n) {
    throw Error(ErrorCode::Dimension, "V must be a side-y certificate with rows of length n");
  }
  const RatVec& u1 = u.row1;
  const RatVec& u2 = u.row2;
  const RatVec& u3 = u.row3;
  const RatVec& v1 = v.row1;
  const RatVec& v2 = v.row2;
  const RatVec& v3 = v.row3;

  auto x_beta = [&](std::size_t i, std::size_t j) -> Rat { return u1[j] * x[i] + u2[j] * z[i][j] + u3[j]; };
  auto y_beta = [&](std::size_t i, std::size_t j) -> Rat { return v1[i] * y[j] + v2[i] * z[i][j] + v3[i]; };

  ContradictionLedger L;
  L.x_primed.resize(n);
  L.y_primed.resize(m);
  L.z_primed.assign(n, zeros(m));
  for (std::size_t i = 0; i < n; ++i) L.x_primed[i] = v2[i] * x[i];
  for (std::size_t j = 0; j < m; ++j) L.y_primed[j] = u2[j] * y[j];
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) L.z_primed[i][j] = u2[j] * v2[i] * z[i][j];
  }
  for (std::size_t i = 0; i < n; ++i) (v2[i] >= 0 ? L.i_plus : L.i_minus).push_back(i);
  for (std::size_t j = 0; j < m; ++j) (u2[j] >= 0 ? L.j_plus : L.j_minus).push_back(j);

  auto over = [](const std::vector<std::size_t>& idx, const RatVec& vals) {
    Rat acc = 0;
    for (std::size_t k : idx) acc += vals[k];
    return acc;
  };
  L.u1_plus = over(L.j_plus, u1);
  L.u1_minus = over(L.j_minus, u1);
  L.x_plus = over(L.i_plus, L.x_primed);
  L.x_minus = over(L.i_minus, L.x_primed);
  L.v1_plus = over(L.i_plus, v1);
  L.v1_minus = over(L.i_minus, v1);
  L.y_plus = over(L.j_plus, L.y_primed);
  L.y_minus = over(L.j_minus, L.y_primed);
  L.v2_plus = over(L.i_plus, v2);
  L.v2_minus = over(L.i_minus, v2);
  L.u3_plus = over(L.j_plus, u3);
  L.u3_minus = over(L.j_minus, u3);
  L.u2_plus = over(L.j_plus, u2);
  L.u2_minus = over(L.j_minus, u2);
  L.v3_plus = over(L.i_plus, v3);
  L.v3_minus = over(L.i_minus, v3);

  L.part1 = L.u1_minus * L.x_plus - L.u1_plus * L.x_minus;
  L.part2 = L.v1_minus * L.y_plus - L.v1_plus * L.y_minus;
  L.part3 = L.v2_plus * L.u3_minus - L.v2_minus * L.u3_plus;
  L.part4 = L.u2_plus * L.v3_minus - L.u2_minus * L.v3_plus;

  // Paired inequalities, each >= 0 whenever the beta rows hold:
  //   I+ x J-:   u1_j x'_i - v1_i y'_j + v2_i u3_j - u2_j v3_i
  //   I- x J+: -(u1_j x'_i - v1_i y'_j + v2_i u3_j - u2_j v3_i)
  auto paired = [&](std::size_t i, std::size_t j) -> Rat {
    return u1[j] * L.x_primed[i] - v1[i] * L.y_primed[j] + v2[i] * u3[j] - u2[j] * v3[i];
  };
  L.pair_sum = 0;
  for (std::size_t i : L.i_plus) {
    for (std::size_t j : L.j_minus) L.pair_sum += paired(i, j);
  }
  for (std::size_t i : L.i_minus) {
    for (std::size_t j : L.j_plus) L.pair_sum -= paired(i, j);
  }

  const std::pair<bool, CombinedRow> linear_checks[] = {
      {dot(u2, y) == 0, CombinedRow::XA},       {dot(v2, x) == 0, CombinedRow::YA},
      {sum(u1) == 0, CombinedRow::XX0},         {sum(v1) == 0, CombinedRow::YX0},
      {sum(u2) == 0, CombinedRow::XZ0},         {sum(v2) == 0, CombinedRow::YZ0},
      {sum(u3) < 0, CombinedRow::XInfeasible},  {sum(v3) < 0, CombinedRow::YInfeasible},
  };
  for (const auto& [holds, kind] : linear_checks) {
    if (!holds) {
      L.violated = ViolatedRow{kind, 0, 0};
      return L;
    }
  }
  L.linear_rows_hold = true;

  std::optional<ViolatedRow> found;
  if (all_zero(v2)) {
    // Summing (y:beta) over i for any column j gives sum(v3) < 0.
    L.branch = LedgerBranch::V2Zero;
    for (std::size_t i = 0; i < n && !found; ++i) {
      if (y_beta(i, 0) < 0) found = ViolatedRow{CombinedRow::YBeta, i, 0};
    }
  } else if (all_zero(u2)) {
    L.branch = LedgerBranch::U2Zero;
    for (std::size_t j = 0; j < m && !found; ++j) {
      if (x_beta(0, j) < 0) found = ViolatedRow{CombinedRow::XBeta, 0, j};
    }
  } else {
    // part1 = part2 = 0, part3 = v2+ sum(u3) < 0, part4 = u2+ sum(v3) < 0,
    // so some paired term is negative; its parent beta row is violated.
    L.branch = LedgerBranch::PartSum;
    for (std::size_t i : L.i_plus) {
      for (std::size_t j : L.j_minus) {
        if (found || paired(i, j) >= 0) continue;
        found = v2[i] * x_beta(i, j) < 0 ? ViolatedRow{CombinedRow::XBeta, i, j} : ViolatedRow{CombinedRow::YBeta, i, j};
      }
    }
    for (std::size_t i : L.i_minus) {
      for (std::size_t j : L.j_plus) {
        if (found || paired(i, j) <= 0) continue;
        found = u2[j] * y_beta(i, j) < 0 ? ViolatedRow{CombinedRow::YBeta, i, j} : ViolatedRow{CombinedRow::XBeta, i, j};
      }
    }
  }
  if (found) {
    const Rat value = found->kind == CombinedRow::XBeta ? x_beta(found->i, found->j) : y_beta(found->i, found->j);
    if (value < 0) {
      L.violated = *found;
      return L;
    }
  }
  throw Error(ErrorCode::TheoremViolation, "combined system satisfied by (U, V); ledger branch " +
                                               std::string(to_string(L.branch)));
}

}  // namespace piercing
