#include <cstddef>
#include <limits>
#include <stdexcept>

#include "piercing/error.hpp"
#include "piercing/lpcore.hpp"

namespace piercing {

std::size_t LinearSystem::add_eq(RatVec coeffs, Rat rhs) {
  eq_rows.push_back({std::move(coeffs), std::move(rhs)});
  return eq_rows.size() - 1;
}

std::size_t LinearSystem::add_ge(RatVec coeffs, Rat rhs) {
  ge_rows.push_back({std::move(coeffs), std::move(rhs)});
  return ge_rows.size() - 1;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

void check_dimensions(const LinearSystem& sys) {
  auto check = [&](const std::vector<LinearRow>& rows, const char* kind) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].coeffs.size() != sys.num_vars) {
        throw Error(ErrorCode::Dimension, std::string(kind) + " row " + std::to_string(r) + " has " +
                                              std::to_string(rows[r].coeffs.size()) + " coefficients, expected " +
                                              std::to_string(sys.num_vars));
      }
    }
  };
  check(sys.eq_rows, "equality");
  check(sys.ge_rows, "inequality");
}

// Row of the standard-form problem and where it came from.
struct StdRow {
  bool is_eq;
  std::size_t source;    // index into eq_rows / ge_rows
  std::size_t surplus;   // surplus column for ge rows, kNone for eq rows
  int flip;              // +1, or -1 when the row was negated to make rhs >= 0
};

// Standard form  M w = b, w >= 0, b >= 0  of a LinearSystem. Variables that
// carry a single-coefficient bound row  c*v_k >= 0 (c > 0)  map to one
// nonnegative column and the bound row is absorbed; every other variable is
// split into plus/minus columns. General ge rows get a surplus column.
// Artificial columns follow, one per row, forming the initial basis.
class Phase1 {
 public:
  explicit Phase1(const LinearSystem& sys) : sys_(sys) {
    bound_row_.assign(sys.num_vars, kNone);
    std::vector<bool> absorbed(sys.ge_rows.size(), false);
    for (std::size_t r = 0; r < sys.ge_rows.size(); ++r) {
      const LinearRow& row = sys.ge_rows[r];
      if (row.rhs != 0) continue;
      std::size_t var = kNone;
      std::size_t nonzeros = 0;
      for (std::size_t k = 0; k < row.coeffs.size(); ++k) {
        if (row.coeffs[k] != 0) {
          ++nonzeros;
          var = k;
        }
      }
      if (nonzeros == 1 && row.coeffs[var] > 0 && bound_row_[var] == kNone) {
        bound_row_[var] = r;
        absorbed[r] = true;
      }
    }

    plus_col_.resize(sys.num_vars);
    minus_col_.assign(sys.num_vars, kNone);
    std::size_t next = 0;
    for (std::size_t k = 0; k < sys.num_vars; ++k) {
      plus_col_[k] = next++;
      if (bound_row_[k] == kNone) minus_col_[k] = next++;
    }
    for (std::size_t r = 0; r < sys.eq_rows.size(); ++r) rows_.push_back({true, r, kNone, 1});
    for (std::size_t r = 0; r < sys.ge_rows.size(); ++r) {
      if (!absorbed[r]) rows_.push_back({false, r, next++, 1});
    }
    art_base_ = next;
    num_cols_ = art_base_ + rows_.size();

    const std::size_t num_rows = rows_.size();
    tab_.assign(num_rows, zeros(num_cols_));
    rhs_.resize(num_rows);
    for (std::size_t i = 0; i < num_rows; ++i) {
      StdRow& info = rows_[i];
      const LinearRow& src = info.is_eq ? sys.eq_rows[info.source] : sys.ge_rows[info.source];
      info.flip = src.rhs < 0 ? -1 : 1;
      RatVec& t = tab_[i];
      for (std::size_t k = 0; k < sys.num_vars; ++k) {
        if (src.coeffs[k] == 0) continue;
        t[plus_col_[k]] = info.flip * src.coeffs[k];
        if (minus_col_[k] != kNone) t[minus_col_[k]] = -t[plus_col_[k]];
      }
      if (info.surplus != kNone) t[info.surplus] = -info.flip;
      t[art_base_ + i] = 1;
      rhs_[i] = info.flip * src.rhs;
    }

    basis_.resize(num_rows);
    reduced_ = zeros(num_cols_);
    neg_objective_ = 0;
    for (std::size_t i = 0; i < num_rows; ++i) {
      basis_[i] = art_base_ + i;
      for (std::size_t c = 0; c < art_base_; ++c) reduced_[c] -= tab_[i][c];
      neg_objective_ -= rhs_[i];
    }
  }

  void run() {
    for (;;) {
      std::size_t entering = kNone;
      for (std::size_t c = 0; c < num_cols_; ++c) {
        if (reduced_[c] < 0) {
          entering = c;
          break;
        }
      }
      if (entering == kNone) return;

      std::size_t leaving = kNone;
      Rat best_ratio;
      for (std::size_t i = 0; i < tab_.size(); ++i) {
        if (tab_[i][entering] <= 0) continue;
        Rat ratio = rhs_[i] / tab_[i][entering];
        if (leaving == kNone || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      // The phase-1 objective is bounded below by zero.
      if (leaving == kNone) throw std::logic_error("phase-1 simplex reported an unbounded ray");
      pivot(leaving, entering);
    }
  }

  bool feasible() const { return neg_objective_ == 0; }

  RatVec point() const {
    RatVec w = zeros(num_cols_);
    for (std::size_t i = 0; i < basis_.size(); ++i) w[basis_[i]] = rhs_[i];
    RatVec v(sys_.num_vars);
    for (std::size_t k = 0; k < sys_.num_vars; ++k) {
      v[k] = w[plus_col_[k]];
      if (minus_col_[k] != kNone) v[k] -= w[minus_col_[k]];
    }
    return v;
  }

  // Phase-1 duals y_i = 1 - (reduced cost of artificial i). At optimality
  // y^T M <= 0 columnwise and y^T b equals the positive objective, which
  // translates back into a Farkas certificate of the original system.
  FarkasCert certificate() const {
    FarkasCert cert{zeros(sys_.eq_rows.size()), zeros(sys_.ge_rows.size())};
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      Rat y = 1 - reduced_[art_base_ + i];
      const StdRow& info = rows_[i];
      (info.is_eq ? cert.eq_mults : cert.ge_mults)[info.source] = info.flip * y;
    }

    RatVec combined = zeros(sys_.num_vars);
    for (std::size_t r = 0; r < sys_.eq_rows.size(); ++r) {
      if (cert.eq_mults[r] == 0) continue;
      for (std::size_t k = 0; k < sys_.num_vars; ++k) combined[k] += cert.eq_mults[r] * sys_.eq_rows[r].coeffs[k];
    }
    for (std::size_t r = 0; r < sys_.ge_rows.size(); ++r) {
      if (cert.ge_mults[r] == 0) continue;
      for (std::size_t k = 0; k < sys_.num_vars; ++k) combined[k] += cert.ge_mults[r] * sys_.ge_rows[r].coeffs[k];
    }
    for (std::size_t k = 0; k < sys_.num_vars; ++k) {
      const std::size_t r = bound_row_[k];
      if (r == kNone) continue;
      cert.ge_mults[r] = -combined[k] / sys_.ge_rows[r].coeffs[k];
    }
    return cert;
  }

 private:
  void pivot(std::size_t p, std::size_t c) {
    RatVec& prow = tab_[p];
    const Rat inv = 1 / prow[c];
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < num_cols_; ++k) {
      if (prow[k] != 0) {
        prow[k] *= inv;
        support.push_back(k);
      }
    }
    rhs_[p] *= inv;

    auto eliminate = [&](RatVec& row, Rat& rhs) {
      const Rat factor = row[c];
      if (factor == 0) return;
      for (std::size_t k : support) row[k] -= factor * prow[k];
      rhs -= factor * rhs_[p];
    };
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (i != p) eliminate(tab_[i], rhs_[i]);
    }
    eliminate(reduced_, neg_objective_);
    basis_[p] = c;
  }

  const LinearSystem& sys_;
  std::vector<std::size_t> bound_row_;
  std::vector<std::size_t> plus_col_;
  std::vector<std::size_t> minus_col_;
  std::vector<StdRow> rows_;
  std::size_t art_base_ = 0;
  std::size_t num_cols_ = 0;
  std::vector<RatVec> tab_;
  RatVec rhs_;
  RatVec reduced_;
  Rat neg_objective_;
  std::vector<std::size_t> basis_;
};

// Positive rescaling to coprime integers.
void clear_denominators(FarkasCert& cert) {
  mpz_class lcm = 1;
  mpz_class gcd = 0;
  auto visit_den = [&](const RatVec& v) {
    for (const Rat& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  };
  visit_den(cert.eq_mults);
  visit_den(cert.ge_mults);
  auto scale = [&](RatVec& v) {
    for (Rat& q : v) {
      q *= lcm;
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), q.get_num_mpz_t());
    }
  };
  scale(cert.eq_mults);
  scale(cert.ge_mults);
  if (gcd > 1) {
    for (Rat& q : cert.eq_mults) q /= gcd;
    for (Rat& q : cert.ge_mults) q /= gcd;
  }
}

}  // namespace

FeasOutcome solve_feasibility(const LinearSystem& sys) {
  check_dimensions(sys);
  Phase1 tableau(sys);
  tableau.run();
  if (tableau.feasible()) {
    RatVec point = tableau.point();
    if (!satisfies(sys, point)) throw std::logic_error("simplex produced a point violating its system");
    return FeasOutcome::feasible(std::move(point));
  }
  FarkasCert cert = tableau.certificate();
  clear_denominators(cert);
  if (!verify_farkas(sys, cert)) throw std::logic_error("simplex produced an invalid Farkas certificate");
  return FeasOutcome::infeasible(std::move(cert));
}

bool verify_farkas(const LinearSystem& sys, const FarkasCert& cert) {
  check_dimensions(sys);
  if (cert.eq_mults.size() != sys.eq_rows.size() || cert.ge_mults.size() != sys.ge_rows.size()) {
    throw Error(ErrorCode::Dimension, "certificate multiplier counts do not match the system's row counts");
  }
  for (const Rat& m : cert.ge_mults) {
    if (m < 0) return false;
  }
  RatVec combined = zeros(sys.num_vars);
  Rat rhs = 0;
  auto accumulate = [&](const std::vector<LinearRow>& rows, const RatVec& mults) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (mults[r] == 0) continue;
      for (std::size_t k = 0; k < sys.num_vars; ++k) combined[k] += mults[r] * rows[r].coeffs[k];
      rhs += mults[r] * rows[r].rhs;
    }
  };
  accumulate(sys.eq_rows, cert.eq_mults);
  accumulate(sys.ge_rows, cert.ge_mults);
  for (const Rat& c : combined) {
    if (c != 0) return false;
  }
  return rhs > 0;
}

bool satisfies(const LinearSystem& sys, const RatVec& point) {
  if (point.size() != sys.num_vars) return false;
  for (const LinearRow& row : sys.eq_rows) {
    if (row.coeffs.size() != point.size() || dot(row.coeffs, point) != row.rhs) return false;
  }
  for (const LinearRow& row : sys.ge_rows) {
    if (row.coeffs.size() != point.size() || dot(row.coeffs, point) < row.rhs) return false;
  }
  return true;
}

std::optional<RatVec> point_in_hull(const RatVec& q, const std::vector<RatVec>& pts) {
  if (pts.empty()) throw Error(ErrorCode::Dimension, "point_in_hull needs at least one generating point");
  const std::size_t dim = q.size();
  for (const RatVec& p : pts) {
    if (p.size() != dim) throw Error(ErrorCode::Dimension, "generating point dimension differs from query point");
  }
  LinearSystem sys;
  sys.num_vars = pts.size();
  for (std::size_t axis = 0; axis < dim; ++axis) {
    RatVec row(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) row[k] = pts[k][axis];
    sys.add_eq(std::move(row), q[axis]);
  }
  sys.add_eq(RatVec(pts.size(), Rat(1)), Rat(1));
  for (std::size_t k = 0; k < pts.size(); ++k) {
    RatVec row = zeros(pts.size());
    row[k] = 1;
    sys.add_ge(std::move(row), Rat(0));
  }
  FeasOutcome out = solve_feasibility(sys);
  if (!out.is_feasible()) return std::nullopt;
  return out.point();
}

}  // namespace piercing
