#include "piercing/fractional.hpp"

#include <algorithm>
#include <cmath>

#include "piercing/error.hpp"
#include "piercing/lpcore.hpp"

namespace piercing {

namespace {

ZInterval hull_of(const Rat& a, const Rat& b) { return a <= b ? ZInterval(a, b) : ZInterval(b, a); }

Rat clamp_into(const Rat& value, const ZInterval& range) {
  if (value < range.lo()) return range.lo();
  if (range.hi() < value) return range.hi();
  return value;
}

bool stabbable(const SegmentFamily& fam, const Triple& t) {
  LinearSystem sys;
  sys.num_vars = 2;
  for (std::size_t k : t) {
    const Rat& at = fam.abscissa(k);
    sys.add_ge({at, Rat(1)}, fam.interval(k).lo());
    sys.add_ge({Rat(-at), Rat(-1)}, Rat(-fam.interval(k).hi()));
  }
  return solve_feasibility(sys).is_feasible();
}

}  // namespace

Lemma33Trace lemma33_pierce(const GridInstance& inst) {
  if (inst.n() != 3 || inst.m() != 3) throw Error(ErrorCode::Dimension, "lemma33_pierce needs a 3x3 instance");
  const RatVec& x = inst.x();
  const RatVec& y = inst.y();
  const RatMat& z = inst.z();
  const Rat s = (x[1] - x[0]) / (x[2] - x[0]);
  const Rat t = (y[1] - y[0]) / (y[2] - y[0]);

  // Mid-line of the corner quadrangle in the plane x = x_2 (meets B_1, B_3)
  // and in the plane y = y_2 (meets A_1, A_3).
  const Rat la_first = (1 - s) * z[0][0] + s * z[2][0];
  const Rat la_last = (1 - s) * z[0][2] + s * z[2][2];
  const Rat lb_first = (1 - t) * z[0][0] + t * z[0][2];
  const Rat lb_last = (1 - t) * z[2][0] + t * z[2][2];

  Lemma33Trace tr{.instance = inst,
                  .z_p22 = z[1][1],
                  .z_px = z[1][0] + t * (z[1][2] - z[1][0]),
                  .z_py = z[0][1] + s * (z[2][1] - z[0][1]),
                  .z_r = (1 - t) * la_first + t * la_last,
                  .x_test = ZInterval::empty(),
                  .y_test = ZInterval::empty(),
                  .axis = Axis::X,
                  .z_star = 0,
                  .lambda = 0,
                  .first_endpoint = {},
                  .last_endpoint = {},
                  .line = {},
                  .report = {}};
  tr.x_test = hull_of(tr.z_r, tr.z_px).intersect(hull_of(tr.z_p22, tr.z_py));
  tr.y_test = hull_of(tr.z_r, tr.z_py).intersect(hull_of(tr.z_p22, tr.z_px));

  if (!tr.x_test.is_empty()) {
    tr.axis = Axis::X;
    tr.z_star = clamp_into(tr.z_r, tr.x_test);
    tr.lambda = tr.z_r == tr.z_px ? Rat(1) : Rat((tr.z_star - tr.z_px) / (tr.z_r - tr.z_px));
    tr.first_endpoint = {x[1], y[0], tr.lambda * la_first + (1 - tr.lambda) * z[1][0]};
    tr.last_endpoint = {x[1], y[2], tr.lambda * la_last + (1 - tr.lambda) * z[1][2]};
  } else if (!tr.y_test.is_empty()) {
    tr.axis = Axis::Y;
    tr.z_star = clamp_into(tr.z_r, tr.y_test);
    tr.lambda = tr.z_r == tr.z_py ? Rat(1) : Rat((tr.z_star - tr.z_py) / (tr.z_r - tr.z_py));
    tr.first_endpoint = {x[0], y[1], tr.lambda * lb_first + (1 - tr.lambda) * z[0][1]};
    tr.last_endpoint = {x[2], y[1], tr.lambda * lb_last + (1 - tr.lambda) * z[2][1]};
  } else {
    throw Error(ErrorCode::TheoremViolation, "both central interval tests are empty");
  }

  const int along = tr.axis == Axis::X ? 1 : 0;
  const Rat slope = (tr.last_endpoint[2] - tr.first_endpoint[2]) / (tr.last_endpoint[along] - tr.first_endpoint[along]);
  tr.line = PlaneLine{tr.axis, tr.axis == Axis::X ? x[1] : y[1], slope,
                      tr.first_endpoint[2] - slope * tr.first_endpoint[along]};
  tr.report = line_pierces(inst, tr.line);
  if (!tr.report.all()) throw Error(ErrorCode::TheoremViolation, "3x3 construction produced a line missing a set");
  return tr;
}

SegmentFamily::SegmentFamily(RatVec abscissas, std::vector<ZInterval> intervals)
    : abscissas_(std::move(abscissas)), intervals_(std::move(intervals)) {
  if (abscissas_.size() != intervals_.size()) throw Error(ErrorCode::Empty, "segment family size mismatch");
  for (std::size_t k = 0; k < abscissas_.size(); ++k) {
    if (intervals_[k].is_empty()) throw Error(ErrorCode::Empty, "segment " + std::to_string(k) + " is empty");
    if (k > 0 && !(abscissas_[k - 1] < abscissas_[k])) {
      throw Error(ErrorCode::Monotone, "segment abscissas are not strictly increasing");
    }
  }
}

SegmentFamily SegmentFamily::subfamily(const std::vector<std::size_t>& indices) const {
  RatVec at;
  std::vector<ZInterval> spans;
  for (std::size_t k : indices) {
    at.push_back(abscissas_.at(k));
    spans.push_back(intervals_.at(k));
  }
  return SegmentFamily(std::move(at), std::move(spans));
}

std::vector<Triple> stab_triples(const SegmentFamily& fam) {
  std::vector<Triple> out;
  const std::size_t k = fam.size();
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      for (std::size_t c = b + 1; c < k; ++c) {
        if (stabbable(fam, {a, b, c})) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

std::size_t stab_count(const SegmentFamily& fam, const StabLine& line) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < fam.size(); ++k) count += fam.interval(k).contains(line.at(fam.abscissa(k))) ? 1 : 0;
  return count;
}

StabResult best_stab_line(const SegmentFamily& fam) {
  if (fam.size() == 0) throw Error(ErrorCode::Empty, "best_stab_line needs at least one segment");
  std::optional<StabLine> best;
  std::size_t best_count = 0;
  auto consider = [&](StabLine line) {
    const std::size_t count = stab_count(fam, line);
    if (!best || count > best_count ||
        (count == best_count && std::tie(line.slope, line.intercept) < std::tie(best->slope, best->intercept))) {
      best = std::move(line);
      best_count = count;
    }
  };
  if (fam.size() == 1) {
    consider(StabLine{Rat(0), fam.interval(0).lo()});
  }
  for (std::size_t a = 0; a < fam.size(); ++a) {
    for (std::size_t b = a + 1; b < fam.size(); ++b) {
      for (const Rat* za : {&fam.interval(a).lo(), &fam.interval(a).hi()}) {
        for (const Rat* zb : {&fam.interval(b).lo(), &fam.interval(b).hi()}) {
          const Rat slope = (*zb - *za) / (fam.abscissa(b) - fam.abscissa(a));
          consider(StabLine{slope, *za - slope * fam.abscissa(a)});
        }
      }
    }
  }
  StabResult result{*best, best_count, {}};
  for (std::size_t k = 0; k < fam.size(); ++k) {
    result.stabbed.push_back(fam.interval(k).contains(result.line.at(fam.abscissa(k))));
  }
  return result;
}

SegmentFamily plane_sections(const GridInstance& inst, Axis axis, const Rat& plane_value,
                             std::vector<std::size_t>* set_indices) {
  RatVec at;
  std::vector<ZInterval> spans;
  const RatVec& ords = inst.ordinates(axis);
  for (std::size_t k = 0; k < ords.size(); ++k) {
    ZInterval sec = section(inst, axis, k, plane_value);
    if (sec.is_empty()) continue;
    at.push_back(ords[k]);
    spans.push_back(std::move(sec));
    if (set_indices) set_indices->push_back(k);
  }
  return SegmentFamily(std::move(at), std::move(spans));
}

Rat binomial3(std::size_t k) {
  if (k < 3) return 0;
  return Rat(static_cast<long>(k * (k - 1) * (k - 2) / 6));
}

FracResult fractional_transversal(const GridInstance& inst) {
  if (inst.n() < 3 || inst.m() < 3) throw Error(ErrorCode::Dimension, "fractional_transversal needs n >= 3 and m >= 3");
  FracResult res;
  res.kalai_constant = 1.0 - std::cbrt(0.5);
  for (const Rat& xi : inst.x()) res.x_good.push_back(stab_triples(plane_sections(inst, Axis::X, xi)).size());
  for (const Rat& yj : inst.y()) res.y_good.push_back(stab_triples(plane_sections(inst, Axis::Y, yj)).size());

  const Rat total_x = binomial3(inst.m());
  const Rat total_y = binomial3(inst.n());
  const Rat half(1, 2);
  std::optional<std::pair<Axis, std::size_t>> chosen;
  res.delta = 0;
  auto scan = [&](Axis axis, const std::vector<std::size_t>& good, const Rat& total) {
    for (std::size_t k = 0; k < good.size(); ++k) {
      const Rat fraction = Rat(static_cast<long>(good[k])) / total;
      if (fraction > res.delta) res.delta = fraction;
      if (!chosen && fraction >= half) {
        chosen = {axis, k};
        res.alpha = fraction;
      }
    }
  };
  scan(Axis::X, res.x_good, total_x);
  scan(Axis::Y, res.y_good, total_y);
  if (!chosen) throw Error(ErrorCode::TheoremViolation, "no plane reaches good-triple fraction 1/2");

  res.axis = chosen->first;
  res.plane_index = chosen->second;
  const Rat& plane_value = inst.plane_values(res.axis)[res.plane_index];
  const StabResult best = best_stab_line(plane_sections(inst, res.axis, plane_value));
  res.line = PlaneLine{res.axis, plane_value, best.line.slope, best.line.intercept};
  res.count = best.count;

  const Rat size(static_cast<long>(inst.family_size(res.axis)));
  const Rat count(static_cast<long>(res.count));
  if (count < res.alpha / 3 * size || count < size / 6) {
    throw Error(ErrorCode::TheoremViolation, "fractional transversal count below its guaranteed bound");
  }
  return res;
}

}  // namespace piercing
