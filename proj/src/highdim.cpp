#include "piercing/highdim.hpp"

#include "piercing/error.hpp"
#include "piercing/lpcore.hpp"

namespace piercing {

namespace {

std::size_t pow3(std::size_t d) {
  std::size_t out = 1;
  for (std::size_t k = 0; k < d; ++k) out *= 3;
  return out;
}

void axpy(RatVec& acc, const Rat& scale, const RatVec& v) {
  for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += scale * v[k];
}

// Grid node t(J, r): r on J (bit of high_bits set means 3, else 1), 2 elsewhere.
MultiIndex node_of(std::size_t d, unsigned subset, unsigned high_bits) {
  MultiIndex t(d, 2);
  for (std::size_t k = 0; k < d; ++k) {
    if (subset & (1u << k)) t[k] = (high_bits & (1u << k)) ? 3 : 1;
  }
  return t;
}

std::size_t dimension_of_subsets(std::size_t count) {
  std::size_t d = 0;
  while ((std::size_t{1} << d) < count) ++d;
  if ((std::size_t{1} << d) != count) {
    throw Error(ErrorCode::Dimension, "subset-indexed point map needs 2^d entries, got " + std::to_string(count));
  }
  return d;
}

}  // namespace

HighDimInstance HighDimInstance::build(std::size_t d, std::vector<Triple3> base, std::vector<RatVec> fibers) {
  if (d < 2) throw Error(ErrorCode::Dimension, "high-dimensional instance needs d >= 2");
  if (d > 10) throw Error(ErrorCode::Dimension, "high-dimensional instance supports d <= 10");
  if (base.size() != d) throw Error(ErrorCode::Dimension, "expected " + std::to_string(d) + " base coordinate triples");
  for (std::size_t k = 0; k < d; ++k) {
    if (!(base[k][0] < base[k][1] && base[k][1] < base[k][2])) {
      throw Error(ErrorCode::Monotone, "base coordinate " + std::to_string(k + 1) + " is not strictly increasing");
    }
  }
  if (fibers.size() != pow3(d)) {
    throw Error(ErrorCode::Dimension, "expected " + std::to_string(pow3(d)) + " fiber points, got " + std::to_string(fibers.size()));
  }
  for (const RatVec& f : fibers) {
    if (f.size() != d - 1) throw Error(ErrorCode::Dimension, "every fiber point needs d - 1 coordinates");
  }
  return HighDimInstance(std::move(base), std::move(fibers));
}

std::size_t HighDimInstance::code(const MultiIndex& t) {
  std::size_t out = 0;
  for (std::size_t k = t.size(); k-- > 0;) {
    if (t[k] < 1 || t[k] > 3) throw Error(ErrorCode::Index, "multi-index entries must be 1, 2 or 3");
    out = out * 3 + static_cast<std::size_t>(t[k] - 1);
  }
  return out;
}

MultiIndex HighDimInstance::decode(std::size_t node) const {
  MultiIndex t(d());
  for (std::size_t k = 0; k < d(); ++k) {
    t[k] = static_cast<int>(node % 3) + 1;
    node /= 3;
  }
  return t;
}

RatVec HighDimInstance::point(const MultiIndex& t) const {
  RatVec p;
  p.reserve(ambient_dim());
  for (std::size_t k = 0; k < d(); ++k) p.push_back(base_[k][static_cast<std::size_t>(t[k] - 1)]);
  const RatVec& f = fibers_[code(t)];
  p.insert(p.end(), f.begin(), f.end());
  return p;
}

std::vector<RatVec> HighDimInstance::family_generators(std::size_t coord, int value) const {
  std::vector<RatVec> out;
  for (std::size_t node = 0; node < num_nodes(); ++node) {
    MultiIndex t = decode(node);
    if (t[coord] == value) out.push_back(point(t));
  }
  return out;
}

Rat q_weight(const QFamily& qf, unsigned subset, unsigned high_bits) {
  Rat w = 1;
  for (std::size_t k = 0; k < qf.alphas.size(); ++k) {
    if (subset & (1u << k)) w *= (high_bits & (1u << k)) ? qf.alphas[k].second : qf.alphas[k].first;
  }
  return w;
}

QFamily q_family(const HighDimInstance& inst) {
  const std::size_t d = inst.d();
  QFamily qf;
  for (std::size_t k = 0; k < d; ++k) {
    const Triple3& b = inst.base(k);
    qf.alphas.emplace_back((b[2] - b[1]) / (b[2] - b[0]), (b[1] - b[0]) / (b[2] - b[0]));
  }
  for (unsigned subset = 0; subset < (1u << d); ++subset) {
    RatVec q = zeros(inst.ambient_dim());
    // Enumerate every submask of `subset`, including the empty one.
    for (unsigned high = subset;; high = (high - 1) & subset) {
      axpy(q, q_weight(qf, subset, high), inst.point(node_of(d, subset, high)));
      if (high == 0) break;
    }
    qf.points.push_back(std::move(q));
  }
  return qf;
}

std::optional<SplitWitness> hull_split_at(const std::vector<RatVec>& points, std::size_t index) {
  const std::size_t d = dimension_of_subsets(points.size());
  if (index >= d) throw Error(ErrorCode::Index, "split coordinate out of range");
  const std::size_t dim = points.front().size();
  for (const RatVec& p : points) {
    if (p.size() != dim) throw Error(ErrorCode::Dimension, "subset points must share one dimension");
  }

  SplitWitness w;
  w.index = index;
  for (unsigned subset = 0; subset < points.size(); ++subset) {
    ((subset >> index) & 1u ? w.inside_subsets : w.outside_subsets).push_back(subset);
  }
  const std::size_t ni = w.inside_subsets.size();
  const std::size_t no = w.outside_subsets.size();

  // Variables: inside coefficients, then outside coefficients.
  LinearSystem sys;
  sys.num_vars = ni + no;
  for (std::size_t axis = 0; axis < dim; ++axis) {
    RatVec row = zeros(ni + no);
    for (std::size_t k = 0; k < ni; ++k) row[k] = points[w.inside_subsets[k]][axis];
    for (std::size_t k = 0; k < no; ++k) row[ni + k] = -points[w.outside_subsets[k]][axis];
    sys.add_eq(std::move(row), 0);
  }
  RatVec inside_sum = zeros(ni + no);
  RatVec outside_sum = zeros(ni + no);
  for (std::size_t k = 0; k < ni; ++k) inside_sum[k] = 1;
  for (std::size_t k = 0; k < no; ++k) outside_sum[ni + k] = 1;
  sys.add_eq(std::move(inside_sum), 1);
  sys.add_eq(std::move(outside_sum), 1);
  for (std::size_t k = 0; k < ni + no; ++k) {
    RatVec row = zeros(ni + no);
    row[k] = 1;
    sys.add_ge(std::move(row), 0);
  }

  const FeasOutcome out = solve_feasibility(sys);
  if (!out.is_feasible()) return std::nullopt;
  w.inside_coeffs.assign(out.point().begin(), out.point().begin() + static_cast<std::ptrdiff_t>(ni));
  w.outside_coeffs.assign(out.point().begin() + static_cast<std::ptrdiff_t>(ni), out.point().end());
  w.point = zeros(dim);
  for (std::size_t k = 0; k < ni; ++k) axpy(w.point, w.inside_coeffs[k], points[w.inside_subsets[k]]);
  return w;
}

SplitWitness split_index(const std::vector<RatVec>& points) {
  const std::size_t d = dimension_of_subsets(points.size());
  for (std::size_t i = 0; i < d; ++i) {
    if (auto w = hull_split_at(points, i)) return *std::move(w);
  }
  throw Error(ErrorCode::TheoremViolation, "no coordinate splits the subset points into meeting hulls");
}

HighDimPierce reconstruct_line(const HighDimInstance& inst, const QFamily& qf, const SplitWitness& split) {
  const std::size_t d = inst.d();
  const std::size_t i = split.index;
  const unsigned bit = 1u << i;

  // Splitting each inside Q_J by r_i separates an A^i_1 part from an A^i_3
  // part; both parts keep every other base coordinate at its middle value.
  RatVec low = zeros(inst.ambient_dim());
  RatVec high = zeros(inst.ambient_dim());
  Rat low_weight = 0;
  Rat high_weight = 0;
  for (std::size_t k = 0; k < split.inside_subsets.size(); ++k) {
    const unsigned subset = split.inside_subsets[k];
    const Rat& lambda = split.inside_coeffs[k];
    if (lambda == 0) continue;
    for (unsigned hb = subset;; hb = (hb - 1) & subset) {
      const Rat w = lambda * q_weight(qf, subset, hb);
      const RatVec p = inst.point(node_of(d, subset, hb));
      if (hb & bit) {
        axpy(high, w, p);
        high_weight += w;
      } else {
        axpy(low, w, p);
        low_weight += w;
      }
      if (hb == 0) break;
    }
  }

  HighDimPierce out;
  out.index = i;
  out.split = split;
  auto finish = [&](RatVec& acc, const Rat& weight, int fallback_value) {
    if (weight == 0) {
      out.fallback_used = true;
      MultiIndex t(d, 2);
      t[i] = fallback_value;
      return inst.point(t);
    }
    for (Rat& c : acc) c /= weight;
    return acc;
  };
  out.p1 = finish(low, low_weight, 1);
  out.p3 = finish(high, high_weight, 3);
  out.q = zeros(inst.ambient_dim());
  axpy(out.q, qf.alphas[i].first, out.p1);
  axpy(out.q, qf.alphas[i].second, out.p3);
  return out;
}

HighDimPierce highdim_pierce(const HighDimInstance& inst) {
  const std::size_t d = inst.d();
  const QFamily qf = q_family(inst);
  std::vector<RatVec> tails;
  for (const RatVec& q : qf.points) tails.emplace_back(q.begin() + static_cast<std::ptrdiff_t>(d), q.end());

  HighDimPierce out = reconstruct_line(inst, qf, split_index(tails));
  const std::size_t i = out.index;
  const RatVec tail(out.q.begin() + static_cast<std::ptrdiff_t>(d), out.q.end());
  if (tail != out.split.point) throw Error(ErrorCode::TheoremViolation, "reconstructed segment misses the split point");
  for (std::size_t k = 0; k < d; ++k) {
    if (k == i) continue;
    const Rat& mid = inst.base(k)[1];
    if (out.p1[k] != mid || out.p3[k] != mid) {
      throw Error(ErrorCode::TheoremViolation, "reconstructed segment leaves the central line space");
    }
  }

  auto member = [&](const RatVec& p, int value, RatVec& coeffs) {
    auto lambda = point_in_hull(p, inst.family_generators(i, value));
    if (!lambda) {
      throw Error(ErrorCode::TheoremViolation, "reconstructed point not in A^" + std::to_string(i + 1) + "_" + std::to_string(value));
    }
    coeffs = *std::move(lambda);
  };
  member(out.p1, 1, out.hull1);
  member(out.q, 2, out.hull2);
  member(out.p3, 3, out.hull3);
  return out;
}

}  // namespace piercing
