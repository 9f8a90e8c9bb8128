#include "phalanx/collision.hpp"

#include <cmath>
#include <vector>

#include "phalanx/kinematics.hpp"

namespace phalanx {

bool segments_intersect(const Segment& s1, const Segment& s2, double tol) {
  return segment_segment_distance(s1.a, s1.b, s2.a, s2.b) <= tol;
}

namespace {

struct Phalanx {
  int index;  // 1-based control index
  Vec2 a, b;
};

// Adjacent phalanxes share a junction; the only way they can meet anywhere
// else is by folding back over it, i.e. the outgoing direction is within
// tolerance of the reversed incoming one.
bool folds_back(const Phalanx& p, const Phalanx& q, double tol) {
  const Vec2 dp = (p.b - p.a).normalized();
  const Vec2 dq = (q.b - q.a).normalized();
  if (dp.dot(dq) >= 0.0) return false;
  const double overlap = std::min((p.b - p.a).norm(), (q.b - q.a).norm());
  return std::abs(cross2(dp, dq)) * overlap <= tol;
}

}  // namespace

std::optional<OffendingPair> self_intersection(const Configuration& config, double tol) {
  std::vector<Phalanx> extended;
  extended.reserve(config.controls.size());
  for (std::size_t k = 1; k < config.junctions.size(); ++k) {
    if (config.controls.u[k - 1]) {
      extended.push_back({static_cast<int>(k), config.junctions[k - 1], config.junctions[k]});
    }
  }
  for (std::size_t i = 0; i < extended.size(); ++i) {
    for (std::size_t j = i + 1; j < extended.size(); ++j) {
      const bool adjacent = (j == i + 1);
      const bool hit = adjacent
                           ? folds_back(extended[i], extended[j], tol)
                           : segments_intersect({extended[i].a, extended[i].b},
                                                {extended[j].a, extended[j].b}, tol);
      if (hit) return OffendingPair{extended[i].index, extended[j].index};
    }
  }
  return std::nullopt;
}

bool no_self_intersection_guarantee(double rho, double omega) {
  return std::abs(omega - 2.0 * kPi / 3.0) <= 1e-12 && rho >= 2.0;
}

namespace {

struct SweepState {
  const FingerSpec* spec;
  int depth;
  double tol;
  std::vector<int> u, v;
  std::vector<Vec2> junctions;        // x_0..x_current
  std::vector<Phalanx> extended;
  std::vector<Complex> phase;         // e^{-i n omega}
  std::vector<double> inv_pow;        // 1/rho^k
  int rotations = 0;
};

std::optional<OffendingPair> test_new_phalanx(const SweepState& s) {
  const Phalanx& last = s.extended.back();
  for (std::size_t i = 0; i + 1 < s.extended.size(); ++i) {
    const bool adjacent = (i + 2 == s.extended.size());
    const bool hit = adjacent ? folds_back(s.extended[i], last, s.tol)
                              : segments_intersect({s.extended[i].a, s.extended[i].b},
                                                   {last.a, last.b}, s.tol);
    if (hit) return OffendingPair{s.extended[i].index, last.index};
  }
  return std::nullopt;
}

std::optional<SweepCounterexample> sweep(SweepState& s, int level) {
  if (level == s.depth) return std::nullopt;
  const int k = level + 1;
  for (int uv = 0; uv < 4; ++uv) {
    const int ub = uv >> 1;
    const int vb = uv & 1;
    s.u.push_back(ub);
    s.v.push_back(vb);
    s.rotations += vb;
    const Vec2 x_prev = s.junctions.back();
    Vec2 x_next = x_prev;
    if (ub) {
      x_next += s.inv_pow[static_cast<std::size_t>(k)] *
                to_vec2(s.phase[static_cast<std::size_t>(s.rotations)]);
      s.extended.push_back({k, x_prev, x_next});
      if (auto pair = test_new_phalanx(s)) {
        ControlSequence controls{s.u, s.v, std::nullopt};
        SweepCounterexample out{controls, *pair};
        s.extended.pop_back();
        s.rotations -= vb;
        s.u.pop_back();
        s.v.pop_back();
        return out;
      }
    }
    s.junctions.push_back(x_next);
    if (auto found = sweep(s, level + 1)) return found;
    s.junctions.pop_back();
    if (ub) s.extended.pop_back();
    s.rotations -= vb;
    s.u.pop_back();
    s.v.pop_back();
  }
  return std::nullopt;
}

}  // namespace

std::optional<SweepCounterexample> sweep_self_intersections(const FingerSpec& spec,
                                                            int depth, double tol) {
  validate_finger_spec(spec);
  SweepState s;
  s.spec = &spec;
  s.depth = depth;
  s.tol = tol;
  s.junctions.push_back({0.0, 0.0});
  s.phase.resize(static_cast<std::size_t>(depth) + 1);
  s.inv_pow.resize(static_cast<std::size_t>(depth) + 1);
  s.inv_pow[0] = 1.0;
  for (int n = 0; n <= depth; ++n) {
    s.phase[static_cast<std::size_t>(n)] = std::polar(1.0, -spec.omega * n);
    if (n > 0) {
      s.inv_pow[static_cast<std::size_t>(n)] = s.inv_pow[static_cast<std::size_t>(n - 1)] / spec.rho;
    }
  }
  return sweep(s, 0);
}

}  // namespace phalanx
