#include "skein/geometry.hpp"

#include <algorithm>
#include <tuple>

namespace skein {

namespace {

constexpr long long kRayDepth = 1000;

struct ScheduleParams {
  int r, h;
};
constexpr ScheduleParams kSchedules[kScheduleCount] = {
    {8, 6}, {9, 7}, {12, 9}, {16, 5}, {10, 7}};

Rat cross2(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }

Pt sub(const Pt& a, const Pt& b) { return Pt{a.x - b.x, a.y - b.y}; }

struct SegHit {
  bool hit = false;
  bool degenerate = false;  // parallel overlap or endpoint incidence
  Rat t, u;                 // parameters along the two segments
  Pt p;
};

SegHit intersect_segments(const Pt& p1, const Pt& p2, const Pt& q1, const Pt& q2) {
  SegHit res;
  const Pt d1 = sub(p2, p1), d2 = sub(q2, q1);
  const Rat den = cross2(d1, d2);
  if (den == 0) {
    // Parallel: degenerate only if collinear and overlapping.
    if (cross2(sub(q1, p1), d1) != 0) return res;
    auto proj = [&](const Pt& p) {
      return d1.x != 0 ? (p.x - p1.x) / d1.x : (p.y - p1.y) / d1.y;
    };
    Rat a = proj(q1), b = proj(q2);
    if (a > b) std::swap(a, b);
    if (b < 0 || a > 1) return res;
    res.degenerate = true;
    return res;
  }
  const Rat t = cross2(sub(q1, p1), d2) / den;
  const Rat u = cross2(sub(q1, p1), d1) / den;
  if (t < 0 || t > 1 || u < 0 || u > 1) return res;
  if (t == 0 || t == 1 || u == 0 || u == 1) {
    res.degenerate = true;
    return res;
  }
  res.hit = true;
  res.t = t;
  res.u = u;
  res.p = Pt{p1.x + t * d1.x, p1.y + t * d1.y};
  return res;
}

bool point_on_segment(const Pt& p, const Pt& a, const Pt& b) {
  if (cross2(sub(b, a), sub(p, a)) != 0) return false;
  const Rat lox = std::min(a.x, b.x), hix = std::max(a.x, b.x);
  const Rat loy = std::min(a.y, b.y), hiy = std::max(a.y, b.y);
  return p.x >= lox && p.x <= hix && p.y >= loy && p.y <= hiy;
}

struct RawEvent {
  int seg;
  Rat t;
  GeomEvent ev;
};

}  // namespace

Word Diagram::letters_of_curve(int c) const {
  Word w;
  for (const auto& e : events[c])
    if (e.letter != 0) w.push_back(e.letter);
  return w;
}

Polyline standard_curve(const std::vector<int>& subset, int level, int variant,
                        int retry) {
  if (subset.empty()) throw InternalError("standard_curve: empty subset");
  if (variant < 0 || variant >= kScheduleCount)
    throw InternalError("standard_curve: bad schedule variant");
  const auto [r, h] = kSchedules[variant];
  Rat s(1);
  for (int i = 1; i < level; ++i) s /= r;
  const Rat H = Rat(h) * s;
  const Rat B = s;
  Rat W = Rat(1, 4) + Rat(1, 4 * (level + 2 + variant));
  Rat w = Rat(1, 8) + Rat(1, 8 * (level + 2 + variant));
  if (retry > 0) {
    W *= Rat(1) + Rat(1, 1009 + 97 * retry);
    w *= Rat(1) + Rat(1, 1013 + 89 * retry);
  }

  const int lo = subset.front(), hi = subset.back();
  Polyline p;
  p.level = level;
  p.subset = subset;
  p.v.push_back(Pt{Rat(lo) - W, -H});
  size_t next = 1;  // index into subset
  for (int v = lo + 1; v < hi; ++v) {
    if (next < subset.size() && subset[next] == v) {
      ++next;
      continue;
    }
    p.v.push_back(Pt{Rat(v) - w, -H});
    p.v.push_back(Pt{Rat(v), B});
    p.v.push_back(Pt{Rat(v) + w, -H});
  }
  p.v.push_back(Pt{Rat(hi) + W, -H});
  p.v.push_back(Pt{Rat(hi) + W, H});
  p.v.push_back(Pt{Rat(lo) - W, H});
  return p;
}

Diagram stack(const std::vector<std::vector<int>>& factors, int n, int variant) {
  for (const auto& S : factors) {
    if (S.empty()) throw InternalError("stack: empty factor");
    for (size_t i = 0; i < S.size(); ++i) {
      if (S[i] < 1 || S[i] > n || (i > 0 && S[i] <= S[i - 1]))
        throw InternalError("stack: factor is not a strictly increasing puncture set");
    }
  }

  for (int retry = 0; retry <= 8; ++retry) {
    Diagram d;
    d.n = n;
    for (size_t i = 0; i < factors.size(); ++i)
      d.curves.push_back(standard_curve(factors[i], int(i) + 1, variant, retry));

    bool generic = true;

    // Vertices must avoid rays, punctures, and other curves.
    for (const auto& c : d.curves) {
      for (const auto& pt : c.v) {
        if (boost::multiprecision::denominator(pt.x) == 1) {
          const Rat xv = pt.x;
          if (xv >= 1 && xv <= n && pt.y <= 0) generic = false;
        }
      }
      if (!generic) break;
    }

    struct SegRef {
      int curve, seg;
      Pt a, b;
    };
    std::vector<SegRef> segs;
    if (generic) {
      for (size_t c = 0; c < d.curves.size(); ++c) {
        const auto& poly = d.curves[c].v;
        for (size_t i = 0; i < poly.size(); ++i)
          segs.push_back(SegRef{int(c), int(i), poly[i], poly[(i + 1) % poly.size()]});
      }
      // No segment may contain a puncture.
      for (const auto& s : segs) {
        for (int v = 1; v <= n && generic; ++v)
          if (point_on_segment(Pt{Rat(v), Rat(0)}, s.a, s.b)) generic = false;
        if (!generic) break;
      }
    }

    struct RawCrossing {
      Pt p;
      int ca, sa, cb, sb;  // curve/segment of each participant
      Rat ta, tb;
    };
    std::vector<RawCrossing> raw;
    for (size_t i = 0; i < segs.size() && generic; ++i) {
      for (size_t j = i + 1; j < segs.size() && generic; ++j) {
        const auto& A = segs[i];
        const auto& B = segs[j];
        if (A.curve == B.curve) {
          // Adjacent segments share exactly one endpoint; others must miss.
          const int m = int(d.curves[A.curve].v.size());
          const bool adjacent =
              (A.seg + 1) % m == B.seg || (B.seg + 1) % m == A.seg;
          if (adjacent) continue;
          const SegHit hit = intersect_segments(A.a, A.b, B.a, B.b);
          if (hit.hit || hit.degenerate) generic = false;
          continue;
        }
        const SegHit hit = intersect_segments(A.a, A.b, B.a, B.b);
        if (hit.degenerate) {
          generic = false;
          continue;
        }
        if (!hit.hit) continue;
        // Crossings may not land on a ray (integer x at or below the axis).
        if (boost::multiprecision::denominator(hit.p.x) == 1) {
          const Rat xv = hit.p.x;
          if (xv >= 1 && xv <= n && hit.p.y <= 0) {
            generic = false;
            continue;
          }
        }
        raw.push_back(RawCrossing{hit.p, A.curve, A.seg, B.curve, B.seg, hit.t, hit.u});
      }
    }

    if (generic) {
      // No triple points.
      for (size_t i = 0; i < raw.size() && generic; ++i)
        for (size_t j = i + 1; j < raw.size() && generic; ++j)
          if (raw[i].p.x == raw[j].p.x && raw[i].p.y == raw[j].p.y) generic = false;
    }

    if (!generic) continue;

    std::sort(raw.begin(), raw.end(), [](const RawCrossing& a, const RawCrossing& b) {
      return std::tie(a.p.x, a.p.y) < std::tie(b.p.x, b.p.y);
    });

    std::vector<std::vector<RawEvent>> per_curve(d.curves.size());
    for (size_t k = 0; k < raw.size(); ++k) {
      const auto& rc = raw[k];
      Crossing cr;
      cr.p = rc.p;
      int ca = rc.ca, cb = rc.cb, sa = rc.sa, sb = rc.sb;
      Rat ta = rc.ta, tb = rc.tb;
      if (d.curves[ca].level > d.curves[cb].level) {
        std::swap(ca, cb);
        std::swap(sa, sb);
        std::swap(ta, tb);
      }
      cr.over_curve = ca;
      cr.under_curve = cb;
      const auto& pa = d.curves[ca].v;
      const auto& pb = d.curves[cb].v;
      const Pt da = sub(pa[(sa + 1) % pa.size()], pa[sa]);
      const Pt db = sub(pb[(sb + 1) % pb.size()], pb[sb]);
      cr.aligned = cross2(da, db) > 0;
      d.crossings.push_back(cr);
      per_curve[ca].push_back(RawEvent{sa, ta, GeomEvent{0, int(k)}});
      per_curve[cb].push_back(RawEvent{sb, tb, GeomEvent{0, int(k)}});
    }

    // Ray letters.
    for (size_t c = 0; c < d.curves.size(); ++c) {
      const auto& poly = d.curves[c].v;
      for (size_t i = 0; i < poly.size(); ++i) {
        const Pt& a = poly[i];
        const Pt& b = poly[(i + 1) % poly.size()];
        if (a.x == b.x) continue;
        for (int v = 1; v <= n; ++v) {
          const Rat xv(v);
          if (!((a.x < xv && xv < b.x) || (b.x < xv && xv < a.x))) continue;
          const Rat t = (xv - a.x) / (b.x - a.x);
          const Rat y = a.y + t * (b.y - a.y);
          if (y >= 0 || y <= Rat(-kRayDepth)) continue;
          per_curve[c].push_back(
              RawEvent{int(i), t, GeomEvent{b.x > a.x ? v : -v, -1}});
        }
      }
    }

    d.events.resize(d.curves.size());
    for (size_t c = 0; c < d.curves.size(); ++c) {
      auto& evs = per_curve[c];
      std::sort(evs.begin(), evs.end(), [](const RawEvent& a, const RawEvent& b) {
        return std::tie(a.seg, a.t) < std::tie(b.seg, b.t);
      });
      for (const auto& e : evs) d.events[c].push_back(e.ev);
    }
    return d;
  }
  throw InternalError("stack: genericity retries exhausted");
}

}  // namespace skein
