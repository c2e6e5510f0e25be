#include "spectral_twins/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spectral_twins/errors.hpp"
#include "spectral_twins/spectra.hpp"

namespace spectral_twins {

static void require_metric_usable(const WeightedGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 0)
      throw Error(Err::BadRange, "metric graph has isolated vertex " + std::to_string(v + 1), v);
}

MetricGraph metric_graph(const WeightedGraph& g, std::vector<double> lengths) {
  if (lengths.size() != g.edges().size())
    throw Error(Err::LengthMismatch, "need one length per edge");
  for (size_t i = 0; i < lengths.size(); ++i)
    if (!(lengths[i] > 0.0))
      throw Error(Err::NonPositiveWeight, "edge " + std::to_string(i) + " has non-positive length",
                  static_cast<int>(i));
  MetricGraph mg{g, std::move(lengths), 0.0};
  for (double l : mg.lengths) mg.total_length += l;
  return mg;
}

MetricGraph metric_from_weighted(const WeightedGraph& g) {
  std::vector<double> lengths;
  lengths.reserve(g.edges().size());
  for (const Edge& e : g.edges()) lengths.push_back(e.w);
  return metric_graph(g, std::move(lengths));
}

double edge_eval(double phi_i, double phi_j, double length, double k, double x) {
  if (x < 0.0 || x > length) throw Error(Err::BadRange, "x outside [0, L]");
  const double s = std::sin(k * length);
  if (std::fabs(s) < tol::kPoleTol)
    throw Error(Err::EdgePole, "sin(kL) vanishes; edge ansatz invalid");
  return (phi_i * std::sin(k * (length - x)) + phi_j * std::sin(k * x)) / s;
}

Matrix vertex_secular_matrix(const MetricGraph& mg, double k) {
  require_metric_usable(mg.underlying);
  const auto& edges = mg.underlying.edges();

  std::string offenders;
  std::vector<double> sines(edges.size()), cosines(edges.size());
  for (size_t e = 0; e < edges.size(); ++e) {
    sines[e] = std::sin(k * mg.lengths[e]);
    cosines[e] = std::cos(k * mg.lengths[e]);
    if (std::fabs(sines[e]) < tol::kPoleTol) {
      if (!offenders.empty()) offenders += ", ";
      offenders += std::to_string(e);
    }
  }
  if (!offenders.empty())
    throw Error(Err::AtPole, "sin(kL_e) vanishes on edge(s) " + offenders);

  const int n = mg.underlying.vertex_count();
  Matrix m(n);
  for (size_t e = 0; e < edges.size(); ++e) {
    const double cot = cosines[e] / sines[e];
    const double csc = 1.0 / sines[e];
    m(edges[e].u, edges[e].u) += cot;
    m(edges[e].v, edges[e].v) += cot;
    m(edges[e].u, edges[e].v) = -csc;
    m(edges[e].v, edges[e].u) = -csc;
  }
  return m;
}

Matrix reduced_secular_7_1(double a, double b, double c, double k, int variant) {
  if (variant != 1 && variant != 2) throw Error(Err::BadRange, "variant must be 1 or 2");
  if (variant == 2) std::swap(b, c);

  const double sa = std::sin(k * a), sb = std::sin(k * b), sc = std::sin(k * c);
  const double s2a = std::sin(2.0 * k * a), s2b = std::sin(2.0 * k * b),
               s2c = std::sin(2.0 * k * c);
  for (double s : {sa, sb, sc, s2a, s2b, s2c})
    if (std::fabs(s) < tol::kPoleTol)
      throw Error(Err::AtPole, "reduced secular matrix evaluated at a pole");

  const double c2a = std::cos(2.0 * k * a), c2b = std::cos(2.0 * k * b),
               c2c = std::cos(2.0 * k * c);
  const double ca = std::cos(k * a), cb = std::cos(k * b), cc = std::cos(k * c);

  Matrix m(3);
  m(0, 0) = 2.0 * c2c / s2c + cb / sb;
  m(1, 1) = 2.0 * c2a / s2a + cc / sc;
  m(2, 2) = 2.0 * c2b / s2b + ca / sa;
  m(0, 1) = m(1, 0) = -1.0 / sc;
  m(0, 2) = m(2, 0) = -1.0 / sb;
  m(1, 2) = m(2, 1) = -1.0 / sa;
  return m;
}

Matrix schur_complement_interior(const Matrix& m, std::span<const int> interior,
                                 std::span<const int> boundary) {
  const int ni = static_cast<int>(interior.size());
  const int nb = static_cast<int>(boundary.size());

  Matrix result(ni);
  for (int i = 0; i < ni; ++i)
    for (int j = 0; j < ni; ++j) result(i, j) = m(interior[i], interior[j]);

  if (nb == 0) return result;

  Matrix m_bb(nb);
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) m_bb(i, j) = m(boundary[i], boundary[j]);

  const LuDecomposition f = lu_factor(m_bb);
  if (f.singular) throw Error(Err::AtPole, "boundary block of the secular matrix is singular");

  std::vector<double> rhs(nb), sol;
  for (int j = 0; j < ni; ++j) {
    for (int i = 0; i < nb; ++i) rhs[i] = m(boundary[i], interior[j]);
    sol = lu_solve(f, rhs);
    for (int i = 0; i < ni; ++i) {
      double dot = 0.0;
      for (int r = 0; r < nb; ++r) dot += m(interior[i], boundary[r]) * sol[r];
      result(i, j) -= dot;
    }
  }
  return result;
}

// det(M(k)) * prod_e sin(kL_e), evaluated as det(R)/prod_e sin(kL_e) where R
// is M with row v multiplied by prod_{e at v} sin(kL_e). R's entries are
// plain sums of sine/cosine products, so no cot or csc is ever formed.
double regularized_secular(const MetricGraph& mg, double k) {
  require_metric_usable(mg.underlying);
  const auto& g = mg.underlying;
  const auto& edges = g.edges();
  const int n = g.vertex_count();

  std::vector<double> sines(edges.size()), cosines(edges.size());
  double denom = 1.0;
  for (size_t e = 0; e < edges.size(); ++e) {
    sines[e] = std::sin(k * mg.lengths[e]);
    cosines[e] = std::cos(k * mg.lengths[e]);
    denom *= sines[e];
  }
  if (denom == 0.0) {
    // exact removable point; step one ulp off it
    return regularized_secular(mg, std::nextafter(k, k + 1.0));
  }

  Matrix r(n);
  for (int v = 0; v < n; ++v) {
    const auto& inc = g.incident(v);
    double diag = 0.0;
    for (size_t e1 = 0; e1 < inc.size(); ++e1) {
      double term = cosines[inc[e1].edge_index];
      for (size_t e2 = 0; e2 < inc.size(); ++e2)
        if (e2 != e1) term *= sines[inc[e2].edge_index];
      diag += term;
    }
    r(v, v) = diag;
    for (size_t e1 = 0; e1 < inc.size(); ++e1) {
      double off = -1.0;
      for (size_t e2 = 0; e2 < inc.size(); ++e2)
        if (e2 != e1) off *= sines[inc[e2].edge_index];
      r(v, inc[e1].neighbor) = off;
    }
  }
  return determinant(r) / denom;
}

// det(A(k)) * sin(2ka) sin(2kb) sin(2kc) via the row-cleared matrix: row i of
// A times sin(2k x_i) sin(k y_i) is entire, and the product of the three row
// factors is the regularizer times sin(ka) sin(kb) sin(kc).
double regularized_secular_7_1(double a, double b, double c, double k, int variant) {
  if (variant != 1 && variant != 2) throw Error(Err::BadRange, "variant must be 1 or 2");
  if (variant == 2) std::swap(b, c);

  const double sa = std::sin(k * a), sb = std::sin(k * b), sc = std::sin(k * c);
  const double ca = std::cos(k * a), cb = std::cos(k * b), cc = std::cos(k * c);
  const double s2a = std::sin(2.0 * k * a), s2b = std::sin(2.0 * k * b),
               s2c = std::sin(2.0 * k * c);
  const double c2a = std::cos(2.0 * k * a), c2b = std::cos(2.0 * k * b),
               c2c = std::cos(2.0 * k * c);

  const double denom = sa * sb * sc;
  if (denom == 0.0)
    return regularized_secular_7_1(a, b, c, std::nextafter(k, k + 1.0), 1);

  Matrix r(3);
  r(0, 0) = 2.0 * c2c * sb + cb * s2c;
  r(0, 1) = -2.0 * cc * sb;
  r(0, 2) = -s2c;
  r(1, 0) = -s2a;
  r(1, 1) = 2.0 * c2a * sc + cc * s2a;
  r(1, 2) = -2.0 * ca * sc;
  r(2, 0) = -2.0 * cb * sa;
  r(2, 1) = -s2b;
  r(2, 2) = 2.0 * c2b * sa + ca * s2b;
  return determinant(r) / denom;
}

static void refine_bisection(const std::function<double(double)>& f, double lo, double hi,
                             double f_lo, double root_tol, double& root) {
  while (hi - lo > root_tol) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // interval at floating-point resolution
    const double f_mid = f(mid);
    if (f_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((f_lo < 0.0) == (f_mid < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  root = 0.5 * (lo + hi);
}

// Zeros of sin(k L_e) inside (k_min, k_max), ascending, deduplicated. The
// edge ansatz degenerates at these k: eigenfunctions vanishing on vertices
// live there and the secular determinant cannot see them.
static std::vector<double> edge_sine_zeros(const std::vector<double>& edge_lengths, double k_min,
                                           double k_max) {
  std::vector<double> zeros;
  for (double length : edge_lengths) {
    const double pi = 3.14159265358979323846;
    for (long n = static_cast<long>(std::ceil(k_min * length / pi)); ; ++n) {
      if (n <= 0) continue;
      const double k = n * pi / length;
      if (k >= k_max) break;
      if (k > k_min) zeros.push_back(k);
    }
  }
  std::sort(zeros.begin(), zeros.end());
  std::vector<double> out;
  for (double z : zeros)
    if (out.empty() || z - out.back() > 1e-12) out.push_back(z);
  return out;
}

SecularScan find_roots(const std::function<double(double)>& h,
                       const std::vector<double>& edge_lengths, double k_min, double k_max,
                       double grid_step, double root_tol) {
  if (!(k_min > 0.0) || !(k_max > k_min)) throw Error(Err::BadRange, "need 0 < k_min < k_max");
  if (!(grid_step > 0.0) || grid_step > (k_max - k_min))
    throw Error(Err::BadRange, "grid_step must lie in (0, k_max - k_min]");
  if (!(root_tol > 0.0)) throw Error(Err::BadRange, "root_tol must be positive");

  const int steps = static_cast<int>(std::ceil((k_max - k_min) / grid_step));
  std::vector<double> ks(steps + 1), values(steps + 1);
  for (int i = 0; i <= steps; ++i) {
    ks[i] = i == steps ? k_max : k_min + i * grid_step;
    values[i] = h(ks[i]);
  }

  const std::vector<double> poles = edge_sine_zeros(edge_lengths, k_min, k_max);
  auto poles_in = [&](double lo, double hi) {
    std::vector<double> inside;
    for (double p : poles)
      if (p > lo && p < hi) inside.push_back(p);
    return inside;
  };

  SecularScan scan;
  scan.k_min = k_min;
  scan.k_max = k_max;
  scan.grid_step = grid_step;
  for (double p : poles) scan.flagged.push_back({p, FlaggedCandidate::Reason::EdgeSinePole});

  // Sign-change brackets, refined by bisection. Near an edge-sine zero the
  // regularized determinant is a 0/0 ratio whose floating-point sign is
  // noise, so a bracket containing such a point is split into pole-free
  // segments first; a crossing confined to the pole neighborhood belongs to
  // the flagged candidate, not to the root list.
  for (int i = 1; i <= steps; ++i) {
    if (values[i] == 0.0 && i < steps && values[i - 1] * values[i + 1] < 0.0) {
      // exact zero on the grid; both neighboring cells miss the sign change
      bool at_pole = false;
      for (double p : poles) at_pole |= std::fabs(ks[i] - p) < 0.5 * grid_step;
      if (!at_pole) scan.roots.push_back(ks[i]);
      continue;
    }
    if (!(values[i - 1] * values[i] < 0.0)) continue;
    double lo = ks[i - 1], hi = ks[i];
    double f_lo = values[i - 1];

    const std::vector<double> inside = poles_in(lo, hi);
    double root = std::numeric_limits<double>::quiet_NaN();
    if (inside.empty()) {
      refine_bisection(h, lo, hi, f_lo, root_tol, root);
    } else {
      const double margin = 0.4 * (hi - lo) / static_cast<double>(inside.size());
      bool found_segment = false;
      double seg_lo = lo, f_seg_lo = f_lo;
      for (double p : inside) {
        const double seg_hi = std::max(seg_lo, p - margin);
        const double f_seg_hi = h(seg_hi);
        if (f_seg_lo * f_seg_hi < 0.0) {
          refine_bisection(h, seg_lo, seg_hi, f_seg_lo, root_tol, root);
          found_segment = true;
          break;
        }
        seg_lo = std::min(hi, p + margin);
        f_seg_lo = h(seg_lo);
      }
      if (!found_segment && std::isnan(root)) {
        if (f_seg_lo * values[i] < 0.0) {
          refine_bisection(h, seg_lo, hi, f_seg_lo, root_tol, root);
        }
        // otherwise the sign flip happened inside a pole neighborhood and the
        // pole is already flagged
      }
    }
    if (std::isnan(root) || root <= k_min || root >= k_max) continue;
    // Below half a grid step from an edge-sine zero a crossing cannot be
    // told apart from the 0/0 noise around the pole; leave it flagged.
    bool at_pole = false;
    for (double p : poles) at_pole |= std::fabs(root - p) < 0.5 * grid_step;
    for (double length : edge_lengths)
      at_pole |= std::fabs(std::sin(root * length)) < tol::kPoleTol;
    if (!at_pole) scan.roots.push_back(root);
  }

  // |h| dips without a sign change: possible double roots. Candidates are
  // refined by bisecting a central-difference derivative, then kept when the
  // refined dip value sits below dip_tol times the local |h| scale.
  const int window = std::max(25, static_cast<int>(std::llround(1.0 / grid_step)));
  for (int i = 1; i < steps; ++i) {
    const bool same_sign = values[i - 1] * values[i] > 0.0 && values[i] * values[i + 1] > 0.0;
    if (!same_sign) continue;
    const double mag = std::fabs(values[i]);
    if (mag >= std::fabs(values[i - 1]) || mag > std::fabs(values[i + 1])) continue;

    bool near_pole = false;
    for (double p : poles) near_pole |= std::fabs(p - ks[i]) < 2.0 * grid_step;
    if (near_pole) continue;

    double local_scale = 0.0;
    for (int j = std::max(0, i - window); j <= std::min(steps, i + window); ++j)
      local_scale = std::max(local_scale, std::fabs(values[j]));
    if (mag >= 1e-3 * local_scale) continue;  // coarse pre-filter before refining

    const double delta = std::max(1e-7, grid_step * 1e-3);
    auto derivative = [&](double k) { return (h(k + delta) - h(k - delta)) / (2.0 * delta); };
    const double d_lo = derivative(ks[i - 1]);
    const double d_hi = derivative(ks[i + 1]);
    double dip = ks[i];
    if (d_lo * d_hi < 0.0) refine_bisection(derivative, ks[i - 1], ks[i + 1], d_lo, root_tol, dip);
    if (std::fabs(h(dip)) < tol::kDipFactor * local_scale)
      scan.flagged.push_back({dip, FlaggedCandidate::Reason::DoubleRootDip});
  }

  std::sort(scan.flagged.begin(), scan.flagged.end(),
            [](const FlaggedCandidate& x, const FlaggedCandidate& y) { return x.k < y.k; });

  scan.min_root_spacing = std::numeric_limits<double>::infinity();
  for (size_t i = 1; i < scan.roots.size(); ++i)
    scan.min_root_spacing = std::min(scan.min_root_spacing, scan.roots[i] - scan.roots[i - 1]);
  scan.missed_root_risk = scan.roots.size() < 2 ? 0.0 : grid_step / scan.min_root_spacing;
  return scan;
}

SecularScan find_roots(const MetricGraph& mg, double k_min, double k_max, double grid_step,
                       double root_tol) {
  return find_roots([&](double k) { return regularized_secular(mg, k); }, mg.lengths, k_min,
                    k_max, grid_step, root_tol);
}

SecularScan find_roots_reduced_7_1(double a, double b, double c, int variant, double k_min,
                                   double k_max, double grid_step, double root_tol) {
  if (variant != 1 && variant != 2) throw Error(Err::BadRange, "variant must be 1 or 2");
  return find_roots([=](double k) { return regularized_secular_7_1(a, b, c, k, variant); },
                    {a, b, c}, k_min, k_max, grid_step, root_tol);
}

std::vector<double> secular_null_vector(const Matrix& a) {
  const SpectralDecomposition dec = eig_sym(a);
  int best = 0;
  for (size_t i = 1; i < dec.eigenvalues.size(); ++i)
    if (std::fabs(dec.eigenvalues[i]) < std::fabs(dec.eigenvalues[best]))
      best = static_cast<int>(i);
  std::vector<double> v = dec.eigenvector(best);
  double max_abs = 0.0;
  for (double x : v) max_abs = std::max(max_abs, std::fabs(x));
  for (double& x : v) x /= max_abs;
  return v;
}

std::vector<double> reconstruct_boundary_7_1(double a, double b, double c, int variant, double k,
                                             const std::vector<double>& phi_interior) {
  if (variant != 1 && variant != 2) throw Error(Err::BadRange, "variant must be 1 or 2");
  if (phi_interior.size() != 3)
    throw Error(Err::LengthMismatch, "need the three interior vertex values");
  if (variant == 2) std::swap(b, c);

  // pendant lengths per boundary vertex: (c, a, b) after the variant swap
  const double pendant[3] = {c, a, b};
  std::vector<double> phi(6, 0.0);
  for (int i = 0; i < 3; ++i) {
    const double cosine = std::cos(k * pendant[i]);
    if (std::fabs(cosine) < tol::kPoleTol)
      throw Error(Err::AtPole,
                  "cos(k * pendant length) vanishes; boundary reconstruction singular", i);
    phi[i] = phi_interior[i] / cosine;
    phi[3 + i] = phi_interior[i];
  }
  return phi;
}

double vertex_residual(const MetricGraph& mg, double k, const std::vector<double>& phi) {
  const auto& g = mg.underlying;
  const int n = g.vertex_count();
  if (static_cast<int>(phi.size()) != n)
    throw Error(Err::LengthMismatch, "vertex value vector length mismatch");

  double max_abs = 0.0;
  for (double x : phi) max_abs = std::max(max_abs, std::fabs(x));
  if (max_abs == 0.0) return 0.0;

  double worst = 0.0;
  for (int v = 0; v < n; ++v) {
    double sum = 0.0;
    for (const auto& inc : g.incident(v)) {
      const double length = mg.lengths[inc.edge_index];
      const double s = std::sin(k * length);
      if (std::fabs(s) < tol::kPoleTol)
        throw Error(Err::EdgePole, "sin(kL) vanishes on edge " + std::to_string(inc.edge_index),
                    inc.edge_index);
      // outgoing derivative of the edge ansatz at the vertex
      sum += k * (phi[inc.neighbor] / max_abs - (phi[v] / max_abs) * std::cos(k * length)) / s;
    }
    worst = std::max(worst, std::fabs(sum));
  }
  return worst;
}

}  // namespace spectral_twins
