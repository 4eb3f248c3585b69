#include "rext_cli/suites.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <Eigen/LU>

#include "rext_cli/sampling.hpp"

namespace rext::cli {

namespace {

constexpr std::uint64_t kValidateStream = 1;
constexpr std::uint64_t kParaHermitianStream = 100;
constexpr std::uint64_t kHypersurfaceStream = 200;

struct Max {
  double value = 0.0;
  void operator()(double r) { value = std::max(value, std::isnan(r) ? INFINITY : std::abs(r)); }
  void operator()(const Vec& r) { (*this)(r.size() ? r.cwiseAbs().maxCoeff() : 0.0); }
};

struct Min {
  double value = INFINITY;
  void operator()(double r) { value = std::min(value, r); }
};

const char* class_name(int id) {
  static const char* names[] = {"G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9", "G10", "G11", "G12"};
  return names[id - 1];
}

std::string join(const std::vector<std::string>& items) {
  if (items.empty()) return "none";
  std::string s;
  for (const auto& i : items) s += (s.empty() ? "" : ", ") + i;
  return s;
}

/// Agreement of a verdict over all samples.
class VerdictTally {
 public:
  void add(Verdict v) { seen_[to_string(v)] += 1; }
  std::string result() const {
    if (seen_.empty()) return "no samples";
    if (seen_.size() == 1) return seen_.begin()->first;
    return "mixed";
  }

 private:
  std::map<std::string, int> seen_;
};

/// Intersection of per-sample class memberships.
struct ClassTally {
  std::array<bool, 12> member{};
  bool started = false;
  void add(const std::array<bool, 12>& m) {
    for (int i = 0; i < 12; ++i) member[static_cast<std::size_t>(i)] = started ? member[static_cast<std::size_t>(i)] && m[static_cast<std::size_t>(i)] : m[static_cast<std::size_t>(i)];
    started = true;
  }
  std::string result() const {
    std::vector<std::string> names;
    for (int i = 0; i < 12; ++i)
      if (member[static_cast<std::size_t>(i)]) names.push_back(class_name(i + 1));
    return join(names);
  }
};

struct PartTally {
  std::string name;
  double max_abs = 0.0;
  bool zero = true, g4 = true, g5 = true, g5bar = true, g8 = true, g10 = true;
  void add(const PartSummary& p) {
    max_abs = std::max(max_abs, p.max_abs);
    zero = zero && p.zero;
    g4 = g4 && p.g4;
    g5 = g5 && p.g5;
    g5bar = g5bar && p.g5bar;
    g8 = g8 && p.g8;
    g10 = g10 && p.g10;
  }
  std::string result() const {
    if (zero) return "zero";
    std::vector<std::string> c;
    if (g4) c.emplace_back("G4");
    if (g5) c.emplace_back(g5bar ? "G5 (G5-bar)" : "G5");
    if (g8) c.emplace_back("G8");
    if (g10) c.emplace_back("G10");
    return join(c);
  }
};

void add_sample_verdicts(Run& run, VerdictTally (&named)[4], const std::vector<PartTally>& parts) {
  run.verdict("paracontact", named[0].result());
  run.verdict("para-Sasakian", named[1].result());
  run.verdict("K-paracontact", named[2].result());
  run.verdict("quasi-para-Sasakian", named[3].result());
  for (const auto& p : parts) run.verdict("part " + p.name, p.result());
}

// dV(B, A) = d_A V^B for the lifts used by the connection checks.
Mat jacobian_complete(const VectorJet& Y, const Vec& omega) {
  const int n = Y.dim();
  Mat d = Mat::Zero(2 * n, 2 * n);
  for (int h = 0; h < n; ++h)
    for (int i = 0; i < n; ++i) d(h, i) = Y.d1(h, i);
  for (int m = 0; m < n; ++m)
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s -= omega(k) * Y.d2[static_cast<std::size_t>(k)](m, i);
      d(n + m, i) = s;
      d(n + m, n + i) = -Y.d1(i, m);
    }
  return d;
}

Mat jacobian_vertical(const CovectorJet& beta) {
  const int n = beta.dim();
  Mat d = Mat::Zero(2 * n, 2 * n);
  d.block(n, 0, n, n) = beta.d1;
  return d;
}

Mat jacobian_liouville(int n) {
  Mat d = Mat::Zero(2 * n, 2 * n);
  d.block(n, n, n, n) = Mat::Identity(n, n);
  return d;
}

double lc_case_residual(const AmbientPoint& q, const Tensor3& gbar, const LcInputs& in) {
  const int n = q.dim();
  const CotangentPoint& p = q.p;
  const Vec XC = complete_lift_at(in.X, p).stacked();
  const Vec YC = complete_lift_at(in.Y, p).stacked();
  const Vec aV = vertical_lift(in.alpha.value).stacked();
  const Vec bV = vertical_lift(in.beta.value).stacked();
  const Vec W = liouville_at(p).stacked();
  const Mat dY = jacobian_complete(in.Y, p.omega);
  const Mat dB = jacobian_vertical(in.beta);
  const Mat dW = jacobian_liouville(n);
  struct Case {
    LcCase which;
    const Vec& U;
    const Vec& V;
    const Mat& dV;
  };
  const Case cases[] = {
      {LcCase::CompleteComplete, XC, YC, dY},   {LcCase::CompleteVertical, XC, bV, dB},
      {LcCase::VerticalComplete, aV, YC, dY},   {LcCase::VerticalVertical, aV, bV, dB},
      {LcCase::CompleteLiouville, XC, W, dW},   {LcCase::VerticalLiouville, aV, W, dW},
      {LcCase::LiouvilleLiouville, W, W, dW},
  };
  Max r;
  for (const auto& c : cases) r(lc_lifts(q, c.which, in).stacked() - covariant_derivative(gbar, c.U, c.V, c.dV));
  return r.value;
}

double koszul_residual(const AmbientPoint& q, const Tensor3& gbar) {
  const int N = 2 * q.dim();
  const Tensor3 dG = metric_derivative(q.conn, q.p.omega, q.prm);
  Max r;
  for (int A = 0; A < N; ++A)
    for (int B = 0; B < N; ++B)
      for (int C = 0; C < N; ++C) {
        double s = dG(A, B, C);
        for (int D = 0; D < N; ++D) s -= gbar(D, A, B) * q.G(D, C) + gbar(D, A, C) * q.G(B, D);
        r(s);
        r(gbar(A, B, C) - gbar(A, C, B));
      }
  return r.value;
}

}  // namespace

Settings Settings::from(const Scenario& s, const RunOptions& o) {
  Settings st;
  st.seed = o.seed.value_or(s.seed);
  st.points = o.points.value_or(s.count);
  st.identity = o.tol.value_or(s.tol_identity);
  st.equivalence = o.tol.value_or(s.tol_equivalence);
  return st;
}

void run_validate(const Scenario& s, const Settings& st, Report& out) {
  Run run;
  run.suite = "validate";
  Rng rng = Rng::stream(st.seed, kValidateStream);
  const AmbientSamples smp = sample_ambient(s, s.params.front(), st.points, rng);
  run.accepted = static_cast<int>(smp.points.size());
  run.rejected = smp.rejected;

  std::vector<Vec> xs;
  Max curv;
  for (const auto& p : smp.points) {
    xs.push_back(p.x);
    const auto id = curvature_identities(curvature_at(s.connection, p.x));
    curv(std::max(id.antisymmetry, id.bianchi));
  }
  run.check("connection.curvature-identities", "base/curvature-antisymmetry-and-bianchi", curv.value, st.identity);

  if (s.xi) {
    const ParallelReport par = check_parallel(s.connection, *s.xi, xs, st.identity);
    run.check("xi.parallel", "base/parallel-xi", par.max_residual, st.identity);
    if (s.f) {
      Max xf;
      for (const auto& x : xs) xf(VectorJet::at(*s.xi, x).value.dot(s.f->f.eval_jet2(x).grad));
      run.check("xi.annihilates-f", "hypersurface/xi-f-vanishes", xf.value, st.identity);
    }
  } else {
    run.notes.emplace_back("no xi: parallelism not checked");
  }
  if (s.has_hypersurface_data()) {
    for (const auto& prm : s.params)
      if (!(prm.b > 0.0)) run.notes.push_back("b = " + format_double(prm.b) + ": hypersurface checks need b > 0 and skip it");
  } else {
    run.notes.emplace_back("xi, f or t missing: hypersurface checks unavailable");
  }
  out.runs.push_back(std::move(run));
}

void run_para_hermitian(const Scenario& s, const Settings& st, Report& out) {
  const int n = s.dim;
  for (std::size_t k = 0; k < s.params.size(); ++k) {
    const RExtParams& prm = s.params[k];
    Run run;
    run.suite = "para-hermitian";
    run.params = prm;
    Rng rng = Rng::stream(st.seed, kParaHermitianStream + k);
    const AmbientSamples smp = sample_ambient(s, prm, st.points, rng);
    run.accepted = static_cast<int>(smp.points.size());
    run.rejected = smp.rejected;

    int bad_signature = 0;
    Max pairing, lc, koszul, fbar_routes, fbar_mixed, fbar_b, fbar_frame, fbar_sym, fbar_max, cyclic, delta;
    RExtParams other = prm;
    other.b = prm.b + 1.0;
    for (const auto& p : smp.points) {
      const AmbientPoint q = AmbientPoint::at(s.connection, prm, p);
      const AmbientPoint qb = AmbientPoint::at(s.connection, other, p);
      const Signature sig = signature(q.G);
      if (sig.positive != n || sig.negative != n) ++bad_signature;

      const VectorJet X = random_vector_jet(n, rng), Y = random_vector_jet(n, rng), Z = random_vector_jet(n, rng);
      const CovectorJet alpha = random_covector_jet(n, rng), beta = random_covector_jet(n, rng);
      const Mat T1 = rng.uniform_mat(n, n, -1.0, 1.0), T2 = rng.uniform_mat(n, n, -1.0, 1.0);

      const LiftVector XC = complete_lift_at(X, p), W = liouville_at(p), aV = vertical_lift(alpha.value);
      const LiftVector C1 = contracted_at(T1, p), C2 = contracted_at(T2, p);
      pairing(pair(q.G, XC, C1) - prm.a * p.omega.dot(T1 * X.value));
      pairing(pair(q.G, W, aV));
      pairing(pair(q.G, W, W));
      pairing(pair(q.G, W, C1));
      pairing(pair(q.G, C1, C2));
      pairing(pair(q.G, aV, vertical_lift(beta.value)));

      const Tensor3 gbar = lc_coords(q);
      lc(lc_case_residual(q, gbar, {X, Y, alpha, beta}));
      koszul(koszul_residual(q, gbar));

      const LiftArg args[] = {LiftArg::complete(X), LiftArg::complete(Y), LiftArg::complete(Z),
                              LiftArg::vertical(alpha), LiftArg::vertical(beta)};
      for (const auto& A : args)
        for (const auto& B : args)
          for (const auto& C : args) {
            const double direct = fbar_direct(q, A, B, C);
            fbar_routes(direct - fbar_closed(q, A, B, C));
            if (!A.is_complete() || !B.is_complete() || !C.is_complete()) fbar_mixed(direct);
            fbar_b(direct - fbar_direct(qb, A, B, C));
          }

      const Tensor3 F = fbar_coords(q);
      const Mat P = p_from(q.conn.gamma, p.omega, prm);
      const int N = 2 * n;
      for (int A = 0; A < N; ++A) {
        const LiftVector eA = LiftVector::from_stacked(Vec::Unit(N, A));
        for (int B = 0; B < N; ++B) {
          const LiftVector eB = LiftVector::from_stacked(Vec::Unit(N, B));
          for (int C = 0; C < N; ++C) {
            const LiftVector eC = LiftVector::from_stacked(Vec::Unit(N, C));
            fbar_frame(F(A, B, C) - fbar_closed(q, eA, eB, eC));
            fbar_sym(F(A, B, C) + F(A, C, B));
            double pp = 0.0;  // F(e_A, P e_B, P e_C)
            for (int D = 0; D < N; ++D)
              for (int E = 0; E < N; ++E) pp += P(D, B) * P(E, C) * F(A, D, E);
            fbar_sym(pp - F(A, B, C));
          }
        }
      }
      fbar_max(F.max_abs());
      cyclic(cyclic_residual(F));
      delta(delta_p(q));
    }
    const ApHReport aph = check_apH(s.connection, prm, smp.points, st.identity);
    const double aph_res = std::max({aph.worst.square, aph.worst.anti_isometry, aph.worst.fundamental_form});

    run.check("metric.signature", "riemann-extension/neutral-signature", bad_signature, 0.0).note =
        "residual counts samples whose signature is not (n, n)";
    run.check("metric.lift-pairings", "riemann-extension/lift-pairings", pairing.value, st.identity);
    run.check("levi-civita.koszul", "levi-civita/metric-compatible-torsion-free", koszul.value, st.identity);
    run.check("levi-civita.closed-vs-koszul", "levi-civita/lift-formulas", lc.value, st.equivalence);
    Check& ap = run.check("structure.almost-para-hermitian", "para-hermitian/axioms", aph_res, st.identity);
    ap.pass = aph.pass;
    if (!aph.pass && aph_res <= st.identity) {
      ap.note = "eigenspace ranks " + std::to_string(aph.worst.rank_plus) + ", " + std::to_string(aph.worst.rank_minus);
    }
    run.check("fbar.direct-vs-closed", "fbar/closed-form", fbar_routes.value, st.equivalence);
    run.check("fbar.frame-vs-closed", "fbar/closed-form-in-frame", fbar_frame.value, st.equivalence);
    run.check("fbar.vertical-slots-vanish", "fbar/vertical-slots", fbar_mixed.value, st.identity);
    run.check("fbar.b-independence", "fbar/independent-of-b", fbar_b.value, st.identity);
    run.check("fbar.symmetries", "fbar/antisymmetry-and-p-invariance", fbar_sym.value, st.equivalence);
    run.check("fbar.cyclic-sum", "fbar/fundamental-form-closed", cyclic.value, st.equivalence);
    run.check("structure.harmonic", "para-hermitian/harmonic-p", delta.value, st.equivalence);

    run.verdict("para-Kähler", fbar_max.value <= st.equivalence);
    run.verdict("almost para-Kähler", cyclic.value <= st.equivalence);
    run.verdict("harmonic", delta.value <= st.equivalence);
    run.notes.push_back("max |Fbar| over samples = " + format_double(fbar_max.value));
    out.runs.push_back(std::move(run));
  }
}

void run_hypersurface(const Scenario& s, const Settings& st, Report& out) {
  if (!s.has_hypersurface_data()) throw InputError("hypersurface checks need xi, f and t in the scenario");
  if (std::none_of(s.params.begin(), s.params.end(), [](const RExtParams& p) { return p.b > 0.0; })) {
    throw InputError("hypersurface checks need b > 0 in at least one params entry");
  }
  const int n = s.dim;
  const int m = 2 * n - 1;
  for (std::size_t k = 0; k < s.params.size(); ++k) {
    const RExtParams& prm = s.params[k];
    Run run;
    run.suite = "hypersurface";
    run.params = prm;
    if (!(prm.b > 0.0)) {
      run.notes.emplace_back("skipped: hypersurface checks need b > 0");
      out.runs.push_back(std::move(run));
      continue;
    }
    const HypersurfaceSpec h = s.hypersurface(prm);
    Rng rng = Rng::stream(st.seed, kHypersurfaceStream + k);
    const AmbientSamples smp = sample_surface(h, s, st.points, rng);
    run.accepted = static_cast<int>(smp.points.size());
    run.rejected = smp.rejected;

    std::vector<Vec> xs;
    Max xf, level, unit, grad_norm, grad_inverse, grad_tangent, normal_dir, structure, vertical_shape, weingarten,
        shape_sym, gauss, relation, sample_axioms, r4, r5, r10, theta, dim3, verbatim, phi_display;
    Min g5bar_min;
    Max g5bar_max;
    VerdictTally named[4];
    ClassTally classes;
    std::vector<PartTally> parts;
    const double shape_value = std::sqrt(prm.b) / (2.0 * prm.a);

    for (const auto& p : smp.points) {
      xs.push_back(p.x);
      const SurfacePoint sp = SurfacePoint::at(h, p);
      xf(sp.xi.value.dot(sp.df));
      level(ftilde(h, p) - h.t);
      unit(sp.g(sp.normal.N, sp.normal.N) + 1.0);
      const LiftVector grad = grad_ftilde(h, p);
      const double gg = sp.g(grad, grad);
      grad_norm(gg + prm.b * sp.xiV * sp.xiV / (prm.a * prm.a));
      grad_inverse(grad.stacked() - sp.q.G.fullPivLu().solve(dftilde(h, p)));
      for (int i = 0; i < m; ++i) grad_tangent(sp.g(grad, sp.tangent(i)));
      normal_dir(sp.normal.N.stacked() - grad.stacked() / std::sqrt(std::max(-gg, 0.0)));
      structure(structure_residual(h, sp).max());

      for (int i = 0; i < n - 1; ++i) {
        const LiftVector U = sp.tangent(i);
        vertical_shape((weingarten_coords(sp, U) - shape_value * U).stacked());
      }
      std::vector<LiftVector> basis, shape;
      for (int i = 0; i < m; ++i) {
        basis.push_back(sp.tangent(i));
        shape.push_back(weingarten_at(sp, basis.back()));
        weingarten((shape.back() - weingarten_coords(sp, basis.back())).stacked());
      }
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          shape_sym(sp.g(shape[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]) -
                    sp.g(basis[static_cast<std::size_t>(i)], shape[static_cast<std::size_t>(j)]));
          const LiftVector& U = basis[static_cast<std::size_t>(i)];
          const LiftVector pV = sp.phi_of(basis[static_cast<std::size_t>(j)]);
          relation(fbar_closed(sp.q, U, basis[static_cast<std::size_t>(j)], sp.normal.N) -
                   ftilde_at(sp, U, pV, sp.xibar).total() - sp.g(shape[static_cast<std::size_t>(i)], pV));
          for (int l = 0; l < m; ++l) {
            const LiftVector& Z = basis[static_cast<std::size_t>(l)];
            const FtildeParts fp = ftilde_at(sp, U, basis[static_cast<std::size_t>(j)], Z);
            const double g = ftilde_gauss(sp, U, basis[static_cast<std::size_t>(j)], Z);
            gauss(fp.total() - g);
            verbatim(fp.curvature + fp.metric + fp.hessian_verbatim - g);
          }
        }

      const VectorJet tf = tangent_field(sp, rng.uniform_vec(n, -1.0, 1.0), rng.uniform_mat(n, n, -1.0, 1.0));
      phi_display(phi_display_gap(sp, tf));

      const ACMSample sample = to_acm_sample(sp);
      sample_axioms(sample_residual(sample).max());
      r4(class_residual(sample, sample.parts[0].F, 4).value_or(INFINITY));
      r5(class_residual(sample, sample.parts[1].F, 5).value_or(INFINITY));
      r10(class_residual(sample, sample.parts[2].F, 10).value_or(INFINITY));
      theta(theta_forms(sample, sample.parts[1].F).theta.dot(sample.xibar) + (n - 1) * std::sqrt(prm.b) / prm.a);
      const double g5 = g5bar_residual(sample, sample.parts[1].F);
      g5bar_min(g5);
      g5bar_max(g5);
      if (m == 3) dim3(dim3_check(sample, st.identity).g4_part);

      classes.add(class_report(sample, st.identity).member);
      const NamedVerdicts v = named_verdicts(sample, st.identity);
      named[0].add(v.paracontact);
      named[1].add(v.para_sasakian);
      named[2].add(v.k_paracontact);
      named[3].add(v.quasi_para_sasakian);
      if (parts.empty())
        for (const auto& ps : v.parts) parts.push_back({ps.name});
      for (std::size_t i = 0; i < v.parts.size(); ++i) parts[i].add(v.parts[i]);
    }
    const ParallelReport par = check_parallel(s.connection, *s.xi, xs, st.identity);
    const ParacontactReport pc = paracontact_residual(h, smp.points, st.equivalence);

    run.check("xi.parallel", "base/parallel-xi", par.max_residual, st.identity);
    run.check("xi.annihilates-f", "hypersurface/xi-f-vanishes", xf.value, st.identity);
    run.check("surface.level-set", "hypersurface/level-set", level.value, st.identity);
    run.check("normal.unit", "hypersurface/unit-timelike-normal", unit.value, st.identity);
    run.check("gradient.norm", "hypersurface/gradient-norm", grad_norm.value, st.identity);
    run.check("gradient.metric-inverse", "hypersurface/gradient-closed-form", grad_inverse.value, st.equivalence);
    run.check("gradient.orthogonal-to-surface", "hypersurface/gradient-normal", grad_tangent.value, st.identity);
    run.check("normal.along-gradient", "hypersurface/normal-closed-form", normal_dir.value, st.identity);
    run.check("structure.axioms", "hypersurface/induced-structure", structure.value, st.identity);
    run.check("weingarten.vertical", "hypersurface/shape-on-vertical-lifts", vertical_shape.value, st.identity);
    run.check("weingarten.closed-vs-koszul", "hypersurface/shape-operator", weingarten.value, st.equivalence);
    run.check("weingarten.self-adjoint", "hypersurface/shape-symmetry", shape_sym.value, st.equivalence);
    run.check("ftilde.parts-vs-gauss", "hypersurface/gauss-formula-for-f", gauss.value, st.equivalence);
    run.check("ftilde.normal-relation", "hypersurface/fbar-on-normal", relation.value, st.equivalence);
    run.check("sample.axioms", "classifier/sample-invariants", sample_axioms.value, st.identity);
    run.check("classes.curvature-part-g4", "classifier/curvature-part-in-g4", r4.value, st.identity);
    run.check("classes.metric-part-g5", "classifier/metric-part-in-g5", r5.value, st.identity);
    run.check("classes.hessian-part-g10", "classifier/hessian-part-in-g10", r10.value, st.identity);
    run.check("classes.metric-part-theta", "classifier/metric-part-theta-at-xibar", theta.value, st.equivalence);
    if (m == 3) run.check("dim3.no-g4-part", "classifier/dimension-three", dim3.value, st.identity);

    if (pc.b_is_4a2) {
      run.check("paracontact.b-equals-4a2", "hypersurface/paracontact-iff", pc.max_residual, st.equivalence);
      run.check("classes.metric-part-g5bar", "classifier/g5bar-iff", g5bar_max.value, st.identity);
    } else {
      Check& c = run.check("paracontact.b-not-4a2", "hypersurface/paracontact-iff", pc.min_ratio, 0.1);
      c.pass = pc.min_ratio >= 0.1;
      c.note = "residual is min |phi-form - d eta| / scale and must stay >= tolerance";
      Check& g = run.check("classes.metric-part-not-g5bar", "classifier/g5bar-iff", g5bar_min.value, st.identity);
      g.pass = g5bar_min.value > st.identity;
      g.note = "residual is min |theta(xibar) + (m - 1)| and must exceed tolerance";
    }

    Check& vb = run.check("compare.hessian-part-verbatim", "hypersurface/hessian-part-display", verbatim.value,
                          st.equivalence);
    vb.gating = false;
    vb.note = "hessian part from the (Xf)(Zf) terms alone, against the Gauss route";
    Check& pd = run.check("compare.phi-display", "hypersurface/phi-display", phi_display.value, st.equivalence);
    pd.gating = false;
    pd.note = "displayed closed form of phi on tangent complete lifts, against P - N eta";

    run.verdict("paracontact (d eta)", pc.paracontact);
    add_sample_verdicts(run, named, parts);
    run.verdict("classes of F", classes.result());
    out.runs.push_back(std::move(run));
  }
}

void run_classify(const ACMSample& sample, const Settings& st, Report& out) {
  Run run;
  run.suite = "classify";
  run.accepted = 1;
  const SampleResidual sr = sample_residual(sample);
  Check& ax = run.check("sample.axioms", "classifier/sample-invariants", sr.max(), st.identity);
  if (sr.phi_rank != sample.m - 1) {
    ax.pass = false;
    ax.note = "phi has rank " + std::to_string(sr.phi_rank) + ", expected m - 1";
  }
  if (sample.m == 3) {
    run.check("dim3.no-g4-part", "classifier/dimension-three", dim3_check(sample, st.identity).g4_part, st.identity);
  }
  const ClassReport cr = class_report(sample, st.identity);
  for (int id = 1; id <= 12; ++id) {
    const auto& r = cr.residual[static_cast<std::size_t>(id - 1)];
    run.verdict(class_name(id), r ? (cr.member[static_cast<std::size_t>(id - 1)] ? "true" : "false") : "not applicable");
    if (r) run.notes.push_back(std::string(class_name(id)) + " residual = " + format_double(*r));
  }
  run.verdict("G5-bar", cr.g5bar_member);
  run.notes.push_back("theta(xibar) = " + format_double(cr.forms.theta.dot(sample.xibar)));

  const NamedVerdicts v = named_verdicts(sample, st.identity);
  run.verdict("paracontact", to_string(v.paracontact));
  run.verdict("para-Sasakian", to_string(v.para_sasakian));
  run.verdict("K-paracontact", to_string(v.k_paracontact));
  run.verdict("quasi-para-Sasakian", to_string(v.quasi_para_sasakian));
  for (const auto& p : v.parts) {
    PartTally t{p.name};
    t.add(p);
    run.verdict("part " + p.name, t.result());
  }
  run.notes.push_back("alpha-para-Sasakian fit: alpha = " + format_double(v.alpha_para_sasakian.alpha) +
                      ", residual = " + format_double(v.alpha_para_sasakian.residual));
  run.notes.push_back("alpha-para-Kenmotsu fit: alpha = " + format_double(v.alpha_para_kenmotsu.alpha) +
                      ", residual = " + format_double(v.alpha_para_kenmotsu.residual));
  out.runs.push_back(std::move(run));
}

Report run_scenario(const std::string& subcommand, const Scenario& s, const std::string& input, const RunOptions& o) {
  const Settings st = Settings::from(s, o);
  Report r;
  r.subcommand = subcommand;
  r.input = input;
  r.scenario = s.name;
  r.seed = st.seed;
  r.points = st.points;
  r.tol_identity = st.identity;
  r.tol_equivalence = st.equivalence;
  if (subcommand == "validate") {
    run_validate(s, st, r);
  } else if (subcommand == "para-hermitian") {
    run_para_hermitian(s, st, r);
  } else if (subcommand == "hypersurface") {
    run_hypersurface(s, st, r);
  } else if (subcommand == "all") {
    run_validate(s, st, r);
    run_para_hermitian(s, st, r);
    const bool any_b = std::any_of(s.params.begin(), s.params.end(), [](const RExtParams& p) { return p.b > 0.0; });
    if (s.has_hypersurface_data() && any_b) {
      run_hypersurface(s, st, r);
    } else {
      Run skip;
      skip.suite = "hypersurface";
      skip.notes.emplace_back("skipped: needs xi, f, t and some b > 0");
      r.runs.push_back(std::move(skip));
    }
  } else {
    throw InputError("unknown subcommand " + subcommand);
  }
  return r;
}

Report run_sample(const ACMSample& sample, const std::string& input, const RunOptions& o) {
  Settings st;
  st.identity = o.tol.value_or(1e-9);
  st.equivalence = o.tol.value_or(1e-8);
  st.points = 1;
  Report r;
  r.subcommand = "classify";
  r.input = input;
  r.seed = o.seed.value_or(0);
  r.points = 1;
  r.tol_identity = st.identity;
  r.tol_equivalence = st.equivalence;
  run_classify(sample, st, r);
  return r;
}

}  // namespace rext::cli
