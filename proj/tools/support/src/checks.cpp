#include "superjac/tools/checks.hpp"

#include <chrono>
#include <map>
#include <random>
#include <sstream>

#include "superjac/sampling.hpp"

namespace superjac::checks {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

constexpr std::size_t kMaxFailuresKept = 5;

template <class Body>
Result timed(int criterion, std::string name, double limit, Body body) {
  Result r;
  r.criterion = criterion;
  r.name = std::move(name);
  r.limit_seconds = limit;
  const auto t0 = Clock::now();
  try {
    body(r);
  } catch (const Error& e) {
    r.check(false, std::string("unexpected ") + std::string(error_code_name(e.code())) + ": " + e.what());
  }
  r.seconds = since(t0);
  if (limit > 0 && r.seconds >= limit) r.check(false, "time limit exceeded");
  return r;
}

// Same-class Mumford form over the curve field.
MumfordDivisor mumford_of(const ReducedDivisor& D) {
  const FieldCtx K = D.curve().field();
  if (D.is_identity()) return mumford_identity(D.curve());
  return mumford_from_points(D).canonical(K);
}

bool shares_x(const ReducedDivisor& a, const ReducedDivisor& b) {
  const FieldCtx E = compositum(a.field(), b.field());
  const FieldCtx K = a.curve().field();
  for (const auto& P : a.points())
    for (const auto& Q : b.points())
      if (embed(P.x, E, K) == embed(Q.x, E, K)) return true;
  return false;
}

// Points of both divisors over their compositum.
std::vector<AffinePoint> joint_points(const ReducedDivisor& a, const ReducedDivisor& b) {
  const FieldCtx E = compositum(a.field(), b.field());
  const FieldCtx K = a.curve().field();
  std::vector<AffinePoint> out;
  for (const auto* D : {&a, &b})
    for (const auto& P : D->points()) out.push_back({embed(P.x, E, K), embed(P.y, E, K)});
  return out;
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s;
}

std::vector<std::string> monomial_strings(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(m.to_string());
  return out;
}

std::vector<Monomial> parse_list(const std::vector<std::string>& tokens) {
  std::vector<Monomial> out;
  for (const auto& t : tokens) out.push_back(parse_monomial(t));
  return out;
}

}  // namespace

void DegreeAudit::record(const SuperellipticCurve& c, const StepCertificate& cert) {
  ++steps;
  const int g = c.genus();
  const int bound = cert.m + g;
  const int degF = cert.F.degree();
  auto violation = [&](const std::string& what) {
    ++violations;
    if (messages.size() < kMaxFailuresKept) messages.push_back(what);
  };
  if (degF > bound)
    violation("deg F = " + std::to_string(degF) + " > " + std::to_string(bound) + " at m = " + std::to_string(cert.m));
  const auto allowed = adopted_basis(c, cert.m + 1).monomials;
  for (const auto& [key, coeff] : cert.ic.poly.terms()) {
    const Monomial mono{key.first, key.second};
    if (std::find(allowed.begin(), allowed.end(), mono) == allowed.end())
      violation("interpolation curve uses " + mono.to_string() + " outside the first " + std::to_string(cert.m + 1));
  }
  if (cert.m == 2 * g) {
    ++full_steps;
    if (degF == 3 * g) ++full_at_bound;
  }
}

PipelineOptions DegreeAudit::options(const Config& cfg) {
  PipelineOptions opt;
  opt.ext_cap = cfg.ext_cap;
  opt.seed = cfg.seed;
  opt.on_step = [this](const SuperellipticCurve& c, const StepCertificate& cert) { record(c, cert); };
  return opt;
}

void Result::check(bool ok, const std::string& what) {
  if (ok) return;
  passed = false;
  if (failures.size() < kMaxFailuresKept) failures.push_back(what);
}

std::string Result::line(bool with_time) const {
  std::ostringstream os;
  os << (passed ? "PASS" : "FAIL") << "  [" << criterion << "] " << name;
  if (with_time) {
    os << "  (" << std::fixed;
    os.precision(2);
    os << seconds << " s";
    if (limit_seconds > 0) os << " / " << limit_seconds << " s";
    os << ")";
  }
  if (!stats.empty()) os << "  " << stats.dump();
  for (const auto& f : failures) os << "\n      " << f;
  return os.str();
}

SuperellipticCurve hyperelliptic_test_curve(std::uint64_t p, int g) {
  const FieldCtx K = FieldCtx::make(p);
  std::vector<FieldElement> cs(static_cast<std::size_t>(2 * g + 2), K.zero());
  cs[0] = K.one();
  cs[1] = K.from_int(3);
  cs.back() = K.one();
  return SuperellipticCurve::make(K, 2, UniPoly(K, cs));
}

SuperellipticCurve picard_test_curve(std::uint64_t p) {
  const FieldCtx K = FieldCtx::make(p);
  return SuperellipticCurve::make(K, 3, UniPoly(K, {1, 1, 0, 0, 1}));
}

Result basis_fidelity() {
  return timed(1, "basis fidelity", 1.0, [](Result& r) {
    const std::vector<int> orders_4_13 = {0,  4,  8,  12, 13, 16, 17, 20, 21, 24, 25, 26, 28, 29, 30, 32, 33, 34, 36,
                                          37, 38, 39, 40, 41, 42, 43, 44, 45, 46, 47, 48, 49, 50, 51, 52, 53, 54, 55,
                                          57, 58, 59, 61, 62, 63, 65, 66, 67, 70, 71, 74, 75, 78, 79, 83, 87, 91};
    r.check(box_orders(4, 13) == orders_4_13, "(4,13) order list differs");
    const auto b413 = adopted_basis(4, 13, 37);
    r.check(std::vector<int>(orders_4_13.begin(), orders_4_13.begin() + 37) == b413.orders,
            "(4,13) first 2g+1 orders differ");
    // The printed monomial list repeats a block of four after x^3y^3; the
    // first 34 and the last 3 entries are compared.
    const std::vector<std::string> printed_4_13 = {
        "1",     "x",     "x^2",    "x^3",   "y",     "x^4",   "xy",     "x^5",   "x^2y",  "x^6",   "x^3y",
        "y^2",   "x^7",   "x^4y",   "xy^2",  "x^8",   "x^5y",  "x^2y^2", "x^9",   "x^6 y", "x^3 y^2", "y^3",
        "x^{10}", "x^7 y", "x^4 y^2", "x y^3", "x^{11}", "x^8 y", "x^5 y^2", "x^2 y^3", "x^{12}", "x^9 y",
        "x^6 y^2", "x^3 y^3", "x^{12}", "x^9 y", "x^6 y^2", "x^2 y^3", "x^{13}", "x^{10} y", "x^7 y^2"};
    const auto printed = parse_list(printed_4_13);
    const std::vector<Monomial> head(printed.begin(), printed.begin() + 34), tail(printed.end() - 3, printed.end());
    r.check(std::vector<Monomial>(b413.monomials.begin(), b413.monomials.begin() + 34) == head,
            "(4,13) first 34 monomials differ: " + join(monomial_strings(b413.monomials)));
    r.check(std::vector<Monomial>(b413.monomials.end() - 3, b413.monomials.end()) == tail,
            "(4,13) last 3 monomials differ");

    const auto B27 = basis_matrix(2, 7);
    const std::vector<std::vector<std::string>> want = {{"1", "x", "x^2", "x^3", "x^4"}, {"y", "yx", "", "", ""}};
    bool same = B27.rows.size() == 2 && B27.width() == 5;
    for (std::size_t j = 0; same && j < 2; ++j)
      for (std::size_t i = 0; i < 5; ++i) {
        const auto& cell = B27.rows[j][i];
        same = same && (want[j][i].empty() ? !cell : (cell && *cell == parse_monomial(want[j][i])));
      }
    r.check(same, "B_{2,7} table differs");

    r.check(semigroup_elements(3, 4, 10) == std::vector<int>{0, 3, 4, 6, 7, 8, 9, 10}, "Picard non-gaps differ");
    r.check(adopted_basis(3, 4, 7).monomials == parse_list({"1", "x", "y", "x^2", "xy", "y^2", "x^3"}),
            "Picard ordered basis differs");
    const auto g3 = adopted_basis(2, 7, 7);
    r.check(g3.monomials == parse_list({"1", "x", "x^2", "x^3", "y", "x^4", "yx"}), "genus-3 hyperelliptic list differs");
    r.check(g3.orders == std::vector<int>{0, 2, 4, 6, 7, 8, 9}, "genus-3 hyperelliptic orders differ");
    r.check(hyperelliptic_prefix_for_genus(3) == g3.monomials, "genus-3 closed-form prefix differs");
  });
}

Result gap_theorem() {
  return timed(2, "gap theorem", 1.0, [](Result& r) {
    int pairs = 0;
    for (int n = 2; n <= 5; ++n)
      for (int d = n + 1; d <= 13; ++d) {
        if (std::gcd(n, d) != 1) continue;
        ++pairs;
        const int g = superelliptic_genus(n, d);
        const auto gaps = gap_sequence(n, d);
        const std::string tag = "(" + std::to_string(n) + "," + std::to_string(d) + ")";
        r.check(static_cast<int>(gaps.size()) == g, tag + ": " + std::to_string(gaps.size()) + " gaps, g = " + std::to_string(g));
        r.check(gaps.empty() || gaps.back() <= 2 * g - 1, tag + ": gap above 2g - 1");
        r.check(gaps.empty() || gaps.front() == 1, tag + ": 1 is not a gap");
      }
    r.stats["pairs"] = pairs;
  });
}

Result cantor_equivalence(const Config& cfg, DegreeAudit& audit) {
  return timed(3, "Cantor equivalence", 0, [&](Result& r) {
    constexpr int kPairs = 500;
    constexpr double kPerConfig = 60.0;
    std::mt19937_64 rng(cfg.seed ^ 0x3ULL);
    const PipelineOptions opt = audit.options(cfg);
    for (int g : {2, 3})
      for (std::uint64_t p : {11ULL, 101ULL, 1009ULL}) {
        const auto t0 = Clock::now();
        const auto c = hyperelliptic_test_curve(p, g);
        int compared = 0, mismatched = 0, resampled = 0;
        while (compared < kPairs) {
          const auto D1 = random_divisor(c, g, rng, cfg.ext_cap);
          const auto D2 = random_divisor(c, g, rng, cfg.ext_cap);
          if (shares_x(D1, D2)) {
            ++resampled;
            continue;
          }
          ReducedDivisor S;
          try {
            S = add(D1, D2, nullptr, opt);
          } catch (const Error& e) {
            if (e.code() != ErrorCode::NonGeneric) throw;
            ++resampled;
            continue;
          }
          ++compared;
          const auto want = cantor_add(c, mumford_of(D1), mumford_of(D2)).canonical(c.field());
          if (!(mumford_of(S) == want)) {
            ++mismatched;
            r.check(false, c.to_string() + ": " + D1.to_string() + " + " + D2.to_string());
          }
        }
        const double s = since(t0);
        r.check(s < kPerConfig, "configuration g=" + std::to_string(g) + " p=" + std::to_string(p) + " over time");
        r.stats["g" + std::to_string(g) + "_p" + std::to_string(p)] = {
            {"compared", compared}, {"mismatched", mismatched}, {"resampled", resampled}, {"seconds", s}};
      }
  });
}

Result group_axioms(const Config& cfg, DegreeAudit& audit) {
  return timed(4, "group axioms (Picard)", 120.0, [&](Result& r) {
    constexpr int kTriples = 200;
    std::mt19937_64 rng(cfg.seed ^ 0x4ULL);
    const PipelineOptions opt = audit.options(cfg);
    for (std::uint64_t p : {7ULL, 11ULL}) {
      const auto c = picard_test_curve(p);
      const auto O = ReducedDivisor::identity(c);
      int done = 0, resampled = 0;
      while (done < kTriples) {
        const auto A = random_divisor(c, 3, rng, cfg.ext_cap);
        const auto B = random_divisor(c, 3, rng, cfg.ext_cap);
        const auto C = random_divisor(c, 3, rng, cfg.ext_cap);
        try {
          const std::string tag = "p=" + std::to_string(p) + " " + A.to_string();
          r.check(add(A, O, nullptr, opt) == A && add(O, A, nullptr, opt) == A, "identity fails: " + tag);
          r.check(add(A, invert(A, nullptr, opt), nullptr, opt).is_identity(), "inverse fails: " + tag);
          r.check(add(A, B, nullptr, opt) == add(B, A, nullptr, opt), "commutativity fails: " + tag);
          const auto left = add(add(A, B, nullptr, opt), C, nullptr, opt);
          const auto right = add(A, add(B, C, nullptr, opt), nullptr, opt);
          r.check(left == right, "associativity fails: " + tag);
          ++done;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NonGeneric) throw;
          ++resampled;
        }
      }
      const double rate = static_cast<double>(resampled) / (resampled + kTriples);
      r.check(rate < 0.2, "resample rate " + std::to_string(rate) + " at p=" + std::to_string(p));
      r.stats["p" + std::to_string(p)] = {{"triples", done}, {"resampled", resampled}, {"resample_rate", rate}};
    }
  });
}

Result order_annihilation(const Config& cfg, DegreeAudit& audit) {
  return timed(5, "order annihilation", 120.0, [&](Result& r) {
    constexpr int kDivisors = 20;
    std::mt19937_64 rng(cfg.seed ^ 0x5ULL);
    const PipelineOptions opt = audit.options(cfg);
    for (const auto& c : {hyperelliptic_test_curve(7, 2), picard_test_curve(7)}) {
      const BigInt N = jacobian_order(c, cfg.scan_bound);
      int done = 0, resampled = 0;
      while (done < kDivisors) {
        const int deg = 1 + done % c.genus();
        const auto D = random_divisor(c, deg, rng, cfg.ext_cap);
        try {
          r.check(scalar_mul(D, N, opt).is_identity(), N.str() + " does not annihilate " + D.to_string());
          ++done;
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NonGeneric) throw;
          ++resampled;
        }
      }
      r.stats[c.to_string()] = {{"order", N.str()}, {"divisors", done}, {"resampled", resampled}};
    }
  });
}

Result field_of_definition(const Config& cfg, DegreeAudit& audit) {
  return timed(6, "field of definition", 30.0, [&](Result& r) {
    constexpr int kPairs = 100;
    std::mt19937_64 rng(cfg.seed ^ 0x6ULL);
    const PipelineOptions opt = audit.options(cfg);
    for (const auto& c : {hyperelliptic_test_curve(101, 2), picard_test_curve(13)}) {
      const FieldCtx K = c.field();
      const FieldCtx K2 = FieldCtx::make(K.characteristic(), 2);
      int done = 0, resampled = 0;
      while (done < kPairs) {
        const auto D1 = random_divisor_with_orbits(c, {2}, rng);
        const auto D2 = random_divisor_with_orbits(c, {2}, rng);
        bool outside = true;
        for (const auto* D : {&D1, &D2})
          for (const auto& P : D->points()) outside = outside && P.x.field() == K2 && !lies_in(P.x, K);
        r.check(outside, "support not in F_{p^2} \\ F_p");
        if (shares_x(D1, D2)) {
          ++resampled;
          continue;
        }
        AddCertificate cert;
        try {
          add(D1, D2, &cert, opt);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NonGeneric) throw;
          ++resampled;
          continue;
        }
        auto over_K = [&](const UniPoly& u) {
          return std::all_of(u.coeffs().begin(), u.coeffs().end(), [&](const FieldElement& z) { return lies_in(z, K); });
        };
        r.check(over_K(cert.f3()) && over_K(cert.f4()), "f3 or f4 not over F_p: " + D1.to_string() + " + " + D2.to_string());
        ++done;
      }
      r.stats[c.to_string()] = {{"pairs", done}, {"resampled", resampled}};
    }
  });
}

Result formula_equivalences(const Config& cfg, DegreeAudit& audit) {
  return timed(7, "formula equivalences", 60.0, [&](Result& r) {
    constexpr int kSamples = 100;
    std::mt19937_64 rng(cfg.seed ^ 0x7ULL);
    const PipelineOptions opt = audit.options(cfg);

    {
      const auto c = hyperelliptic_test_curve(101, 2);
      const FieldCtx K = c.field();
      int curve_eq = 0, reduction = 0, resampled = 0;
      while (curve_eq < kSamples) {
        const auto D1 = random_divisor(c, 2, rng, cfg.ext_cap);
        const auto D2 = random_divisor(c, 2, rng, cfg.ext_cap);
        if (shares_x(D1, D2)) {
          ++resampled;
          continue;
        }
        const auto pts = joint_points(D1, D2);
        StepCertificate cert;
        Genus2Reduction red;
        try {
          reduce_opposite(c, pts, &cert, opt, "chord");
          red = genus2_reduction(c, pts);
        } catch (const Error& e) {
          if (!e.is_non_generic()) throw;
          ++resampled;
          continue;
        }
        const auto ic = genus2_curve_equation(c, pts);
        std::vector<FieldElement> coeffs;
        for (const auto& z : ic.coeffs) coeffs.push_back(embed(z, cert.working_field, K));
        r.check(coeffs == cert.ic.coeffs, "genus2_curve_equation differs from the determinant curve");
        ++curve_eq;
        r.check(red.result.embed(cert.working_field, K) == cert.residual,
                "genus2_reduction differs from the pipeline residual");
        const auto sum = cantor_add(c, mumford_of(D1), mumford_of(D2)).canonical(K);
        r.check(red.result.descend(K, K) == sum.u, "genus2_reduction differs from the Cantor u");
        ++reduction;
      }
      r.stats["genus2_curve_equation"] = curve_eq;
      r.stats["genus2_reduction"] = reduction;
      r.stats["genus2_resampled"] = resampled;
    }

    int rho_checked = 0;
    for (int g : {2, 3}) {
      const auto c = hyperelliptic_test_curve(101, g);
      int done = 0;
      while (done < kSamples) {
        const auto D1 = random_divisor(c, g, rng, cfg.ext_cap);
        const auto D2 = random_divisor(c, g, rng, cfg.ext_cap);
        if (shares_x(D1, D2)) continue;
        const auto pts = joint_points(D1, D2);
        StepCertificate cert;
        try {
          reduce_opposite(c, pts, &cert, opt, "chord");
        } catch (const Error& e) {
          if (!e.is_non_generic()) throw;
          continue;
        }
        if (cert.F.degree() != 3 * g) continue;
        std::vector<FieldElement> rho(cert.F.coeffs().rbegin(), cert.F.coeffs().rend());
        std::vector<FieldElement> xs;
        for (const auto& P : pts) xs.push_back(embed(P.x, cert.working_field, c.field()));
        r.check(reduction_poly(rho, xs) == cert.residual, "reduction_coeffs differs from exact division");
        ++done;
      }
      rho_checked += done;
    }
    r.stats["reduction_coeffs"] = rho_checked;

    int picard = 0;
    for (std::uint64_t p : {7ULL, 13ULL}) {
      const auto c = picard_test_curve(p);
      int done = 0;
      while (done < kSamples) {
        const auto D = random_divisor(c, 3, rng, cfg.ext_cap);
        try {
          const auto inv = picard_invert(D, cfg.ext_cap);
          r.check(inv.inverse == invert(D, nullptr, opt), "picard_invert differs from invert: " + D.to_string());
          r.check(add(D, inv.inverse, nullptr, opt).is_identity(), "D + picard_invert(D) is not the identity");
          ++done;
        } catch (const Error& e) {
          if (!e.is_non_generic()) throw;
        }
      }
      picard += done;
    }
    r.stats["picard_invert"] = picard;
  });
}

Result symmetric_and_lagrange(const Config& cfg) {
  return timed(8, "symmetric identity and Lagrange duality", 5.0, [&](Result& r) {
    std::mt19937_64 rng(cfg.seed ^ 0x8ULL);
    int identities = 0, bases = 0;
    for (const FieldCtx& F : {FieldCtx::make(101), FieldCtx::make(1009), FieldCtx::make(7, 3)}) {
      for (int m = 1; m <= 8; ++m)
        for (int t = 0; t < 40; ++t) {
          std::vector<FieldElement> xs;
          for (int i = 0; i < m; ++i) xs.push_back(F.random(rng));
          const auto tab = symmetric_eval(xs, 8, F);
          for (int k = 1; k <= 8; ++k) {
            FieldElement s = F.zero();
            for (int i = 0; i <= k; ++i) {
              const auto term = tab.e[static_cast<std::size_t>(i)] * tab.h[static_cast<std::size_t>(k - i)];
              s = i % 2 ? s - term : s + term;
            }
            r.check(s.is_zero(), "sum (-1)^i e_i h_{k-i} != 0");
            ++identities;
          }
          for (std::size_t i = 0; i < xs.size(); ++i)
            for (std::size_t j = i + 1; j < xs.size(); ++j)
              if (xs[i] == xs[j]) goto next;
          {
            const auto b = lagrange_basis(xs);
            for (std::size_t i = 0; i < xs.size(); ++i)
              for (std::size_t j = 0; j < xs.size(); ++j) {
                r.check(b.l[i].eval(xs[j]) == (i == j ? F.one() : F.zero()), "l_i(x_j) != delta_ij");
                if (i == j) continue;
                const UniPoly lij = b.pair(i, j);
                r.check(lij * b.q == b.l[i] * b.l[j], "l_i l_j != l_{i,j} q");
                r.check(lij == lagrange_pair_closed_form(xs, i, j), "closed form of l_{i,j} differs");
              }
            ++bases;
          }
        next:;
        }
    }
    r.stats["identities"] = identities;
    r.stats["lagrange_bases"] = bases;
  });
}

Result degree_bounds(const DegreeAudit& audit) {
  return timed(9, "degree bounds", 0, [&](Result& r) {
    r.check(audit.steps > 0, "no pipeline steps were audited");
    r.check(audit.violations == 0, std::to_string(audit.violations) + " violations");
    for (const auto& m : audit.messages) r.check(false, m);
    r.stats = {{"steps", audit.steps},
               {"steps_m_2g", audit.full_steps},
               {"deg_F_eq_3g", audit.full_at_bound},
               {"violations", audit.violations}};
  });
}

Result exhaustive_tier(const Config& cfg) {
  return timed(10, "exhaustive tier (g=2, p=5)", 300.0, [&](Result& r) {
    const auto c = hyperelliptic_test_curve(5, 2);
    PipelineOptions opt;
    opt.ext_cap = cfg.ext_cap;
    opt.seed = cfg.seed;
    const auto elems = enumerate_jacobian(c);
    const auto n = elems.size();
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[elems[i].to_string()] = i;
    auto find = [&](const MumfordDivisor& A) -> std::size_t {
      const auto it = index.find(A.canonical(c.field()).to_string());
      return it == index.end() ? n : it->second;
    };
    // Group table from Cantor, checked to be an abelian group.
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        table[i][j] = find(cantor_add(c, elems[i], elems[j]));
        r.check(table[i][j] < n, "table not closed");
      }
    if (!r.passed) return;
    const std::size_t zero = find(mumford_identity(c));
    for (std::size_t i = 0; i < n; ++i) {
      r.check(table[i][zero] == i, "table identity fails");
      r.check(std::count(table[i].begin(), table[i].end(), zero) == 1, "table inverse fails");
      for (std::size_t j = 0; j < n; ++j) {
        r.check(table[i][j] == table[j][i], "table not commutative");
        for (std::size_t k = 0; k < n; ++k) r.check(table[table[i][j]][k] == table[i][table[j][k]], "table not associative");
      }
    }
    r.check(BigInt(n) == jacobian_order(c, cfg.scan_bound), "enumeration size differs from L(1)");

    std::vector<ReducedDivisor> divs;
    for (const auto& A : elems) divs.push_back(points_from_mumford(c, A, cfg.ext_cap));
    std::size_t defined = 0, generic = 0, generic_defined = 0;
    std::map<std::string, int> undefined_by_code;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const bool is_generic = !shares_x(divs[i], divs[j]);
        generic += is_generic;
        try {
          const auto S = add(divs[i], divs[j], nullptr, opt);
          ++defined;
          generic_defined += is_generic;
          r.check(find(mumford_of(S)) == table[i][j],
                  "geometric add differs from the table at " + elems[i].to_string() + " + " + elems[j].to_string());
        } catch (const Error& e) {
          if (!e.is_non_generic()) throw;
          ++undefined_by_code[e.what()];
        }
      }
    r.stats = {{"elements", n},
               {"pairs", n * n},
               {"defined", defined},
               {"coverage", static_cast<double>(defined) / static_cast<double>(n * n)},
               {"generic_pairs", generic},
               {"generic_coverage", generic ? static_cast<double>(generic_defined) / static_cast<double>(generic) : 0.0}};
  });
}

const std::vector<std::string>& tier_names() {
  static const std::vector<std::string> names = {"basis", "cantor", "axioms", "annihilation", "formulas"};
  return names;
}

std::vector<Result> run_tier(const std::string& tier, const Config& cfg) {
  DegreeAudit audit;
  std::vector<Result> out;
  if (tier == "basis") {
    out = {basis_fidelity(), gap_theorem()};
  } else if (tier == "cantor") {
    out = {cantor_equivalence(cfg, audit), exhaustive_tier(cfg)};
  } else if (tier == "axioms") {
    out = {group_axioms(cfg, audit), field_of_definition(cfg, audit)};
  } else if (tier == "annihilation") {
    out = {order_annihilation(cfg, audit)};
  } else if (tier == "formulas") {
    out = {formula_equivalences(cfg, audit), symmetric_and_lagrange(cfg)};
  } else {
    fail(ErrorCode::PreconditionFailed, "unknown tier '" + tier + "'", "selftest");
  }
  if (audit.steps) out.push_back(degree_bounds(audit));
  return out;
}

std::vector<Result> run_acceptance(const Config& cfg) {
  DegreeAudit audit;
  std::vector<Result> out;
  out.push_back(basis_fidelity());
  out.push_back(gap_theorem());
  out.push_back(cantor_equivalence(cfg, audit));
  out.push_back(group_axioms(cfg, audit));
  out.push_back(order_annihilation(cfg, audit));
  out.push_back(field_of_definition(cfg, audit));
  out.push_back(formula_equivalences(cfg, audit));
  out.push_back(symmetric_and_lagrange(cfg));
  out.push_back(degree_bounds(audit));
  out.push_back(exhaustive_tier(cfg));
  return out;
}

}  // namespace superjac::checks
