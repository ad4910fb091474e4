#include "qindex/ore.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qindex {

void SplittingShape::sort_canonical() { std::sort(parts.begin(), parts.end()); }

long SplittingShape::sum_ef() const {
  long s = 0;
  for (const auto& part : parts) s += part.e * part.f;
  return s;
}

std::string SplittingShape::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ", ";
    os << parts[i].f << "^" << parts[i].e;
  }
  os << "]";
  return os.str();
}

SplittingShape SplittingShape::of(std::initializer_list<SplittingPart> ps) {
  SplittingShape s;
  s.parts.assign(ps);
  s.sort_canonical();
  return s;
}

IntPoly default_lift(const GFPoly& phi_bar) {
  const long p = phi_bar.p;
  if (phi_bar.degree() == 1) {
    // Monic x + c0 has root -c0; represent it by the balanced residue.
    long r = ((-phi_bar.coeff(0)) % p + p) % p;
    if (2 * r > p) r -= p;
    return IntPoly::linear_root(BigInt(r));
  }
  std::vector<BigInt> coeffs(phi_bar.c.size());
  for (size_t i = 0; i < phi_bar.c.size(); ++i) coeffs[i] = phi_bar.c[i];
  return IntPoly{std::move(coeffs)};
}

namespace {

/// Residual polynomial of one side of the phi-polygon, over F_phi.
ResidueField::Poly side_residual(const ResidueField& field, const PhiExpansion& dev,
                                 const Side& side, long p) {
  const long d = side.d();
  const long e = side.e();
  const long step_drop = side.drop() / d;
  ResidueField::Poly res(static_cast<size_t>(d) + 1, field.zero());
  for (long k = 0; k <= d; ++k) {
    const long j = side.from.x + k * e;
    const long y = side.from.y - k * step_drop;
    const IntPoly& aj = dev.coeff.at(static_cast<size_t>(j));
    if (aj.degree() < 0) continue;  // vanished coefficient: contributes 0
    // aj has Gauss valuation >= y (it lies on or above the polygon), so the
    // division is exact; the reduction is nonzero exactly when the point
    // (j, v(aj)) lies on the side.
    IntPoly scaled = aj.scalar_div_exact(pow(BigInt(p), static_cast<unsigned>(y)));
    res[static_cast<size_t>(k)] = field.reduce(scaled);
  }
  ResidueField::poly_trim(res);
  return res;
}

}  // namespace

ResidualPolynomial residual_poly(const PhiExpansion& exp, const Side& side, long p) {
  ResidueField field(gf_reduce(exp.phi, p));
  ResidueField::Poly coeffs = side_residual(field, exp, side, p);
  std::string str = field.poly_to_string(coeffs);
  return ResidualPolynomial{side, std::move(field), std::move(coeffs), std::move(str)};
}

OreResult ore_split_with_lifts(const IntPoly& F, long p, const LiftOverrides& overrides) {
  if (!F.is_monic()) throw std::domain_error("ore_split: F must be monic");
  OreResult out;
  out.p = p;

  ModFactorization fac = factor_mod_p(F, p);
  for (const auto& [phi_bar, mult] : fac.factors) {
    PhiAnalysis pa;
    pa.phi_bar = phi_bar;
    pa.multiplicity = mult;

    auto it = overrides.find(phi_bar);
    pa.lift = (it != overrides.end()) ? it->second : default_lift(phi_bar);
    if (!pa.lift.is_monic() || gf_reduce(pa.lift, p) != phi_bar)
      throw std::domain_error("ore_split: lift does not reduce to its factor");

    if (mult == 1) {
      // A simple factor carries a single unramified prime; no polygon is
      // needed for it.
      pa.parts.push_back({1, phi_bar.degree()});
      out.phis.push_back(std::move(pa));
      continue;
    }

    PhiExpansion dev = phi_expand(F, pa.lift);
    if (dev.coeff.at(0).degree() < 0) throw LiftDividesError(pa.lift);
    std::vector<Valuation> ords;
    ords.reserve(dev.coeff.size());
    for (const auto& aj : dev.coeff) ords.push_back(aj.val_p(BigInt(p)));
    pa.polygon = build_polygon(ords);
    pa.has_polygon = true;
    if (pa.polygon.principal_end_x != mult)
      throw std::logic_error("ore_split: principal polygon length disagrees with multiplicity");
    pa.index_contribution = polygon_index_contribution(pa.polygon, phi_bar.degree());

    ResidueField field(phi_bar);
    for (const auto& side : pa.polygon.principal) {
      SideAnalysis sa;
      sa.side = side;
      sa.residual = side_residual(field, dev, side, p);
      sa.residual_str = field.poly_to_string(sa.residual);
      auto factorization = field.poly_factor(sa.residual);
      sa.residual_factors = factorization.factors;
      sa.separable = true;
      for (const auto& [psi, m] : factorization.factors) {
        if (m > 1) sa.separable = false;
      }
      if (sa.separable) {
        for (const auto& [psi, m] : factorization.factors) {
          (void)m;
          pa.parts.push_back({side.e(), phi_bar.degree() * ResidueField::poly_degree(psi)});
        }
      } else {
        pa.regular = false;
        std::ostringstream os;
        os << "inseparable residual " << sa.residual_str << " on side " << side.to_string()
           << " of factor " << phi_bar.to_string();
        if (out.irregular_reason.empty()) out.irregular_reason = os.str();
      }
      pa.sides.push_back(std::move(sa));
    }
    out.phis.push_back(std::move(pa));
  }

  out.regular = true;
  for (const auto& pa : out.phis) {
    out.regular = out.regular && pa.regular;
    out.index_valuation += pa.index_contribution;
  }
  if (out.regular) {
    for (const auto& pa : out.phis)
      for (const auto& part : pa.parts) out.shape.parts.push_back(part);
    out.shape.sort_canonical();
    if (out.shape.sum_ef() != F.degree())
      throw std::logic_error("ore_split: splitting parts do not sum to the degree");
  }
  return out;
}

OreResult ore_split(const IntPoly& F, long p) { return ore_split_with_lifts(F, p, {}); }

bool is_p_regular(const IntPoly& F, long p) { return ore_split(F, p).regular; }

namespace {

/// Root of a monic linear integer polynomial x - r.
BigInt root_of(const IntPoly& lift) { return -lift.coeff(0); }

/// Candidate roots for re-lifting a repeated linear factor with balanced
/// root r, in trial order.
std::vector<BigInt> shift_candidates(const IntPoly& F, long p, const BigInt& r, int max_tries) {
  std::vector<BigInt> cands;
  const BigInt& b = F.coeff(1);
  if (r == 0 && b != 0) {
    Valuation vb = val_p(b, p);
    if (vb.is_finite() && vb.get() > 0 && vb.get() % 2 == 0) {
      long k = vb.get() / 2;
      cands.push_back(pow(BigInt(p), static_cast<unsigned>(k)) * unit_part(b, p));
    }
  }
  for (int j = 1; j <= max_tries; ++j) cands.push_back(r + BigInt(p) * j);
  return cands;
}

}  // namespace

ShiftOutcome regularize_by_shift(const IntPoly& F, long p, int max_tries) {
  ShiftOutcome out;
  LiftOverrides overrides;
  std::map<GFPoly, size_t> next_candidate;

  // Generous cap: each repeated factor may consume max_tries + 1 candidates.
  const int attempt_cap = 2 * (max_tries + 2);
  for (int attempt = 0; attempt < attempt_cap; ++attempt) {
    out.attempts = attempt + 1;
    out.result = ore_split_with_lifts(F, p, overrides);

    out.roots_used.clear();
    for (const auto& pa : out.result.phis)
      if (pa.multiplicity > 1 && pa.phi_bar.degree() == 1)
        out.roots_used[pa.phi_bar] = root_of(pa.lift);

    if (out.result.regular) {
      out.success = true;
      return out;
    }

    // Re-lift the first irregular factor and try again.
    const PhiAnalysis* bad = nullptr;
    for (const auto& pa : out.result.phis)
      if (!pa.regular) {
        bad = &pa;
        break;
      }
    if (bad == nullptr || bad->phi_bar.degree() != 1) return out;  // no shift strategy

    BigInt r = root_of(default_lift(bad->phi_bar));
    auto cands = shift_candidates(F, p, r, max_tries);
    size_t idx = next_candidate[bad->phi_bar]++;
    if (idx >= cands.size()) return out;  // exhausted
    overrides[bad->phi_bar] = IntPoly::linear_root(cands[idx]);
  }
  return out;
}

DedekindResult dedekind_p_maximal(const IntPoly& F, long p) {
  if (!F.is_monic()) throw std::domain_error("dedekind_p_maximal: F must be monic");
  ModFactorization fac = factor_mod_p(F, p);

  auto lift_plain = [p](const GFPoly& g) {
    std::vector<BigInt> coeffs(g.c.size());
    for (size_t i = 0; i < g.c.size(); ++i) coeffs[i] = g.c[i];
    return IntPoly{std::move(coeffs)};
  };

  IntPoly g_lift = IntPoly::constant(1);
  IntPoly h_lift = IntPoly::constant(1);
  for (const auto& [phi_bar, mult] : fac.factors) {
    IntPoly lift = lift_plain(phi_bar);
    g_lift = g_lift * lift;
    for (int i = 1; i < mult; ++i) h_lift = h_lift * lift;
  }

  // g*h == F mod p, so the quotient below is exact.
  IntPoly T = (g_lift * h_lift - F).scalar_div_exact(BigInt(p));

  GFPoly g_bar = gf_reduce(g_lift, p);
  GFPoly h_bar = gf_reduce(h_lift, p);
  GFPoly t_bar = gf_reduce(T, p);

  DedekindResult out;
  out.obstruction = gf_gcd(gf_gcd(t_bar, g_bar), h_bar);
  out.maximal = out.obstruction.degree() == 0;
  return out;
}

}  // namespace qindex
