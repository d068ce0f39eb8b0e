#include "super3lie/obstruction.hpp"

#include "super3lie/errors.hpp"

namespace super3lie {

DerivationPair make_pair(const Representation& rep, GradedLinearMap d_p, GradedLinearMap d_q) {
  const SuperSpace& q = rep.algebra().space();
  if (!(d_p.source() == rep.module()) || !(d_p.target() == rep.module())) {
    throw Error(ErrorKind::SpaceMismatch, "D_p must be an endomorphism of the module");
  }
  if (!(d_q.source() == q) || !(d_q.target() == q)) {
    throw Error(ErrorKind::SpaceMismatch, "D_q must be an endomorphism of the algebra");
  }
  if (d_p.degree() != d_q.degree()) throw Error(ErrorKind::NotHomogeneous, "D_p and D_q have different degrees");
  if (!is_superderivation(rep.algebra(), d_q).ok) {
    throw Error(ErrorKind::NotADerivation, "D_q is not a superderivation");
  }
  Parity degree = d_p.degree();
  return {std::move(d_p), std::move(d_q), degree};
}

DerivationPair zero_pair(const Representation& rep, Parity degree) {
  return {GradedLinearMap::zero(rep.module(), rep.module(), degree),
          GradedLinearMap::zero(rep.algebra().space(), rep.algebra().space(), degree), degree};
}

DerivationPair inner_pair(const Representation& rep, std::size_t w) {
  const ThreeLieSuperalgebra& q = rep.algebra();
  Parity degree = q.wedge().parity(w);
  return {GradedLinearMap(rep.module(), rep.module(), degree, rep.phi(w)),
          GradedLinearMap(q.space(), q.space(), degree, q.ad_matrix(w)), degree};
}

namespace {

void require_pair_spaces(const Representation& rep, const DerivationPair& pair) {
  if (!(pair.d_p.source() == rep.module()) || !(pair.d_p.target() == rep.module()) ||
      !(pair.d_q.source() == rep.algebra().space()) || !(pair.d_q.target() == rep.algebra().space())) {
    throw Error(ErrorKind::SpaceMismatch, "derivation pair does not act on this representation");
  }
}

// Phi(D x, y) + (-1)^{a|x|} Phi(x, D y) for a map D of degree a.
Matrix phi_derived(const Representation& rep, const Matrix& d, int alpha, std::size_t x, std::size_t y) {
  const SuperSpace& q = rep.algebra().space();
  std::size_t n = q.dim(), m = rep.module_dim();
  Matrix out(m, m);
  Rational sx = sign_of(alpha * q.parity_bit(x));
  for (std::size_t k = 0; k < n; ++k) {
    if (!d.at(k, x).is_zero()) out = out + d.at(k, x) * rep.phi_pair(k, y);
    if (!d.at(k, y).is_zero()) out = out + (sx * d.at(k, y)) * rep.phi_pair(x, k);
  }
  return out;
}

}  // namespace

CompatibilityCheck is_compatible(const Representation& rep, const DerivationPair& pair) {
  require_pair_spaces(rep, pair);
  const ThreeLieSuperalgebra& q = rep.algebra();
  int alpha = bit(pair.degree);
  const Matrix& dp = pair.d_p.matrix();
  CompatibilityCheck check;
  for (std::size_t w = 0; w < q.wedge().size(); ++w) {
    auto [x, y] = q.wedge().pair(w);
    const Matrix& phi = rep.phi(w);
    Rational s = sign_of(alpha * q.wedge().parity_bit(w));
    Matrix lhs = dp * phi - s * (phi * dp);
    Matrix rhs = phi_derived(rep, pair.d_q.matrix(), alpha, x, y);
    if (lhs == rhs) continue;
    check.ok = false;
    for (std::size_t c = 0; c < lhs.cols(); ++c) {
      Vector l = lhs.column(c), r = rhs.column(c);
      if (l != r) {
        check.witness = Violation{"compatibility", {x, y, c}, l, r};
        return check;
      }
    }
  }
  return check;
}

CompatiblePairSpace compatible_pair_space(const RepresentationPtr& rep, Parity degree) {
  const ThreeLieSuperalgebra& q = rep->algebra();
  const SuperSpace& p = rep->module();
  std::size_t m = p.dim();
  int alpha = bit(degree);
  auto entries = admissible_entries(p, p, degree);
  DerivationSpace der = derivation_space(rep->algebra_ptr(), degree);
  std::size_t na = entries.size(), nvars = na + der.dim();
  std::vector<long> var_of(m * m, -1);
  for (std::size_t k = 0; k < na; ++k) var_of[entries[k].first * m + entries[k].second] = static_cast<long>(k);

  SparseMatrix system(nvars);
  for (std::size_t w = 0; w < q.wedge().size(); ++w) {
    auto [x, y] = q.wedge().pair(w);
    const Matrix& phi = rep->phi(w);
    Rational s = sign_of(alpha * q.wedge().parity_bit(w));
    std::vector<Matrix> derived;
    for (const auto& b : der.basis) derived.push_back(phi_derived(*rep, b.matrix(), alpha, x, y));
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        std::vector<SparseMatrix::Entry> row;
        for (std::size_t t = 0; t < m; ++t) {
          long v1 = var_of[r * m + t];
          if (v1 >= 0 && !phi.at(t, c).is_zero()) row.push_back({static_cast<std::size_t>(v1), phi.at(t, c)});
          long v2 = var_of[t * m + c];
          if (v2 >= 0 && !phi.at(r, t).is_zero()) row.push_back({static_cast<std::size_t>(v2), -(s * phi.at(r, t))});
        }
        for (std::size_t k = 0; k < derived.size(); ++k) {
          if (!derived[k].at(r, c).is_zero()) row.push_back({na + k, -derived[k].at(r, c)});
        }
        if (!row.empty()) system.push_row(std::move(row));
      }
  }

  CompatiblePairSpace out{rep, degree, {}};
  for (const Vector& v : kernel_basis(system).basis()) {
    Matrix dp(m, m), dq(q.dim(), q.dim());
    for (std::size_t k = 0; k < na; ++k) dp.at(entries[k].first, entries[k].second) = v[k];
    for (std::size_t k = 0; k < der.dim(); ++k) {
      if (!v[na + k].is_zero()) dq = dq + v[na + k] * der.basis[k].matrix();
    }
    out.basis.push_back({GradedLinearMap(p, p, degree, dp), GradedLinearMap(q.space(), q.space(), degree, dq), degree});
  }
  return out;
}

DerivationPair pair_supercommutator(const DerivationPair& a, const DerivationPair& b) {
  return {supercommutator(a.d_p, b.d_p), supercommutator(a.d_q, b.d_q), a.degree + b.degree};
}

Cochain derivation_action(const DerivationPair& pair, const Cochain& f) {
  const Representation& rep = f.rep();
  require_pair_spaces(rep, pair);
  const ThreeLieSuperalgebra& q = rep.algebra();
  const SuperSpace& qs = q.space();
  const WedgeBasis& wedge = q.wedge();
  std::size_t n = q.dim(), m = rep.module_dim();
  int alpha = bit(pair.degree);
  Rational outer = -Rational(sign_of(alpha * bit(f.parity())));

  std::vector<std::vector<std::pair<std::size_t, Rational>>> dq(n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& c = pair.d_q.matrix().at(k, a);
      if (!c.is_zero()) dq[a].push_back({k, c});
    }
  const Matrix& dp = pair.d_p.matrix();

  Cochain out(f.rep_ptr(), f.level(), f.parity() + pair.degree);
  std::vector<std::size_t> wedges, moved;
  std::size_t z = 0;
  Vector acc(m);
  for (std::size_t t = 0; t < f.tuple_count(); ++t) {
    decode_tuple(rep, f.level(), t, wedges, z);
    std::fill(acc.begin(), acc.end(), Rational(0));
    auto ft = f.value(t);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        if (!ft[c].is_zero() && !dp.at(r, c).is_zero()) acc[r] += dp.at(r, c) * ft[c];
      }
    auto add_shifted = [&](const Rational& coeff, std::size_t tuple) {
      auto v = f.value(tuple);
      for (std::size_t r = 0; r < m; ++r) {
        if (!v[r].is_zero()) acc[r] += coeff * v[r];
      }
    };
    int before = 0;
    for (std::size_t slot = 0; slot < wedges.size(); ++slot) {
      auto [i, j] = wedge.pair(wedges[slot]);
      for (int side = 0; side < 2; ++side) {
        std::size_t a = side == 0 ? i : j;
        Rational s = outer * sign_of(alpha * before);
        for (const auto& [k, c] : dq[a]) {
          auto term = side == 0 ? wedge.term(k, j) : wedge.term(i, k);
          if (term.sign == 0) continue;
          moved = wedges;
          moved[slot] = term.index;
          add_shifted(s * c * term.sign, encode_tuple(rep, moved, z));
        }
        before += qs.parity_bit(a);
      }
    }
    Rational s = outer * sign_of(alpha * before);
    for (const auto& [k, c] : dq[z]) add_shifted(s * c, encode_tuple(rep, wedges, k));
    for (std::size_t r = 0; r < m; ++r) {
      if (!acc[r].is_zero()) out.set(t, r, acc[r]);
    }
  }
  return out;
}

Cochain obstruction_cochain(const Representation& rep, const Cochain& omega, const DerivationPair& pair) {
  if (!(omega.rep() == rep)) throw Error(ErrorKind::SpaceMismatch, "omega belongs to another representation");
  if (omega.level() != 2) throw Error(ErrorKind::ArityMismatch, "obstruction needs a level-2 cochain");
  return derivation_action(pair, omega);
}

namespace {

void require_compatible(const Representation& rep, const DerivationPair& pair) {
  auto check = is_compatible(rep, pair);
  if (!check.ok) {
    const auto& t = check.witness->tuple;
    throw Error(ErrorKind::NotCompatible, "pair is not compatible at (" + rep.algebra().space().label(t[0]) + ", " +
                                              rep.algebra().space().label(t[1]) + ")");
  }
}

}  // namespace

Vector psi_action(const GradedCohomology& h, const DerivationPair& pair, const Cochain& cocycle) {
  require_compatible(*h.even.rep_ptr(), pair);
  h.part(cocycle.parity()).class_of(cocycle);
  return h.part(cocycle.parity() + pair.degree).class_of(derivation_action(pair, cocycle));
}

Matrix psi_matrix(const GradedCohomology& h, const DerivationPair& pair) {
  require_compatible(*h.even.rep_ptr(), pair);
  std::size_t de = h.even.dim();
  Matrix out(h.dim(), h.dim());
  std::size_t col = 0;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    Parity target = p + pair.degree;
    std::size_t offset = target == Parity::Even ? 0 : de;
    for (const Cochain& z : h.part(p).representatives()) {
      Vector c = h.part(target).class_of(derivation_action(pair, z));
      for (std::size_t r = 0; r < c.size(); ++r) out.at(offset + r, col) = c[r];
      ++col;
    }
  }
  return out;
}

ObstructionClass extension_obstruction(const ExtensionData& ext, const DerivationPair& pair, int level_cap) {
  auto rep = std::make_shared<const Representation>(extract_phi(ext));
  require_compatible(*rep, pair);
  Cochain ob = obstruction_cochain(*rep, extract_omega(ext, rep), pair);
  Vector coords = CohomologySpace(rep, 2, ob.parity(), level_cap).class_of(ob);
  bool trivial = is_zero(coords);
  return {std::move(ob), std::move(coords), trivial};
}

namespace {

std::optional<Violation> first_column_mismatch(const std::string& what, const Matrix& a, const Matrix& b) {
  for (std::size_t c = 0; c < a.cols(); ++c) {
    Vector l = a.column(c), r = b.column(c);
    if (l != r) return Violation{what, {c}, l, r};
  }
  return std::nullopt;
}

}  // namespace

ExtensibilityReport check_extensible_witness(const ExtensionData& ext, const DerivationPair& pair,
                                             const GradedLinearMap& d_l) {
  ExtensibilityReport report;
  const ThreeLieSuperalgebra& L = *ext.total;
  if (!(d_l.source() == L.space()) || !(d_l.target() == L.space()) || d_l.degree() != pair.degree) {
    report.derivation = report.sub_square = report.quotient_square = report.mu_in_sub = false;
  } else {
    auto der = is_superderivation(L, d_l);
    report.derivation = der.ok;
    if (!der.ok) report.witnesses.push_back(*der.witness);
    if (auto v = first_column_mismatch("sub_square", d_l.matrix() * ext.incl.matrix(),
                                       ext.incl.matrix() * pair.d_p.matrix())) {
      report.sub_square = false;
      report.witnesses.push_back(*v);
    }
    if (auto v = first_column_mismatch("quotient_square", ext.proj.matrix() * d_l.matrix(),
                                       pair.d_q.matrix() * ext.proj.matrix())) {
      report.quotient_square = false;
      report.witnesses.push_back(*v);
    }
    Matrix mu = d_l.matrix() * ext.section.matrix() - ext.section.matrix() * pair.d_q.matrix();
    Matrix leak = ext.proj.matrix() * mu;
    if (!leak.is_zero()) {
      report.mu_in_sub = false;
      report.witnesses.push_back(*first_column_mismatch("mu_in_sub", leak, Matrix(leak.rows(), leak.cols())));
    }
  }
  Representation rep = extract_phi(ext);
  auto compat = is_compatible(rep, pair);
  report.compatible = compat.ok;
  if (!compat.ok) report.witnesses.push_back(*compat.witness);
  return report;
}

LiftedDerivation lift_pair(const ExtensionData& ext, const DerivationPair& pair, int level_cap) {
  if (pair.degree != Parity::Even) {
    throw Error(ErrorKind::OddPairUnsupported, "lifting is only established for even pairs");
  }
  auto rep = std::make_shared<const Representation>(extract_phi(ext));
  require_compatible(*rep, pair);
  Cochain ob = obstruction_cochain(*rep, extract_omega(ext, rep), pair);
  CoboundaryOperator d = coboundary_operator(rep, 1, Parity::Even, level_cap);
  auto x = solve(d.matrix, d.target.coordinates(ob));
  if (!x) throw Error(ErrorKind::NotExtensible, "the obstruction class is nontrivial");
  Cochain mu = d.source.cochain(*x);
  GradedLinearMap mu_map = mu.to_map();

  const ThreeLieSuperalgebra& L = *ext.total;
  std::size_t n = L.dim();
  Matrix dl(n, n);
  for (std::size_t l = 0; l < n; ++l) {
    Vector e = unit_vector(n, l);
    Vector qx = ext.proj.apply(e);
    Vector col = ext.section.apply(pair.d_q.apply(qx));
    col = col + ext.incl.apply(mu_map.apply(qx));
    col = col + ext.incl.apply(pair.d_p.apply(ext.retraction(e)));
    for (std::size_t r = 0; r < n; ++r) dl.at(r, l) = col[r];
  }
  GradedLinearMap d_l(L.space(), L.space(), Parity::Even, dl);
  LiftedDerivation out{pair, d_l, mu, kernel_basis(d.matrix).dim(), {}};
  out.report = check_extensible_witness(ext, pair, d_l);
  return out;
}

}  // namespace super3lie
