#include "super3lie/extension.hpp"

#include <algorithm>
#include <set>

#include "super3lie/errors.hpp"

namespace super3lie {

Vector ExtensionData::sub_coordinates(std::span<const Rational> l) const {
  if (l.size() != total->dim()) throw Error(ErrorKind::SpaceMismatch, "element does not belong to the extension");
  for (std::size_t k : quotient_indices) {
    if (!l[k].is_zero()) throw Error(ErrorKind::NotInSubspace, "element of L does not lie in P");
  }
  Vector out(sub_indices.size());
  for (std::size_t k = 0; k < sub_indices.size(); ++k) out[k] = l[sub_indices[k]];
  return out;
}

Vector ExtensionData::retraction(std::span<const Rational> l) const {
  Vector rest(l.begin(), l.end());
  axpy(rest, Rational(-1), section.apply(proj.apply(l)));
  return sub_coordinates(rest);
}

namespace {

SuperSpace subspace_of(const SuperSpace& space, const std::vector<std::size_t>& indices, const std::string& name) {
  std::vector<BasisElement> basis;
  for (std::size_t i : indices) basis.push_back(space.basis()[i]);
  return SuperSpace(name, std::move(basis));
}

GradedLinearMap checked_section(const ExtensionData& ext, const Matrix& m) {
  GradedLinearMap s;
  try {
    s = GradedLinearMap(ext.quotient->space(), ext.total->space(), Parity::Even, m);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidExtension, std::string("section is not an even map Q -> L: ") + e.what());
  }
  if (!(compose_graded(ext.proj, s).matrix() == Matrix::identity(ext.quotient->dim()))) {
    throw Error(ErrorKind::InvalidExtension, "section does not satisfy pi s = 1");
  }
  return s;
}

}  // namespace

ExtensionData make_extension(const AlgebraPtr& total, std::vector<std::size_t> sub_indices,
                             std::optional<Matrix> section) {
  const ThreeLieSuperalgebra& L = *total;
  std::size_t n = L.dim();
  std::sort(sub_indices.begin(), sub_indices.end());
  if (std::adjacent_find(sub_indices.begin(), sub_indices.end()) != sub_indices.end()) {
    throw Error(ErrorKind::InvalidExtension, "repeated index in the subspace");
  }
  if (!sub_indices.empty() && sub_indices.back() >= n) throw Error(ErrorKind::InvalidExtension, "subspace index out of range");
  std::vector<char> in_sub(n, 0);
  for (std::size_t i : sub_indices) in_sub[i] = 1;
  ExtensionData ext;
  ext.total = total;
  ext.sub_indices = sub_indices;
  for (std::size_t i = 0; i < n; ++i)
    if (!in_sub[i]) ext.quotient_indices.push_back(i);
  ext.sub_space = subspace_of(L.space(), ext.sub_indices, "P");
  SuperSpace qspace = subspace_of(L.space(), ext.quotient_indices, "Q");
  std::size_t q = qspace.dim(), p = ext.sub_space.dim();

  Matrix proj(q, n), incl(n, p), canonical(n, q);
  for (std::size_t k = 0; k < q; ++k) {
    proj.at(k, ext.quotient_indices[k]) = 1;
    canonical.at(ext.quotient_indices[k], k) = 1;
  }
  for (std::size_t k = 0; k < p; ++k) incl.at(ext.sub_indices[k], k) = 1;
  ext.proj = GradedLinearMap(L.space(), qspace, Parity::Even, proj);
  ext.incl = GradedLinearMap(ext.sub_space, L.space(), Parity::Even, incl);

  std::vector<Vector> qs;
  for (std::size_t a : ext.quotient_indices)
    for (std::size_t b : ext.quotient_indices)
      for (std::size_t c : ext.quotient_indices) qs.push_back(ext.proj.apply(L.structure(a, b, c)));
  ext.quotient = std::make_shared<const ThreeLieSuperalgebra>(L.name() + "/P", qspace, std::move(qs));

  auto label = [&](std::size_t a, std::size_t b, std::size_t c) {
    return "(" + L.space().label(a) + ", " + L.space().label(b) + ", " + L.space().label(c) + ")";
  };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        int in_p = in_sub[a] + in_sub[b] + in_sub[c];
        const Vector& v = L.structure(a, b, c);
        if (in_p >= 2 && !is_zero(v)) {
          throw Error(ErrorKind::InvalidExtension, "[P, P, L] != 0 at " + label(a, b, c));
        }
        if (in_p >= 1 && !is_zero(ext.proj.apply(v))) {
          throw Error(ErrorKind::InvalidExtension, "P is not an ideal: pi[...] != 0 at " + label(a, b, c));
        }
      }
  ext.section = GradedLinearMap(qspace, L.space(), Parity::Even, canonical);
  if (section) ext.section = checked_section(ext, *section);
  return ext;
}

ExtensionData with_section(const ExtensionData& ext, const GradedLinearMap& section) {
  if (!(section.source() == ext.quotient->space()) || !(section.target() == ext.total->space())) {
    throw Error(ErrorKind::InvalidExtension, "section is not a map Q -> L");
  }
  if (section.degree() != Parity::Even) throw Error(ErrorKind::InvalidExtension, "section must be even");
  ExtensionData out = ext;
  out.section = checked_section(ext, section.matrix());
  return out;
}

namespace {

Vector omega_at(const Cochain& omega, std::size_t x, std::size_t y, std::size_t z) {
  const ThreeLieSuperalgebra& q = omega.rep().algebra();
  auto t = q.wedge().term(x, y);
  Vector out(omega.rep().module_dim());
  if (t.sign == 0) return out;
  auto v = omega.value(t.index * q.dim() + z);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = t.sign > 0 ? v[k] : -v[k];
  return out;
}

}  // namespace

bool is_totally_skew(const Cochain& omega) {
  if (omega.level() != 2) throw Error(ErrorKind::ArityMismatch, "total skewness is defined for level-2 cochains");
  const ThreeLieSuperalgebra& q = omega.rep().algebra();
  std::size_t n = q.dim();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        Vector a = omega_at(omega, x, y, z), b = omega_at(omega, x, z, y);
        Rational s = sign_of(q.space().parity_bit(y) * q.space().parity_bit(z));
        for (std::size_t k = 0; k < a.size(); ++k) {
          if (a[k] != -(s * b[k])) return false;
        }
      }
  return true;
}

Subspace skew_cocycle_space(const RepresentationPtr& rep, Parity parity, int level_cap) {
  CoboundaryOperator d = coboundary_operator(rep, 2, parity, level_cap);
  const CochainSpace& space = d.source;
  const ThreeLieSuperalgebra& q = rep->algebra();
  std::size_t n = q.dim(), m = rep->module_dim();
  SparseMatrix system(space.dim());
  for (std::size_t r = 0; r < d.matrix.rows(); ++r) {
    auto row = d.matrix.row(r);
    system.push_row({row.begin(), row.end()});
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        auto t1 = q.wedge().term(x, y), t2 = q.wedge().term(x, z);
        Rational s = sign_of(q.space().parity_bit(y) * q.space().parity_bit(z));
        for (std::size_t o = 0; o < m; ++o) {
          std::vector<SparseMatrix::Entry> row;
          if (t1.sign != 0) {
            long c = space.local_index((t1.index * n + z) * m + o);
            if (c >= 0) row.push_back({static_cast<std::size_t>(c), Rational(t1.sign)});
          }
          if (t2.sign != 0) {
            long c = space.local_index((t2.index * n + y) * m + o);
            if (c >= 0) row.push_back({static_cast<std::size_t>(c), s * t2.sign});
          }
          if (!row.empty()) system.push_row(std::move(row));
        }
      }
  return kernel_basis(system);
}

ExtensionData build_extension(const RepresentationPtr& rep, const Cochain& omega, BuildOptions options) {
  if (!verify_representation(*rep).ok()) {
    throw Error(ErrorKind::InvalidRepresentation, "build_extension needs a verified representation");
  }
  if (omega.level() != 2 || omega.parity() != Parity::Even ||
      (omega.rep_ptr() != rep && !(omega.rep() == *rep))) {
    throw Error(ErrorKind::SpaceMismatch, "omega must be an even level-2 cochain of the representation");
  }
  if (!is_totally_skew(omega)) throw Error(ErrorKind::SkewInconsistent, "omega is not super-skew in all arguments");
  if (options.require_cocycle && !is_cocycle(omega, options.level_cap)) {
    throw Error(ErrorKind::NotACocycle, "omega is not a cocycle");
  }
  const ThreeLieSuperalgebra& Q = rep->algebra();
  const SuperSpace& qs = Q.space();
  const SuperSpace& ps = rep->module();
  std::size_t nq = qs.dim(), np = ps.dim(), n = nq + np;

  std::vector<BasisElement> basis = qs.basis();
  std::set<std::string> used;
  for (const auto& b : basis) used.insert(b.label);
  for (const auto& b : ps.basis()) {
    std::string label = b.label;
    while (used.count(label)) label += "'";
    used.insert(label);
    basis.push_back({label, b.parity});
  }
  SuperSpace lspace(Q.name() + "+" + ps.name(), basis);

  std::vector<Matrix> phi(nq * nq);
  for (std::size_t x = 0; x < nq; ++x)
    for (std::size_t y = 0; y < nq; ++y) phi[x * nq + y] = rep->phi_pair(x, y);
  auto place = [&](Vector& out, const Rational& s, std::span<const Rational> pv) {
    for (std::size_t k = 0; k < np; ++k) {
      if (!pv[k].is_zero()) out[nq + k] += s * pv[k];
    }
  };

  std::vector<Vector> structure(n * n * n, Vector(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        bool pa = a >= nq, pb = b >= nq, pc = c >= nq;
        if (pa + pb + pc >= 2) continue;
        Vector& out = structure[(a * n + b) * n + c];
        if (!pa && !pb && !pc) {
          const Vector& qv = Q.structure(a, b, c);
          for (std::size_t k = 0; k < nq; ++k) out[k] = qv[k];
          place(out, Rational(1), omega_at(omega, a, b, c));
        } else if (pc) {
          place(out, Rational(1), phi[a * nq + b].column(c - nq));
        } else if (pb) {
          int s = sign_of(lspace.parity_bit(c) * (lspace.parity_bit(a) ^ lspace.parity_bit(b)));
          place(out, Rational(s), phi[c * nq + a].column(b - nq));
        } else {
          int s = sign_of(lspace.parity_bit(a) * (lspace.parity_bit(b) ^ lspace.parity_bit(c)));
          place(out, Rational(s), phi[b * nq + c].column(a - nq));
        }
      }
  auto total = std::make_shared<const ThreeLieSuperalgebra>(lspace.name(), lspace, std::move(structure));
  std::vector<std::size_t> sub;
  for (std::size_t k = nq; k < n; ++k) sub.push_back(k);
  ExtensionData ext = make_extension(total, sub);
  ext.sub_space = ps;
  ext.incl = GradedLinearMap(ps, lspace, Parity::Even, ext.incl.matrix());
  return ext;
}

namespace {

std::vector<Matrix> phi_from_section(const ExtensionData& ext, const GradedLinearMap& s) {
  const ThreeLieSuperalgebra& L = *ext.total;
  const ThreeLieSuperalgebra& Q = *ext.quotient;
  std::size_t n = L.dim(), p = ext.sub_space.dim();
  std::vector<Matrix> phi;
  for (std::size_t w = 0; w < Q.wedge().size(); ++w) {
    auto [i, j] = Q.wedge().pair(w);
    Vector si = s.matrix().column(i), sj = s.matrix().column(j);
    Matrix m(p, p);
    for (std::size_t v = 0; v < p; ++v) {
      Vector image;
      try {
        image = ext.sub_coordinates(L.bracket(si, sj, unit_vector(n, ext.sub_indices[v])));
      } catch (const Error&) {
        throw Error(ErrorKind::InvalidExtension, "[s x, s y, P] leaves P");
      }
      for (std::size_t r = 0; r < p; ++r) m.at(r, v) = image[r];
    }
    phi.push_back(std::move(m));
  }
  return phi;
}

}  // namespace

Representation extract_phi(const ExtensionData& ext, const std::optional<GradedLinearMap>& other) {
  auto phi = phi_from_section(ext, ext.section);
  if (other) {
    ExtensionData second = with_section(ext, *other);
    if (phi_from_section(second, second.section) != phi) {
      throw Error(ErrorKind::InvalidExtension, "the two sections induce different representations");
    }
  }
  return Representation(ext.quotient, ext.sub_space, std::move(phi));
}

Cochain extract_omega(const ExtensionData& ext, const RepresentationPtr& rep) {
  const ThreeLieSuperalgebra& L = *ext.total;
  const ThreeLieSuperalgebra& Q = *ext.quotient;
  if (!(rep->algebra().space() == Q.space()) || !(rep->module() == ext.sub_space)) {
    throw Error(ErrorKind::SpaceMismatch, "representation does not match the extension");
  }
  std::size_t nq = Q.dim();
  Cochain omega(rep, 2, Parity::Even);
  std::vector<Vector> s(nq);
  for (std::size_t x = 0; x < nq; ++x) s[x] = ext.section.matrix().column(x);
  for (std::size_t w = 0; w < Q.wedge().size(); ++w) {
    auto [x, y] = Q.wedge().pair(w);
    for (std::size_t z = 0; z < nq; ++z) {
      Vector value = L.bracket(s[x], s[y], s[z]);
      axpy(value, Rational(-1), ext.section.apply(Q.structure(x, y, z)));
      Vector pv = ext.sub_coordinates(value);
      for (std::size_t k = 0; k < pv.size(); ++k) omega.set(w * nq + z, k, pv[k]);
    }
  }
  return omega;
}

GradedLinearMap shifted_section(const ExtensionData& ext, const Cochain& lambda) {
  GradedLinearMap l = lambda.to_map();
  if (l.degree() != Parity::Even) throw Error(ErrorKind::NotHomogeneous, "section shift must be even");
  return ext.section - compose_graded(ext.incl, l);
}

Cochain section_difference(const ExtensionData& ext, const GradedLinearMap& s1, const GradedLinearMap& s2,
                           const RepresentationPtr& rep) {
  Matrix d = s1.matrix() - s2.matrix();
  std::size_t nq = ext.quotient->dim();
  Matrix m(ext.sub_space.dim(), nq);
  for (std::size_t x = 0; x < nq; ++x) {
    Vector pv = ext.sub_coordinates(d.column(x));
    for (std::size_t k = 0; k < pv.size(); ++k) m.at(k, x) = pv[k];
  }
  return Cochain::from_map(rep, GradedLinearMap(ext.quotient->space(), ext.sub_space, Parity::Even, m));
}

HomomorphismCheck is_homomorphic_section(const ExtensionData& ext, const GradedLinearMap& section) {
  const ThreeLieSuperalgebra& L = *ext.total;
  const ThreeLieSuperalgebra& Q = *ext.quotient;
  std::size_t nq = Q.dim();
  std::vector<Vector> s(nq);
  for (std::size_t x = 0; x < nq; ++x) s[x] = section.matrix().column(x);
  HomomorphismCheck check;
  for (std::size_t x = 0; x < nq; ++x)
    for (std::size_t y = 0; y < nq; ++y)
      for (std::size_t z = 0; z < nq; ++z) {
        Vector lhs = L.bracket(s[x], s[y], s[z]);
        Vector rhs = section.apply(Q.structure(x, y, z));
        if (lhs != rhs) {
          check.ok = false;
          check.witness = Violation{"homomorphism", {x, y, z}, lhs, rhs};
          return check;
        }
      }
  return check;
}

std::optional<SplitResult> is_split(const ExtensionData& ext, int level_cap) {
  auto rep = std::make_shared<const Representation>(extract_phi(ext));
  Cochain omega = extract_omega(ext, rep);
  CoboundaryOperator d = coboundary_operator(rep, 1, Parity::Even, level_cap);
  auto x = solve(d.matrix, d.target.coordinates(omega));
  if (!x) return std::nullopt;
  Cochain xi = d.source.cochain(*x);
  GradedLinearMap s = shifted_section(ext, xi);
  HomomorphismCheck hom = is_homomorphic_section(ext, s);
  return SplitResult{std::move(xi), std::move(s), std::move(hom)};
}

SplitImplication h1_zero_implies_split(const ExtensionData& ext, int level_cap) {
  auto rep = std::make_shared<const Representation>(extract_phi(ext));
  SplitImplication out;
  std::size_t boundaries = image(coboundary_operator(rep, 1, Parity::Even, level_cap).matrix).dim();
  out.cohomology_dim = skew_cocycle_space(rep, Parity::Even, level_cap).dim() - boundaries;
  out.applicable = out.cohomology_dim == 0;
  auto split = is_split(ext, level_cap);
  out.split = split.has_value() && split->homomorphism.ok;
  out.holds = !out.applicable || out.split;
  return out;
}

}  // namespace super3lie
