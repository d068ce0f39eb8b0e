#include "super3lie/representation.hpp"

#include <map>

#include "super3lie/errors.hpp"

namespace super3lie {

Representation::Representation(AlgebraPtr algebra, SuperSpace module, std::vector<Matrix> phi)
    : algebra_(std::move(algebra)), module_(std::move(module)), phi_(std::move(phi)) {
  if (!algebra_) throw Error(ErrorKind::SpaceMismatch, "representation without an algebra");
  if (phi_.size() != algebra_->wedge().size()) {
    throw Error(ErrorKind::SpaceMismatch, "representation needs one matrix per wedge basis element");
  }
  for (const Matrix& m : phi_) {
    if (m.rows() != module_.dim() || m.cols() != module_.dim()) {
      throw Error(ErrorKind::SpaceMismatch, "representation matrix does not act on the module");
    }
  }
}

Representation Representation::adjoint(const AlgebraPtr& algebra) {
  if (!verify_algebra(*algebra).ok()) {
    throw Error(ErrorKind::InvalidAlgebra, "adjoint representation of an algebra that fails verification");
  }
  std::vector<Matrix> phi;
  for (std::size_t w = 0; w < algebra->wedge().size(); ++w) phi.push_back(algebra->ad_matrix(w));
  return Representation(algebra, algebra->space(), std::move(phi));
}

Representation Representation::zero(const AlgebraPtr& algebra, SuperSpace module) {
  std::size_t m = module.dim();
  std::vector<Matrix> phi(algebra->wedge().size(), Matrix(m, m));
  return Representation(algebra, std::move(module), std::move(phi));
}

Matrix Representation::phi_pair(std::size_t i, std::size_t j) const {
  auto t = algebra_->wedge().term(i, j);
  if (t.sign == 0) return Matrix(module_dim(), module_dim());
  if (t.sign > 0) return phi_[t.index];
  return Rational(-1) * phi_[t.index];
}

Matrix Representation::phi_of(std::span<const Rational> x_wedge) const {
  if (x_wedge.size() != phi_.size()) throw Error(ErrorKind::SpaceMismatch, "phi_of: not wedge coordinates");
  Matrix out(module_dim(), module_dim());
  for (std::size_t w = 0; w < phi_.size(); ++w) {
    if (!x_wedge[w].is_zero()) out = out + x_wedge[w] * phi_[w];
  }
  return out;
}

Vector phi_eval(const Representation& rep, std::span<const Rational> x_wedge, std::span<const Rational> v) {
  if (x_wedge.size() != rep.phi().size() || v.size() != rep.module_dim()) {
    throw Error(ErrorKind::SpaceMismatch, "phi_eval arguments do not match the representation");
  }
  Vector out(rep.module_dim());
  for (std::size_t w = 0; w < x_wedge.size(); ++w) {
    if (x_wedge[w].is_zero()) continue;
    axpy(out, x_wedge[w], rep.phi(w).apply(v));
  }
  return out;
}

namespace {

Vector flatten(const Matrix& m) { return m.data(); }

void record(RepresentationReport& report, std::map<std::string, std::size_t>& per_axiom, std::string axiom,
            std::vector<std::size_t> tuple, const Matrix& lhs, const Matrix& rhs) {
  ++report.violation_count;
  if (per_axiom[axiom]++ < kMaxWitnesses) {
    report.violations.push_back({std::move(axiom), std::move(tuple), flatten(lhs), flatten(rhs)});
  }
}

}  // namespace

RepresentationReport verify_representation(const Representation& rep, std::size_t dim_cap) {
  const ThreeLieSuperalgebra& alg = rep.algebra();
  const SuperSpace& q = alg.space();
  const SuperSpace& v = rep.module();
  std::size_t n = alg.dim();
  std::size_t m = rep.module_dim();
  if (n > dim_cap || m > dim_cap) {
    throw Error(ErrorKind::DimensionCapExceeded, "representation exceeds the dimension cap");
  }
  RepresentationReport report;
  std::map<std::string, std::size_t> per_axiom;

  for (std::size_t w = 0; w < alg.wedge().size(); ++w) {
    const Matrix& mat = rep.phi(w);
    Parity deg = alg.wedge().parity(w);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        if (!mat.at(r, c).is_zero() && v.parity(r) != v.parity(c) + deg) {
          report.degree = false;
          auto [i, j] = alg.wedge().pair(w);
          record(report, per_axiom, "degree", {i, j, r, c}, mat, Matrix(m, m));
          r = m;
          break;
        }
      }
  }

  std::vector<Matrix> pair(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pair[i * n + j] = rep.phi_pair(i, j);
  auto P = [&](std::size_t i, std::size_t j) -> const Matrix& { return pair[i * n + j]; };
  // Phi(u, e_j) and Phi(e_i, u) for a vector u
  auto phi_left = [&](const Vector& u, std::size_t j) {
    Matrix out(m, m);
    for (std::size_t k = 0; k < n; ++k) {
      if (!u[k].is_zero()) out = out + u[k] * P(k, j);
    }
    return out;
  };
  auto phi_right = [&](std::size_t i, const Vector& u) {
    Matrix out(m, m);
    for (std::size_t k = 0; k < n; ++k) {
      if (!u[k].is_zero()) out = out + u[k] * P(i, k);
    }
    return out;
  };

  for (std::size_t x1 = 0; x1 < n; ++x1)
    for (std::size_t x2 = 0; x2 < n; ++x2)
      for (std::size_t x3 = 0; x3 < n; ++x3)
        for (std::size_t x4 = 0; x4 < n; ++x4) {
          int p1 = q.parity_bit(x1), p2 = q.parity_bit(x2), p3 = q.parity_bit(x3), p4 = q.parity_bit(x4);
          {
            Matrix lhs = P(x1, x2) * P(x3, x4);
            Matrix rhs = phi_left(alg.structure(x1, x2, x3), x4) +
                         Rational(sign_of(p3 * (p1 ^ p2))) * phi_right(x3, alg.structure(x1, x2, x4)) +
                         Rational(sign_of((p1 ^ p2) * (p3 ^ p4))) * (P(x3, x4) * P(x1, x2));
            if (lhs != rhs) {
              report.axiom3 = false;
              record(report, per_axiom, "axiom3", {x1, x2, x3, x4}, lhs, rhs);
            }
          }
          {
            Matrix lhs = phi_right(x1, alg.structure(x2, x3, x4));
            Matrix rhs = Rational(sign_of((p1 ^ p2) * (p3 ^ p4))) * (P(x3, x4) * P(x1, x2)) -
                         Rational(sign_of(p1 * (p2 ^ p4) + p3 * p4)) * (P(x2, x4) * P(x1, x3)) +
                         Rational(sign_of(p1 * (p2 ^ p3))) * (P(x2, x3) * P(x1, x4));
            if (lhs != rhs) {
              report.axiom4 = false;
              record(report, per_axiom, "axiom4", {x1, x2, x3, x4}, lhs, rhs);
            }
          }
        }
  return report;
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (!(a.algebra() == b.algebra())) throw Error(ErrorKind::SpaceMismatch, "direct_sum over different algebras");
  std::vector<BasisElement> basis = a.module().basis();
  for (const auto& e : b.module().basis()) basis.push_back({e.label, e.parity});
  // keep labels unique
  std::size_t ma = a.module_dim();
  for (std::size_t k = ma; k < basis.size(); ++k) {
    for (std::size_t i = 0; i < ma; ++i) {
      if (basis[i].label == basis[k].label) {
        basis[k].label += "'";
        i = static_cast<std::size_t>(-1);
      }
    }
  }
  SuperSpace module(a.module().name() + "+" + b.module().name(), std::move(basis));
  std::size_t m = module.dim();
  std::vector<Matrix> phi;
  for (std::size_t w = 0; w < a.phi().size(); ++w) {
    Matrix mat(m, m);
    for (std::size_t r = 0; r < ma; ++r)
      for (std::size_t c = 0; c < ma; ++c) mat.at(r, c) = a.phi(w).at(r, c);
    for (std::size_t r = 0; r < b.module_dim(); ++r)
      for (std::size_t c = 0; c < b.module_dim(); ++c) mat.at(ma + r, ma + c) = b.phi(w).at(r, c);
    phi.push_back(std::move(mat));
  }
  return Representation(a.algebra_ptr(), std::move(module), std::move(phi));
}

}  // namespace super3lie
