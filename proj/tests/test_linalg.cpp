#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"

using namespace testgen;

namespace {

Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c, int zero_weight = 1) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = sparse_rational(rng, zero_weight);
  return m;
}

std::vector<oracle::Row> rows_of(const Matrix& m) {
  std::vector<oracle::Row> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    oracle::Row row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_mpq());
    out.push_back(row);
  }
  return out;
}

SparseMatrix to_sparse_matrix(const Matrix& m) {
  SparseMatrix s(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::vector<SparseMatrix::Entry> row;
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back({c, m.at(r, c)});
    s.push_row(row);
  }
  return s;
}

}  // namespace

TEST_CASE("rational arithmetic agrees with GMP across the overflow boundary") {
  Rng rng(1);
  std::uniform_int_distribution<long long> big(-(1LL << 62), 1LL << 62);
  for (int i = 0; i < 2000; ++i) {
    long long a = big(rng), b = big(rng) | 1, c = big(rng), d = big(rng) | 1;
    Rational x(a, b), y(c, d);
    mpq_class X(mpz_class(std::to_string(a)), mpz_class(std::to_string(b)));
    mpq_class Y(mpz_class(std::to_string(c)), mpz_class(std::to_string(d)));
    X.canonicalize();
    Y.canonicalize();
    CHECK((x + y).to_mpq() == X + Y);
    CHECK((x - y).to_mpq() == X - Y);
    CHECK((x * y).to_mpq() == X * Y);
    if (c != 0) CHECK((x / y).to_mpq() == X / Y);
    CHECK(((x * y) / y == x) == true);
  }
}

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("6/-4").str() == "-3/2");
  CHECK(Rational::parse(" 10/5 ").str() == "2");
  CHECK(Rational::parse("123456789012345678901234567890/3").str() == "41152263004115226300411522630");
  CHECK(Rational::parse("-0").is_zero());
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  Rational huge = Rational::parse("100000000000000000000");
  CHECK((huge - huge).is_zero());
  CHECK((huge / huge).is_one());
  CHECK(Rational(std::numeric_limits<long long>::min()).str() == "-9223372036854775808");
  CHECK(-Rational(std::numeric_limits<long long>::min()) == Rational::parse("9223372036854775808"));
}

TEST_CASE("kernel, image and solve on random matrices") {
  Rng rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    Matrix m = random_matrix(rng, r, c, trial % 3);
    std::size_t rank = oracle::rank(rows_of(m));
    Subspace ker = kernel_basis(m);
    CHECK(ker.dim() == c - rank);
    for (const Vector& v : ker.basis()) CHECK(is_zero(m.apply(v)));
    CHECK(kernel_basis(to_sparse_matrix(m)) == ker);
    CHECK(image(m).dim() == rank);
    CHECK(image(to_sparse_matrix(m)) == image(m));

    Vector x = random_vector(rng, c);
    Vector b = m.apply(x);
    auto sol = solve(m, b);
    REQUIRE(sol.has_value());
    CHECK(m.apply(*sol) == b);
    auto sparse_sol = solve(to_sparse_matrix(m), b);
    REQUIRE(sparse_sol.has_value());
    CHECK(m.apply(*sparse_sol) == b);

    Vector e = random_vector(rng, r);
    auto rows = rows_of(m);
    for (std::size_t i = 0; i < r; ++i) rows[i].push_back(e[i].to_mpq());
    CHECK(solve(m, e).has_value() == oracle::solvable(rows));
  }
}

TEST_CASE("rref and inverse") {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 1 + rng() % 6;
    Matrix m = random_matrix(rng, n, n, 0);
    auto inv = inverse(m);
    bool regular = oracle::rank(rows_of(m)) == n;
    CHECK(inv.has_value() == regular);
    if (inv) {
      CHECK(m * *inv == Matrix::identity(n));
      CHECK(*inv * m == Matrix::identity(n));
    }
    RrefResult rr = rref(m);
    CHECK(rr.rank() == oracle::rank(rows_of(m)));
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) {
      for (std::size_t r = 0; r < n; ++r) CHECK(rr.reduced.at(r, rr.pivots[k]) == Rational(r == k ? 1 : 0));
    }
  }
}

TEST_CASE("subspaces are canonical") {
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + rng() % 5, k = 1 + rng() % n;
    std::vector<Vector> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(random_vector(rng, n));
    Subspace a = Subspace::span(n, gens);
    std::vector<Vector> mixed;
    for (std::size_t i = 0; i < k; ++i) {
      Vector v = gens[i];
      if (i + 1 < k) axpy(v, Rational(3, 2), gens[i + 1]);
      mixed.push_back(v);
    }
    std::reverse(mixed.begin(), mixed.end());
    mixed.push_back(zero_vector(n));
    if (k > 1) {
      Vector extra = gens[0];
      axpy(extra, Rational(-7), gens[1]);
      mixed.push_back(extra);
    }
    CHECK(Subspace::span(n, mixed) == a);
    for (const auto& g : gens) CHECK(a.contains(g));
    CHECK(Subspace::full(n).contains(a));
  }
}

TEST_CASE("quotient coordinates vanish exactly on the small subspace") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 3 + rng() % 4;
    std::vector<Vector> small_gens, big_gens;
    std::size_t ks = rng() % 3, kb = ks + 1 + rng() % 2;
    for (std::size_t i = 0; i < kb; ++i) big_gens.push_back(random_vector(rng, n));
    for (std::size_t i = 0; i < ks; ++i) small_gens.push_back(big_gens[i]);
    Subspace big = Subspace::span(n, big_gens), small = Subspace::span(n, small_gens);
    QuotientData qd(big, small);
    CHECK(qd.dim() == big.dim() - small.dim());
    for (const auto& v : small_gens) CHECK(is_zero(qd.reduce(v)));
    Vector a = random_vector(rng, kb), b = random_vector(rng, kb);
    Vector va(n), vb(n);
    for (std::size_t i = 0; i < kb; ++i) {
      axpy(va, a[i], big_gens[i]);
      axpy(vb, b[i], big_gens[i]);
    }
    CHECK(qd.reduce(va + vb) == qd.reduce(va) + qd.reduce(vb));
    CHECK(is_zero(qd.reduce(va)) == small.contains(va));
    for (std::size_t i = 0; i < qd.dim(); ++i) CHECK(qd.reduce(qd.representatives()[i]) == unit_vector(qd.dim(), i));
  }
  Subspace line = Subspace::span(3, {{1, 0, 0}});
  Subspace other = Subspace::span(3, {{0, 1, 0}});
  CHECK_THROWS_AS(QuotientData(line, other), Error);
  QuotientData qd(line, Subspace(3));
  CHECK_THROWS_AS(qd.reduce(Vector{0, 0, 1}), Error);
}

TEST_CASE("sparse products match dense products") {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t a = 1 + rng() % 6, b = 1 + rng() % 6, c = 1 + rng() % 6;
    Matrix x = random_matrix(rng, a, b, 2), y = random_matrix(rng, b, c, 2);
    CHECK(to_sparse_matrix(x).multiply(to_sparse_matrix(y)).to_dense() == x * y);
  }
}
