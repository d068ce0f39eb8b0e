#include "super3lie/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "super3lie/errors.hpp"

namespace super3lie {

namespace {

[[noreturn]] void parse_fail(const std::string& field, const std::string& what) {
  throw Error(ErrorKind::ParseError, "field '" + field + "': " + what);
}

const Json& require(const Json& j, const char* key, const std::string& field) {
  if (!j.is_object()) parse_fail(field, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) parse_fail(field, std::string("missing key '") + key + "'");
  return *it;
}

std::string label_of(const Json& j, const std::string& field) {
  if (!j.is_string()) parse_fail(field, "expected a basis label");
  return j.get<std::string>();
}

Parity parse_parity(const Json& j, const std::string& field) {
  if (j.is_number_integer()) {
    auto v = j.get<long long>();
    if (v == 0 || v == 1) return parity_from_bit(static_cast<int>(v));
  } else if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "even") return Parity::Even;
    if (s == "odd") return Parity::Odd;
  }
  parse_fail(field, "parity must be 0, 1, \"even\" or \"odd\"");
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1 + std::count(text.begin(), text.begin() + std::min(e.byte, text.size()), '\n');
    throw Error(ErrorKind::ParseError, origin + ":" + std::to_string(line) + ": malformed JSON");
  }
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path.filename().string());
}

Rational parse_rational(const Json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) parse_fail(field, "rationals are written as strings \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    parse_fail(field, e.what());
  }
}

std::string rational_string(const Rational& r) { return r.str(); }

Vector parse_vector(const Json& j, const SuperSpace& space, const std::string& field) {
  if (!j.is_object()) parse_fail(field, "expected {label: value}");
  Vector v(space.dim());
  for (const auto& [label, value] : j.items()) v[space.index_of(label)] = parse_rational(value, field + "." + label);
  return v;
}

Json vector_json(const SuperSpace& space, std::span<const Rational> v) {
  Json out = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out[space.label(i)] = v[i].str();
  }
  return out;
}

Json dense_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

SuperSpace parse_space(const Json& basis, const std::string& name, const std::string& field) {
  if (!basis.is_array()) parse_fail(field, "basis must be an array");
  std::vector<BasisElement> elements;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    std::string f = field + "[" + std::to_string(i) + "]";
    elements.push_back({label_of(require(basis[i], "label", f), f + ".label"),
                        parse_parity(require(basis[i], "parity", f), f + ".parity")});
  }
  return SuperSpace(name, std::move(elements));
}

Json space_json(const SuperSpace& space) {
  Json out = Json::array();
  for (const auto& b : space.basis()) out.push_back({{"label", b.label}, {"parity", bit(b.parity)}});
  return out;
}

ThreeLieSuperalgebra parse_algebra(const Json& j) {
  std::string name = j.is_object() && j.contains("name") ? label_of(j["name"], "name") : "algebra";
  SuperSpace space = parse_space(require(j, "basis", "algebra"), name, "basis");
  std::vector<ThreeLieSuperalgebra::StatedBracket> stated;
  if (j.contains("bracket")) {
    const Json& list = j["bracket"];
    if (!list.is_array()) parse_fail("bracket", "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      std::string f = "bracket[" + std::to_string(i) + "]";
      const Json& args = require(list[i], "args", f);
      if (!args.is_array() || args.size() != 3) parse_fail(f + ".args", "expected three labels");
      stated.push_back({space.index_of(label_of(args[0], f)), space.index_of(label_of(args[1], f)),
                        space.index_of(label_of(args[2], f)), parse_vector(require(list[i], "value", f), space, f + ".value")});
    }
  }
  return ThreeLieSuperalgebra::from_brackets(name, space, stated);
}

ThreeLieSuperalgebra parse_algebra_file(const std::filesystem::path& path) { return parse_algebra(read_json_file(path)); }

Json algebra_json(const ThreeLieSuperalgebra& alg) {
  const SuperSpace& sp = alg.space();
  std::size_t n = alg.dim();
  Json bracket = Json::array();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b)
      for (std::size_t c = b; c < n; ++c) {
        const Vector& v = alg.structure(a, b, c);
        if (is_zero(v)) continue;
        bracket.push_back({{"args", {sp.label(a), sp.label(b), sp.label(c)}}, {"value", vector_json(sp, v)}});
      }
  return {{"name", alg.name()}, {"basis", space_json(sp)}, {"bracket", bracket}};
}

Matrix parse_matrix(const Json& j, const SuperSpace& source, const SuperSpace& target, const std::string& field) {
  if (!j.is_object()) parse_fail(field, "expected {source label: {target label: value}}");
  Matrix m(target.dim(), source.dim());
  for (const auto& [label, column] : j.items()) {
    std::size_t c = source.index_of(label);
    Vector v = parse_vector(column, target, field + "." + label);
    for (std::size_t r = 0; r < v.size(); ++r) m.at(r, c) = v[r];
  }
  return m;
}

Json matrix_json(const SuperSpace& source, const SuperSpace& target, const Matrix& m) {
  Json out = Json::object();
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Json col = vector_json(target, m.column(c));
    if (!col.empty()) out[source.label(c)] = std::move(col);
  }
  return out;
}

GradedLinearMap parse_map(const Json& j, const SuperSpace& source, const SuperSpace& target, Parity degree,
                          const std::string& field) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "zero") return GradedLinearMap::zero(source, target, degree);
    if (s == "identity") {
      if (!(source == target) || degree != Parity::Even) parse_fail(field, "identity needs an even endomorphism");
      return GradedLinearMap::identity(source);
    }
    parse_fail(field, "unknown map keyword '" + s + "'");
  }
  return GradedLinearMap(source, target, degree, parse_matrix(j, source, target, field));
}

Representation parse_representation(const Json& j, const AlgebraPtr& alg) {
  std::string kind = label_of(require(j, "kind", "representation"), "representation.kind");
  if (kind == "adjoint") return Representation::adjoint(alg);
  SuperSpace module = parse_space(require(j, "module", "representation"),
                                  j.contains("name") ? label_of(j["name"], "representation.name") : "V",
                                  "representation.module");
  if (kind == "zero") return Representation::zero(alg, module);
  if (kind != "explicit") parse_fail("representation.kind", "expected adjoint, zero or explicit");
  const WedgeBasis& wedge = alg->wedge();
  std::size_t m = module.dim();
  std::vector<Matrix> phi(wedge.size(), Matrix(m, m));
  std::vector<char> stated(wedge.size(), 0);
  const Json& list = require(j, "phi", "representation");
  if (!list.is_array()) parse_fail("representation.phi", "expected an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::string f = "representation.phi[" + std::to_string(i) + "]";
    const Json& args = require(list[i], "args", f);
    if (!args.is_array() || args.size() != 2) parse_fail(f + ".args", "expected two labels");
    std::size_t x = alg->space().index_of(label_of(args[0], f)), y = alg->space().index_of(label_of(args[1], f));
    Matrix value = parse_matrix(require(list[i], "columns", f), module, module, f + ".columns");
    auto t = wedge.term(x, y);
    if (t.sign == 0) {
      if (!value.is_zero()) throw Error(ErrorKind::SkewInconsistent, f + ": Phi(x, x) must vanish for even x");
      continue;
    }
    Matrix signed_value = Rational(t.sign) * value;
    if (stated[t.index] && !(phi[t.index] == signed_value)) {
      throw Error(ErrorKind::SkewInconsistent, f + ": conflicts with an earlier statement of the same pair");
    }
    phi[t.index] = std::move(signed_value);
    stated[t.index] = 1;
  }
  return Representation(alg, module, std::move(phi));
}

Json representation_json(const Representation& rep) {
  const ThreeLieSuperalgebra& q = rep.algebra();
  Json phi = Json::array();
  for (std::size_t w = 0; w < q.wedge().size(); ++w) {
    if (rep.phi(w).is_zero()) continue;
    auto [x, y] = q.wedge().pair(w);
    phi.push_back({{"args", {q.space().label(x), q.space().label(y)}},
                   {"columns", matrix_json(rep.module(), rep.module(), rep.phi(w))}});
  }
  return {{"kind", "explicit"}, {"name", rep.module().name()}, {"module", space_json(rep.module())}, {"phi", phi}};
}

Cochain parse_cochain(const Json& j, const RepresentationPtr& rep) {
  const Json& level_json = require(j, "level", "cochain");
  if (!level_json.is_number_integer() || level_json.get<long long>() < 1 || level_json.get<long long>() > 4) {
    parse_fail("cochain.level", "expected an integer level between 1 and 4");
  }
  int level = static_cast<int>(level_json.get<long long>());
  Parity parity = parse_parity(require(j, "parity", "cochain"), "cochain.parity");
  bool skew = j.contains("totally_skew") && j["totally_skew"].is_boolean() && j["totally_skew"].get<bool>();
  if (skew && level != 2) parse_fail("cochain.totally_skew", "only defined for level 2");
  const ThreeLieSuperalgebra& q = rep->algebra();
  const SuperSpace& qs = q.space();
  std::size_t m = rep->module_dim();
  std::size_t arity = 2 * static_cast<std::size_t>(level - 1) + 1;
  Vector coeffs(tuple_count(*rep, level) * m);
  std::vector<char> stated(tuple_count(*rep, level), 0);

  auto assign = [&](const std::vector<std::size_t>& idx, const Vector& value, const std::string& f) {
    std::vector<std::size_t> wedges;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < idx.size(); k += 2) {
      auto t = q.wedge().term(idx[k], idx[k + 1]);
      sign *= t.sign;
      wedges.push_back(t.index);
    }
    if (sign == 0) {
      if (!is_zero(value)) throw Error(ErrorKind::SkewInconsistent, f + ": value on a vanishing wedge x^x");
      return;
    }
    std::size_t t = encode_tuple(*rep, wedges, idx.back());
    for (std::size_t o = 0; o < m; ++o) {
      Rational v = sign > 0 ? value[o] : -value[o];
      if (stated[t] && coeffs[t * m + o] != v) {
        throw Error(ErrorKind::SkewInconsistent, f + ": conflicts with an earlier statement of the same value");
      }
      coeffs[t * m + o] = v;
    }
    stated[t] = 1;
  };

  const Json& list = j.contains("values") ? j["values"] : Json::array();
  if (!list.is_array()) parse_fail("cochain.values", "expected an array");
  for (std::size_t i = 0; i < list.size(); ++i) {
    std::string f = "cochain.values[" + std::to_string(i) + "]";
    const Json& args = require(list[i], "args", f);
    if (!args.is_array() || args.size() != arity) {
      throw Error(ErrorKind::ArityMismatch, f + ": expected " + std::to_string(arity) + " labels");
    }
    std::vector<std::size_t> idx;
    for (const auto& a : args) idx.push_back(qs.index_of(label_of(a, f + ".args")));
    Vector value = parse_vector(require(list[i], "value", f), rep->module(), f + ".value");
    if (!skew) {
      assign(idx, value, f);
      continue;
    }
    std::array<int, 3> parity{qs.parity_bit(idx[0]), qs.parity_bit(idx[1]), qs.parity_bit(idx[2])};
    std::array<int, 3> perm{0, 1, 2};
    do {
      Rational s = permutation_sign(parity, perm);
      Vector permuted = s * value;
      assign({idx[perm[0]], idx[perm[1]], idx[perm[2]]}, permuted, f);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return Cochain(rep, level, parity, std::move(coeffs));
}

Json cochain_json(const Cochain& f) {
  const Representation& rep = f.rep();
  const ThreeLieSuperalgebra& q = rep.algebra();
  const SuperSpace& qs = q.space();
  Json values = Json::array();
  std::vector<std::size_t> wedges;
  std::size_t z = 0;
  for (std::size_t t = 0; t < f.tuple_count(); ++t) {
    auto v = f.value(t);
    if (is_zero(v)) continue;
    decode_tuple(rep, f.level(), t, wedges, z);
    Json args = Json::array();
    for (std::size_t w : wedges) {
      auto [x, y] = q.wedge().pair(w);
      args.push_back(qs.label(x));
      args.push_back(qs.label(y));
    }
    args.push_back(qs.label(z));
    values.push_back({{"args", args}, {"value", vector_json(rep.module(), v)}});
  }
  return {{"level", f.level()}, {"parity", bit(f.parity())}, {"values", values}};
}

DerivationPair parse_pair(const Json& j, const Representation& rep) {
  Parity degree = parse_parity(require(j, "degree", "pair"), "pair.degree");
  GradedLinearMap d_p = parse_map(require(j, "d_p", "pair"), rep.module(), rep.module(), degree, "pair.d_p");
  const SuperSpace& q = rep.algebra().space();
  GradedLinearMap d_q = parse_map(require(j, "d_q", "pair"), q, q, degree, "pair.d_q");
  return make_pair(rep, std::move(d_p), std::move(d_q));
}

Json pair_json(const DerivationPair& pair) {
  return {{"degree", bit(pair.degree)},
          {"d_p", matrix_json(pair.d_p.source(), pair.d_p.target(), pair.d_p.matrix())},
          {"d_q", matrix_json(pair.d_q.source(), pair.d_q.target(), pair.d_q.matrix())}};
}

Json violation_json(const Violation& v) {
  return {{"axiom", v.axiom}, {"tuple", v.tuple}, {"lhs", dense_json(v.lhs)}, {"rhs", dense_json(v.rhs)}};
}

}  // namespace super3lie
