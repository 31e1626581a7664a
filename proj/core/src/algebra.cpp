#include "profin/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "profin/structure.hpp"

namespace profin {

void FiniteCommutativeAlgebra::finish() {
  neg_.assign(size_, 0);
  for (RingElem a = 0; a < size_; ++a) {
    for (RingElem b = 0; b < size_; ++b) {
      if (add(a, b) == 0) {
        neg_[a] = b;
        break;
      }
    }
  }
  one_ = 0;
  for (RingElem e = 0; e < size_; ++e) {
    bool identity = true;
    for (RingElem x = 0; x < size_ && identity; ++x) identity = mul(e, x) == x;
    if (identity) {
      one_ = e;
      break;
    }
  }
  characteristic_ = 1;
  for (RingElem s = one_; s != 0; s = add(s, one_)) ++characteristic_;
  if (size_ == 1) characteristic_ = 1;
}

FiniteCommutativeAlgebra FiniteCommutativeAlgebra::from_tables(std::string name, std::size_t size,
                                                               std::vector<std::uint16_t> add,
                                                               std::vector<std::uint16_t> mul,
                                                               const Caps& caps) {
  if (size == 0) throw InvalidInput(name + ": empty ring");
  if (size > caps.algebra_order) throw CapExceeded("algebra order", caps.algebra_order, size);
  if (add.size() != size * size || mul.size() != size * size) {
    throw InvalidInput(name + ": table size mismatch");
  }
  for (auto v : add) {
    if (v >= size) throw InvalidInput(name + ": addition entry out of range");
  }
  for (auto v : mul) {
    if (v >= size) throw InvalidInput(name + ": multiplication entry out of range");
  }
  FiniteCommutativeAlgebra r;
  r.name_ = std::move(name);
  r.size_ = size;
  r.add_ = std::move(add);
  r.mul_ = std::move(mul);
  r.finish();
  if (size <= 256) {
    if (auto failure = r.axiom_violation()) throw InvalidInput(r.name_ + ": " + *failure);
  }
  return r;
}

std::optional<std::string> FiniteCommutativeAlgebra::axiom_violation() const {
  const auto n = size_;
  for (RingElem a = 0; a < n; ++a) {
    if (add(a, 0) != a) return "0 is not the additive identity";
    if (add(a, neg(a)) != 0) return "missing additive inverse";
    if (mul(one_, a) != a) return "no multiplicative identity";
    for (RingElem b = 0; b < n; ++b) {
      if (add(a, b) != add(b, a)) return "addition not commutative";
      if (mul(a, b) != mul(b, a)) return "multiplication not commutative";
      for (RingElem c = 0; c < n; ++c) {
        if (add(add(a, b), c) != add(a, add(b, c))) return "addition not associative";
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return "multiplication not associative";
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) return "not distributive";
      }
    }
  }
  return std::nullopt;
}

std::size_t FiniteCommutativeAlgebra::nilpotency_bound() const {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < size_) ++bits;
  return bits + 1;
}

bool FiniteCommutativeAlgebra::is_field() const {
  if (size_ < 2) return false;
  for (RingElem a = 1; a < size_; ++a) {
    bool invertible = false;
    for (RingElem b = 1; b < size_ && !invertible; ++b) invertible = mul(a, b) == one_;
    if (!invertible) return false;
  }
  return true;
}

// ------------------------------------------------------------- finite fields

namespace {

struct FieldSpec {
  std::uint32_t p;
  std::uint32_t degree;
  /// Monic irreducible modulus, low coefficients first, leading 1 omitted.
  std::vector<std::uint32_t> modulus;
};

FieldSpec field_spec(std::size_t q) {
  switch (q) {
    case 2: return {2, 1, {0}};
    case 3: return {3, 1, {0}};
    case 5: return {5, 1, {0}};
    case 7: return {7, 1, {0}};
    case 4: return {2, 2, {1, 1}};     // x^2 + x + 1
    case 8: return {2, 3, {1, 1, 0}};  // x^3 + x + 1
    case 9: return {3, 2, {1, 0}};     // x^2 + 1
    default: throw InvalidInput("no bundled field of order " + std::to_string(q));
  }
}

}  // namespace

FiniteCommutativeAlgebra finite_field(std::size_t q) {
  const auto spec = field_spec(q);
  const auto p = spec.p;
  const auto d = spec.degree;
  auto coeffs = [&](RingElem x) {
    std::vector<std::uint32_t> c(d);
    for (auto& v : c) {
      v = x % p;
      x /= p;
    }
    return c;
  };
  auto encode = [&](const std::vector<std::uint32_t>& c) {
    RingElem x = 0;
    for (std::size_t i = c.size(); i-- > 0;) x = x * p + c[i];
    return x;
  };
  auto add = [&](RingElem a, RingElem b) {
    auto ca = coeffs(a), cb = coeffs(b);
    for (std::size_t i = 0; i < d; ++i) ca[i] = (ca[i] + cb[i]) % p;
    return encode(ca);
  };
  auto mul = [&](RingElem a, RingElem b) {
    if (d == 1) return static_cast<RingElem>((a * b) % p);
    auto ca = coeffs(a), cb = coeffs(b);
    std::vector<std::uint32_t> prod(2 * d - 1, 0);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
    }
    // Reduce x^k for k >= d using x^d = -modulus(x).
    for (std::size_t k = prod.size(); k-- > d;) {
      auto top = prod[k];
      prod[k] = 0;
      for (std::size_t i = 0; i < d; ++i) {
        prod[k - d + i] = (prod[k - d + i] + (p - spec.modulus[i]) * top) % p;
      }
    }
    prod.resize(d);
    return encode(prod);
  };
  return FiniteCommutativeAlgebra::build("GF" + std::to_string(q), q, add, mul);
}

FiniteCommutativeAlgebra finite_field(const std::string& name) {
  if (name.size() < 3 || name.substr(0, 2) != "GF") throw InvalidInput("unknown field name: " + name);
  std::size_t q = 0;
  try {
    q = std::stoul(name.substr(2));
  } catch (const std::exception&) {
    throw InvalidInput("unknown field name: " + name);
  }
  return finite_field(q);
}

FiniteCommutativeAlgebra integers_mod(std::size_t n) {
  if (n == 0) throw InvalidInput("integers mod 0");
  return FiniteCommutativeAlgebra::build(
      "Z/" + std::to_string(n), n, [n](RingElem a, RingElem b) { return static_cast<RingElem>((a + b) % n); },
      [n](RingElem a, RingElem b) { return static_cast<RingElem>((std::size_t{a} * b) % n); });
}

std::vector<RingElem> subfield_elements(const FiniteCommutativeAlgebra& field, std::size_t q) {
  std::vector<RingElem> out;
  for (RingElem x = 0; x < field.size(); ++x) {
    RingElem y = field.one();
    for (std::size_t i = 0; i < q; ++i) y = field.mul(y, x);
    if (y == x) out.push_back(x);
  }
  if (out.size() != q || !is_subfield(field, out)) {
    throw PreconditionFailed(field.name() + " has no subfield of order " + std::to_string(q));
  }
  return out;
}

bool is_subfield(const FiniteCommutativeAlgebra& field, const std::vector<RingElem>& elements) {
  std::set<RingElem> s(elements.begin(), elements.end());
  if (!s.count(0) || !s.count(field.one())) return false;
  for (auto a : s) {
    if (!s.count(field.neg(a))) return false;
    bool has_inverse = a == 0;
    for (auto b : s) {
      if (!s.count(field.add(a, b)) || !s.count(field.mul(a, b))) return false;
      if (field.mul(a, b) == field.one()) has_inverse = true;
    }
    if (!has_inverse) return false;
  }
  return true;
}

// ---------------------------------------------------------- decomposition

std::vector<RingElem> find_field_isomorphism(const FiniteCommutativeAlgebra& from,
                                             const FiniteCommutativeAlgebra& to) {
  const auto q = from.size();
  if (q != to.size() || !from.is_field() || !to.is_field()) return {};
  auto mult_order = [](const FiniteCommutativeAlgebra& f, RingElem x) {
    std::size_t k = 1;
    for (RingElem y = x; y != f.one(); y = f.mul(y, x)) ++k;
    return k;
  };
  RingElem primitive = 0;
  for (RingElem x = 1; x < q; ++x) {
    if (mult_order(from, x) == q - 1) {
      primitive = x;
      break;
    }
  }
  for (RingElem h = 1; h < q; ++h) {
    if (mult_order(to, h) != q - 1) continue;
    std::vector<RingElem> map(q, 0);
    RingElem a = from.one(), b = to.one();
    for (std::size_t k = 0; k + 1 < q; ++k) {
      map[a] = b;
      a = from.mul(a, primitive);
      b = to.mul(b, h);
    }
    bool additive = true;
    for (RingElem x = 0; x < q && additive; ++x) {
      for (RingElem y = 0; y < q && additive; ++y) additive = map[from.add(x, y)] == to.add(map[x], map[y]);
    }
    if (additive) return map;
  }
  return {};
}

Decomposition mr_decompose(const FiniteCommutativeAlgebra& ring) {
  auto check = nilpotent_free_check(ring);
  if (!check.nilpotent_free) throw NilpotentElementFound(*check.witness);
  const auto n = ring.size();

  std::vector<RingElem> idempotents;
  for (RingElem e = 1; e < n; ++e) {
    if (ring.mul(e, e) == e) idempotents.push_back(e);
  }
  std::vector<RingElem> primitive;
  for (auto e : idempotents) {
    bool is_primitive = std::none_of(idempotents.begin(), idempotents.end(),
                                     [&](RingElem f) { return f != e && ring.mul(f, e) == f; });
    if (is_primitive) primitive.push_back(e);
  }

  Decomposition result;
  RingElem sum = 0;
  for (auto e : primitive) {
    sum = ring.add(sum, e);
    std::set<RingElem> span;
    for (RingElem x = 0; x < n; ++x) span.insert(ring.mul(e, x));
    std::vector<RingElem> members(span.begin(), span.end());  // 0 is first
    std::map<RingElem, RingElem> local;
    for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<RingElem>(i);
    auto field = FiniteCommutativeAlgebra::build(
        "factor", members.size(),
        [&](RingElem a, RingElem b) { return local.at(ring.add(members[a], members[b])); },
        [&](RingElem a, RingElem b) { return local.at(ring.mul(members[a], members[b])); });
    if (!field.is_field()) throw Error("mr_decompose: factor e R is not a field");
    std::vector<RingElem> iso;
    try {
      iso = find_field_isomorphism(field, finite_field(field.size()));
    } catch (const InvalidInput&) {
      // Not a bundled field size; the factor is still reported.
    }
    result.factors.push_back({e, std::move(members), std::move(field), std::move(iso)});
  }
  if (sum != ring.one()) throw Error("mr_decompose: primitive idempotents do not sum to 1");

  // x -> (e_i x)_i must be a bijection preserving + and *.
  std::map<std::vector<RingElem>, RingElem> seen;
  result.coordinates.resize(n);
  for (RingElem x = 0; x < n; ++x) {
    std::vector<RingElem> coords;
    for (const auto& f : result.factors) {
      auto y = ring.mul(f.idempotent, x);
      auto it = std::lower_bound(f.members.begin(), f.members.end(), y);
      coords.push_back(static_cast<RingElem>(it - f.members.begin()));
    }
    if (!seen.emplace(coords, x).second) throw Error("mr_decompose: coordinate map not injective");
    result.coordinates[x] = std::move(coords);
  }
  std::size_t product = 1;
  for (const auto& f : result.factors) product *= f.field.size();
  if (product != n) throw Error("mr_decompose: factor sizes do not multiply to |R|");
  for (RingElem x = 0; x < n; ++x) {
    for (RingElem y = 0; y < n; ++y) {
      const auto& s = result.coordinates[ring.add(x, y)];
      const auto& p = result.coordinates[ring.mul(x, y)];
      for (std::size_t i = 0; i < result.factors.size(); ++i) {
        const auto& f = result.factors[i].field;
        if (s[i] != f.add(result.coordinates[x][i], result.coordinates[y][i]) ||
            p[i] != f.mul(result.coordinates[x][i], result.coordinates[y][i])) {
          throw Error("mr_decompose: coordinate map is not a ring homomorphism");
        }
      }
    }
  }
  return result;
}

}  // namespace profin
