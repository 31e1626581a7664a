#include "profin/module_ring.hpp"

#include <algorithm>
#include <random>

#include "profin/errors.hpp"
#include "profin/structure.hpp"

namespace profin {

GModuleAction GModuleAction::create(GroupPtr group, std::uint32_t p, std::size_t dim,
                                    std::vector<gfp::Matrix> matrices, const Caps& caps) {
  if (!is_prime(p)) throw InvalidInput("module characteristic " + std::to_string(p) + " is not prime");
  std::size_t space = 1;
  for (std::size_t i = 0; i < dim; ++i) {
    space *= p;
    if (space > caps.algebra_order) throw CapExceeded("module size", caps.algebra_order, space);
  }
  const auto n = group->order();
  if (matrices.size() != n) throw InvalidInput("need one matrix per group element");
  for (ElementId h = 0; h < n; ++h) {
    const auto& m = matrices[h];
    if (m.size() != dim) throw InvalidInput("matrix for element " + std::to_string(h) + " has wrong shape");
    for (const auto& row : m) {
      if (row.size() != dim) throw InvalidInput("matrix for element " + std::to_string(h) + " has wrong shape");
      for (auto x : row) {
        if (x >= p) throw InvalidInput("matrix entry out of range for element " + std::to_string(h));
      }
    }
    if (!gfp::is_invertible(m, p)) throw InvalidInput("matrix for element " + std::to_string(h) + " is singular");
  }
  if (matrices[0] != gfp::identity(dim)) throw InvalidInput("identity element must act as the identity matrix");
  for (ElementId g = 0; g < n; ++g) {
    for (ElementId h = 0; h < n; ++h) {
      if (gfp::multiply(matrices[g], matrices[h], p) != matrices[group->mul(g, h)]) {
        throw InvalidInput("action is not a homomorphism at (" + std::to_string(g) + ", " + std::to_string(h) + ")");
      }
    }
  }
  GModuleAction a;
  a.group_ = std::move(group);
  a.p_ = p;
  a.dim_ = dim;
  a.space_size_ = space;
  a.matrices_ = std::move(matrices);
  return a;
}

GModuleAction GModuleAction::from_partial(GroupPtr group, std::uint32_t p, std::size_t dim,
                                          const std::map<ElementId, gfp::Matrix>& given, const Caps& caps) {
  if (!is_prime(p)) throw InvalidInput("module characteristic " + std::to_string(p) + " is not prime");
  const auto n = group->order();
  std::vector<std::optional<gfp::Matrix>> known(n);
  for (const auto& [h, m] : given) {
    if (h >= n) throw InvalidInput("matrix given for unknown element " + std::to_string(h));
    for (const auto& row : m) {
      if (row.size() != dim) throw InvalidInput("matrix for element " + std::to_string(h) + " has wrong shape");
    }
    if (m.size() != dim) throw InvalidInput("matrix for element " + std::to_string(h) + " has wrong shape");
  }
  known[0] = gfp::identity(dim);
  std::vector<ElementId> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto g = queue[i];
    for (const auto& [h, m] : given) {
      const auto gh = group->mul(g, h);
      if (known[gh]) continue;
      known[gh] = gfp::multiply(*known[g], m, p);
      queue.push_back(gh);
    }
  }
  if (queue.size() != n) throw InvalidInput("given matrices do not cover a generating set");
  std::vector<gfp::Matrix> all(n);
  for (ElementId h = 0; h < n; ++h) all[h] = std::move(*known[h]);
  for (const auto& [h, m] : given) {
    if (all[h] != m) throw InvalidInput("action is not a homomorphism at element " + std::to_string(h));
  }
  return create(std::move(group), p, dim, std::move(all), caps);
}

gfp::Vec GModuleAction::decode(RingElem id) const {
  gfp::Vec v(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    v[i] = id % p_;
    id /= p_;
  }
  return v;
}

RingElem GModuleAction::encode(const gfp::Vec& v) const {
  if (v.size() != dim_) throw InvalidInput("vector has wrong dimension");
  RingElem id = 0;
  for (std::size_t i = dim_; i-- > 0;) {
    if (v[i] >= p_) throw InvalidInput("vector entry out of range");
    id = id * p_ + v[i];
  }
  return id;
}

RingElem GModuleAction::add(RingElem a, RingElem b) const {
  RingElem out = 0, scale = 1;
  for (std::size_t i = 0; i < dim_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

RingElem GModuleAction::act_id(RingElem v, ElementId h) const { return encode(act(decode(v), h)); }

OrbitSpan orbit_span_check(const GModuleAction& action, const gfp::Vec& v) {
  if (v.size() != action.dim()) throw InvalidInput("vector has wrong dimension");
  OrbitSpan out;
  gfp::Matrix rows;
  for (ElementId h = 0; h < action.group()->order() && out.span_dim < action.dim(); ++h) {
    rows.push_back(action.act(v, h));
    if (gfp::rank(rows, action.p()) > out.span_dim) {
      out.basis.push_back(h);
      ++out.span_dim;
    } else {
      rows.pop_back();
    }
  }
  out.spans = out.span_dim == action.dim();
  return out;
}

TranslateDecomposition translate_decomposition(const GModuleAction& action, const gfp::Vec& v,
                                               const gfp::Vec& w) {
  if (!orbit_span_check(action, v).spans) throw PreconditionFailed("translates of v do not span V");
  const auto target = action.encode(w);
  const auto n = action.group()->order();
  std::vector<RingElem> translates(n);
  for (ElementId h = 0; h < n; ++h) translates[h] = action.encode(action.act(v, h));

  const auto size = action.space_size();
  std::vector<std::size_t> depth(size, SIZE_MAX);
  std::vector<RingElem> parent(size, 0);
  std::vector<ElementId> via(size, 0);
  std::vector<RingElem> queue{0};
  depth[0] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto x = queue[i];
    for (ElementId h = 0; h < n; ++h) {
      const auto y = action.add(x, translates[h]);
      if (depth[y] != SIZE_MAX) continue;
      depth[y] = depth[x] + 1;
      parent[y] = x;
      via[y] = h;
      queue.push_back(y);
    }
  }
  TranslateDecomposition out;
  out.bound = depth[queue.back()];
  for (auto x = target; x != 0; x = parent[x]) out.terms.push_back(via[x]);
  std::sort(out.terms.begin(), out.terms.end());
  return out;
}

RingConstruction ring_construct(std::shared_ptr<const GModuleAction> action, const gfp::Vec& v, const Caps& caps) {
  const auto span = orbit_span_check(*action, v);
  if (!span.spans) throw PreconditionFailed("translates of v do not span V");
  const auto& group = action->group();
  const auto n = group->order();
  const auto p = action->p();
  const auto d = action->dim();

  gfp::Matrix translates(n);
  for (ElementId h = 0; h < n; ++h) translates[h] = action->act(v, h);
  auto phi = [&](const gfp::Vec& coeffs) {
    gfp::Vec out(d, 0);
    for (ElementId g = 0; g < n; ++g) {
      if (coeffs[g] == 0) continue;
      for (std::size_t i = 0; i < d; ++i) out[i] = (out[i] + coeffs[g] * translates[g][i]) % p;
    }
    return out;
  };

  RingConstruction result;
  // Ann(v) is closed under right multiplication automatically; the ring
  // structure needs closure under left multiplication by each h as well.
  const auto annihilator = gfp::left_kernel(translates, p);
  result.annihilator_dim = annihilator.size();
  for (const auto& a : annihilator) {
    for (ElementId h = 0; h < n; ++h) {
      gfp::Vec shifted(n, 0);
      for (ElementId g = 0; g < n; ++g) shifted[group->mul(h, g)] = a[g];
      auto image = phi(shifted);
      if (std::any_of(image.begin(), image.end(), [](std::uint32_t x) { return x != 0; })) {
        result.witness = IllDefinedWitness{h, a, image};
        return result;
      }
    }
  }

  const auto size = action->space_size();
  if (size > caps.algebra_order) throw CapExceeded("algebra order", caps.algebra_order, size);
  ModuleRing ring;
  ring.action_ = action;
  ring.v_ = v;
  ring.size_ = size;
  ring.one_ = action->encode(v);

  // Coordinates of each standard unit vector in the translate basis.
  gfp::Matrix basis_vectors;
  for (auto h : span.basis) basis_vectors.push_back(translates[h]);
  std::vector<gfp::Vec> unit_coords(d);
  for (std::size_t k = 0; k < d; ++k) {
    gfp::Vec e(d, 0);
    e[k] = 1;
    unit_coords[k] = *gfp::solve_combination(basis_vectors, e, p);
  }
  // x * e_k for every x, via x = sum c_j v^{b_j}: x * v^{b_i} = sum c_j v^{b_j b_i}.
  std::vector<std::vector<RingElem>> times_unit(size, std::vector<RingElem>(d));
  for (RingElem x = 0; x < size; ++x) {
    auto cx = *gfp::solve_combination(basis_vectors, action->decode(x), p);
    for (std::size_t k = 0; k < d; ++k) {
      gfp::Vec acc(d, 0);
      for (std::size_t i = 0; i < d; ++i) {
        if (unit_coords[k][i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
          const std::uint64_t c = std::uint64_t{cx[j]} * unit_coords[k][i] % p;
          if (c == 0) continue;
          const auto& t = translates[group->mul(span.basis[j], span.basis[i])];
          for (std::size_t r = 0; r < d; ++r) acc[r] = static_cast<std::uint32_t>((acc[r] + c * t[r]) % p);
        }
      }
      times_unit[x][k] = action->encode(acc);
    }
  }
  ring.mul_.assign(size * size, 0);
  for (RingElem x = 0; x < size; ++x) {
    for (RingElem y = 1; y < size; ++y) {
      // y = (y - e_k) + e_k for its lowest nonzero digit k.
      std::size_t k = 0;
      RingElem place = 1;
      while ((y / place) % p == 0) {
        place *= p;
        ++k;
      }
      const RingElem prev = ring.mul(x, y - place);
      ring.mul_[std::size_t{x} * size + y] = static_cast<std::uint16_t>(action->add(prev, times_unit[x][k]));
    }
  }
  result.ring = std::move(ring);
  return result;
}

bool ModuleRing::is_commutative() const {
  for (RingElem a = 0; a < size_; ++a) {
    for (RingElem b = a + 1; b < size_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

bool ModuleRing::is_associative() const {
  // Bilinearity reduces associativity to triples of unit vectors.
  std::vector<RingElem> units;
  for (RingElem place = 1, k = 0; k < action_->dim(); ++k, place *= action_->p()) units.push_back(place);
  for (auto a : units) {
    for (auto b : units) {
      for (auto c : units) {
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) return false;
      }
    }
  }
  return true;
}

FiniteCommutativeAlgebra ModuleRing::to_algebra(std::string name) const {
  if (!is_commutative()) throw PreconditionFailed("module ring is not commutative");
  return FiniteCommutativeAlgebra::build(
      std::move(name), size_, [this](RingElem a, RingElem b) { return add(a, b); },
      [this](RingElem a, RingElem b) { return mul(a, b); });
}

AgreementReport decomposition_agreement(const ModuleRing& ring, std::size_t samples, std::uint64_t seed) {
  const auto& action = ring.action();
  const auto& group = action.group();
  const auto size = ring.size();
  std::vector<std::vector<ElementId>> terms(size);
  for (RingElem x = 0; x < size; ++x) terms[x] = translate_decomposition(action, ring.generator(), action.decode(x)).terms;
  std::vector<RingElem> translates(group->order());
  for (ElementId h = 0; h < group->order(); ++h) translates[h] = action.encode(action.act(ring.generator(), h));

  AgreementReport report;
  auto check = [&](RingElem x, RingElem y) {
    RingElem sum = 0;
    for (auto h : terms[x]) {
      for (auto k : terms[y]) sum = action.add(sum, translates[group->mul(h, k)]);
    }
    ++report.checked;
    if (sum != ring.mul(x, y) && report.agrees) {
      report.agrees = false;
      report.mismatch = {x, y};
    }
  };
  if (size * size <= 65536) {
    for (RingElem x = 0; x < size; ++x) {
      for (RingElem y = 0; y < size; ++y) check(x, y);
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<RingElem> pick(0, static_cast<RingElem>(size - 1));
    for (std::size_t s = 0; s < samples; ++s) {
      const auto x = pick(rng);
      check(x, pick(rng));
    }
  }
  return report;
}

FaithfulnessReport faithfulness_report(const GModuleAction& action) {
  FaithfulnessReport report;
  const auto n = action.group()->order();
  const auto identity = gfp::identity(action.dim());
  for (ElementId h = 0; h < n; ++h) {
    if (action.matrix(h) == identity) report.kernel.push_back(h);
  }
  report.stabilizer_index.resize(action.space_size());
  for (RingElem x = 0; x < action.space_size(); ++x) {
    std::size_t stab = 0;
    for (ElementId h = 0; h < n; ++h) {
      if (action.act_id(x, h) == x) ++stab;
    }
    report.stabilizer_index[x] = n / stab;
    if (stab == 1 && !report.has_regular_orbit) {
      report.has_regular_orbit = true;
      report.regular_vector = x;
    }
  }
  return report;
}

}  // namespace profin
