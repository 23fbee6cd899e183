#include "hgw/galois_model.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>

#include "hgw/error.hpp"
#include "hgw/group_dsl.hpp"
#include "hgw/hgs.hpp"
#include "hgw/parallel.hpp"

namespace hgw {

namespace {

void trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

/// a mod f, f monic.
FpPoly poly_mod(const PrimeField& fld, FpPoly a, const FpPoly& f) {
  trim(a);
  const std::size_t d = f.size() - 1;
  while (a.size() > d) {
    const Fp lead = a.back();
    const std::size_t shift = a.size() - 1 - d;
    for (std::size_t i = 0; i <= d; ++i) a[shift + i] = fld.sub(a[shift + i], fld.mul(lead, f[i]));
    trim(a);
  }
  return a;
}

FpPoly poly_mul(const PrimeField& fld, const FpPoly& a, const FpPoly& b) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = fld.add(r[i + j], fld.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

FpPoly poly_powmod(const PrimeField& fld, FpPoly a, std::uint64_t e, const FpPoly& f) {
  FpPoly r = poly_mod(fld, {1}, f);
  a = poly_mod(fld, a, f);
  while (e) {
    if (e & 1) r = poly_mod(fld, poly_mul(fld, r, a), f);
    a = poly_mod(fld, poly_mul(fld, a, a), f);
    e >>= 1;
  }
  return r;
}

FpPoly poly_sub(const PrimeField& fld, FpPoly a, const FpPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = fld.sub(a[i], b[i]);
  trim(a);
  return a;
}

FpPoly poly_gcd(const PrimeField& fld, FpPoly a, FpPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    const Fp s = fld.inv(b.back());
    FpPoly monic = b;
    for (Fp& c : monic) c = fld.mul(c, s);
    a = poly_mod(fld, a, monic);
    std::swap(a, b);
  }
  return a;
}

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t q = 2; q <= n; ++q) {
    if (n % q == 0 && is_prime(q)) out.push_back(q);
  }
  return out;
}

std::vector<Fp> flatten(const std::vector<FieldElem>& coeffs) {
  std::vector<Fp> out;
  for (const auto& c : coeffs) out.insert(out.end(), c.begin(), c.end());
  return out;
}

std::vector<Fp> flatten(const FpMatrix& m) {
  std::vector<Fp> out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    out.insert(out.end(), r.begin(), r.end());
  }
  return out;
}

PermGroup stable_perm_group(const StableSubgroup& p) {
  std::vector<Permutation> gens;
  for (Index s : p.p.generators) gens.push_back(p.view->by_point[s]);
  auto elems = p.permutations();
  std::sort(elems.begin(), elems.end());
  return PermGroup::from_elements(std::move(gens), std::move(elems), p.view->g().order());
}

bool fixedsum_hypothesis(const ExtensionModel& model, std::span<const Index> s, const FpMatrix& f_basis) {
  const Fp size = model.field().from_int(static_cast<long long>(s.size()));
  for (std::size_t r = 0; r < f_basis.rows(); ++r) {
    const FieldElem x = f_basis.row(r);
    FieldElem sum = model.zero();
    for (Index g : s) sum = model.add(sum, model.apply(g, x));
    if (sum != model.scale(size, x)) return false;
  }
  return true;
}

}  // namespace

bool is_irreducible(const PrimeField& fld, const FpPoly& poly) {
  FpPoly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const Fp s = fld.inv(f.back());
  for (Fp& c : f) c = fld.mul(c, s);
  const std::size_t n = f.size() - 1;
  if (n == 1) return true;
  // Rabin: f | X^(p^n) - X and gcd(X^(p^(n/q)) - X, f) = 1 for primes q | n.
  std::vector<FpPoly> frob_powers{poly_mod(fld, {0, 1}, f)};
  for (std::size_t k = 1; k <= n; ++k) frob_powers.push_back(poly_powmod(fld, frob_powers.back(), fld.p, f));
  const FpPoly x = poly_mod(fld, {0, 1}, f);
  if (!poly_sub(fld, frob_powers[n], x).empty()) return false;
  for (std::size_t q : prime_divisors(n)) {
    if (poly_gcd(fld, f, poly_sub(fld, frob_powers[n / q], x)).size() != 1) return false;
  }
  return true;
}

FpPoly least_irreducible(Fp p, std::size_t n) {
  const PrimeField fld(p);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  FpPoly f(n + 1, 0);
  f[n] = 1;
  // X^(n-1) is the most significant digit, the constant term the least.
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = static_cast<Fp>(c % p);
      c /= p;
    }
    if (is_irreducible(fld, f)) return f;
  }
  throw Error("no irreducible polynomial found");
}

ExtensionModel::ExtensionModel(Fp p, std::size_t n) : field_(p), n_(n) {
  if (n < 1 || n > 8) throw Error("extension degree must be between 1 and 8");
  if (p <= n) throw Error("characteristic must exceed the extension degree");
  modulus_ = least_irreducible(p, n);
  group_ = make_group("C" + std::to_string(n));

  FpMatrix frob(n, n, p);
  for (std::size_t j = 0; j < n; ++j) {
    FieldElem img = pow(basis(j), p);
    for (std::size_t i = 0; i < n; ++i) frob.at(i, j) = img[i];
  }
  frobenius_.push_back(FpMatrix::identity(n, p));
  for (std::size_t i = 1; i < n; ++i) {
    frobenius_.push_back(frobenius_.back() * frob);
    if (frobenius_.back() == frobenius_.front()) throw TheoremViolation("Frobenius order below n");
  }
  if (!(frobenius_.back() * frob == frobenius_.front())) throw TheoremViolation("Frobenius order is not n");
  for (std::size_t g = 0; g < n; ++g) {
    if (group_->mul(1 % n, static_cast<Index>(g)) != (g + 1) % n) throw Error("unexpected cyclic group layout");
  }
}

ExtensionModel make_extension(Fp p, std::size_t n) { return ExtensionModel(p, n); }

FieldElem ExtensionModel::one() const { return scalar(1); }

FieldElem ExtensionModel::basis(std::size_t i) const {
  FieldElem x = zero();
  if (i >= n_) throw Error("basis index out of range");
  if (n_ == 1) return one();
  x[i] = 1;
  return x;
}

FieldElem ExtensionModel::scalar(Fp c) const {
  FieldElem x = zero();
  x[0] = c % field_.p;
  return x;
}

FieldElem ExtensionModel::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<Fp> dist(0, field_.p - 1);
  FieldElem x(n_);
  for (auto& c : x) c = dist(rng);
  return x;
}

FieldElem ExtensionModel::add(const FieldElem& a, const FieldElem& b) const {
  FieldElem r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = field_.add(a[i], b[i]);
  return r;
}

FieldElem ExtensionModel::sub(const FieldElem& a, const FieldElem& b) const {
  FieldElem r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = field_.sub(a[i], b[i]);
  return r;
}

FieldElem ExtensionModel::mul(const FieldElem& a, const FieldElem& b) const {
  FpPoly r = poly_mod(field_, poly_mul(field_, a, b), modulus_);
  r.resize(n_, 0);
  return r;
}

FieldElem ExtensionModel::scale(Fp c, const FieldElem& a) const {
  FieldElem r(n_);
  for (std::size_t i = 0; i < n_; ++i) r[i] = field_.mul(c, a[i]);
  return r;
}

FieldElem ExtensionModel::pow(FieldElem a, std::uint64_t e) const {
  FieldElem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

FpMatrix ExtensionModel::mul_matrix(const FieldElem& x) const {
  FpMatrix m(n_, n_, field_.p);
  for (std::size_t j = 0; j < n_; ++j) {
    FieldElem col = mul(x, basis(j));
    for (std::size_t i = 0; i < n_; ++i) m.at(i, j) = col[i];
  }
  return m;
}

std::vector<FieldElem> embed_K(const ExtensionModel& model, const FieldElem& x) {
  std::vector<FieldElem> out;
  for (std::size_t g = 0; g < model.n(); ++g) out.push_back(model.apply(static_cast<Index>(g), x));
  return out;
}

FixedRing fixed_ring_basis(const ExtensionModel& model, const PermGroup& v) {
  if (v.degree() != model.n()) throw Error("group must act on the points of G");
  std::vector<Permutation> twist;
  for (Index s : generating_sequence(*model.group())) twist.push_back(left_translation(*model.group(), s));
  return fixed_ring_basis(model, v, twist);
}

FixedRing fixed_ring_basis(const ExtensionModel& model, const PermGroup& v, const std::vector<Permutation>& twist) {
  const auto gens = generating_sequence(*model.group());
  if (twist.size() != gens.size()) throw Error("one twist per generator of G required");
  const std::size_t n = model.n();
  const std::size_t d = v.order();
  const Fp p = model.p();
  FpMatrix eq(0, d * n, p);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const FpMatrix& a = model.automorphism_matrix(gens[i]);
    const Permutation t_inv = twist[i].inverse();
    for (std::size_t u = 0; u < d; ++u) {
      auto w = v.index_of(twist[i] * v.elements()[u] * t_inv);
      if (!w) throw Error("twist does not normalize the group");
      // gamma(c_u) - c_w = 0
      for (std::size_t r = 0; r < n; ++r) {
        std::vector<Fp> row(d * n, 0);
        for (std::size_t j = 0; j < n; ++j) row[u * n + j] = a.at(r, j);
        row[*w * n + r] = model.field().sub(row[*w * n + r], 1);
        eq.append_row(row);
      }
    }
  }
  FpMatrix sol = gens.empty() ? FpMatrix::identity(d * n, p) : nullspace(eq);
  FixedRing ring{v, twist, {}};
  for (std::size_t r = 0; r < sol.rows(); ++r) {
    HopfElement h;
    const auto row = sol.row(r);
    for (std::size_t u = 0; u < d; ++u) h.coeffs.emplace_back(row.begin() + u * n, row.begin() + (u + 1) * n);
    ring.basis.push_back(std::move(h));
  }
  if (ring.dimension() != d) throw TheoremViolation("fixed ring dimension differs from the group order");
  return ring;
}

FieldElem counit(const ExtensionModel& model, const HopfElement& h) {
  FieldElem s = model.zero();
  for (const auto& c : h.coeffs) s = model.add(s, c);
  return s;
}

HopfElement hopf_product(const ExtensionModel& model, const PermGroup& v, const HopfElement& a,
                         const HopfElement& b) {
  HopfElement out{std::vector<FieldElem>(v.order(), model.zero())};
  for (std::size_t i = 0; i < v.order(); ++i) {
    for (std::size_t j = 0; j < v.order(); ++j) {
      auto k = v.index_of(v.elements()[i] * v.elements()[j]);
      if (!k) throw Error("group is not closed");
      out.coeffs[*k] = model.add(out.coeffs[*k], model.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return out;
}

FpMatrix coefficient_matrix(const ExtensionModel& model, const FixedRing& ring) {
  FpMatrix m(0, ring.group.order() * model.n(), model.p());
  for (const auto& h : ring.basis) m.append_row(flatten(h.coeffs));
  return m;
}

bool closed_under_product(const ExtensionModel& model, const FixedRing& ring) {
  const FpMatrix span = coefficient_matrix(model, ring);
  FpMatrix products(0, span.cols(), model.p());
  for (const auto& a : ring.basis) {
    for (const auto& b : ring.basis) products.append_row(flatten(hopf_product(model, ring.group, a, b).coeffs));
  }
  return row_space_contains(span, products);
}

FieldElem act(const ExtensionModel& model, const PermGroup& v, const HopfElement& h, const FieldElem& x) {
  const std::size_t n = model.n();
  if (v.degree() != n || h.coeffs.size() != v.order()) throw Error("element does not match the group");
  const auto e = embed_K(model, x);

  // e-basis: u sends e_g to e_u(g); component t collects Z_t = {(u, g) : u(g) = t}.
  std::vector<FieldElem> y_vec(n, model.zero());
  for (std::size_t u = 0; u < v.order(); ++u) {
    const Permutation& perm = v.elements()[u];
    for (std::size_t g = 0; g < n; ++g) {
      Point t = perm(static_cast<Point>(g));
      y_vec[t] = model.add(y_vec[t], model.mul(h.coeffs[u], e[g]));
    }
  }
  const FieldElem y = y_vec[0];
  if (embed_K(model, y) != y_vec) throw Error("e-basis action left the image of K");

  FieldElem closed = model.zero();
  for (std::size_t u = 0; u < v.order(); ++u) {
    Index g = v.elements()[u].inverse()(0);
    closed = model.add(closed, model.mul(h.coeffs[u], model.apply(g, x)));
  }
  if (closed != y) throw Error("closed-form action disagrees with the e-basis action");
  return y;
}

FpMatrix act_matrix(const ExtensionModel& model, const PermGroup& v, const HopfElement& h) {
  FpMatrix m(model.n(), model.n(), model.p());
  for (std::size_t u = 0; u < v.order(); ++u) {
    Index g = v.elements()[u].inverse()(0);
    m = m + model.mul_matrix(h.coeffs[u]) * model.automorphism_matrix(g);
  }
  return m;
}

bool measuring_check(const ExtensionModel& model, const PermGroup& v, std::size_t samples, std::mt19937_64& rng) {
  const std::size_t n = model.n();
  auto move = [&](const Permutation& u, const std::vector<FieldElem>& a) {
    std::vector<FieldElem> r(n);
    for (std::size_t g = 0; g < n; ++g) r[u(static_cast<Point>(g))] = a[g];
    return r;
  };
  auto times = [&](const std::vector<FieldElem>& a, const std::vector<FieldElem>& b) {
    std::vector<FieldElem> r(n);
    for (std::size_t g = 0; g < n; ++g) r[g] = model.mul(a[g], b[g]);
    return r;
  };
  for (std::size_t s = 0; s < samples; ++s) {
    const FieldElem x = model.random(rng), y = model.random(rng);
    const auto ex = embed_K(model, x), ey = embed_K(model, y);
    if (embed_K(model, model.mul(x, y)) != times(ex, ey)) return false;
    if (embed_K(model, model.add(x, y)) != std::vector<FieldElem>([&] {
          std::vector<FieldElem> r(n);
          for (std::size_t g = 0; g < n; ++g) r[g] = model.add(ex[g], ey[g]);
          return r;
        }())) {
      return false;
    }
    for (const auto& u : v.elements()) {
      if (move(u, times(ex, ey)) != times(move(u, ex), move(u, ey))) return false;
    }
  }
  return true;
}

FpMatrix fixed_space(const ExtensionModel& model, std::span<const Index> automorphisms) {
  const std::size_t n = model.n();
  FpMatrix eq(0, n, model.p());
  const FpMatrix id = FpMatrix::identity(n, model.p());
  for (Index g : automorphisms) {
    FpMatrix d = model.automorphism_matrix(g) - id;
    for (std::size_t r = 0; r < n; ++r) eq.append_row(d.row(r));
  }
  return nullspace(eq);
}

FpMatrix fixed_field(const ExtensionModel& model, const StableSubgroup& p) {
  const std::size_t n = model.n();
  const PermGroup pg = stable_perm_group(p);
  const FixedRing h = fixed_ring_basis(model, pg);
  FpMatrix eq(0, n, model.p());
  for (const auto& b : h.basis) {
    FpMatrix d = act_matrix(model, pg, b) - model.mul_matrix(counit(model, b));
    for (std::size_t r = 0; r < n; ++r) eq.append_row(d.row(r));
  }
  FpMatrix f = nullspace(eq);
  if (f.rows() * pg.order() != n) throw TheoremViolation("fixed field has dimension other than n/|P|");

  FpMatrix products(0, n, model.p());
  products.append_row(model.one());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = i; j < f.rows(); ++j) products.append_row(model.mul(f.row(i), f.row(j)));
  }
  if (!row_space_contains(f, products)) throw TheoremViolation("fixed space is not a subfield");

  const PsiResult j = psi(p);
  if (!same_row_space(f, fixed_space(model, j.j.members))) {
    throw TheoremViolation("fixed field of H_P differs from the fixed field of Psi(P)");
  }
  return f;
}

bool hopf_galois_rank(const ExtensionModel& model, const FixedRing& h) {
  const std::size_t n = model.n();
  if (h.group.degree() != n) throw Error("fixed ring must be over a group acting on G");
  FpMatrix span(0, n * n, model.p());
  for (std::size_t a = 0; a < n; ++a) {
    const FpMatrix xa = model.mul_matrix(model.basis(a));
    for (const auto& b : h.basis) span.append_row(flatten(xa * act_matrix(model, h.group, b)));
  }
  return rank(span) == n * n;
}

bool fixedsum_check(const ExtensionModel& model, std::span<const Index> s, const FpMatrix& f_basis,
                    const Subgroup& j) {
  if (model.p() <= model.n()) throw Error("power-sum argument needs p > |G|");
  if (!fixedsum_hypothesis(model, s, f_basis)) return true;
  return std::all_of(s.begin(), s.end(), [&](Index g) { return j.contains(g); });
}

FixedsumSummary fixedsum_exhaustive(const ExtensionModel& model) {
  if (model.p() <= model.n()) throw Error("power-sum argument needs p > |G|");
  FixedsumSummary out;
  const std::size_t n = model.n();
  for (const Subgroup& j : subgroups(*model.group())) {
    ++out.subfields;
    const FpMatrix f = fixed_space(model, j.members);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      std::vector<Index> s;
      for (std::size_t g = 0; g < n; ++g) {
        if (mask >> g & 1) s.push_back(static_cast<Index>(g));
      }
      ++out.subsets;
      const bool hyp = fixedsum_hypothesis(model, s, f);
      out.hypothesis_held += hyp;
      out.counterexamples += !fixedsum_check(model, s, f, j);
    }
  }
  return out;
}

ExactSequenceReport exact_sequence_check(const ExtensionModel& model, const StableSubgroup& p) {
  if (!p.normal_in_n) throw Error("exact sequence needs P normal in N");
  const std::size_t n = model.n();
  const PermGroup& big = p.view->record.n;
  if (big.degree() != n) throw Error("structure is not over the model's Galois group");
  const PermGroup small = stable_perm_group(p);
  const PsiResult j = psi(p);
  const QuotientHGS q = quotient_structure(p, j);
  const Fp prime = model.p();

  ExactSequenceReport rep;
  rep.n_order = big.order();
  rep.p_order = small.order();
  rep.quotient_order = q.nbar.order();

  const FixedRing hn = fixed_ring_basis(model, big);
  const FixedRing hp = fixed_ring_basis(model, small);
  const FixedRing hq = fixed_ring_basis(model, q.nbar, q.gbar_gens);
  rep.dim_hn = hn.dimension();
  rep.dim_hp = hp.dimension();
  rep.dim_hq = hq.dimension();
  const FpMatrix mn = coefficient_matrix(model, hn);

  // (i) H_P inside H_N, extending coefficients by zero.
  auto extend = [&](const HopfElement& h) {
    HopfElement out{std::vector<FieldElem>(big.order(), model.zero())};
    for (std::size_t a = 0; a < small.order(); ++a) out.coeffs[*big.index_of(small.elements()[a])] = h.coeffs[a];
    return out;
  };
  {
    FpMatrix mp(0, mn.cols(), prime);
    for (const auto& h : hp.basis) mp.append_row(flatten(extend(h).coeffs));
    rep.inclusion = row_space_contains(mn, mp);
  }

  // (ii) projection N -> N/P onto H_{N/P}.
  std::vector<std::size_t> to_bar(big.order());
  for (std::size_t a = 0; a < big.order(); ++a) {
    to_bar[a] = *q.nbar.index_of(induced_block_perm(big.elements()[a], q.space));
  }
  FpMatrix proj(0, q.nbar.order() * n, prime);
  for (const auto& h : hn.basis) {
    std::vector<FieldElem> c(q.nbar.order(), model.zero());
    for (std::size_t a = 0; a < big.order(); ++a) c[to_bar[a]] = model.add(c[to_bar[a]], h.coeffs[a]);
    proj.append_row(flatten(c));
  }
  rep.projection_rank = rank(proj);
  rep.surjection = rep.projection_rank == q.nbar.order() && row_space_contains(coefficient_matrix(model, hq), proj);

  // (iii) kernel of the projection restricted to H_N.
  const FpMatrix combos = nullspace(proj.transpose());
  rep.kernel_dim = combos.rows();
  rep.kernel = rep.kernel_dim + q.nbar.order() == big.order();
  const FpMatrix ker = combos.rows() ? combos * mn : FpMatrix(0, mn.cols(), prime);

  // (iv) kernel = H_N * H_P^+, with H_P^+ the kernel of the counit on H_P.
  FpMatrix eps(1, hp.dimension(), prime);
  bool scalar_counits = true;
  for (std::size_t i = 0; i < hp.dimension(); ++i) {
    FieldElem e = counit(model, hp.basis[i]);
    scalar_counits = scalar_counits && std::all_of(e.begin() + 1, e.end(), [](Fp c) { return c == 0; });
    eps.at(0, i) = e[0];
  }
  const FpMatrix aug = nullspace(eps);
  std::vector<HopfElement> plus;
  for (std::size_t r = 0; r < aug.rows(); ++r) {
    HopfElement h{std::vector<FieldElem>(small.order(), model.zero())};
    for (std::size_t i = 0; i < hp.dimension(); ++i) {
      for (std::size_t a = 0; a < small.order(); ++a) {
        h.coeffs[a] = model.add(h.coeffs[a], model.scale(aug.at(r, i), hp.basis[i].coeffs[a]));
      }
    }
    plus.push_back(extend(h));
  }
  FpMatrix prods(0, mn.cols(), prime);
  for (const auto& a : hn.basis) {
    for (const auto& b : plus) prods.append_row(flatten(hopf_product(model, big, a, b).coeffs));
  }
  rep.product_rank = rank(prods);
  rep.augmentation = scalar_counits && rep.product_rank == rep.kernel_dim &&
                     (prods.rows() == 0 || row_space_contains(ker.rows() ? ker : FpMatrix(0, mn.cols(), prime), prods));

  // (v)
  rep.dimensions = rep.dim_hn == big.order() && rep.dim_hp == small.order() && rep.dim_hq == q.nbar.order() &&
                   small.order() * q.nbar.order() == big.order();

  if (!rep.passed()) {
    throw TheoremViolation("exact sequence check failed for |N|=" + std::to_string(rep.n_order) +
                           ", |P|=" + std::to_string(rep.p_order));
  }
  return rep;
}

bool ModelReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

const std::vector<std::string>& model_check_names() {
  static const std::vector<std::string> names{"fix", "rank", "exact", "fixedsum"};
  return names;
}

namespace {

struct CaseTally {
  std::size_t cases = 0;
  std::vector<std::string> failures;
};

/// `fix`: fixed ring dimension and closure, both action formulas, measuring,
/// the counit rule on k, the classical action of rho(G), and
/// fixed_field(H_P) = K^Psi(P) for each stable P.
CaseTally check_fix(const ExtensionModel& model, const ViewPtr& view, std::size_t seed) {
  CaseTally t;
  std::mt19937_64 rng(seed);
  const PermGroup& n_group = view->record.n;
  const FiniteGroup& g = *model.group();
  try {
    const FixedRing h = fixed_ring_basis(model, n_group);
    ++t.cases;
    if (!closed_under_product(model, h)) t.failures.push_back("H_N not closed under product");
    for (const auto& b : h.basis) {
      for (int s = 0; s < 4; ++s) (void)act(model, n_group, b, model.random(rng));
    }
    if (!measuring_check(model, n_group, 4, rng)) t.failures.push_back("measuring check failed");
    HopfElement ones{std::vector<FieldElem>(n_group.order(), model.one())};
    const FieldElem c = model.scalar(static_cast<Fp>(rng() % model.p()));
    const FieldElem expect = model.scale(static_cast<Fp>(n_group.order() % model.p()), c);
    if (act(model, n_group, ones, c) != expect) t.failures.push_back("sum of N does not act as |N| on k");
    if (n_group == right_regular(g)) {
      for (std::size_t x = 0; x < g.order(); ++x) {
        HopfElement e{std::vector<FieldElem>(n_group.order(), model.zero())};
        e.coeffs[*n_group.index_of(right_translation(g, static_cast<Index>(x)))] = model.one();
        const FieldElem y = model.random(rng);
        if (act(model, n_group, e, y) != model.apply(static_cast<Index>(x), y)) {
          t.failures.push_back("rho(g) does not act as g");
        }
      }
    }
    for (const auto& p : stable_subgroups(view)) {
      (void)fixed_field(model, p);
      ++t.cases;
    }
  } catch (const Error& e) {
    t.failures.push_back(e.what());
  }
  return t;
}

CaseTally check_rank(const ExtensionModel& model, const ViewPtr& view) {
  CaseTally t;
  try {
    ++t.cases;
    if (!hopf_galois_rank(model, fixed_ring_basis(model, view->record.n))) {
      t.failures.push_back("K # H_N -> End_k(K) is not bijective");
    }
    for (const auto& p : stable_subgroups(view)) {
      if (p.p.order() == view->record.n.order()) continue;
      ++t.cases;
      if (hopf_galois_rank(model, fixed_ring_basis(model, stable_perm_group(p)))) {
        t.failures.push_back("proper H_P reached full rank");
      }
    }
  } catch (const Error& e) {
    t.failures.push_back(e.what());
  }
  return t;
}

CaseTally check_exact(const ExtensionModel& model, const ViewPtr& view) {
  CaseTally t;
  try {
    for (const auto& p : stable_subgroups(view)) {
      if (!p.normal_in_n) continue;
      ++t.cases;
      (void)exact_sequence_check(model, p);
    }
  } catch (const Error& e) {
    t.failures.push_back(e.what());
  }
  return t;
}

/// S = Psi(P) satisfies the hypothesis on K^Psi(P) with S = J.
CaseTally check_fixedsum_psi(const ExtensionModel& model, const ViewPtr& view) {
  CaseTally t;
  for (const auto& p : stable_subgroups(view)) {
    ++t.cases;
    const PsiResult j = psi(p);
    const FpMatrix f = fixed_space(model, j.j.members);
    if (!fixedsum_hypothesis(model, j.j.members, f) || !fixedsum_check(model, j.j.members, f, j.j)) {
      t.failures.push_back("Psi(P) fails the fixed-sum identity");
    }
  }
  return t;
}

ModelCheckResult summarize(std::string name, const std::vector<CaseTally>& tallies, std::string extra = {}) {
  ModelCheckResult r{std::move(name), true, 0, {}};
  std::size_t failures = 0;
  for (const auto& t : tallies) {
    r.cases += t.cases;
    failures += t.failures.size();
    if (!t.failures.empty() && r.detail.empty()) r.detail = t.failures.front();
  }
  r.passed = failures == 0;
  if (r.passed) r.detail = std::move(extra);
  return r;
}

}  // namespace

ModelReport run_model_checks(Fp p, std::size_t n, const std::vector<std::string>& checks, std::size_t threads) {
  std::set<std::string> wanted;
  for (const auto& c : checks) {
    if (c == "all") {
      wanted.insert(model_check_names().begin(), model_check_names().end());
    } else if (std::find(model_check_names().begin(), model_check_names().end(), c) != model_check_names().end()) {
      wanted.insert(c);
    } else {
      throw UsageError("unknown model check '" + c + "'");
    }
  }
  if (wanted.empty()) wanted.insert(model_check_names().begin(), model_check_names().end());

  const ExtensionModel model(p, n);
  ModelReport rep;
  rep.p = p;
  rep.n = n;
  rep.modulus = model.modulus();
  const auto records = enumerate_hgs(model.group(), threads);
  rep.structures = records.size();
  std::vector<ViewPtr> views;
  for (const auto& r : records) views.push_back(make_view(r));

  auto run_each = [&](auto&& fn) {
    std::vector<CaseTally> out(views.size());
    parallel_for(views.size(), threads, [&](std::size_t i) { out[i] = fn(i); });
    return out;
  };
  for (const auto& name : model_check_names()) {
    if (!wanted.count(name)) continue;
    if (name == "fix") {
      rep.checks.push_back(summarize(name, run_each([&](std::size_t i) { return check_fix(model, views[i], 1000 + i); })));
    } else if (name == "rank") {
      rep.checks.push_back(summarize(name, run_each([&](std::size_t i) { return check_rank(model, views[i]); })));
    } else if (name == "exact") {
      rep.checks.push_back(summarize(name, run_each([&](std::size_t i) { return check_exact(model, views[i]); })));
    } else if (name == "fixedsum") {
      auto tallies = run_each([&](std::size_t i) { return check_fixedsum_psi(model, views[i]); });
      const FixedsumSummary s = fixedsum_exhaustive(model);
      CaseTally ex;
      ex.cases = s.subsets;
      if (s.counterexamples) ex.failures.push_back(std::to_string(s.counterexamples) + " counterexamples");
      tallies.push_back(ex);
      rep.checks.push_back(summarize(name, tallies,
                                     std::to_string(s.subsets) + " (subset, subfield) pairs over " + std::to_string(s.subfields) +
                                         " subfields, hypothesis held " + std::to_string(s.hypothesis_held)));
    }
  }
  return rep;
}

}  // namespace hgw
