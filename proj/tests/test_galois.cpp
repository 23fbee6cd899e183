#include <random>

#include "doctest.h"
#include "hgw/catalog.hpp"
#include "hgw/correspondence.hpp"
#include "hgw/error.hpp"
#include "hgw/galois_model.hpp"
#include "hgw/hgs.hpp"
#include "hgw/perm_group.hpp"
#include "hgw/prime_field.hpp"

using namespace hgw;

namespace {

// Remainder of a modulo monic b, both low-first.
FpPoly poly_mod(const PrimeField& f, FpPoly a, const FpPoly& b) {
  while (a.size() >= b.size()) {
    Fp lead = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(lead, b[i]));
    a.pop_back();
  }
  return a;
}

bool divisible_by_some_monic(const PrimeField& f, const FpPoly& a, std::size_t max_deg) {
  for (std::size_t d = 1; d <= max_deg; ++d) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < d; ++i) total *= f.p;
    for (std::size_t code = 0; code < total; ++code) {
      FpPoly b(d + 1, 0);
      b[d] = 1;
      std::size_t c = code;
      for (std::size_t i = 0; i < d; ++i, c /= f.p) b[i] = static_cast<Fp>(c % f.p);
      auto r = poly_mod(f, a, b);
      if (std::all_of(r.begin(), r.end(), [](Fp v) { return v == 0; })) return true;
    }
  }
  return false;
}

// First monic irreducible when the coefficients of X^(n-1), ..., 1 are read
// as the digits of a counter.
FpPoly least_irreducible_by_trial_division(Fp p, std::size_t n) {
  PrimeField f(p);
  for (std::size_t code = 0;; ++code) {
    FpPoly a(n + 1, 0);
    a[n] = 1;
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= p) a[i] = static_cast<Fp>(c % p);
    if (!divisible_by_some_monic(f, a, n / 2)) return a;
  }
}

const HgsRecord& record_of_class(const std::vector<HgsRecord>& records, const std::string& name) {
  for (const auto& r : records)
    if (r.n_class.name == name && r.n != right_regular(*r.group)) return r;
  for (const auto& r : records)
    if (r.n_class.name == name) return r;
  throw Error("no record of class " + name);
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f(11);
  for (Fp a = 1; a < 11; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.pow(2, 10) == 1);
  CHECK(f.from_int(-3) == 8);
  CHECK_THROWS_AS((void)f.inv(0), Error);
  CHECK(is_prime(11));
  CHECK_FALSE(is_prime(21));
}

TEST_CASE("linear algebra over F_p") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Fp> d(0, 10);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t r = 1 + trial % 5, c = 1 + (trial * 3) % 6;
    FpMatrix m(r, c, 11);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = trial % 3 == 0 && i == r - 1 ? m.at(0, j) : d(rng);
    auto k = nullspace(m);
    CHECK(rank(m) + k.rows() == c);
    for (std::size_t i = 0; i < k.rows(); ++i)
      for (Fp v : m.apply(k.row(i))) CHECK(v == 0);
    CHECK(rank(m) == rank(m.transpose()));
    CHECK(same_row_space(m, m));
    CHECK(m * FpMatrix::identity(c, 11) == m);
  }
  auto a = FpMatrix::from_rows({{1, 0, 0}, {0, 1, 0}}, 3, 11);
  auto b = FpMatrix::from_rows({{2, 3, 0}}, 3, 11);
  CHECK(row_space_contains(a, b));
  CHECK_FALSE(row_space_contains(b, a));
  CHECK(rank(FpMatrix(3, 3, 11)) == 0);
}

TEST_CASE("moduli are the least irreducibles") {
  CHECK(least_irreducible(11, 4) == FpPoly{2, 1, 0, 0, 1});
  CHECK(least_irreducible(11, 6) == FpPoly{2, 1, 0, 0, 0, 0, 1});
  for (auto [p, n] : {std::pair<Fp, std::size_t>{11, 4}, {11, 6}, {7, 3}, {5, 2}, {13, 4}})
    CHECK(least_irreducible(p, n) == least_irreducible_by_trial_division(p, n));
  PrimeField f(11);
  CHECK(is_irreducible(f, {2, 1, 0, 0, 1}));
  CHECK_FALSE(is_irreducible(f, {0, 1, 0, 0, 1}));
  CHECK(is_irreducible(f, {1, 0, 1, 0, 1}) == !divisible_by_some_monic(f, {1, 0, 1, 0, 1}, 2));
}

TEST_CASE("extension arithmetic and Frobenius") {
  auto m = make_extension(11, 6);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 10; ++i) {
    auto x = m.random(rng), y = m.random(rng);
    CHECK(m.apply(1, x) == m.pow(x, 11));
    CHECK(m.apply(1, m.mul(x, y)) == m.mul(m.apply(1, x), m.apply(1, y)));
    CHECK(m.mul(x, m.add(y, m.one())) == m.add(m.mul(x, y), x));
    if (x != m.zero()) CHECK(m.pow(x, 1771560) == m.one());
  }
  CHECK(m.apply(3, m.apply(3, m.basis(1))) == m.basis(1));
  CHECK(m.group()->spec() == "C6");
  auto e = embed_K(m, m.basis(2));
  CHECK(e.size() == 6);
  CHECK(e[0] == m.basis(2));
  CHECK(e[2] == m.apply(2, m.basis(2)));
  CHECK_THROWS((void)ExtensionModel(11, 12));
  CHECK_THROWS((void)ExtensionModel(5, 6));
  CHECK_THROWS((void)ExtensionModel(12, 2));
}

TEST_CASE("fixed rings have dimension |V| and act as expected") {
  auto m = make_extension(11, 4);
  const auto& g = *m.group();
  auto rho = right_regular(g);
  auto h = fixed_ring_basis(m, rho);
  CHECK(h.dimension() == 4);
  CHECK(closed_under_product(m, h));
  CHECK(hopf_galois_rank(m, h));

  // The element rho(s) itself is fixed and acts as Frobenius^s.
  std::mt19937_64 rng(3);
  for (Index s = 0; s < 4; ++s) {
    HopfElement e{std::vector<FieldElem>(rho.order(), m.zero())};
    e.coeffs[*rho.index_of(right_translation(g, s))] = m.one();
    auto x = m.random(rng);
    CHECK(act(m, rho, e, x) == m.apply(s, x));
    CHECK(counit(m, e) == m.one());
  }
  CHECK(measuring_check(m, rho, 20, rng));

  auto lam = left_regular(g);
  auto hl = fixed_ring_basis(m, lam);
  CHECK(hl.dimension() == 4);
  CHECK(hopf_galois_rank(m, hl));

  auto sub = PermGroup::closure({right_translation(g, 2)}, 4);
  auto hs = fixed_ring_basis(m, sub);
  CHECK(hs.dimension() == 2);
  CHECK_FALSE(hopf_galois_rank(m, hs));
}

TEST_CASE("fixed fields of stable subgroups") {
  auto m = make_extension(11, 6);
  auto records = enumerate_hgs(m.group());
  CHECK(records.size() == 3);
  for (const auto& r : records) {
    auto stable = stable_subgroups(r);
    auto k = fixed_field(m, stable.front());
    CHECK(k.rows() == 6);
    CHECK(rank(k) == 6);
    auto base = fixed_field(m, stable.back());
    CHECK(base.rows() == 1);
    CHECK(same_row_space(base, FpMatrix::from_rows({m.one()}, 6, 11)));
    for (const auto& p : stable) {
      if (p.p.order() != 2) continue;
      const Index frob3[] = {3};
      CHECK(same_row_space(fixed_field(m, p), fixed_space(m, frob3)));
    }
  }
}

TEST_CASE("Hopf-Galois rank singles out the whole of N") {
  auto m = make_extension(11, 6);
  auto records = enumerate_hgs(m.group());
  const auto& n = record_of_class(records, "D3");
  auto view = make_view(n);
  for (const auto& p : stable_subgroups(view)) {
    auto rp = fixed_ring_basis(m, PermGroup::closure(p.permutations(), 6));
    CHECK(rp.dimension() == p.p.order());
    CHECK(hopf_galois_rank(m, rp) == (p.p.order() == 6));
  }
}

TEST_CASE("exact sequences hold for every normal stable P") {
  for (std::size_t n : {4, 6}) {
    auto m = make_extension(11, n);
    for (const auto& r : enumerate_hgs(m.group())) {
      for (const auto& p : stable_subgroups(r)) {
        if (!p.normal_in_n) continue;
        auto rep = exact_sequence_check(m, p);
        CHECK(rep.passed());
        CHECK(rep.kernel_dim == rep.n_order - rep.quotient_order);
        CHECK(rep.dim_hn == rep.n_order);
        CHECK(rep.dim_hp == rep.p_order);
        CHECK(rep.dim_hq == rep.quotient_order);
      }
    }
  }
}

TEST_CASE("fixedsum has no counterexample for n <= 6") {
  for (std::size_t n : {2, 3, 4, 6}) {
    auto s = fixedsum_exhaustive(make_extension(11, n));
    CHECK(s.subsets == s.subfields * ((std::size_t{1} << n) - 1));
    CHECK(s.counterexamples == 0);
    CHECK(s.hypothesis_held > 0);
  }
  auto m = make_extension(11, 6);
  auto j = generate(*m.group(), std::vector<Index>{2});
  auto f = fixed_space(m, j.members);
  const Index inside[] = {0, 2};
  const Index outside[] = {0, 1};
  CHECK(fixedsum_check(m, inside, f, j));
  CHECK(fixedsum_check(m, outside, f, j));
}

TEST_CASE("model suite") {
  auto r4 = run_model_checks(11, 4, {"all"});
  CHECK(r4.passed());
  CHECK(r4.structures == 2);
  auto r6 = run_model_checks(11, 6, {"fix", "exact"}, 2);
  CHECK(r6.passed());
  CHECK(r6.checks.size() == 2);
  CHECK(r6.structures == 3);
  CHECK_THROWS_AS((void)run_model_checks(11, 4, {"nope"}), UsageError);
}
