#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hgw/correspondence.hpp"
#include "hgw/finite_group.hpp"
#include "hgw/perm_group.hpp"
#include "hgw/prime_field.hpp"

namespace hgw {

/// Element of K = F_p[X]/(f): coefficients of 1, X, ..., X^(n-1).
using FieldElem = std::vector<Fp>;
/// Polynomial over F_p, lowest degree first.
using FpPoly = std::vector<Fp>;

[[nodiscard]] bool is_irreducible(const PrimeField& f, const FpPoly& poly);
/// Least monic irreducible of degree n, comparing coefficients from X^(n-1)
/// down to the constant term.
[[nodiscard]] FpPoly least_irreducible(Fp p, std::size_t n);

/// K = F_{p^n} with Galois group G = C_n, where element i of G is Frobenius^i.
class ExtensionModel {
public:
  /// Requires p prime, n <= p - 1 and 1 <= n <= 8.
  ExtensionModel(Fp p, std::size_t n);

  [[nodiscard]] Fp p() const noexcept { return field_.p; }
  [[nodiscard]] std::size_t n() const noexcept { return n_; }
  [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
  [[nodiscard]] const FpPoly& modulus() const noexcept { return modulus_; }
  [[nodiscard]] const GroupPtr& group() const noexcept { return group_; }

  [[nodiscard]] FieldElem zero() const { return FieldElem(n_, 0); }
  [[nodiscard]] FieldElem one() const;
  /// X^i
  [[nodiscard]] FieldElem basis(std::size_t i) const;
  [[nodiscard]] FieldElem scalar(Fp c) const;
  [[nodiscard]] FieldElem random(std::mt19937_64& rng) const;

  [[nodiscard]] FieldElem add(const FieldElem& a, const FieldElem& b) const;
  [[nodiscard]] FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  [[nodiscard]] FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  [[nodiscard]] FieldElem scale(Fp c, const FieldElem& a) const;
  [[nodiscard]] FieldElem pow(FieldElem a, std::uint64_t e) const;

  /// Frobenius^g applied to x, for g an element of group().
  [[nodiscard]] FieldElem apply(Index g, const FieldElem& x) const { return frobenius_[g].apply(x); }
  [[nodiscard]] const FpMatrix& automorphism_matrix(Index g) const { return frobenius_[g]; }
  /// Matrix of y -> x*y.
  [[nodiscard]] FpMatrix mul_matrix(const FieldElem& x) const;

private:
  PrimeField field_;
  std::size_t n_;
  FpPoly modulus_;
  GroupPtr group_;
  std::vector<FpMatrix> frobenius_;
};

[[nodiscard]] ExtensionModel make_extension(Fp p, std::size_t n);

/// (g(x))_g indexed by the elements of G.
[[nodiscard]] std::vector<FieldElem> embed_K(const ExtensionModel& model, const FieldElem& x);

/// h = sum over v of c_v * v, coefficients indexed like group.elements().
struct HopfElement {
  std::vector<FieldElem> coeffs;
};

/// k-basis of (K[V])^G, where generator gamma of G acts on coefficients by
/// the field automorphism and on V by conjugation with twist[gamma].
struct FixedRing {
  PermGroup group;
  std::vector<Permutation> twist;
  std::vector<HopfElement> basis;

  [[nodiscard]] std::size_t dimension() const noexcept { return basis.size(); }
};

/// Twist defaults to lambda(G), so V must act on the points of G. Throws
/// TheoremViolation when dim_k differs from |V|.
[[nodiscard]] FixedRing fixed_ring_basis(const ExtensionModel& model, const PermGroup& v);
/// `twist` lists the permutation of V's points for each element of
/// generating_sequence(G).
[[nodiscard]] FixedRing fixed_ring_basis(const ExtensionModel& model, const PermGroup& v,
                                         const std::vector<Permutation>& twist);

[[nodiscard]] FieldElem counit(const ExtensionModel& model, const HopfElement& h);
[[nodiscard]] HopfElement hopf_product(const ExtensionModel& model, const PermGroup& v, const HopfElement& a,
                                       const HopfElement& b);
/// Every product of basis pairs lies in the k-span of the basis.
[[nodiscard]] bool closed_under_product(const ExtensionModel& model, const FixedRing& ring);
/// Basis as rows of length |V|*n over F_p.
[[nodiscard]] FpMatrix coefficient_matrix(const ExtensionModel& model, const FixedRing& ring);

/// h(x) for h over a subgroup V of Perm(G). Computed through the e-basis
/// action and through sum c_v * (v^-1(1))(x); throws Error when they differ or
/// the e-basis result leaves the image of K.
[[nodiscard]] FieldElem act(const ExtensionModel& model, const PermGroup& v, const HopfElement& h,
                            const FieldElem& x);
/// The k-linear map x -> h(x).
[[nodiscard]] FpMatrix act_matrix(const ExtensionModel& model, const PermGroup& v, const HopfElement& h);

/// Each v in V is multiplicative on K^G (orthogonal idempotents), on
/// `samples` random pairs.
[[nodiscard]] bool measuring_check(const ExtensionModel& model, const PermGroup& v, std::size_t samples,
                                   std::mt19937_64& rng);

/// Fixed space of the automorphisms with the given G-indices, as basis rows.
[[nodiscard]] FpMatrix fixed_space(const ExtensionModel& model, std::span<const Index> automorphisms);

/// {x : h(x) = counit(h) x for h in H_P}. Throws TheoremViolation unless it
/// is a subfield of dimension n/|P| equal to K^J for J = Psi(P).
[[nodiscard]] FpMatrix fixed_field(const ExtensionModel& model, const StableSubgroup& p);

/// rank of K (x) H -> End_k(K) equals n^2.
[[nodiscard]] bool hopf_galois_rank(const ExtensionModel& model, const FixedRing& h);

/// Instance of: if sum over S of sigma(x) = |S| x on F, then S lies in J.
/// Requires p > |G|.
[[nodiscard]] bool fixedsum_check(const ExtensionModel& model, std::span<const Index> s,
                                  const FpMatrix& f_basis, const Subgroup& j);

struct FixedsumSummary {
  std::size_t subfields = 0;
  std::size_t subsets = 0;
  std::size_t hypothesis_held = 0;
  std::size_t counterexamples = 0;
};

/// All nonempty subsets S of G against every intermediate field K^J.
[[nodiscard]] FixedsumSummary fixedsum_exhaustive(const ExtensionModel& model);

struct ExactSequenceReport {
  std::size_t n_order = 0;
  std::size_t p_order = 0;
  std::size_t quotient_order = 0;
  std::size_t dim_hn = 0;
  std::size_t dim_hp = 0;
  std::size_t dim_hq = 0;
  std::size_t projection_rank = 0;
  std::size_t kernel_dim = 0;
  std::size_t product_rank = 0;
  bool inclusion = false;       // H_P in H_N
  bool surjection = false;      // projection onto H_{N/P}
  bool kernel = false;          // kernel dimension |N| - [N:P]
  bool augmentation = false;    // kernel = H_N H_P^+
  bool dimensions = false;

  [[nodiscard]] bool passed() const { return inclusion && surjection && kernel && augmentation && dimensions; }
};

/// Requires P normal in N; the structure must be over model.group().
[[nodiscard]] ExactSequenceReport exact_sequence_check(const ExtensionModel& model, const StableSubgroup& p);

struct ModelCheckResult {
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  std::string detail;
};

struct ModelReport {
  Fp p = 0;
  std::size_t n = 0;
  FpPoly modulus;
  std::size_t structures = 0;
  std::vector<ModelCheckResult> checks;

  [[nodiscard]] bool passed() const;
};

/// Names accepted by run_model_checks besides "all".
[[nodiscard]] const std::vector<std::string>& model_check_names();

/// Runs the named checks over every Hopf-Galois structure on K/F_p.
/// Throws UsageError for unknown names.
[[nodiscard]] ModelReport run_model_checks(Fp p, std::size_t n, const std::vector<std::string>& checks,
                                           std::size_t threads = 1);

}  // namespace hgw
