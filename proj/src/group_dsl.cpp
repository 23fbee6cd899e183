#include "hgw/group_dsl.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>

#include "hgw/error.hpp"
#include "hgw/perm_group.hpp"

namespace hgw {

FiniteGroup cyclic_group(std::size_t k) {
  if (k == 0) throw ParseError("C0 is not a group");
  std::vector<Index> table(k * k);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(i == 0 ? "1" : (i == 1 ? "a" : "a^" + std::to_string(i)));
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = static_cast<Index>((i + j) % k);
  }
  return FiniteGroup(k, std::move(table), "C" + std::to_string(k), std::move(labels));
}

FiniteGroup dihedral_group(std::size_t k) {
  if (k == 0) throw ParseError("D0 is not a group");
  const std::size_t n = 2 * k;
  std::vector<Index> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t i = x % k, a = x / k;
    labels[x] = (i == 0 && a == 0) ? "1" : "r^" + std::to_string(i) + (a ? "s" : "");
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t j = y % k, b = y / k;
      // r^i s^a r^j s^b = r^(i +- j) s^(a+b)
      std::size_t r = a ? (i + k - j) % k : (i + j) % k;
      table[x * n + y] = static_cast<Index>(r + k * ((a + b) % 2));
    }
  }
  return FiniteGroup(n, std::move(table), "D" + std::to_string(k), std::move(labels));
}

FiniteGroup dicyclic_group(std::size_t k) {
  if (k < 2) throw ParseError("Dic<k> needs k >= 2");
  const std::size_t m = 2 * k, n = 4 * k;
  std::vector<Index> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t i = x % m, e = x / m;
    labels[x] = (x == 0) ? "1" : "a^" + std::to_string(i) + (e ? "x" : "");
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t j = y % m, f = y / m;
      std::size_t r, t;
      if (e == 0) {
        r = (i + j) % m;
        t = f;
      } else {
        // a^i x a^j x^f = a^(i-j) x^(1+f), x^2 = a^k
        r = (i + m - j) % m;
        t = 1 + f;
        if (t == 2) {
          r = (r + k) % m;
          t = 0;
        }
      }
      table[x * n + y] = static_cast<Index>(r + m * t);
    }
  }
  return FiniteGroup(n, std::move(table), "Dic" + std::to_string(k), std::move(labels));
}

namespace {

FiniteGroup from_generators(std::vector<Permutation> gens, std::size_t degree, std::string spec) {
  return to_finite_group(PermGroup::closure(std::move(gens), degree)).with_spec(std::move(spec));
}

}  // namespace

FiniteGroup symmetric_group(std::size_t k) {
  if (k == 0 || k > 6) throw ParseError("S<k> supported for 1 <= k <= 6");
  std::vector<Permutation> gens;
  if (k >= 2) {
    std::vector<Point> cyc(k), tr(k);
    for (std::size_t i = 0; i < k; ++i) {
      cyc[i] = static_cast<Point>((i + 1) % k);
      tr[i] = static_cast<Point>(i);
    }
    std::swap(tr[0], tr[1]);
    gens.push_back(Permutation::from_images(cyc));
    gens.push_back(Permutation::from_images(tr));
  }
  return from_generators(std::move(gens), k, "S" + std::to_string(k));
}

FiniteGroup alternating_group(std::size_t k) {
  if (k == 0 || k > 6) throw ParseError("A<k> supported for 1 <= k <= 6");
  std::vector<Permutation> gens;
  // 3-cycles (0 1 i) generate A_k
  for (std::size_t i = 2; i < k; ++i) {
    std::vector<Point> img(k);
    for (std::size_t j = 0; j < k; ++j) img[j] = static_cast<Point>(j);
    img[0] = 1;
    img[1] = static_cast<Point>(i);
    img[i] = 0;
    gens.push_back(Permutation::from_images(img));
  }
  return from_generators(std::move(gens), k, "A" + std::to_string(k));
}

FiniteGroup special_linear_2_3() {
  // Action on the 8 nonzero vectors of F_3^2, vector (u, v) at index 3u+v-1.
  auto act = [](int a, int b, int c, int d) {
    std::vector<Point> img(8);
    for (int u = 0; u < 3; ++u) {
      for (int v = 0; v < 3; ++v) {
        if (u == 0 && v == 0) continue;
        int nu = (a * u + b * v) % 3, nv = (c * u + d * v) % 3;
        img[3 * u + v - 1] = static_cast<Point>(3 * nu + nv - 1);
      }
    }
    return Permutation::from_images(img);
  };
  return from_generators({act(1, 1, 0, 1), act(0, 2, 1, 0)}, 8, "SL(2,3)");
}

FiniteGroup direct_product(const FiniteGroup& x, const FiniteGroup& y) {
  const std::size_t nx = x.order(), ny = y.order(), n = nx * ny;
  std::vector<Index> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = "(" + x.label(static_cast<Index>(a / ny)) + "," + y.label(static_cast<Index>(a % ny)) + ")";
    for (std::size_t b = 0; b < n; ++b) {
      Index px = x.mul(static_cast<Index>(a / ny), static_cast<Index>(b / ny));
      Index py = y.mul(static_cast<Index>(a % ny), static_cast<Index>(b % ny));
      table[a * n + b] = static_cast<Index>(px * ny + py);
    }
  }
  return FiniteGroup(n, std::move(table), x.spec() + " x " + y.spec(), std::move(labels));
}

FiniteGroup semidirect_product(const FiniteGroup& x, std::size_t k, const GroupMap& phi) {
  const std::size_t nx = x.order(), n = nx * k;
  // phi^t for t < k
  std::vector<GroupMap> powers(k, GroupMap(nx));
  for (std::size_t e = 0; e < nx; ++e) powers[0][e] = static_cast<Index>(e);
  for (std::size_t t = 1; t < k; ++t) {
    for (std::size_t e = 0; e < nx; ++e) powers[t][e] = phi[powers[t - 1][e]];
  }
  GroupMap check(nx);
  for (std::size_t e = 0; e < nx; ++e) check[e] = phi[powers[k - 1][e]];
  for (std::size_t e = 0; e < nx; ++e) {
    if (check[e] != e) throw ParseError("automorphism order does not divide the cyclic factor");
  }
  std::vector<Index> table(n * n);
  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t x1 = a % nx, t1 = a / nx;
    labels[a] = "(" + x.label(static_cast<Index>(x1)) + ",t^" + std::to_string(t1) + ")";
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t x2 = b % nx, t2 = b / nx;
      Index xp = x.mul(static_cast<Index>(x1), powers[t1][x2]);
      table[a * n + b] = static_cast<Index>(xp + nx * ((t1 + t2) % k));
    }
  }
  return FiniteGroup(n, std::move(table), "sdp", std::move(labels));
}

namespace {

std::size_t map_order(const GroupMap& phi) {
  GroupMap cur = phi;
  std::size_t k = 1;
  auto is_id = [](const GroupMap& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != i) return false;
    }
    return true;
  };
  while (!is_id(cur)) {
    GroupMap next(cur.size());
    for (std::size_t i = 0; i < cur.size(); ++i) next[i] = phi[cur[i]];
    cur = std::move(next);
    ++k;
  }
  return k;
}

/// Representatives (least members) of Aut(X)-conjugacy classes of
/// automorphisms of order exactly `a`, ordered by representative.
std::vector<GroupMap> automorphism_class_reps(const FiniteGroup& x, std::size_t a) {
  auto maps = automorphism_maps(x);
  std::set<GroupMap> done;
  std::vector<GroupMap> reps;
  const std::size_t n = x.order();
  for (const auto& phi : maps) {
    if (map_order(phi) != a || done.count(phi)) continue;
    reps.push_back(phi);
    for (const auto& psi : maps) {
      // psi phi psi^-1
      GroupMap psi_inv(n), conj(n);
      for (std::size_t i = 0; i < n; ++i) psi_inv[psi[i]] = static_cast<Index>(i);
      for (std::size_t i = 0; i < n; ++i) conj[i] = psi[phi[psi_inv[i]]];
      done.insert(conj);
    }
  }
  return reps;
}

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  FiniteGroup parse() {
    FiniteGroup g = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("group expression '" + std::string(text_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool is_product_sign() {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != 'x') return false;
    // A lone 'x' followed by a space or an operand start.
    return pos_ + 1 >= text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])) ||
           std::isupper(static_cast<unsigned char>(text_[pos_ + 1]));
  }

  std::size_t number() {
    skip();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a number");
    }
    std::size_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (v > 100000) fail("number too large");
      ++pos_;
    }
    return v;
  }

  bool keyword(std::string_view kw) {
    skip();
    if (text_.substr(pos_, kw.size()) == kw) {
      pos_ += kw.size();
      return true;
    }
    return false;
  }

  FiniteGroup expr() {
    FiniteGroup g = term();
    while (is_product_sign()) {
      ++pos_;
      FiniteGroup h = term();
      g = direct_product(g, h);
    }
    return g;
  }

  FiniteGroup term() {
    FiniteGroup g = factor();
    while (peek(':')) {
      ++pos_;
      skip();
      if (!keyword("C")) fail("semidirect factor must be C<k>");
      std::size_t k = number();
      g = faithful_semidirect(g, k);
    }
    return g;
  }

  FiniteGroup factor() {
    FiniteGroup g = atom();
    if (peek('^')) {
      ++pos_;
      std::size_t k = number();
      if (k == 0) fail("exponent must be positive");
      FiniteGroup base = g;
      for (std::size_t i = 1; i < k; ++i) g = direct_product(g, base);
    }
    return g;
  }

  FiniteGroup atom() {
    skip();
    if (peek('(')) {
      ++pos_;
      FiniteGroup g = expr();
      expect(')');
      return g;
    }
    if (keyword("sdp")) return sdp();
    if (keyword("SL(2,3)")) return special_linear_2_3();
    if (keyword("Q8")) return dicyclic_group(2);
    if (keyword("Dic")) return dicyclic_group(number());
    if (keyword("C")) return cyclic_group(checked(number()));
    if (keyword("D")) return dihedral_group(checked(number()));
    if (keyword("A")) return alternating_group(number());
    if (keyword("S")) return symmetric_group(number());
    fail("expected a group");
  }

  std::size_t checked(std::size_t k) {
    if (k == 0 || k > 2000) fail("factor size out of range");
    return k;
  }

  FiniteGroup sdp() {
    expect('(');
    FiniteGroup x = expr();
    expect(',');
    skip();
    if (!keyword("C")) fail("second sdp argument must be C<k>");
    std::size_t k = checked(number());
    expect(',');
    std::size_t a = number();
    std::size_t variant = 0;
    if (peek(',')) {
      ++pos_;
      variant = number();
    }
    expect(')');
    if (a == 0 || k % a != 0) fail("automorphism order must divide k");
    auto reps = automorphism_class_reps(x, a);
    if (variant >= reps.size()) fail("no automorphism of the requested order/class");
    return semidirect_product(x, k, reps[variant]);
  }

  FiniteGroup faithful_semidirect(const FiniteGroup& x, std::size_t k) {
    for (std::size_t a = k; a > 1; --a) {
      if (k % a != 0) continue;
      auto reps = automorphism_class_reps(x, a);
      if (!reps.empty()) return semidirect_product(x, k, reps.front());
    }
    fail("no nontrivial action of C" + std::to_string(k));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FiniteGroup build_group(std::string_view spec) {
  return Parser(spec).parse().with_spec(std::string(spec));
}

GroupPtr make_group(std::string_view spec) { return std::make_shared<const FiniteGroup>(build_group(spec)); }

}  // namespace hgw
