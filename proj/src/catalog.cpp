#include "cck/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "cck/series.hpp"

namespace cck {

namespace {

using Matrix = std::vector<std::vector<int>>;

struct Invariants {
  std::size_t order = 1;
  std::optional<bool> nilpotent;
  std::optional<bool> soluble;
  std::optional<std::size_t> fitting_height;
};

struct Built {
  std::size_t degree = 1;
  std::vector<Permutation> gens;
  Invariants inv;
};

bool is_power_of(std::size_t n, std::size_t p) {
  if (n == 0) return false;
  while (n % p == 0) n /= p;
  return n == 1;
}

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

int mod(long long a, int p) { return static_cast<int>(((a % p) + p) % p); }

int inverse_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (mod(static_cast<long long>(a) * x, p) == 1) return x;
  throw Error("no inverse mod " + std::to_string(p));
}

std::size_t multiplicative_order(std::size_t r, std::size_t n) {
  if (n == 1) return 1;
  std::size_t k = 1;
  std::size_t x = r % n;
  while (x != 1) {
    x = x * r % n;
    ++k;
    if (k > n) throw Error("multiplier is not a unit");
  }
  return k;
}

Permutation perm_from(std::size_t degree, const std::function<std::size_t(std::size_t)>& f) {
  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(f(i));
  return Permutation(std::move(images));
}

Built known(std::size_t degree, std::vector<Permutation> gens, Invariants inv) {
  return Built{degree, std::move(gens), inv};
}

Invariants soluble_inv(std::size_t order, bool nilpotent, std::size_t fh) {
  return Invariants{order, nilpotent, true, order == 1 ? 0 : fh};
}

Built make_cyclic(std::size_t n) {
  if (n < 1) throw Error("cyclic(n) needs n >= 1");
  std::vector<Permutation> gens;
  if (n > 1) gens.push_back(perm_from(n, [n](std::size_t i) { return (i + 1) % n; }));
  return known(n, std::move(gens), soluble_inv(n, true, 1));
}

/// x -> M x + v on F_p^k, points indexed by base-p digits.
Built make_affine(int p, std::size_t k, const std::vector<Matrix>& linear, Invariants inv) {
  const std::size_t n = ipow(static_cast<std::size_t>(p), k);
  auto decode = [&](std::size_t idx) {
    std::vector<int> v(k);
    for (std::size_t i = 0; i < k; ++i) {
      v[i] = static_cast<int>(idx % static_cast<std::size_t>(p));
      idx /= static_cast<std::size_t>(p);
    }
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    std::size_t idx = 0;
    for (std::size_t i = k; i-- > 0;) idx = idx * static_cast<std::size_t>(p) + static_cast<std::size_t>(v[i]);
    return idx;
  };
  std::vector<Permutation> gens;
  for (std::size_t axis = 0; axis < k; ++axis)
    gens.push_back(perm_from(n, [&](std::size_t i) {
      auto v = decode(i);
      v[axis] = mod(v[axis] + 1, p);
      return encode(v);
    }));
  for (const auto& m : linear)
    gens.push_back(perm_from(n, [&](std::size_t i) {
      auto v = decode(i);
      std::vector<int> w(k, 0);
      for (std::size_t r = 0; r < k; ++r) {
        long long acc = 0;
        for (std::size_t c = 0; c < k; ++c) acc += static_cast<long long>(m[r][c]) * v[c];
        w[r] = mod(acc, p);
      }
      return encode(w);
    }));
  return known(n, std::move(gens), inv);
}

Built make_elementary_abelian(std::size_t p, std::size_t k) {
  if (!is_prime(p) || k < 1) throw Error("elementary_abelian(p,k) needs prime p and k >= 1");
  return make_affine(static_cast<int>(p), k, {}, soluble_inv(ipow(p, k), true, 1));
}

Built make_dihedral(std::size_t n) {
  if (n < 2) throw Error("dihedral(n) needs n >= 2");
  const bool two_power = is_power_of(n, 2);
  Invariants inv = soluble_inv(2 * n, two_power, two_power ? 1 : 2);
  if (n == 2) return known(4, {parse_permutation("(1 2)", 4), parse_permutation("(3 4)", 4)}, inv);
  return known(n,
               {perm_from(n, [n](std::size_t i) { return (i + 1) % n; }),
                perm_from(n, [n](std::size_t i) { return (n - i) % n; })},
               inv);
}

Built make_dicyclic(std::size_t order) {
  if (order < 8 || order % 4 != 0) throw Error("dicyclic(4n) needs an order divisible by 4 and at least 8");
  const std::size_t n = order / 4, two_n = 2 * n;
  auto idx = [two_n](std::size_t k, std::size_t e) { return k % two_n + two_n * e; };
  Permutation a = perm_from(order, [&](std::size_t i) {
    const std::size_t k = i % two_n, e = i / two_n;
    return e == 0 ? idx(k + 1, 0) : idx(k + two_n - 1, 1);
  });
  Permutation x = perm_from(order, [&](std::size_t i) {
    const std::size_t k = i % two_n, e = i / two_n;
    return e == 0 ? idx(k, 1) : idx(k + n, 0);
  });
  const bool two_power = is_power_of(n, 2);
  return known(order, {a, x}, soluble_inv(order, two_power, two_power ? 1 : 2));
}

Built make_symmetric(std::size_t n, bool alternating) {
  if (n < 1 || n > 6) throw Error("symmetric/alternating(n) supported for 1 <= n <= 6");
  std::vector<Permutation> gens;
  std::size_t order = 1;
  for (std::size_t i = 2; i <= n; ++i) order *= i;
  if (alternating) {
    order = n >= 2 ? order / 2 : 1;
    for (std::size_t i = 2; i < n; ++i)  // 3-cycles (0 1 i)
      gens.push_back(perm_from(n, [i](std::size_t x) -> std::size_t {
        if (x == 0) return 1;
        if (x == 1) return i;
        if (x == i) return 0;
        return x;
      }));
  } else if (n >= 2) {
    gens.push_back(perm_from(n, [](std::size_t x) -> std::size_t { return x == 0 ? 1 : x == 1 ? 0 : x; }));
    if (n >= 3) gens.push_back(perm_from(n, [n](std::size_t x) { return (x + 1) % n; }));
  }
  Invariants inv{order, std::nullopt, std::nullopt, std::nullopt};
  static const std::size_t sym_fh[] = {0, 0, 1, 2, 3};
  static const std::size_t alt_fh[] = {0, 0, 0, 1, 2};
  if (n <= 4) {
    inv.soluble = true;
    inv.fitting_height = alternating ? alt_fh[n] : sym_fh[n];
    inv.nilpotent = *inv.fitting_height <= 1;
  } else {
    inv.soluble = false;
    inv.nilpotent = false;
  }
  return known(n, std::move(gens), inv);
}

Built make_psl2(std::size_t p) {
  if (!is_prime(p) || p > 7) throw Error("psl2(p) supported for primes p <= 7");
  const int q = static_cast<int>(p);
  const std::size_t inf = p;
  Permutation t = perm_from(p + 1, [&](std::size_t x) { return x == inf ? inf : (x + 1) % p; });
  Permutation s = perm_from(p + 1, [&](std::size_t x) -> std::size_t {
    if (x == inf) return 0;
    if (x == 0) return inf;
    return static_cast<std::size_t>(mod(-inverse_mod(static_cast<int>(x), q), q));
  });
  const std::size_t order = p * (p * p - 1) / (p == 2 ? 1 : 2);
  Invariants inv{order, false, p <= 3, std::nullopt};
  if (p <= 3) inv.fitting_height = 2;
  return known(p + 1, {t, s}, inv);
}

int primitive_root(int q) {
  for (int g = 2; g < q; ++g)
    if (multiplicative_order(static_cast<std::size_t>(g), static_cast<std::size_t>(q)) == static_cast<std::size_t>(q - 1))
      return g;
  return 1;
}

Built make_frobenius(std::size_t q, std::size_t r) {
  if (!is_prime(q)) throw Error("frobenius(q,r) needs prime q");
  if (r < 1 || (q - 1) % r != 0) throw Error("frobenius(q,r) needs r | q-1");
  const int g = primitive_root(static_cast<int>(q));
  std::size_t w = 1;
  for (std::size_t i = 0; i < (q - 1) / r; ++i) w = w * static_cast<std::size_t>(g) % q;
  std::vector<Permutation> gens{perm_from(q, [q](std::size_t x) { return (x + 1) % q; })};
  if (r > 1) gens.push_back(perm_from(q, [q, w](std::size_t x) { return x * w % q; }));
  return known(q, std::move(gens), soluble_inv(q * r, r == 1, r == 1 ? 1 : 2));
}

Built make_metacyclic(std::size_t n, std::size_t r) {
  if (n < 2 || std::gcd(n, r) != 1) throw Error("metacyclic(n,r) needs n >= 2 and gcd(n,r) = 1");
  const std::size_t k = multiplicative_order(r % n, n);
  std::vector<Permutation> gens{perm_from(n, [n](std::size_t x) { return (x + 1) % n; })};
  if (k > 1) gens.push_back(perm_from(n, [n, r](std::size_t x) { return x * r % n; }));
  Invariants inv{n * k, std::nullopt, true, std::nullopt};
  return known(n, std::move(gens), inv);
}

Built make_linear2(std::size_t p, bool special) {
  if (!is_prime(p) || p > 5) throw Error("sl2(p)/gl2(p) supported for primes p <= 5");
  const int q = static_cast<int>(p);
  std::vector<std::pair<int, int>> points;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      if (a || b) points.emplace_back(a, b);
  auto index_of = [&](int a, int b) {
    return static_cast<std::size_t>(std::find(points.begin(), points.end(), std::make_pair(a, b)) - points.begin());
  };
  auto act = [&](const Matrix& m) {
    return perm_from(points.size(), [&](std::size_t i) {
      auto [a, b] = points[i];
      return index_of(mod(m[0][0] * a + m[0][1] * b, q), mod(m[1][0] * a + m[1][1] * b, q));
    });
  };
  std::vector<Permutation> gens{act({{1, 1}, {0, 1}}), act({{1, 0}, {1, 1}})};
  if (!special && p > 2) gens.push_back(act({{primitive_root(q), 0}, {0, 1}}));
  const std::size_t gl = (p * p - 1) * (p * p - p);
  const std::size_t order = special ? gl / (p - 1) : gl;
  Invariants inv{order, false, p <= 3, std::nullopt};
  if (p == 2) inv.fitting_height = 2;
  if (p == 3) inv.fitting_height = special ? 2 : 3;
  return known(points.size(), std::move(gens), inv);
}

Built make_direct_product(const Built& a, const Built& b) {
  std::vector<Permutation> gens;
  const std::size_t degree = a.degree + b.degree;
  for (const auto& g : a.gens)
    gens.push_back(perm_from(degree, [&](std::size_t x) { return x < a.degree ? g(static_cast<Point>(x)) : x; }));
  for (const auto& g : b.gens)
    gens.push_back(perm_from(degree, [&](std::size_t x) {
      return x < a.degree ? x : a.degree + g(static_cast<Point>(x - a.degree));
    }));
  Invariants inv{a.inv.order * b.inv.order, std::nullopt, std::nullopt, std::nullopt};
  if (a.inv.nilpotent && b.inv.nilpotent) inv.nilpotent = *a.inv.nilpotent && *b.inv.nilpotent;
  if (a.inv.soluble && b.inv.soluble) inv.soluble = *a.inv.soluble && *b.inv.soluble;
  if (a.inv.fitting_height && b.inv.fitting_height)
    inv.fitting_height = std::max(*a.inv.fitting_height, *b.inv.fitting_height);
  return known(degree, std::move(gens), inv);
}

/// Explicit semidirect products x -> Mx + v, named by their structure.
struct AffineEntry {
  const char* name;
  int p;
  std::size_t k;
  std::vector<Matrix> linear;
  std::size_t order;
  std::size_t fitting_height;
};

const std::vector<AffineEntry>& affine_entries() {
  static const std::vector<AffineEntry> entries = {
      {"c3^2:c2", 3, 2, {{{-1, 0}, {0, -1}}}, 18, 2},
      {"c3^2:c4", 3, 2, {{{0, -1}, {1, 0}}}, 36, 2},
      {"c3^2:q8", 3, 2, {{{0, -1}, {1, 0}}, {{1, 1}, {1, -1}}}, 72, 2},
      {"c5^2:c3", 5, 2, {{{0, -1}, {1, -1}}}, 75, 2},
      {"c2^3:c7", 2, 3, {{{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}}, 56, 2},
      {"c2^3:c7:c3", 2, 3, {{{0, 0, 1}, {1, 0, 1}, {0, 1, 0}}, {{1, 0, 0}, {0, 0, 1}, {0, 1, 1}}}, 168, 3},
      {"c2^4:c5", 2, 4, {{{0, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 1, 1}}}, 80, 2},
  };
  return entries;
}

// ---- family expression parser -------------------------------------------

struct Expr {
  std::string family;
  std::vector<std::size_t> ints;
  std::vector<Expr> subs;
};

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  Expr parse() {
    Expr e = expr();
    ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("builtin '" + std::string(s_) + "': " + why + " at offset " + std::to_string(pos_));
  }
  void ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  Expr expr() {
    ws();
    Expr e;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      e.family += s_[pos_++];
    if (e.family.empty()) fail("expected a family name");
    ws();
    if (pos_ >= s_.size() || s_[pos_] != '(') fail("expected '('");
    ++pos_;
    ws();
    if (pos_ < s_.size() && s_[pos_] == ')') {
      ++pos_;
      return e;
    }
    while (true) {
      ws();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        std::size_t v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          v = v * 10 + static_cast<std::size_t>(s_[pos_++] - '0');
          if (v > 1'000'000) fail("parameter too large");
        }
        e.ints.push_back(v);
      } else {
        e.subs.push_back(expr());
      }
      ws();
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (pos_ < s_.size() && s_[pos_] == ')') {
        ++pos_;
        return e;
      }
      fail("expected ',' or ')'");
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string canonical(const Expr& e) {
  std::string out = e.family + "(";
  bool first = true;
  for (auto v : e.ints) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  for (const auto& s : e.subs) {
    if (!first) out += ",";
    out += canonical(s);
    first = false;
  }
  return out + ")";
}

Built build_expr(const Expr& e) {
  auto need = [&](std::size_t ints, std::size_t subs) {
    if (e.ints.size() != ints || e.subs.size() != subs)
      throw Error("builtin family " + e.family + " expects " + std::to_string(ints) + " integer and " +
                  std::to_string(subs) + " group parameters");
  };
  const auto& f = e.family;
  if (f == "cyclic") return need(1, 0), make_cyclic(e.ints[0]);
  if (f == "elementary_abelian") return need(2, 0), make_elementary_abelian(e.ints[0], e.ints[1]);
  if (f == "dihedral") return need(1, 0), make_dihedral(e.ints[0]);
  if (f == "dicyclic") return need(1, 0), make_dicyclic(e.ints[0]);
  if (f == "generalized_quaternion") {
    need(1, 0);
    if (!is_power_of(e.ints[0], 2) || e.ints[0] < 8) throw Error("generalized_quaternion(2^k) needs k >= 3");
    return make_dicyclic(e.ints[0]);
  }
  if (f == "symmetric") return need(1, 0), make_symmetric(e.ints[0], false);
  if (f == "alternating") return need(1, 0), make_symmetric(e.ints[0], true);
  if (f == "psl2") return need(1, 0), make_psl2(e.ints[0]);
  if (f == "frobenius") return need(2, 0), make_frobenius(e.ints[0], e.ints[1]);
  if (f == "metacyclic") return need(2, 0), make_metacyclic(e.ints[0], e.ints[1]);
  if (f == "sl2") return need(1, 0), make_linear2(e.ints[0], true);
  if (f == "gl2") return need(1, 0), make_linear2(e.ints[0], false);
  if (f == "direct_product") {
    need(0, 2);
    return make_direct_product(build_expr(e.subs[0]), build_expr(e.subs[1]));
  }
  throw Error("unsupported builtin family '" + f + "'");
}

GroupSpec to_spec(std::string name, const Built& b) {
  GroupSpec spec;
  spec.name = std::move(name);
  spec.degree = b.degree;
  for (const auto& g : b.gens) spec.generators.push_back(g.to_cycles());
  spec.hints["order"] = std::to_string(b.inv.order);
  if (b.inv.nilpotent) spec.hints["nilpotent"] = *b.inv.nilpotent ? "true" : "false";
  if (b.inv.soluble) spec.hints["soluble"] = *b.inv.soluble ? "true" : "false";
  if (b.inv.fitting_height) spec.hints["fitting_height"] = std::to_string(*b.inv.fitting_height);
  return spec;
}

std::optional<GroupSpec> affine_spec(std::string_view name) {
  for (const auto& a : affine_entries()) {
    if (name != a.name) continue;
    return to_spec(a.name, make_affine(a.p, a.k, a.linear, soluble_inv(a.order, false, a.fitting_height)));
  }
  return std::nullopt;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

GroupTable build_group(const GroupSpec& spec, std::size_t order_cap) {
  std::vector<Permutation> gens;
  for (const auto& g : spec.generators) gens.push_back(parse_permutation(g, spec.degree));
  return GroupTable::from_generators(spec.name, std::move(gens), spec.degree, order_cap);
}

GroupSpec builtin(std::string_view expr) {
  const std::string text = trim(expr);
  if (auto a = affine_spec(text)) return *a;
  Expr e = ExprParser(text).parse();
  return to_spec(canonical(e), build_expr(e));
}

std::vector<GroupSpec> parse_group_file(std::string_view text) {
  std::vector<GroupSpec> specs;
  std::set<std::string> names;
  std::optional<GroupSpec> current;
  bool have_degree = false;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) -> void {
    throw ParseError("line " + std::to_string(line_no) + ": " + why);
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') {
      if (nl == text.size()) break;
      continue;
    }
    const std::size_t sp = line.find_first_of(" \t");
    const std::string key = line.substr(0, sp);
    const std::string rest = sp == std::string::npos ? "" : trim(std::string_view(line).substr(sp));

    if (key == "group") {
      if (current) fail("'group' inside an open block");
      if (rest.empty()) fail("group needs a name");
      if (!names.insert(rest).second) fail("duplicate group name '" + rest + "'");
      current = GroupSpec{};
      current->name = rest;
      have_degree = false;
    } else if (key == "degree") {
      if (!current) fail("'degree' outside a group block");
      if (have_degree) fail("degree given twice");
      if (rest.empty() || !std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        fail("degree must be a positive integer");
      current->degree = std::stoul(rest);
      if (current->degree == 0) fail("degree must be a positive integer");
      have_degree = true;
    } else if (key == "gen") {
      if (!current) fail("'gen' outside a group block");
      if (!have_degree) fail("'gen' before 'degree'");
      try {
        parse_permutation(rest, current->degree);
      } catch (const ParseError& e) {
        fail(e.what());
      }
      current->generators.push_back(rest);
    } else if (key == "hint") {
      if (!current) fail("'hint' outside a group block");
      const std::size_t eq = rest.find('=');
      if (eq == std::string::npos || eq == 0) fail("hint must be key=value");
      current->hints[trim(std::string_view(rest).substr(0, eq))] = trim(std::string_view(rest).substr(eq + 1));
    } else if (key == "end") {
      if (!current) fail("'end' without 'group'");
      if (!have_degree) fail("group '" + current->name + "' has no degree");
      specs.push_back(std::move(*current));
      current.reset();
    } else {
      fail("unknown directive '" + key + "'");
    }
    if (nl == text.size()) break;
  }
  if (current) {
    // report the line just past the last one
    if (text.empty() || text.back() != '\n') ++line_no;
    fail("missing 'end' for group '" + current->name + "'");
  }
  return specs;
}

std::string print_group_file(const std::vector<GroupSpec>& specs) {
  std::ostringstream out;
  for (const auto& s : specs) {
    out << "group " << s.name << "\n";
    out << "degree " << s.degree << "\n";
    for (const auto& g : s.generators) out << "gen " << g << "\n";
    for (const auto& [k, v] : s.hints) out << "hint " << k << "=" << v << "\n";
    out << "end\n";
  }
  return out.str();
}

std::vector<GroupSpec> default_catalog(std::size_t max_order) {
  static const std::vector<std::pair<std::string, std::size_t>> entries = {
      {"cyclic(1)", 1}, {"cyclic(2)", 2}, {"cyclic(3)", 3}, {"cyclic(4)", 4}, {"cyclic(5)", 5},
      {"cyclic(6)", 6}, {"cyclic(7)", 7}, {"cyclic(8)", 8}, {"cyclic(9)", 9}, {"cyclic(10)", 10},
      {"cyclic(12)", 12}, {"cyclic(16)", 16}, {"cyclic(30)", 30},
      {"elementary_abelian(2,2)", 4}, {"elementary_abelian(2,3)", 8}, {"elementary_abelian(2,4)", 16},
      {"elementary_abelian(2,5)", 32}, {"elementary_abelian(3,2)", 9}, {"elementary_abelian(3,3)", 27},
      {"elementary_abelian(5,2)", 25}, {"elementary_abelian(7,2)", 49},
      {"direct_product(cyclic(2),cyclic(4))", 8}, {"direct_product(cyclic(4),cyclic(4))", 16},
      {"direct_product(cyclic(3),cyclic(9))", 27},
      {"dihedral(4)", 8}, {"dihedral(5)", 10}, {"dihedral(6)", 12}, {"dihedral(7)", 14},
      {"dihedral(8)", 16}, {"dihedral(10)", 20}, {"dihedral(12)", 24},
      {"symmetric(3)", 6}, {"symmetric(4)", 24}, {"symmetric(5)", 120},
      {"alternating(4)", 12}, {"alternating(5)", 60},
      {"generalized_quaternion(8)", 8}, {"generalized_quaternion(16)", 16},
      {"dicyclic(12)", 12}, {"dicyclic(20)", 20}, {"dicyclic(24)", 24},
      {"metacyclic(8,3)", 16}, {"metacyclic(8,5)", 16}, {"metacyclic(9,2)", 54},
      {"frobenius(5,4)", 20}, {"frobenius(7,3)", 21}, {"frobenius(7,6)", 42},
      {"frobenius(11,5)", 55}, {"frobenius(13,3)", 39}, {"frobenius(13,4)", 52},
      {"sl2(3)", 24}, {"gl2(3)", 48}, {"psl2(7)", 168},
      {"direct_product(dihedral(4),cyclic(3))", 24},
      {"direct_product(generalized_quaternion(8),cyclic(3))", 24},
      {"direct_product(generalized_quaternion(8),symmetric(3))", 48},
      {"direct_product(symmetric(3),symmetric(3))", 36},
      {"direct_product(alternating(4),cyclic(3))", 36},
      {"direct_product(frobenius(7,3),cyclic(2))", 42},
      {"direct_product(symmetric(4),cyclic(2))", 48},
      {"direct_product(symmetric(4),cyclic(3))", 72},
      {"direct_product(symmetric(4),symmetric(3))", 144},
      {"direct_product(alternating(5),cyclic(2))", 120},
      {"c3^2:c2", 18}, {"c3^2:c4", 36}, {"c3^2:q8", 72}, {"c5^2:c3", 75},
      {"c2^3:c7", 56}, {"c2^4:c5", 80}, {"c2^3:c7:c3", 168},
  };
  std::vector<GroupSpec> out;
  for (const auto& [name, order] : entries)
    if (order <= max_order) out.push_back(builtin(name));
  return out;
}

std::vector<std::string> check_hints(const GroupSpec& spec, const GroupTable& g) {
  std::vector<std::string> issues;
  auto mismatch = [&](const std::string& key, const std::string& want, const std::string& got) {
    if (want != got) issues.push_back(spec.name + ": hint " + key + "=" + want + " but computed " + got);
  };
  std::optional<bool> soluble;
  for (const auto& [key, value] : spec.hints) {
    if (key == "order") {
      mismatch(key, value, std::to_string(g.order()));
    } else if (key == "nilpotent") {
      mismatch(key, value, is_nilpotent(g).nilpotent ? "true" : "false");
    } else if (key == "soluble") {
      soluble = is_soluble(g);
      mismatch(key, value, *soluble ? "true" : "false");
    } else if (key == "fitting_height") {
      if (!soluble) soluble = is_soluble(g);
      mismatch(key, value, *soluble ? std::to_string(fitting_height(g)) : "undefined (not soluble)");
    } else if (key.rfind("hall", 0) == 0) {
      const std::uint32_t p = static_cast<std::uint32_t>(std::stoul(key.substr(4)));
      std::vector<ElementId> gens;
      std::stringstream ss(value);
      std::string item;
      while (std::getline(ss, item, ';')) gens.push_back(g.id_of(parse_permutation(item, g.degree())));
      const auto h = subgroup_generated(g, gens);
      mismatch(key + " order", std::to_string(g.order() / p_part(g.order(), p)), std::to_string(h.order));
    } else {
      issues.push_back(spec.name + ": unknown hint key '" + key + "'");
    }
  }
  return issues;
}

}  // namespace cck
