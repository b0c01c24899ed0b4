#include "utlab/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <regex>
#include <sstream>

#include "utlab/galois.hpp"

#ifndef UTLAB_DATA_DIR
#define UTLAB_DATA_DIR "data"
#endif

namespace utlab {

namespace {

Permutation from_map(std::size_t n, const std::function<Point(Point)>& f) {
  std::vector<Point> img(n);
  for (std::size_t i = 1; i <= n; ++i) img[i - 1] = f(static_cast<Point>(i));
  return Permutation::from_images(img);
}

BigInt factorial(std::size_t n) {
  BigInt r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt gl_order(std::uint32_t d, std::uint32_t p) {
  BigInt r = 1, pd = 1, pi = 1;
  for (std::uint32_t i = 0; i < d; ++i) pd *= p;
  for (std::uint32_t i = 0; i < d; ++i, pi *= p) r *= pd - pi;
  return r;
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
    s.replace(pos, from.size(), to);
  return s;
}

std::uint32_t to_u32(const std::string& s) { return static_cast<std::uint32_t>(std::stoul(s)); }

void require_degree(const GroupSpec& s, std::size_t degree) {
  if (degree != 0 && degree != s.degree)
    throw InvalidArgument("catalog: " + s.name + " has no action of degree " + std::to_string(degree));
}

GroupSpec stored(std::string name, std::size_t degree, std::string file, BigInt order,
                 std::size_t t) {
  GroupSpec s;
  s.name = std::move(name);
  s.degree = degree;
  s.family = Family::Stored;
  s.file = std::move(file);
  s.order = std::move(order);
  s.transitivity = t;
  return s;
}

GroupSpec projective(std::string name, std::uint32_t q, int level) {
  const auto pe = prime_power(q);
  if (!pe) throw InvalidArgument("catalog: " + std::to_string(q) + " is not a prime power");
  GroupSpec s;
  s.name = std::move(name);
  s.family = Family::Projective;
  s.q = q;
  s.d = 2;
  s.degree = q + 1;
  s.level = level;
  BigInt pgl = BigInt(q) * (BigInt(q) * q - 1);
  const bool odd = q % 2 == 1;
  switch (level) {
    case 0: s.order = odd ? pgl / 2 : pgl; break;
    case 1: s.order = pgl; break;
    case 2: s.order = (odd ? pgl / 2 : pgl) * pe->second; break;
    case 3: s.order = pgl * pe->second; break;
    default: s.order = 720; break;  // M10
  }
  s.transitivity = (level == 0 && odd) ? 2 : 3;
  if (level == 2 && odd) s.transitivity = 2;
  if (q == 2) s.transitivity = 3;
  return s;
}

GroupSpec affine1(std::string name, std::uint32_t q, int level, std::uint32_t m = 0) {
  const auto pe = prime_power(q);
  if (!pe) throw InvalidArgument("catalog: " + std::to_string(q) + " is not a prime power");
  GroupSpec s;
  s.name = std::move(name);
  s.family = Family::Affine1;
  s.q = q;
  s.degree = q;
  s.level = level;
  s.m = m;
  if (m) {
    if (pe->second != 1) throw InvalidArgument("catalog: p:m needs p prime");
    if (m == 0 || (q - 1) % m != 0) throw InvalidArgument("catalog: p:m needs m | p-1");
    s.order = BigInt(q) * m;
    s.transitivity = m == q - 1 ? 2 : 1;
  } else if (level == 0) {
    s.order = q;
  } else {
    s.order = BigInt(q) * (q - 1) * (level == 3 ? pe->second : 1);
    s.transitivity = 2;
  }
  if (s.order == 1 || q == 1) s.transitivity = 1;
  return s;
}

GroupSpec simple_family(std::string name, Family f, std::uint32_t n) {
  GroupSpec s;
  s.name = std::move(name);
  s.family = f;
  s.q = n;
  s.degree = n;
  if (n == 0 || n > kMaxDegree) throw InvalidArgument("catalog: degree out of range");
  switch (f) {
    case Family::Cyclic: s.order = n; s.transitivity = n <= 2 ? n : 1; break;
    case Family::Dihedral: s.order = n <= 2 ? BigInt(n) : BigInt(2 * n); s.transitivity = n <= 3 ? n : 1; break;
    case Family::Symmetric: s.order = factorial(n); s.transitivity = n; break;
    default:
      s.order = n <= 2 ? BigInt(1) : factorial(n) / 2;
      s.transitivity = n <= 2 ? 1 : n - 2;
      break;
  }
  if (n == 1) s.transitivity = 1;
  return s;
}

}  // namespace

GroupSpec parse_group_name(const std::string& raw, std::size_t degree) {
  std::string name = replace_all(replace_all(raw, "Γ", "Gamma"), "Σ", "Sigma");
  name = replace_all(name, " ", "");
  std::smatch m;
  GroupSpec s;
  static const std::regex cyclic(R"(C(\d+))"), dihedral(R"(D\(2\*(\d+)\))"), dih_order(R"(D(\d+))"),
      symmetric(R"(S(\d+))"), alternating(R"(A(\d+))"),
      affine(R"((AGL|AGammaL|ASL)\((\d+),(\d+)\))"), frobenius(R"((\d+):(\d+))"),
      proj(R"((PSL|PGL|PSigmaL|PGammaL)\((\d+),(\d+)\))");

  if (std::regex_match(name, m, cyclic)) {
    s = simple_family(name, Family::Cyclic, to_u32(m[1]));
  } else if (std::regex_match(name, m, dihedral)) {
    s = simple_family(name, Family::Dihedral, to_u32(m[1]));
  } else if (std::regex_match(name, m, dih_order)) {
    const auto ord = to_u32(m[1]);
    if (ord % 2) throw InvalidArgument("catalog: dihedral group order must be even");
    s = simple_family(name, Family::Dihedral, ord / 2);
  } else if (std::regex_match(name, m, symmetric)) {
    const auto n = to_u32(m[1]);
    if (n == 5 && degree == 10) {
      s = simple_family(name, Family::Symmetric, 5);
      s.family = Family::PairAction;
      s.degree = 10;
      s.transitivity = 1;
    } else if (n == 6 && degree == 10) {
      s = projective(name, 9, 2);
    } else {
      s = simple_family(name, Family::Symmetric, n);
    }
  } else if (std::regex_match(name, m, alternating)) {
    const auto n = to_u32(m[1]);
    if (n == 5 && degree == 10) {
      s = simple_family(name, Family::Alternating, 5);
      s.family = Family::PairAction;
      s.degree = 10;
      s.transitivity = 1;
    } else if (n == 6 && degree == 10) {
      s = projective(name, 9, 0);
    } else if (n == 5 && degree == 6) {
      s = projective(name, 5, 0);
    } else {
      s = simple_family(name, Family::Alternating, n);
    }
  } else if (std::regex_match(name, m, affine)) {
    const std::string kind = m[1];
    const auto d = to_u32(m[2]), q = to_u32(m[3]);
    if (d == 1) {
      s = affine1(name, q, kind == "AGL" ? 1 : kind == "ASL" ? 0 : 3);
    } else {
      if (kind == "AGammaL" || !is_prime(q))
        throw InvalidArgument("catalog: higher-dimensional affine groups need a prime field");
      s.name = name;
      s.family = Family::Affine;
      s.q = q;
      s.d = d;
      s.level = kind == "AGL" ? 1 : 0;
      BigInt deg = 1;
      for (std::uint32_t i = 0; i < d; ++i) deg *= q;
      if (deg > kMaxDegree) throw InvalidArgument("catalog: degree too large");
      s.degree = static_cast<std::size_t>(deg);
      s.order = deg * (s.level ? gl_order(d, q) : gl_order(d, q) / (q - 1));
      s.transitivity = (q == 2) ? 3 : 2;
    }
  } else if (std::regex_match(name, m, frobenius)) {
    s = affine1(name, to_u32(m[1]), 1, to_u32(m[2]));
  } else if (name == "3^2:4" || name == "3^2:D(2*4)" || name == "3^2:D8" || name == "M9" ||
             name == "3^2:Q8") {
    s.name = name;
    s.family = Family::AffineMatrix;
    s.q = 3;
    s.d = 2;
    s.degree = 9;
    s.m = name == "3^2:4" ? 1 : (name == "M9" || name == "3^2:Q8") ? 3 : 2;
    s.order = s.m == 1 ? 36 : 72;
    s.transitivity = s.m == 3 ? 2 : 1;
  } else if (std::regex_match(name, m, proj)) {
    const std::string kind = m[1];
    const auto d = to_u32(m[2]), q = to_u32(m[3]);
    if (d == 3 && q == 2 && (kind == "PSL" || kind == "PGL")) {
      s.name = name;
      s.family = Family::Linear;
      s.q = 2;
      s.d = 3;
      s.degree = 7;
      s.order = 168;
      s.transitivity = 2;
    } else if (d == 2) {
      const int level = kind == "PSL" ? 0 : kind == "PGL" ? 1 : kind == "PSigmaL" ? 2 : 3;
      s = projective(name, q, level);
    } else {
      throw InvalidArgument("catalog: only PSL(3,2) and two-dimensional projective groups");
    }
  } else if (name == "M10") {
    s = projective(name, 9, 4);
  } else if (name == "M11") {
    s = (degree == 12) ? stored(name, 12, "M11_12.grp", 7920, 3)
                       : stored(name, 11, "M11_11.grp", 7920, 4);
  } else if (name == "M12") {
    s = stored(name, 12, "M12_12.grp", 95040, 5);
  } else if (name == "Sp(6,2)") {
    s = (degree == 36) ? stored(name, 36, "Sp_6_2_36.grp", 1451520, 2)
                       : stored(name, 28, "Sp_6_2_28.grp", 1451520, 2);
  } else if (name == "2^6:G2(2)") {
    s = stored(name, 64, "2_6_G2_2_64.grp", 774144, 2);
  } else if (name == "2^6:U3(3)" || name == "2^6:G2(2)'") {
    s = stored(name, 64, "2_6_U3_3_64.grp", 387072, 2);
  } else if (name == "HS") {
    s = stored(name, 176, "HS_176.grp", BigInt(44352000), 2);
  } else if (name == "Co3") {
    s = stored(name, 276, "Co3_276.grp", BigInt(495766656000ull), 2);
  } else {
    throw InvalidArgument("catalog: unknown group name '" + raw + "'");
  }
  require_degree(s, degree);
  return s;
}

namespace {

std::vector<Permutation> affine1_gens(const GroupSpec& s) {
  const GaloisField F(s.q);
  const std::uint32_t q = s.q;
  // Point 1 is 0 and point i is omega^(i-2).
  std::vector<std::uint32_t> elem(q + 1), point(q);
  elem[1] = 0;
  point[0] = 1;
  for (std::uint32_t i = 2, a = 1; i <= q; ++i, a = F.mul(a, F.primitive())) {
    elem[i] = a;
    point[a] = i;
  }
  auto field_map = [&](auto f) {
    return from_map(q, [&](Point x) { return static_cast<Point>(point[f(elem[x])]); });
  };
  std::vector<Permutation> gens;
  for (std::uint32_t i = 0, b = 1; i < F.e(); ++i, b *= F.p())
    gens.push_back(field_map([&](std::uint32_t x) { return F.add(x, b); }));
  if (s.m) {
    const std::uint32_t mu = F.pow(F.primitive(), (q - 1) / s.m);
    gens.push_back(field_map([&](std::uint32_t x) { return F.mul(mu, x); }));
  } else if (s.level >= 1) {
    gens.push_back(field_map([&](std::uint32_t x) { return F.mul(F.primitive(), x); }));
  }
  if (s.level == 3 && F.e() > 1)
    gens.push_back(field_map([&](std::uint32_t x) { return F.frobenius(x); }));
  return gens;
}

using Matrix = std::vector<std::vector<std::uint32_t>>;

// Row vectors over GF(p) acted on by v -> vM, labelled 1 + lex index.
Permutation matrix_perm(const Matrix& M, std::uint32_t p, std::uint32_t d, std::size_t offset,
                        std::size_t n) {
  return from_map(n, [&](Point x) {
    std::vector<std::uint32_t> v(d);
    std::uint32_t code = x - 1 + static_cast<std::uint32_t>(offset);
    for (std::uint32_t i = d; i-- > 0; code /= p) v[i] = code % p;
    std::uint32_t out = 0;
    for (std::uint32_t j = 0; j < d; ++j) {
      std::uint32_t c = 0;
      for (std::uint32_t i = 0; i < d; ++i) c = (c + v[i] * M[i][j]) % p;
      out = out * p + c;
    }
    return static_cast<Point>(out + 1 - offset);
  });
}

Matrix identity(std::uint32_t d) {
  Matrix m(d, std::vector<std::uint32_t>(d, 0));
  for (std::uint32_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

// Generators of SL(d,p): a transvection and a signed cycle.
std::vector<Matrix> sl_gens(std::uint32_t d, std::uint32_t p) {
  Matrix a = identity(d);
  a[0][1] = 1;
  Matrix b(d, std::vector<std::uint32_t>(d, 0));
  for (std::uint32_t i = 0; i + 1 < d; ++i) b[i][i + 1] = 1;
  b[d - 1][0] = (d % 2 == 0) ? p - 1 : 1;
  return {a, b};
}

std::vector<Permutation> affine_gens(const GroupSpec& s, const std::vector<Matrix>& linear) {
  const std::uint32_t p = s.q, d = s.d;
  const std::size_t n = s.degree;
  std::vector<Permutation> gens;
  // One translation suffices since the linear part is transitive on nonzero vectors.
  gens.push_back(from_map(n, [&](Point x) {
    const std::uint32_t v = x - 1u;
    const std::uint32_t last = (v % p + 1) % p;
    return static_cast<Point>(v - v % p + last + 1);
  }));
  for (const auto& M : linear) gens.push_back(matrix_perm(M, p, d, 0, n));
  return gens;
}

std::vector<Permutation> projective_gens(const GroupSpec& s) {
  const GaloisField F(s.q);
  const std::uint32_t q = s.q, inf = q;
  const std::size_t n = q + 1;
  auto line_map = [&](auto f) {
    return from_map(n, [&](Point x) { return static_cast<Point>(f(x - 1u) + 1); });
  };
  std::vector<Permutation> gens;
  for (std::uint32_t i = 0, b = 1; i < F.e(); ++i, b *= F.p())
    gens.push_back(line_map([&](std::uint32_t x) { return x == inf ? inf : F.add(x, b); }));
  const bool special = (s.level == 0 || s.level == 2 || s.level == 4) && q % 2 == 1;
  const std::uint32_t mu = special ? F.mul(F.primitive(), F.primitive()) : F.primitive();
  if (mu != 1) gens.push_back(line_map([&](std::uint32_t x) { return x == inf ? inf : F.mul(mu, x); }));
  gens.push_back(line_map([&](std::uint32_t x) {
    if (x == inf) return 0u;
    if (x == 0) return inf;
    return F.neg(F.inv(x));
  }));
  if ((s.level == 2 || s.level == 3) && F.e() > 1)
    gens.push_back(line_map([&](std::uint32_t x) { return x == inf ? inf : F.frobenius(x); }));
  if (s.level == 4)  // M10: x -> omega x^3 over GF(9)
    gens.push_back(line_map([&](std::uint32_t x) {
      return x == inf ? inf : F.mul(F.primitive(), F.frobenius(x));
    }));
  return gens;
}

std::vector<Permutation> pair_action_gens(const GroupSpec& s) {
  std::vector<std::pair<Point, Point>> pairs;
  for (Point a = 1; a <= 5; ++a)
    for (Point b = a + 1; b <= 5; ++b) pairs.emplace_back(a, b);
  auto induced = [&](const Permutation& g) {
    return from_map(10, [&](Point x) {
      auto [a, b] = pairs[x - 1];
      Point u = g(a), v = g(b);
      if (u > v) std::swap(u, v);
      return static_cast<Point>(std::find(pairs.begin(), pairs.end(), std::make_pair(u, v)) -
                                pairs.begin() + 1);
    });
  };
  const auto five = Permutation::from_cycles("(1,2,3,4,5)", 5);
  const auto other = Permutation::from_cycles(s.family == Family::PairAction &&
                                                      s.order == 120 ? "(1,2)" : "(1,2,3)", 5);
  return {induced(five), induced(other)};
}

std::vector<Permutation> simple_gens(const GroupSpec& s) {
  const std::size_t n = s.degree;
  std::vector<Permutation> gens;
  auto cycle = [&](Point from, Point to) {
    return from_map(n, [=](Point x) {
      return (x < from || x > to) ? x : static_cast<Point>(x == to ? from : x + 1);
    });
  };
  switch (s.family) {
    case Family::Cyclic: gens.push_back(cycle(1, static_cast<Point>(n))); break;
    case Family::Dihedral:
      gens.push_back(cycle(1, static_cast<Point>(n)));
      gens.push_back(from_map(n, [=](Point x) {
        return static_cast<Point>(x == 1 ? 1 : n + 2 - x);
      }));
      break;
    case Family::Symmetric:
      gens.push_back(cycle(1, static_cast<Point>(n)));
      if (n >= 2) gens.push_back(cycle(1, 2));
      break;
    default:
      if (n >= 3) {
        gens.push_back(cycle(1, 3));
        if (n >= 4) gens.push_back(n % 2 ? cycle(1, static_cast<Point>(n)) : cycle(2, static_cast<Point>(n)));
      }
      break;
  }
  return gens;
}

}  // namespace

std::filesystem::path data_directory() {
  if (const char* env = std::getenv("UT_LAB_DATA"); env && *env) return env;
  return UTLAB_DATA_DIR;
}

PermGroup build(const GroupSpec& s) {
  std::vector<Permutation> gens;
  switch (s.family) {
    case Family::Cyclic:
    case Family::Dihedral:
    case Family::Symmetric:
    case Family::Alternating: gens = simple_gens(s); break;
    case Family::Affine1: gens = affine1_gens(s); break;
    case Family::Affine: {
      auto linear = sl_gens(s.d, s.q);
      if (s.level == 1 && s.q > 2) {
        Matrix m = identity(s.d);
        m[0][0] = GaloisField(s.q).primitive();
        linear.push_back(m);
      }
      gens = affine_gens(s, linear);
      break;
    }
    case Family::AffineMatrix: {
      std::vector<Matrix> linear{{{0, 1}, {2, 0}}};
      if (s.m == 2) linear.push_back({{1, 0}, {0, 2}});
      if (s.m == 3) linear.push_back({{1, 1}, {1, 2}});
      gens = affine_gens(s, linear);
      break;
    }
    case Family::Projective: gens = projective_gens(s); break;
    case Family::Linear:
      for (const auto& M : sl_gens(3, 2)) gens.push_back(matrix_perm(M, 2, 3, 1, 7));
      break;
    case Family::PairAction: gens = pair_action_gens(s); break;
    case Family::Stored: {
      const auto path = data_directory() / s.file;
      if (!std::filesystem::exists(path))
        throw Error("catalog: stored data for " + s.name + " not found at " + path.string());
      PermGroup g = load_group_file(path);
      if (g.degree() != s.degree || g.order() != s.order)
        throw Error("catalog: stored data for " + s.name + " has the wrong degree or order");
      return PermGroup(g.degree(), g.generators(), s.name);
    }
  }
  PermGroup g(s.degree, std::move(gens), s.name);
  if (g.order() != s.order)
    throw Error("catalog: " + s.name + " built with order " + g.order().str() + ", expected " +
                s.order.str());
  return g;
}

PermGroup resolve_group(const std::string& address) {
  if (address.rfind("file:", 0) == 0) return load_group_file(address.substr(5));
  std::string rest = address;
  if (rest.rfind("catalog:", 0) == 0) rest = rest.substr(8);
  std::size_t degree = 0;
  if (const auto at = rest.rfind('@'); at != std::string::npos) {
    degree = std::stoul(rest.substr(at + 1));
    rest = rest.substr(0, at);
  }
  return build(parse_group_name(rest, degree));
}

std::vector<GroupSpec> catalog_manifest() {
  std::vector<GroupSpec> out;
  auto add = [&](const std::string& name, std::size_t degree = 0) {
    out.push_back(parse_group_name(name, degree));
  };
  for (const char* n : {"C5", "D(2*5)", "AGL(1,5)", "PSL(2,5)", "PGL(2,5)", "C7", "D(2*7)", "7:3",
                        "AGL(1,7)", "PSL(3,2)", "AGL(1,8)", "AGammaL(1,8)", "ASL(3,2)",
                        "PSL(2,7)", "PGL(2,7)", "3^2:4", "3^2:D(2*4)", "M9", "AGL(1,9)",
                        "AGammaL(1,9)", "ASL(2,3)", "AGL(2,3)", "PSL(2,8)", "PGammaL(2,8)",
                        "PSL(2,9)", "PGL(2,9)", "M10", "PGammaL(2,9)", "11:5", "23:11"})
    add(n);
  add("A5", 10);
  add("S5", 10);
  add("S6", 10);
  add("M11", 11);
  add("M11", 12);
  add("M12");
  for (std::uint32_t p = 2; p <= 200; ++p)
    if (is_prime(p) && p > 9) add("AGL(1," + std::to_string(p) + ")");
  for (std::uint32_t q = 2; q <= 32; ++q) {
    const auto pe = prime_power(q);
    if (!pe) continue;
    const std::string args = "(2," + std::to_string(q) + ")";
    if (q > 9) {
      add("PSL" + args);
      if (q % 2) add("PGL" + args);
    }
    if (pe->second > 1 && q > 9) {
      if (q % 2) add("PSigmaL" + args);
      add("PGammaL" + args);
    }
  }
  add("Sp(6,2)", 28);
  add("Sp(6,2)", 36);
  add("2^6:G2(2)");
  add("2^6:U3(3)");
  return out;
}

PermGroup load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open group file " + path.string());
  std::string line, name = path.stem().string();
  std::size_t degree = 0;
  std::optional<BigInt> order;
  std::vector<std::string> gen_text;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string key;
    if (!(ls >> key)) continue;
    std::string value;
    std::getline(ls, value);
    value = replace_all(value, " ", "");
    if (key == "name") {
      name = value;
    } else if (key == "degree") {
      degree = std::stoul(value);
    } else if (key == "order") {
      order = BigInt(value);
    } else if (key == "gen") {
      gen_text.push_back(value);
    } else {
      throw Error(path.string() + ":" + std::to_string(lineno) + ": unknown field '" + key + "'");
    }
  }
  if (degree == 0) throw Error(path.string() + ": missing degree");
  std::vector<Permutation> gens;
  for (const auto& t : gen_text) {
    if (!t.empty() && t.front() == '(') {
      gens.push_back(Permutation::from_cycles(t, degree));
    } else {
      std::vector<Point> img;
      std::stringstream ss(t);
      std::string tok;
      while (std::getline(ss, tok, ',')) img.push_back(static_cast<Point>(std::stoul(tok)));
      if (img.size() != degree) throw Error(path.string() + ": generator has the wrong length");
      gens.push_back(Permutation::from_images(img));
    }
  }
  PermGroup g(degree, std::move(gens), name);
  if (order && g.order() != *order)
    throw Error(path.string() + ": generators give order " + g.order().str() + ", file says " +
                order->str());
  return g;
}

void save_group_file(const PermGroup& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write group file " + path.string());
  out << "name " << (g.name().empty() ? "G" : g.name()) << "\n"
      << "degree " << g.degree() << "\n"
      << "order " << g.order().str() << "\n";
  for (const auto& p : g.generators()) out << "gen " << p.to_image_string() << "\n";
}

}  // namespace utlab
