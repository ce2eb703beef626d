#include "nilrep/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace nilrep {

namespace {

mpz_class binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return b;
}

SparseVector to_sparse(const Field& field, const std::map<std::size_t, mpq_class>& coeffs) {
  SparseVector v;
  for (const auto& [k, c] : coeffs) {
    Scalar s(field, c);
    if (!s.is_zero()) v.push_back(k, s);
  }
  return v;
}

std::size_t parse_size(std::string_view text, const std::string& spec) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw std::invalid_argument("malformed catalog spec '" + spec + "'");
  return value;
}

}  // namespace

LieAlgebra heisenberg(const Field& field) {
  LieAlgebra g(field, 3);
  g.set_bracket(0, 1, SparseVector::unit(2, Scalar(field, 1)));
  g.set_names({"x", "y", "z"});
  return g;
}

LieAlgebra abelian(std::size_t n, const Field& field) { return LieAlgebra(field, n); }

std::size_t upper_triangular_dimension(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

LieAlgebra upper_triangular(std::size_t n, const Field& field) {
  if (n < 2) throw std::invalid_argument("upper_triangular: n must be at least 2");
  std::vector<std::pair<std::size_t, std::size_t>> basis;
  for (std::size_t diff = 1; diff < n; ++diff)
    for (std::size_t i = 0; i + diff < n; ++i) basis.emplace_back(i, i + diff);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    index[basis[k]] = k;
    names.push_back("E" + std::to_string(basis[k].first + 1) + "_" + std::to_string(basis[k].second + 1));
  }
  LieAlgebra g(field, basis.size());
  // [E_ij, E_kl] = delta_jk E_il - delta_li E_kj
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      const auto [i, j] = basis[a];
      const auto [k, l] = basis[b];
      SparseVector v;
      if (j == k) v.add(index.at({i, l}), Scalar(field, 1));
      if (l == i) v.add(index.at({k, j}), Scalar(field, -1));
      if (!v.empty()) g.set_bracket(a, b, v);
    }
  g.set_names(std::move(names));
  return g;
}

std::vector<std::vector<int>> lyndon_words(std::size_t n, std::size_t c) {
  std::vector<std::vector<int>> out;
  if (n == 0 || c == 0) return out;
  // Duval's algorithm enumerates Lyndon words of length <= c in lex order.
  std::vector<int> w{0};
  while (!w.empty()) {
    out.push_back(w);
    const std::size_t len = w.size();
    while (w.size() < c) w.push_back(w[w.size() - len]);
    while (!w.empty() && w.back() == static_cast<int>(n) - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

LieAlgebra free_nilpotent(std::size_t n, std::size_t c, const Field& field) {
  if (n == 0 || c == 0) throw std::invalid_argument("free_nilpotent: rank and class must be positive");
  const auto words = lyndon_words(n, c);
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t k = 0; k < words.size(); ++k) index[words[k]] = k;

  // Standard bracketing expanded in the free associative algebra.
  using Poly = std::map<std::vector<int>, mpz_class>;
  std::vector<Poly> expansion(words.size());
  auto product = [](const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [u, x] : a)
      for (const auto& [v, y] : b) {
        auto w = u;
        w.insert(w.end(), v.begin(), v.end());
        out[w] += x * y;
      }
    return out;
  };
  auto commutator_poly = [&](const Poly& a, const Poly& b) {
    Poly out = product(a, b);
    for (const auto& [w, x] : product(b, a)) out[w] -= x;
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
  };
  std::vector<std::size_t> left(words.size()), right(words.size());
  for (std::size_t k = 0; k < words.size(); ++k) {
    const auto& w = words[k];
    if (w.size() == 1) {
      expansion[k][w] = 1;
      continue;
    }
    // w = uv with v the longest proper Lyndon suffix.
    for (std::size_t split = 1; split < w.size(); ++split) {
      std::vector<int> v(w.begin() + static_cast<long>(split), w.end());
      if (index.count(v)) {
        std::vector<int> u(w.begin(), w.begin() + static_cast<long>(split));
        left[k] = index.at(u);
        right[k] = index.at(v);
        break;
      }
    }
    expansion[k] = commutator_poly(expansion[left[k]], expansion[right[k]]);
  }

  LieAlgebra g(field, words.size());
  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      if (words[a].size() + words[b].size() > c) continue;
      Poly p = commutator_poly(expansion[a], expansion[b]);
      std::map<std::size_t, mpq_class> coeffs;
      // The standard bracketing of w is w plus lexicographically larger words.
      while (!p.empty()) {
        const auto [w, x] = *p.begin();
        auto it = index.find(w);
        if (it == index.end()) throw std::logic_error("free_nilpotent: leading word is not Lyndon");
        coeffs[it->second] = mpq_class(x);
        for (const auto& [u, y] : expansion[it->second]) p[u] -= x * y;
        std::erase_if(p, [](const auto& e) { return e.second == 0; });
      }
      SparseVector v = to_sparse(field, coeffs);
      if (!v.empty()) g.set_bracket(a, b, v);
    }
  std::vector<std::string> names;
  for (const auto& w : words) {
    std::string s = "w";
    for (int letter : w) s += std::to_string(letter + 1);
    names.push_back(s);
  }
  g.set_names(std::move(names));
  return g;
}

std::size_t witt_dimension(std::size_t n, std::size_t c) {
  auto mobius = [](std::size_t m) {
    int result = 1;
    for (std::size_t p = 2; p * p <= m; ++p)
      if (m % p == 0) {
        m /= p;
        if (m % p == 0) return 0;
        result = -result;
      }
    if (m > 1) result = -result;
    return result;
  };
  mpz_class total = 0;
  for (std::size_t m = 1; m <= c; ++m) {
    mpz_class inner = 0;
    for (std::size_t e = 1; e <= m; ++e) {
      if (m % e) continue;
      mpz_class power;
      mpz_ui_pow_ui(power.get_mpz_t(), n, m / e);
      inner += mobius(e) * power;
    }
    total += inner / static_cast<unsigned long>(m);
  }
  return total.get_ui();
}

bool filiform_index(std::size_t n, std::size_t k, std::size_t s) {
  if (k >= 2 && 2 * k <= n && 2 * k + 1 <= s && s <= n) return true;
  return n % 2 == 0 && k == n / 2 && s == n;
}

std::map<std::pair<std::size_t, std::size_t>, mpq_class> filiform_alpha(std::size_t n) {
  if (n < 13) throw std::invalid_argument("filiform_alpha: requires n >= 13");
  std::map<std::pair<std::size_t, std::size_t>, mpq_class> alpha;
  for (std::size_t k = 2; 2 * k <= n; ++k)
    for (std::size_t s = 2 * k + 1; s <= n; ++s) alpha[{k, s}] = 0;
  if (n % 2 == 0) alpha[{n / 2, n}] = 0;

  for (std::size_t l = 2; 2 * l + 1 <= n; ++l) {
    mpq_class v(3, 1);
    v /= mpq_class(binom(static_cast<long>(l), 2) * binom(static_cast<long>(2 * l - 1), static_cast<long>(l - 1)));
    alpha[{l, 2 * l + 1}] = v;
  }
  const mpq_class q(static_cast<long>(n));
  alpha[{3, n - 4}] = 1;
  alpha[{4, n - 2}] = mpq_class(1, 7) + mpq_class(10, 21) * (q - 7) * (q - 8) / ((q - 4) * (q - 5));
  alpha[{4, n}] = n == 13 ? mpq_class(22105, 15246) : mpq_class(0);
  alpha[{5, n}] = mpq_class(1, 42) - mpq_class(70, 11) * (q - 8) / ((q - 2) * (q - 3) * (q - 4) * (q - 5)) +
                  mpq_class(25, 99) * (q - 6) * (q - 7) * (q - 8) / ((q - 2) * (q - 3) * (q - 4)) +
                  mpq_class(5, 66) * (q - 5) * (q - 6) / ((q - 2) * (q - 3)) -
                  mpq_class(65, 1386) * (q - 7) * (q - 8) / ((q - 4) * (q - 5));
  for (auto& [key, v] : alpha) v.canonicalize();
  return alpha;
}

LieAlgebra filiform(std::size_t n) { return filiform(n, filiform_alpha(n)); }

LieAlgebra filiform(std::size_t n, const std::map<std::pair<std::size_t, std::size_t>, mpq_class>& alpha) {
  auto a = [&](long k, long s) -> mpq_class {
    if (k < 0 || s < 0) return 0;
    auto it = alpha.find({static_cast<std::size_t>(k), static_cast<std::size_t>(s)});
    return it == alpha.end() ? mpq_class(0) : it->second;
  };
  const Field field = Field::rationals();
  LieAlgebra g(field, n);
  // Basis e_1, ..., e_n stored at indices 0, ..., n-1.
  for (std::size_t i = 2; i < n; ++i) g.set_bracket(0, i - 1, SparseVector::unit(i, Scalar(field, 1)));
  for (long i = 2; i <= static_cast<long>(n); ++i)
    for (long j = i + 1; j <= static_cast<long>(n); ++j) {
      std::map<std::size_t, mpq_class> coeffs;
      for (long r = 1; r <= static_cast<long>(n); ++r) {
        mpq_class total = 0;
        for (long l = 0; l <= (j - i - 1) / 2; ++l) {
          const mpq_class sign = l % 2 ? -1 : 1;
          total += sign * mpq_class(binom(j - i - l - 1, l)) * a(i + l, r - j + i + 2 * l + 1);
        }
        if (total != 0) coeffs[static_cast<std::size_t>(r - 1)] = total;
      }
      SparseVector v = to_sparse(field, coeffs);
      if (!v.empty()) g.set_bracket(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1), v);
    }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("e" + std::to_string(i));
  g.set_names(std::move(names));
  return g;
}

std::vector<PfaffIdentity> pfaff_identities(std::size_t n) {
  const auto alpha = filiform_alpha(n);
  const long m = static_cast<long>(n);
  const mpq_class q(m);
  auto diag = [&](long l) { return alpha.at({static_cast<std::size_t>(l), static_cast<std::size_t>(2 * l + 1)}); };
  std::vector<PfaffIdentity> out(3);
  for (long l = 3; l <= (m - 1) / 2; ++l) {
    const mpq_class sign = (l - 1) % 2 ? -1 : 1;
    out[0].lhs += sign * mpq_class(binom(m - l - 5, l - 2)) * diag(l);
  }
  out[0].rhs = (q - 7) * (q - 8) / ((q - 4) * (q - 5));
  for (long l = 5; l <= (m - 1) / 2; ++l) {
    const mpq_class sign = l % 2 ? -1 : 1;
    out[1].lhs += sign * mpq_class(binom(m - l - 5, l - 4)) * diag(l);
  }
  out[1].rhs = mpq_class(-1, 70) + 12 * (q - 8) / ((q - 2) * (q - 3) * (q - 4) * (q - 5));
  for (long l = 3; l <= (m - 1) / 2; ++l) {
    const mpq_class sign = l % 2 ? -1 : 1;
    out[2].lhs += sign * mpq_class(binom(m - l - 3, l - 2)) * diag(l);
  }
  out[2].rhs = -(q - 5) * (q - 6) / ((q - 2) * (q - 3));
  for (auto& id : out) {
    id.lhs.canonicalize();
    id.rhs.canonicalize();
  }
  return out;
}

LieAlgebra catalog_algebra(const std::string& spec, const Field& field) {
  const auto colon = spec.find(':');
  const std::string family = spec.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (family == "heisenberg" && colon == std::string::npos) return heisenberg(field);
  if (colon == std::string::npos) throw std::invalid_argument("unknown catalog algebra '" + spec + "'");
  if (family == "abelian") return abelian(parse_size(args, spec), field);
  if (family == "utri") {
    const std::size_t n = parse_size(args, spec);
    if (n < 2) throw std::invalid_argument("utri: n must be at least 2");
    return upper_triangular(n, field);
  }
  if (family == "freenilp") {
    const auto comma = args.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("freenilp expects 'freenilp:n,c'");
    const std::size_t n = parse_size(std::string_view(args).substr(0, comma), spec);
    const std::size_t c = parse_size(std::string_view(args).substr(comma + 1), spec);
    if (n < 1 || c < 1) throw std::invalid_argument("freenilp: n and c must be positive");
    return free_nilpotent(n, c, field);
  }
  if (family == "filiform") {
    if (!field.is_rational()) throw std::invalid_argument("filiform algebras are defined over Q only");
    const std::size_t n = parse_size(args, spec);
    if (n < 13) throw std::invalid_argument("filiform: n must be at least 13");
    return filiform(n);
  }
  throw std::invalid_argument("unknown catalog algebra '" + spec + "'");
}

}  // namespace nilrep
