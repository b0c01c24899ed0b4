#include "utlab/num_theory.hpp"

#include <omp.h>

#include <vector>

#include "utlab/galois.hpp"

namespace utlab {

namespace {

void require_prime(std::uint64_t p, const char* who) {
  if (!is_prime(p)) throw InvalidArgument(std::string(who) + ": " + std::to_string(p) + " is not prime");
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t closure_order(std::uint64_t p, std::span<const std::uint64_t> gens) {
  std::vector<char> in(p, 0);
  std::vector<std::uint64_t> elems{1};
  in[1] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (auto g : gens) {
      const auto x = mulmod(elems[i], g, p);
      if (!in[x]) {
        in[x] = 1;
        elems.push_back(x);
      }
    }
  return elems.size();
}

}  // namespace

std::uint64_t subgroup_order(std::uint64_t p, std::span<const std::uint64_t> gens) {
  require_prime(p, "subgroup_order");
  if (gens.empty()) throw InvalidArgument("subgroup_order: no generators");
  for (auto g : gens)
    if (g == 0 || g >= p) throw InvalidArgument("subgroup_order: generator must lie in 1..p-1");
  return closure_order(p, gens);
}

AglReport agl_criterion(std::uint64_t p, bool stop_early) {
  require_prime(p, "agl_criterion");
  if (p < 5) throw InvalidArgument("agl_criterion: need p >= 5");
  AglReport r;
  r.p = p;
  for (std::uint64_t c = 2; c < p; ++c) {
    const std::uint64_t gens[] = {p - 1, c, c - 1};
    const auto order = closure_order(p, gens);
    r.rows.push_back({c, order});
    if (order < p - 1) {
      r.verdict = false;
      r.witnesses.push_back(c);
      if (stop_early) break;
    }
  }
  return r;
}

std::optional<std::uint64_t> sixth_root_shortcut(std::uint64_t p) {
  require_prime(p, "sixth_root_shortcut");
  if (p % 3 != 1 || p <= 7) return std::nullopt;
  for (std::uint64_t c = 2; c < p; ++c)
    if ((mulmod(c, c, p) + 1) % p == c) return c;
  return std::nullopt;
}

std::optional<std::uint64_t> consecutive_qr_shortcut(std::uint64_t p) {
  require_prime(p, "consecutive_qr_shortcut");
  if (p % 4 != 1 || p <= 5) return std::nullopt;
  std::vector<char> qr(p, 0);
  for (std::uint64_t x = 1; x < p; ++x) qr[mulmod(x, x, p)] = 1;
  for (std::uint64_t x = 1; x + 1 < p; ++x)
    if (qr[x] && qr[x + 1]) return x + 1;
  return std::nullopt;
}

namespace {

SieveRow sieve_row(std::uint64_t p) {
  const auto r = agl_criterion(p, true);
  SieveRow row;
  row.p = p;
  row.verdict = r.verdict;
  row.order = p - 1;
  if (!r.verdict) {
    row.min_witness = r.witnesses.front();
    row.order = r.rows.back().order;
  }
  return row;
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 11; p <= limit; p += 12)
    if (is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace

std::vector<SieveRow> sieve_problem1(std::uint64_t limit) {
  const auto primes = sieve_primes(limit);
  std::vector<SieveRow> rows(primes.size());
  const auto count = static_cast<std::int64_t>(primes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) rows[i] = sieve_row(primes[i]);
  return rows;
}

std::vector<SieveRow> sieve_problem1_serial(std::uint64_t limit) {
  std::vector<SieveRow> rows;
  for (auto p : sieve_primes(limit)) rows.push_back(sieve_row(p));
  return rows;
}

Point agl_point(std::uint64_t p, std::uint64_t x) {
  require_prime(p, "agl_point");
  if (x >= p) throw InvalidArgument("agl_point: element out of range");
  if (x == 0) return 1;
  const GaloisField F(static_cast<std::uint32_t>(p));
  std::uint64_t w = 1;
  for (std::uint64_t i = 0; i + 1 < p; ++i) {
    if (w == x) return static_cast<Point>(i + 2);
    w = mulmod(w, F.primitive(), p);
  }
  throw Error("agl_point: primitive root does not reach every unit");
}

}  // namespace utlab
