#include "modlie/weights.hpp"

#include <limits>

namespace modlie {

std::uint64_t weight_count(int rank, int p) {
  std::uint64_t n = 1;
  for (int i = 0; i < rank; ++i) n *= static_cast<std::uint64_t>(p);
  return n;
}

std::uint32_t encode_weight(const WeightModP& w, int p) {
  std::uint32_t code = 0;
  for (std::size_t i = w.coords.size(); i-- > 0;) code = code * p + w.coords[i];
  return code;
}

WeightModP decode_weight(std::uint32_t code, int rank, int p) {
  WeightModP w{Vec(rank)};
  for (int i = 0; i < rank; ++i) {
    w.coords[i] = static_cast<Fp>(code % p);
    code /= p;
  }
  return w;
}

IntVec simple_root_in_weights(const CartanDatum& d, int i) {
  IntVec v(d.rank);
  for (int j = 0; j < d.rank; ++j) v[j] = d.cartan(j, i);
  return v;
}

WeightModP dot_reflect(const CartanDatum& d, int p, int i, const WeightModP& lambda) {
  if (i < 0 || i >= d.rank) throw Error("invalid_index", "simple index out of range");
  if (static_cast<int>(lambda.coords.size()) != d.rank) throw Error("dimension_mismatch", "weight has the wrong length");
  const PrimeField F(p);
  const Fp shifted = F.add(lambda.coords[i], 1);
  WeightModP out = lambda;
  for (int j = 0; j < d.rank; ++j) out.coords[j] = F.sub(out.coords[j], F.mul(shifted, F.reduce(d.cartan(j, i))));
  return out;
}

OrbitReport orbit_count(const CartanDatum& d, int p) {
  const PrimeField F(p);
  const int n = d.rank;
  const std::uint64_t total = weight_count(n, p);
  if (total > std::numeric_limits<std::uint32_t>::max() / 2) throw Error("too_large", "weight lattice too large to enumerate");
  // s_i changes only coordinates j with A[j][i] != 0, by -(c_i + 1) A[j][i].
  std::vector<std::uint32_t> place(n, 1);
  for (int j = 1; j < n; ++j) place[j] = place[j - 1] * p;
  std::vector<std::vector<std::pair<int, Fp>>> touch(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (F.reduce(d.cartan(j, i))) touch[i].push_back({j, F.reduce(d.cartan(j, i))});

  OrbitReport rep;
  constexpr std::uint32_t unseen = std::numeric_limits<std::uint32_t>::max();
  rep.orbit_of.assign(total, unseen);
  std::vector<std::uint32_t> queue;
  Vec c(n);
  for (std::uint32_t start = 0; start < total; ++start) {
    if (rep.orbit_of[start] != unseen) continue;
    const auto id = static_cast<std::uint32_t>(rep.representatives.size());
    rep.representatives.push_back(decode_weight(start, n, p));
    queue.assign(1, start);
    rep.orbit_of[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::uint32_t code = queue[head];
      std::uint32_t t = code;
      for (int j = 0; j < n; ++j) {
        c[j] = static_cast<Fp>(t % p);
        t /= p;
      }
      for (int i = 0; i < n; ++i) {
        const Fp shift = F.add(c[i], 1);
        std::int64_t next = code;
        for (const auto& [j, a] : touch[i]) {
          const Fp nj = F.sub(c[j], F.mul(shift, a));
          next += (static_cast<std::int64_t>(nj) - c[j]) * place[j];
        }
        const auto nc = static_cast<std::uint32_t>(next);
        if (rep.orbit_of[nc] == unseen) {
          rep.orbit_of[nc] = id;
          queue.push_back(nc);
        }
      }
    }
    rep.orbit_sizes.push_back(queue.size());
  }
  rep.orbit_count = static_cast<int>(rep.representatives.size());
  return rep;
}

}  // namespace modlie
