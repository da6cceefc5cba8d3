#include "modlie/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <sstream>

namespace modlie {

char type_letter(LieType t) { return static_cast<char>('A' + static_cast<int>(t)); }

LieType parse_type_letter(char c) {
  if (c < 'A' || c > 'G') throw Error("invalid_type", std::string("unknown Lie type letter '") + c + "'");
  return static_cast<LieType>(c - 'A');
}

std::string CartanDatum::label() const { return std::string(1, type_letter(type)) + std::to_string(rank); }

CartanDatum CartanDatum::parse(const std::string& label) {
  if (label.size() < 2) throw Error("invalid_type", "type label must look like G2, E8, A1; got '" + label + "'");
  const LieType t = parse_type_letter(static_cast<char>(std::toupper(static_cast<unsigned char>(label[0]))));
  int r = 0;
  try {
    std::size_t used = 0;
    r = std::stoi(label.substr(1), &used);
    if (used != label.size() - 1) throw std::invalid_argument(label);
  } catch (const std::exception&) {
    throw Error("invalid_type", "cannot parse rank in type label '" + label + "'");
  }
  return of(t, r);
}

CartanDatum CartanDatum::of(LieType type, int rank) {
  auto bad = [&] {
    return Error("invalid_type", std::string("no irreducible root system of type ") + type_letter(type) +
                                     std::to_string(rank));
  };
  switch (type) {
    case LieType::A: if (rank < 1) throw bad(); break;
    case LieType::B: case LieType::C: if (rank < 2) throw bad(); break;
    case LieType::D: if (rank < 4) throw bad(); break;
    case LieType::E: if (rank < 6 || rank > 8) throw bad(); break;
    case LieType::F: if (rank != 4) throw bad(); break;
    case LieType::G: if (rank != 2) throw bad(); break;
  }
  CartanDatum d;
  d.type = type;
  d.rank = rank;
  d.matrix.assign(rank, IntVec(rank, 0));
  for (int i = 0; i < rank; ++i) d.matrix[i][i] = 2;
  auto link = [&](int i, int j) {  // 1-based, simple bond
    d.matrix[i - 1][j - 1] = -1;
    d.matrix[j - 1][i - 1] = -1;
  };
  switch (type) {
    case LieType::A:
      for (int i = 1; i < rank; ++i) link(i, i + 1);
      break;
    case LieType::B:
      for (int i = 1; i < rank - 1; ++i) link(i, i + 1);
      d.matrix[rank - 2][rank - 1] = -1;  // <alpha_{n-1}^vee, alpha_n>
      d.matrix[rank - 1][rank - 2] = -2;
      break;
    case LieType::C:
      for (int i = 1; i < rank - 1; ++i) link(i, i + 1);
      d.matrix[rank - 2][rank - 1] = -2;
      d.matrix[rank - 1][rank - 2] = -1;
      break;
    case LieType::D:
      for (int i = 1; i < rank - 1; ++i) link(i, i + 1);
      link(rank - 2, rank);
      break;
    case LieType::E:
      if (rank == 6) {
        for (int i = 1; i < 5; ++i) link(i, i + 1);
        link(3, 6);
      } else if (rank == 7) {
        for (int i = 1; i < 6; ++i) link(i, i + 1);
        link(4, 7);
      } else {
        for (int i = 1; i < 7; ++i) link(i, i + 1);
        link(5, 8);
      }
      break;
    case LieType::F:
      link(1, 2);
      d.matrix[1][2] = -1;
      d.matrix[2][1] = -2;
      link(3, 4);
      break;
    case LieType::G:
      d.matrix[0][1] = -3;
      d.matrix[1][0] = -1;
      break;
  }
  return d;
}

int positive_root_count(LieType type, int n) {
  switch (type) {
    case LieType::A: return n * (n + 1) / 2;
    case LieType::B: case LieType::C: return n * n;
    case LieType::D: return n * (n - 1);
    case LieType::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case LieType::F: return 24;
    case LieType::G: return 6;
  }
  return 0;
}

unsigned long long weyl_group_order(LieType type, int n) {
  auto fact = [](int k) {
    unsigned long long f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<unsigned long long>(i);
    return f;
  };
  switch (type) {
    case LieType::A: return fact(n + 1);
    case LieType::B: case LieType::C: return (1ULL << n) * fact(n);
    case LieType::D: return (1ULL << (n - 1)) * fact(n);
    case LieType::E: return n == 6 ? 51840ULL : n == 7 ? 2903040ULL : 696729600ULL;
    case LieType::F: return 1152;
    case LieType::G: return 12;
  }
  return 0;
}

namespace {

// Squared lengths of the simple roots, scaled so that the shortest is 2.
// Returns nullopt if the matrix is not symmetrisable.
std::optional<IntVec> simple_root_lengths(const CartanDatum& d) {
  const int n = d.rank;
  std::vector<long long> num(n, 0), den(n, 1);
  std::vector<bool> seen(n, false);
  num[0] = 1;
  seen[0] = true;
  std::queue<int> q;
  q.push(0);
  while (!q.empty()) {
    const int i = q.front();
    q.pop();
    for (int j = 0; j < n; ++j) {
      if (j == i || d.matrix[i][j] == 0 || seen[j]) continue;
      // A_ij d_i = A_ji d_j
      num[j] = num[i] * d.matrix[i][j];
      den[j] = den[i] * d.matrix[j][i];
      const long long g = std::gcd(num[j], den[j]);
      num[j] /= g;
      den[j] /= g;
      if (den[j] < 0) { num[j] = -num[j]; den[j] = -den[j]; }
      seen[j] = true;
      q.push(j);
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) return std::nullopt;
  long long l = 1;
  for (int i = 0; i < n; ++i) l = std::lcm(l, den[i]);
  std::vector<long long> len(n);
  for (int i = 0; i < n; ++i) len[i] = num[i] * (l / den[i]);
  long long g = 0;
  for (auto v : len) g = std::gcd(g, v);
  IntVec out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<int>(2 * len[i] / g);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (static_cast<long long>(d.matrix[i][j]) * out[i] != static_cast<long long>(d.matrix[j][i]) * out[j])
        return std::nullopt;
  return out;
}

// Positive roots by height, or nullopt if more than `cap` turn up.
std::optional<std::vector<Root>> generate_positive_roots(const CartanDatum& d, std::size_t cap) {
  const int n = d.rank;
  std::vector<Root> roots;
  std::map<IntVec, int> index;
  std::vector<Root> layer;
  for (int i = 0; i < n; ++i) {
    Root r{IntVec(n, 0)};
    r.coords[i] = 1;
    layer.push_back(r);
  }
  while (!layer.empty()) {
    for (const auto& r : layer) {
      index.emplace(r.coords, static_cast<int>(roots.size()));
      roots.push_back(r);
    }
    if (roots.size() > cap) return std::nullopt;
    std::map<IntVec, Root> next;
    for (const auto& beta : layer) {
      for (int i = 0; i < n; ++i) {
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta.coords[j] * d.matrix[i][j];
        int r = 0;
        for (;;) {
          IntVec down = beta.coords;
          down[i] -= r + 1;
          if (!index.count(down)) break;
          ++r;
        }
        if (r - pairing > 0) {
          Root up = beta;
          up.coords[i] += 1;
          next.emplace(up.coords, up);
        }
      }
    }
    layer.clear();
    for (auto& [k, v] : next) layer.push_back(v);
  }
  return roots;
}

}  // namespace

void validate(const CartanDatum& d) {
  auto fail = [&](const std::string& why) { throw Error("invalid_cartan", "invalid Cartan matrix for " + d.label() + ": " + why); };
  if (d.rank < 1) fail("rank must be positive");
  if (static_cast<int>(d.matrix.size()) != d.rank) fail("matrix has wrong number of rows");
  for (int i = 0; i < d.rank; ++i) {
    if (static_cast<int>(d.matrix[i].size()) != d.rank) fail("row " + std::to_string(i + 1) + " has wrong length");
    if (d.matrix[i][i] != 2) fail("diagonal entry " + std::to_string(i + 1) + " is not 2");
    for (int j = 0; j < d.rank; ++j) {
      if (i == j) continue;
      const int a = d.matrix[i][j];
      if (a > 0 || a < -3) fail("off-diagonal entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") = " + std::to_string(a) + " outside {0,-1,-2,-3}");
      if ((a == 0) != (d.matrix[j][i] == 0)) fail("zero pattern is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      if (a != 0 && a * d.matrix[j][i] > 3) fail("product of entries at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") exceeds 3");
    }
  }
  if (!simple_root_lengths(d)) fail("matrix is not symmetrisable or the diagram is disconnected");
  const int expected = positive_root_count(d.type, d.rank);
  const auto roots = generate_positive_roots(d, static_cast<std::size_t>(expected) + 1);
  if (!roots) fail("root system is infinite or larger than type " + d.label());
  if (static_cast<int>(roots->size()) != expected)
    fail("generates " + std::to_string(roots->size()) + " positive roots, type " + d.label() + " has " + std::to_string(expected));
}

bool Root::positive() const {
  return std::any_of(coords.begin(), coords.end(), [](int c) { return c > 0; });
}

int Root::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

Root Root::operator-() const {
  Root r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

Root operator+(const Root& a, const Root& b) {
  Root r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

Root operator-(const Root& a, const Root& b) { return a + (-b); }

RootSystem::RootSystem(CartanDatum datum) : datum_(std::move(datum)) {
  validate(datum_);
  const int n = datum_.rank;
  positive_ = *generate_positive_roots(datum_, static_cast<std::size_t>(positive_root_count(datum_.type, n)) + 1);
  std::stable_sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.coords > b.coords;
  });
  const int N = num_positive();
  for (int k = 0; k < N; ++k) {
    index_.emplace(positive_[k].coords, k);
    index_.emplace((-positive_[k]).coords, N + k);
  }
  simple_ids_.resize(n);
  for (int i = 0; i < n; ++i) {
    IntVec e(n, 0);
    e[i] = 1;
    simple_ids_[i] = index_.at(e);
  }
  const IntVec len = *simple_root_lengths(datum_);
  gram_.assign(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) gram_[i][j] = datum_.matrix[i][j] * len[i] / 2;
}

Root RootSystem::root(int id) const {
  const int N = num_positive();
  if (id < 0 || id >= 2 * N) throw Error("invalid_root", "root id out of range: " + std::to_string(id));
  return id < N ? positive_[id] : -positive_[id - N];
}

std::optional<int> RootSystem::find(const Root& r) const {
  auto it = index_.find(r.coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RootSystem::inner(const Root& a, const Root& b) const {
  int s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += a.coords[i] * b.coords[j] * gram_[i][j];
  return s;
}

int RootSystem::pairing_with_coroot(const Root& a, int i) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += a.coords[j] * datum_.matrix[i][j];
  return s;
}

IntVec RootSystem::coroot_coords(const Root& alpha) const {
  const int len = norm(alpha);
  IntVec c(rank());
  for (int i = 0; i < rank(); ++i) {
    const int num = alpha.coords[i] * gram_[i][i];
    if (num % len != 0) throw Error("invalid_root", "coroot is not integral for " + format_root(alpha));
    c[i] = num / len;
  }
  return c;
}

int RootSystem::root_string_bound(const Root& alpha, const Root& beta) const {
  if (!is_root(alpha) || !is_root(beta)) throw Error("invalid_root", "root_string_bound needs two roots");
  if (alpha == beta || alpha == -beta)
    throw Error("degenerate_string", "root string of " + format_root(beta) + " through " + format_root(alpha) + " is degenerate (alpha = +-beta)");
  int q = 0;
  Root cur = beta - alpha;
  while (is_root(cur)) {
    ++q;
    cur = cur - alpha;
  }
  return q + 1;
}

Root RootSystem::reflect(int i, const Root& v) const {
  if (i < 0 || i >= rank()) throw Error("invalid_index", "simple index out of range");
  Root r = v;
  r.coords[i] -= pairing_with_coroot(v, i);
  return r;
}

IntVec RootSystem::simple_root_as_weight(int i) const {
  IntVec w(rank());
  for (int j = 0; j < rank(); ++j) w[j] = datum_.matrix[j][i];
  return w;
}

IntVec RootSystem::reflect_weight(int i, const IntVec& lambda) const {
  if (i < 0 || i >= rank()) throw Error("invalid_index", "simple index out of range");
  IntVec out = lambda;
  const IntVec a = simple_root_as_weight(i);
  for (int j = 0; j < rank(); ++j) out[j] -= lambda[i] * a[j];
  return out;
}

std::string format_root(const Root& r) {
  std::ostringstream os;
  const bool neg = !r.positive();
  bool first = true;
  for (std::size_t i = 0; i < r.coords.size(); ++i) {
    int c = neg ? -r.coords[i] : r.coords[i];
    if (c == 0) continue;
    if (neg) os << '-';
    else if (!first) os << '+';
    if (c != 1) os << c;
    os << 'a' << (i + 1);
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace modlie
