#include "ncnn/signed_perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "ncnn/errors.hpp"
#include "ncnn/parallel.hpp"

namespace ncnn {

SignedPermutation::SignedPermutation(int n) : img_(n) {
  std::iota(img_.begin(), img_.end(), 1);
}

SignedPermutation SignedPermutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n + 1, 0);
  for (int v : images) {
    int a = std::abs(v);
    if (a < 1 || a > n || seen[a])
      throw MembershipError("images do not define a signed permutation");
    seen[a] = 1;
  }
  SignedPermutation w;
  w.img_ = std::move(images);
  return w;
}

SignedPermutation SignedPermutation::after(const SignedPermutation& v) const {
  SignedPermutation out;
  out.img_.resize(img_.size());
  for (int i = 1; i <= size(); ++i) out.img_[i - 1] = apply(v.apply(i));
  return out;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation out;
  out.img_.resize(img_.size());
  for (int i = 1; i <= size(); ++i) {
    int v = img_[i - 1];
    out.img_[std::abs(v) - 1] = v > 0 ? i : -i;
  }
  return out;
}

bool SignedPermutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (img_[i - 1] != i) return false;
  return true;
}

int SignedPermutation::sign_changes() const {
  return static_cast<int>(
      std::count_if(img_.begin(), img_.end(), [](int v) { return v < 0; }));
}

std::uint64_t SignedPermutation::encode() const {
  std::uint64_t code = 0;
  for (int v : img_) {
    std::uint64_t digit = (std::abs(v) - 1) * 2 + (v < 0 ? 1 : 0);
    code = code * 2 * img_.size() + digit;
  }
  return code;
}

std::vector<std::vector<int>> SignedPermutation::orbits() const {
  const int n = size();
  std::vector<char> visited(2 * n + 1, 0);  // index e+n
  auto idx = [n](int e) { return e + n; };
  std::vector<std::vector<int>> out;
  for (int a = 1; a <= n; ++a) {
    for (int e0 : {a, -a}) {
      if (visited[idx(e0)]) continue;
      std::vector<int> orb;
      int e = e0;
      do {
        visited[idx(e)] = 1;
        orb.push_back(e);
        e = apply(e);
      } while (e != e0);
      out.push_back(std::move(orb));
    }
  }
  return out;
}

bool in_family(const GroupFamily& g, const SignedPermutation& w) {
  if (w.size() != g.ambient_dim()) return false;
  switch (g.family) {
    case Family::A: return w.sign_changes() == 0;
    case Family::B:
    case Family::C: return true;
    case Family::D: return w.sign_changes() % 2 == 0;
  }
  return false;
}

void check_membership(const GroupFamily& g, const SignedPermutation& w) {
  if (!in_family(g, w))
    throw MembershipError("element not in " + g.name());
}

SignedPermutation reflection_of_root(const GroupFamily& g, const Root& r) {
  auto [i, j] = root_endpoints(g, r);
  const int n = g.ambient_dim();
  SignedPermutation w(n);
  std::vector<int> img = w.images();
  if (i == 0) {
    img[j - 1] = -j;                       // e_j: sign change
  } else if (i < 0 && -i == j) {
    img[j - 1] = -j;                       // 2e_j: sign change
  } else if (i > 0) {
    img[i - 1] = j;                        // e_j - e_i: (i j)(-i -j)
    img[j - 1] = i;
  } else {
    img[-i - 1] = -j;                      // e_j + e_i: (i -j)(-i j)
    img[j - 1] = i;
  }
  return SignedPermutation::from_images(img);
}

std::vector<std::pair<Root, SignedPermutation>> reflections(
    const GroupFamily& g) {
  std::vector<std::pair<Root, SignedPermutation>> out;
  for (const Root& r : positive_roots(g))
    out.emplace_back(r, reflection_of_root(g, r));
  return out;
}

SignedPermutation standard_coxeter_element(const GroupFamily& g) {
  const int n = g.ambient_dim();
  std::vector<int> img(n);
  switch (g.family) {
    case Family::A:
      for (int i = 1; i < n; ++i) img[i - 1] = i + 1;
      img[n - 1] = 1;
      break;
    case Family::B:
    case Family::C:
      for (int i = 1; i < n; ++i) img[i - 1] = i + 1;
      img[n - 1] = -1;
      break;
    case Family::D:
      img[0] = -1;
      for (int i = 2; i < n; ++i) img[i - 1] = i + 1;
      img[n - 1] = -2;
      break;
  }
  return SignedPermutation::from_images(img);
}

namespace {

// Position cycles of |w| with their sign products; each cycle reported from
// its least position.
struct Cycle {
  std::vector<int> positions;
  bool balanced;
};

std::vector<Cycle> position_cycles(const SignedPermutation& w) {
  const int n = w.size();
  std::vector<char> visited(n + 1, 0);
  std::vector<Cycle> out;
  for (int s = 1; s <= n; ++s) {
    if (visited[s]) continue;
    Cycle c;
    int sign = 1, i = s;
    do {
      visited[i] = 1;
      c.positions.push_back(i);
      int v = w.apply(i);
      if (v < 0) sign = -sign;
      i = std::abs(v);
    } while (i != s);
    c.balanced = sign > 0;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

FixedSpaceDescription fixed_space(const GroupFamily& g,
                                  const SignedPermutation& w) {
  check_membership(g, w);
  const int n = w.size();
  FixedSpaceDescription fs;
  for (const Cycle& c : position_cycles(w)) {
    if (!c.balanced) {
      for (int p : c.positions) fs.zeroed.push_back(p);
      continue;
    }
    // signed orbit through +least position; v_{|w(i)|} = sgn(w(i)) v_i
    std::vector<int> v(n, 0);
    int e = c.positions.front();  // least, positive
    bool has_negative = false;
    do {
      v[std::abs(e) - 1] = e > 0 ? 1 : -1;
      if (e < 0) has_negative = true;
      e = w.apply(e);
    } while (std::abs(e) != c.positions.front());
    if (has_negative)  // switching pair: normalise first nonzero to -1
      for (int& x : v) x = -x;
    fs.basis.push_back(std::move(v));
  }
  std::sort(fs.zeroed.begin(), fs.zeroed.end());
  // basis already ordered by least absolute value (cycles found ascending)
  return fs;
}

int absolute_length(const GroupFamily& g, const SignedPermutation& w) {
  check_membership(g, w);
  int balanced = 0;
  for (const Cycle& c : position_cycles(w))
    if (c.balanced) ++balanced;
  return w.size() - balanced;
}

bool absolute_leq(const GroupFamily& g, const SignedPermutation& w,
                  const SignedPermutation& x) {
  return absolute_length(g, x) ==
         absolute_length(g, w) +
             absolute_length(g, w.inverse().after(x));
}

void for_each_group_element(
    const GroupFamily& g,
    const std::function<void(const SignedPermutation&)>& fn) {
  const int n = g.ambient_dim();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    if (g.family == Family::A) {
      fn(SignedPermutation::from_images(perm));
      continue;
    }
    for (int smask = 0; smask < (1 << n); ++smask) {
      if (g.family == Family::D && __builtin_popcount(smask) % 2 != 0) continue;
      std::vector<int> img(perm);
      for (int i = 0; i < n; ++i)
        if ((smask >> i) & 1) img[i] = -img[i];
      fn(SignedPermutation::from_images(img));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<SignedPermutation> enumerate_group(const GroupFamily& g) {
  std::vector<SignedPermutation> out;
  out.reserve(group_order(g));
  for_each_group_element(g, [&](const SignedPermutation& w) {
    out.push_back(w);
  });
  return out;
}

long long group_order(const GroupFamily& g) {
  long long f = 1;
  const int n = g.ambient_dim();
  for (int i = 2; i <= n; ++i) f *= i;
  if (g.family == Family::B || g.family == Family::C) f <<= n;
  if (g.family == Family::D) f <<= (n - 1);
  return f;
}

std::vector<SignedPermutation> uniform_noncrossing(const GroupFamily& g,
                                                   int jobs) {
  const SignedPermutation c = standard_coxeter_element(g);
  const int lc = absolute_length(g, c);
  const auto all = enumerate_group(g);
  std::vector<char> keep(all.size(), 0);
  parallel_for(static_cast<long long>(all.size()), jobs, [&](long long t) {
    const SignedPermutation& w = all[t];
    keep[t] = absolute_length(g, w) +
                  absolute_length(g, w.inverse().after(c)) ==
              lc;
  });
  std::vector<SignedPermutation> out;
  for (size_t t = 0; t < all.size(); ++t)
    if (keep[t]) out.push_back(all[t]);
  return out;
}

ClassicalPartition partition_of_element(const GroupFamily& g,
                                        const SignedPermutation& w) {
  check_membership(g, w);
  const int n = w.size();
  if (g.family == Family::A) {
    std::vector<std::vector<int>> blocks;
    for (const auto& orb : w.orbits())
      if (orb.front() > 0) blocks.push_back(orb);
    return ClassicalPartition::from_positive_partition(n, std::move(blocks));
  }
  std::vector<std::vector<int>> blocks;
  std::vector<int> zero;
  for (const auto& orb : w.orbits()) {
    bool self_negative = false;
    for (int e : orb)
      if (std::find(orb.begin(), orb.end(), -e) != orb.end()) {
        self_negative = true;
        break;
      }
    if (self_negative)
      zero.insert(zero.end(), orb.begin(), orb.end());
    else
      blocks.push_back(orb);
  }
  return ClassicalPartition::make(n, std::move(blocks), std::move(zero));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int m) : parent(m) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ClassicalPartition partition_of_antichain(const GroupFamily& g,
                                          const Antichain& a) {
  check_antichain(g, a);
  const int n = g.ambient_dim();
  UnionFind uf(2 * n + 1);  // node e+n, with 0 at index n
  auto idx = [n](int e) { return e + n; };
  for (const Root& r : a) {
    auto [i, j] = root_endpoints(g, r);
    uf.unite(idx(i), idx(j));
    uf.unite(idx(-i), idx(-j));
  }
  std::vector<std::vector<int>> comps(2 * n + 1);
  for (int e = -n; e <= n; ++e)
    if (e != 0) comps[uf.find(idx(e))].push_back(e);

  std::vector<std::vector<int>> blocks;
  std::vector<int> zero;
  int zero_root = uf.find(idx(0));
  for (int c = 0; c <= 2 * n; ++c) {
    if (comps[c].empty()) continue;
    bool self_negative = c == zero_root;
    for (int e : comps[c])
      if (std::find(comps[c].begin(), comps[c].end(), -e) != comps[c].end()) {
        self_negative = true;
        break;
      }
    if (self_negative)
      zero.insert(zero.end(), comps[c].begin(), comps[c].end());
    else
      blocks.push_back(comps[c]);
  }
  if (g.family == Family::A) {
    // blocks never mix signs in type A; keep the positive half
    std::vector<std::vector<int>> pos;
    for (auto& b : blocks)
      if (b.front() > 0) pos.push_back(b);
    return ClassicalPartition::from_positive_partition(n, std::move(pos));
  }
  return ClassicalPartition::make(n, std::move(blocks), std::move(zero));
}

FixedSpaceDescription fix_of_antichain(const GroupFamily& g,
                                       const Antichain& a) {
  check_antichain(g, a);
  SignedPermutation w(g.ambient_dim());
  for (const Root& r : a) w = w.after(reflection_of_root(g, r));
  return fixed_space(g, w);
}

}  // namespace ncnn
