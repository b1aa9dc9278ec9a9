#include "ncnn/roots.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace ncnn {

namespace {

Root unit(int n, int j, int v = 1) {
  Root r;
  r.coords.assign(n, 0);
  r.coords[j - 1] = v;
  return r;
}

Root diff(int n, int j, int i) {  // e_j - e_i, 1-based
  Root r;
  r.coords.assign(n, 0);
  r.coords[j - 1] += 1;
  r.coords[i - 1] -= 1;
  return r;
}

Root sum(int n, int j, int i) {  // e_j + e_i
  Root r;
  r.coords.assign(n, 0);
  r.coords[j - 1] += 1;
  r.coords[i - 1] += 1;
  return r;
}

}  // namespace

std::vector<Root> simple_roots(const GroupFamily& g) {
  const int r = g.rank;
  const int n = g.ambient_dim();
  std::vector<Root> delta;
  switch (g.family) {
    case Family::A:
      for (int k = 1; k <= r; ++k) delta.push_back(diff(n, k + 1, k));
      break;
    case Family::B:
      delta.push_back(unit(n, 1));
      for (int k = 2; k <= r; ++k) delta.push_back(diff(n, k, k - 1));
      break;
    case Family::C:
      delta.push_back(unit(n, 1, 2));
      for (int k = 2; k <= r; ++k) delta.push_back(diff(n, k, k - 1));
      break;
    case Family::D:
      delta.push_back(sum(n, 1, 2));
      for (int k = 2; k <= r; ++k) delta.push_back(diff(n, k, k - 1));
      break;
  }
  return delta;
}

// Coefficients of v in the simple basis, doubled so that the half-integer
// cases (C and D) stay integral.  Returns false if v is not in the span.
static bool simple_coeffs_x2(const GroupFamily& g, const std::vector<int>& v,
                             std::vector<long long>* out) {
  const int n = g.ambient_dim();
  const int r = g.rank;
  std::vector<long long> c(r, 0);
  long long total = std::accumulate(v.begin(), v.end(), 0LL);
  switch (g.family) {
    case Family::A: {
      // v = sum c_k (e_{k+1} - e_k): c_k = -(v_1 + ... + v_k), and the span
      // is the sum-zero hyperplane.
      if (total != 0) return false;
      long long pre = 0;
      for (int k = 1; k <= r; ++k) {
        pre += v[k - 1];
        c[k - 1] = -2 * pre;
      }
      break;
    }
    case Family::B: {
      // delta_1 = e_1, delta_k = e_k - e_{k-1}: c_k = v_k + ... + v_n.
      long long suf = 0;
      for (int k = n; k >= 2; --k) {
        suf += v[k - 1];
        c[k - 1] = 2 * suf;
      }
      c[0] = 2 * total;
      break;
    }
    case Family::C: {
      long long suf = 0;
      for (int k = n; k >= 2; --k) {
        suf += v[k - 1];
        c[k - 1] = 2 * suf;
      }
      c[0] = total;  // delta_1 = 2e_1, so c_1 = (sum v)/2
      break;
    }
    case Family::D: {
      long long suf = 0;
      for (int k = n; k >= 3; --k) {
        suf += v[k - 1];
        c[k - 1] = 2 * suf;
      }
      long long tail = suf + v[1];  // v_2 + ... + v_n
      c[0] = v[0] + tail;           // doubled (v_1 + tail)/2
      c[1] = tail - v[0];
      break;
    }
  }
  *out = std::move(c);
  return true;
}

std::vector<Root> positive_roots(const GroupFamily& g) {
  const int n = g.ambient_dim();
  std::vector<Root> phi;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      phi.push_back(diff(n, j, i));
      if (g.family != Family::A) phi.push_back(sum(n, j, i));
    }
    if (g.family == Family::B) phi.push_back(unit(n, i));
    if (g.family == Family::C) phi.push_back(unit(n, i, 2));
  }
  std::sort(phi.begin(), phi.end(), [&](const Root& a, const Root& b) {
    int ha = root_height(g, a), hb = root_height(g, b);
    if (ha != hb) return ha < hb;
    return a.coords < b.coords;
  });
  return phi;
}

bool is_positive_root(const GroupFamily& g, const Root& r) {
  const int n = g.ambient_dim();
  if (static_cast<int>(r.coords.size()) != n) return false;
  int lo = 0, hi = 0, nz = 0;
  for (int t = 1; t <= n; ++t) {
    if (r.coords[t - 1] == 0) continue;
    ++nz;
    if (nz == 1) lo = t; else hi = t;
  }
  if (nz == 1) {
    int v = r.coords[lo - 1];
    if (g.family == Family::B) return v == 1;
    if (g.family == Family::C) return v == 2;
    return false;
  }
  if (nz == 2) {
    int vl = r.coords[lo - 1], vh = r.coords[hi - 1];
    if (vh != 1 || std::abs(vl) != 1) return false;
    return vl == -1 || g.family != Family::A;
  }
  return false;
}

int root_height(const GroupFamily& g, const Root& r) {
  std::vector<long long> c;
  if (!simple_coeffs_x2(g, r.coords, &c))
    throw NonRootArgument("vector not in the root span");
  long long s = std::accumulate(c.begin(), c.end(), 0LL);
  return static_cast<int>(s / 2);
}

bool root_leq(const GroupFamily& g, const Root& alpha, const Root& beta) {
  if (!is_positive_root(g, alpha) || !is_positive_root(g, beta))
    throw NonRootArgument("root_leq arguments must be positive roots");
  const int n = g.ambient_dim();
  std::vector<int> v(n);
  for (int t = 0; t < n; ++t) v[t] = beta.coords[t] - alpha.coords[t];
  std::vector<long long> c;
  if (!simple_coeffs_x2(g, v, &c)) return false;
  return std::all_of(c.begin(), c.end(), [](long long x) { return x >= 0; });
}

std::pair<int, int> root_endpoints(const GroupFamily& g, const Root& alpha) {
  if (!is_positive_root(g, alpha))
    throw NonRootArgument("root_endpoints argument must be a positive root");
  int lo = 0, hi = 0;  // indices with nonzero coordinate
  for (size_t t = 0; t < alpha.coords.size(); ++t) {
    if (alpha.coords[t] != 0) (lo == 0 ? lo : hi) = static_cast<int>(t) + 1;
  }
  if (hi == 0) {
    int v = alpha.coords[lo - 1];
    if (v == 1) return {0, lo};     // e_j = e_j - e_0   (B)
    return {-lo, lo};               // 2e_j = e_j - e_{-j}   (C)
  }
  // two nonzero coordinates, |value| 1 each; hi carries +1 (positive root)
  if (alpha.coords[lo - 1] == -1) return {lo, hi};   // e_j - e_i
  return {-lo, hi};                                  // e_j + e_i = e_j - e_{-i}
}

Root root_from_endpoints(const GroupFamily& g, int i, int j) {
  const int n = g.ambient_dim();
  Root r;
  r.coords.assign(n, 0);
  if (j > 0) r.coords[j - 1] += 1;
  if (j < 0) r.coords[-j - 1] -= 1;
  if (i > 0) r.coords[i - 1] -= 1;
  if (i < 0) r.coords[-i - 1] += 1;
  if (!is_positive_root(g, r))
    throw NonRootArgument("endpoints do not name a positive root");
  return r;
}

void check_antichain(const GroupFamily& g, const Antichain& a) {
  for (size_t s = 0; s < a.size(); ++s)
    for (size_t t = s + 1; t < a.size(); ++t)
      if (root_leq(g, a[s], a[t]) || root_leq(g, a[t], a[s]))
        throw NotAntichain("comparable pair in antichain");
}

void for_each_antichain(const GroupFamily& g,
                        const std::function<void(const Antichain&)>& fn) {
  const auto phi = positive_roots(g);
  const int m = static_cast<int>(phi.size());
  // comparability matrix
  std::vector<std::vector<char>> cmp(m, std::vector<char>(m, 0));
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t)
      cmp[s][t] = (s != t && (root_leq(g, phi[s], phi[t]) ||
                              root_leq(g, phi[t], phi[s])));
  Antichain cur;
  std::vector<int> idx;
  std::function<void(int)> dfs = [&](int from) {
    fn(cur);
    for (int t = from; t < m; ++t) {
      bool ok = true;
      for (int u : idx)
        if (cmp[u][t]) { ok = false; break; }
      if (!ok) continue;
      idx.push_back(t);
      cur.push_back(phi[t]);
      dfs(t + 1);
      cur.pop_back();
      idx.pop_back();
    }
  };
  dfs(0);
}

std::vector<Antichain> enumerate_antichains(const GroupFamily& g) {
  std::vector<Antichain> out;
  for_each_antichain(g, [&](const Antichain& a) { out.push_back(a); });
  return out;
}

long long count_antichains(const GroupFamily& g) {
  long long n = 0;
  for_each_antichain(g, [&](const Antichain&) { ++n; });
  return n;
}

std::vector<int> degrees(const GroupFamily& g) {
  std::vector<int> d;
  switch (g.family) {
    case Family::A:
      for (int k = 2; k <= g.rank + 1; ++k) d.push_back(k);
      break;
    case Family::B:
    case Family::C:
      for (int k = 1; k <= g.rank; ++k) d.push_back(2 * k);
      break;
    case Family::D:
      for (int k = 1; k <= g.rank - 1; ++k) d.push_back(2 * k);
      d.push_back(g.rank);
      break;
  }
  return d;
}

int coxeter_number(const GroupFamily& g) {
  switch (g.family) {
    case Family::A: return g.rank + 1;
    case Family::B:
    case Family::C: return 2 * g.rank;
    case Family::D: return 2 * g.rank - 2;
  }
  return 0;
}

long long coxeter_catalan_number(const GroupFamily& g) {
  const int h = coxeter_number(g);
  long long num = 1, den = 1;
  for (int d : degrees(g)) {
    num *= h + d;
    den *= d;
    long long q = std::gcd(num, den);
    num /= q;
    den /= q;
  }
  if (den != 1) throw InternalContradiction("catalan product not integral");
  return num;
}

}  // namespace ncnn
