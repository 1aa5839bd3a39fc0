#include "oracle.hpp"

#include <bit>
#include <stdexcept>

namespace oracle {

namespace {

std::vector<int> letters(std::uint32_t w) {
  std::vector<int> out;
  for (int i = 0; i < 32; ++i)
    if (w >> i & 1u) out.push_back(i);
  return out;
}

// Sign of the permutation sorting `seq` (distinct entries).
int sort_sign(std::vector<int> seq) {
  int s = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) s = -s;
  return s;
}

C det(Mat m) {
  const std::size_t n = m.size();
  C result(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].zero()) ++piv;
    if (piv == n) return C(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      result = result * C(-1);
    }
    result = result * m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].zero()) continue;
      const C factor = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] = m[r][k] - factor * m[c][k];
    }
  }
  return result;
}

Mat inverse(const Mat& m) {
  const std::size_t n = m.size();
  Mat inv(n, std::vector<C>(n));
  // column j of the inverse by Cramer's rule
  const C dm = det(m);
  if (dm.zero()) throw std::runtime_error("singular matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Mat minor = m;
      for (std::size_t r = 0; r < n; ++r) minor[r][i] = C(r == j ? 1 : 0);
      inv[i][j] = det(minor) / dm;
    }
  return inv;
}

}  // namespace

Frame frame_from_equations(int n, const std::vector<Vec>& dphi) {
  const int m = 2 * n;
  Frame f;
  f.n = n;
  f.gamma.assign(m, std::vector<std::vector<C>>(m, std::vector<C>(m)));
  for (int k = 0; k < n; ++k)
    for (const auto& [w, c] : dphi[k]) {
      const auto ab = letters(w);
      // conjugate equation: letters swap halves, coefficient conjugates
      std::vector<int> swapped;
      for (int a : ab) swapped.push_back(a < n ? a + n : a - n);
      const int s = sort_sign(swapped);
      const int a = ab[0], b = ab[1];
      f.gamma[k][a][b] = f.gamma[k][a][b] - c;
      f.gamma[k][b][a] = f.gamma[k][b][a] + c;
      int ca = std::min(swapped[0], swapped[1]), cb = std::max(swapped[0], swapped[1]);
      const C cc = s > 0 ? c.conj() : C(0) - c.conj();
      f.gamma[n + k][ca][cb] = f.gamma[n + k][ca][cb] - cc;
      f.gamma[n + k][cb][ca] = f.gamma[n + k][cb][ca] + cc;
    }
  return f;
}

Vec d(const Frame& f, std::uint32_t word) {
  const int m = 2 * f.n;
  const int k = std::popcount(word);
  const auto wl = letters(word);
  Vec out;
  for (std::uint32_t b = 0; b < (1u << m); ++b) {
    if (std::popcount(b) != k + 1) continue;
    const auto bl = letters(b);
    C value;
    for (int i = 0; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        std::vector<int> rest;
        for (int t = 0; t <= k; ++t)
          if (t != i && t != j) rest.push_back(bl[t]);
        for (int c = 0; c < m; ++c) {
          const C& g = f.gamma[c][bl[i]][bl[j]];
          if (g.zero()) continue;
          std::vector<int> args = {c};
          args.insert(args.end(), rest.begin(), rest.end());
          std::uint32_t mask = 0;
          bool repeated = false;
          for (int x : args) {
            if (mask >> x & 1u) repeated = true;
            mask |= 1u << x;
          }
          if (repeated || mask != word) continue;
          const C term = g * C(sort_sign(args));
          value = (i + j) % 2 ? value - term : value + term;
        }
      }
    if (!value.zero()) out[b] = value;
  }
  return out;
}

Vec d(const Frame& f, const Vec& v) {
  Vec out;
  for (const auto& [w, c] : v)
    for (const auto& [u, x] : d(f, w)) out[u] = out[u] + c * x;
  for (auto it = out.begin(); it != out.end();) it = it->second.zero() ? out.erase(it) : std::next(it);
  return out;
}

Vec bidegree_part(const Vec& v, int n, int p, int q) {
  const std::uint32_t hol = (1u << n) - 1;
  Vec out;
  for (const auto& [w, c] : v)
    if (std::popcount(w & hol) == p && std::popcount(w & ~hol) == q) out[w] = c;
  return out;
}

Vec star(int n, const Mat& h, const C& kappa, std::uint32_t word) {
  const int m = 2 * n;
  const std::uint32_t full = (1u << m) - 1;
  // dual pairing of generators: <phi^j, phi^k> = 2 (h^-1)_{kj}, conjugates likewise, mixed zero
  const Mat hinv = inverse(h);
  auto pair = [&](int a, int b) -> C {
    if ((a < n) != (b < n)) return C(0);
    if (a < n) return C(2) * hinv[b][a];
    return C(2) * hinv[a - n][b - n];
  };
  C vol = C(1);
  for (int i = 0; i < n; ++i) vol = vol * kappa;
  vol = vol * det(h);
  if ((n * (n - 1) / 2) % 2) vol = C(0) - vol;

  // conj(word) = s * wbar
  std::vector<int> bar;
  for (int a : letters(word)) bar.push_back(a < n ? a + n : a - n);
  const int s = sort_sign(bar);
  std::uint32_t wbar = 0;
  for (int a : bar) wbar |= 1u << a;
  const auto bl = letters(wbar);

  Vec out;
  for (std::uint32_t a = 0; a <= full; ++a) {
    if (std::popcount(a) != std::popcount(word)) continue;
    const auto al = letters(a);
    Mat gram(al.size(), std::vector<C>(al.size()));
    for (std::size_t i = 0; i < al.size(); ++i)
      for (std::size_t j = 0; j < al.size(); ++j) gram[i][j] = pair(al[i], bl[j]);
    C value = al.empty() ? C(1) : det(gram);
    if (value.zero()) continue;
    const std::uint32_t comp = full & ~a;
    std::vector<int> seq = al;
    for (int x : letters(comp)) seq.push_back(x);
    value = value * vol * C(s * sort_sign(seq));
    out[comp] = value;
  }
  return out;
}

std::size_t rank(Mat rows) {
  std::size_t r = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].zero()) continue;
      const C factor = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] = rows[i][k] - factor * rows[r][k];
    }
    ++r;
  }
  return r;
}

std::size_t harmonic_dimension(const Frame& f, const Mat& h, const C& kappa, int p, int q) {
  const int n = f.n;
  const std::uint32_t hol = (1u << n) - 1;
  std::vector<std::uint32_t> words;
  for (std::uint32_t w = 0; w < (1u << 2 * n); ++w)
    if (std::popcount(w & hol) == p && std::popcount(w & ~hol) == q) words.push_back(w);
  if (words.empty()) return 0;
  // row keys: (equation, word)
  std::map<std::pair<int, std::uint32_t>, std::vector<C>> rows;
  for (std::size_t j = 0; j < words.size(); ++j) {
    const Vec dbar = bidegree_part(d(f, words[j]), n, p, q + 1);
    const Vec del_star = bidegree_part(d(f, star(n, h, kappa, words[j])), n, n - q + 1, n - p);
    for (const auto& [eq, v] : {std::pair{0, dbar}, std::pair{1, del_star}})
      for (const auto& [w, c] : v) {
        auto& row = rows[{eq, w}];
        row.resize(words.size());
        row[j] = c;
      }
  }
  Mat m;
  for (auto& [key, row] : rows) m.push_back(std::move(row));
  return words.size() - rank(std::move(m));
}

}  // namespace oracle
